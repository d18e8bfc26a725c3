//! Dense-key power-series kernel for the `S` operation.
//!
//! Series in `z_1..z_N` are stored degree by degree; a monomial is a `u128`
//! holding one 4-bit exponent per variable. Only multiplication and division
//! by affine forms `1 + sum kappa_i z_i` are needed, each a single in-place
//! sweep over the degree levels. Coefficients are integers: `i128` with
//! overflow detection first, `BigInt` if that overflows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use super::partition::{straighten, Partition, Straightened};
use super::series::SchurSeries;
use crate::error::{arg, internal, Result};

const BITS: u32 = 4;
pub(crate) const MAX_VARS: usize = (128 / BITS) as usize;
pub(crate) const MAX_KERNEL_CAP: u32 = (1 << BITS) - 1;

pub(crate) trait KCoeff: Clone + Send + Sync {
    fn zero() -> Self;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    /// `self += k * other`; `false` on overflow.
    fn add_mul(&mut self, other: &Self, k: i64) -> bool;
}

impl KCoeff for i128 {
    fn zero() -> Self {
        0
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_mul(&mut self, other: &Self, k: i64) -> bool {
        match other.checked_mul(k as i128).and_then(|p| self.checked_add(p)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl KCoeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_mul(&mut self, other: &Self, k: i64) -> bool {
        *self += other * k;
        true
    }
}

#[inline]
fn unit(i: usize) -> u128 {
    1u128 << (BITS * (i as u32 - 1))
}

/// Affine step applied by the stable driver.
#[derive(Clone, Debug)]
pub(crate) enum AffineOp {
    Mul(Vec<(usize, i64)>),
    Div(Vec<(usize, i64)>),
}

pub(crate) struct ZKernel<T> {
    cap: u32,
    levels: Vec<FxHashMap<u128, T>>,
    overflow: bool,
}

impl<T: KCoeff> ZKernel<T> {
    pub(crate) fn new(cap: u32) -> Self {
        let mut levels: Vec<FxHashMap<u128, T>> = (0..=cap).map(|_| FxHashMap::default()).collect();
        levels[0].insert(0, T::from_big(&BigInt::from(1)).expect("one fits every coefficient type"));
        ZKernel { cap, levels, overflow: false }
    }

    /// Kernel holding the given integer terms `(exponents, coefficient)`.
    /// Returns `None` if a coefficient does not fit `T`.
    pub(crate) fn from_terms(cap: u32, terms: &[(Vec<u32>, BigInt)]) -> Option<Self> {
        let mut levels: Vec<FxHashMap<u128, T>> = (0..=cap).map(|_| FxHashMap::default()).collect();
        for (exps, c) in terms {
            let d: u32 = exps.iter().sum();
            if d > cap {
                continue;
            }
            let key = exps
                .iter()
                .enumerate()
                .fold(0u128, |k, (i, &e)| k + unit(i + 1) * e as u128);
            levels[d as usize].insert(key, T::from_big(c)?);
        }
        Some(ZKernel { cap, levels, overflow: false })
    }

    pub(crate) fn overflowed(&self) -> bool {
        self.overflow
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    fn sweep(&mut self, kappa: &[(usize, i64)], d: usize, sign: i64) {
        let (lo, hi) = self.levels.split_at_mut(d);
        let src = &lo[d - 1];
        let dst = &mut hi[0];
        dst.reserve(src.len() * kappa.len() / 2);
        let mut ok = true;
        for (key, c) in src {
            for &(i, k) in kappa {
                let entry = dst.entry(key + unit(i)).or_insert_with(T::zero);
                ok &= entry.add_mul(c, sign * k);
            }
        }
        dst.retain(|_, c| !c.is_zero());
        if !ok {
            self.overflow = true;
        }
    }

    /// Multiplies by `1 + sum kappa_i z_i`.
    pub(crate) fn mul_affine(&mut self, kappa: &[(usize, i64)]) {
        for d in (1..=self.cap as usize).rev() {
            self.sweep(kappa, d, 1);
        }
    }

    /// Divides by `1 + sum kappa_i z_i`: `Q_d = A_d - (kappa.z) Q_{d-1}`.
    pub(crate) fn div_affine(&mut self, kappa: &[(usize, i64)]) {
        for d in 1..=self.cap as usize {
            self.sweep(kappa, d, -1);
        }
    }

    pub(crate) fn apply(&mut self, op: &AffineOp) {
        match op {
            AffineOp::Mul(k) => self.mul_affine(k),
            AffineOp::Div(k) => self.div_affine(k),
        }
    }

    /// Applies `S` to `z^prefix * self` over `nvars` variables and divides
    /// every coefficient by `denominator`.
    pub(crate) fn to_schur(
        &self,
        prefix: &[u32],
        nvars: usize,
        cap: u32,
        denominator: &BigInt,
    ) -> Option<SchurSeries> {
        let width = nvars.max(prefix.len());
        let mut acc: FxHashMap<Partition, T> = FxHashMap::default();
        let mut v = vec![0i64; width];
        let mask = (1u128 << BITS) - 1;
        for level in &self.levels {
            for (key, c) in level {
                let mut k = *key;
                for (i, slot) in v.iter_mut().enumerate() {
                    *slot = (k & mask) as i64 + prefix.get(i).copied().unwrap_or(0) as i64;
                    k >>= BITS;
                }
                if let Straightened::Term { sign, partition } = straighten(&v) {
                    let entry = acc.entry(partition).or_insert_with(T::zero);
                    if !entry.add_mul(c, sign as i64) {
                        return None;
                    }
                }
            }
        }
        let mut out = SchurSeries::new(cap);
        for (lambda, c) in acc {
            if !c.is_zero() {
                out.add_term(lambda, BigRational::new(c.to_big(), denominator.clone()));
            }
        }
        Some(out)
    }
}

pub(crate) fn check_limits(kernel_cap: u32, nvars: usize) -> Result<()> {
    if kernel_cap > MAX_KERNEL_CAP {
        return arg(format!(
            "degree cap {kernel_cap} beyond the prefactor exceeds the supported maximum {MAX_KERNEL_CAP}"
        ));
    }
    if nvars > MAX_VARS {
        return arg(format!("{nvars} variables exceed the supported maximum {MAX_VARS}"));
    }
    Ok(())
}

/// Result of the infinite-variable driver.
#[derive(Clone, Debug)]
pub(crate) struct StableRun {
    pub series: SchurSeries,
    pub vars_used: usize,
}

/// Evaluates `S_{z_1, z_2, ...}` of `z^prefix * prod_N step(N)` by adding one
/// variable at a time. Once `N >= min_n`, the truncated Schur series for `N`,
/// `N+1` and `N+2` variables must coincide; the value is then returned with
/// `vars_used = N`. Exceeding `max_n` variables is an internal-consistency
/// error.
pub(crate) fn stable_expand(
    prefix: &[u32],
    cap: u32,
    min_n: usize,
    max_n: usize,
    step: &(dyn Fn(usize) -> Vec<AffineOp> + Sync),
) -> Result<StableRun> {
    let pdeg: u32 = prefix.iter().sum();
    if pdeg > cap {
        return Ok(StableRun { series: SchurSeries::new(cap), vars_used: prefix.len() });
    }
    check_limits(cap - pdeg, 0)?;
    match run_stable::<i128>(prefix, cap, min_n, max_n, step) {
        Some(r) => r,
        None => run_stable::<BigInt>(prefix, cap, min_n, max_n, step)
            .expect("big integer kernel cannot overflow"),
    }
}

fn run_stable<T: KCoeff>(
    prefix: &[u32],
    cap: u32,
    min_n: usize,
    max_n: usize,
    step: &(dyn Fn(usize) -> Vec<AffineOp> + Sync),
) -> Option<Result<StableRun>> {
    let pdeg: u32 = prefix.iter().sum();
    let mut kernel = ZKernel::<T>::new(cap - pdeg);
    let one = BigInt::from(1);
    let mut history: Vec<(usize, SchurSeries)> = Vec::new();
    let min_n = min_n.max(1).max(prefix.len());
    for n in 1..=max_n {
        if n > MAX_VARS {
            return Some(arg(format!(
                "stabilization needs more than {MAX_VARS} variables at cap {cap}"
            )));
        }
        for op in step(n) {
            kernel.apply(&op);
        }
        if kernel.overflowed() {
            return None;
        }
        if n < min_n {
            continue;
        }
        let s = kernel.to_schur(prefix, n, cap, &one)?;
        history.push((n, s));
        let h = history.len();
        if h >= 3 && history[h - 1].1 == history[h - 2].1 && history[h - 2].1 == history[h - 3].1 {
            let (vars_used, series) = history.swap_remove(h - 3);
            return Some(Ok(StableRun { series, vars_used }));
        }
    }
    Some(internal(format!(
        "no stable value after {max_n} variables at cap {cap}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_then_div_is_identity() {
        let mut k = ZKernel::<i128>::new(6);
        k.mul_affine(&[(1, 1), (2, -1)]);
        k.mul_affine(&[(3, 2)]);
        assert_eq!(k.len(), 6);
        k.div_affine(&[(3, 2)]);
        k.div_affine(&[(1, 1), (2, -1)]);
        assert_eq!(k.len(), 1);
    }

    #[test]
    fn overflow_is_detected() {
        let mut k = ZKernel::<i128>::new(15);
        for _ in 0..40 {
            k.div_affine(&[(1, i64::MAX / 2)]);
        }
        assert!(k.overflowed());
    }
}
