//! Classes of the rank loci `Sigma^r_{k,n}` (orbits of the A2 quiver
//! `C^k -> C^n`): the Gamma-shaped `tssm` expansion, the `D`-determinants,
//! the classes `Phi^s` by three formulas, and the sieve relating them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{arg, Error, Result};
use crate::genfun::tssm_many;
use crate::ringcore::{q, sum_fractions, Coeff, MultiPoly, TruncatedSeries, Var};
use crate::schurbasis::kernel::{stable_expand, AffineOp};
use crate::schurbasis::{apply_rho, partitions_bounded, partitions_up_to, schur_to_poly, Partition, SchurSeries};

fn check_dims(k: usize, n: usize) -> Result<()> {
    if k > n {
        return arg(format!("need k <= n, got k = {k}, n = {n}"));
    }
    Ok(())
}

fn rectangle(rows: usize, width: usize) -> Partition {
    Partition::new(vec![width as u32; rows]).expect("rectangle")
}

/// Partitions of weight at most `cap` containing the box `(r, r+l)` but not
/// `(r+1, r+l+1)`.
pub fn gamma_partitions(r: usize, l: usize, cap: u32) -> Vec<Partition> {
    let w = (r + l) as u32;
    partitions_up_to(cap)
        .into_iter()
        .filter(|p| (r == 0 || p.part(r) >= w) && p.part(r + 1) <= w)
        .collect()
}

/// An SSM class of `Sigma^r_{k,n}` in Schur form and after `rho^{k,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaClass {
    pub partitions: Vec<Partition>,
    pub schur: SchurSeries,
    pub value: TruncatedSeries,
}

/// `ssm(Sigma^r_{k,n}) = rho^{k,n}( sum tssm_lambda )` over the Gamma-shaped
/// partitions, `l = n - k`.
pub fn ssm_sigma_tssm(k: usize, n: usize, r: usize, cap: u32) -> Result<SigmaClass> {
    check_dims(k, n)?;
    if r > k {
        return arg(format!("r = {r} exceeds k = {k}"));
    }
    let partitions = gamma_partitions(r, n - k, cap);
    let mut schur = SchurSeries::new(cap);
    for t in tssm_many(&partitions, cap)? {
        schur.add_assign(&t.series);
    }
    let value = apply_rho(&schur, k, n, cap);
    Ok(SigmaClass { partitions, schur, value })
}

/// `[Sigma^r_{k,n}] = rho^{k,n}(Sc_{(r+l)^r})`.
pub fn fundamental_class_sigma(k: usize, n: usize, r: usize) -> Result<MultiPoly> {
    check_dims(k, n)?;
    if r > k {
        return arg(format!("r = {r} exceeds k = {k}"));
    }
    Ok(schur_to_poly(&rectangle(r, r + n - k), k, n))
}

/// `det( binom(mu_i + s - i + nu_j + s + l - j, mu_i + s - i) )_{i,j <= s}`,
/// by fraction-free Gaussian elimination.
pub fn d_determinant(mu: &Partition, nu: &Partition, s: usize, l: usize) -> Result<BigInt> {
    if mu.len() > s || nu.len() > s {
        return arg(format!("partitions {mu} and {nu} must have at most s = {s} parts"));
    }
    let mut m: Vec<Vec<BigInt>> = (1..=s)
        .map(|i| {
            let a = mu.part(i) as i64 + (s - i) as i64;
            (1..=s)
                .map(|j| {
                    let b = nu.part(j) as i64 + (s + l - j) as i64;
                    binomial(BigInt::from(a + b), BigInt::from(a))
                })
                .collect()
        })
        .collect();
    Ok(bareiss(&mut m))
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let size = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..size {
        let Some(p) = (c..size).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..size {
            for j in c + 1..size {
                let v = (&m[r][j] * &m[c][c] - &m[r][c] * &m[c][j]) / &prev;
                m[r][j] = v;
            }
        }
        prev = m[c][c].clone();
    }
    if size == 0 {
        return BigInt::one();
    }
    sign * &m[size - 1][size - 1]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhiMethod {
    Sss,
    Determinant,
    Localization,
}

impl PhiMethod {
    pub const ALL: [PhiMethod; 3] = [PhiMethod::Sss, PhiMethod::Determinant, PhiMethod::Localization];
}

impl fmt::Display for PhiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhiMethod::Sss => "sss",
            PhiMethod::Determinant => "det",
            PhiMethod::Localization => "loc",
        })
    }
}

impl FromStr for PhiMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sss" => Ok(PhiMethod::Sss),
            "det" | "determinant" => Ok(PhiMethod::Determinant),
            "loc" | "localization" => Ok(PhiMethod::Localization),
            other => arg(format!("unknown method `{other}` (expected sss, det or loc)")),
        }
    }
}

/// `Phi^s_{k,n}` through degree `cap`. `schur` is the Schur series before
/// `rho^{k,n}` for the methods that produce one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiClass {
    pub s: usize,
    pub k: usize,
    pub n: usize,
    pub cap: u32,
    pub method: PhiMethod,
    pub schur: Option<SchurSeries>,
    pub value: TruncatedSeries,
}

/// `Phi^s_{k,n}` for `0 <= s <= k <= n`; `Phi^0 = 1`.
pub fn phi_class(s: usize, k: usize, n: usize, cap: u32, method: PhiMethod) -> Result<PhiClass> {
    check_dims(k, n)?;
    if s > k {
        return arg(format!("s = {s} exceeds k = {k}"));
    }
    let l = n - k;
    let (schur, value) = match method {
        PhiMethod::Sss => {
            let sc = phi_schur_sss(s, l, cap)?;
            let v = apply_rho(&sc, k, n, cap);
            (Some(sc), v)
        }
        PhiMethod::Determinant => {
            let sc = phi_schur_det(s, l, cap)?;
            let v = apply_rho(&sc, k, n, cap);
            (Some(sc), v)
        }
        PhiMethod::Localization => (None, phi_localization(s, k, n, cap)?),
    };
    Ok(PhiClass { s, k, n, cap, method, schur, value })
}

/// `S_{z_1, z_2, ...}( prod_{i<=s} (z_i/(1+z_i))^{s+l} prod_{j>s} prod_{i<=s} (1+z_i-z_j)/(1+z_i) )`.
pub fn phi_schur_sss(s: usize, l: usize, cap: u32) -> Result<SchurSeries> {
    let prefix = vec![(s + l) as u32; s];
    let step = |n: usize| -> Vec<AffineOp> {
        if n <= s {
            (0..s + l).map(|_| AffineOp::Div(vec![(n, 1)])).collect()
        } else {
            let mut ops: Vec<AffineOp> = (1..=s).map(|i| AffineOp::Mul(vec![(i, 1), (n, -1)])).collect();
            ops.extend((1..=s).map(|i| AffineOp::Div(vec![(i, 1)])));
            ops
        }
    };
    Ok(stable_expand(&prefix, cap, s.max(1), cap as usize + s + 8, &step)?.series)
}

/// `sum_{l(mu), l(nu) <= s} (-1)^{|mu|+|nu|} D^{s,s+l}_{mu,nu} Sc_{(s+l)^s + mu, nu^T}`.
pub fn phi_schur_det(s: usize, l: usize, cap: u32) -> Result<SchurSeries> {
    let mut out = SchurSeries::new(cap);
    let base = (s * (s + l)) as u32;
    if base > cap {
        return Ok(out);
    }
    let budget = cap - base;
    let bounded = |w: u32| partitions_bounded(w, w, s);
    for wm in 0..=budget {
        for mu in bounded(wm) {
            for wn in 0..=budget - wm {
                for nu in bounded(wn) {
                    let d = d_determinant(&mu, &nu, s, l)?;
                    if d.is_zero() {
                        continue;
                    }
                    let mut v: Vec<i64> = (1..=s).map(|i| (s + l) as i64 + mu.part(i) as i64).collect();
                    v.extend(nu.conjugate().parts().iter().map(|&x| x as i64));
                    let sign = if (wm + wn) % 2 == 0 { 1 } else { -1 };
                    out.add_symbol(&v, Coeff::from_integer(d * sign));
                }
            }
        }
    }
    Ok(out)
}

fn subsets(k: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for u in start..=k {
            cur.push(u);
            rec(u + 1, k, s, cur, out);
            cur.pop();
        }
    }
    rec(1, k, s, &mut cur, &mut out);
    out
}

/// `sum_{|I| = s} prod_{u in I, v} (beta_v - alpha_u)/(1 + beta_v - alpha_u)
/// prod_{u in I, w notin I} (1 + alpha_w - alpha_u)/(alpha_w - alpha_u)`,
/// summed over a common denominator which must cancel.
fn phi_localization(s: usize, k: usize, n: usize, cap: u32) -> Result<TruncatedSeries> {
    let a = |u: usize| MultiPoly::var(Var::Alpha(u as u16));
    let b = |v: usize| MultiPoly::var(Var::Beta(v as u16));
    let work = cap + (k * k.saturating_sub(1) / 2) as u32;
    let terms: Vec<(MultiPoly, Vec<MultiPoly>)> = subsets(k, s)
        .par_iter()
        .map(|set| {
            let mut num = TruncatedSeries::one(work);
            let mut dens = Vec::new();
            for &u in set {
                for v in 1..=n {
                    num = num.mul_poly(&(&b(v) - &a(u))).div_one_plus(&(&b(v) - &a(u)));
                }
                for w in (1..=k).filter(|w| !set.contains(w)) {
                    num = num.mul_poly(&(&MultiPoly::one() + &(&a(w) - &a(u))));
                    dens.push(&a(w) - &a(u));
                }
            }
            (num.into_poly(), dens)
        })
        .collect();
    Ok(TruncatedSeries::from_poly(sum_fractions(&terms, Some(cap))?, cap))
}

/// Whether every Schur term `Sc_lambda` of the series has `lambda_{s+1} <= s`.
pub fn phi_support_ok(schur: &SchurSeries, s: usize) -> bool {
    schur.terms().all(|(p, c)| c.is_zero() || p.part(s + 1) as usize <= s)
}

fn binom(n: usize, r: usize) -> Coeff {
    Coeff::from_integer(binomial(BigInt::from(n), BigInt::from(r)))
}

fn signed_binom(s: usize, r: usize, n: usize, m: usize) -> Coeff {
    let c = binom(n, m);
    if (s - r) % 2 == 0 { c } else { -c }
}

fn phi_family(k: usize, n: usize, cap: u32, method: PhiMethod, from: usize) -> Result<HashMap<usize, TruncatedSeries>> {
    (from..=k)
        .into_par_iter()
        .map(|s| Ok((s, phi_class(s, k, n, cap, method)?.value)))
        .collect()
}

/// `ssm(Sigma^r) = sum_{s>=r} (-1)^{s-r} binom(s, r) Phi^s`.
pub fn ssm_sigma_sieve(k: usize, n: usize, r: usize, cap: u32, method: PhiMethod) -> Result<TruncatedSeries> {
    check_dims(k, n)?;
    if r > k {
        return arg(format!("r = {r} exceeds k = {k}"));
    }
    let phi = phi_family(k, n, cap, method, r)?;
    let mut out = TruncatedSeries::zero(cap);
    for s in r..=k {
        out = out.add(&phi[&s].scale(&signed_binom(s, r, s, r)));
    }
    Ok(out)
}

/// `ssm` of the closure of `Sigma^r`: `sum_{s>=r} (-1)^{s-r} binom(s-1, r-1) Phi^s`
/// for `r >= 1`, and `1` for `r = 0`.
pub fn ssm_sigma_closure_sieve(k: usize, n: usize, r: usize, cap: u32, method: PhiMethod) -> Result<TruncatedSeries> {
    check_dims(k, n)?;
    if r > k {
        return arg(format!("r = {r} exceeds k = {k}"));
    }
    if r == 0 {
        return Ok(TruncatedSeries::one(cap));
    }
    let phi = phi_family(k, n, cap, method, r)?;
    let mut out = TruncatedSeries::zero(cap);
    for s in r..=k {
        out = out.add(&phi[&s].scale(&signed_binom(s, r, s - 1, r - 1)));
    }
    Ok(out)
}

/// Outcome of the forward relations
/// `Phi^r = sum_{s>=r} binom(s,r) ssm(Sigma^s) = sum_{s>=r} binom(s-1,r-1) ssm(closure Sigma^s)`
/// and of additivity `ssm(closure Sigma^r) = sum_{s>=r} ssm(Sigma^s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveCheck {
    pub r: usize,
    pub forward_open: bool,
    pub forward_closure: bool,
    pub additivity: bool,
}

impl SieveCheck {
    pub fn passed(&self) -> bool {
        self.forward_open && self.forward_closure && self.additivity
    }
}

/// Checks the forward sieve relations for every `r`, with the open classes
/// taken from the Gamma-shaped route and `Phi` from `method`.
pub fn sieve_forward_checks(k: usize, n: usize, cap: u32, method: PhiMethod) -> Result<Vec<SieveCheck>> {
    check_dims(k, n)?;
    let phi = phi_family(k, n, cap, method, 0)?;
    let open: HashMap<usize, TruncatedSeries> = (0..=k)
        .into_par_iter()
        .map(|r| Ok((r, ssm_sigma_tssm(k, n, r, cap)?.value)))
        .collect::<Result<_>>()?;
    let closure: HashMap<usize, TruncatedSeries> = (0..=k)
        .map(|r| Ok((r, ssm_sigma_closure_sieve(k, n, r, cap, method)?)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for r in 0..=k {
        let mut via_open = TruncatedSeries::zero(cap);
        let mut via_closure = TruncatedSeries::zero(cap);
        let mut sum_open = TruncatedSeries::zero(cap);
        for s in r..=k {
            via_open = via_open.add(&open[&s].scale(&binom(s, r)));
            sum_open = sum_open.add(&open[&s]);
            if r >= 1 {
                via_closure = via_closure.add(&closure[&s].scale(&binom(s - 1, r - 1)));
            }
        }
        out.push(SieveCheck {
            r,
            forward_open: via_open == phi[&r],
            // With r = 0 the closure form is vacuous.
            forward_closure: r == 0 || via_closure == phi[&r],
            additivity: sum_open == closure[&r],
        });
    }
    Ok(out)
}

/// Whether `(binom(s, r))` times `((-1)^{s-r} binom(s, r))` is the identity
/// matrix of the given size.
pub fn pascal_inversion_check(size: usize) -> bool {
    (0..size).all(|s| {
        (0..size).all(|r| {
            let entry: Coeff = (r..=s).map(|t| binom(s, t) * signed_binom(t, r, t, r)).sum();
            entry == if s == r { q(1) } else { q(0) }
        })
    })
}

/// `Phi^s_{k+1,n+1}(alpha, t; beta, t) == Phi^s_{k,n}(alpha; beta)` through `cap`.
pub fn supersymmetry_check(s: usize, k: usize, n: usize, cap: u32, method: PhiMethod) -> Result<bool> {
    let big = phi_class(s, k + 1, n + 1, cap, method)?;
    let small = phi_class(s, k, n, cap, method)?;
    let t = Var::Z(1);
    let rename = HashMap::from([(Var::Alpha((k + 1) as u16), t), (Var::Beta((n + 1) as u16), t)]);
    let restricted = TruncatedSeries::from_poly(big.value.poly().rename(&rename), cap);
    Ok(restricted == small.value)
}

/// Whether all `D^{s,s+l}_{mu,nu}` with `|mu|, |nu| <= max_weight` are non-negative;
/// returns the first negative witness otherwise.
pub fn d_positivity(s: usize, l: usize, max_weight: u32) -> Result<Option<(Partition, Partition, BigInt)>> {
    let parts: Vec<Partition> = (0..=max_weight).flat_map(|w| partitions_bounded(w, w, s)).collect();
    for mu in &parts {
        for nu in &parts {
            let d = d_determinant(mu, nu, s, l)?;
            if d.is_negative() {
                return Ok(Some((mu.clone(), nu.clone(), d)));
            }
        }
    }
    Ok(None)
}
