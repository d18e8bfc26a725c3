//! Generating functions for CSM/SSM classes of matrix Schubert cells: the
//! expressions `F^csm_{lambda,n}`, `F^ssm_{lambda,n}`, the stable series
//! `tssm_lambda`, expansions over `Lambda(I)`, and identity/sign scans.

use num_traits::Signed;
use rayon::prelude::*;

use crate::cellgeom::{lambda_of_set, set_of_lambda, ColumnSet};
use crate::error::{arg, internal, Result};
use crate::ringcore::{product, Coeff, MultiPoly, TruncatedSeries};
use crate::schurbasis::kernel::{stable_expand, AffineOp};
use crate::schurbasis::{
    apply_rho, partitions_bounded, partitions_up_to, sss_expand, z, DenFactor, Partition,
    RationalSeriesExpr, SchurSeries,
};
use crate::weightfn::ClassKind;

/// The parameter `n`, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NParam {
    Finite(usize),
    Infinite,
}

fn padded(lambda: &[u32], k: usize) -> Result<Vec<i64>> {
    if lambda.len() > k {
        return arg(format!("lambda {lambda:?} has more than k = {k} entries"));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return arg(format!("lambda {lambda:?} is not weakly decreasing"));
    }
    let mut v: Vec<i64> = lambda.iter().map(|&x| x as i64).collect();
    v.resize(k, 0);
    Ok(v)
}

fn one_plus_z(i: usize) -> Result<DenFactor> {
    DenFactor::single(i, 1)
}

/// Exponents of `(1 + z_i)` in `F^csm` and the pairs `i < j` carrying
/// `(1 + z_i - z_j)`.
fn csm_shape(lam: &[i64], k: usize, n: usize) -> (Vec<u32>, Vec<(usize, usize)>) {
    let (k_, n_) = (k as i64, n as i64);
    let exps = (1..=k)
        .map(|i| (n_ - k_ - 1 - lam[i - 1] + i as i64).max(0) as u32)
        .collect();
    let pairs = (1..=k)
        .flat_map(|j| (1..j).map(move |i| (i, j)))
        .filter(|&(_, j)| lam[j - 1] - j as i64 <= n_ - k_ - 1)
        .collect();
    (exps, pairs)
}

fn monomial_and_pairs(lam: &[i64], pairs: &[(usize, usize)]) -> Vec<MultiPoly> {
    let mut factors: Vec<MultiPoly> = lam
        .iter()
        .enumerate()
        .map(|(i, &l)| z(i + 1).pow(l as u32))
        .collect();
    factors.extend(pairs.iter().map(|&(i, j)| &(&MultiPoly::one() + &z(i)) - &z(j)));
    factors
}

/// `F^csm_{lambda,n} = prod z_i^{lambda_i} prod (1+z_i)^{max(0, n-k-1-lambda_i+i)}
/// prod_{i<j, lambda_j - j <= n-k-1} (1 + z_i - z_j)`.
pub fn fcsm_expr(lambda: &[u32], k: usize, n: NParam) -> Result<RationalSeriesExpr> {
    let NParam::Finite(n) = n else {
        return arg("F^csm needs a finite n");
    };
    let lam = padded(lambda, k)?;
    let (exps, pairs) = csm_shape(&lam, k, n);
    let mut factors = monomial_and_pairs(&lam, &pairs);
    factors.extend(exps.iter().enumerate().map(|(i, &e)| (&MultiPoly::one() + &z(i + 1)).pow(e)));
    RationalSeriesExpr::new(k, product(&factors), vec![])
}

/// `F^ssm_{lambda,n} = F^csm_{lambda,n} / prod (1+z_i)^n`, and for `n = infinity`
/// `prod (z_i/(1+z_i))^{lambda_i} prod_j prod_{i<=j} (1+z_i-z_j)/(1+z_i)`.
pub fn fssm_expr(lambda: &[u32], k: usize, n: NParam) -> Result<RationalSeriesExpr> {
    let lam = padded(lambda, k)?;
    match n {
        NParam::Finite(n) => {
            let (exps, pairs) = csm_shape(&lam, k, n);
            let num = product(&monomial_and_pairs(&lam, &pairs));
            let dens = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| (n as u32) > e)
                .map(|(i, &e)| Ok((one_plus_z(i + 1)?, n as u32 - e)))
                .collect::<Result<_>>()?;
            RationalSeriesExpr::new(k, num, dens)
        }
        NParam::Infinite => {
            let pairs: Vec<(usize, usize)> =
                (1..=k).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
            let num = product(&monomial_and_pairs(&lam, &pairs));
            let dens = (1..=k)
                .map(|i| Ok((one_plus_z(i)?, lam[i - 1] as u32 + (k - i + 1) as u32)))
                .collect::<Result<_>>()?;
            RationalSeriesExpr::new(k, num, dens)
        }
    }
}

/// A class obtained from a generating function: the Schur series `S(F)` and
/// its image under `rho^{k,0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenfunClass {
    pub schur: SchurSeries,
    pub value: TruncatedSeries,
}

/// `rho^{k,0}(S(F))` for `F = F^csm_{lambda,n}` or `F^ssm_{lambda,n}`.
pub fn class_via_genfun(lambda: &[u32], k: usize, n: usize, kind: ClassKind, cap: u32) -> Result<GenfunClass> {
    set_of_lambda(lambda, k, n)?;
    let expr = match kind {
        ClassKind::Csm => fcsm_expr(lambda, k, NParam::Finite(n))?,
        ClassKind::Ssm => fssm_expr(lambda, k, NParam::Finite(n))?,
    };
    let schur = sss_expand(&expr, cap)?;
    let value = apply_rho(&schur, k, 0, cap);
    Ok(GenfunClass { schur, value })
}

/// The stable series `tssm_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TssmFunction {
    pub lambda: Partition,
    pub cap: u32,
    pub series: SchurSeries,
    /// Number of `z` variables at which the value stabilized.
    pub vars_used: usize,
}

/// `tssm_lambda = S_{z_1, z_2, ...}( prod (z_i/(1+z_i))^{lambda_i}
/// prod_j prod_{i<=j} (1+z_i-z_j)/(1+z_i) )` through weight `cap`.
pub fn tssm(lambda: &Partition, cap: u32) -> Result<TssmFunction> {
    let parts = lambda.parts().to_vec();
    let len = parts.len();
    let step = |n: usize| -> Vec<AffineOp> {
        let mut ops: Vec<AffineOp> = (1..n).map(|i| AffineOp::Mul(vec![(i, 1), (n, -1)])).collect();
        ops.extend((1..=n).map(|i| AffineOp::Div(vec![(i, 1)])));
        let extra = parts.get(n - 1).copied().unwrap_or(0);
        ops.extend((0..extra).map(|_| AffineOp::Div(vec![(n, 1)])));
        ops
    };
    let run = stable_expand(&parts, cap, len.max(1), cap as usize + len + 8, &step)?;
    if lambda.weight() <= cap {
        let low = run.series.lowest_weight();
        let lead = run.series.coeff(lambda);
        let lower_or_equal = run.series.homogeneous(lambda.weight());
        if low != Some(lambda.weight()) || lead != Coeff::from_integer(1.into()) || lower_or_equal.len() != 1 {
            return internal(format!("tssm_{} is not Sc_lambda plus higher terms", lambda.label()));
        }
    }
    Ok(TssmFunction { lambda: lambda.clone(), cap, series: run.series, vars_used: run.vars_used })
}

/// `tssm` for many partitions, evaluated concurrently; output in input order.
pub fn tssm_many(lambdas: &[Partition], cap: u32) -> Result<Vec<TssmFunction>> {
    lambdas.par_iter().map(|l| tssm(l, cap)).collect()
}

/// `Lambda(I)` truncated to weight `cap`: with `d = |I|` and `lambda = lambda(I)`,
/// the partitions `mu` with `mu_1 >= ... >= mu_{k-d} >= n-d` and `mu_a = lambda_a`
/// for `a > k-d`.
pub fn lambda_set(set: &ColumnSet, cap: u32) -> Vec<Partition> {
    let lam = lambda_of_set(set);
    let (k, n, d) = (set.k(), set.n(), set.rank());
    let r = k - d;
    let base: u32 = lam.iter().sum();
    if base > cap {
        return Vec::new();
    }
    let budget = cap - base;
    let mut out = Vec::new();
    for extra in 0..=budget {
        for t in partitions_bounded(extra, extra, r) {
            let mut mu = lam.clone();
            for a in 0..r {
                mu[a] = (n - d) as u32 + t.part(a + 1);
            }
            out.push(Partition::new(mu).expect("weakly decreasing by construction"));
        }
    }
    out.sort();
    out
}

/// `ssm_{beta=0}(Omega_I) = rho^{k,0}( sum_{mu in Lambda(I)} tssm_mu )` through `cap`.
pub fn ssm_orbit_tssm_expansion(set: &ColumnSet, cap: u32) -> Result<(Vec<Partition>, SchurSeries, TruncatedSeries)> {
    let mus = lambda_set(set, cap);
    let mut total = SchurSeries::new(cap);
    for t in tssm_many(&mus, cap)? {
        total.add_assign(&t.series);
    }
    let value = apply_rho(&total, set.k(), 0, cap);
    Ok((mus, total, value))
}

/// Whether `sum_{|lambda| <= cap} tssm_lambda = Sc_0` through weight `cap`.
pub fn check_sum_to_one(cap: u32) -> Result<bool> {
    let mut total = SchurSeries::new(cap);
    for t in tssm_many(&partitions_up_to(cap), cap)? {
        total.add_assign(&t.series);
    }
    Ok(total == SchurSeries::single(Partition::empty(), cap))
}

/// A coefficient violating the alternating-sign pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignViolation {
    pub lambda: Partition,
    pub mu: Partition,
    pub coeff: Coeff,
}

/// Sign scan of one `tssm_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaScan {
    pub lambda: Partition,
    pub terms_checked: usize,
    pub violations: Vec<SignViolation>,
}

/// Checks `(-1)^{|mu| - |lambda|} coeff(Sc_mu, tssm_lambda) >= 0`.
pub fn scan_lambda(lambda: &Partition, cap: u32) -> Result<LambdaScan> {
    let t = tssm(lambda, cap)?;
    let w = lambda.weight() as i64;
    let violations = t
        .series
        .terms()
        .filter(|(mu, c)| {
            let odd = (mu.weight() as i64 - w).rem_euclid(2) == 1;
            if odd { c.is_positive() } else { c.is_negative() }
        })
        .map(|(mu, c)| SignViolation { lambda: lambda.clone(), mu: mu.clone(), coeff: c.clone() })
        .collect();
    Ok(LambdaScan { lambda: lambda.clone(), terms_checked: t.series.len(), violations })
}

/// Sign scan over all `|lambda| <= max_weight`, sorted by `lambda`.
pub fn scan_alternating_signs(max_weight: u32, cap: u32) -> Result<Vec<LambdaScan>> {
    let lambdas = partitions_up_to(max_weight);
    lambdas.par_iter().map(|l| scan_lambda(l, cap)).collect()
}

/// Schur expansion `S(F^csm_{lambda,n})` (a finite sum).
pub fn csm_schur_expansion(lambda: &[u32], k: usize, n: usize) -> Result<SchurSeries> {
    let expr = fcsm_expr(lambda, k, NParam::Finite(n))?;
    let cap = match expr.numerator().degree() {
        crate::ringcore::Degree::Finite(d) => d,
        crate::ringcore::Degree::NegInfinity => 0,
    };
    sss_expand(&expr, cap)
}

/// One step of the raising-operator comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisingStep {
    pub t: u32,
    pub lambda: Vec<u32>,
    pub n: usize,
    pub expansion: SchurSeries,
    pub matches: bool,
}

/// Compares `S(F^csm)` at `(lambda + t(1^k), n + t)` with the base expansion
/// shifted by `t(1^k)`, for `t = 1..steps`.
pub fn raising_shift_steps(lambda: &[u32], k: usize, n_start: usize, steps: u32) -> Result<(SchurSeries, Vec<RaisingStep>)> {
    let first = lambda.first().copied().unwrap_or(0) as usize;
    if n_start < k + first {
        return arg(format!("n = {n_start} is below k + lambda_1 = {}", k + first));
    }
    let base = csm_schur_expansion(lambda, k, n_start)?;
    let mut out = Vec::new();
    for t in 1..=steps {
        let mut lam: Vec<u32> = lambda.to_vec();
        lam.resize(k, 0);
        let lam: Vec<u32> = lam.iter().map(|x| x + t).collect();
        let n = n_start + t as usize;
        let expansion = csm_schur_expansion(&lam, k, n)?;
        let mut shifted = SchurSeries::new(expansion.cap());
        for (mu, c) in base.terms() {
            shifted.add_term(mu.shift_first(k, t), c.clone());
        }
        let matches = shifted == expansion;
        out.push(RaisingStep { t, lambda: lam, n, expansion, matches });
    }
    Ok((base, out))
}

pub fn raising_shift_check(lambda: &[u32], k: usize, n_start: usize, steps: u32) -> Result<bool> {
    Ok(raising_shift_steps(lambda, k, n_start, steps)?.1.iter().all(|s| s.matches))
}
