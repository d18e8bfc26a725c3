use rayon::prelude::*;

use super::partition::Partition;
use super::series::SchurSeries;
use crate::error::{internal, Result};
use crate::ringcore::{alphas, betas, complete, determinant, elementary, q, MultiPoly, TruncatedSeries, Var};

/// Evaluates `rho^{k,n}(Sc_lambda) = det(c_{lambda_i + j - i})` where
/// `sum c_i t^i = prod(1 + beta_j t) / prod(1 + alpha_i t)`.
///
/// The dual form `det(eps_{lambda'_i + j - i})` with
/// `sum eps_i t^i = prod(1 - alpha_i t) / prod(1 - beta_j t)` is used when
/// the conjugate partition is shorter.
#[derive(Clone, Debug)]
pub struct RhoEvaluator {
    k: usize,
    n: usize,
    c: Vec<MultiPoly>,
    eps: Vec<MultiPoly>,
}

impl RhoEvaluator {
    /// Tables are precomputed for indices up to `max_index`; larger indices
    /// are computed on demand.
    pub fn new(k: usize, n: usize, max_index: u32) -> Self {
        let (c, eps) = (0..=max_index as usize)
            .map(|i| (Self::c_entry(k, n, i), Self::eps_entry(k, n, i)))
            .unzip();
        RhoEvaluator { k, n, c, eps }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn c_entry(k: usize, n: usize, i: usize) -> MultiPoly {
        let (a, b) = (alphas(k), betas(n));
        let mut out = MultiPoly::zero();
        for x in 0..=i.min(n) {
            let y = i - x;
            let term = &elementary(x, &b) * &complete(y, &a);
            if y % 2 == 0 {
                out += &term;
            } else {
                out -= &term;
            }
        }
        out
    }

    fn eps_entry(k: usize, n: usize, i: usize) -> MultiPoly {
        let (a, b) = (alphas(k), betas(n));
        let mut out = MultiPoly::zero();
        for x in 0..=i.min(k) {
            let term = &elementary(x, &a) * &complete(i - x, &b);
            if x % 2 == 0 {
                out += &term;
            } else {
                out -= &term;
            }
        }
        out
    }

    /// `c_i`, with `c_0 = 1` and `c_i = 0` for `i < 0`.
    pub fn c(&self, i: i64) -> MultiPoly {
        if i < 0 {
            return MultiPoly::zero();
        }
        match self.c.get(i as usize) {
            Some(p) => p.clone(),
            None => Self::c_entry(self.k, self.n, i as usize),
        }
    }

    fn eps(&self, i: i64) -> MultiPoly {
        if i < 0 {
            return MultiPoly::zero();
        }
        match self.eps.get(i as usize) {
            Some(p) => p.clone(),
            None => Self::eps_entry(self.k, self.n, i as usize),
        }
    }

    pub fn eval(&self, lambda: &Partition) -> MultiPoly {
        let conj = lambda.conjugate();
        if conj.len() < lambda.len() {
            let p = conj.parts();
            determinant(p.len(), |i, j| self.eps(p[i] as i64 + j as i64 - i as i64))
        } else {
            let p = lambda.parts();
            determinant(p.len(), |i, j| self.c(p[i] as i64 + j as i64 - i as i64))
        }
    }

    /// Substitutes `c_m -> rho^{k,n}(c_m)` in a polynomial in the `c` symbols.
    pub fn eval_c_poly(&self, p: &MultiPoly) -> MultiPoly {
        let assignment = p
            .variables()
            .into_iter()
            .filter_map(|v| match v {
                Var::C(m) => Some((v, self.c(m as i64))),
                _ => None,
            })
            .collect();
        p.substitute(&assignment)
    }
}

/// `rho^{k,n}(Sc_lambda)` as a polynomial in `alpha_1..alpha_k, beta_1..beta_n`.
pub fn schur_to_poly(lambda: &Partition, k: usize, n: usize) -> MultiPoly {
    RhoEvaluator::new(k, n, lambda.weight()).eval(lambda)
}

/// Whether `Sc_lambda` lies in the kernel of `rho^{k,n}`: `lambda_{k+1} >= n + 1`.
pub fn rho_kernel_test(lambda: &Partition, k: usize, n: usize) -> bool {
    lambda.part(k + 1) as usize > n
}

/// `sum coeff * rho^{k,n}(Sc_lambda)`, truncated at `cap`.
pub fn apply_rho(series: &SchurSeries, k: usize, n: usize, cap: u32) -> TruncatedSeries {
    let terms: Vec<_> = series
        .terms()
        .filter(|(l, _)| l.weight() <= cap && !rho_kernel_test(l, k, n))
        .collect();
    let top = terms.iter().map(|(l, _)| l.weight()).max().unwrap_or(0);
    let rho = RhoEvaluator::new(k, n, top);
    let images: Vec<MultiPoly> = terms
        .par_iter()
        .map(|(l, c)| rho.eval(l).scale(c))
        .collect();
    let mut total = MultiPoly::zero();
    for p in &images {
        total += p;
    }
    TruncatedSeries::from_poly(total, cap)
}

/// Writes a polynomial (or truncated series) symmetric in `alpha_1..alpha_k`
/// in the basis `rho^{k,0}(Sc_mu)`, `l(mu) <= k`, through degree `cap`.
///
/// `rho^{k,0}(Sc_mu) = (-1)^{|mu|} s_mu(alpha)`, whose lexicographically
/// leading monomial is `alpha^mu`, so the leading monomials can be peeled off
/// one at a time.
pub fn symmetric_to_schur(p: &MultiPoly, k: usize, cap: u32) -> Result<SchurSeries> {
    let av = alphas(k);
    for v in p.variables() {
        if !av.contains(&v) {
            return internal(format!("variable {v} outside alpha_1..alpha_{k}"));
        }
    }
    let rho = RhoEvaluator::new(k, 0, cap);
    let mut rest = p.truncate(cap);
    let mut out = SchurSeries::new(cap);
    for d in 0..=cap {
        while let Some((m, c)) = rest.lex_leading(d) {
            let exps = m.dense(&av);
            if exps.windows(2).any(|w| w[0] < w[1]) {
                return internal(format!("polynomial is not symmetric (leading monomial {m:?})"));
            }
            let mu = Partition::from_unsorted(exps);
            let sign = if d % 2 == 0 { q(1) } else { q(-1) };
            let coeff = c * &sign;
            rest -= &rho.eval(&mu).scale(&coeff);
            out.add_term(mu, coeff);
        }
    }
    Ok(out)
}
