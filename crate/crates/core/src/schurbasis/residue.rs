//! The residue-at-infinity route to the `S` operation.
//!
//! `Sc_a` is the coefficient of `z^a` in `prod_{i<j}(1 - z_j/z_i) prod_i C(z_i)`
//! with `C(z) = sum_m c_m z^m`; equivalently `(-1)^mu` times the iterated
//! residue at infinity of `z^{-a} prod_{i<j}(1 - z_j/z_i) prod C(z_i) dz/z`.
//! Summing over the monomials of a series gives `S` as a polynomial in the
//! free symbols `c_m`, with no straightening involved. The result is then
//! brought to the Schur basis by Jacobi-Trudi elimination in the `c_m`.

use std::collections::HashMap;

use num_traits::Zero;

use super::expr::RationalSeriesExpr;
use super::partition::Partition;
use super::series::SchurSeries;
use crate::error::{internal, Result};
use crate::ringcore::{determinant, Coeff, Monomial, MultiPoly, Var};

/// Exponent shifts and coefficients of `prod_{i<j}(1 - z_j/z_i)` in `mu` variables.
fn vandermonde_shifts(mu: usize) -> HashMap<Vec<i64>, i64> {
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::from([(vec![0; mu], 1)]);
    for i in 0..mu {
        for j in i + 1..mu {
            let mut next = acc.clone();
            for (s, c) in &acc {
                let mut t = s.clone();
                t[i] -= 1;
                t[j] += 1;
                *next.entry(t).or_insert(0) -= c;
            }
            next.retain(|_, c| *c != 0);
            acc = next;
        }
    }
    acc
}

fn c_symbol(m: i64) -> Option<Monomial> {
    match m {
        m if m < 0 => None,
        0 => Some(Monomial::one()),
        m => Some(Monomial::var(Var::C(m as u16))),
    }
}

/// `S(expr)` through degree `cap` as a polynomial in the symbols `c_m`.
pub fn residue_at_infinity_c(expr: &RationalSeriesExpr, cap: u32) -> MultiPoly {
    let mu = expr.mu();
    let series = expr.to_series(cap);
    let shifts = vandermonde_shifts(mu);
    let mut out = MultiPoly::zero();
    for (m, f) in series.poly().terms() {
        let a: Vec<i64> = (1..=mu).map(|i| m.exponent(Var::Z(i as u16)) as i64).collect();
        for (s, sc) in &shifts {
            let mut mono = Monomial::one();
            let mut alive = true;
            for i in 0..mu {
                match c_symbol(a[i] - s[i]) {
                    Some(c) => mono = mono.mul(&c),
                    None => {
                        alive = false;
                        break;
                    }
                }
            }
            if alive {
                out.add_term(mono, f * Coeff::from_integer((*sc).into()));
            }
        }
    }
    out
}

/// `det(c_{lambda_i + j - i})` in the free symbols `c_m`.
pub fn jacobi_trudi_c(lambda: &Partition) -> MultiPoly {
    let p = lambda.parts();
    determinant(p.len(), |i, j| {
        let m = p[i] as i64 + j as i64 - i as i64;
        c_symbol(m).map_or_else(MultiPoly::zero, |c| MultiPoly::monomial(c, Coeff::from_integer(1.into())))
    })
}

/// The partition recorded by a `c`-monomial: part `m` repeated `e` times
/// for every factor `c_m^e`.
fn c_partition(m: &Monomial) -> Option<Partition> {
    let mut parts = Vec::new();
    for &(v, e) in m.pairs() {
        match v {
            Var::C(idx) => parts.extend(std::iter::repeat(idx as u32).take(e as usize)),
            _ => return None,
        }
    }
    Some(Partition::from_unsorted(parts))
}

/// Writes a polynomial in the `c_m` in the Schur basis. In `Sc_lambda` the
/// diagonal product `prod c_{lambda_i}` is the unique lexicographically
/// smallest term, so the smallest remaining term determines the next
/// coefficient.
pub fn c_poly_to_schur(p: &MultiPoly, cap: u32) -> Result<SchurSeries> {
    let mut rest = p.clone();
    let mut out = SchurSeries::new(cap);
    loop {
        let mut best: Option<(Partition, Coeff)> = None;
        for (m, c) in rest.terms() {
            let Some(lam) = c_partition(m) else {
                return internal(format!("non-c variable in {m:?}"));
            };
            let better = match &best {
                None => true,
                Some((b, _)) => {
                    lam.weight() < b.weight() || (lam.weight() == b.weight() && lam.parts() < b.parts())
                }
            };
            if better {
                best = Some((lam, c.clone()));
            }
        }
        let Some((lam, c)) = best else { break };
        if lam.weight() > cap {
            break;
        }
        rest -= &jacobi_trudi_c(&lam).scale(&c);
        if !rest.coeff(&Monomial::from_pairs(lam.parts().iter().map(|&x| (Var::C(x as u16), 1)))).is_zero() {
            return internal(format!("elimination failed to clear c-monomial of {lam}"));
        }
        out.add_term(lam, c);
    }
    Ok(out)
}

/// Independent evaluation of `S(expr)` through degree `cap`.
pub fn residue_at_infinity(expr: &RationalSeriesExpr, cap: u32) -> Result<SchurSeries> {
    c_poly_to_schur(&residue_at_infinity_c(expr, cap), cap)
}
