//! Exact division by linear forms, sums of fractions with linear
//! denominators, and symmetrization over a block of variables.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::poly::{Coeff, Degree, Monomial, MultiPoly, Var};
use crate::error::{arg, internal, Result};

/// Splits a polynomial of degree at most one into its constant term and
/// its variable coefficients (sorted by variable).
fn linear_parts(linear: &MultiPoly) -> Result<(Coeff, Vec<(Var, Coeff)>)> {
    if linear.is_zero() {
        return arg("division by the zero polynomial");
    }
    if linear.degree() > Degree::Finite(1) {
        return arg(format!("divisor `{linear}` is not linear"));
    }
    let mut constant = Coeff::zero();
    let mut parts = Vec::new();
    for (m, c) in linear.terms() {
        match m.pairs() {
            [] => constant = c.clone(),
            [(v, 1)] => parts.push((*v, c.clone())),
            _ => unreachable!(),
        }
    }
    parts.sort_by_key(|p| p.0);
    Ok((constant, parts))
}

/// Divides `p` exactly by `linear^multiplicity`.
///
/// Returns `Ok(None)` when the power does not divide `p`. A zero divisor
/// or a divisor of degree above one is an argument error.
pub fn divide_by_linear(
    p: &MultiPoly,
    linear: &MultiPoly,
    multiplicity: u32,
) -> Result<Option<MultiPoly>> {
    let (constant, parts) = linear_parts(linear)?;
    if multiplicity == 0 {
        return Ok(Some(p.clone()));
    }
    if parts.is_empty() {
        let inv = constant.recip().pow(multiplicity as i32);
        return Ok(Some(p.scale(&inv)));
    }
    let mut current = p.clone();
    for _ in 0..multiplicity {
        match divide_once(&current, &constant, &parts) {
            Some(next) => current = next,
            None => return Ok(None),
        }
    }
    Ok(Some(current))
}

/// Synthetic division by `c_x x + rest`, where `x` is the first variable.
fn divide_once(p: &MultiPoly, constant: &Coeff, parts: &[(Var, Coeff)]) -> Option<MultiPoly> {
    let (x, cx) = &parts[0];
    let mut rest = MultiPoly::constant(constant.clone());
    for (v, c) in &parts[1..] {
        rest.add_term(Monomial::var(*v), c.clone());
    }
    // Coefficients of p as a polynomial in x.
    let mut by_power: Vec<MultiPoly> = Vec::new();
    for (m, c) in p.terms() {
        let (rest_m, e) = m.without(*x);
        let e = e as usize;
        if by_power.len() <= e {
            by_power.resize(e + 1, MultiPoly::zero());
        }
        by_power[e].add_term(rest_m, c.clone());
    }
    if by_power.is_empty() {
        return Some(MultiPoly::zero());
    }
    let top = by_power.len() - 1;
    let inv = cx.recip();
    let mut quotient = vec![MultiPoly::zero(); top];
    // p_j = cx q_{j-1} + rest q_j, with q_top = 0.
    let mut carry = MultiPoly::zero();
    for j in (1..=top).rev() {
        let qj1 = (&by_power[j] - &carry).scale(&inv);
        carry = &rest * &qj1;
        quotient[j - 1] = qj1;
    }
    if !(&by_power[0] - &carry).is_zero() {
        return None;
    }
    let mut out = MultiPoly::zero();
    for (j, qj) in quotient.into_iter().enumerate() {
        out += &qj.mul_monomial(&Monomial::var_pow(*x, j as u32));
    }
    Some(out)
}

/// A linear form scaled so that its first variable has coefficient one,
/// together with the scalar: `linear = scalar * normalized`.
fn normalize_linear(linear: &MultiPoly) -> Result<(Coeff, Option<MultiPoly>)> {
    let (constant, parts) = linear_parts(linear)?;
    if parts.is_empty() {
        return Ok((constant, None));
    }
    let lead = parts[0].1.clone();
    Ok((lead.clone(), Some(linear.scale(&lead.recip()))))
}

/// Computes `sum_t num_t / prod(den_t)` where every denominator factor is
/// linear, asserting that the sum is a polynomial.
///
/// With `cap = Some(c)` the numerators are regarded as series known through
/// degree `c + deg(lcm)`, every non-constant denominator factor must be
/// homogeneous, and the result is truncated at `c`.
pub fn sum_fractions(terms: &[(MultiPoly, Vec<MultiPoly>)], cap: Option<u32>) -> Result<MultiPoly> {
    struct Prepared {
        num: MultiPoly,
        factors: Vec<(MultiPoly, u32)>,
    }
    fn bump(list: &mut Vec<(MultiPoly, u32)>, f: &MultiPoly, by: u32) {
        match list.iter_mut().find(|(g, _)| g == f) {
            Some(entry) => entry.1 += by,
            None => list.push((f.clone(), by)),
        }
    }

    let mut prepared = Vec::with_capacity(terms.len());
    let mut lcm: Vec<(MultiPoly, u32)> = Vec::new();
    for (num, dens) in terms {
        let mut scalar = Coeff::one();
        let mut factors: Vec<(MultiPoly, u32)> = Vec::new();
        for d in dens {
            let (c, norm) = normalize_linear(d)?;
            if c.is_zero() {
                return arg("zero denominator factor");
            }
            scalar *= c;
            if let Some(f) = norm {
                if cap.is_some() && !f.is_homogeneous() {
                    return arg(format!("truncated fraction sums need homogeneous denominators, got `{f}`"));
                }
                bump(&mut factors, &f, 1);
            }
        }
        for (f, e) in &factors {
            match lcm.iter_mut().find(|(g, _)| g == f) {
                Some(entry) => entry.1 = entry.1.max(*e),
                None => lcm.push((f.clone(), *e)),
            }
        }
        prepared.push(Prepared { num: num.scale(&scalar.recip()), factors });
    }

    let lcm_degree: u32 = lcm.iter().map(|(_, e)| *e).sum();
    let work_cap = cap.map(|c| c + lcm_degree);
    let mut total = MultiPoly::zero();
    for t in &prepared {
        let mut acc = match work_cap {
            Some(c) => t.num.truncate(c),
            None => t.num.clone(),
        };
        for (f, e) in &lcm {
            let have = t.factors.iter().find(|(g, _)| g == f).map_or(0, |x| x.1);
            for _ in have..*e {
                acc = acc.mul_truncated(f, work_cap);
            }
        }
        total += &acc;
    }

    let divide = |p: &MultiPoly| -> Result<MultiPoly> {
        let mut cur = p.clone();
        for (f, e) in &lcm {
            match divide_by_linear(&cur, f, *e)? {
                Some(qt) => cur = qt,
                None => {
                    return internal(format!(
                        "denominator `({f})^{e}` does not clear after summation"
                    ))
                }
            }
        }
        Ok(cur)
    };

    match cap {
        None => divide(&total),
        Some(c) => {
            let (parts, _) = total.graded_components();
            let mut out = MultiPoly::zero();
            for (d, part) in parts.iter().enumerate() {
                if part.is_zero() {
                    continue;
                }
                if (d as u32) < lcm_degree {
                    return internal("fraction sum has a pole after summation");
                }
                if d as u32 > c + lcm_degree {
                    continue;
                }
                out += &divide(part)?;
            }
            Ok(out)
        }
    }
}

/// All permutations of `block`, as renaming maps `block[i] -> block[sigma(i)]`.
pub fn block_permutations(block: &[Var]) -> Vec<HashMap<Var, Var>> {
    (0..block.len())
        .permutations(block.len())
        .map(|perm| block.iter().zip(&perm).map(|(&v, &j)| (v, block[j])).collect())
        .collect()
}

/// `sum_sigma num(sigma vars) / prod den(sigma vars)` over all permutations
/// of `block`, asserting that the result is a polynomial.
pub fn symmetrize(num: &MultiPoly, den_factors: &[MultiPoly], block: &[Var]) -> Result<MultiPoly> {
    let terms: Vec<(MultiPoly, Vec<MultiPoly>)> = block_permutations(block)
        .iter()
        .map(|map| (num.rename(map), den_factors.iter().map(|d| d.rename(map)).collect()))
        .collect();
    sum_fractions(&terms, None)
}
