use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::expr::RationalSeriesExpr;
use super::kernel::{check_limits, ZKernel};
use super::series::SchurSeries;
use crate::error::Result;
use crate::ringcore::Var;

/// The `S` operation: expands `expr` as a power series through z-degree
/// `cap` and replaces every monomial `z^a` by the straightened `Sc_a`.
pub fn sss_expand(expr: &RationalSeriesExpr, cap: u32) -> Result<SchurSeries> {
    let mu = expr.mu();
    let num = expr.numerator();
    if num.is_zero() {
        return Ok(SchurSeries::new(cap));
    }
    // Pull out the common monomial factor so the kernel only carries the
    // remaining degrees.
    let exps: Vec<(Vec<u32>, _)> = num
        .terms()
        .map(|(m, c)| {
            let dense = (1..=mu).map(|i| m.exponent(Var::Z(i as u16))).collect::<Vec<u32>>();
            (dense, c.clone())
        })
        .collect();
    let prefix: Vec<u32> = (0..mu)
        .map(|i| exps.iter().map(|(e, _)| e[i]).min().unwrap_or(0))
        .collect();
    let pdeg: u32 = prefix.iter().sum();
    if pdeg > cap {
        return Ok(SchurSeries::new(cap));
    }
    let kcap = cap - pdeg;
    check_limits(kcap, mu)?;
    let denominator = exps
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let terms: Vec<(Vec<u32>, BigInt)> = exps
        .iter()
        .map(|(e, c)| {
            let reduced = e.iter().zip(&prefix).map(|(a, p)| a - p).collect();
            let scaled = c * num_rational::BigRational::from_integer(denominator.clone());
            (reduced, scaled.to_integer())
        })
        .collect();
    if let Some(s) = run::<i128>(expr, &terms, &prefix, kcap, cap, &denominator) {
        return Ok(s);
    }
    Ok(run::<BigInt>(expr, &terms, &prefix, kcap, cap, &denominator)
        .expect("big integer kernel cannot overflow"))
}

fn run<T: super::kernel::KCoeff>(
    expr: &RationalSeriesExpr,
    terms: &[(Vec<u32>, BigInt)],
    prefix: &[u32],
    kcap: u32,
    cap: u32,
    denominator: &BigInt,
) -> Option<SchurSeries> {
    let mut kernel = ZKernel::<T>::from_terms(kcap, terms)?;
    for (d, e) in expr.dens() {
        for _ in 0..*e {
            kernel.div_affine(d.kappa());
        }
        if kernel.overflowed() {
            return None;
        }
    }
    kernel.to_schur(prefix, expr.mu(), cap, denominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::{q, MultiPoly};
    use crate::schurbasis::expr::{z, DenFactor};
    use crate::schurbasis::partition::Partition;
    use crate::schurbasis::series::parse_schur;

    #[test]
    fn monomial_goes_to_its_symbol() {
        let e = RationalSeriesExpr::new(2, &z(1).pow(3) * &z(2), vec![]).unwrap();
        let s = sss_expand(&e, 8).unwrap();
        assert_eq!(s, SchurSeries::single(Partition::new(vec![3, 1]).unwrap(), 8));
    }

    #[test]
    fn geometric_series_in_second_variable() {
        // z1^3 z2 / (1 - z2) = sum_i z1^3 z2^i.
        let e = RationalSeriesExpr::new(
            2,
            &z(1).pow(3) * &z(2),
            vec![(DenFactor::single(2, -1).unwrap(), 1)],
        )
        .unwrap();
        let s = sss_expand(&e, 10).unwrap();
        let expected = parse_schur("Sc31 + Sc32 + Sc33 - Sc44 - Sc54 - Sc64", 10).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn rational_numerators_are_supported() {
        let num = z(1).scale(&q(1)) + MultiPoly::constant(num_rational::BigRational::new(1.into(), 2.into()));
        let e = RationalSeriesExpr::new(1, num, vec![]).unwrap();
        let s = sss_expand(&e, 3).unwrap();
        assert_eq!(s.to_string(), "1/2*Sc0 + Sc1");
    }
}
