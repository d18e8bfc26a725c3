use std::fmt;

use crate::error::{arg, Result};
use crate::ringcore::{MultiPoly, TruncatedSeries, Var};

/// The affine form `1 + sum kappa_i z_i` (indices one-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenFactor {
    kappa: Vec<(usize, i64)>,
}

impl DenFactor {
    pub fn new(kappa: impl Into<Vec<(usize, i64)>>) -> Result<Self> {
        let mut kappa: Vec<(usize, i64)> = kappa.into();
        kappa.retain(|&(_, c)| c != 0);
        kappa.sort_unstable();
        if kappa.is_empty() {
            return arg("denominator factor must involve a variable");
        }
        if kappa.iter().any(|&(i, _)| i == 0) || kappa.windows(2).any(|w| w[0].0 == w[1].0) {
            return arg(format!("malformed denominator factor {kappa:?}"));
        }
        Ok(DenFactor { kappa })
    }

    /// `1 + kappa z_i`.
    pub fn single(i: usize, kappa: i64) -> Result<Self> {
        Self::new(vec![(i, kappa)])
    }

    pub fn kappa(&self) -> &[(usize, i64)] {
        &self.kappa
    }

    pub fn max_index(&self) -> usize {
        self.kappa.iter().map(|p| p.0).max().unwrap_or(0)
    }

    /// `sum kappa_i z_i` as a polynomial.
    pub fn linear_part(&self) -> MultiPoly {
        let parts: Vec<(Var, i64)> = self.kappa.iter().map(|&(i, c)| (Var::Z(i as u16), c)).collect();
        MultiPoly::linear(0, &parts)
    }
}

impl fmt::Display for DenFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1 + {})", self.linear_part())
    }
}

/// `numerator(z) * prod (1 + kappa.z)^(-e)`, read as a formal power series
/// in `z_1, ..., z_mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeriesExpr {
    mu: usize,
    numerator: MultiPoly,
    dens: Vec<(DenFactor, u32)>,
}

impl RationalSeriesExpr {
    pub fn new(mu: usize, numerator: MultiPoly, dens: Vec<(DenFactor, u32)>) -> Result<Self> {
        for v in numerator.variables() {
            match v {
                Var::Z(i) if (i as usize) <= mu => {}
                _ => return arg(format!("numerator variable {v} outside z1..z{mu}")),
            }
        }
        for (d, _) in &dens {
            if d.max_index() > mu {
                return arg(format!("denominator factor {d} outside z1..z{mu}"));
            }
        }
        let dens = dens.into_iter().filter(|(_, e)| *e > 0).collect();
        Ok(RationalSeriesExpr { mu, numerator, dens })
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn dens(&self) -> &[(DenFactor, u32)] {
        &self.dens
    }

    /// Expands through total degree `cap` with plain polynomial arithmetic.
    pub fn to_series(&self, cap: u32) -> TruncatedSeries {
        let mut s = TruncatedSeries::new(&self.numerator, cap);
        for (d, e) in &self.dens {
            s = s.div_one_plus_pow(&d.linear_part(), *e);
        }
        s
    }
}

impl fmt::Display for RationalSeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        for (d, e) in &self.dens {
            write!(f, " / {d}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `z_i` as a polynomial.
pub fn z(i: usize) -> MultiPoly {
    MultiPoly::var(Var::Z(i as u16))
}
