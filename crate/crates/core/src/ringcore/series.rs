use std::fmt;

use super::poly::{Coeff, MultiPoly};

/// A power series known through total degree `cap`.
///
/// Every stored monomial has degree at most `cap`; arithmetic drops
/// anything above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: MultiPoly,
    cap: u32,
}

impl TruncatedSeries {
    pub fn new(poly: &MultiPoly, cap: u32) -> Self {
        TruncatedSeries { poly: poly.truncate(cap), cap }
    }

    pub fn from_poly(poly: MultiPoly, cap: u32) -> Self {
        if poly.degree() <= super::Degree::Finite(cap) {
            TruncatedSeries { poly, cap }
        } else {
            Self::new(&poly, cap)
        }
    }

    pub fn zero(cap: u32) -> Self {
        TruncatedSeries { poly: MultiPoly::zero(), cap }
    }

    pub fn one(cap: u32) -> Self {
        TruncatedSeries { poly: MultiPoly::one(), cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Re-truncates at a smaller cap.
    pub fn truncate(&self, cap: u32) -> Self {
        Self::new(&self.poly, cap.min(self.cap))
    }

    pub fn add(&self, other: &TruncatedSeries) -> Self {
        let cap = self.cap.min(other.cap);
        Self::new(&(&self.poly + &other.poly), cap)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Self {
        let cap = self.cap.min(other.cap);
        Self::new(&(&self.poly - &other.poly), cap)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        TruncatedSeries { poly: self.poly.scale(c), cap: self.cap }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Self {
        let cap = self.cap.min(other.cap);
        TruncatedSeries { poly: self.poly.mul_truncated(&other.poly, Some(cap)), cap }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        TruncatedSeries { poly: self.poly.mul_truncated(p, Some(self.cap)), cap: self.cap }
    }

    /// `self / (1 + w)` for `w` without constant term. This is the
    /// geometric expansion `sum (-w)^j`, computed degree by degree via
    /// `Q_d = A_d - sum_e w_e Q_{d-e}`.
    pub fn div_one_plus(&self, w: &MultiPoly) -> Self {
        assert!(w.constant_term() == Coeff::from_integer(0.into()), "w must have no constant term");
        let (a_parts, _) = self.poly.graded_components();
        let (w_parts, _) = w.graded_components();
        let cap = self.cap as usize;
        let mut q: Vec<MultiPoly> = Vec::with_capacity(cap + 1);
        for d in 0..=cap {
            let mut qd = a_parts.get(d).cloned().unwrap_or_default();
            for e in 1..=d.min(w_parts.len().saturating_sub(1)) {
                if w_parts[e].is_zero() || q[d - e].is_zero() {
                    continue;
                }
                qd -= &(&w_parts[e] * &q[d - e]);
            }
            q.push(qd);
        }
        let mut poly = MultiPoly::zero();
        for part in &q {
            poly += part;
        }
        TruncatedSeries { poly, cap: self.cap }
    }

    /// `self / (1 + w)^e`.
    pub fn div_one_plus_pow(&self, w: &MultiPoly, e: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..e {
            out = out.div_one_plus(w);
        }
        out
    }

    /// The homogeneous part of lowest degree, if any.
    pub fn lowest_part(&self) -> Option<(u32, MultiPoly)> {
        let d = self.poly.min_degree()?;
        Some((d, self.poly.homogeneous_part(d)))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.poly, self.cap + 1)
    }
}
