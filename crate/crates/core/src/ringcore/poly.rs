use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn q(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A named variable. The derived order is the canonical variable order:
/// the `alpha` block, then `beta`, then `z`, then the `c` symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Alpha(u16),
    Beta(u16),
    Z(u16),
    C(u16),
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::Alpha(i) => format!("a{i}"),
            Var::Beta(i) => format!("b{i}"),
            Var::Z(i) => format!("z{i}"),
            Var::C(i) => format!("c{i}"),
        }
    }

    /// Parses `a3`, `b1`, `z2`, `c5` (indices start at 1).
    pub fn parse(name: &str) -> Result<Var> {
        let bad = || Error::Configuration(format!("unknown variable name `{name}`"));
        let mut chars = name.chars();
        let head = chars.next().ok_or_else(bad)?;
        let index: u16 = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        match head {
            'a' => Ok(Var::Alpha(index)),
            'b' => Ok(Var::Beta(index)),
            'z' => Ok(Var::Z(index)),
            'c' => Ok(Var::C(index)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `alpha_1, ..., alpha_k`.
pub fn alphas(k: usize) -> Vec<Var> {
    (1..=k).map(|u| Var::Alpha(u as u16)).collect()
}

/// `beta_1, ..., beta_n`.
pub fn betas(n: usize) -> Vec<Var> {
    (1..=n).map(|v| Var::Beta(v as u16)).collect()
}

/// A monomial stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 6]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = SmallVec::new();
        if e > 0 {
            m.push((v, e));
        }
        Monomial(m)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: SmallVec<[(Var, u32); 6]> = SmallVec::new();
        for (v, e) in pairs {
            if e > 0 {
                acc.push((v, e));
            }
        }
        acc.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u32); 6]> = SmallVec::new();
        for (v, e) in acc {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes `v` entirely, returning its former exponent.
    pub fn without(&self, v: Var) -> (Monomial, u32) {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut m = self.0.clone();
                let (_, e) = m.remove(i);
                (Monomial(m), e)
            }
            Err(_) => (self.clone(), 0),
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }

    /// Dense exponent vector over the given ordered variable table.
    pub fn dense(&self, table: &[Var]) -> Vec<u32> {
        table.iter().map(|&v| self.exponent(v)).collect()
    }

    /// Lexicographic comparison of dense exponent vectors in variable order.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // The smaller variable is present in only one of them.
                        return if va < vb { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            i += 1;
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree of a polynomial; `deg(0)` is minus infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: FxHashMap<Monomial, Coeff>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(q(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), Coeff::one())
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `c0 + sum c_i v_i`.
    pub fn linear(c0: i64, parts: &[(Var, i64)]) -> Self {
        let mut p = Self::int(c0);
        for &(v, c) in parts {
            p.add_term(Monomial::var(v), q(c));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::one())
    }

    /// Unordered term iterator.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in canonical (graded lexicographic, ascending) order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Smallest degree of a nonzero homogeneous part.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous parts indexed by degree (empty for the zero polynomial),
    /// together with the degree.
    pub fn graded_components(&self) -> (Vec<MultiPoly>, Degree) {
        let deg = self.degree();
        let Degree::Finite(top) = deg else {
            return (Vec::new(), deg);
        };
        let mut parts = vec![MultiPoly::zero(); top as usize + 1];
        for (m, c) in &self.terms {
            parts[m.degree() as usize].terms.insert(m.clone(), c.clone());
        }
        (parts, deg)
    }

    pub fn truncate(&self, cap: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Variables that occur, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Coeff) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    /// Product with every monomial of degree above `cap` discarded.
    pub fn mul_truncated(&self, other: &MultiPoly, cap: Option<u32>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        // Group the right factor by degree so truncation can skip whole blocks.
        let mut rhs: Vec<(&Monomial, &Coeff, u32)> =
            other.terms.iter().map(|(m, c)| (m, c, m.degree())).collect();
        rhs.sort_by_key(|t| t.2);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for &(mb, cb, db) in &rhs {
                if let Some(cap) = cap {
                    if da + db > cap {
                        break;
                    }
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        self.pow_truncated(e, None)
    }

    pub fn pow_truncated(&self, e: u32, cap: Option<u32>) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc.mul_truncated(self, cap);
        }
        acc
    }

    /// Simultaneous substitution of variables by polynomials; unmapped
    /// variables pass through unchanged.
    pub fn substitute(&self, assignment: &HashMap<Var, MultiPoly>) -> MultiPoly {
        let mut powers: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut image = MultiPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                match assignment.get(&v) {
                    None => kept = kept.mul(&Monomial::var_pow(v, e)),
                    Some(target) => {
                        let pw = powers
                            .entry((v, e))
                            .or_insert_with(|| target.pow(e))
                            .clone();
                        image = &image * &pw;
                    }
                }
            }
            out += &image.mul_monomial(&kept);
        }
        out
    }

    /// Substitution keyed by variable names such as `a1` or `b2`.
    pub fn substitute_named(&self, assignment: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        let mut map = HashMap::new();
        for (name, p) in assignment {
            map.insert(Var::parse(name)?, p.clone());
        }
        Ok(self.substitute(&map))
    }

    /// Renames variables; a cheap special case of substitution.
    pub fn rename(&self, map: &HashMap<Var, Var>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let renamed =
                Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (*map.get(&v).unwrap_or(&v), e)));
            out.add_term(renamed, c.clone());
        }
        out
    }

    /// `true` when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The lexicographically largest monomial of the given degree.
    pub fn lex_leading(&self, d: u32) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .max_by(|a, b| a.0.lex_cmp(b.0))
    }
}

impl fmt::Display for MultiPoly {
    /// Plain ASCII: `1 + b2 - a1`, `2*a1*b2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = m
                .pairs()
                .iter()
                .map(|&(v, e)| if e == 1 { v.name() } else { format!("{}^{e}", v.name()) })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly { (&self).$f(&rhs) }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly { (&self).$f(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Product of polynomials.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
    factors.into_iter().fold(MultiPoly::one(), |acc, f| &acc * f)
}

/// Elementary symmetric polynomial `e_d(vars)`.
pub fn elementary(d: usize, vars: &[Var]) -> MultiPoly {
    let mut table = vec![MultiPoly::zero(); d + 1];
    table[0] = MultiPoly::one();
    for &v in vars {
        let x = MultiPoly::var(v);
        for j in (1..=d).rev() {
            let add = &table[j - 1] * &x;
            table[j] += &add;
        }
    }
    table.swap_remove(d)
}

/// Complete homogeneous symmetric polynomial `h_d(vars)`.
pub fn complete(d: usize, vars: &[Var]) -> MultiPoly {
    let mut table = vec![MultiPoly::zero(); d + 1];
    table[0] = MultiPoly::one();
    for &v in vars {
        let x = MultiPoly::var(v);
        for j in 1..=d {
            let add = &table[j - 1] * &x;
            table[j] += &add;
        }
    }
    table.swap_remove(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u16) -> MultiPoly {
        MultiPoly::var(Var::Alpha(i))
    }
    fn b(i: u16) -> MultiPoly {
        MultiPoly::var(Var::Beta(i))
    }

    #[test]
    fn display_orders_terms_canonically() {
        let w = MultiPoly::int(1) + b(2) - a(1);
        assert_eq!(w.to_string(), "1 + b2 - a1");
        let p = (b(1) - a(1)) * (b(2) - a(1));
        assert_eq!(p.to_string(), "b1*b2 - a1*b2 - a1*b1 + a1^2");
    }

    #[test]
    fn var_names_round_trip() {
        for v in [Var::Alpha(3), Var::Beta(12), Var::Z(1), Var::C(7)] {
            assert_eq!(Var::parse(&v.name()).unwrap(), v);
        }
        assert!(matches!(Var::parse("x1"), Err(Error::Configuration(_))));
        assert!(Var::parse("a0").is_err());
        assert!(Var::parse("a").is_err());
    }

    #[test]
    fn substitute_examples() {
        let w1 = MultiPoly::int(1) + b(2) - a(1);
        let id: HashMap<Var, MultiPoly> = [(Var::Beta(2), b(2))].into_iter().collect();
        assert_eq!(w1.substitute(&id), w1);
        let zero_b: HashMap<Var, MultiPoly> =
            [(Var::Beta(1), MultiPoly::zero()), (Var::Beta(2), MultiPoly::zero())]
                .into_iter()
                .collect();
        assert_eq!(w1.substitute(&zero_b), MultiPoly::int(1) - a(1));
        let diff = b(1) - a(1);
        let s = diff.substitute_named(&[("a1", b(1))]).unwrap();
        assert!(s.is_zero());
        assert!(matches!(
            diff.substitute_named(&[("q1", b(1))]),
            Err(Error::Configuration(_))
        ));
    }

    #[test]
    fn graded_components_examples() {
        let alpha = a(1);
        let beta = b(1);
        let p = &alpha + &(&beta * &MultiPoly::int(2)) + (&alpha * &beta) * MultiPoly::int(2);
        let (parts, deg) = p.graded_components();
        assert_eq!(deg, Degree::Finite(2));
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], &alpha + &(&beta * &MultiPoly::int(2)));
        assert_eq!(parts[2], (&alpha * &beta) * MultiPoly::int(2));
        let (parts, deg) = MultiPoly::zero().graded_components();
        assert!(parts.is_empty());
        assert_eq!(deg, Degree::NegInfinity);
        let w = (b(1) - a(1)) * (b(2) - a(1));
        let (parts, deg) = w.graded_components();
        assert_eq!(deg, Degree::Finite(2));
        assert!(parts[0].is_zero() && parts[1].is_zero());
    }

    #[test]
    fn symmetric_polynomials() {
        let vs = alphas(3);
        assert_eq!(elementary(0, &vs), MultiPoly::one());
        assert_eq!(elementary(4, &vs), MultiPoly::zero());
        assert_eq!(elementary(3, &vs), a(1) * a(2) * a(3));
        let h2 = complete(2, &alphas(2));
        assert_eq!(h2, a(1) * a(1) + a(1) * a(2) + a(2) * a(2));
    }

    #[test]
    fn graded_lex_order() {
        let m_a1 = Monomial::var(Var::Alpha(1));
        let m_b2 = Monomial::var(Var::Beta(2));
        assert!(m_b2 < m_a1);
        assert!(Monomial::one() < m_b2);
        let m_a2sq = Monomial::var_pow(Var::Alpha(2), 2);
        assert!(m_a1 < m_a2sq);
    }
}
