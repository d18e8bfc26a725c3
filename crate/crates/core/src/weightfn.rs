//! Weight functions `W_I`, the CSM/SSM classes of matrix Schubert cells,
//! the interpolation-axiom verifier, CSM classes of coordinate arrangements
//! in diagonal torus representations, and the Schubert-cell variants.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cellgeom::{cell_geometry, closure_leq, enumerate_orbits, lambda_of_set, phi_restriction, ColumnSet};
use crate::error::{arg, internal, Result};
use crate::genfun::{fcsm_expr, fssm_expr, NParam};
use crate::ringcore::{
    alphas, block_permutations, complete, divide_by_linear, product, q, sum_fractions, symmetrize,
    Coeff, Degree, MultiPoly, TruncatedSeries, Var,
};
use crate::schurbasis::{sss_expand, symmetric_to_schur, z, DenFactor, RationalSeriesExpr, SchurSeries};

fn alpha(u: usize) -> MultiPoly {
    MultiPoly::var(Var::Alpha(u as u16))
}

fn beta(v: usize) -> MultiPoly {
    MultiPoly::var(Var::Beta(v as u16))
}

/// `beta_v - alpha_u`.
fn bw(v: usize, u: usize) -> MultiPoly {
    &beta(v) - &alpha(u)
}

/// `1 + beta_v - alpha_u`.
fn bw1(v: usize, u: usize) -> MultiPoly {
    &MultiPoly::one() + &bw(v, u)
}

fn factorial(m: usize) -> Coeff {
    (1..=m).fold(Coeff::one(), |acc, i| acc * q(i as i64))
}

/// Numerator and denominator factors of `U_I` before symmetrization.
fn u_parts(set: &ColumnSet) -> (MultiPoly, Vec<MultiPoly>) {
    let (k, n, i) = (set.k(), set.n(), set.elems());
    let d = i.len();
    let mut factors = Vec::new();
    let mut dens = Vec::new();
    for u in 1..=d {
        factors.extend((i[u - 1] + 1..=n).map(|v| bw1(v, u)));
        factors.extend((1..i[u - 1]).map(|v| bw(v, u)));
        for v in u + 1..=k {
            factors.push(&MultiPoly::one() + &(&alpha(u) - &alpha(v)));
            dens.push(&alpha(u) - &alpha(v));
        }
    }
    for u in d + 1..=k {
        factors.extend((1..=n).map(|v| bw(v, u)));
    }
    (product(&factors), dens)
}

/// `W_I = (1/(k-d)!) sum_{sigma in S_k} U_I(sigma alpha; beta)`.
pub fn weight_function(set: &ColumnSet) -> Result<MultiPoly> {
    let (num, dens) = u_parts(set);
    let sum = symmetrize(&num, &dens, &alphas(set.k()))?;
    let w = sum.scale(&factorial(set.k() - set.rank()).recip());
    if !w.has_integer_coefficients() {
        return internal(format!("weight function of {set} has a non-integer coefficient"));
    }
    Ok(w)
}

/// `W_I` at `beta = 0` from the residue form: with `r = k - d`,
/// `f_I = prod_{a<=r} z_a^{n+r-a} prod_{a>r} z_a^{i_{k+1-a}-1} (1+z_a)^{n-i_{k+1-a}}
///        prod_{a>r} prod_{b<a} (1+z_b-z_a) prod_{b<a} (z_a-z_b)`
/// and `W = (-1)^k RES f_I / prod_{u,v}(z_u + alpha_v)`. The residue at
/// infinity sends `z_u^e` to `(-1)^m h_m(alpha)` with `m = e - k + 1`.
pub fn weight_function_residue_beta0(set: &ColumnSet) -> MultiPoly {
    let f = residue_numerator(set);
    let k = set.k();
    let av = alphas(k);
    let mut h_cache: HashMap<i64, MultiPoly> = HashMap::new();
    let mut h = |m: i64| -> MultiPoly {
        h_cache
            .entry(m)
            .or_insert_with(|| {
                let p = complete(m as usize, &av);
                if m % 2 == 0 { p } else { -p }
            })
            .clone()
    };
    let mut out = MultiPoly::zero();
    for (mono, c) in f.terms() {
        let mut term = MultiPoly::constant(c.clone());
        for a in 1..=k {
            let m = mono.exponent(Var::Z(a as u16)) as i64 - k as i64 + 1;
            if m < 0 {
                term = MultiPoly::zero();
                break;
            }
            term = &term * &h(m);
        }
        out += &term;
    }
    out
}

/// The numerator `f_I(z_1..z_k)` of the residue form.
pub fn residue_numerator(set: &ColumnSet) -> MultiPoly {
    let (k, n, i) = (set.k(), set.n(), set.elems());
    let r = k - set.rank();
    let mut factors = Vec::new();
    for a in 1..=k {
        if a <= r {
            factors.push(z(a).pow((n + r - a) as u32));
        } else {
            let ia = i[k - a];
            factors.push(z(a).pow(ia as u32 - 1));
            factors.push((&MultiPoly::one() + &z(a)).pow((n - ia) as u32));
            for b in 1..a {
                factors.push(&(&MultiPoly::one() + &z(b)) - &z(a));
            }
        }
        for b in 1..a {
            factors.push(&z(a) - &z(b));
        }
    }
    product(&factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Csm,
    Ssm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassValue {
    Poly(MultiPoly),
    Series(TruncatedSeries),
}

/// An equivariant CSM or SSM class of a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsmClass {
    pub kind: ClassKind,
    pub value: ClassValue,
    pub k: usize,
    pub n: usize,
    pub beta_zero: bool,
}

impl CsmClass {
    pub fn poly(&self) -> &MultiPoly {
        match &self.value {
            ClassValue::Poly(p) => p,
            ClassValue::Series(s) => s.poly(),
        }
    }

    /// The expansion in `rho^{k,0}(Sc_mu)`, available for `beta = 0` classes.
    pub fn schur_expansion(&self, cap: u32) -> Result<SchurSeries> {
        if !self.beta_zero {
            return arg("Schur expansion requires the beta = 0 specialization");
        }
        let cap = match &self.value {
            ClassValue::Series(s) => cap.min(s.cap()),
            ClassValue::Poly(_) => cap,
        };
        symmetric_to_schur(self.poly(), self.k, cap)
    }
}

fn beta_zero(p: &MultiPoly, n: usize) -> MultiPoly {
    let assignment = (1..=n).map(|v| (Var::Beta(v as u16), MultiPoly::zero())).collect();
    p.substitute(&assignment)
}

/// `csm(Omega_I) = W_I`.
pub fn csm_cell(set: &ColumnSet) -> Result<CsmClass> {
    Ok(CsmClass {
        kind: ClassKind::Csm,
        value: ClassValue::Poly(weight_function(set)?),
        k: set.k(),
        n: set.n(),
        beta_zero: false,
    })
}

pub fn csm_cell_beta0(set: &ColumnSet) -> Result<CsmClass> {
    Ok(CsmClass {
        kind: ClassKind::Csm,
        value: ClassValue::Poly(beta_zero(&weight_function(set)?, set.n())),
        k: set.k(),
        n: set.n(),
        beta_zero: true,
    })
}

fn check_cap(set: &ColumnSet, cap: u32) -> Result<()> {
    let codim = set.codim() as u32;
    if cap < codim {
        return arg(format!("cap {cap} is below the codimension {codim} of {set}"));
    }
    Ok(())
}

/// `ssm(Omega_I) = W_I / prod_{u,v} (1 + beta_v - alpha_u)` through degree `cap`.
pub fn ssm_cell(set: &ColumnSet, cap: u32) -> Result<CsmClass> {
    check_cap(set, cap)?;
    let mut s = TruncatedSeries::new(&weight_function(set)?, cap);
    for u in 1..=set.k() {
        for v in 1..=set.n() {
            s = s.div_one_plus(&bw(v, u));
        }
    }
    Ok(CsmClass { kind: ClassKind::Ssm, value: ClassValue::Series(s), k: set.k(), n: set.n(), beta_zero: false })
}

/// `ssm` at `beta = 0`: `W_{I,beta=0} / prod_u (1 - alpha_u)^n`.
pub fn ssm_cell_beta0(set: &ColumnSet, cap: u32) -> Result<CsmClass> {
    check_cap(set, cap)?;
    let mut s = TruncatedSeries::new(&beta_zero(&weight_function(set)?, set.n()), cap);
    for u in 1..=set.k() {
        s = s.div_one_plus_pow(&-&alpha(u), set.n() as u32);
    }
    Ok(CsmClass { kind: ClassKind::Ssm, value: ClassValue::Series(s), k: set.k(), n: set.n(), beta_zero: true })
}

/// The four interpolation conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `phi_Omega(csm(Omega)) = c(T_Omega) e(N_Omega)`.
    Restriction,
    /// `phi_Theta(csm(Omega))` is divisible by `c(T_Theta)`.
    Divisibility,
    /// `deg phi_Theta(csm(Omega)) < deg c(T_Theta) e(N_Theta)` for `Theta != Omega`.
    DegreeBound,
    /// `phi_Theta(csm(Omega)) = 0` when `Theta` is not in the closure of `Omega`.
    Support,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Restriction => "I",
            Axiom::Divisibility => "II",
            Axiom::DegreeBound => "III",
            Axiom::Support => "IV",
        })
    }
}

/// One checked condition for the pair `(omega, theta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub omega: ColumnSet,
    pub theta: ColumnSet,
    pub axiom: Axiom,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub k: usize,
    pub n: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks the interpolation conditions for every pair of orbits.
pub fn verify_interpolation_axioms(
    classes: &BTreeMap<ColumnSet, MultiPoly>,
    k: usize,
    n: usize,
) -> Result<AxiomReport> {
    let orbits = enumerate_orbits(k, n)?;
    for o in &orbits {
        if !classes.contains_key(o) {
            return arg(format!("no class supplied for orbit {o}"));
        }
    }
    if let Some(extra) = classes.keys().find(|c| (c.k(), c.n()) != (k, n)) {
        return arg(format!("class for {extra} has dimensions ({}, {})", extra.k(), extra.n()));
    }
    let geoms: Vec<_> = orbits.iter().map(cell_geometry).collect();
    let targets: Vec<(MultiPoly, Vec<(MultiPoly, u32)>)> = geoms
        .iter()
        .map(|g| {
            let mut grouped: Vec<(MultiPoly, u32)> = Vec::new();
            for f in g.tangent_factors() {
                if f == MultiPoly::one() {
                    continue;
                }
                match grouped.iter_mut().find(|(h, _)| *h == f) {
                    Some(e) => e.1 += 1,
                    None => grouped.push((f, 1)),
                }
            }
            (g.chern_times_euler(), grouped)
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..orbits.len())
        .flat_map(|a| (0..orbits.len()).map(move |b| (a, b)))
        .collect();
    let checks: Vec<Vec<AxiomCheck>> = pairs
        .par_iter()
        .map(|&(a, b)| -> Result<Vec<AxiomCheck>> {
            let (omega, theta) = (&orbits[a], &orbits[b]);
            let restricted = phi_restriction(&classes[omega], theta);
            let (ce, factors) = &targets[b];
            let mut out = Vec::new();
            let mk = |axiom, passed, detail: String| AxiomCheck {
                omega: omega.clone(),
                theta: theta.clone(),
                axiom,
                passed,
                detail,
            };
            if a == b {
                let ok = restricted == *ce;
                out.push(mk(Axiom::Restriction, ok, if ok { String::new() } else { format!("got {restricted}, expected {ce}") }));
            } else {
                let (dr, dt) = (restricted.degree(), ce.degree());
                out.push(mk(Axiom::DegreeBound, dr < dt, format!("degree {dr} versus {dt}")));
            }
            let mut rest = restricted.clone();
            let mut divisible = true;
            let mut witness = String::new();
            for (f, e) in factors {
                match divide_by_linear(&rest, f, *e)? {
                    Some(qt) => rest = qt,
                    None => {
                        divisible = false;
                        witness = format!("not divisible by ({f})^{e}");
                        break;
                    }
                }
            }
            out.push(mk(Axiom::Divisibility, divisible, witness));
            if !closure_leq(theta, omega)? {
                let ok = restricted.is_zero();
                out.push(mk(Axiom::Support, ok, if ok { String::new() } else { format!("restriction {restricted} is nonzero") }));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(AxiomReport { k, n, checks: checks.into_iter().flatten().collect() })
}

/// `e(V) = prod_{v,u} (beta_v - alpha_u)`, the Euler class of `Hom(C^k, C^n)`.
pub fn euler_class(k: usize, n: usize) -> MultiPoly {
    let factors: Vec<MultiPoly> = (1..=n).flat_map(|v| (1..=k).map(move |u| bw(v, u))).collect();
    product(&factors)
}

/// A region in a diagonal torus representation built from coordinate
/// subspaces. `Subspace(S)` is the locus where the coordinates in `S`
/// (one-based) vanish; `Subspace` of the empty set is the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    Subspace(BTreeSet<usize>),
    Union(Vec<Region>),
    Intersection(Vec<Region>),
}

impl Region {
    pub fn zero_locus(coords: &[usize]) -> Region {
        Region::Subspace(coords.iter().copied().collect())
    }

    pub fn whole() -> Region {
        Region::Subspace(BTreeSet::new())
    }

    /// The region as a union of coordinate subspaces (their zero sets).
    fn pieces(&self) -> Vec<BTreeSet<usize>> {
        let mut out = match self {
            Region::Subspace(s) => vec![s.clone()],
            Region::Union(parts) => parts.iter().flat_map(|p| p.pieces()).collect(),
            Region::Intersection(parts) => {
                let mut acc = vec![BTreeSet::new()];
                for p in parts {
                    let ps = p.pieces();
                    acc = acc
                        .iter()
                        .flat_map(|a| ps.iter().map(move |b| a.union(b).copied().collect()))
                        .collect();
                }
                acc
            }
        };
        out.sort();
        out.dedup();
        out
    }
}

/// CSM class of a union of coordinate subspaces by inclusion-exclusion,
/// with `csm(subspace) = prod_{kept}(1 + w_i) prod_{vanishing}(w_i)`.
pub fn csm_coordinate_arrangement(weights: &[MultiPoly], region: &Region) -> Result<MultiPoly> {
    for w in weights {
        if w.degree() > Degree::Finite(1) || !w.constant_term().is_zero() {
            return arg(format!("weight `{w}` is not a linear form"));
        }
    }
    let pieces = region.pieces();
    for p in &pieces {
        if let Some(&bad) = p.iter().find(|&&i| i == 0 || i > weights.len()) {
            return arg(format!("coordinate {bad} is not among 1..{}", weights.len()));
        }
    }
    if pieces.len() > 20 {
        return arg("too many coordinate pieces for inclusion-exclusion");
    }
    let subspace = |s: &BTreeSet<usize>| -> MultiPoly {
        let factors: Vec<MultiPoly> = weights
            .iter()
            .enumerate()
            .map(|(i, w)| if s.contains(&(i + 1)) { w.clone() } else { &MultiPoly::one() + w })
            .collect();
        product(&factors)
    };
    let mut out = MultiPoly::zero();
    for mask in 1usize..(1 << pieces.len()) {
        let meet: BTreeSet<usize> = pieces
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .flat_map(|(_, p)| p.iter().copied())
            .collect();
        let term = subspace(&meet);
        if mask.count_ones() % 2 == 1 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    Ok(out)
}

/// Which Schubert-cell class to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchubertVariant {
    /// CSM class of a full-rank matrix Schubert cell.
    MatrixCsm,
    /// CSM class of the corresponding Schubert cell of `Gr_k(C^n)`.
    GrassmannianCsm,
    /// SSM class of a full-rank matrix Schubert cell.
    MatrixSsm,
}

/// A Schubert-cell class: the symmetrization formula (in `alpha, beta`) and
/// the generating form `S^{k,0}` giving its `beta = 0` Schur expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertCellClass {
    pub variant: SchubertVariant,
    pub value: ClassValue,
    pub generating: SchurSeries,
}

/// Symmetrizes `prod num / (prod frac_dens * prod series_dens)`, the latter
/// expanded as series through degree `cap`.
fn sym_series(
    num: &MultiPoly,
    frac_dens: &[MultiPoly],
    series_dens: &[MultiPoly],
    k: usize,
    cap: u32,
) -> Result<TruncatedSeries> {
    let work = cap + (k * k.saturating_sub(1) / 2) as u32;
    let mut base = TruncatedSeries::new(num, work);
    for d in series_dens {
        base = base.div_one_plus(&(d - &MultiPoly::one()));
    }
    let terms: Vec<(MultiPoly, Vec<MultiPoly>)> = block_permutations(&alphas(k))
        .iter()
        .map(|map| (base.poly().rename(map), frac_dens.iter().map(|d| d.rename(map)).collect()))
        .collect();
    Ok(TruncatedSeries::new(&sum_fractions(&terms, Some(cap))?, cap))
}

pub fn schubert_cell_classes(set: &ColumnSet, variant: SchubertVariant, cap: u32) -> Result<SchubertCellClass> {
    if !set.is_full_rank() {
        return arg(format!("{set} does not have full rank k = {}", set.k()));
    }
    let (k, n, i) = (set.k(), set.n(), set.elems().to_vec());
    let lambda = lambda_of_set(set);
    let mut num_factors = Vec::new();
    let mut frac_dens = Vec::new();
    let mut series_dens = Vec::new();
    for u in 1..=k {
        if variant == SchubertVariant::MatrixSsm {
            series_dens.push(bw1(i[u - 1], u));
            for v in 1..i[u - 1] {
                num_factors.push(bw(v, u));
                series_dens.push(bw1(v, u));
            }
        } else {
            num_factors.extend((i[u - 1] + 1..=n).map(|v| bw1(v, u)));
            num_factors.extend((1..i[u - 1]).map(|v| bw(v, u)));
        }
        for v in u + 1..=k {
            frac_dens.push(&alpha(u) - &alpha(v));
            match variant {
                SchubertVariant::GrassmannianCsm => series_dens.push(&MultiPoly::one() + &(&alpha(v) - &alpha(u))),
                _ => num_factors.push(&MultiPoly::one() + &(&alpha(u) - &alpha(v))),
            }
        }
    }
    let num = product(&num_factors);
    let value = match variant {
        SchubertVariant::MatrixCsm => ClassValue::Poly(symmetrize(&num, &frac_dens, &alphas(k))?),
        _ => ClassValue::Series(sym_series(&num, &frac_dens, &series_dens, k, cap)?),
    };
    let expr = match variant {
        SchubertVariant::MatrixCsm => fcsm_expr(&lambda, k, NParam::Finite(n))?,
        SchubertVariant::MatrixSsm => fssm_expr(&lambda, k, NParam::Infinite)?,
        SchubertVariant::GrassmannianCsm => {
            let mut numer = Vec::new();
            let mut dens = Vec::new();
            for j in 1..=k {
                numer.push(z(j).pow(lambda[j - 1]));
                numer.push((&MultiPoly::one() + &z(j)).pow((n - i[k - j]) as u32));
                for a in j + 1..=k {
                    dens.push((DenFactor::new(vec![(a, 1), (j, -1)])?, 1));
                }
            }
            RationalSeriesExpr::new(k, product(&numer), dens)?
        }
    };
    Ok(SchubertCellClass { variant, value, generating: sss_expand(&expr, cap)? })
}

/// `(-1)^{|mu|} s_mu`-basis coefficients that are negative among partitions
/// inside the `k x (n-k)` rectangle, for the Grassmannian CSM class.
pub fn rectangle_negative_coefficients(set: &ColumnSet) -> Result<Vec<(crate::schurbasis::Partition, Coeff)>> {
    let (k, n) = (set.k(), set.n());
    let cap = (k * (n - k)) as u32;
    let class = schubert_cell_classes(set, SchubertVariant::GrassmannianCsm, cap)?;
    Ok(class
        .generating
        .terms()
        .filter(|(l, c)| l.len() <= k && l.part(1) as usize <= n - k && *c < &Coeff::zero())
        .map(|(l, c)| (l.clone(), c.clone()))
        .collect())
}

/// `prod_{u,v} (1 + beta_v - alpha_u)`, the total Chern class of `Hom(C^k, C^n)`.
pub fn total_chern_class(k: usize, n: usize) -> MultiPoly {
    let factors: Vec<MultiPoly> = (1..=n).flat_map(|v| (1..=k).map(move |u| bw1(v, u))).collect();
    product(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schurbasis::parse_schur;

    fn cs(k: usize, n: usize, e: &[usize]) -> ColumnSet {
        ColumnSet::new(k, n, e.to_vec()).unwrap()
    }

    #[test]
    fn printed_weight_functions() {
        assert_eq!(weight_function(&cs(1, 2, &[1])).unwrap().to_string(), "1 + b2 - a1");
        assert_eq!(weight_function(&cs(1, 2, &[2])).unwrap(), bw(1, 1));
        assert_eq!(weight_function(&cs(1, 2, &[])).unwrap(), &bw(1, 1) * &bw(2, 1));
        let (b1, b2, a1, a2) = (beta(1), beta(2), alpha(1), alpha(2));
        let expect = &(&(&(&(&MultiPoly::one() + &b1) + &b2) + &(&b1 * &b2).scale(&q(2)))
            - &(&(&a1 + &a2) * &(&b1 + &b2)))
            - &(&(&a1 + &a2) - &(&a1 * &a2).scale(&q(2)));
        assert_eq!(weight_function(&cs(2, 2, &[1, 2])).unwrap(), expect);
    }

    #[test]
    fn residue_form_matches_symmetrization() {
        for k in 1..=3 {
            for n in k..=4 {
                for set in enumerate_orbits(k, n).unwrap() {
                    let w = beta_zero(&weight_function(&set).unwrap(), n);
                    assert_eq!(weight_function_residue_beta0(&set), w, "{set} k={k} n={n}");
                    assert_eq!(weight_function(&set).unwrap().degree(), Degree::Finite((k * n - set.rank()) as u32));
                }
            }
        }
    }

    #[test]
    fn printed_schur_expansions_for_three_one() {
        let set = cs(2, 4, &[2]);
        let csm = csm_cell_beta0(&set).unwrap().schur_expansion(10).unwrap();
        assert_eq!(csm, parse_schur("Sc31 + Sc41 + Sc32 + 2*Sc42 - Sc33 + Sc43", 10).unwrap());
        let ssm = ssm_cell_beta0(&set, 7).unwrap().schur_expansion(7).unwrap();
        let expect = parse_schur("Sc31 - 3*Sc41 - 3*Sc32 + 6*Sc51 + 10*Sc42 + 5*Sc33 - 10*Sc61 - 22*Sc52 - 17*Sc43", 7).unwrap();
        assert_eq!(ssm, expect);
        assert!(ssm_cell(&set, 3).is_err());
    }

    #[test]
    fn torus_example() {
        let (a, b) = (alpha(1), beta(1));
        let weights = vec![a.clone(), b.scale(&q(2)), MultiPoly::zero()];
        let x = Region::zero_locus(&[1]);
        let y = Region::zero_locus(&[2]);
        let csm = |r: &Region| csm_coordinate_arrangement(&weights, r).unwrap();
        assert_eq!(csm(&x), &(&MultiPoly::one() + &b.scale(&q(2))) * &a);
        assert_eq!(csm(&y), &(&MultiPoly::one() + &a) * &b.scale(&q(2)));
        assert_eq!(csm(&Region::Intersection(vec![x.clone(), y.clone()])), (&a * &b).scale(&q(2)));
        let union = &(&a + &b.scale(&q(2))) + &(&a * &b).scale(&q(2));
        assert_eq!(csm(&Region::Union(vec![x, y])), union);
        assert_eq!(csm(&Region::whole()), &(&MultiPoly::one() + &a) * &(&MultiPoly::one() + &b.scale(&q(2))));
        assert!(csm_coordinate_arrangement(&weights, &Region::zero_locus(&[4])).is_err());
    }

    #[test]
    fn axioms_hold_for_weight_functions() {
        let classes: BTreeMap<ColumnSet, MultiPoly> = enumerate_orbits(2, 3)
            .unwrap()
            .into_iter()
            .map(|s| {
                let w = weight_function(&s).unwrap();
                (s, w)
            })
            .collect();
        let report = verify_interpolation_axioms(&classes, 2, 3).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let mut broken = classes.clone();
        let top = cs(2, 3, &[1, 2]);
        let perturbed = &broken[&top] + &euler_class(2, 3);
        broken.insert(top, perturbed);
        assert!(!verify_interpolation_axioms(&broken, 2, 3).unwrap().all_passed());
        let trivial: BTreeMap<_, _> = [(cs(0, 2, &[]), MultiPoly::one())].into_iter().collect();
        assert!(verify_interpolation_axioms(&trivial, 0, 2).unwrap().all_passed());
    }

    #[test]
    fn schubert_variants_at_k_one() {
        for n in 1..=4 {
            for j in 1..=n {
                let set = cs(1, n, &[j]);
                let c = schubert_cell_classes(&set, SchubertVariant::MatrixCsm, 8).unwrap();
                let ClassValue::Poly(p) = &c.value else { panic!() };
                assert_eq!(*p, weight_function(&set).unwrap());
                let g = schubert_cell_classes(&set, SchubertVariant::GrassmannianCsm, 8).unwrap();
                let ClassValue::Series(s) = &g.value else { panic!() };
                let sym = symmetric_to_schur(&beta_zero(s.poly(), n), 1, 8).unwrap();
                assert_eq!(sym, g.generating.filter(|l| l.len() <= 1));
            }
        }
    }
}
