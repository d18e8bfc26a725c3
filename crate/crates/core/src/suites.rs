//! Batch cross-checks between independent routes to the same classes.
//!
//! Each suite returns one [`CheckLine`] per compared instance; lines are
//! produced in a fixed order regardless of how the work is scheduled.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::a2pp::{
    d_positivity, fundamental_class_sigma, phi_class, phi_support_ok, sieve_forward_checks, ssm_sigma_sieve,
    ssm_sigma_tssm, supersymmetry_check, PhiMethod,
};
use crate::cellgeom::{enumerate_orbits, lambda_of_set, ColumnSet};
use crate::error::{arg, Error, Result};
use crate::genfun::{check_sum_to_one, class_via_genfun, raising_shift_check, scan_alternating_signs, ssm_orbit_tssm_expansion};
use crate::ringcore::{MultiPoly, TruncatedSeries, Var};
use crate::weightfn::{
    csm_cell_beta0, euler_class, rectangle_negative_coefficients, ssm_cell_beta0, verify_interpolation_axioms,
    weight_function, weight_function_residue_beta0, ClassKind,
};

/// The result of one comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckLine { label: label.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "[{tag}] {}", self.label)
        } else {
            write!(f, "[{tag}] {}: {}", self.label, self.detail)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cap: Option<u32>,
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Symmetrization against the residue form of `W_I` at `beta = 0`.
    WeightResidue,
    /// Weight functions against the `S^{k,0}(F^csm)` and `S^{k,0}(F^ssm)` routes.
    GenfunRoute,
    /// Sums of `tssm` over `Lambda(I)` against the direct SSM class.
    LambdaSum,
    /// The Gamma-shaped `tssm` route against the sieve in `Phi^s`.
    Sieve,
    /// Three-way agreement of the `Phi^s` formulas.
    Phi,
    /// Interpolation conditions for the weight functions and perturbations.
    Axioms,
    /// `Phi^s_{k+1,n+1}(alpha,t;beta,t) = Phi^s_{k,n}(alpha;beta)`.
    Supersymmetry,
    /// `D >= 0`, the alternating-sign scan and in-rectangle positivity.
    Positivity,
    /// `sum tssm = 1`, the raising shift and the lowest graded parts of `Sigma^r`.
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::WeightResidue,
        Suite::GenfunRoute,
        Suite::LambdaSum,
        Suite::Sieve,
        Suite::Phi,
        Suite::Axioms,
        Suite::Supersymmetry,
        Suite::Positivity,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::WeightResidue => "weight-residue",
            Suite::GenfunRoute => "genfun-route",
            Suite::LambdaSum => "lambda-sum",
            Suite::Sieve => "sieve",
            Suite::Phi => "phi",
            Suite::Axioms => "axioms",
            Suite::Supersymmetry => "supersymmetry",
            Suite::Positivity => "positivity",
            Suite::Identities => "identities",
        }
    }

    /// Degree cap used when none is given; `None` for exact suites.
    pub fn default_cap(self) -> Option<u32> {
        match self {
            Suite::WeightResidue | Suite::Axioms => None,
            Suite::GenfunRoute => Some(8),
            Suite::LambdaSum => Some(7),
            Suite::Sieve | Suite::Phi => Some(6),
            Suite::Supersymmetry | Suite::Identities => Some(5),
            Suite::Positivity => Some(9),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map_or_else(|| arg(format!("unknown suite `{s}`")), Ok)
    }
}

/// Runs a suite; `cap` replaces the suite's default cap where it has one.
pub fn run_suite(suite: Suite, cap: Option<u32>) -> Result<SuiteReport> {
    let cap = suite.default_cap().map(|d| cap.unwrap_or(d));
    let c = cap.unwrap_or(0);
    let lines = match suite {
        Suite::WeightResidue => weight_residue()?,
        Suite::GenfunRoute => genfun_route(c)?,
        Suite::LambdaSum => lambda_sum(c)?,
        Suite::Sieve => sieve(c)?,
        Suite::Phi => phi(c)?,
        Suite::Axioms => axioms()?,
        Suite::Supersymmetry => supersymmetry(c)?,
        Suite::Positivity => positivity(c)?,
        Suite::Identities => identities(c)?,
    };
    Ok(SuiteReport { suite, cap, lines })
}

fn orbits_up_to(max_k: usize, max_n: usize) -> Result<Vec<ColumnSet>> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for n in k..=max_n {
            out.extend(enumerate_orbits(k, n)?);
        }
    }
    Ok(out)
}

fn cell_label(set: &ColumnSet) -> String {
    format!("k={} n={} I={set}", set.k(), set.n())
}

fn at_beta_zero(p: &MultiPoly, n: usize) -> MultiPoly {
    p.substitute(&(1..=n).map(|v| (Var::Beta(v as u16), MultiPoly::zero())).collect())
}

fn weight_residue() -> Result<Vec<CheckLine>> {
    orbits_up_to(3, 4)?
        .par_iter()
        .map(|set| {
            let sym = at_beta_zero(&weight_function(set)?, set.n());
            let res = weight_function_residue_beta0(set);
            Ok(CheckLine::new(cell_label(set), sym == res, ""))
        })
        .collect()
}

/// `ssm` at `beta = 0` truncated at `cap`, even when `cap` is below the codimension.
fn ssm_beta0_truncated(set: &ColumnSet, cap: u32) -> Result<TruncatedSeries> {
    let c = cap.max(set.codim() as u32);
    Ok(TruncatedSeries::new(ssm_cell_beta0(set, c)?.poly(), cap))
}

fn genfun_route(cap: u32) -> Result<Vec<CheckLine>> {
    let sets = orbits_up_to(3, 4)?;
    let per_set: Vec<Vec<CheckLine>> = sets
        .par_iter()
        .map(|set| {
            let lambda = lambda_of_set(set);
            let csm = TruncatedSeries::new(csm_cell_beta0(set)?.poly(), cap);
            let csm_gf = class_via_genfun(&lambda, set.k(), set.n(), ClassKind::Csm, cap)?.value;
            let ssm = ssm_beta0_truncated(set, cap)?;
            let ssm_gf = class_via_genfun(&lambda, set.k(), set.n(), ClassKind::Ssm, cap)?.value;
            Ok(vec![
                CheckLine::new(format!("csm {}", cell_label(set)), csm == csm_gf, ""),
                CheckLine::new(format!("ssm {}", cell_label(set)), ssm == ssm_gf, ""),
            ])
        })
        .collect::<Result<_>>()?;
    Ok(per_set.into_iter().flatten().collect())
}

fn lambda_sum(cap: u32) -> Result<Vec<CheckLine>> {
    let sets: Vec<ColumnSet> = (2..=4).map(|n| enumerate_orbits(2, n)).collect::<Result<Vec<_>>>()?.concat();
    sets.par_iter()
        .map(|set| {
            let (mus, _, value) = ssm_orbit_tssm_expansion(set, cap)?;
            let direct = ssm_beta0_truncated(set, cap)?;
            Ok(CheckLine::new(cell_label(set), value == direct, format!("{} tssm terms", mus.len())))
        })
        .collect()
}

fn kn_pairs(max_k: usize, max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_k).flat_map(|k| (k..=max_n).map(move |n| (k, n))).collect()
}

fn sieve(cap: u32) -> Result<Vec<CheckLine>> {
    let jobs: Vec<(usize, usize, usize)> =
        kn_pairs(2, 3).into_iter().flat_map(|(k, n)| (0..=k).map(move |r| (k, n, r))).collect();
    let mut lines: Vec<CheckLine> = jobs
        .par_iter()
        .map(|&(k, n, r)| {
            let gamma = ssm_sigma_tssm(k, n, r, cap)?.value;
            let sieve = ssm_sigma_sieve(k, n, r, cap, PhiMethod::Localization)?;
            Ok(CheckLine::new(format!("sigma k={k} n={n} r={r}"), gamma == sieve, ""))
        })
        .collect::<Result<_>>()?;
    for (k, n) in kn_pairs(2, 3) {
        for c in sieve_forward_checks(k, n, cap, PhiMethod::Localization)? {
            lines.push(CheckLine::new(
                format!("forward relations k={k} n={n} r={}", c.r),
                c.passed(),
                format!("open={} closure={} additivity={}", c.forward_open, c.forward_closure, c.additivity),
            ));
        }
    }
    Ok(lines)
}

fn phi(cap: u32) -> Result<Vec<CheckLine>> {
    let jobs: Vec<(usize, usize, usize)> =
        kn_pairs(3, 4).into_iter().flat_map(|(k, n)| (1..=k).map(move |s| (s, k, n))).collect();
    jobs.par_iter()
        .map(|&(s, k, n)| {
            let classes = PhiMethod::ALL
                .iter()
                .map(|&m| phi_class(s, k, n, cap, m))
                .collect::<Result<Vec<_>>>()?;
            let agree = classes.windows(2).all(|w| w[0].value == w[1].value);
            let support = classes.iter().filter_map(|c| c.schur.as_ref()).all(|sc| phi_support_ok(sc, s));
            Ok(CheckLine::new(
                format!("phi s={s} k={k} n={n}"),
                agree && support,
                format!("methods agree={agree} support={support}"),
            ))
        })
        .collect()
}

/// Adds `c * m * e(V)` to the class of a random orbit, with `c` a nonzero
/// integer and `m` a monomial of degree at most 1, and reports whether the
/// interpolation check notices.
pub fn perturbation_trials(k: usize, n: usize, trials: usize, seed: u64) -> Result<Vec<CheckLine>> {
    let orbits = enumerate_orbits(k, n)?;
    let classes: BTreeMap<ColumnSet, MultiPoly> =
        orbits.iter().map(|s| Ok((s.clone(), weight_function(s)?))).collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars: Vec<Var> = (1..=k).map(|u| Var::Alpha(u as u16)).chain((1..=n).map(|v| Var::Beta(v as u16))).collect();
    let plans: Vec<(ColumnSet, MultiPoly)> = (0..trials)
        .map(|_| {
            let target = orbits[rng.gen_range(0..orbits.len())].clone();
            let mut c = rng.gen_range(-3i64..=3);
            if c == 0 {
                c = 1;
            }
            let pick = rng.gen_range(0..=vars.len());
            let m = if pick == vars.len() { MultiPoly::one() } else { MultiPoly::var(vars[pick]) };
            (target, &m * &MultiPoly::int(c))
        })
        .collect();
    let e = euler_class(k, n);
    plans
        .par_iter()
        .enumerate()
        .map(|(t, (target, factor))| {
            let mut broken = classes.clone();
            let moved = &broken[target] + &(&e * factor);
            broken.insert(target.clone(), moved);
            let report = verify_interpolation_axioms(&broken, k, n)?;
            let caught = report.failures().next().map(|f| format!("axiom {} at ({}, {})", f.axiom, f.omega, f.theta));
            Ok(CheckLine::new(
                format!("perturbation {} k={k} n={n} I={target} by ({factor})*e(V)", t + 1),
                caught.is_some(),
                caught.unwrap_or_else(|| "no failure reported".into()),
            ))
        })
        .collect()
}

fn axioms() -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    for (k, n) in [(2, 3), (3, 3)] {
        let classes: BTreeMap<ColumnSet, MultiPoly> = enumerate_orbits(k, n)?
            .into_iter()
            .map(|s| {
                let w = weight_function(&s)?;
                Ok((s, w))
            })
            .collect::<Result<_>>()?;
        let report = verify_interpolation_axioms(&classes, k, n)?;
        let detail = match report.failures().next() {
            Some(f) => format!("axiom {} fails at ({}, {}): {}", f.axiom, f.omega, f.theta, f.detail),
            None => format!("{} conditions", report.checks.len()),
        };
        lines.push(CheckLine::new(format!("weight functions k={k} n={n}"), report.all_passed(), detail));
    }
    lines.extend(perturbation_trials(2, 3, 10, 7)?);
    lines.extend(perturbation_trials(3, 3, 10, 11)?);
    Ok(lines)
}

fn supersymmetry(cap: u32) -> Result<Vec<CheckLine>> {
    let jobs: Vec<(usize, usize, usize, PhiMethod)> = kn_pairs(2, 3)
        .into_iter()
        .flat_map(|(k, n)| (1..=k).flat_map(move |s| PhiMethod::ALL.into_iter().map(move |m| (s, k, n, m))))
        .collect();
    jobs.par_iter()
        .map(|&(s, k, n, m)| {
            let ok = supersymmetry_check(s, k, n, cap, m)?;
            Ok(CheckLine::new(format!("s={s} k={k} n={n} method={m}"), ok, ""))
        })
        .collect()
}

fn positivity(cap: u32) -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    for s in 1..=3 {
        for l in 0..=2 {
            let witness = d_positivity(s, l, 6)?;
            let detail = witness.map_or_else(String::new, |(mu, nu, d)| format!("D({mu},{nu}) = {d}"));
            lines.push(CheckLine::new(format!("D >= 0 s={s} l={l}"), detail.is_empty(), detail));
        }
    }
    for scan in scan_alternating_signs(5, cap)? {
        let detail = match scan.violations.first() {
            Some(v) => format!("coefficient {} at {}", v.coeff, v.mu),
            None => format!("{} terms", scan.terms_checked),
        };
        lines.push(CheckLine::new(format!("alternating signs tssm_{}", scan.lambda.label()), scan.violations.is_empty(), detail));
    }
    let sets: Vec<ColumnSet> = orbits_up_to(2, 5)?.into_iter().filter(|s| s.is_full_rank()).collect();
    let rect: Vec<CheckLine> = sets
        .par_iter()
        .map(|set| {
            let neg = rectangle_negative_coefficients(set)?;
            let detail = neg.first().map_or_else(String::new, |(l, c)| format!("coefficient {c} at {l}"));
            Ok(CheckLine::new(format!("rectangle positivity {}", cell_label(set)), neg.is_empty(), detail))
        })
        .collect::<Result<_>>()?;
    lines.extend(rect);
    Ok(lines)
}

fn identities(cap: u32) -> Result<Vec<CheckLine>> {
    let mut lines = vec![
        CheckLine::new(format!("sum of tssm through {cap}"), check_sum_to_one(cap)?, ""),
        CheckLine::new("raising shift lambda=31 k=2 n=5", raising_shift_check(&[3, 1], 2, 5, 2)?, ""),
    ];
    let jobs: Vec<(usize, usize, usize)> =
        kn_pairs(2, 3).into_iter().flat_map(|(k, n)| (0..=k).map(move |r| (k, n, r))).collect();
    let lowest: Vec<CheckLine> = jobs
        .par_iter()
        .map(|&(k, n, r)| {
            let fc = fundamental_class_sigma(k, n, r)?;
            let d = fc.min_degree().unwrap_or(0);
            let sieve = ssm_sigma_sieve(k, n, r, cap, PhiMethod::Localization)?;
            let gamma = ssm_sigma_tssm(k, n, r, cap)?.value;
            let ok = d > cap
                || (sieve.poly().homogeneous_part(d) == fc
                    && gamma.poly().homogeneous_part(d) == fc
                    && sieve.poly().min_degree() == Some(d));
            Ok(CheckLine::new(format!("lowest part of sigma k={k} n={n} r={r}"), ok, format!("degree {d}")))
        })
        .collect::<Result<_>>()?;
    lines.extend(lowest);
    Ok(lines)
}
