//! Orbits of `GL_k x B_n^-` on `Hom(C^k, C^n)` (matrix Schubert cells):
//! enumeration, the conversion between column sets and partitions, tangent
//! and normal positions, the closure order, and the restriction maps `phi_J`.
//!
//! A matrix has rows `v = 1..n` and columns `u = 1..k`; the cell `Omega_J`
//! consists of the matrices whose top `r` rows have rank `|J cap [r]|`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{arg, Result};
use crate::ringcore::{product, MultiPoly, Var};

/// A subset `{j_1 < ... < j_d}` of `{1..n}` with `d <= k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnSet {
    k: usize,
    n: usize,
    elems: Vec<usize>,
}

impl ColumnSet {
    pub fn new(k: usize, n: usize, elems: impl Into<Vec<usize>>) -> Result<Self> {
        let mut elems: Vec<usize> = elems.into();
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return arg(format!("repeated element in {elems:?}"));
        }
        if let Some(&bad) = elems.iter().find(|&&e| e == 0 || e > n) {
            return arg(format!("element {bad} outside 1..{n}"));
        }
        if elems.len() > k {
            return arg(format!("{} elements exceed k = {k}", elems.len()));
        }
        Ok(ColumnSet { k, n, elems })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    /// `d = |J|`.
    pub fn rank(&self) -> usize {
        self.elems.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.elems.len() == self.k
    }

    /// `|J cap {1..r}|` for `r = 0..n`.
    pub fn rank_vector(&self) -> Vec<usize> {
        (0..=self.n).map(|r| self.elems.iter().filter(|&&e| e <= r).count()).collect()
    }

    /// Complex codimension of the cell in `Hom(C^k, C^n)`.
    pub fn codim(&self) -> usize {
        cell_geometry(self).normal.len()
    }
}

impl fmt::Display for ColumnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elems.iter().join(","))
    }
}

/// All cells for `(k, n)`: subsets of size at most `k`, by size descending,
/// then lexicographically.
pub fn enumerate_orbits(k: usize, n: usize) -> Result<Vec<ColumnSet>> {
    if k > n {
        return arg(format!("k = {k} exceeds n = {n}"));
    }
    let mut out = Vec::new();
    for d in (0..=k).rev() {
        for c in (1..=n).combinations(d) {
            out.push(ColumnSet { k, n, elems: c });
        }
    }
    Ok(out)
}

/// `lambda_a = i_{k+1-a} - (k+1-a)`, padding `i_{d+a} = n + a`.
pub fn lambda_of_set(set: &ColumnSet) -> Vec<u32> {
    let padded = padded_set(set);
    (1..=set.k).map(|a| (padded[set.k - a] - (set.k + 1 - a)) as u32).collect()
}

/// `I_lambda` before intersecting with `{1..n}`: `i_a = lambda_{k+1-a} + a`.
pub fn padded_set(set: &ColumnSet) -> Vec<usize> {
    let d = set.elems.len();
    let mut out = set.elems.clone();
    out.extend((1..=set.k - d).map(|a| set.n + a));
    out
}

/// Inverse of [`lambda_of_set`]. The entries of `I_lambda` above `n` must be
/// exactly `n+1, ..., n+q`.
pub fn set_of_lambda(lambda: &[u32], k: usize, n: usize) -> Result<ColumnSet> {
    if lambda.len() > k {
        return arg(format!("lambda {lambda:?} has more than k = {k} parts"));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return arg(format!("lambda {lambda:?} is not weakly decreasing"));
    }
    let part = |a: usize| lambda.get(a - 1).copied().unwrap_or(0) as usize;
    let full: Vec<usize> = (1..=k).map(|a| part(k + 1 - a) + a).collect();
    let mut inside = Vec::new();
    let mut expected = n + 1;
    for &i in &full {
        if i <= n {
            inside.push(i);
        } else if i == expected {
            expected += 1;
        } else {
            return arg(format!(
                "lambda {lambda:?} is not compatible with n = {n}: I_lambda contains {i} but not {expected}"
            ));
        }
    }
    ColumnSet::new(k, n, inside)
}

/// Matrix position `(v, u)`: row `v` in `1..n`, column `u` in `1..k`.
pub type Position = (usize, usize);

/// The position sets `A_0..A_4`, tangent and normal positions of a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellGeometry {
    pub set: ColumnSet,
    pub a0: BTreeSet<Position>,
    pub a1: BTreeSet<Position>,
    pub a2: BTreeSet<Position>,
    pub a3: BTreeSet<Position>,
    pub a4: BTreeSet<Position>,
    pub tangent: BTreeSet<Position>,
    pub normal: BTreeSet<Position>,
}

pub fn cell_geometry(set: &ColumnSet) -> CellGeometry {
    let (k, n, j) = (set.k, set.n, &set.elems);
    let d = j.len();
    let all = (1..=n).cartesian_product(1..=k);
    let pick = |f: &dyn Fn(usize, usize) -> bool| -> BTreeSet<Position> {
        all.clone().filter(|&(v, u)| f(v, u)).collect()
    };
    let a0 = pick(&|v, u| u <= d && v == j[u - 1]);
    let a1 = pick(&|v, u| u <= d && v < j[u - 1]);
    let a2 = pick(&|v, u| u <= d && v > j[u - 1]);
    let a3 = pick(&|_, u| u > d);
    let a4 = pick(&|v, u| (1..=d).any(|w| v == j[w - 1] && u > w));
    let tangent: BTreeSet<Position> = a0.iter().chain(&a2).chain(&a4).copied().collect();
    let normal = pick(&|v, u| !tangent.contains(&(v, u)));
    CellGeometry { set: set.clone(), a0, a1, a2, a3, a4, tangent, normal }
}

impl CellGeometry {
    pub fn dim(&self) -> usize {
        self.tangent.len()
    }

    pub fn codim(&self) -> usize {
        self.normal.len()
    }

    /// The representative `M_J`: one at `(j_u, u)`, zero elsewhere.
    pub fn representative(&self) -> Vec<Vec<u8>> {
        let (k, n) = (self.set.k, self.set.n);
        let mut m = vec![vec![0u8; k]; n];
        for (u, &v) in self.set.elems.iter().enumerate() {
            m[v - 1][u] = 1;
        }
        m
    }

    /// Row strings: `1` on `A_0`, `*` on the other tangent positions, `0` elsewhere.
    pub fn pattern(&self) -> Vec<String> {
        (1..=self.set.n)
            .map(|v| {
                (1..=self.set.k)
                    .map(|u| {
                        if self.a0.contains(&(v, u)) {
                            '1'
                        } else if self.tangent.contains(&(v, u)) {
                            '*'
                        } else {
                            '0'
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `phi_J(1 + beta_v - alpha_u)` over tangent positions.
    pub fn tangent_factors(&self) -> Vec<MultiPoly> {
        self.tangent
            .iter()
            .map(|&(v, u)| &MultiPoly::one() + &phi_restriction(&weight(v, u), &self.set))
            .collect()
    }

    /// `phi_J(beta_v - alpha_u)` over normal positions.
    pub fn normal_factors(&self) -> Vec<MultiPoly> {
        self.normal
            .iter()
            .map(|&(v, u)| phi_restriction(&weight(v, u), &self.set))
            .collect()
    }

    /// `c(T_J) e(N_J)` restricted to the cell.
    pub fn chern_times_euler(&self) -> MultiPoly {
        &product(&self.tangent_factors()) * &product(&self.normal_factors())
    }
}

/// The torus weight `beta_v - alpha_u` of matrix entry `(v, u)`.
pub fn weight(v: usize, u: usize) -> MultiPoly {
    MultiPoly::linear(0, &[(Var::Beta(v as u16), 1), (Var::Alpha(u as u16), -1)])
}

/// `Omega_J` lies in the closure of `Omega_I` iff `|J cap [r]| <= |I cap [r]|` for all `r`.
pub fn closure_leq(j: &ColumnSet, i: &ColumnSet) -> Result<bool> {
    if (j.k, j.n) != (i.k, i.n) {
        return arg(format!(
            "dimension mismatch: ({}, {}) versus ({}, {})",
            j.k, j.n, i.k, i.n
        ));
    }
    Ok(j.rank_vector().iter().zip(i.rank_vector()).all(|(a, b)| *a <= b))
}

/// `phi_J`: `alpha_u -> beta_{j_u}` for `u <= d`; all other variables fixed.
pub fn phi_restriction(p: &MultiPoly, set: &ColumnSet) -> MultiPoly {
    let assignment: HashMap<Var, MultiPoly> = set
        .elems
        .iter()
        .enumerate()
        .map(|(u, &j)| (Var::Alpha(u as u16 + 1), MultiPoly::var(Var::Beta(j as u16))))
        .collect();
    p.substitute(&assignment)
}
