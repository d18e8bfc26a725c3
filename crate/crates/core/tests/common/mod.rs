//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use ssm_core::cellgeom::{enumerate_orbits, ColumnSet};
use ssm_core::ringcore::{MultiPoly, TruncatedSeries};
use ssm_core::schurbasis::Partition;
use ssm_core::weightfn::ssm_cell;

type Point = (i64, i64);

/// Paths from `(a, 0)` to `(0, b)` with unit steps left or up that avoid
/// the `blocked` points, by dynamic programming over the grid.
fn count_paths(a: i64, b: i64, blocked: &HashSet<Point>) -> u128 {
    let (w, h) = (a as usize + 1, b as usize + 1);
    let mut ways = vec![vec![0u128; h]; w];
    for x in (0..=a).rev() {
        for y in 0..=b {
            if blocked.contains(&(x, y)) {
                continue;
            }
            let v = if (x, y) == (a, 0) {
                1
            } else {
                let from_right = if x < a { ways[x as usize + 1][y as usize] } else { 0 };
                let from_below = if y > 0 { ways[x as usize][y as usize - 1] } else { 0 };
                from_right + from_below
            };
            ways[x as usize][y as usize] = v;
        }
    }
    ways[0][b as usize]
}

fn all_paths(a: i64, b: i64) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    let mut cur = vec![(a, 0)];
    fn rec(x: i64, y: i64, b: i64, cur: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if x == 0 && y == b {
            out.push(cur.clone());
            return;
        }
        if x > 0 {
            cur.push((x - 1, y));
            rec(x - 1, y, b, cur, out);
            cur.pop();
        }
        if y < b {
            cur.push((x, y + 1));
            rec(x, y + 1, b, cur, out);
            cur.pop();
        }
    }
    rec(a, 0, b, &mut cur, &mut out);
    out
}

/// Number of families of vertex-disjoint lattice paths `P_i -> Q_i` with
/// `P_i = (mu_i + s - i, 0)` and `Q_i = (0, nu_i + s + l - i)`. The first
/// `s - 1` paths are enumerated; the last is counted around them.
pub fn lgv_count(mu: &Partition, nu: &Partition, s: usize, l: usize) -> u128 {
    let src: Vec<i64> = (1..=s).map(|i| mu.part(i) as i64 + (s - i) as i64).collect();
    let dst: Vec<i64> = (1..=s).map(|j| nu.part(j) as i64 + (s + l - j) as i64).collect();
    fn rec(i: usize, src: &[i64], dst: &[i64], blocked: &mut HashSet<Point>) -> u128 {
        if i + 1 == src.len() {
            return count_paths(src[i], dst[i], blocked);
        }
        let mut total = 0;
        for path in all_paths(src[i], dst[i]) {
            if path.iter().any(|p| blocked.contains(p)) {
                continue;
            }
            for p in &path {
                blocked.insert(*p);
            }
            total += rec(i + 1, src, dst, blocked);
            for p in &path {
                blocked.remove(p);
            }
        }
        total
    }
    if s == 0 {
        return 1;
    }
    rec(0, &src, &dst, &mut HashSet::new())
}

/// `ssm` of `Sigma^r_{k,n}` as the sum of the SSM classes of the cells of
/// rank `k - r` it is the union of.
pub fn sigma_from_cells(k: usize, n: usize, r: usize, cap: u32) -> TruncatedSeries {
    let mut total = MultiPoly::zero();
    for set in enumerate_orbits(k, n).unwrap().iter().filter(|s: &&ColumnSet| s.rank() == k - r) {
        let c = ssm_cell(set, cap.max(set.codim() as u32)).unwrap();
        total += &c.poly().truncate(cap);
    }
    TruncatedSeries::from_poly(total, cap)
}
