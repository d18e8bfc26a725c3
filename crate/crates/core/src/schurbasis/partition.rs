use std::cmp::Ordering;
use std::fmt;

use crate::error::{arg, Result};

/// A finite integer sequence indexing a (possibly fake) Schur symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        IntVector(entries.into())
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl From<&Partition> for IntVector {
    fn from(p: &Partition) -> Self {
        IntVector(p.parts().iter().map(|&x| x as i64).collect())
    }
}

/// A partition in canonical form: positive, weakly decreasing parts.
///
/// Ordered by weight, then reverse lexicographically, so that within one
/// degree `(4) < (3,1) < (2,2) < (2,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros. Errors when the parts
    /// are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return arg(format!("{parts:?} is not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lambda_i` with one-based index; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// Adds `by` to each of the first `count` parts (padding with zeros).
    pub fn shift_first(&self, count: usize, by: u32) -> Partition {
        let mut parts = self.0.clone();
        if parts.len() < count {
            parts.resize(count, 0);
        }
        for p in parts.iter_mut().take(count) {
            *p += by;
        }
        Partition::from_unsorted(parts)
    }

    /// Compact text form: `31`, `211`, or `(10,2)` when a part exceeds 9.
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            format!("({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Result of straightening a Schur symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Term { sign: i8, partition: Partition },
}

/// Rewrites `Sc_v` as `+-Sc_lambda` or zero using
/// `Sc_{..,a,b,..} = -Sc_{..,b-1,a+1,..}` and `Sc_{..,a,a+1,..} = 0`.
///
/// In the shifted coordinates `l_i = v_i - i` the first rule is an adjacent
/// transposition and the second says two equal entries give zero, so the
/// rewriting is an insertion sort of `l` counting transpositions.
pub fn straighten(v: &[i64]) -> Straightened {
    let mut buf = [0i64; 48];
    if v.len() <= buf.len() {
        straighten_in(&mut buf[..v.len()], v)
    } else {
        let mut big = vec![0i64; v.len()];
        straighten_in(&mut big, v)
    }
}

fn straighten_in(l: &mut [i64], v: &[i64]) -> Straightened {
    for (i, (&x, slot)) in v.iter().zip(l.iter_mut()).enumerate() {
        *slot = x - i as i64;
    }
    let mut negative = false;
    for i in 1..l.len() {
        let mut j = i;
        while j > 0 && l[j - 1] < l[j] {
            l.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
        if j > 0 && l[j - 1] == l[j] {
            return Straightened::Zero;
        }
    }
    let mut parts: Vec<u32> = Vec::with_capacity(l.len());
    for (i, &x) in l.iter().enumerate() {
        let p = x + i as i64;
        if p < 0 {
            // Parts are weakly decreasing, so everything from here on is
            // nonpositive; a negative one kills the determinant.
            return Straightened::Zero;
        }
        parts.push(p as u32);
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Straightened::Term { sign: if negative { -1 } else { 1 }, partition: Partition(parts) }
}

/// Applies the two local rules in a caller-chosen order until none applies.
/// Used to check that straightening is confluent.
pub fn straighten_by_rules(v: &[i64], mut choose: impl FnMut(&[usize]) -> usize) -> Straightened {
    let mut a = v.to_vec();
    let mut sign = 1i8;
    loop {
        let mut applicable = Vec::new();
        for i in 0..a.len().saturating_sub(1) {
            if a[i] + 1 == a[i + 1] {
                return Straightened::Zero;
            }
            if a[i] < a[i + 1] {
                applicable.push(i);
            }
        }
        if applicable.is_empty() {
            break;
        }
        let i = applicable[choose(&applicable) % applicable.len()];
        let (x, y) = (a[i], a[i + 1]);
        a[i] = y - 1;
        a[i + 1] = x + 1;
        sign = -sign;
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    if a.last().is_some_and(|&x| x < 0) {
        return Straightened::Zero;
    }
    Straightened::Term { sign, partition: Partition(a.into_iter().map(|x| x as u32).collect()) }
}

/// All partitions of `n`, in the canonical order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with parts at most `max_part` and length at most `max_len`,
/// in the canonical order (reverse lexicographic).
pub fn partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(rest: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `cap`, in the canonical order.
pub fn partitions_up_to(cap: u32) -> Vec<Partition> {
    (0..=cap).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&[3, 4]), Straightened::Zero);
        assert_eq!(straighten(&[3, 5]), Straightened::Term { sign: -1, partition: p(&[4, 4]) });
        assert_eq!(straighten(&[3, 1, 0]), Straightened::Term { sign: 1, partition: p(&[3, 1]) });
        assert_eq!(straighten(&[0, -1]), Straightened::Zero);
        assert_eq!(straighten(&[]), Straightened::Term { sign: 1, partition: Partition::empty() });
        assert_eq!(straighten(&[-1, 1]), Straightened::Term { sign: -1, partition: Partition::empty() });
    }

    #[test]
    fn confluence_on_small_vectors() {
        let range: Vec<i64> = (-2..=6).collect();
        for len in 0..=4u32 {
            let total = range.len().pow(len);
            for idx in 0..total {
                let mut v = Vec::new();
                let mut x = idx;
                for _ in 0..len {
                    v.push(range[x % range.len()]);
                    x /= range.len();
                }
                let expected = straighten(&v);
                assert_eq!(straighten_by_rules(&v, |_| 0), expected, "{v:?}");
                let mut flip = 0usize;
                let got = straighten_by_rules(&v, |opts| {
                    flip += 1;
                    opts.len() - 1 + flip
                });
                assert_eq!(got, expected, "{v:?}");
            }
        }
    }

    #[test]
    fn partitions_fix_themselves() {
        for lam in partitions_up_to(8) {
            let v: IntVector = (&lam).into();
            assert_eq!(straighten(&v.0), Straightened::Term { sign: 1, partition: lam });
        }
    }

    #[test]
    fn partition_basics() {
        assert_eq!(p(&[3, 1, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(4)[0], p(&[4]));
        assert!(p(&[4]) < p(&[3, 1]));
        assert!(p(&[1, 1, 1]) < p(&[4]));
        assert_eq!(p(&[3, 1]).label(), "31");
        assert_eq!(p(&[10, 2]).label(), "(10,2)");
        assert_eq!(partitions_bounded(4, 2, 2), vec![p(&[2, 2])]);
    }
}
