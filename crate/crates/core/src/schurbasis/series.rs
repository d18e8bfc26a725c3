use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::partition::{straighten, Partition, Straightened};
use crate::ringcore::Coeff;

/// A formal sum of Schur symbols `Sc_lambda`, known through weight `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurSeries {
    terms: BTreeMap<Partition, Coeff>,
    cap: u32,
}

impl SchurSeries {
    pub fn new(cap: u32) -> Self {
        SchurSeries { terms: BTreeMap::new(), cap }
    }

    pub fn single(lambda: Partition, cap: u32) -> Self {
        let mut s = Self::new(cap);
        s.add_term(lambda, Coeff::one());
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn add_term(&mut self, lambda: Partition, c: Coeff) {
        if c.is_zero() || lambda.weight() > self.cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
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

    /// Adds `c * Sc_v` for an arbitrary integer vector, straightening first.
    pub fn add_symbol(&mut self, v: &[i64], c: Coeff) {
        if let Straightened::Term { sign, partition } = straighten(v) {
            self.add_term(partition, if sign < 0 { -c } else { c });
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in canonical order: by weight, then reverse lexicographic.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, cap: u32) -> SchurSeries {
        let cap = cap.min(self.cap);
        SchurSeries {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() <= cap)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
            cap,
        }
    }

    pub fn add(&self, other: &SchurSeries) -> SchurSeries {
        let mut out = self.truncate(other.cap);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SchurSeries) -> SchurSeries {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn add_assign(&mut self, other: &SchurSeries) {
        self.cap = self.cap.min(other.cap);
        self.terms.retain(|l, _| l.weight() <= other.cap);
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Coeff) -> SchurSeries {
        if c.is_zero() {
            return SchurSeries::new(self.cap);
        }
        SchurSeries {
            terms: self.terms.iter().map(|(l, a)| (l.clone(), a * c)).collect(),
            cap: self.cap,
        }
    }

    /// Terms of weight exactly `d`.
    pub fn homogeneous(&self, d: u32) -> Vec<(&Partition, &Coeff)> {
        self.terms.iter().filter(|(l, _)| l.weight() == d).collect()
    }

    pub fn lowest_weight(&self) -> Option<u32> {
        self.terms.keys().map(|l| l.weight()).min()
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> SchurSeries {
        SchurSeries {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
            cap: self.cap,
        }
    }
}

impl fmt::Display for SchurSeries {
    /// `Sc0 - Sc1 + Sc2 + Sc11`; coefficients other than one are written
    /// `3*Sc31`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "Sc{}", l.label())?;
            } else {
                write!(f, "{abs}*Sc{}", l.label())?;
            }
        }
        Ok(())
    }
}

/// Parses the text form produced by `Display`, e.g. `Sc31 - 3*Sc41`.
/// Only single-digit parts are supported in the compact label form; the
/// parenthesized form `Sc(10,2)` is accepted too.
pub fn parse_schur(text: &str, cap: u32) -> Result<SchurSeries, String> {
    let mut out = SchurSeries::new(cap);
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0;
    for ch in cleaned.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if !cur.is_empty() {
                    chunks.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    if !cur.is_empty() {
        chunks.push((neg, cur));
    }
    for (neg, chunk) in chunks {
        let (coeff, sym) = match chunk.split_once('*') {
            Some((c, s)) => (c.parse::<Coeff>().map_err(|e| format!("{chunk}: {e}"))?, s.to_string()),
            None => (Coeff::one(), chunk.clone()),
        };
        let label = sym.strip_prefix("Sc").ok_or_else(|| format!("bad term `{chunk}`"))?;
        let parts: Vec<u32> = if let Some(inner) = label.strip_prefix('(') {
            inner
                .trim_end_matches(')')
                .split(',')
                .map(|x| x.parse::<u32>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?
        } else {
            label
                .chars()
                .map(|d| d.to_digit(10).ok_or_else(|| format!("bad label `{label}`")))
                .collect::<Result<_, _>>()?
        };
        let lambda = Partition::new(parts).map_err(|e| e.to_string())?;
        out.add_term(lambda, if neg { -coeff } else { coeff });
    }
    Ok(out)
}
