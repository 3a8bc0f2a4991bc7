//! Partitions and compositions.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing with
//! trailing zeros trimmed, so `(3,1,0)` and `(3,1)` compare equal. Operations
//! that need a fixed number of rows pad with zeros on demand.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros. Fails if `parts` is not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| u64::from(x)).sum()
    }

    /// Part `i` (0-based); zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    /// Dominance order: `true` iff `self` dominates `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        dominates(self, other)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Multiplicity of each part value, as `(value, count)` pairs in
    /// decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,3,3"`; an empty string (or `"0"`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

pub(crate) fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))).collect()
}

/// A finite sequence of nonnegative integers with no monotonicity
/// requirement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `true` iff `lhs` dominates `rhs`: equal sizes and every prefix sum of
/// `rhs` is at most the corresponding prefix sum of `lhs`. Unequal sizes give
/// `false`.
pub fn dominates(lhs: &Partition, rhs: &Partition) -> bool {
    if lhs.size() != rhs.size() {
        return false;
    }
    let n = lhs.len().max(rhs.len());
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..n {
        a += u64::from(lhs.part(i));
        b += u64::from(rhs.part(i));
        if b > a {
            return false;
        }
    }
    true
}

/// Strict dominance: dominates and differs.
pub fn strictly_dominates(lhs: &Partition, rhs: &Partition) -> bool {
    lhs != rhs && dominates(lhs, rhs)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.part(0) as usize;
    let parts = (1..=width as u32).map(|j| lambda.parts.iter().take_while(|&&x| x >= j).count() as u32).collect();
    Partition { parts }
}

/// Column `l`-regular: every consecutive difference, including the last part
/// against zero, is below `l`.
pub fn is_column_regular(lambda: &Partition, l: u32) -> bool {
    let p = lambda.padded(lambda.len() + 1);
    p.windows(2).all(|w| w[0] - w[1] < l)
}

/// Row `l`-regular: no nonzero part is repeated `l` or more times.
pub fn is_row_regular(lambda: &Partition, l: u32) -> bool {
    lambda.multiplicities().iter().all(|&(_, c)| c < l as usize)
}

/// `nu(mu, d, t)`: moves `t` from row `d+1` up to row `d` (rows 1-based).
pub fn nu_composition(mu: &Partition, d: usize, t: u32) -> Result<Composition> {
    if d == 0 {
        return Err(Error::OutOfRange("row index d must be positive".into()));
    }
    let below = mu.part(d);
    if t > below {
        return Err(Error::OutOfRange(format!("t = {t} exceeds mu_{} = {below}", d + 1)));
    }
    let mut parts = mu.padded(d + 1);
    parts[d - 1] += t;
    parts[d] -= t;
    Ok(Composition::new(parts))
}

/// All partitions of `r`, in reverse lexicographic order.
pub fn partitions_of(r: u32) -> Vec<Partition> {
    partitions_bounded(r, r, usize::MAX)
}

/// Partitions of `r` with parts at most `max_part` and at most `max_len`
/// rows, in reverse lexicographic order.
pub fn partitions_bounded(r: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(r: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if r == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for k in (1..=r.min(max_part)).rev() {
            cur.push(k);
            rec(r - k, k, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[0]).size(), 0);
        assert_eq!("4,3,3".parse::<Partition>().unwrap(), p(&[4, 3, 3]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[3, 1]), &p(&[2, 2])));
        assert!(!dominates(&p(&[2, 2]), &p(&[3, 1])));
        assert!(!dominates(&p(&[3, 1]), &p(&[2, 1])));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[4, 2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        let l = p(&[5, 5, 2]);
        assert_eq!(conjugate(&conjugate(&l)), l);
    }

    #[test]
    fn regularity_examples() {
        assert!(!is_column_regular(&p(&[3, 1]), 2));
        assert!(is_row_regular(&p(&[3, 1]), 2));
        assert!(!is_row_regular(&p(&[2, 2, 2]), 3));
        // column regularity also checks the last part against zero
        assert!(!is_column_regular(&p(&[2]), 2));
    }

    #[test]
    fn nu_examples() {
        let mu = p(&[4, 3, 3]);
        assert_eq!(nu_composition(&mu, 2, 1).unwrap().parts(), &[4, 4, 2]);
        assert_eq!(nu_composition(&mu, 2, 0).unwrap().parts(), &[4, 3, 3]);
        assert_eq!(nu_composition(&mu, 1, 3).unwrap().parts(), &[7, 0, 3]);
        assert!(nu_composition(&mu, 1, 4).is_err());
        assert!(nu_composition(&mu, 3, 1).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|r| partitions_of(r).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
