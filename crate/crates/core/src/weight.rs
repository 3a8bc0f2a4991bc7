//! Dominant weights of `GL_n` and the `(p, l)` field parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{parse_list, Partition};

/// A weakly decreasing integer vector of fixed rank. Entries may be
/// negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!("{entries:?} is not dominant")));
        }
        Ok(Self { entries })
    }

    /// Embeds a partition as a weight of rank `n`, padding with zeros.
    pub fn from_partition(lambda: &Partition, n: usize) -> Result<Self> {
        if lambda.len() > n {
            return Err(Error::RankMismatch(lambda.len(), n));
        }
        Ok(Self { entries: lambda.padded(n).into_iter().map(i64::from).collect() })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// `true` iff every entry is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.entries.last().is_none_or(|&x| x >= 0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_polynomial() {
            return Err(Error::InvalidWeight(format!("{self} has negative entries")));
        }
        Partition::new(self.entries.iter().map(|&x| x as u32).collect())
    }

    /// Adds `c` to every entry (tensoring with `det^c`).
    pub fn twist(&self, c: i64) -> Weight {
        Weight { entries: self.entries.iter().map(|&x| x + c).collect() }
    }

    /// The `rho`-shifted coordinates `lambda_i - i` (1-based `i`).
    pub fn shifted(&self) -> Vec<i64> {
        self.entries.iter().enumerate().map(|(i, &x)| x - i as i64 - 1).collect()
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Weight::new(v)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.entries
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weight::new(parse_list(s)?)
    }
}

/// Characteristic `p` (zero or a prime) and quantum order `l >= 2`. The
/// classical case is `l = p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct FieldParams {
    pub p: u32,
    pub l: u32,
}

#[derive(Deserialize)]
struct RawParams {
    p: u32,
    l: u32,
}

impl TryFrom<RawParams> for FieldParams {
    type Error = Error;

    fn try_from(r: RawParams) -> Result<Self> {
        FieldParams::new(r.p, r.l)
    }
}

impl FieldParams {
    pub fn new(p: u32, l: u32) -> Result<Self> {
        if p != 0 && !is_prime(u64::from(p)) {
            return Err(Error::InvalidParams(format!("p = {p} is neither 0 nor prime")));
        }
        if l < 2 {
            return Err(Error::InvalidParams(format!("l = {l} must be at least 2")));
        }
        Ok(Self { p, l })
    }

    /// `l = p`, the group case.
    pub fn classical(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParams("the classical case needs a prime p".into()));
        }
        Self::new(p, p)
    }

    pub fn is_classical(&self) -> bool {
        self.p > 0 && self.l == self.p
    }
}

impl fmt::Display for FieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} l={}", self.p, self.l)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
