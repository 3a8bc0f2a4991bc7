//! Homomorphism certificates from tableau coefficients for pairs where `s`
//! boxes move from the first row of `lambda` to a new last row.
//!
//! For such a pair write `lambda = (l_0 + s, l_1^(m_1 - 1), ..., l_r^(m_r - m_{r-1}))`
//! and `mu = (l_0, l_1^(m_1 - 1), ..., l_r^(m_r - m_{r-1}), s)` with
//! `m_0 = 1`. A certificate is a choice of integers `gamma_1..gamma_r` and
//! an exponent `e` such that `p^e` misses `f(T)` for some nice tableau `T`
//! of type `mu` but divides every `g` coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::tableau::{enumerate_pseudo_standard, Tableau};
use crate::arith::{factorial, falling, rising_over_factorial, valuation};
use crate::error::{Error, Result};
use crate::partition::{nu_composition, Composition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeData {
    pub s: u32,
    /// `l_0, ..., l_r`.
    pub l: Vec<u32>,
    /// `m_0 = 1, m_1, ..., m_r`.
    pub m: Vec<usize>,
    pub r: usize,
}

impl ShapeData {
    fn li(&self, i: usize) -> i64 {
        i64::from(self.l[i])
    }

    fn mi(&self, i: usize) -> i64 {
        self.m[i] as i64
    }

    /// `m_r`.
    pub fn last_row(&self) -> usize {
        self.m[self.r]
    }

    /// Rebuilds `(lambda, mu)`.
    pub fn pair(&self) -> (Partition, Partition) {
        let mut body = Vec::new();
        for i in 1..=self.r {
            body.extend(std::iter::repeat_n(self.l[i], self.m[i] - self.m[i - 1]));
        }
        let mut lam = vec![self.l[0] + self.s];
        lam.extend(&body);
        let mut mu = vec![self.l[0]];
        mu.extend(&body);
        mu.push(self.s);
        (Partition::new(lam).expect("canonical lambda"), Partition::new(mu).expect("canonical mu"))
    }

    /// Residues forced on `gamma_i`: `l_0 - l_i + m_i + s - 1 mod p`.
    pub fn gamma_residues(&self, p: u32) -> Vec<i64> {
        let p = i64::from(p);
        (1..=self.r).map(|i| (self.li(0) - self.li(i) + self.mi(i) + i64::from(self.s) - 1).rem_euclid(p)).collect()
    }

    /// The necessary block condition `l_0 + m_r = 0 mod p`.
    pub fn block_condition(&self, p: u32) -> bool {
        (self.li(0) + self.mi(self.r)) % i64::from(p) == 0
    }
}

/// Recognizes pairs where `mu` arises from `lambda` by moving `s > 0`
/// boxes from row 1 to a new last row. A one-row `lambda` gives `r = 0`.
pub fn canonicalize_fm_pair(lambda: &Partition, mu: &Partition) -> Option<ShapeData> {
    let (lam, mu) = (lambda.parts(), mu.parts());
    if lam.is_empty() || mu.len() != lam.len() + 1 {
        return None;
    }
    let s = lam[0].checked_sub(mu[0]).filter(|&s| s > 0)?;
    if mu[mu.len() - 1] != s || lam[1..] != mu[1..mu.len() - 1] {
        return None;
    }
    let mut l = vec![mu[0]];
    let mut m = vec![1usize];
    for (idx, &v) in lam[1..].iter().enumerate() {
        let row = idx + 2;
        if l.len() > 1 && *l.last().unwrap() == v {
            *m.last_mut().unwrap() = row;
        } else {
            l.push(v);
            m.push(row);
        }
    }
    let r = l.len() - 1;
    Some(ShapeData { s, l, m, r })
}

/// `n_i(T)`: the sum of `T_h` over the rows `m_{i-1}+1..=m_i`, with
/// `n_0 = T_1`.
fn n_i(t: &Tableau, d: &ShapeData, i: usize) -> u32 {
    if i == 0 {
        return t.above(1);
    }
    (d.m[i - 1] + 1..=d.m[i]).map(|h| t.above(h)).sum()
}

fn row_factorials(t: &Tableau, rows: std::ops::RangeInclusive<usize>) -> BigInt {
    rows.map(|h| factorial(u64::from(t.above(h)))).product()
}

/// `c_i(T) = gamma_i^{(s - n_i) falling} * prod T_h!`; `None` when a
/// negative-length falling factorial has a zero denominator.
fn c_i(t: &Tableau, d: &ShapeData, gamma: &[i64], i: usize) -> Option<BigRational> {
    let len = i64::from(d.s) - i64::from(n_i(t, d, i));
    let ff = falling(&BigInt::from(gamma[i - 1]), len)?;
    Some(ff * BigRational::from_integer(row_factorials(t, d.m[i - 1] + 1..=d.m[i])))
}

fn f_rational(t: &Tableau, d: &ShapeData, gamma: &[i64]) -> Option<BigRational> {
    (1..=d.r).try_fold(BigRational::one(), |acc, i| Some(acc * c_i(t, d, gamma, i)?))
}

/// `f(T) = prod_i c_i(T)`.
pub fn f_coeff(t: &Tableau, gamma: &[i64], d: &ShapeData) -> Result<BigInt> {
    if gamma.len() != d.r {
        return Err(Error::Precondition(format!("expected {} gamma values", d.r)));
    }
    for i in 1..=d.r {
        if n_i(t, d, i) > d.s {
            return Err(Error::Precondition(format!("n_{i}(T) exceeds s = {}", d.s)));
        }
    }
    let v = f_rational(t, d, gamma).expect("nonnegative lengths are always defined");
    Ok(v.to_integer())
}

/// `T` is nice if, for each `i`, the rows of length `l_i` hold at most
/// `l_i - l_{i+1}` entries greater than `m_i`, where `l_{r+1} = 0`.
pub fn is_nice(t: &Tableau, d: &ShapeData) -> bool {
    (1..=d.r).all(|i| {
        let count: u32 = (d.m[i - 1] + 1..=d.m[i]).map(|h| t.count_greater(h, d.m[i])).sum();
        let next = d.l.get(i + 1).copied().unwrap_or(0);
        count <= d.l[i] - next
    })
}

/// The coefficient `g(S)` by the three-case product formula. `None` when a
/// falling factorial of negative length is undefined.
pub fn g_coeff_product(s_tab: &Tableau, b: usize, t: u32, gamma: &[i64], d: &ShapeData) -> Option<BigRational> {
    let s = i64::from(d.s);
    let tt = u64::from(t);
    if b == 0 {
        let (l1, m1, g1) = if d.r == 0 { (s, 2, 0) } else { (d.li(1), d.mi(1), gamma[0]) };
        let x = d.li(0) - l1 + m1 - 1 + s - g1;
        let f = f_rational(s_tab, d, gamma)?;
        return Some(f * BigRational::from_integer(rising_over_factorial(&x.into(), tt)));
    }
    let mut rest = BigRational::one();
    for i in (1..=d.r).filter(|&i| i != b) {
        rest *= c_i(s_tab, d, gamma, i)?;
    }
    let x = if b < d.r {
        d.li(b) - d.li(b + 1) + d.mi(b + 1) - d.mi(b) + gamma[b - 1] - gamma[b]
    } else {
        d.li(d.r) - s + 1 + gamma[d.r - 1]
    };
    let fb = falling(&gamma[b - 1].into(), s - i64::from(n_i(s_tab, d, b)) - i64::from(t))?;
    let tail = factorial(u64::from(s_tab.above(d.m[b])) + tt) * row_factorials(s_tab, d.m[b - 1] + 1..=d.m[b] - 1);
    Some(rest * BigRational::from_integer(rising_over_factorial(&x.into(), tt)) * fb * BigRational::from_integer(tail))
}

/// The same coefficient as a single quotient, using `gamma_0 = s`,
/// `m_{r+1} = m_r + 1`, `l_{r+1} = s` and `gamma_{r+1} = 0`. `None` when
/// the denominator vanishes.
pub fn g_coeff_quotient(s_tab: &Tableau, b: usize, t: u32, gamma: &[i64], d: &ShapeData) -> Option<BigRational> {
    let s = i64::from(d.s);
    let l_ext = |i: usize| if i <= d.r { d.li(i) } else { s };
    let m_ext = |i: usize| if i <= d.r { d.mi(i) } else { d.mi(d.r) + 1 };
    let g_ext = |i: usize| match i {
        0 => s,
        i if i <= d.r => gamma[i - 1],
        _ => 0,
    };
    let x = l_ext(b) - l_ext(b + 1) + m_ext(b + 1) - m_ext(b) + g_ext(b) - g_ext(b + 1);
    let nb = i64::from(n_i(s_tab, d, b));
    let den = falling(&(g_ext(b) + nb + i64::from(t) - s).into(), i64::from(t))?;
    if den.is_zero() {
        return None;
    }
    let f = f_rational(s_tab, d, gamma)?;
    let top = falling(&(i64::from(s_tab.above(d.m[b])) + i64::from(t)).into(), i64::from(t))?;
    Some(f * BigRational::from_integer(rising_over_factorial(&x.into(), u64::from(t))) * top / den)
}

/// `g(S)` for `S` of type `nu(mu, m_b, t)`. The product formula is
/// authoritative; the quotient form must agree wherever it is defined.
pub fn g_coeff(s_tab: &Tableau, b: usize, t: u32, gamma: &[i64], d: &ShapeData) -> Result<Option<BigRational>> {
    if b > d.r || t == 0 || gamma.len() != d.r {
        return Err(Error::OutOfRange(format!("b = {b}, t = {t}")));
    }
    let main = g_coeff_product(s_tab, b, t, gamma, d);
    if let (Some(x), Some(y)) = (&main, g_coeff_quotient(s_tab, b, t, gamma, d)) {
        if *x != y {
            return Err(Error::Precondition(format!("coefficient forms disagree: {x} vs {y}")));
        }
    }
    Ok(main)
}

/// Candidate `gamma` vectors: each `gamma_i` runs over its forced residue
/// lifted by `0..window` multiples of `p`. Empty when the block condition
/// fails.
pub fn gamma_candidates(d: &ShapeData, p: u32, window: u32) -> Result<Vec<Vec<i64>>> {
    if p < 3 {
        return Err(Error::InvalidParams(format!("p = {p}: the tableau criterion needs p >= 3")));
    }
    if !d.block_condition(p) {
        return Ok(Vec::new());
    }
    let res = d.gamma_residues(p);
    let mut out = vec![Vec::new()];
    for r in res {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (0..window).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(r + i64::from(p) * i64::from(k));
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FmBounds {
    /// Lifts per `gamma_i`.
    pub window: u32,
    /// Largest exponent `e` tried.
    pub emax: u32,
}

impl Default for FmBounds {
    fn default() -> Self {
        Self { window: 8, emax: 16 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FmCertificate {
    pub e: u32,
    pub gamma: Vec<i64>,
    pub witness: Tableau,
}

/// Every `(b, t, S)` whose coefficient must be divisible.
fn required_tableaux(lambda: &Partition, mu: &Partition, d: &ShapeData) -> Result<Vec<(usize, u32, Tableau)>> {
    let mut out = Vec::new();
    for b in 0..=d.r {
        for t in 1..=mu.part(d.m[b]) {
            let nu: Composition = nu_composition(mu, d.m[b], t)?;
            for s in enumerate_pseudo_standard(lambda, &nu)? {
                out.push((b, t, s));
            }
        }
    }
    Ok(out)
}

/// Searches for a certificate that `Hom(S^lambda, S^mu)` is nonzero.
/// `None` proves nothing.
pub fn fayers_martin_certificate(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
    bounds: FmBounds,
) -> Result<Option<FmCertificate>> {
    let d = canonicalize_fm_pair(lambda, mu)
        .ok_or_else(|| Error::Precondition(format!("{lambda} -> {mu} is not a single first-row move")))?;
    let candidates = gamma_candidates(&d, p, bounds.window)?;
    if candidates.is_empty() {
        return Ok(None);
    }
    let nice: Vec<Tableau> =
        enumerate_pseudo_standard(lambda, &Composition::from(mu))?.into_iter().filter(|t| is_nice(t, &d)).collect();
    let required = required_tableaux(lambda, mu, &d)?;
    'gamma: for gamma in candidates {
        let mut best: Option<(i64, &Tableau)> = None;
        for t in &nice {
            let f = BigRational::from_integer(f_coeff(t, &gamma, &d)?);
            if let Some(v) = valuation(&f, p) {
                if best.is_none_or(|(bv, _)| v < bv) {
                    best = Some((v, t));
                }
            }
        }
        let Some((vf, witness)) = best else { continue };
        let e = vf + 1;
        if e > i64::from(bounds.emax) {
            continue;
        }
        for (b, t, s) in &required {
            let Some(g) = g_coeff(s, *b, *t, &gamma, &d)? else { continue 'gamma };
            if valuation(&g, p).is_some_and(|v| v < e) {
                continue 'gamma;
            }
        }
        let res = d.gamma_residues(p);
        assert!(d.block_condition(p));
        assert!(gamma.iter().zip(&res).all(|(g, r)| g.rem_euclid(i64::from(p)) == *r));
        return Ok(Some(FmCertificate { e: e as u32, gamma, witness: witness.clone() }));
    }
    Ok(None)
}
