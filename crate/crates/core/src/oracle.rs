//! Brute-force rank-2 ground truth.
//!
//! `∇(c)` is realized as the symmetric power `S^c(V)` with basis
//! `v_k = x^{c-k} y^k` of weight `c - 2k`. The divided powers act by
//! `E^(r) v_k = [k, r] v_{k-r}` and `F^(r) v_k = [c-k, r] v_{k+r}`, with
//! ordinary binomials mod `p` in the classical case and balanced Gaussian
//! binomials at a primitive `2l`-th root of unity in the quantum case.
//! Module maps preserve weights, so a map `∇(c) -> ∇(c')` is a diagonal
//! vector `(a_w)` and Hom spaces are nullspaces of small linear systems.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::arith::{binomial_mod, pow_mod};
use crate::engine::is_simple_raw;
use crate::error::{Error, Result};
use crate::weight::{is_prime, FieldParams};

pub const DESK_LIMIT: u32 = 512;

/// Coefficient field with a binomial table for the divided-power action.
#[derive(Debug, Clone)]
struct Field {
    modulus: u64,
    /// Divided powers used as generators.
    generators: Vec<u32>,
    /// Gaussian binomials `[n, k]` for the quantum case.
    table: Option<Vec<Vec<u64>>>,
}

impl Field {
    fn new(params: FieldParams, top: u32) -> Result<Self> {
        if params.is_classical() {
            let p = params.p;
            let mut generators = Vec::new();
            let mut r = 1u32;
            while r <= top.max(1) {
                generators.push(r);
                r = r.saturating_mul(p);
            }
            return Ok(Self { modulus: u64::from(p), generators, table: None });
        }
        if params.p != 0 {
            return Err(Error::Unsupported(format!(
                "oracle covers the classical case and l-th roots of unity in characteristic 0, not {params}"
            )));
        }
        let l = u64::from(params.l);
        let modulus = (10_008..).find(|&q| (q - 1) % (2 * l) == 0 && is_prime(q)).expect("a prime exists");
        let v = pow_mod(primitive_root(modulus), (modulus - 1) / (2 * l), modulus);
        let vi = pow_mod(v, modulus - 2, modulus);
        let n = top as usize;
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for a in 0..=n {
            table[a][0] = 1;
            for b in 1..=a {
                let left = pow_mod(v, b as u64, modulus) * table[a - 1][b] % modulus;
                let right = pow_mod(vi, (a - b) as u64, modulus) * table[a - 1][b - 1] % modulus;
                table[a][b] = (left + right) % modulus;
            }
        }
        Ok(Self { modulus, generators: (1..=top.max(1)).collect(), table: Some(table) })
    }

    fn binom(&self, n: u32, k: u32) -> u64 {
        if k > n {
            return 0;
        }
        match &self.table {
            Some(t) => t[n as usize][k as usize],
            None => binomial_mod(u64::from(n), u64::from(k), self.modulus),
        }
    }
}

fn primitive_root(q: u64) -> u64 {
    let mut factors = Vec::new();
    let mut n = q - 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    (2..q).find(|&g| factors.iter().all(|&f| pow_mod(g, (q - 1) / f, q) != 1)).expect("primitive root exists")
}

/// Action tables of `∇(c)`: `raise[r][k]` is the coefficient of
/// `E^(r) v_k` on `v_{k-r}` and `lower[r][k]` that of `F^(r) v_k` on
/// `v_{k+r}`; index `r = 0` is the identity.
#[derive(Debug, Clone, Serialize)]
pub struct HyperalgebraModule {
    pub c: u32,
    pub modulus: u64,
    pub raise: Vec<Vec<u64>>,
    pub lower: Vec<Vec<u64>>,
}

impl HyperalgebraModule {
    pub fn dim(&self) -> usize {
        self.c as usize + 1
    }

    /// `E^(a) E^(b) = [a+b, a] E^(a+b)` and likewise for `F`, checked on
    /// every basis vector.
    pub fn composition_rule_holds(&self, a: u32, b: u32, params: FieldParams) -> Result<bool> {
        let field = Field::new(params, self.c.max(a + b))?;
        let q = self.modulus;
        let coef = field.binom(a + b, a);
        let (a, b) = (a as usize, b as usize);
        for k in 0..self.dim() {
            let lhs_e = if k >= a + b { self.raise[b][k] * self.raise[a][k - b] % q } else { 0 };
            let rhs_e = if k >= a + b { coef * self.raise[a + b][k] % q } else { 0 };
            let lhs_f = if k + a + b < self.dim() { self.lower[b][k] * self.lower[a][k + b] % q } else { 0 };
            let rhs_f = if k + a + b < self.dim() { coef * self.lower[a + b][k] % q } else { 0 };
            if lhs_e != rhs_e || lhs_f != rhs_f {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_desk(c: u32) -> Result<()> {
    if c > DESK_LIMIT {
        return Err(Error::OutOfRange(format!("c = {c} exceeds the oracle limit {DESK_LIMIT}")));
    }
    Ok(())
}

pub fn build_module(c: u32, params: FieldParams) -> Result<HyperalgebraModule> {
    check_desk(c)?;
    let field = Field::new(params, c)?;
    Ok(module_with(&field, c))
}

fn module_with(field: &Field, c: u32) -> HyperalgebraModule {
    let table = |f: &dyn Fn(u32, u32) -> u64| -> Vec<Vec<u64>> {
        (0..=c).map(|r| (0..=c).map(|k| f(r, k)).collect()).collect()
    };
    HyperalgebraModule {
        c,
        modulus: field.modulus,
        raise: table(&|r, k| field.binom(k, r)),
        lower: table(&|r, k| field.binom(c - k, r)),
    }
}

/// Equations on `(a_w)` for a weight-preserving map `∇(c) -> ∇(c2)` to
/// commute with the generators. Columns index weights `-n..=n` step 2
/// where `n = min(c, c2)`.
fn equations(field: &Field, c: u32, c2: u32) -> Vec<Vec<u64>> {
    let q = field.modulus;
    let n = c.min(c2) as i64;
    let col = |w: i64| (w.abs() <= n).then(|| ((w + n) / 2) as usize);
    let width = n as usize + 1;
    let mut rows = Vec::new();
    for &r in &field.generators {
        let ri = i64::from(r);
        for k in 0..=c {
            let w = i64::from(c) - 2 * i64::from(k);
            let k2 = (i64::from(c2) - w) / 2;
            // E^(r): [k, r] a_{w+2r} - [k2, r] a_w
            let mut row = vec![0u64; width];
            if let Some(j) = col(w + 2 * ri) {
                if r <= k {
                    row[j] = (row[j] + field.binom(k, r)) % q;
                }
            }
            if let Some(j) = col(w) {
                if k2 >= ri {
                    row[j] = (row[j] + q - field.binom(k2 as u32, r)) % q;
                }
            }
            rows.push(row);
            // F^(r): [c-k, r] a_{w-2r} - [c2-k2, r] a_w
            let mut row = vec![0u64; width];
            if let Some(j) = col(w - 2 * ri) {
                if r <= c - k {
                    row[j] = (row[j] + field.binom(c - k, r)) % q;
                }
            }
            if let Some(j) = col(w) {
                let up = i64::from(c2) - k2;
                if up >= ri {
                    row[j] = (row[j] + q - field.binom(up as u32, r)) % q;
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Row-reduces over `F_q` and returns the reduced pivot rows keyed by pivot
/// column. Every new row is fully reduced against all earlier pivots and
/// the earlier pivots are cleared in the new pivot column.
fn reduce(rows: Vec<Vec<u64>>, width: usize, q: u64) -> Vec<(usize, Vec<u64>)> {
    let mut piv: Vec<(usize, Vec<u64>)> = Vec::new();
    for mut row in rows {
        for (pc, prow) in &piv {
            let f = row[*pc];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(prow) {
                    *x = (*x + q - f * y % q) % q;
                }
            }
        }
        let Some(c) = (0..width).find(|&j| row[j] != 0) else { continue };
        let inv = pow_mod(row[c], q - 2, q);
        for x in row.iter_mut() {
            *x = *x * inv % q;
        }
        for (_, prow) in piv.iter_mut() {
            let f = prow[c];
            if f != 0 {
                for (x, y) in prow.iter_mut().zip(&row) {
                    *x = (*x + q - f * y % q) % q;
                }
            }
        }
        piv.push((c, row));
    }
    piv
}

fn check_pair(c: u32, c2: u32) -> Result<()> {
    check_desk(c)?;
    check_desk(c2)
}

/// `dim Hom(∇(c), ∇(c2))` for `SL_2`, by linear algebra.
pub fn oracle_hom_dim(c: u32, c2: u32, params: FieldParams) -> Result<u64> {
    check_pair(c, c2)?;
    if (c + c2) % 2 == 1 {
        return Ok(0);
    }
    let field = Field::new(params, c.max(c2))?;
    let width = c.min(c2) as usize + 1;
    let piv = reduce(equations(&field, c, c2), width, field.modulus);
    Ok((width - piv.len()) as u64)
}

/// Weights of `L(c)` inside `∇(c)`: the basis vectors reachable from `v_0`
/// under the divided powers.
pub fn simple_support(c: u32, params: FieldParams) -> Result<BTreeSet<u32>> {
    let module = build_module(c, params)?;
    let mut seen = BTreeSet::from([0u32]);
    let mut queue = VecDeque::from([0u32]);
    while let Some(k) = queue.pop_front() {
        for r in 1..=c {
            if r <= k && module.raise[r as usize][k as usize] != 0 && seen.insert(k - r) {
                queue.push_back(k - r);
            }
            if k + r <= c && module.lower[r as usize][k as usize] != 0 && seen.insert(k + r) {
                queue.push_back(k + r);
            }
        }
    }
    Ok(seen)
}

pub fn oracle_simple_dim(c: u32, params: FieldParams) -> Result<u64> {
    Ok(simple_support(c, params)?.len() as u64)
}

/// `dim Hom(∇(c), L(c2))`: maps into `∇(c2)` whose image lies in the socle
/// `L(c2)`, i.e. supported on the weights of `L(c2)`.
pub fn oracle_hom_to_simple(c: u32, c2: u32, params: FieldParams) -> Result<u64> {
    check_pair(c, c2)?;
    if (c + c2) % 2 == 1 {
        return Ok(0);
    }
    let field = Field::new(params, c.max(c2))?;
    let n = c.min(c2) as i64;
    let width = n as usize + 1;
    let support = simple_support(c2, params)?;
    let mut rows = equations(&field, c, c2);
    for j in 0..width {
        let w = 2 * j as i64 - n;
        let k2 = ((i64::from(c2) - w) / 2) as u32;
        if !support.contains(&k2) {
            let mut row = vec![0u64; width];
            row[j] = 1;
            rows.push(row);
        }
    }
    let piv = reduce(rows, width, field.modulus);
    Ok((width - piv.len()) as u64)
}

/// Digit criterion: `∇(c)` is simple iff the product of `digit + 1` over
/// the base `(l, p, p, ...)` digits of `c` equals `c + 1`.
pub fn is_nabla_simple(c: u32, params: FieldParams) -> bool {
    is_simple_raw(u64::from(c), params.l, params.p)
}
