//! The Mullineux map on row `l`-regular partitions, via `l`-rim removal.
//!
//! The `l`-rim of a partition is a union of `l`-segments. A segment takes
//! `l` consecutive rim boxes starting at the right end of some row; the
//! first starts in row 1 and each later one starts in the row below the
//! previous segment's last box. Stripping rims repeatedly gives the
//! Mullineux symbol: columns `(A_i, R_i)` of rim size and row count. The
//! image partition has symbol `(A_i, A_i - R_i + eps_i)`, where `eps_i` is 1
//! exactly when `l` does not divide `A_i`.

use crate::error::{Error, Result};
use crate::partition::{is_row_regular, Partition};

/// Removed rim boxes per row, and the partition that remains.
fn strip_rim(parts: &[u32], l: u32) -> (Vec<u32>, Vec<u32>) {
    let n = parts.len();
    let part = |j: usize| parts.get(j).copied().unwrap_or(0);
    let mut removed = vec![0u32; n];
    let mut row = 0;
    while row < n {
        // walk one segment along the rim starting at the end of `row`
        let mut left = l;
        let mut r = row;
        loop {
            let rim_len = part(r) - part(r + 1).max(1) + 1;
            let take = rim_len.min(left);
            removed[r] = take;
            left -= take;
            if left == 0 || r + 1 >= n {
                break;
            }
            r += 1;
        }
        row = r + 1;
        if left > 0 {
            break;
        }
    }
    let rest = parts.iter().zip(&removed).map(|(a, b)| a - b).collect();
    (removed, rest)
}

/// The Mullineux symbol `[(A_i, R_i)]`.
pub fn mullineux_symbol(lambda: &Partition, l: u32) -> Result<Vec<(u64, usize)>> {
    check(lambda, l)?;
    let mut cur: Vec<u32> = lambda.parts().to_vec();
    let mut out = Vec::new();
    while !cur.is_empty() {
        let (removed, mut rest) = strip_rim(&cur, l);
        out.push((removed.iter().map(|&x| u64::from(x)).sum(), cur.len()));
        while rest.last() == Some(&0) {
            rest.pop();
        }
        cur = rest;
    }
    Ok(out)
}

fn check(lambda: &Partition, l: u32) -> Result<()> {
    if l < 2 {
        return Err(Error::InvalidParams(format!("l = {l} must be at least 2")));
    }
    if !is_row_regular(lambda, l) {
        return Err(Error::NotRowRegular(lambda.to_string(), l));
    }
    Ok(())
}

/// `m(lambda)`, the label of `D^lambda` tensored with the sign module.
pub fn mullineux(lambda: &Partition, l: u32) -> Result<Partition> {
    let symbol = mullineux_symbol(lambda, l)?;
    let mut cur: Vec<u32> = Vec::new();
    for &(a, r) in symbol.iter().rev() {
        let eps = usize::from(a % u64::from(l) != 0);
        let rows = a as usize + eps - r;
        cur = add_rim(&cur, a as u32, rows, l)
            .ok_or_else(|| Error::Precondition(format!("no rim of size {a} on {rows} rows over {cur:?}")))?;
    }
    Partition::new(cur)
}

/// Finds the row-regular partition with `rows` rows whose `l`-rim has
/// `size` boxes and strips to `inner`.
fn add_rim(inner: &[u32], size: u32, rows: usize, l: u32) -> Option<Vec<u32>> {
    if rows < inner.len() || rows == 0 {
        return None;
    }
    let mu: Vec<u32> = (0..rows).map(|j| inner.get(j).copied().unwrap_or(0)).collect();
    let mut lam = vec![0u32; rows];
    search(&mu, &mut lam, 0, size, l)
}

fn search(mu: &[u32], lam: &mut Vec<u32>, j: usize, left: u32, l: u32) -> Option<Vec<u32>> {
    let rows = mu.len();
    if j == rows {
        if left != 0 {
            return None;
        }
        let p = Partition::new(lam.clone()).ok()?;
        if !is_row_regular(&p, l) {
            return None;
        }
        let (_, rest) = strip_rim(lam, l);
        return (rest == mu).then(|| lam.clone());
    }
    let lo = mu[j] + 1;
    let mut hi = mu[j] + left;
    if j > 0 {
        hi = hi.min(lam[j - 1]).min(mu[j - 1] + 1);
    }
    // each remaining row needs at least one box
    let need_after = (rows - j - 1) as u32;
    for v in lo..=hi {
        let used = v - mu[j];
        if used + need_after > left {
            break;
        }
        lam[j] = v;
        if let Some(found) = search(mu, lam, j + 1, left - used, l) {
            return Some(found);
        }
    }
    None
}
