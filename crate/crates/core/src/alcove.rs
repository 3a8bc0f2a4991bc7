//! Alcove geometry for type A weights: depth `d(lambda)`, wall predicates,
//! linkage, the reflection `D_(s,n)`, cut detection and Steinberg orbits.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{conjugate, Partition};
use crate::weight::Weight;

/// `sum_{i<j} floor((lambda_i - lambda_j - i + j - 1) / l)`.
pub fn d_value(lambda: &Weight, l: u32) -> u64 {
    let e = lambda.entries();
    let l = i64::from(l);
    let mut total = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            total += (e[i] - e[j] + (j - i) as i64 - 1).div_euclid(l) as u64;
        }
    }
    total
}

fn hook_gaps(lambda: &Weight) -> impl Iterator<Item = i64> + '_ {
    let e = lambda.entries();
    (0..e.len()).flat_map(move |i| (i + 1..e.len()).map(move |j| e[i] - e[j] + (j - i) as i64))
}

/// No `lambda_i - lambda_j - i + j` is divisible by `l`.
pub fn is_interior(lambda: &Weight, l: u32) -> bool {
    hook_gaps(lambda).all(|g| g % i64::from(l) != 0)
}

/// Every consecutive difference is `-1 mod p`.
pub fn is_steinberg(mu: &Weight, p: u32) -> Result<bool> {
    if p == 0 {
        return Err(Error::InvalidParams("Steinberg weights need p > 0".into()));
    }
    let p = i64::from(p);
    Ok(mu.entries().windows(2).all(|w| (w[0] - w[1] + 1) % p == 0))
}

/// `lambda - (l-1) rho` is dominant.
pub fn is_strictly_dominant(lambda: &Weight, l: u32) -> bool {
    lambda.entries().windows(2).all(|w| w[0] - w[1] >= i64::from(l) - 1)
}

/// Necessary linkage test: the residues of `lambda_i - i` mod `l` agree with
/// those of `mu` as multisets. `false` proves every Ext group vanishes.
pub fn same_block_candidate(lambda: &Weight, mu: &Weight, l: u32) -> Result<bool> {
    if lambda.rank() != mu.rank() {
        return Err(Error::RankMismatch(lambda.rank(), mu.rank()));
    }
    if lambda.degree() != mu.degree() {
        return Err(Error::SizeMismatch(lambda.degree() as u64, mu.degree() as u64));
    }
    Ok(residues(lambda, l) == residues(mu, l))
}

fn residues(w: &Weight, l: u32) -> Vec<i64> {
    let mut r: Vec<i64> = w.shifted().iter().map(|x| x.rem_euclid(i64::from(l))).collect();
    r.sort_unstable();
    r
}

/// `D_(s,n) lambda = (s - lambda_n, ..., s - lambda_1)`.
pub fn d_reflect(lambda: &Weight, s: i64) -> Weight {
    let entries = lambda.entries().iter().rev().map(|&x| s - x).collect();
    Weight::new(entries).expect("reversal of a dominant weight is dominant")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutOrientation {
    Horizontal,
    Vertical,
}

/// Stacked blocks of a pair of partitions. For a vertical cut the blocks are
/// stored in conjugate form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutDecomposition {
    pub blocks: Vec<(Partition, Partition)>,
    pub orientation: CutOrientation,
}

impl CutDecomposition {
    /// Stacks the blocks back into the original pair (conjugated back for a
    /// vertical cut).
    pub fn reassemble(&self) -> (Partition, Partition) {
        let mut lam = Vec::new();
        let mut mu = Vec::new();
        for (a, b) in &self.blocks {
            let rows = a.len().max(b.len());
            lam.extend(a.padded(rows));
            mu.extend(b.padded(rows));
        }
        let lam = Partition::new(lam).expect("blocks stack to a partition");
        let mu = Partition::new(mu).expect("blocks stack to a partition");
        match self.orientation {
            CutOrientation::Horizontal => (lam, mu),
            CutOrientation::Vertical => (conjugate(&lam), conjugate(&mu)),
        }
    }
}

/// Finest horizontal cut: split after every row where the prefix sums of
/// `lambda` and `mu` agree. Returns `None` if only one block results.
pub fn find_horizontal_cut(lambda: &Partition, mu: &Partition) -> Result<Option<CutDecomposition>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let rows = lambda.len().max(mu.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    let mut start = 0;
    let mut blocks = Vec::new();
    for k in 0..rows {
        sa += u64::from(lambda.part(k));
        sb += u64::from(mu.part(k));
        if sa == sb {
            let a = Partition::new(lambda.padded(rows)[start..=k].to_vec())?;
            let b = Partition::new(mu.padded(rows)[start..=k].to_vec())?;
            blocks.push((a, b));
            start = k + 1;
        }
    }
    Ok((blocks.len() > 1).then_some(CutDecomposition { blocks, orientation: CutOrientation::Horizontal }))
}

/// A vertical cut is a horizontal cut of the conjugate pair.
pub fn find_vertical_cut(lambda: &Partition, mu: &Partition) -> Result<Option<CutDecomposition>> {
    Ok(find_horizontal_cut(&conjugate(lambda), &conjugate(mu))?
        .map(|c| CutDecomposition { blocks: c.blocks, orientation: CutOrientation::Vertical }))
}

/// The dominant part of the orbit of `lambda` under the stabiliser of the
/// Steinberg weight `mu`, computed in shifted coordinates as
/// `mu + sigma(lambda - mu)` over all permutations `sigma`.
///
/// `lambda` must lie in the star of `mu`: the shifted differences
/// `delta_i = lambda_i - mu_i` satisfy `|delta_i - delta_j| < p`.
pub fn koppinen_orbit(mu: &Weight, lambda: &Weight, p: u32) -> Result<BTreeSet<Weight>> {
    if !is_steinberg(mu, p)? {
        return Err(Error::Precondition(format!("{mu} is not a Steinberg weight for p = {p}")));
    }
    if mu.rank() != lambda.rank() {
        return Err(Error::RankMismatch(mu.rank(), lambda.rank()));
    }
    let delta: Vec<i64> = lambda.entries().iter().zip(mu.entries()).map(|(a, b)| a - b).collect();
    let spread = delta.iter().max().unwrap_or(&0) - delta.iter().min().unwrap_or(&0);
    if spread >= i64::from(p) {
        return Err(Error::Precondition(format!("{lambda} is outside the star of {mu}")));
    }
    let base = mu.shifted();
    let mut out = BTreeSet::new();
    let mut perm = delta.clone();
    perm.sort_unstable();
    loop {
        let entries: Vec<i64> = base.iter().zip(&perm).enumerate().map(|(i, (b, d))| b + d + i as i64 + 1).collect();
        if let Ok(w) = Weight::new(entries) {
            out.insert(w);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn d_value_examples() {
        assert_eq!(d_value(&w(&[3, 1]), 2), 1);
        assert_eq!(d_value(&w(&[1, 1]), 2), 0);
        assert_eq!(d_value(&w(&[5, 2, 0]), 3), 3);
    }

    #[test]
    fn wall_predicates() {
        assert!(is_interior(&w(&[3, 0]), 3));
        assert!(!is_interior(&w(&[2, 0]), 3));
        assert!(!is_interior(&w(&[5, 2, 0]), 3));
        assert!(is_steinberg(&w(&[2, 0]), 3).unwrap());
        assert!(!is_steinberg(&w(&[3, 0]), 3).unwrap());
        assert!(!is_steinberg(&w(&[5, 2]), 3).unwrap());
        assert!(is_steinberg(&w(&[1, 0]), 2).unwrap());
        assert!(is_steinberg(&w(&[1, 0]), 0).is_err());
        assert!(is_strictly_dominant(&w(&[4, 1]), 3));
        assert!(!is_strictly_dominant(&w(&[2, 1]), 3));
        assert!(!is_strictly_dominant(&w(&[0, 0]), 2));
    }

    #[test]
    fn block_examples() {
        assert!(same_block_candidate(&w(&[3, 0]), &w(&[2, 1]), 3).unwrap());
        assert!(!same_block_candidate(&w(&[4, 0]), &w(&[2, 2]), 5).unwrap());
        assert!(same_block_candidate(&w(&[4, 0]), &w(&[4, 0]), 7).unwrap());
        assert!(same_block_candidate(&w(&[4, 0]), &w(&[4, 0, 0]), 7).is_err());
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(d_reflect(&w(&[3, 1]), 4), w(&[3, 1]));
        assert_eq!(d_reflect(&w(&[3, 0]), 3), w(&[3, 0]));
        let l = w(&[5, 2, 0]);
        assert_eq!(d_reflect(&d_reflect(&l, 7), 7), l);
        assert_eq!(d_value(&d_reflect(&l, 7), 3), d_value(&l, 3));
    }

    #[test]
    fn cut_examples() {
        let c = find_horizontal_cut(&p(&[5, 5, 1, 1]), &p(&[6, 4, 2])).unwrap().unwrap();
        assert_eq!(c.blocks, vec![(p(&[5, 5]), p(&[6, 4])), (p(&[1, 1]), p(&[2]))]);

        let c = find_horizontal_cut(&p(&[9, 9, 1, 1]), &p(&[10, 8, 1, 1])).unwrap().unwrap();
        assert_eq!(c.blocks.len(), 3);
        assert_eq!(c.blocks[0], (p(&[9, 9]), p(&[10, 8])));
        assert_eq!(c.reassemble(), (p(&[9, 9, 1, 1]), p(&[10, 8, 1, 1])));

        let l = p(&[3, 2, 1]);
        let c = find_horizontal_cut(&l, &l).unwrap().unwrap();
        assert_eq!(c.blocks, vec![(p(&[3]), p(&[3])), (p(&[2]), p(&[2])), (p(&[1]), p(&[1]))]);

        assert!(find_horizontal_cut(&p(&[3, 1]), &p(&[2, 2])).unwrap().is_none());
        assert!(find_horizontal_cut(&p(&[3, 1]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn vertical_cut_round_trips() {
        let (a, b) = (p(&[3, 3, 1]), p(&[3, 2, 2]));
        let c = find_vertical_cut(&a, &b).unwrap().unwrap();
        assert_eq!(c.orientation, CutOrientation::Vertical);
        assert_eq!(c.reassemble(), (a, b));
    }

    #[test]
    fn koppinen_examples() {
        let orbit = koppinen_orbit(&w(&[2, 0]), &w(&[3, 0]), 3).unwrap();
        assert_eq!(orbit.into_iter().collect::<Vec<_>>(), vec![w(&[2, 1]), w(&[3, 0])]);
        let orbit = koppinen_orbit(&w(&[2, 0]), &w(&[2, 0]), 3).unwrap();
        assert_eq!(orbit.len(), 1);
        assert!(koppinen_orbit(&w(&[3, 0]), &w(&[3, 0]), 3).is_err());
        assert!(koppinen_orbit(&w(&[2, 0]), &w(&[6, 0]), 3).is_err());
    }
}
