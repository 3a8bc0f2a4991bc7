//! Row-semistandard fillings stored as multiplicity matrices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// `mult[j][i]` counts the entries equal to `i + 1` in row `j + 1`. The
/// filling with weakly increasing rows is determined by these counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Partition,
    pub content: Composition,
    pub mult: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: Partition, content: Composition, mult: Vec<Vec<u32>>) -> Result<Self> {
        if mult.len() != shape.len() || mult.iter().any(|r| r.len() != content.len()) {
            return Err(Error::Precondition("multiplicity matrix has the wrong dimensions".into()));
        }
        for (j, row) in mult.iter().enumerate() {
            if row.iter().sum::<u32>() != shape.part(j) {
                return Err(Error::Precondition(format!("row {} does not sum to {}", j + 1, shape.part(j))));
            }
        }
        for i in 0..content.len() {
            if mult.iter().map(|r| r[i]).sum::<u32>() != content.part(i) {
                return Err(Error::Precondition(format!("entry {} does not occur {} times", i + 1, content.part(i))));
            }
        }
        Ok(Self { shape, content, mult })
    }

    /// Builds a tableau from explicit rows of entries (1-based values).
    pub fn from_rows(rows: &[Vec<u32>], content_len: usize) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let mut mult = vec![vec![0u32; content_len]; rows.len()];
        for (j, row) in rows.iter().enumerate() {
            for &v in row {
                if v == 0 || v as usize > content_len {
                    return Err(Error::OutOfRange(format!("entry {v}")));
                }
                mult[j][v as usize - 1] += 1;
            }
        }
        let content = Composition::new((0..content_len).map(|i| mult.iter().map(|r| r[i]).sum()).collect());
        Self::new(shape, content, mult)
    }

    /// The filling, row by row.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.mult
            .iter()
            .map(|row| {
                row.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i as u32 + 1, k as usize)).collect()
            })
            .collect()
    }

    /// Entries equal to `i + 1` may sit in row `j + 1` only if `i == j` or
    /// `lambda_{i+1} < lambda_{j+1}`.
    pub fn is_pseudo_standard(&self) -> bool {
        self.mult
            .iter()
            .enumerate()
            .all(|(j, row)| row.iter().enumerate().all(|(i, &k)| k == 0 || allowed(&self.shape, j, i)))
    }

    /// `T_h`: the number of entries greater than `h` in row `h` (1-based).
    pub fn above(&self, h: usize) -> u32 {
        self.mult.get(h - 1).map_or(0, |row| row.iter().skip(h).sum())
    }

    /// Entries greater than `bound` in row `h` (1-based).
    pub fn count_greater(&self, h: usize, bound: usize) -> u32 {
        self.mult.get(h - 1).map_or(0, |row| row.iter().skip(bound).sum())
    }
}

fn allowed(shape: &Partition, j: usize, i: usize) -> bool {
    i == j || shape.part(i) < shape.part(j)
}

/// All pseudo-standard tableaux of shape `lambda` and content `nu`, as
/// nonnegative matrices with row sums `lambda`, column sums `nu` and the
/// support condition of [`Tableau::is_pseudo_standard`].
pub fn enumerate_pseudo_standard(lambda: &Partition, nu: &Composition) -> Result<Vec<Tableau>> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(lambda.size(), nu.size()));
    }
    let rows = lambda.len();
    let cols = nu.len();
    let mut out = Vec::new();
    let mut mat = vec![vec![0u32; cols]; rows];
    let mut colrem: Vec<u32> = nu.parts().to_vec();
    fill(lambda, 0, 0, lambda.part(0), &mut mat, &mut colrem, &mut |m: &Vec<Vec<u32>>| {
        out.push(Tableau { shape: lambda.clone(), content: nu.clone(), mult: m.clone() });
    });
    Ok(out)
}

fn fill(
    shape: &Partition,
    j: usize,
    i: usize,
    rem: u32,
    mat: &mut Vec<Vec<u32>>,
    colrem: &mut Vec<u32>,
    emit: &mut dyn FnMut(&Vec<Vec<u32>>),
) {
    let rows = mat.len();
    let cols = colrem.len();
    if j == rows {
        if colrem.iter().all(|&c| c == 0) {
            emit(mat);
        }
        return;
    }
    if i == cols {
        if rem == 0 {
            fill(shape, j + 1, 0, shape.part(j + 1), mat, colrem, emit);
        }
        return;
    }
    let hi = if allowed(shape, j, i) { rem.min(colrem[i]) } else { 0 };
    for v in (0..=hi).rev() {
        mat[j][i] = v;
        colrem[i] -= v;
        fill(shape, j, i + 1, rem - v, mat, colrem, emit);
        colrem[i] += v;
    }
    mat[j][i] = 0;
}
