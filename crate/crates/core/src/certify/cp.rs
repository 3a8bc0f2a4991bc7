//! Local reflections: moving boxes up between two rows across a wall.

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::weight::FieldParams;

/// `d` boxes move from row `i` up to row `j < i` with
/// `d = lambda_i - lambda_j - i + j - m * modulus` and `0 < d < modulus`.
/// The modulus is `p^a`, or `l p^(a-1)` for adjacent rows when `l != p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpCertificate {
    pub i: usize,
    pub j: usize,
    pub a: u32,
    pub m: i64,
    pub d: u32,
    pub modulus: u64,
}

impl CpCertificate {
    /// Applies the move to `lambda`.
    pub fn apply(&self, lambda: &Partition) -> Option<Partition> {
        let mut v = lambda.padded(self.i);
        let (i, j) = (self.i - 1, self.j - 1);
        v[i] = v[i].checked_sub(self.d)?;
        v[j] += self.d;
        Partition::new(v).ok()
    }
}

fn moduli(params: FieldParams, adjacent: bool, limit: i64) -> Vec<(u32, i64)> {
    let mut out = Vec::new();
    let (base, step) = if params.is_classical() {
        (i64::from(params.p), i64::from(params.p))
    } else if adjacent {
        (i64::from(params.l), i64::from(params.p))
    } else {
        return out;
    };
    let mut modulus = base;
    let mut a = 1;
    while modulus <= limit {
        out.push((a, modulus));
        if step <= 1 {
            break;
        }
        modulus *= step;
        a += 1;
    }
    out
}

/// Searches for a single local reflection carrying `lambda` to `mu`.
pub fn carter_payne_certificate(lambda: &Partition, mu: &Partition, params: FieldParams) -> Option<CpCertificate> {
    if lambda.size() != mu.size() || lambda == mu {
        return None;
    }
    let rows = lambda.len().max(mu.len());
    for i in 2..=rows {
        let avail = lambda.part(i - 1);
        if avail == 0 {
            continue;
        }
        for j in 1..i {
            let n = i64::from(avail) - i64::from(lambda.part(j - 1)) - i as i64 + j as i64;
            // d = n - m * modulus lies in (0, modulus) and d <= avail
            for (a, modulus) in moduli(params, i == j + 1, i64::from(avail) - n) {
                let d = n.rem_euclid(modulus);
                if d == 0 || d > i64::from(avail) {
                    continue;
                }
                let cert = CpCertificate { i, j, a, m: (n - d) / modulus, d: d as u32, modulus: modulus as u64 };
                if cert.apply(lambda).as_ref() == Some(mu) {
                    return Some(cert);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn cl(p: u32) -> FieldParams {
        FieldParams::classical(p).unwrap()
    }

    #[test]
    fn examples() {
        let c = carter_payne_certificate(&p(&[2, 1]), &p(&[3]), cl(3)).unwrap();
        assert_eq!((c.i, c.j, c.a, c.m, c.d), (2, 1, 1, -1, 1));
        assert!(carter_payne_certificate(&p(&[2, 2]), &p(&[4]), cl(5)).is_none());
        assert!(carter_payne_certificate(&p(&[7, 3]), &p(&[4, 3, 3]), cl(3)).is_none());
        assert!(carter_payne_certificate(&p(&[4, 3, 3]), &p(&[7, 3]), cl(3)).is_none());
        assert!(carter_payne_certificate(&p(&[1, 1, 1]), &p(&[2, 1]), cl(3)).is_some());
    }

    #[test]
    fn quantum_moduli_need_adjacent_rows() {
        let q = FieldParams::new(0, 3).unwrap();
        assert!(carter_payne_certificate(&p(&[2, 1]), &p(&[3]), q).is_some());
        // rows 3 and 1 are not adjacent
        assert!(carter_payne_certificate(&p(&[1, 1, 1]), &p(&[2, 1]), q).is_none());
    }
}
