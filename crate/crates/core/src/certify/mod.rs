//! Existence certificates for nonzero homomorphisms, and closed-form
//! dimension predicates.

pub mod cp;
pub mod fm;
pub mod tableau;

pub use cp::{carter_payne_certificate, CpCertificate};
pub use fm::{
    canonicalize_fm_pair, f_coeff, fayers_martin_certificate, g_coeff, gamma_candidates, is_nice, FmBounds,
    FmCertificate, ShapeData,
};
pub use tableau::{enumerate_pseudo_standard, Tableau};

use num_bigint::BigInt;

use crate::alcove::{is_interior, is_strictly_dominant};
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::mullineux::mullineux;
use crate::partition::{conjugate, is_row_regular, strictly_dominates, Partition};
use crate::weight::Weight;

/// Ext dimensions for a strictly dominant interior weight and a commuting
/// set of `d` reflections: `(Ext^i(∇, L), Ext^i(∇, ∇)) = (delta_{i,d}, C(d, i))`.
pub fn wen_dims(lambda: &Weight, l: u32, d: u32, i: u32) -> Result<(u64, BigInt)> {
    if !is_strictly_dominant(lambda, l) {
        return Err(Error::Precondition(format!("{lambda} is not strictly dominant for l = {l}")));
    }
    if !is_interior(lambda, l) {
        return Err(Error::Precondition(format!("{lambda} lies on a wall for l = {l}")));
    }
    if d as usize > lambda.rank() / 2 {
        return Err(Error::OutOfRange(format!("d = {d} exceeds half the rank {}", lambda.rank())));
    }
    if i > d {
        return Err(Error::OutOfRange(format!("degree {i} exceeds d = {d}")));
    }
    Ok((u64::from(i == d), binomial(u64::from(d), u64::from(i))))
}

/// `true` iff `m(mu)'` is not strictly dominated by `lambda`; then
/// `Ext^1(D^lambda, D^mu)` equals `Hom(rad S^lambda, D^mu)`.
pub fn kleshchev_sheth_condition(lambda: &Partition, mu: &Partition, l: u32) -> Result<bool> {
    if l < 4 {
        return Err(Error::InvalidParams(format!("l = {l}: the criterion needs l >= 4")));
    }
    for x in [lambda, mu] {
        if !is_row_regular(x, l) {
            return Err(Error::NotRowRegular(x.to_string(), l));
        }
    }
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let target = conjugate(&mullineux(mu, l)?);
    Ok(!strictly_dominates(lambda, &target))
}

/// Upper bound on `dim Hom(∇(r), ∇(lambda))`.
pub fn kulkarni_bound(_lambda: &Partition) -> u64 {
    1
}
