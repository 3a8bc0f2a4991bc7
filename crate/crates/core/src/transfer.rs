//! Moving Ext values between the Schur algebra and the Hecke algebra:
//! validity windows, conjugation and reflection symmetries, Künneth
//! combination over cuts, rank stability and global dimension.

use serde::{Deserialize, Serialize};

use crate::alcove::{d_reflect, d_value, find_horizontal_cut, is_interior, same_block_candidate, CutDecomposition};
use crate::engine::{Engine, ExtKind, ExtValue, Status};
use crate::error::{Error, Result};
use crate::partition::{conjugate, is_column_regular, is_row_regular, Partition};
use crate::weight::{FieldParams, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TransferResult {
    pub value: Option<u64>,
    pub window_ok: bool,
    pub rules: Vec<String>,
    pub caveats: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Schur,
    Hecke,
}

/// Which rule, if any, lets `Ext^i` between induced modules pass to Specht
/// modules unchanged.
fn hecke_window(lambda: &Partition, mu: &Partition, i: u32, l: u32) -> Option<&'static str> {
    if l >= 3 && i + 3 <= l {
        return Some("schur-hecke-window");
    }
    if i == 0 && l == 2 && (is_row_regular(lambda, 2) || is_column_regular(mu, 2)) {
        return Some("hom-equality-l2");
    }
    let three_part_regular = |x: &Partition| x.len() <= 3 && is_row_regular(x, 3);
    if i == 1 && l == 3 && three_part_regular(lambda) && three_part_regular(mu) {
        return Some("ringel-duality-l3");
    }
    None
}

fn window_caveat(i: u32, l: u32) -> String {
    let mut s = format!("degree {i} is outside 0..=l-3 for l = {l}");
    if i == 1 && l == 3 {
        s.push_str("; degree 1 at l = 3 needs both partitions row 3-regular with at most 3 parts");
    }
    if i == 0 && l == 2 {
        s.push_str("; degree 0 at l = 2 needs lambda row 2-regular or mu column 2-regular");
    }
    s
}

fn rank2(x: &Partition) -> Option<Weight> {
    (x.len() <= 2).then(|| Weight::from_partition(x, 2).expect("at most two parts"))
}

/// `(mu', lambda')`, carrying equal Ext in every degree.
pub fn conjugate_query(lambda: &Partition, mu: &Partition) -> (Partition, Partition) {
    (conjugate(mu), conjugate(lambda))
}

/// `true` when values computed at rank `n` hold at rank `big_n`.
pub fn rank_stability_note(lambda: &Partition, mu: &Partition, n: usize, big_n: usize) -> bool {
    n <= big_n && lambda.len() <= n && mu.len() <= n
}

/// Sum over compositions `m = m_1 + ... + m_k` of the products of the
/// block values `leaf(k, block, m_k)`.
pub fn kunneth_combine<F>(blocks: &CutDecomposition, m: u32, mut leaf: F) -> Result<u64>
where
    F: FnMut(usize, &(Partition, Partition), u32) -> Option<u64>,
{
    let mut table = Vec::with_capacity(blocks.blocks.len());
    for (k, block) in blocks.blocks.iter().enumerate() {
        let row: Result<Vec<u64>> = (0..=m).map(|deg| leaf(k, block, deg).ok_or(Error::MissingLeaf(k, deg))).collect();
        table.push(row?);
    }
    let mut acc = vec![0u64; m as usize + 1];
    acc[0] = 1;
    for row in &table {
        let mut next = vec![0u64; m as usize + 1];
        for (a, &x) in acc.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in row.iter().enumerate().take(m as usize + 1 - a) {
                next[a + b] += x * y;
            }
        }
        acc = next;
    }
    Ok(acc[m as usize])
}

fn engine_leaf(
    engine: &Engine,
    kind: ExtKind,
    block: &(Partition, Partition),
    m: u32,
    params: FieldParams,
) -> Option<u64> {
    let (a, b) = (rank2(&block.0)?, rank2(&block.1)?);
    let v: ExtValue = match kind {
        ExtKind::NablaNabla => engine.ext_nabla_nabla(&a, &b, m, params).ok()?,
        ExtKind::NablaSimple => engine.ext_nabla_simple(&a, &b, m, params).ok()?,
    };
    v.known()
}

/// Ext over a horizontal cut whose blocks have at most two rows. Simple
/// targets never transfer to the Hecke side.
pub fn kunneth_ext(
    engine: &Engine,
    lambda: &Partition,
    mu: &Partition,
    m: u32,
    kind: ExtKind,
    side: Side,
    params: FieldParams,
) -> Result<TransferResult> {
    if side == Side::Hecke && kind == ExtKind::NablaSimple {
        return Err(Error::Refused("simple-target Künneth values do not transfer to the Hecke side".into()));
    }
    let cut = find_horizontal_cut(lambda, mu)?
        .ok_or_else(|| Error::Unsupported(format!("{lambda} and {mu} have no horizontal cut")))?;
    let mut out = TransferResult { rules: vec!["horizontal-cut-kunneth".into()], ..Default::default() };
    if side == Side::Hecke {
        if !(params.l >= 3 && m + 3 <= params.l) {
            out.caveats.push(window_caveat(m, params.l));
            return Ok(out);
        }
        out.rules.push("schur-hecke-window".into());
    }
    out.window_ok = true;
    out.value = Some(kunneth_combine(&cut, m, |_, b, deg| engine_leaf(engine, kind, b, deg, params))?);
    Ok(out)
}

/// Schur-side `Ext^i(∇(lambda), ∇(mu))` for pairs reachable by the rank-2
/// engine: directly, after conjugation, or through a horizontal cut.
fn schur_value(
    engine: &Engine,
    lambda: &Partition,
    mu: &Partition,
    i: u32,
    params: FieldParams,
    rules: &mut Vec<String>,
) -> Result<Option<u64>> {
    if let (Some(a), Some(b)) = (rank2(lambda), rank2(mu)) {
        rules.push("rank-2-engine".into());
        rules.push("rank-stability".into());
        return Ok(engine.ext_nabla_nabla(&a, &b, i, params)?.known());
    }
    let (cl, cm) = conjugate_query(lambda, mu);
    if let (Some(a), Some(b)) = (rank2(&cl), rank2(&cm)) {
        rules.push("conjugation".into());
        rules.push("rank-2-engine".into());
        return Ok(engine.ext_nabla_nabla(&a, &b, i, params)?.known());
    }
    if let Some(cut) = find_horizontal_cut(lambda, mu)? {
        if cut.blocks.iter().all(|(a, b)| a.len() <= 2 && b.len() <= 2) {
            rules.push("horizontal-cut-kunneth".into());
            let v = kunneth_combine(&cut, i, |_, b, deg| engine_leaf(engine, ExtKind::NablaNabla, b, deg, params));
            return match v {
                Ok(v) => Ok(Some(v)),
                Err(Error::MissingLeaf(..)) => Ok(None),
                Err(e) => Err(e),
            };
        }
    }
    Err(Error::Unsupported(format!("{lambda} and {mu} are beyond rank 2 and have no usable cut")))
}

/// `Ext^i_H(S^lambda, S^mu)`, emitted only inside a window where it equals
/// the Schur-algebra value.
pub fn specht_ext(
    engine: &Engine,
    lambda: &Partition,
    mu: &Partition,
    i: u32,
    params: FieldParams,
) -> Result<TransferResult> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let mut out = TransferResult::default();
    match hecke_window(lambda, mu, i, params.l) {
        Some(rule) => {
            out.window_ok = true;
            out.rules.push(rule.into());
        }
        None => {
            out.caveats.push(window_caveat(i, params.l));
            return Ok(out);
        }
    }
    match schur_value(engine, lambda, mu, i, params, &mut out.rules) {
        Ok(Some(v)) => out.value = Some(v),
        Ok(None) => out.caveats.push("the engine could not decide the Schur-side value".into()),
        Err(Error::Unsupported(why)) => out.caveats.push(why),
        Err(e) => return Err(e),
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub result: TransferResult,
}

/// Maps `(lambda, mu)` to `(D lambda, D mu)` with
/// `D x = (s - x_n, ..., s - x_1)`, then evaluates the shifted pair.
/// Window violations are reported, not raised.
pub fn d_shift_query(
    engine: &Engine,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    s: u32,
    i: u32,
    params: FieldParams,
) -> Result<ShiftedQuery> {
    if s < lambda.part(0).max(mu.part(0)) {
        return Err(Error::Precondition(format!("s = {s} must be at least the first parts")));
    }
    let shift =
        |x: &Partition| -> Result<Partition> { d_reflect(&Weight::from_partition(x, n)?, i64::from(s)).to_partition() };
    let (a, b) = (shift(lambda)?, shift(mu)?);
    let mut result = TransferResult { rules: vec!["d-reflection".into()], ..Default::default() };
    if s <= lambda.part(0).max(mu.part(0)) {
        result.caveats.push(format!("s = {s} must exceed both first parts for the Hecke statement"));
        return Ok(ShiftedQuery { lambda: a, mu: b, result });
    }
    let inner = specht_ext(engine, &a, &b, i, params)?;
    result.window_ok = inner.window_ok;
    result.value = inner.value;
    result.rules.extend(inner.rules);
    result.caveats.extend(inner.caveats);
    Ok(ShiftedQuery { lambda: a, mu: b, result })
}

/// Global dimension of `S(n, r)` when `l > n`, or when `l = n` and `l`
/// divides `r`.
pub fn global_dimension(n: u32, r: u32, l: u32) -> Option<u64> {
    let (n, r, l) = (u64::from(n), u64::from(r), u64::from(l));
    if l > n {
        Some(2 * (n.max(1) - 1) * (r / l))
    } else if l == n && r % l == 0 {
        Some(2 * (l - 1) * (r / l))
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleExtBounds {
    /// `Ext^m(L, L)` and `Ext^m(∇, Δ)` vanish.
    pub ll_zero: bool,
    /// Both are one-dimensional.
    pub top_dim_one: bool,
}

/// Degree bounds for `Ext^m(L(lambda), L(mu))`: zero above
/// `d(lambda) + d(mu)`, and one-dimensional at that degree when both
/// weights are interior and linked.
pub fn simple_ext_bounds(lambda: &Weight, mu: &Weight, m: u32, l: u32) -> Result<SimpleExtBounds> {
    let top = d_value(lambda, l) + d_value(mu, l);
    let linked = same_block_candidate(lambda, mu, l)?;
    Ok(SimpleExtBounds {
        ll_zero: u64::from(m) > top || !linked,
        top_dim_one: u64::from(m) == top && linked && is_interior(lambda, l) && is_interior(mu, l),
    })
}

/// Largest degree with a nonzero engine value among pairs of 2-part
/// partitions of `r`.
pub fn max_nonzero_degree(engine: &Engine, r: u32, params: FieldParams) -> Result<Option<u32>> {
    let weights: Vec<Weight> =
        (0..=r / 2).map(|j| Weight::new(vec![i64::from(r - j), i64::from(j)]).expect("dominant")).collect();
    let mut best = None;
    for a in &weights {
        for b in &weights {
            let top = d_value(a, params.l).saturating_sub(d_value(b, params.l)) as u32;
            for m in 0..=top {
                let v = engine.ext_nabla_nabla(a, b, m, params)?;
                if v.status == Status::Unsupported {
                    return Err(Error::Unsupported(format!("Ext^{m}({a}, {b})")));
                }
                if v.dim > 0 {
                    best = best.max(Some(m));
                }
            }
        }
    }
    Ok(best)
}
