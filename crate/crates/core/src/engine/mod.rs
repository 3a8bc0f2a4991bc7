//! Memoized rank-2 Ext engine.
//!
//! Queries are normalized by a determinant twist so the first weight is
//! `(c, 0)`, then reduced by the rank-2 recursions until they reach a base
//! case. Every reduction is recorded, so each answer carries the chain of
//! rules that produced it.
//!
//! Convention: a nonzero `Ext(∇(lambda), ∇(mu))` requires the first
//! argument to dominate the second.

mod rules;

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::alcove::d_value;
use crate::error::{Error, Result};
use crate::weight::{FieldParams, Weight};

pub use rules::{hom_base_raw, is_simple_raw};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtKind {
    /// `Ext(∇(lambda), ∇(mu))`.
    NablaNabla,
    /// `Ext(∇(lambda), L(mu))`.
    NablaSimple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layer {
    Quantum,
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Exact,
    ZeroByBlock,
    ZeroByBound,
    Unsupported,
}

impl Status {
    pub fn is_zero_rule(self) -> bool {
        matches!(self, Status::ZeroByBlock | Status::ZeroByBound)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtQuery {
    pub kind: ExtKind,
    pub lambda: Weight,
    pub mu: Weight,
    pub m: u32,
    #[serde(flatten)]
    pub params: FieldParams,
}

impl ExtQuery {
    pub fn layer(&self) -> Layer {
        if self.params.is_classical() {
            Layer::Classical
        } else {
            Layer::Quantum
        }
    }
}

/// One rule application with its instantiated parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: String,
    #[serde(flatten)]
    pub params: BTreeMap<String, i64>,
}

impl TraceStep {
    pub(crate) fn new(rule: &str, params: &[(&str, i64)]) -> Self {
        Self { rule: rule.to_string(), params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtValue {
    pub dim: u64,
    pub status: Status,
    pub trace: Vec<TraceStep>,
}

impl ExtValue {
    pub fn is_unsupported(&self) -> bool {
        self.status == Status::Unsupported
    }

    /// The dimension, or `None` when the engine could not decide it.
    pub fn known(&self) -> Option<u64> {
        (!self.is_unsupported()).then_some(self.dim)
    }
}

/// Memo key: kind, layer modulus, characteristic, normalized pair, degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    pub kind: ExtKind,
    pub layer: u32,
    pub p: u32,
    pub lam: (i64, i64),
    pub mu: (i64, i64),
    pub m: i64,
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub dim: Option<u64>,
    pub status: Status,
    pub step: TraceStep,
    pub children: Vec<Key>,
}

/// The engine and its memo table. The table is safe to share across
/// threads; [`Engine::uncached`] confines memoization to a single query.
#[derive(Debug, Default)]
pub struct Engine {
    memo: Option<DashMap<Key, Node>>,
}

impl Engine {
    pub fn new() -> Self {
        Self { memo: Some(DashMap::new()) }
    }

    pub fn uncached() -> Self {
        Self { memo: None }
    }

    /// Process-wide shared engine.
    pub fn global() -> &'static Engine {
        static GLOBAL: OnceLock<Engine> = OnceLock::new();
        GLOBAL.get_or_init(Engine::new)
    }

    pub fn cache_len(&self) -> usize {
        self.memo.as_ref().map_or(0, DashMap::len)
    }

    pub fn ext(&self, q: &ExtQuery) -> Result<ExtValue> {
        let (lam, mu, twist) = normalize_pair(&q.lambda, &q.mu)?;
        let local;
        let memo = match &self.memo {
            Some(m) => m,
            None => {
                local = DashMap::new();
                &local
            }
        };
        let key =
            Key { kind: q.kind, layer: q.params.l, p: q.params.p, lam: pair(&lam), mu: pair(&mu), m: i64::from(q.m) };
        rules::solve(memo, key);
        let root = memo.get(&key).expect("solved key is present").clone();
        let mut trace = Vec::new();
        if twist != 0 {
            trace.push(TraceStep::new("det-twist", &[("twist", twist)]));
        }
        collect_trace(memo, key, &mut HashSet::new(), &mut trace);
        Ok(ExtValue {
            dim: root.dim.unwrap_or(0),
            status: if root.dim.is_none() { Status::Unsupported } else { root.status },
            trace,
        })
    }

    pub fn ext_nabla_nabla(&self, lambda: &Weight, mu: &Weight, m: u32, params: FieldParams) -> Result<ExtValue> {
        self.ext(&ExtQuery { kind: ExtKind::NablaNabla, lambda: lambda.clone(), mu: mu.clone(), m, params })
    }

    pub fn ext_nabla_simple(&self, lambda: &Weight, mu: &Weight, m: u32, params: FieldParams) -> Result<ExtValue> {
        self.ext(&ExtQuery { kind: ExtKind::NablaSimple, lambda: lambda.clone(), mu: mu.clone(), m, params })
    }

    /// `Ext^m(∇, ∇)` dimensions for `m` in `0..=top`.
    pub fn ext_series(&self, lambda: &Weight, mu: &Weight, top: u32, params: FieldParams) -> Result<Vec<ExtValue>> {
        (0..=top).map(|m| self.ext_nabla_nabla(lambda, mu, m, params)).collect()
    }

    /// Alternating sum of `dim Ext^m(∇(lambda), ∇(mu))` over
    /// `0 <= m <= d(lambda) - d(mu)` is zero. All higher terms vanish.
    pub fn euler_check(&self, lambda: &Weight, mu: &Weight, params: FieldParams) -> Result<bool> {
        if lambda == mu {
            return Err(Error::Precondition("euler_check needs distinct weights".into()));
        }
        let top = d_value(lambda, params.l) as i64 - d_value(mu, params.l) as i64;
        let mut sum = 0i64;
        for m in 0..=top.max(-1) {
            let v = self.ext_nabla_nabla(lambda, mu, m as u32, params)?;
            let dim = v.known().ok_or_else(|| Error::Unsupported(format!("Ext^{m}({lambda}, {mu})")))?;
            sum += if m % 2 == 0 { dim as i64 } else { -(dim as i64) };
        }
        Ok(sum == 0)
    }
}

fn pair(w: &Weight) -> (i64, i64) {
    (w.entries()[0], w.entries()[1])
}

fn collect_trace(memo: &DashMap<Key, Node>, key: Key, seen: &mut HashSet<Key>, out: &mut Vec<TraceStep>) {
    if !seen.insert(key) {
        return;
    }
    let node = memo.get(&key).expect("child key is present").clone();
    out.push(node.step);
    for child in node.children {
        collect_trace(memo, child, seen, out);
    }
}

fn check_rank2(lambda: &Weight, mu: &Weight) -> Result<()> {
    if lambda.rank() != 2 {
        return Err(Error::RankMismatch(lambda.rank(), 2));
    }
    if mu.rank() != 2 {
        return Err(Error::RankMismatch(mu.rank(), 2));
    }
    if lambda.degree() != mu.degree() {
        return Err(Error::SizeMismatch(lambda.degree() as u64, mu.degree() as u64));
    }
    Ok(())
}

/// Twists both weights by `det^{-lambda_2}` so the first becomes
/// `(lambda_1 - lambda_2, 0)`. Returns the twist applied.
pub fn normalize_pair(lambda: &Weight, mu: &Weight) -> Result<(Weight, Weight, i64)> {
    check_rank2(lambda, mu)?;
    let t = -lambda.entries()[1];
    Ok((lambda.twist(t), mu.twist(t), t))
}

/// Dimension of `Hom(∇(lambda), ∇(mu))` for rank 2, always 0 or 1.
pub fn hom_base_gl2(lambda: &Weight, mu: &Weight, params: FieldParams) -> Result<u64> {
    let (lam, mu, _) = normalize_pair(lambda, mu)?;
    Ok(hom_base_raw(pair(&lam), pair(&mu), params.l, params.p))
}

pub fn ext_nabla_nabla(lambda: &Weight, mu: &Weight, m: u32, params: FieldParams) -> Result<ExtValue> {
    Engine::global().ext_nabla_nabla(lambda, mu, m, params)
}

pub fn ext_nabla_simple(lambda: &Weight, mu: &Weight, m: u32, params: FieldParams) -> Result<ExtValue> {
    Engine::global().ext_nabla_simple(lambda, mu, m, params)
}

pub fn euler_check(lambda: &Weight, mu: &Weight, params: FieldParams) -> Result<bool> {
    Engine::global().euler_check(lambda, mu, params)
}
