//! The rank-2 reductions. Each solved key stores its dimension, the rule
//! that produced it and the keys it was reduced to.
//!
//! After normalization `lambda = (c, 0)` and `mu = (x + e, e)` with
//! `c = x + 2e`. Writing `c = L a + i` with `0 <= i < L` for the layer
//! modulus `L`, the linkage class of `mu` has one of two shapes:
//!
//! * odd: `x = L b + L - 2 - i`, `e = L f + i + 1`, `a - b = 2f + 1`;
//! * even: `x = L b + i`, `e = L f`, `a - b = 2f`.
//!
//! The odd shape only occurs for `i <= L - 2`.

use dashmap::DashMap;

use super::{ExtKind, Key, Node, Status, TraceStep};

/// Layer rank used by the termination measure: the quantum layer sits above
/// the classical one.
fn measure(k: &Key) -> (u8, i64, i64) {
    (u8::from(k.layer != k.p), k.m, k.lam.0 - k.lam.1)
}

pub(crate) fn solve(memo: &DashMap<Key, Node>, key: Key) -> Option<u64> {
    if let Some(n) = memo.get(&key) {
        return n.dim;
    }
    let node = match key.kind {
        ExtKind::NablaNabla => nabla_nabla(memo, &key),
        ExtKind::NablaSimple => nabla_simple(memo, &key),
    };
    let dim = node.dim;
    memo.insert(key, node);
    dim
}

fn leaf(dim: u64, status: Status, step: TraceStep) -> Node {
    Node { dim: Some(dim), status, step, children: Vec::new() }
}

fn unsupported(step: TraceStep) -> Node {
    Node { dim: None, status: Status::Unsupported, step, children: Vec::new() }
}

/// Normalizes a child query and solves it, asserting the termination
/// measure strictly drops.
fn child(
    memo: &DashMap<Key, Node>,
    parent: &Key,
    lam: (i64, i64),
    mu: (i64, i64),
    m: i64,
    layer: u32,
) -> (Key, Option<u64>) {
    let t = lam.1;
    let key = Key { kind: parent.kind, layer, p: parent.p, lam: (lam.0 - t, 0), mu: (mu.0 - t, mu.1 - t), m };
    assert!(measure(&key) < measure(parent), "non-terminating reduction {parent:?} -> {key:?}");
    (key, solve(memo, key))
}

fn combine(step: TraceStep, parts: Vec<(Key, Option<u64>)>) -> Node {
    let dim = parts.iter().try_fold(0u64, |acc, (_, d)| d.map(|d| acc + d));
    Node {
        dim,
        status: if dim.is_some() { Status::Exact } else { Status::Unsupported },
        step,
        children: parts.into_iter().map(|(k, _)| k).collect(),
    }
}

fn same_block(lam: (i64, i64), mu: (i64, i64), l: u32) -> bool {
    let l = i64::from(l);
    let mut a = [(lam.0 - 1).rem_euclid(l), (lam.1 - 2).rem_euclid(l)];
    let mut b = [(mu.0 - 1).rem_euclid(l), (mu.1 - 2).rem_euclid(l)];
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn delta(cond: bool) -> u64 {
    u64::from(cond)
}

enum Shape {
    Odd { a: i64, b: i64, i: i64, f: i64 },
    Even { a: i64, b: i64, i: i64, f: i64 },
    Wall { a: i64, b: i64, f: i64 },
    Unmatched,
}

fn shape(c: i64, x: i64, e: i64, l: i64) -> Shape {
    let (a, i) = (c.div_euclid(l), c.rem_euclid(l));
    if i <= l - 2 {
        if (x - i).rem_euclid(l) == 0 && e.rem_euclid(l) == 0 {
            let (b, f) = ((x - i).div_euclid(l), e.div_euclid(l));
            if a - b == 2 * f {
                return Shape::Even { a, b, i, f };
            }
        } else if (x + 2 + i).rem_euclid(l) == 0 && (e - i - 1).rem_euclid(l) == 0 {
            let (b, f) = ((x + 2 + i).div_euclid(l) - 1, (e - i - 1).div_euclid(l));
            if a - b == 2 * f + 1 {
                return Shape::Odd { a, b, i, f };
            }
        }
    } else if (x + 1).rem_euclid(l) == 0 && e.rem_euclid(l) == 0 {
        let (b, f) = ((x + 1).div_euclid(l) - 1, e.div_euclid(l));
        if a - b == 2 * f {
            return Shape::Wall { a, b, f };
        }
    }
    Shape::Unmatched
}

/// Checks shared by both kinds. Returns a finished node if one applies.
fn common_prechecks(k: &Key) -> Option<Node> {
    let (lam, mu, m) = (k.lam, k.mu, k.m);
    if m < 0 {
        return Some(leaf(0, Status::Exact, TraceStep::new("negative-degree", &[("m", m)])));
    }
    if lam.0 < lam.1 {
        return Some(leaf(0, Status::Exact, TraceStep::new("nondominant", &[("c", lam.0 - lam.1)])));
    }
    if k.layer == 0 {
        let d = delta(m == 0 && lam == mu);
        return Some(leaf(d, Status::Exact, TraceStep::new("semisimple", &[("m", m)])));
    }
    if !same_block(lam, mu, k.layer) {
        return Some(leaf(0, Status::ZeroByBlock, TraceStep::new("block", &[("l", i64::from(k.layer))])));
    }
    None
}

fn params(k: &Key) -> [(&'static str, i64); 2] {
    [("l", i64::from(k.layer)), ("m", k.m)]
}

fn nabla_nabla(memo: &DashMap<Key, Node>, k: &Key) -> Node {
    if let Some(n) = common_prechecks(k) {
        return n;
    }
    let (lam, mu, m, l) = (k.lam, k.mu, k.m, k.layer);
    if lam == mu {
        return leaf(delta(m == 0), Status::Exact, TraceStep::new("extvan", &[("m", m)]));
    }
    let (c, e) = (lam.0, mu.1);
    let x = mu.0 - mu.1;
    if e < 0 {
        return leaf(0, Status::Exact, TraceStep::new("dominance", &[("e", e)]));
    }
    let li = i64::from(l);
    let bound = c.div_euclid(li) - x.div_euclid(li);
    if m > bound {
        return leaf(0, Status::ZeroByBound, TraceStep::new("bound", &[("m", m), ("top", bound)]));
    }
    let [pl, pm] = params(k);
    match shape(c, x, e, li) {
        Shape::Odd { a, b, i, f } => {
            let step = TraceStep::new("odd-split", &[("a", a), ("b", b), ("i", i), ("f", f), ("d", e), pl, pm]);
            let first = child(memo, k, (li * a - 1, i + 1), mu, m - 1, l);
            let second = child(memo, k, (a - 1, 0), (b + f, f), m, k.p);
            combine(step, vec![first, second])
        }
        Shape::Even { a, b, i, f } => {
            if m == 0 {
                let h = hom_base_raw((li * (a - b) + i, 0), (i + e, e), l, k.p);
                let step = TraceStep::new("hom-reflection", &[("a", a), ("b", b), ("i", i), ("f", f), ("d", e), pl]);
                return leaf(h, Status::Exact, step);
            }
            let step = TraceStep::new("even-shift", &[("a", a), ("b", b), ("i", i), ("f", f), ("d", e), pl, pm]);
            let next = child(memo, k, (li * (a - b) - 1, i + 1), (i + e, e), m - 1, l);
            combine(step, vec![next])
        }
        Shape::Wall { a, b, f } => {
            let step = TraceStep::new("wall-frobenius", &[("a", a), ("b", b), ("f", f), ("d", e), pl, pm]);
            let next = child(memo, k, (a, 0), (b + f, f), m, k.p);
            combine(step, vec![next])
        }
        Shape::Unmatched => unsupported(TraceStep::new("shape-unmatched", &[("c", c), ("x", x), ("e", e), pl])),
    }
}

fn nabla_simple(memo: &DashMap<Key, Node>, k: &Key) -> Node {
    if let Some(n) = common_prechecks(k) {
        return n;
    }
    let (lam, mu, m, l) = (k.lam, k.mu, k.m, k.layer);
    let (c, e) = (lam.0, mu.1);
    let x = mu.0 - mu.1;
    if lam == mu && m == 0 {
        let s = delta(is_simple_raw(c as u64, l, k.p));
        return leaf(s, Status::Exact, TraceStep::new("simple-base", &[("c", c), ("l", i64::from(l))]));
    }
    if e < 0 {
        if m == 0 {
            return leaf(0, Status::Exact, TraceStep::new("not-composition-factor", &[("e", e)]));
        }
        return unsupported(TraceStep::new("target-above", &[("e", e), ("m", m)]));
    }
    let li = i64::from(l);
    let [pl, pm] = params(k);
    match shape(c, x, e, li) {
        Shape::Odd { a, b, i, f } => {
            let step = TraceStep::new("odd-split-simple", &[("a", a), ("b", b), ("i", i), ("f", f), ("d", e), pl, pm]);
            let first = child(memo, k, (li * a - 1, i + 1), mu, m - 1, l);
            let second = child(memo, k, (a - 1, 0), (b + f, f), m, k.p);
            combine(step, vec![first, second])
        }
        Shape::Even { a, b, i, f } => {
            if m == 0 {
                let step = TraceStep::new("even-at-m0", &[("a", a), ("b", b), ("i", i), ("f", f), ("d", e), pl]);
                return leaf(0, Status::Exact, step);
            }
            let step = TraceStep::new("even-lower", &[("a", a), ("b", b), ("i", i), ("f", f), ("d", e), pl, pm]);
            let next = child(memo, k, (li * a - 1, i + 1), mu, m - 1, l);
            combine(step, vec![next])
        }
        Shape::Wall { a, b, f } => {
            let step = TraceStep::new("wall-frobenius-simple", &[("a", a), ("b", b), ("f", f), ("d", e), pl, pm]);
            let next = child(memo, k, (a, 0), (b + f, f), m, k.p);
            combine(step, vec![next])
        }
        Shape::Unmatched => unsupported(TraceStep::new("shape-unmatched", &[("c", c), ("x", x), ("e", e), pl])),
    }
}

/// `Hom(∇(lam), ∇(mu))` at rank 2 with layer modulus `l` over
/// characteristic `p`: nonzero exactly for the identity and for a single
/// reflection in a wall of modulus `l p^k`.
pub fn hom_base_raw(lam: (i64, i64), mu: (i64, i64), l: u32, p: u32) -> u64 {
    if lam == mu {
        return 1;
    }
    if lam.0 + lam.1 != mu.0 + mu.1 || lam.0 < lam.1 || mu.0 < mu.1 {
        return 0;
    }
    let e = mu.1 - lam.1;
    let x = mu.0 - mu.1;
    if e <= 0 || l == 0 {
        return 0;
    }
    let n = x + 1 + e;
    let mut modulus = i64::from(l);
    while modulus <= n {
        if e < modulus && n % modulus == 0 {
            return 1;
        }
        if p == 0 {
            break;
        }
        modulus *= i64::from(p);
    }
    0
}

/// `∇(c)` is simple iff the product of `digit + 1` over the digits of `c`
/// in base `(l, p, p, ...)` equals `c + 1`.
pub fn is_simple_raw(c: u64, l: u32, p: u32) -> bool {
    if l == 0 {
        return true;
    }
    let l = u64::from(l);
    let mut prod = c % l + 1;
    let mut rest = c / l;
    if p == 0 {
        prod *= rest + 1;
    } else {
        while rest > 0 {
            prod *= rest % u64::from(p) + 1;
            rest /= u64::from(p);
        }
    }
    prod == c + 1
}
