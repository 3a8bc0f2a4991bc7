use weylext::alcove::same_block_candidate;
use weylext::engine::{hom_base_gl2, Engine, Status};
use weylext::oracle::{oracle_hom_dim, oracle_hom_to_simple};
use weylext::{FieldParams, Weight};

/// Weights of equal degree whose differences are `c` and `c2`.
fn embed(c: u32, c2: u32) -> (Weight, Weight) {
    let r = i64::from(c.max(c2));
    let (c, c2) = (i64::from(c), i64::from(c2));
    let lam = Weight::new(vec![(r + c) / 2, (r - c) / 2]).unwrap();
    let mu = Weight::new(vec![(r + c2) / 2, (r - c2) / 2]).unwrap();
    (lam, mu)
}

#[test]
fn hom_into_simple_matches_engine() {
    let engine = Engine::new();
    for p in [2, 3, 5] {
        let params = FieldParams::classical(p).unwrap();
        for c in 0..=40u32 {
            for c2 in (c % 2..=40).step_by(2) {
                let (lam, mu) = embed(c, c2);
                let v = engine.ext_nabla_simple(&lam, &mu, 0, params).unwrap();
                assert_ne!(v.status, Status::Unsupported);
                assert_eq!(v.dim, oracle_hom_to_simple(c, c2, params).unwrap(), "p={p} c={c} c2={c2}");
            }
        }
    }
}

#[test]
fn quantum_characteristic_zero_matches_engine() {
    let engine = Engine::new();
    for l in [2, 3, 4, 5] {
        let params = FieldParams::new(0, l).unwrap();
        for c in 0..=24u32 {
            for c2 in (c % 2..=24).step_by(2) {
                let (lam, mu) = embed(c, c2);
                let o = oracle_hom_dim(c, c2, params).unwrap();
                assert_eq!(engine.ext_nabla_nabla(&lam, &mu, 0, params).unwrap().dim, o, "l={l} c={c} c2={c2}");
                assert_eq!(hom_base_gl2(&lam, &mu, params).unwrap(), o);
            }
        }
    }
}

#[test]
fn nonzero_hom_implies_same_block() {
    for p in [2, 3, 5] {
        let params = FieldParams::classical(p).unwrap();
        for c in 0..=30u32 {
            for c2 in (c % 2..=30).step_by(2) {
                let (lam, mu) = embed(c, c2);
                if oracle_hom_dim(c, c2, params).unwrap() > 0 {
                    assert!(same_block_candidate(&lam, &mu, p).unwrap());
                }
            }
        }
    }
}
