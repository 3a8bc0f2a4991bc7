use weylext::engine::{
    euler_check, ext_nabla_nabla, ext_nabla_simple, hom_base_gl2, normalize_pair, Engine, ExtKind, ExtQuery, Status,
};
use weylext::{FieldParams, Weight};

fn w(a: i64, b: i64) -> Weight {
    Weight::new(vec![a, b]).unwrap()
}

fn cl(p: u32) -> FieldParams {
    FieldParams::classical(p).unwrap()
}

fn nn(l: (i64, i64), m: (i64, i64), deg: u32, p: FieldParams) -> u64 {
    let v = ext_nabla_nabla(&w(l.0, l.1), &w(m.0, m.1), deg, p).unwrap();
    assert_ne!(v.status, Status::Unsupported);
    v.dim
}

#[test]
fn normalization_examples() {
    let (a, b, t) = normalize_pair(&w(3, 1), &w(2, 2)).unwrap();
    assert_eq!((a, b, t), (w(2, 0), w(1, 1), -1));
    let (a, b, t) = normalize_pair(&w(3, 0), &w(2, 1)).unwrap();
    assert_eq!((a, b, t), (w(3, 0), w(2, 1), 0));
    let (a, b, t) = normalize_pair(&w(5, 5), &w(5, 5)).unwrap();
    assert_eq!((a, b, t), (w(0, 0), w(0, 0), -5));
}

#[test]
fn rank_and_degree_are_checked() {
    let three = Weight::new(vec![3, 0, 0]).unwrap();
    assert!(ext_nabla_nabla(&three, &three, 0, cl(3)).is_err());
    assert!(ext_nabla_nabla(&w(3, 0), &w(2, 0), 0, cl(3)).is_err());
}

#[test]
fn three_zero_against_two_one() {
    let p = cl(3);
    assert_eq!(nn((3, 0), (2, 1), 0, p), 1);
    assert_eq!(nn((3, 0), (2, 1), 1, p), 1);
    assert_eq!(nn((3, 0), (2, 1), 2, p), 0);
    let v = ext_nabla_nabla(&w(3, 0), &w(2, 1), 1, p).unwrap();
    assert_eq!(v.trace[0].rule, "odd-split");
    assert_eq!(v.trace[0].params["a"], 1);
    assert_eq!(v.trace[0].params["d"], 1);
}

#[test]
fn binary_partition_example() {
    let p = cl(2);
    let dims: Vec<u64> = (0..6).map(|m| nn((6, 0), (3, 3), m, p)).collect();
    assert_eq!(dims, vec![1, 1, 1, 1, 0, 0]);
}

#[test]
fn zero_statuses() {
    let v = ext_nabla_nabla(&w(4, 0), &w(2, 2), 0, cl(5)).unwrap();
    assert_eq!((v.dim, v.status), (0, Status::ZeroByBlock));
    let v = ext_nabla_nabla(&w(3, 0), &w(2, 1), 2, cl(3)).unwrap();
    assert_eq!((v.dim, v.status), (0, Status::ZeroByBound));
}

#[test]
fn twist_invariance_and_trace_head() {
    let p = cl(3);
    for m in 0..3 {
        assert_eq!(nn((3, 0), (2, 1), m, p), nn((7, 4), (6, 5), m, p));
    }
    let v = ext_nabla_nabla(&w(7, 4), &w(6, 5), 0, p).unwrap();
    assert_eq!(v.trace[0].rule, "det-twist");
    assert_eq!(v.trace[0].params["twist"], -4);
}

#[test]
fn json_round_trip() {
    let q: ExtQuery =
        serde_json::from_str(r#"{"kind":"nabla-nabla","lambda":[3,0],"mu":[2,1],"m":1,"p":3,"l":3}"#).unwrap();
    assert_eq!(q.kind, ExtKind::NablaNabla);
    let v = Engine::new().ext(&q).unwrap();
    let j = serde_json::to_value(&v).unwrap();
    assert_eq!(j["dim"], 1);
    assert_eq!(j["status"], "Exact");
    assert_eq!(j["trace"][0]["rule"], "odd-split");
    assert_eq!(j["trace"][0]["b"], 0);
}

#[test]
fn hom_base_examples() {
    assert_eq!(hom_base_gl2(&w(3, 0), &w(2, 1), cl(3)).unwrap(), 1);
    assert_eq!(hom_base_gl2(&w(4, 0), &w(2, 2), cl(5)).unwrap(), 0);
    assert_eq!(hom_base_gl2(&w(4, 1), &w(4, 1), cl(5)).unwrap(), 1);
    assert_eq!(hom_base_gl2(&w(2, 1), &w(3, 0), cl(3)).unwrap(), 0);
}

#[test]
fn simple_target_examples() {
    let p = cl(3);
    let v = ext_nabla_simple(&w(3, 0), &w(3, 0), 0, p).unwrap();
    assert_eq!((v.dim, v.status), (0, Status::Exact));
    assert_eq!(ext_nabla_simple(&w(1, 0), &w(1, 0), 0, p).unwrap().dim, 1);
    assert_eq!(ext_nabla_simple(&w(3, 0), &w(3, 0), 1, p).unwrap().dim, 0);
    assert_eq!(ext_nabla_simple(&w(3, 0), &w(2, 1), 0, p).unwrap().dim, 1);
    // a simple target above the induced module is out of reach in positive degree
    let v = ext_nabla_simple(&w(2, 1), &w(3, 0), 1, p).unwrap();
    assert_eq!(v.status, Status::Unsupported);
    assert_eq!(v.known(), None);
    let v = ext_nabla_simple(&w(2, 1), &w(3, 0), 0, p).unwrap();
    assert_eq!(v.dim, 0);
}

#[test]
fn euler_examples() {
    assert!(euler_check(&w(3, 0), &w(2, 1), cl(3)).unwrap());
    assert!(euler_check(&w(6, 0), &w(3, 3), cl(2)).unwrap());
    assert!(euler_check(&w(4, 0), &w(2, 2), cl(5)).unwrap());
    assert!(euler_check(&w(4, 0), &w(4, 0), cl(5)).is_err());
}

#[test]
fn cache_is_transparent() {
    let shared = Engine::new();
    let fresh = Engine::uncached();
    for p in [2, 3] {
        for r in 0..16i64 {
            for j in 0..=r / 2 {
                for k in 0..=r / 2 {
                    for m in 0..4 {
                        let a = shared.ext_nabla_nabla(&w(r - j, j), &w(r - k, k), m, cl(p)).unwrap();
                        let b = fresh.ext_nabla_nabla(&w(r - j, j), &w(r - k, k), m, cl(p)).unwrap();
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
    assert!(shared.cache_len() > 0);
    assert_eq!(fresh.cache_len(), 0);
}

#[test]
fn concurrent_queries_agree() {
    let engine = Engine::new();
    let p = cl(2);
    let expected: Vec<u64> = (1..=20).map(|a| nn((2 * a, 0), (a, a), 2, p)).collect();
    std::thread::scope(|s| {
        for _ in 0..4 {
            s.spawn(|| {
                for a in 1..=20i64 {
                    let v = engine.ext_nabla_nabla(&w(2 * a, 0), &w(a, a), 2, p).unwrap();
                    assert_eq!(v.dim, expected[a as usize - 1]);
                }
            });
        }
    });
}
