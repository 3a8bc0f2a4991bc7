use weylext::alcove::find_horizontal_cut;
use weylext::certify::{
    carter_payne_certificate, fayers_martin_certificate, kleshchev_sheth_condition, wen_dims, FmBounds,
};
use weylext::engine::{hom_base_gl2, Engine, ExtKind};
use weylext::partition::partitions_of;
use weylext::transfer::{kunneth_ext, simple_ext_bounds, specht_ext, Side};
use weylext::{Error, FieldParams, Partition, Weight};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn cl(p: u32) -> FieldParams {
    FieldParams::classical(p).unwrap()
}

#[test]
fn local_reflection_implies_tableau_certificate() {
    let mut exceptions = Vec::new();
    for n in 1..=13 {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                let Ok(fm) = fayers_martin_certificate(&lam, &mu, 3, FmBounds::default()) else { continue };
                let cp = carter_payne_certificate(&mu, &lam, cl(3)).is_some();
                if cp && fm.is_none() {
                    exceptions.push((lam.clone(), mu.clone()));
                }
            }
        }
    }
    assert_eq!(exceptions, vec![(p(&[5, 3, 2]), p(&[3, 3, 2, 2]))]);
}

#[test]
fn tableau_certificates_beyond_local_reflections() {
    for (lam, mu) in [(p(&[7, 3]), p(&[4, 3, 3])), (p(&[8, 4]), p(&[4, 4, 4])), (p(&[6, 3, 3]), p(&[3, 3, 3, 3]))] {
        assert!(fayers_martin_certificate(&lam, &mu, 3, FmBounds::default()).unwrap().is_some(), "{lam}");
        assert!(carter_payne_certificate(&mu, &lam, cl(3)).is_none());
    }
}

#[test]
fn certificate_orientation_matches_hom() {
    let w = |a, b| Weight::new(vec![a, b]).unwrap();
    assert_eq!(hom_base_gl2(&w(3, 0), &w(2, 1), cl(3)).unwrap(), 1);
    assert!(carter_payne_certificate(&p(&[2, 1]), &p(&[3]), cl(3)).is_some());
}

#[test]
fn predicate_errors() {
    let lam = Weight::new(vec![6, 0]).unwrap();
    assert!(wen_dims(&lam, 3, 1, 0).is_ok());
    assert!(matches!(kleshchev_sheth_condition(&p(&[2]), &p(&[2]), 3), Err(Error::InvalidParams(_))));
    assert!(matches!(kleshchev_sheth_condition(&p(&[4]), &p(&[3]), 5), Err(Error::SizeMismatch(4, 3))));
}

#[test]
fn stacked_pairs_through_cuts() {
    let e = Engine::new();
    let (lam, mu) = (p(&[5, 5, 1, 1]), p(&[6, 4, 2]));
    let cut = find_horizontal_cut(&lam, &mu).unwrap().unwrap();
    assert_eq!(cut.blocks.len(), 2);
    assert_eq!(cut.reassemble(), (lam.clone(), mu.clone()));
    let schur = kunneth_ext(&e, &lam, &mu, 0, ExtKind::NablaNabla, Side::Schur, cl(5)).unwrap();
    let hecke = kunneth_ext(&e, &lam, &mu, 0, ExtKind::NablaNabla, Side::Hecke, cl(5)).unwrap();
    assert_eq!(schur.value, hecke.value);
    let hecke_side = specht_ext(&e, &lam, &mu, 0, cl(5)).unwrap();
    assert_eq!(hecke_side.value, schur.value);
    assert!(hecke_side.rules.iter().any(|r| r == "horizontal-cut-kunneth"));
}

#[test]
fn three_row_pairs_without_cut_report_caveats() {
    let e = Engine::new();
    let r = specht_ext(&e, &p(&[3, 2, 1]), &p(&[2, 2, 2]), 0, cl(5)).unwrap();
    assert!(r.window_ok && r.value.is_none() && !r.caveats.is_empty());
    let r = specht_ext(&e, &p(&[5, 3, 1]), &p(&[4, 3, 2]), 1, cl(3)).unwrap();
    assert!(r.window_ok && r.rules.iter().any(|x| x == "ringel-duality-l3"));
    assert!(r.value.is_none());
}

#[test]
fn simple_ext_top_degree_matches_bound() {
    let w = |a, b| Weight::new(vec![a, b]).unwrap();
    let b = simple_ext_bounds(&w(4, 0), &w(4, 0), 2, 3).unwrap();
    assert!(b.top_dim_one && !b.ll_zero);
    let b = simple_ext_bounds(&w(4, 0), &w(4, 0), 3, 3).unwrap();
    assert!(b.ll_zero);
}

#[test]
fn kunneth_is_associative() {
    use weylext::alcove::{CutDecomposition, CutOrientation};
    use weylext::transfer::kunneth_combine;
    let seqs = [vec![1u64, 2, 1], vec![0, 1, 1], vec![1, 1]];
    let cut =
        |n: usize| CutDecomposition { blocks: vec![(p(&[1]), p(&[1])); n], orientation: CutOrientation::Horizontal };
    let conv = |a: &[u64], b: &[u64]| -> Vec<u64> {
        (0..a.len() + b.len() - 1)
            .map(|m| (0..=m).map(|k| a.get(k).unwrap_or(&0) * b.get(m - k).unwrap_or(&0)).sum())
            .collect()
    };
    let left = conv(&conv(&seqs[0], &seqs[1]), &seqs[2]);
    let right = conv(&seqs[0], &conv(&seqs[1], &seqs[2]));
    assert_eq!(left, right);
    for m in 0..left.len() as u32 {
        let v = kunneth_combine(&cut(3), m, |k, _, d| Some(*seqs[k].get(d as usize).unwrap_or(&0))).unwrap();
        assert_eq!(v, left[m as usize]);
    }
}

#[test]
fn query_symmetries_are_involutions() {
    use weylext::transfer::{conjugate_query, d_shift_query};
    let e = Engine::new();
    let (lam, mu) = (p(&[4, 1]), p(&[3, 2]));
    let (a, b) = conjugate_query(&lam, &mu);
    assert_eq!(conjugate_query(&a, &b), (lam.clone(), mu.clone()));
    let q = d_shift_query(&e, &lam, &mu, 2, 5, 0, cl(5)).unwrap();
    let back = d_shift_query(&e, &q.lambda, &q.mu, 2, 5, 0, cl(5)).unwrap();
    assert_eq!((back.lambda, back.mu), (lam.clone(), mu.clone()));
    let direct = specht_ext(&e, &lam, &mu, 0, cl(5)).unwrap();
    assert_eq!(q.result.value, direct.value);
}
