use std::collections::HashSet;

use sallytype_core::algebra::{Monomial, MonomialOrder};
use sallytype_core::analysis::{self, artinian_reduction, regularity_data, ArtinianQuotient, Engine};
use sallytype_core::groebner::{homogenize, Buchberger, GroebnerBasis};
use sallytype_core::{classify, ClassificationReport, Limits, SallyParams};

fn l() -> Limits {
    Limits::default()
}

fn oracle(p: SallyParams) -> GroebnerBasis {
    analysis::affine_basis(p, Engine::Oracle, l()).unwrap().0
}

fn monomials_of_degree(k: usize, d: u32) -> Vec<Monomial> {
    let mut layer = vec![Monomial::one(k)];
    for _ in 0..d {
        let next: HashSet<Monomial> = layer.iter().flat_map(|m| (0..k).map(move |v| m.mul_var(v))).collect();
        layer = next.into_iter().collect();
    }
    layer
}

/// Kernel of multiplication by `x_{e-1}` on `K[x,y]/(I^h + (y))`, degree by
/// degree, by direct linear algebra on normal forms.
fn colon_dims_by_linear_algebra(gb: &GroebnerBasis, up_to: u32) -> Vec<usize> {
    let h = homogenize(gb, "y").unwrap();
    let k = h.variables().len();
    let (y, last) = (k - 1, k - 2);
    let jb = Buchberger::new(h.order(), h.variables())
        .run_mixed(h.elements(), &[Monomial::variable(k, y, 1)])
        .unwrap();
    (0..=up_to)
        .map(|d| {
            let basis: Vec<Monomial> = monomials_of_degree(k, d)
                .into_iter()
                .filter(|m| !jb.in_initial_ideal(m))
                .collect();
            let images: Vec<Option<Monomial>> = basis.iter().map(|u| jb.reduce_monomial(&u.mul_var(last))).collect();
            let distinct: HashSet<&Monomial> = images.iter().flatten().collect();
            basis.len() - distinct.len()
        })
        .collect()
}

#[test]
fn colon_part_matches_linear_algebra() {
    for e in 5..=10 {
        for p in SallyParams::all_for(e) {
            let gb = oracle(p);
            let data = regularity_data(&gb, l()).unwrap();
            let top = data.regularity + 2;
            let by_la = colon_dims_by_linear_algebra(&gb, top);
            let by_bfs: Vec<usize> = (0..=top)
                .map(|d| data.colon_degrees.iter().filter(|&&x| x == d).count())
                .collect();
            assert_eq!(by_la, by_bfs, "{p}");
            assert_eq!(data.colon_degrees.is_empty(), analysis::is_cm_basis(&gb), "{p}");
        }
    }
}

#[test]
fn reduction_initial_ideal_splits_in_cm_cases() {
    for e in 6..=10 {
        for p in SallyParams::all_for(e) {
            let gb = oracle(p);
            if !analysis::is_cm_basis(&gb) {
                continue;
            }
            let exact = artinian_reduction(&gb, l()).unwrap();
            let h = homogenize(&gb, "y").unwrap();
            let k = h.variables().len();
            let mut monos: Vec<Monomial> = h.elements().iter().map(|b| b.lead().clone()).collect();
            monos.push(Monomial::variable(k, k - 1, 1));
            monos.push(Monomial::variable(k, k - 2, 1));
            let mb = Buchberger::new(h.order(), h.variables()).run_mixed(&[], &monos).unwrap();
            let split = ArtinianQuotient::new(mb, l()).unwrap();
            assert_eq!(exact.standard_monomials(), split.standard_monomials(), "{p}");
        }
    }
}

#[test]
fn non_cm_witnesses() {
    let p = SallyParams::new(10, 6, 7).unwrap();
    let gb = oracle(p);
    let w = analysis::non_cm_witness(&gb).expect("witness");
    assert!(w.lead().exponent(gb.variables().len() - 1) > 0);
    for e in 6..=10 {
        for p in SallyParams::all_for(e) {
            let gb = oracle(p);
            assert_eq!(analysis::non_cm_witness(&gb).is_some(), !analysis::is_cm_basis(&gb), "{p}");
        }
    }
}

fn symmetric(h: &[u64]) -> bool {
    h.iter().eq(h.iter().rev())
}

#[test]
fn hilbert_symmetry() {
    for (e, m, n) in [(4, 1, 2), (5, 2, 3)] {
        let p = SallyParams::new(e, m, n).unwrap();
        let h = artinian_reduction(&oracle(p), l()).unwrap().hilbert_function();
        assert!(symmetric(&h), "{p}: {h:?}");
    }
    for e in 10..=11 {
        for p in SallyParams::all_for(e) {
            let gb = oracle(p);
            if !analysis::is_cm_basis(&gb) {
                continue;
            }
            let q = artinian_reduction(&gb, l()).unwrap();
            assert!(!symmetric(&q.hilbert_function()), "{p}");
            assert!(q.socle_dimension() > 1, "{p}");
            // Gastinger at x_{e-1}: a_{e-1} = 2e - 1
            assert_eq!(q.dimension(), 2 * e as u64 - 1, "{p}");
        }
    }
}

#[test]
fn engines_agree_at_e_10() {
    for p in SallyParams::all_for(10) {
        let both = classify(p, Engine::Both, l()).unwrap();
        let oracle = classify(p, Engine::Oracle, l()).unwrap();
        assert_eq!(both.regularity, oracle.regularity, "{p}");
        assert_eq!(both.mu, oracle.mu, "{p}");
        assert_eq!(both.cm_type, oracle.cm_type, "{p}");
        assert_eq!(both.projectively_cm, p.m + 4 != 10 || p.n + 3 != 10, "{p}");
        assert!(!both.projective_gorenstein);
    }
}

#[test]
fn report_serialization() {
    let p = SallyParams::new(5, 2, 3).unwrap();
    let r = classify(p, Engine::Oracle, l()).unwrap();
    assert!(r.projective_gorenstein && r.projectively_cm && r.cm_type == Some(1));
    let json = serde_json::to_string(&r).unwrap();
    let back: ClassificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    let cols = ClassificationReport::CSV_HEADER.split(',').count();
    assert_eq!(r.to_csv_row().split(',').count(), cols);

    let r = classify(SallyParams::new(10, 6, 7).unwrap(), Engine::Oracle, l()).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert!(json.get("cm_type").is_none());
    assert_eq!(json["projectively_cm"], false);
}

#[test]
fn grevlex_order_is_used_for_reductions() {
    let gb = oracle(SallyParams::new(6, 1, 2).unwrap());
    assert_eq!(gb.order(), MonomialOrder::Grevlex);
}
