use sallytype_core::algebra::{MonomialOrder, VariableSet};
use sallytype_core::analysis::{self, Engine};
use sallytype_core::families::{full_family, gb_extras, gens_m_ge2, k_shape, KShape};
use sallytype_core::groebner::{first_nonreducing_pair, is_groebner, Buchberger};
use sallytype_core::{Limits, SallyParams};

fn p(e: u32, m: u32, n: u32) -> SallyParams {
    SallyParams::new(e, m, n).unwrap()
}

#[test]
fn gastinger_for_10_3_5() {
    let q = p(10, 3, 5);
    let gens: Vec<_> = gens_m_ge2(q).unwrap().into_iter().map(|t| t.binomial).collect();
    let dim = analysis::artinian_dimension_of(&gens, &VariableSet::sally(q), &[0], Limits::default()).unwrap();
    assert_eq!(dim, 10);
}

#[test]
fn family_11_3_7_is_sound() {
    let q = p(11, 3, 7);
    let gb = analysis::affine_basis(q, Engine::Oracle, Limits::default()).unwrap().0;
    let fam = full_family(q).unwrap();
    for t in fam.base.iter().chain(&fam.extras) {
        assert!(gb.contains(&t.binomial), "{}", t.provenance);
    }
}

#[test]
fn completion_is_needed_for_10_2_5() {
    let q = p(10, 2, 5);
    let fam = full_family(q).unwrap();
    assert!(is_groebner(&fam.all(), MonomialOrder::Grevlex));
    assert!(!gb_extras(q).unwrap().is_empty());
    assert!(first_nonreducing_pair(&fam.base_binomials(), MonomialOrder::Grevlex).is_some());
}

#[test]
fn excluded_pair_is_not_a_basis_or_has_x_last_leads() {
    // (e-4,e-3): either the union is not a Groebner basis or the
    // completed basis has a lead divisible by x_{e-1}
    for e in 10..=12 {
        let q = p(e, e - 4, e - 3);
        let fam = full_family(q).unwrap();
        assert!(fam.warning.is_some());
        let reduced = Buchberger::new(MonomialOrder::Grevlex, &fam.variables).run(&fam.all()).unwrap();
        assert!(!analysis::is_cm_basis(&reduced), "{q}");
    }
}

#[test]
fn wide_shapes_use_the_balanced_first_element() {
    for e in 10..=14 {
        for q in SallyParams::all_for(e) {
            if q.m < 2 {
                continue;
            }
            if matches!(k_shape(q).unwrap(), KShape::Wide | KShape::WideEMinus3 | KShape::WideEMinus2) {
                let base = gens_m_ge2(q).unwrap();
                let vs = VariableSet::sally(q);
                let first = base.iter().find(|t| t.provenance.contains("x(m+1)*x(n-2) - x(m-2)*x(n+1)")).unwrap();
                assert!(first.binomial.is_weight_balanced(&vs));
            }
        }
    }
}

#[test]
fn provenance_is_present_and_json_dumps() {
    let fam = full_family(p(10, 5, 6)).unwrap();
    assert!(fam.base.iter().chain(&fam.extras).all(|t| !t.provenance.is_empty()));
    let doc = serde_json::to_value(fam.to_document()).unwrap();
    assert_eq!(doc["extras"].as_array().unwrap().len(), 4);
    assert!(doc.get("warning").is_none());
}
