//! K₀ of the bimodule blocks against U_t and V₁^⊗n, plus the module
//! toolkit (classes, cones, homology, χ) it rests on.

use catsl11::bimod::{build_N, build_S, expansion_dims, tensor_with};
use catsl11::decat::*;
use catsl11::dgmod::*;
use catsl11::foundation::{LaurentPoly2, Trigrade};
use catsl11::ut_hopf::UtBasis;
use catsl11::zoo::*;
use proptest::prelude::*;

fn find<'a>(r: &'a DecatReport, input: &str) -> &'a DecatCase {
    r.cases.iter().find(|c| c.input == input).unwrap_or_else(|| panic!("no case {input}"))
}

#[test]
fn multiplication_examples() {
    let a = build_A();
    let r = check_thm_multiplication(&a, &build_N(&a));
    assert!(r.pass());
    assert_eq!(r.cases.len(), 16);
    assert_eq!(find(&r, "(F,E)").computed, "(1 - T)·I + (-1)·EF");
    assert_eq!(find(&r, "(E,F)").computed, "(1)·EF");
    assert_eq!(find(&r, "(EF,E)").computed, "(1 - T)·E");
    assert_eq!(find(&r, "(E,E)").computed, "0");
    assert_eq!(r.extra.len(), 8 + 16);
}

#[test]
fn comultiplication_examples() {
    let r = check_thm_comultiplication(&build_S(&build_B()));
    assert!(r.pass());
    assert_eq!(r.cases.len(), 4);
    assert_eq!(find(&r, "E").computed, "(1)·I⊗E + (1)·E⊗I");
    assert_eq!(find(&r, "F").computed, "(T2)·F⊗I + (1)·I⊗F");
    assert_eq!(find(&r, "EF").computed, "(-T2)·F⊗E + (1)·I⊗EF + (T2)·EF⊗I + (1)·E⊗F");
}

#[test]
fn action_values_by_hand() {
    use catsl11::foundation::{LaurentPoly, Var};
    use catsl11::vn_rep::{BasisState, VnElt};
    let st = |s: &str| BasisState::parse(s).unwrap();
    let t = |c: i64, e: i32| LaurentPoly::monomial(Var::Small, c, e);
    let mut f00 = VnElt::basis(st("|01⟩"));
    f00.add_term(st("|10⟩"), &t(1, 1));
    let mut e1 = VnElt::basis(st("|0⟩"));
    e1.add_term(st("|0⟩"), &t(-1, 1));
    let r2 = decat_suite(2).unwrap();
    assert_eq!(find(&r2[2], "F|00⟩").computed, f00.to_string());
    assert_eq!(find(&r2[2], "I|10⟩").computed, VnElt::basis(st("|10⟩")).to_string());
    let r1 = decat_suite(1).unwrap();
    assert_eq!(find(&r1[2], "E|1⟩").computed, e1.to_string());
}

#[test]
fn all_theorems_up_to_four() {
    for n in 1..=4 {
        let reports = decat_suite(n).unwrap();
        let counts: Vec<usize> = reports.iter().map(|r| r.cases.len()).collect();
        assert_eq!(counts[..3], [16, 4, 4 << n]);
        for r in &reports {
            let bad: Vec<_> = r.cases.iter().chain(&r.extra).filter(|c| !c.pass).collect();
            assert!(bad.is_empty(), "n={n} {}: {bad:?}", r.theorem);
        }
    }
}

#[test]
fn report_json_round_trip() {
    let r = check_thm_comultiplication(&build_S(&build_B()));
    let s = serde_json::to_string(&r).unwrap();
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    for key in ["theorem", "n", "cases"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(serde_json::from_str::<DecatReport>(&s).unwrap(), r);
}

// ---- module toolkit -------------------------------------------------------

fn p(v: u32, shift: Trigrade) -> DGModule {
    let mut m = DGModule::new();
    m.add(format!("m{v}"), v, shift);
    m
}

#[test]
fn class_signs_and_shifts() {
    let a = build_A();
    let m = p(1, Trigrade::bi(1, 2));
    assert_eq!(k0_class(&m).coeff(1), LaurentPoly2::monomial(-1, 2, 0));
    // N(EF,E) = P(E) ⊕ P(E){1}[-1]
    let (ef, e) = (a_vertex(UtBasis::EF), a_vertex(UtBasis::E));
    let k = k0_class(&tensor_with(&build_N(&a), aoa_tensor().vertex(ef, e), Trigrade::ZERO));
    assert_eq!(k.coeff(e), LaurentPoly2::from_terms([((0, 0), 1), ((1, 0), -1)]));
}

#[test]
fn cone_of_identity_is_acyclic() {
    let a = build_A();
    let m = p(1, Trigrade::ZERO);
    let id = vec![m.gen(&a, 0)];
    let c = cone(&a, &m, &m, &id).unwrap();
    assert!(k0_class(&c).is_zero());
    assert!(homology(&a, &c).is_empty());
    assert_eq!(homology(&a, &m), expansion_dims(&a, &m));
}

#[test]
fn non_chain_maps_rejected() {
    let a = build_A();
    let (i, ef) = (a_vertex(UtBasis::I), a_vertex(UtBasis::EF));
    let src = p(i, Trigrade::ZERO);
    let rho = a.word_value(&[RHO_I_EF]).unwrap();
    // a t-shift of the target leaves ρ(I,EF) in the wrong degree
    let far = p(ef, Trigrade::bi(0, 5));
    assert!(chain_map_defect(&a, &src, &far, &[vec![(rho, 0)]]).is_some());
    // the identity of P(EF) does not start at I
    let dst = p(ef, Trigrade::ZERO);
    let wrong = dst.gen(&a, 0);
    assert!(chain_map_defect(&a, &src, &dst, &[wrong]).is_some());
    assert!(matches!(cone(&a, &src, &dst, &[]), Err(DgError::Arity(0, 1))));
}

#[test]
fn chi_is_external_product_on_classes() {
    let a = build_A();
    let aoa = build_AoA();
    let tp = aoa_tensor();
    for v1 in 0..4 {
        for v2 in 0..4 {
            let m = chi(&a, &p(v1, Trigrade::ZERO), &p(v2, Trigrade::ZERO), &aoa, &tp);
            let k = k0_class(&m);
            assert_eq!(k.coords.len(), 1);
            assert_eq!(k.coeff(tp.vertex(v1, v2)), LaurentPoly2::monomial(1, 0, 0));
        }
    }
}

proptest! {
    #[test]
    fn class_is_additive_and_shift_equivariant(
        v1 in 0u32..4, v2 in 0u32..4,
        h1 in -3i32..3, t1 in -3i32..3, h2 in -3i32..3, t2 in -3i32..3,
        sh in -3i32..3, st in -3i32..3,
    ) {
        let m1 = p(v1, Trigrade::bi(h1, t1));
        let m2 = p(v2, Trigrade::bi(h2, t2));
        let sum = m1.direct_sum(&m2);
        let mut expected = k0_class(&m1);
        for (&v, c) in &k0_class(&m2).coords {
            expected.add_term(v, c);
        }
        prop_assert_eq!(k0_class(&sum), expected.clone());
        let sign = if sh.rem_euclid(2) == 0 { 1 } else { -1 };
        let shifted = k0_class(&sum.shifted(Trigrade::bi(sh, st)));
        for (&v, c) in &expected.coords {
            prop_assert_eq!(shifted.coeff(v), c.shift(st, 0).scale(sign));
        }
    }
}
