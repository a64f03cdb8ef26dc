//! The algebra zoo: bases, structural checks, Hom dimensions, formality.

use catsl11::presented::{check_quasi_iso, cohomology, verify_algebra, Algebra, Relation, PresentationError};
use catsl11::suites::HR2_HOM_DIMS;
use catsl11::ut_hopf::UtBasis;
use catsl11::vn_rep::BasisState;
use catsl11::zoo::*;

fn st(s: &str) -> BasisState {
    BasisState::parse(s).unwrap()
}

fn assert_verified(a: &Algebra) {
    for o in verify_algebra(a) {
        assert!(o.pass, "{}: {} {:?}", a.name(), o.name, o.witness);
    }
}

#[test]
fn a_basis_by_hand() {
    // e(F), e(I), e(EF), e(E), ρ(I,EF), ρ(EF,I), ρ(EF,I)ρ(I,EF)
    let a = build_A();
    assert_eq!(a.dim(), 7);
    assert!(a.word_value(&[RHO_I_EF, RHO_EF_I]).is_none());
    let l = a.word_value(&[RHO_EF_I, RHO_I_EF]).expect("loop at EF");
    let (ef, i) = (a_vertex(UtBasis::EF), a_vertex(UtBasis::I));
    assert_eq!((a.basis[l as usize].src, a.basis[l as usize].tgt), (ef, ef));
    assert_eq!(a.hom_dim(i, ef), 1);
    assert_eq!(a.hom_dim(ef, i), 1);
    assert_eq!(a.hom_dim(ef, ef), 2);
    assert!(a.pres.relations.contains(&Relation::Zero(vec![RHO_I_EF, RHO_EF_I])));
}

#[test]
fn frozen_dimensions() {
    assert_eq!(build_AoA().dim(), 49);
    assert_eq!(build_B().dim(), 57);
    let rn: Vec<usize> = (1..=4).map(|n| build_Rn(n).unwrap().alg.dim()).collect();
    let hrn: Vec<usize> = (1..=4).map(|n| build_HRn(n).unwrap().alg.dim()).collect();
    assert_eq!(rn, vec![3, 13, 87, 1001]);
    assert_eq!(hrn, vec![3, 13, 63, 313]);
    let abox: Vec<usize> = (1..=3).map(|n| build_AboxRn(n).unwrap().alg.dim()).collect();
    assert_eq!(abox, vec![21, 203, 5089]);
}

#[test]
fn tensor_products_multiply_dimensions() {
    for n in 1..=3 {
        assert_eq!(build_AoRn(n).unwrap().alg.dim(), 7 * build_Rn(n).unwrap().alg.dim());
        assert_eq!(build_AoHRn(n).unwrap().alg.dim(), 7 * build_HRn(n).unwrap().alg.dim());
    }
}

#[test]
fn hr2_hom_dimensions() {
    let h = build_HRn(2).unwrap();
    for (s, t, d) in HR2_HOM_DIMS {
        assert_eq!(h.alg.hom_dim(st(s).bits(), st(t).bits()), d, "Hom({s},{t})");
    }
    assert_eq!(h.alg.hom_dim(st("|00⟩").bits(), st("|11⟩").bits()), 0);
}

#[test]
fn structural_checks_small() {
    assert_verified(&build_A());
    assert_verified(&build_AoA());
    assert_verified(&build_B());
    for n in 1..=3 {
        assert_verified(&build_Rn(n).unwrap().alg);
        assert_verified(&build_HRn(n).unwrap().alg);
        assert_verified(&build_AboxRn(n).unwrap().alg);
    }
}

#[test]
fn hrn_is_its_own_cohomology() {
    for n in 1..=3 {
        let h = build_HRn(n).unwrap();
        assert!(h.alg.has_zero_differential());
        assert_eq!(cohomology(&h.alg), h.alg.graded_dims());
    }
}

#[test]
fn formality_up_to_three() {
    for n in 1..=3 {
        let r = build_Rn(n).unwrap();
        let h = build_HRn(n).unwrap();
        for o in check_quasi_iso(&g_n(&r, &h)) {
            assert!(o.pass, "g_{n}: {} {:?}", o.name, o.witness);
        }
        let abox = build_AboxRn(n).unwrap();
        let ao = build_AoRn(n).unwrap();
        for o in check_quasi_iso(&projection(&abox, &ao)) {
            assert!(o.pass, "projection n={n}: {} {:?}", o.name, o.witness);
        }
        let aoh = build_AoHRn(n).unwrap();
        for o in check_quasi_iso(&id_tensor_g(&ao, &aoh)) {
            assert!(o.pass, "id⊗g n={n}: {} {:?}", o.name, o.witness);
        }
    }
}

#[test]
fn corner_complex_at_1101() {
    // e(EF x)·(A⊠R_4)·e(I x), split by which ρ̄ the basis word passes through
    let ar = build_AboxRn(4).unwrap();
    let x = st("|1101⟩");
    let (src, tgt) = (ar.vertex(UtBasis::EF, x), ar.vertex(UtBasis::I, x));
    let rho0 = ar.a_gen(RHO_EF_I, x);
    let rho1 = ar.rho_bar_prime[&(x.bits(), 1)];
    let rho2 = ar.rho_bar_prime[&(x.bits(), 2)];
    let mut l = [0usize; 3];
    let mut other = 0;
    for e in ar.alg.basis.iter().filter(|e| e.src == src && e.tgt == tgt) {
        match (e.word.contains(&rho0), e.word.contains(&rho1), e.word.contains(&rho2)) {
            (true, false, false) => l[0] += 1,
            (false, true, false) => l[1] += 1,
            (false, false, true) => l[2] += 1,
            _ => other += 1,
        }
    }
    assert_eq!((l[2], l[1], l[0], other), (8, 16, 16, 0));
}

#[test]
fn exception_readings() {
    let literal = AboxOptions { exceptions: ExceptionRule::AsWritten, ..AboxOptions::default() };
    assert!(matches!(
        build_AboxRn_with(1, literal),
        Err(ZooError::Presentation(PresentationError::TooLong(_) | PresentationError::TooLarge(_)))
    ));
    let no_zero = AboxOptions { zero_before_rho_prime: false, ..AboxOptions::default() };
    assert!(build_AboxRn_with(2, no_zero).is_err());
    let after = AboxOptions { zero_before_rho_prime: false, zero_after_rho_prime: true, ..AboxOptions::default() };
    let a = build_AboxRn_with(2, after).unwrap();
    assert_eq!(a.alg.dim(), 215);
    assert!(verify_algebra(&a.alg).iter().any(|o| !o.pass));
}

#[test]
fn which_names() {
    for (s, d) in [("A", 7), ("AoA", 49), ("B", 57)] {
        assert_eq!(Which::parse(s).unwrap().build(1).unwrap().dim(), d);
    }
    assert!(Which::parse("C").is_none());
    assert!(matches!(build_Rn(0), Err(ZooError::N(0))));
    assert!(matches!(build_Rn(MAX_N + 1), Err(ZooError::N(_))));
}
