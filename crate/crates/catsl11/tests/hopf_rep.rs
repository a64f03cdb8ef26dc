//! U_t and its tensor representations against hand-built oracles.

use catsl11::foundation::{LaurentPoly, Var};
use catsl11::ut_hopf::*;
use catsl11::vn_rep::*;
use proptest::prelude::*;
use UtBasis::*;

fn tp(s: &str) -> LaurentPoly {
    LaurentPoly::parse(Var::Small, s).unwrap()
}

fn st(s: &str) -> BasisState {
    BasisState::parse(s).unwrap()
}

// ---- 2x2 matrix model of U_t over Z[T^±] -------------------------------
// E = [[0, 1-T], [0, 0]], F = [[0, 0], [1, 0]]. The model is faithful on the
// rank-4 module, so products can be read back by solving for coordinates.

type M2 = [[LaurentPoly; 2]; 2];

fn pz() -> LaurentPoly {
    LaurentPoly::zero(Var::T)
}
fn pc(c: i64, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(Var::T, c, e)
}

fn mat(b: UtBasis) -> M2 {
    let omt = &pc(1, 0) - &pc(1, 1);
    match b {
        I => [[pc(1, 0), pz()], [pz(), pc(1, 0)]],
        E => [[pz(), omt], [pz(), pz()]],
        F => [[pz(), pz()], [pc(1, 0), pz()]],
        EF => [[omt, pz()], [pz(), pz()]],
    }
}

fn mmul(a: &M2, b: &M2) -> M2 {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn div_one_minus_t(p: &LaurentPoly) -> LaurentPoly {
    // exact division by (1 - T), ascending synthetic division
    let mut rem = p.clone();
    let mut q = pz();
    loop {
        let lead: Option<(i32, i64)> = rem.terms().next();
        let Some((e, c)) = lead else { break };
        q.add_term(e, c);
        rem = &rem - &(&pc(c, e) * &(&pc(1, 0) - &pc(1, 1)));
        assert!(rem.terms().next().map_or(true, |(e2, _)| e2 > e), "not divisible");
        if rem.terms().count() > 64 {
            panic!("not divisible");
        }
    }
    q
}

fn from_mat(m: &M2) -> UtElt {
    // m = a I + b EF + c E + d F = [[a + b(1-T), c(1-T)], [d, a]]
    let a = m[1][1].clone();
    let d = m[1][0].clone();
    let c = div_one_minus_t(&m[0][1]);
    let b = div_one_minus_t(&(&m[0][0] - &a));
    UtElt::term(I, a).add(&UtElt::term(EF, b)).add(&UtElt::term(E, c)).add(&UtElt::term(F, d))
}

#[test]
fn product_table_matches_matrix_model() {
    for a in UtBasis::ALL {
        for b in UtBasis::ALL {
            let expected = from_mat(&mmul(&mat(a), &mat(b)));
            assert_eq!(ut_mul(&UtElt::basis(a), &UtElt::basis(b)), expected, "{a}·{b}");
        }
    }
    let ef2 = ut_mul(&UtElt::basis(EF), &UtElt::basis(EF));
    assert_eq!(ef2, UtElt::basis(EF).sub(&UtElt::mono(EF, 1, 1)));
}

#[test]
fn associativity_and_parity() {
    for a in UtBasis::ALL {
        for b in UtBasis::ALL {
            let ab = ut_mul(&UtElt::basis(a), &UtElt::basis(b));
            for (x, _) in ab.terms() {
                assert_eq!(x.parity(), a.parity() + b.parity());
            }
            for c in UtBasis::ALL {
                let l = ut_mul(&ab, &UtElt::basis(c));
                let r = ut_mul(&UtElt::basis(a), &ut_mul(&UtElt::basis(b), &UtElt::basis(c)));
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn tensor_and_counit_examples() {
    let ei = UtTensorElt::mono(E, I, 1, 0, 0);
    let ie = UtTensorElt::mono(I, E, 1, 0, 0);
    assert_eq!(ut_tensor_mul(&ei, &ie), UtTensorElt::mono(E, E, 1, 0, 0));
    assert_eq!(ut_tensor_mul(&ie, &ei), UtTensorElt::mono(E, E, -1, 0, 0));
    let ft = UtTensorElt::mono(F, I, 1, 0, 1);
    let fi = UtTensorElt::mono(F, I, 1, 0, 0);
    assert!(ut_tensor_mul(&ft, &fi).is_zero());
    assert!(ut_counit(&UtElt::basis(EF)).is_zero());
    assert_eq!(ut_counit(&UtElt::mono(I, 1, 2)), pc(1, 0));
    assert!(ut_counit(&UtElt::basis(I).sub(&UtElt::mono(I, 1, 1))).is_zero());
}

#[test]
fn antipode_examples() {
    assert_eq!(ut_antipode(&UtElt::basis(E)), UtElt::mono(E, -1, 0));
    assert_eq!(ut_antipode(&UtElt::basis(I)), UtElt::basis(I));
    // -T^-1 (I - T - EF)
    let expected = UtElt::mono(I, -1, -1).add(&UtElt::mono(I, 1, 0)).add(&UtElt::mono(EF, 1, -1));
    assert_eq!(ut_antipode(&UtElt::basis(EF)), expected);
    // graded anti-homomorphism on all basis pairs
    for a in UtBasis::ALL {
        for b in UtBasis::ALL {
            let lhs = ut_antipode(&ut_mul(&UtElt::basis(a), &UtElt::basis(b)));
            let s = koszul_sign(a.parity(), b.parity());
            let rhs = ut_mul(&ut_antipode(&UtElt::basis(b)), &ut_antipode(&UtElt::basis(a)))
                .scale(&pc(s, 0));
            assert_eq!(lhs, rhs, "S({a}{b})");
        }
    }
}

#[test]
fn hopf_proof_identities() {
    let de = ut_comul(&UtElt::basis(E));
    let df = ut_comul(&UtElt::basis(F));
    assert!(ut_tensor_mul(&de, &de).is_zero());
    let anti = ut_tensor_mul(&de, &df).add(&ut_tensor_mul(&df, &de));
    let expected = UtTensorElt::mono(I, I, 1, 0, 0).sub(&UtTensorElt::mono(I, I, 1, 1, 1));
    assert_eq!(anti, expected);
}

#[test]
fn two_site_table() {
    let f = |s: &str| act_f(st(s));
    assert_eq!(f("|00⟩"), VnElt::basis(st("|01⟩")).add(&VnElt::term(st("|10⟩"), tp("t"))));
    assert_eq!(f("|01⟩"), VnElt::term(st("|11⟩"), tp("t")));
    assert_eq!(f("|10⟩"), VnElt::term(st("|11⟩"), tp("-1")));
    assert!(f("|11⟩").is_zero());
    let e11 = VnElt::term(st("|01⟩"), tp("1 - t")).add(&VnElt::term(st("|10⟩"), tp("-1 + t")));
    assert_eq!(act_e(st("|11⟩")), e11);
    assert!(act_e(st("|0⟩")).is_zero());
    assert_eq!(act_e(st("|1⟩")), VnElt::term(st("|0⟩"), tp("1 - t")));
    let tv = act(&UtElt::mono(I, 1, 1), &VnElt::basis(st("|11⟩")), 2);
    assert_eq!(tv, VnElt::term(st("|11⟩"), tp("t^2")));
    // the same table from iterated comultiplication
    for x in BasisState::all(2) {
        for b in UtBasis::ALL {
            assert_eq!(act_iterated(b, x), act_basis(b, x), "{b}{x}");
        }
    }
    let ef00 = act(&UtElt::basis(EF), &VnElt::basis(st("|00⟩")), 2);
    assert_eq!(ef00, VnElt::term(st("|00⟩"), tp("1 - t^2")));
}

#[test]
fn representation_suite_small_n() {
    for n in 1..=5 {
        for c in verify_rep(n) {
            assert!(c.pass, "n={n}: {c:?}");
        }
    }
}

proptest! {
    #[test]
    fn f_raises_and_e_lowers_k(n in 1usize..8, bits in 0u32..256) {
        let x = BasisState::new(n, bits % (1 << n));
        for (y, _) in act_f(x).terms() { prop_assert_eq!(y.k(), x.k() + 1); }
        for (y, _) in act_e(x).terms() { prop_assert_eq!(y.k() + 1, x.k()); }
    }

    #[test]
    fn state_literal_round_trip(n in 1usize..12, bits in 0u32..4096) {
        let x = BasisState::new(n, bits % (1 << n));
        prop_assert_eq!(BasisState::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn laurent_ring_axioms(a in prop::collection::vec((-4i32..4, -9i64..9), 0..5),
                           b in prop::collection::vec((-4i32..4, -9i64..9), 0..5),
                           c in prop::collection::vec((-4i32..4, -9i64..9), 0..5)) {
        let (a, b, c) = (LaurentPoly::from_terms(Var::Small, a), LaurentPoly::from_terms(Var::Small, b), LaurentPoly::from_terms(Var::Small, c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(LaurentPoly::parse(Var::Small, &a.to_string()).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), a);
    }
}
