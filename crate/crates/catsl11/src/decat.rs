//! Grothendieck-group checks: K₀ classes of the blocks of N, S and C_n
//! against the algebraic multiplication, comultiplication and action.
//!
//! Expected values come from `ut_hopf`/`vn_rep`; computed values come from
//! `k0_class` of bimodule blocks. Identifications: `[M[1]] = −[M]`,
//! `{1} ↦ T` on A, `T ↦ T₁T₂` along δ, `T ↦ tⁿ` along η_n.

use serde::{Deserialize, Serialize};

use crate::bimod::{build_N, build_S, tensor_with, DGBimodule};
use crate::cn::{build_Cn, Cn};
use crate::dgmod::{k0_class, K0Class};
use crate::foundation::{laurent_substitute, LaurentPoly, LaurentPoly2, Trigrade, Var};
use crate::par;
use crate::presented::Algebra;
use crate::ut_hopf::{ut_comul, ut_mul, UtBasis, UtElt, UtTensorElt};
use crate::vn_rep::{act, BasisState, VnElt};
use crate::zoo::{a_vertex, aoa_tensor, b_vertex, build_A, build_AboxRn, build_B, build_HRn, ARn, RookAlgebra, ZooError, UT_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecatCase {
    pub input: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl DecatCase {
    fn compare<T: PartialEq + std::fmt::Display>(input: String, expected: &T, computed: &T) -> Self {
        DecatCase { input, expected: expected.to_string(), computed: computed.to_string(), pass: expected == computed }
    }
}

/// `cases` holds one entry per basis input; `extra` holds the unit,
/// shift and rank checks that accompany it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecatReport {
    pub theorem: String,
    pub n: Option<usize>,
    pub cases: Vec<DecatCase>,
    #[serde(default)]
    pub extra: Vec<DecatCase>,
}

impl DecatReport {
    pub fn pass(&self) -> bool {
        self.cases.iter().chain(&self.extra).all(|c| c.pass)
    }
}

fn a_basis(v: u32) -> UtBasis {
    UT_ORDER[v as usize]
}

/// K₀ class over A as an element of U_t, with `{1} ↦ T`.
fn class_in_ut(k: &K0Class) -> UtElt {
    let mut r = UtElt::zero();
    for (&v, p) in &k.coords {
        assert!(p.terms().all(|((_, e2), _)| e2 == 0), "second grading on an A-module");
        r.add_term(a_basis(v), &laurent_substitute(p, Var::T, 1, 0));
    }
    r
}

/// K₀ class over B as an element of U_t⊗U_t.
fn class_in_ut2(k: &K0Class) -> UtTensorElt {
    let mut r = UtTensorElt::zero();
    for (&v, p) in &k.coords {
        let (g1, g2) = UT_ORDER
            .iter()
            .flat_map(|&g1| UT_ORDER.iter().map(move |&g2| (g1, g2)))
            .find(|&(g1, g2)| b_vertex(g1, g2) == v)
            .expect("B vertex");
        r.add_term(g1, g2, p);
    }
    r
}

/// K₀ class over H(R_n) as a vector of V₁⊗ⁿ, with `t` from the first grading.
fn class_in_vn(k: &K0Class, n: usize) -> VnElt {
    let mut r = VnElt::zero();
    for (&v, p) in &k.coords {
        assert!(p.terms().all(|((_, e2), _)| e2 == 0), "second grading on an H(R_n)-module");
        r.add_term(BasisState::new(n, v), &laurent_substitute(p, Var::Small, 1, 0));
    }
    r
}

fn t_pow(e: i32) -> LaurentPoly {
    LaurentPoly::monomial(Var::T, 1, e)
}

/// Multiplication through N: `[N(Γ,Γ')] = ΓΓ'`.
pub fn check_thm_multiplication(a: &Algebra, nb: &DGBimodule) -> DecatReport {
    let tp = aoa_tensor();
    let pairs: Vec<(UtBasis, UtBasis)> =
        UT_ORDER.iter().flat_map(|&g1| UT_ORDER.iter().map(move |&g2| (g1, g2))).collect();
    let block = |g1: UtBasis, g2: UtBasis| tp.vertex(a_vertex(g1), a_vertex(g2));
    let cases = par::map(&pairs, |&(g1, g2)| {
        let expected = ut_mul(&UtElt::basis(g1), &UtElt::basis(g2));
        let computed = class_in_ut(&k0_class(&tensor_with(nb, block(g1, g2), Trigrade::ZERO)));
        DecatCase::compare(format!("({g1},{g2})"), &expected, &computed)
    });

    let mut extra = Vec::new();
    for &g in &UT_ORDER {
        for (label, v) in [(format!("N({g},I)"), block(g, UtBasis::I)), (format!("N(I,{g})"), block(UtBasis::I, g))] {
            let m = tensor_with(nb, v, Trigrade::ZERO);
            let single = m.summands.len() == 1
                && m.summands[0].vertex == a_vertex(g)
                && m.summands[0].shift == Trigrade::ZERO
                && m.d.iter().all(|x| x.is_empty());
            extra.push(DecatCase {
                input: label,
                expected: format!("P({g})"),
                computed: if single { format!("P({g})") } else { m.dump(a) },
                pass: single,
            });
        }
    }
    for &(g1, g2) in &pairs {
        let expected = ut_mul(&UtElt::basis(g1), &UtElt::basis(g2)).scale(&t_pow(1));
        let computed = class_in_ut(&k0_class(&tensor_with(nb, block(g1, g2), Trigrade::bi(0, 1))));
        extra.push(DecatCase::compare(format!("T·({g1},{g2})"), &expected, &computed));
    }
    DecatReport { theorem: "multiplication".into(), n: None, cases, extra }
}

/// Comultiplication through S: `[S(Γ)] = Δ(Γ)`.
pub fn check_thm_comultiplication(sb: &DGBimodule) -> DecatReport {
    let cases = par::map(&UT_ORDER, |&g| {
        let expected = ut_comul(&UtElt::basis(g));
        let computed = class_in_ut2(&k0_class(&tensor_with(sb, a_vertex(g), Trigrade::ZERO)));
        DecatCase::compare(format!("{g}"), &expected, &computed)
    });
    let extra = UT_ORDER
        .iter()
        .map(|&g| {
            let expected = ut_comul(&UtElt::term(g, t_pow(1)));
            let computed = class_in_ut2(&k0_class(&tensor_with(sb, a_vertex(g), Trigrade::bi(0, 1))));
            DecatCase::compare(format!("T·{g}"), &expected, &computed)
        })
        .collect();
    DecatReport { theorem: "comultiplication".into(), n: None, cases, extra }
}

/// Action through C_n: `[C(Γ,x)] = Γ(x)` with `T ↦ tⁿ`.
pub fn check_thm_action(ar: &ARn, cn: &Cn) -> DecatReport {
    let n = cn.n;
    let inputs: Vec<(UtBasis, BasisState)> =
        UT_ORDER.iter().flat_map(|&g| BasisState::all(n).map(move |x| (g, x))).collect();
    let cases = par::map(&inputs, |&(g, x)| {
        let expected = act(&UtElt::basis(g), &VnElt::basis(x), n);
        let computed = class_in_vn(&k0_class(&tensor_with(&cn.bimod, cn.block(ar, g, x), Trigrade::ZERO)), n);
        DecatCase::compare(format!("{g}{x}"), &expected, &computed)
    });
    // The A-side shift T enters A⊠R_n as a t-shift by n.
    let extra = par::map(&inputs, |&(g, x)| {
        let expected = act(&UtElt::term(g, t_pow(1)), &VnElt::basis(x), n);
        let shift = Trigrade::bi(0, n as i32);
        let computed = class_in_vn(&k0_class(&tensor_with(&cn.bimod, cn.block(ar, g, x), shift)), n);
        DecatCase::compare(format!("T·{g}{x}"), &expected, &computed)
    });
    DecatReport { theorem: "action".into(), n: Some(n), cases, extra }
}

/// Rank checks on the K₀ bases: idempotent counts and freeness of shifts.
pub fn check_k0_module_structures(a: &Algebra, bb: &Algebra, h: &RookAlgebra, ar: &ARn) -> DecatReport {
    let n = ar.n;
    let count = |name: &str, expected: usize, computed: usize| DecatCase {
        input: format!("|idempotents of {name}|"),
        expected: expected.to_string(),
        computed: computed.to_string(),
        pass: expected == computed,
    };
    let mut cases = vec![
        count("A", 4, a.num_vertices()),
        count("B", 16, bb.num_vertices()),
        count(&format!("H(R_{n})"), 1 << n, h.alg.num_vertices()),
        count(&format!("A⊠R_{n}"), 4 << n, ar.alg.num_vertices()),
    ];

    // Shifts act freely: distinct shifts of one projective have distinct classes.
    let mut extra = Vec::new();
    for (name, vertices) in [("A", a.num_vertices()), ("B", bb.num_vertices()), ("H", h.alg.num_vertices())] {
        let mut classes = Vec::new();
        for v in 0..vertices as u32 {
            for (hs, t) in [(0, 0), (0, 1), (0, -1), (1, 0), (1, 1)] {
                let mut k = K0Class::default();
                let sign = if hs % 2 == 0 { 1 } else { -1 };
                k.add_term(v, &LaurentPoly2::monomial(sign, t, 0));
                classes.push(k);
            }
        }
        let distinct = classes.iter().enumerate().all(|(i, c)| classes[..i].iter().all(|d| d != c));
        extra.push(DecatCase {
            input: format!("shift freeness on {name}"),
            expected: "distinct".into(),
            computed: if distinct { "distinct" } else { "collision" }.into(),
            pass: distinct,
        });
    }

    // (Γ·T, x) = (Γ, tⁿx): the t-shift by n on P(Γ,x) is T·[P(Γ,x)].
    for &g in &UT_ORDER {
        for x in BasisState::all(n) {
            let v = ar.vertex(g, x);
            let mut k = K0Class::default();
            let s = Trigrade::bi(0, n as i32);
            k.add_term(v, &LaurentPoly2::monomial(1, s.t1, s.t2));
            let lhs = {
                let mut r = VnElt::zero();
                for (_, p) in &k.coords {
                    r.add_term(x, &laurent_substitute(p, Var::Small, 1, 0));
                }
                act(&UtElt::basis(g), &r, n)
            };
            let rhs = act(&UtElt::term(g, t_pow(1)), &VnElt::basis(x), n);
            cases.push(DecatCase::compare(format!("P({g},{x}){{{n}}}"), &rhs, &lhs));
        }
    }
    DecatReport { theorem: "k0 module structures".into(), n: Some(n), cases, extra }
}

/// Builds A, B, N, S, H(R_n), A⊠R_n and C_n and runs all four checks.
pub fn decat_suite(n: usize) -> Result<Vec<DecatReport>, ZooError> {
    let a = build_A();
    let bb = build_B();
    let nb = build_N(&a);
    let sb = build_S(&bb);
    let h = build_HRn(n)?;
    let ar = build_AboxRn(n)?;
    let cn = build_Cn(&h, &ar);
    Ok(vec![
        check_thm_multiplication(&a, &nb),
        check_thm_comultiplication(&sb),
        check_thm_action(&ar, &cn),
        check_k0_module_structures(&a, &bb, &h, &ar),
    ])
}
