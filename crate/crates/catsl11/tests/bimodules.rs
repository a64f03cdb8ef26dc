//! N, S and C_n: block shapes, right-action entries, bimodule checks.

use catsl11::bimod::*;
use catsl11::cn::{build_Cn, build_Cn_with, CKey, Cn, CnRules};
use catsl11::dgmod::ModElt;
use catsl11::foundation::Trigrade;
use catsl11::presented::{Algebra, CheckOutcome};
use catsl11::rook::{make_elementary, LoopGen, RookGen};
use catsl11::ut_hopf::UtBasis::{self, *};
use catsl11::vn_rep::BasisState;
use catsl11::zoo::*;

fn st(s: &str) -> BasisState {
    BasisState::parse(s).unwrap()
}

fn failing(outcomes: &[CheckOutcome]) -> Vec<&str> {
    outcomes.iter().filter(|o| !o.pass).map(|o| o.name.as_str()).collect()
}

fn shape(b: &DGBimodule, left: &Algebra, v: u32) -> Vec<(String, Trigrade)> {
    b.blocks[v as usize]
        .summands
        .iter()
        .map(|p| (left.pres.vertices[p.vertex as usize].clone(), p.shift))
        .collect()
}

fn n_block(g1: UtBasis, g2: UtBasis) -> u32 {
    aoa_tensor().vertex(a_vertex(g1), a_vertex(g2))
}

fn gen_named(b: &DGBimodule, v: u32, name: &str) -> u32 {
    b.blocks[v as usize].names.iter().position(|s| s == name).unwrap_or_else(|| panic!("no {name}")) as u32
}

// ---- N ------------------------------------------------------------------

#[test]
fn n_blocks() {
    let a = build_A();
    let nb = build_N(&a);
    assert_eq!(shape(&nb, &a, n_block(E, F)), vec![("EF".into(), Trigrade::ZERO)]);
    assert_eq!(shape(&nb, &a, n_block(E, E)), vec![]);
    assert_eq!(
        shape(&nb, &a, n_block(EF, E)),
        vec![("E".into(), Trigrade::ZERO), ("E".into(), Trigrade::bi(-1, 1))]
    );
    for g in UT_ORDER {
        for v in [n_block(g, I), n_block(I, g)] {
            assert_eq!(shape(&nb, &a, v), vec![(g.name().to_string(), Trigrade::ZERO)]);
        }
    }
}

#[test]
fn n_action_entries() {
    let a = build_A();
    let aoa = build_AoA();
    let nb = build_N(&a);
    let tp = aoa_tensor();
    let left = |rho: u32, g: UtBasis| tp.left[&(rho, a_vertex(g))];

    let v = n_block(EF, E);
    let m = gen_named(&nb, v, "m_{EF,E}(E)");
    assert!(nb.act_gen(&a, &nb.blocks[v as usize].gen(&a, m), v, left(RHO_EF_I, E)).is_empty());

    let v = n_block(I, I);
    let m = nb.blocks[v as usize].gen(&a, gen_named(&nb, v, "m_{I,I}(I)"));
    let once = nb.act_gen(&a, &m, v, left(RHO_I_EF, I));
    assert_eq!(nb.render(&a, n_block(EF, I), &once), "ρ(I,EF)·m_{EF,I}(EF)");
    let twice = nb.act_gen(&a, &once, n_block(EF, I), left(RHO_EF_I, I));
    assert!(twice.is_empty());
    assert_eq!(aoa.num_vertices(), 16);
}

#[test]
fn n_verifies_with_completed_table_only() {
    let a = build_A();
    let aoa = build_AoA();
    assert!(failing(&verify_bimodule(&build_N(&a), &a, &aoa)).is_empty());
    let published = verify_bimodule(&build_N_with(&a, NTable::Published), &a, &aoa);
    assert_eq!(failing(&published), vec!["relation compatibility"]);
}

#[test]
fn n_tensor_is_block() {
    let a = build_A();
    let aoa = build_AoA();
    let nb = build_N(&a);
    for v in 0..16 {
        let o = check_tensor_with(&nb, &a, &aoa, v);
        assert!(o.pass, "{:?}", o.witness);
    }
    let m = tensor_with(&nb, n_block(F, I), Trigrade::ZERO);
    assert_eq!(m.summands.len(), 1);
    assert_eq!(m.summands[0].vertex, a_vertex(F));
}

// ---- S ------------------------------------------------------------------

#[test]
fn s_blocks_and_action() {
    let bb = build_B();
    let a = build_A();
    let sb = build_S(&bb);
    let name = |v: u32| bb.pres.vertices[v as usize].clone();
    assert_eq!(
        shape(&sb, &bb, a_vertex(F)),
        vec![(name(b_vertex(I, F)), Trigrade::ZERO), (name(b_vertex(F, I)), Trigrade::new(0, 0, 1))]
    );
    assert_eq!(shape(&sb, &bb, a_vertex(EF)).len(), 4);

    let v = a_vertex(EF);
    let m = sb.blocks[v as usize].gen(&bb, gen_named(&sb, v, "m(EF⊗I)"));
    let r = sb.act_gen(&bb, &m, v, RHO_EF_I);
    assert_eq!(sb.render(&bb, a_vertex(I), &r), "ρ(EF⊗I,I⊗I)·m(I⊗I)");

    assert!(failing(&verify_bimodule(&sb, &bb, &a)).is_empty());
    for v in 0..4 {
        assert!(check_tensor_with(&sb, &bb, &a, v).pass);
    }
    // the diagonal grading doubles a right t-shift
    let shifted = tensor_with(&sb, a_vertex(E), Trigrade::bi(0, 1));
    assert!(shifted.summands.iter().all(|p| p.shift == Trigrade::new(0, 1, 1)));
}

// ---- C_n ----------------------------------------------------------------

struct Built {
    h: RookAlgebra,
    ar: ARn,
    cn: Cn,
}

fn built(n: usize, rules: CnRules) -> Built {
    let h = build_HRn(n).unwrap();
    let ar = build_AboxRn(n).unwrap();
    let cn = build_Cn_with(&h, &ar, rules);
    Built { h, ar, cn }
}

impl Built {
    fn dump(&self, g: UtBasis, x: &str) -> String {
        self.cn.bimod.blocks[self.cn.block(&self.ar, g, st(x)) as usize].dump(&self.h.alg)
    }

    fn gen(&self, g: UtBasis, x: BasisState, key: CKey) -> (u32, ModElt) {
        let v = self.cn.block(&self.ar, g, x);
        let s = self.cn.gen(&self.ar, g, x, key).expect("generator");
        (v, self.cn.bimod.blocks[v as usize].gen(&self.h.alg, s))
    }
}

#[test]
fn c_blocks_small() {
    let b = built(2, CnRules::Corrected);
    assert_eq!(
        b.dump(F, "|00⟩"),
        "m_1(|10⟩): P(|10⟩){1,0}[0]\nm_2(|01⟩): P(|01⟩){0,0}[0]\n  d = r(|01⟩→|10⟩)·m_1(|10⟩)\n"
    );
    assert_eq!(b.dump(I, "|01⟩"), "m(I|01⟩): P(|01⟩){0,0}[0]\n");
    let b = built(1, CnRules::Corrected);
    assert_eq!(b.dump(E, "|1⟩"), "m^1(|0⟩): P(|0⟩){0,0}[0]\nm'^1(|0⟩): P(|0⟩){1,0}[1]\n");
    assert_eq!(b.dump(E, "|0⟩"), "");
}

#[test]
fn c_f_generator_degrees() {
    // deg m((Fx)_j) = (−β(x, x̄_j), x̄_j − n)
    for n in 1..=4 {
        let b = built(n, CnRules::Corrected);
        for x in BasisState::all(n) {
            for (j, p) in x.complement().into_iter().enumerate() {
                let v = b.cn.block(&b.ar, F, x);
                let s = b.cn.gen(&b.ar, F, x, CKey::F(j + 1)).unwrap();
                let beta = catsl11::vn_rep::beta(x, p).unwrap() as i32;
                let deg = b.cn.bimod.blocks[v as usize].degree_of(s);
                assert_eq!(deg, Trigrade::bi(-beta, p as i32 - n as i32), "{x} j={}", j + 1);
            }
        }
    }
}

#[test]
fn c_rho_bar_entries() {
    let b = built(2, CnRules::Corrected);
    let x = st("|01⟩");
    let (v, m) = b.gen(I, x, CKey::I);
    let r = b.cn.bimod.act_gen(&b.h.alg, &m, v, b.ar.rho_bar[&(x.bits(), 1)]);
    assert_eq!(b.cn.bimod.render(&b.h.alg, b.cn.block(&b.ar, EF, x), &r), "m^1_1(|01⟩)");

    // x̄_1 = 1: m'^1_1 × (ρ(EF,I)⊠e(x)) = m(Ix)
    let x = st("|01⟩");
    let (v, m) = b.gen(EF, x, CKey::EF(1, 1, true));
    let r = b.cn.bimod.act_gen(&b.h.alg, &m, v, b.ar.a_gen(RHO_EF_I, x));
    assert_eq!(b.cn.bimod.render(&b.h.alg, b.cn.block(&b.ar, I, x), &r), "m(I|01⟩)");
}

#[test]
fn c_leibniz_on_marked_move() {
    // r = e(F)⊠r(|001⟩→|100⟩) has one marking; both sides are r(|011⟩→|101⟩)·m(|101⟩)
    let b = built(3, CnRules::Corrected);
    let (x, y) = (st("|001⟩"), st("|100⟩"));
    let d = make_elementary(x, 1, 1).unwrap();
    assert_eq!(d.y(), y);
    let g = b.ar.rook(F, &RookGen::Move(d));
    let (v, m) = b.gen(F, x, CKey::F(2));
    let bm = &b.cn.bimod.blocks[v as usize];
    let vy = b.cn.block(&b.ar, F, y);
    let dm = bm.d_elt(&b.h.alg, &m);
    let dm_r = b.cn.bimod.act_gen(&b.h.alg, &dm, v, g);
    let rendered = b.cn.bimod.render(&b.h.alg, vy, &dm_r);
    assert!(rendered.starts_with("r(|011⟩→|101⟩)·m_"), "{rendered}");
    assert!(rendered.ends_with("(|101⟩)"), "{rendered}");
    assert!(!leibniz_defects(&b.cn.bimod, &b.h.alg, &b.ar.alg).iter().any(|((w, s, r), _)| {
        (*w, *r) == (v, g) && Some(*s) == b.cn.gen(&b.ar, F, x, CKey::F(2))
    }));
}

#[test]
fn c_e_loops_are_nilpotent() {
    for n in 1..=3 {
        let b = built(n, CnRules::Corrected);
        for x in BasisState::all(n) {
            let v = b.cn.block(&b.ar, E, x);
            let blk = &b.cn.bimod.blocks[v as usize];
            for i in 1..=x.k() {
                let u = b.ar.rook(E, &RookGen::Loop(LoopGen::new(x, i).unwrap()));
                for s in 0..blk.len() as u32 {
                    let once = b.cn.bimod.act_gen(&b.h.alg, &blk.gen(&b.h.alg, s), v, u);
                    let twice = b.cn.bimod.act_gen(&b.h.alg, &once, v, u);
                    assert!(twice.is_empty(), "n={n} {x} loop {i} generator {s}");
                }
            }
        }
    }
}

#[test]
fn c_verifies_up_to_three() {
    for n in 1..=3 {
        let b = built(n, CnRules::Corrected);
        let outcomes = verify_bimodule(&b.cn.bimod, &b.h.alg, &b.ar.alg);
        assert!(failing(&outcomes).is_empty(), "n={n}: {:?}", outcomes.iter().find(|o| !o.pass));
    }
}

#[test]
fn published_ef_rule_breaks_at_three() {
    for n in 1..=2 {
        let b = built(n, CnRules::Published);
        assert!(failing(&verify_bimodule(&b.cn.bimod, &b.h.alg, &b.ar.alg)).is_empty(), "n={n}");
    }
    let b = built(3, CnRules::Published);
    assert_eq!(failing(&verify_bimodule(&b.cn.bimod, &b.h.alg, &b.ar.alg)), vec!["Leibniz rule"]);
    assert_eq!(leibniz_defects(&b.cn.bimod, &b.h.alg, &b.ar.alg).len(), 3);
}

#[test]
fn c_tensor_is_block() {
    let h = build_HRn(2).unwrap();
    let ar = build_AboxRn(2).unwrap();
    let cn = build_Cn(&h, &ar);
    for v in 0..cn.bimod.blocks.len() as u32 {
        let o = check_tensor_with(&cn.bimod, &h.alg, &ar.alg, v);
        assert!(o.pass, "{:?}", o.witness);
    }
}

#[test]
#[ignore = "nightly: C_4 is a known open failure, see README"]
fn c_verifies_at_four() {
    let b = built(4, CnRules::Corrected);
    let outcomes = verify_bimodule(&b.cn.bimod, &b.h.alg, &b.ar.alg);
    assert!(failing(&outcomes).is_empty(), "{:?}", outcomes.iter().find(|o| !o.pass));
}
