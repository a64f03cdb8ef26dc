//! The action bimodule C_n over (H(R_n), A⊠R_n).
//!
//! Blocks sit at the vertices (Γ, x) of A⊠R_n. C(I,x) is PH(x), C(F,x) and
//! C(E,x) are the resolutions of F·x and E·x, and C(EF,x) is the double
//! complex obtained by applying the E-construction to each summand of
//! C(F,x). Right actions of rook generators on C(F,·) and C(E,·) are the
//! local rules below; the EF rules route through F and then E.

#![allow(non_snake_case)]

use std::collections::HashMap;

use serde::Serialize;

use crate::bimod::{DGBimodule, RightGrading};
use crate::dgmod::{mod_from, ModElt};
use crate::foundation::Trigrade;
use crate::rook::{make_elementary, LoopGen, RookGen, RookPresentation};
use crate::ut_hopf::UtBasis;
use crate::vn_rep::{beta, BasisState};
use crate::zoo::{ARn, RookAlgebra, RHO_EF_I, RHO_I_EF, UT_ORDER};

/// A generator of a block C(Γ, x).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CKey {
    I,
    /// `m((Fx)_j)`
    F(usize),
    /// `m((Ex)^i)` or, primed, `m'((Ex)^i)`
    E(usize, bool),
    /// `m((EFx)^i_j)` or `m'((EFx)^i_j)`
    EF(usize, usize, bool),
}

#[derive(Debug)]
pub struct Cn {
    pub n: usize,
    pub bimod: DGBimodule,
    pub keys: HashMap<(u32, CKey), u32>,
}

impl Cn {
    pub fn block(&self, ar: &ARn, g: UtBasis, x: BasisState) -> u32 {
        ar.vertex(g, x)
    }

    pub fn gen(&self, ar: &ARn, g: UtBasis, x: BasisState, key: CKey) -> Option<u32> {
        self.keys.get(&(ar.vertex(g, x), key)).copied()
    }
}

/// `(Fx)_j = x ⊔ {x̄_j}`
fn f_state(x: BasisState, j: usize) -> BasisState {
    x.with(x.xbar(j))
}

/// `(Ex)^i = x \ {x_i}`
fn e_state(x: BasisState, i: usize) -> BasisState {
    x.without(x.x(i))
}

/// `j(x, i)`: number of empty positions below `x_i`.
fn j_of(x: BasisState, i: usize) -> usize {
    x.x(i) - i
}

/// `q_j`: number of strands below `x̄_j`.
fn q_of(x: BasisState, j: usize) -> usize {
    x.count_below(x.xbar(j))
}

fn step(x: BasisState, m: usize) -> RookGen {
    let b = x.x(m);
    RookGen::Move(make_elementary(x, m, b - 1).expect("adjacent step"))
}

fn lp(x: BasisState, i: usize) -> RookGen {
    RookGen::Loop(LoopGen { x, i })
}

/// Walks a path in the quiver, collecting H(R_n) generators.
struct Path {
    start: BasisState,
    at: BasisState,
    gens: Vec<RookGen>,
}

impl Path {
    fn new(x: BasisState) -> Self {
        Path { start: x, at: x, gens: Vec::new() }
    }

    fn step(mut self, m: usize) -> Self {
        let g = step(self.at, m);
        self.at = g.tgt();
        self.gens.push(g);
        self
    }

    fn steps(self, ms: impl IntoIterator<Item = usize>) -> Self {
        ms.into_iter().fold(self, Path::step)
    }

    fn lp(mut self, i: usize) -> Self {
        self.gens.push(lp(self.at, i));
        self
    }

    /// The value in H(R_n); `None` if it vanishes.
    fn value(&self, h: &RookAlgebra) -> Option<u32> {
        if self.gens.is_empty() {
            return Some(h.alg.idempotent(RookPresentation::vertex(self.start)));
        }
        let w: Vec<u32> = self.gens.iter().map(|g| h.id(g).expect("H(R_n) generator")).collect();
        h.alg.word_value(&w)
    }
}

fn unit(h: &RookAlgebra, x: BasisState) -> u32 {
    h.alg.idempotent(RookPresentation::vertex(x))
}

type Local<K> = Vec<(u32, K)>;

fn push<K>(out: &mut Local<K>, c: Option<u32>, k: K) {
    if let Some(c) = c {
        out.push((c, k));
    }
}

/// `m × (e(E)⊠g)` on the generator `(i, primed)` of C(E, src(g)).
fn e_image(h: &RookAlgebra, g: &RookGen, i: usize, primed: bool) -> Local<(usize, bool)> {
    let x = g.src();
    let ex = e_state(x, i);
    let mut out = Vec::new();
    match g {
        RookGen::Loop(l) => {
            let i0 = l.i;
            if i < i0 {
                push(&mut out, Path::new(ex).lp(i0 - 1).value(h), (i, primed));
            } else if i > i0 {
                push(&mut out, Path::new(ex).lp(i0).value(h), (i, primed));
            } else if !primed {
                out.push((unit(h, ex), (i, true)));
            }
        }
        RookGen::Move(d) => {
            let (i0, s1, s0) = (d.i(), d.s1(), d.s0());
            if s0 > 0 {
                return out;
            }
            if s1 == 0 {
                if i < i0 {
                    push(&mut out, Path::new(ex).step(i0 - 1).value(h), (i, primed));
                } else if i > i0 {
                    push(&mut out, Path::new(ex).step(i0).value(h), (i, primed));
                } else if primed {
                    out.push((unit(h, ex), (i0, false)));
                }
            } else if primed && i == d.m() {
                out.push((unit(h, ex), (i0, false)));
            }
        }
    }
    out
}

/// `m × (e(F)⊠g)` on the generator `j` of C(F, src(g)).
fn f_image(h: &RookAlgebra, g: &RookGen, j: usize) -> Local<usize> {
    let x = g.src();
    let fx = f_state(x, j);
    let mut out = Vec::new();
    match g {
        RookGen::Loop(l) => {
            let j0 = j_of(x, l.i);
            let lab = if j > j0 { l.i } else { l.i + 1 };
            push(&mut out, Path::new(fx).lp(lab).value(h), j);
        }
        RookGen::Move(d) => {
            let (i, s1, s0) = (d.i(), d.s1(), d.s0());
            if s1 > 0 {
                return out;
            }
            let j0 = j_of(x, i);
            if s0 == 0 {
                if j > j0 {
                    push(&mut out, Path::new(fx).step(i).value(h), j);
                } else if j == j0 {
                    out.push((unit(h, fx), j0));
                } else {
                    push(&mut out, Path::new(fx).step(i + 1).value(h), j);
                }
            } else if j + s0 == j0 {
                out.push((unit(h, fx), j0));
            }
        }
    }
    out
}

/// The image of an E-local element under `e(E)⊠g`.
fn e_apply(h: &RookAlgebra, elt: &Local<(usize, bool)>, g: &RookGen) -> Local<(usize, bool)> {
    let mut out = Vec::new();
    for &(c, (i, p)) in elt {
        for (c2, k) in e_image(h, g, i, p) {
            push(&mut out, h.alg.mul_basis(c, c2), k);
        }
    }
    xor_local(out)
}

fn xor_local<K: Ord + Copy>(mut v: Local<K>) -> Local<K> {
    v.sort_unstable();
    let mut out: Local<K> = Vec::with_capacity(v.len());
    for x in v {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// The steps of `r_F(x; j)`, from `(Fx)_j` to `(Fx)_{j-1}`.
fn r_f(x: BasisState, j: usize) -> Path {
    Path::new(f_state(x, j)).steps(q_of(x, j - 1) + 1..=q_of(x, j) + 1)
}

/// `d(m^i)` and `d(m'^i)` in C(E, x) for `1 ≤ i < k`.
fn e_differential(h: &RookAlgebra, x: BasisState, i: usize) -> [Local<(usize, bool)>; 2] {
    let (xi, xn) = (x.x(i), x.x(i + 1));
    let walk = |theta: bool, sigma: bool| {
        let mut p = Path::new(e_state(x, i));
        if theta {
            p = p.lp(i);
        }
        for s in 0..xn - xi {
            if s > 0 {
                p = p.lp(i);
            }
            p = p.step(i);
        }
        if sigma {
            p = p.lp(i);
        }
        p.value(h)
    };
    let mut dm = Vec::new();
    push(&mut dm, walk(true, false), (i + 1, false));
    push(&mut dm, walk(false, false), (i + 1, true));
    let mut dm1 = Vec::new();
    push(&mut dm1, walk(true, true), (i + 1, false));
    push(&mut dm1, walk(false, true), (i + 1, true));
    [dm, dm1]
}

/// Which rule `e(EF)⊠ρ(x →i x)` follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CnRules {
    /// Each summand C(E,(Fx)_j) is acted on by E applied to the lifted loop.
    /// Not a chain map from n = 3: on the edge j(x,i)+1 → j(x,i) the lifted
    /// loops only commute with r_F up to the crossing relation, which holds
    /// in H(R_n) but not in R_n.
    Published,
    /// Adds E(p·c·s) from summand j(x,i)+1 to summand j(x,i), where
    /// `p·c·s` is r_F with the steps of strands i, i+1 replaced by the
    /// crossing in which strand i+1 jumps over strand i; its differential
    /// is ρ(i)·r_F + r_F·ρ(i+1).
    Corrected,
}

/// `p·c·s` on the edge out of summand `j = j(x,i)+1`.
fn loop_homotopy(x: BasisState, i: usize, j: usize) -> Vec<RookGen> {
    let fx = f_state(x, j);
    let mut p = Path::new(fx).steps(q_of(x, j - 1) + 1..i);
    let z = p.at;
    let c = RookGen::Move(make_elementary(z, i + 1, z.x(i) - 1).expect("crossing move"));
    p.at = c.tgt();
    p.gens.push(c);
    p.steps(i + 2..=q_of(x, j) + 1).gens
}

pub fn build_Cn(h: &RookAlgebra, ar: &ARn) -> Cn {
    build_Cn_with(h, ar, CnRules::Corrected)
}

pub fn build_Cn_with(h: &RookAlgebra, ar: &ARn, rules: CnRules) -> Cn {
    use UtBasis::*;
    let n = h.n;
    assert_eq!(n, ar.n);
    let nb = UT_ORDER.len() << n;
    let mut b = DGBimodule::new(format!("C_{n}"), nb, RightGrading::Same);
    let mut keys: HashMap<(u32, CKey), u32> = HashMap::new();
    let hv = RookPresentation::vertex;

    // left modules
    for x in BasisState::all(n) {
        let k = x.k();
        let v = ar.vertex(I, x);
        let s = b.blocks[v as usize].add(format!("m(I{x})"), hv(x), Trigrade::ZERO);
        keys.insert((v, CKey::I), s);

        let v = ar.vertex(F, x);
        for j in 1..=n - k {
            let xb = x.xbar(j);
            let sh = Trigrade::bi(beta(x, xb).expect("empty") as i32, (n - xb) as i32);
            let s = b.blocks[v as usize].add(format!("m_{j}({})", f_state(x, j)), hv(f_state(x, j)), sh);
            keys.insert((v, CKey::F(j)), s);
        }
        for j in 2..=n - k {
            let p = r_f(x, j);
            let to = keys[&(v, CKey::F(j - 1))];
            let d = p.value(h).map(|c| vec![(c, to)]).unwrap_or_default();
            let s = keys[&(v, CKey::F(j))];
            b.blocks[v as usize].set_d(s, d);
        }

        let v = ar.vertex(E, x);
        for i in 1..=k {
            let ex = e_state(x, i);
            let s = b.blocks[v as usize].add(format!("m^{i}({ex})"), hv(ex), Trigrade::bi(1 - i as i32, 0));
            keys.insert((v, CKey::E(i, false)), s);
            let s = b.blocks[v as usize].add(format!("m'^{i}({ex})"), hv(ex), Trigrade::bi(2 - i as i32, 1));
            keys.insert((v, CKey::E(i, true)), s);
        }
        for i in 1..k {
            let [dm, dm1] = e_differential(h, x, i);
            for (p, d) in [(false, dm), (true, dm1)] {
                let s = keys[&(v, CKey::E(i, p))];
                let d = d.into_iter().map(|(c, (i2, p2))| (c, keys[&(v, CKey::E(i2, p2))])).collect();
                b.blocks[v as usize].set_d(s, mod_from(d));
            }
        }

        let v = ar.vertex(EF, x);
        for j in 1..=n - k {
            let fx = f_state(x, j);
            let xb = x.xbar(j);
            let bt = beta(x, xb).expect("empty") as i32;
            let t = (n - xb) as i32;
            for i in 1..=k + 1 {
                let ex = e_state(fx, i);
                let s = b.blocks[v as usize].add(
                    format!("m^{i}_{j}({ex})"),
                    hv(ex),
                    Trigrade::bi(bt + 1 - i as i32, t),
                );
                keys.insert((v, CKey::EF(j, i, false)), s);
                let s = b.blocks[v as usize].add(
                    format!("m'^{i}_{j}({ex})"),
                    hv(ex),
                    Trigrade::bi(bt + 2 - i as i32, t + 1),
                );
                keys.insert((v, CKey::EF(j, i, true)), s);
            }
        }
        for j in 1..=n - k {
            let fx = f_state(x, j);
            let hor = (j >= 2).then(|| r_f(x, j).gens);
            for i in 1..=k + 1 {
                let vert = if i <= k { Some(e_differential(h, fx, i)) } else { None };
                for p in [false, true] {
                    let mut d: ModElt = Vec::new();
                    if let Some(vd) = &vert {
                        let part = &vd[p as usize];
                        d.extend(part.iter().map(|&(c, (i2, p2))| (c, keys[&(v, CKey::EF(j, i2, p2))])));
                    }
                    if let Some(word) = &hor {
                        let mut cur = vec![(unit(h, e_state(fx, i)), (i, p))];
                        for g in word {
                            cur = e_apply(h, &cur, g);
                        }
                        d.extend(cur.into_iter().map(|(c, (i2, p2))| (c, keys[&(v, CKey::EF(j - 1, i2, p2))])));
                    }
                    let s = keys[&(v, CKey::EF(j, i, p))];
                    b.blocks[v as usize].set_d(s, mod_from(d));
                }
            }
        }
    }

    // right action
    let k_at = |v: u32, key: CKey| keys[&(v, key)];
    let mut entries: Vec<(u32, u32, u32, ModElt)> = Vec::new();
    let mut put = |v: u32, key: CKey, g: u32, w: u32, img: Vec<(u32, CKey)>| {
        let s = k_at(v, key);
        let x = mod_from(img.into_iter().map(|(c, kk)| (c, k_at(w, kk))).collect());
        entries.push((v, s, g, x));
    };
    for (&(gv, rid), &g) in &ar.right {
        let rg = ar.rook_gens[rid as usize];
        let (x, y) = (rg.src(), rg.tgt());
        let gamma = UT_ORDER[gv as usize];
        let (vx, vy) = (ar.vertex(gamma, x), ar.vertex(gamma, y));
        match gamma {
            I => {
                // M2
                let img = h.id(&rg).and_then(|hg| h.alg.word_value(&[hg]));
                put(vx, CKey::I, g, vy, img.map(|c| vec![(c, CKey::I)]).unwrap_or_default());
            }
            F => {
                for j in 1..=n - x.k() {
                    let img = f_image(h, &rg, j).into_iter().map(|(c, j2)| (c, CKey::F(j2))).collect();
                    put(vx, CKey::F(j), g, vy, img);
                }
            }
            E => {
                for i in 1..=x.k() {
                    for p in [false, true] {
                        let img = e_image(h, &rg, i, p).into_iter().map(|(c, (i2, p2))| (c, CKey::E(i2, p2))).collect();
                        put(vx, CKey::E(i, p), g, vy, img);
                    }
                }
            }
            EF => {
                for j in 1..=n - x.k() {
                    let fx = f_state(x, j);
                    // the F-image of the generator on summand j, as (E-morphism, target summand)
                    let lifted: Option<(Option<RookGen>, usize)> = match rg {
                        RookGen::Loop(l) => {
                            let lab = if j > j_of(x, l.i) { l.i } else { l.i + 1 };
                            Some((Some(lp(fx, lab)), j))
                        }
                        RookGen::Move(d) => {
                            let (i, s1, s0) = (d.i(), d.s1(), d.s0());
                            let j0 = j_of(x, i);
                            if s1 > 0 {
                                None
                            } else if s0 == 0 {
                                if j > j0 {
                                    Some((Some(step(fx, i)), j))
                                } else if j == j0 {
                                    Some((None, j0))
                                } else {
                                    Some((Some(step(fx, i + 1)), j))
                                }
                            } else if j + s0 == j0 {
                                Some((None, j0))
                            } else {
                                None
                            }
                        }
                    };
                    let homotopy = match rg {
                        RookGen::Loop(l) if rules == CnRules::Corrected && j == j_of(x, l.i) + 1 && j >= 2 => {
                            Some(loop_homotopy(x, l.i, j))
                        }
                        _ => None,
                    };
                    for i in 1..=x.k() + 1 {
                        for p in [false, true] {
                            let mut img: Vec<(u32, CKey)> = match lifted {
                                None => Vec::new(),
                                Some((None, j2)) => vec![(unit(h, e_state(fx, i)), CKey::EF(j2, i, p))],
                                Some((Some(eg), j2)) => e_image(h, &eg, i, p)
                                    .into_iter()
                                    .map(|(c, (i2, p2))| (c, CKey::EF(j2, i2, p2)))
                                    .collect(),
                            };
                            if let Some(word) = &homotopy {
                                let mut cur = vec![(unit(h, e_state(fx, i)), (i, p))];
                                for eg in word {
                                    cur = e_apply(h, &cur, eg);
                                }
                                img.extend(cur.into_iter().map(|(c, (i2, p2))| (c, CKey::EF(j - 1, i2, p2))));
                            }
                            put(vx, CKey::EF(j, i, p), g, vy, img);
                        }
                    }
                }
            }
        }
    }
    for x in BasisState::all(n) {
        let (k, xb) = (x.k(), x.bits());
        let (vi, vef) = (ar.vertex(I, x), ar.vertex(EF, x));
        if k == n {
            continue;
        }
        // M6-1
        let q = q_of(x, n - k);
        let c = Path::new(x).steps(q + 1..=k).value(h);
        let img = c.map(|c| vec![(c, CKey::EF(n - k, k + 1, false))]).unwrap_or_default();
        put(vi, CKey::I, ar.left[&(RHO_I_EF, xb)], vef, img);
        // M7-1
        let q1 = q_of(x, 1);
        let c = Path::new(e_state(f_state(x, 1), 1)).steps(1..=q1).value(h);
        let img = c.map(|c| vec![(c, CKey::I)]).unwrap_or_default();
        put(vef, CKey::EF(1, 1, true), ar.left[&(RHO_EF_I, xb)], vi, img);
        for i in 1..=k {
            // M6-2
            if let Some(&g) = ar.rho_bar.get(&(xb, i)) {
                let c = Path::new(x).steps(q + 1..i).value(h);
                let img = c.map(|c| vec![(c, CKey::EF(n - k, i, false))]).unwrap_or_default();
                put(vi, CKey::I, g, vef, img);
            }
            // M7-2
            if let Some(&g) = ar.rho_bar_prime.get(&(xb, i)) {
                let c = Path::new(e_state(f_state(x, 1), i + 1)).steps(i + 1..=q1).value(h);
                let img = c.map(|c| vec![(c, CKey::I)]).unwrap_or_default();
                put(vef, CKey::EF(1, i + 1, true), g, vi, img);
            }
        }
    }
    for (v, s, g, x) in entries {
        b.set(v, s, g, x);
    }
    Cn { n, bimod: b, keys }
}
