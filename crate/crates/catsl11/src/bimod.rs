//! DG bimodules given by a left module per right idempotent and a right
//! action of the right algebra's generators.

#![allow(non_snake_case)]

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::dgmod::{mod_from, DGModule, ModElt};
use crate::foundation::Trigrade;
use crate::gf2::{self, BitVec};
use crate::par;
use crate::presented::{Algebra, CheckOutcome};
use crate::ut_hopf::UtBasis;
use crate::zoo::{a_vertex, aoa_tensor, b_vertex, UT_ORDER};

/// How a right-algebra degree enters the left grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RightGrading {
    Same,
    /// `(h, t) ↦ (h; t, t)`
    Diagonal,
}

impl RightGrading {
    pub fn apply(self, g: Trigrade) -> Trigrade {
        match self {
            RightGrading::Same => g,
            RightGrading::Diagonal => Trigrade::new(g.h, g.t1, g.t1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DGBimodule {
    pub name: String,
    /// Left module at each right idempotent.
    pub blocks: Vec<DGModule>,
    /// `(block, generator, right generator) ↦ m × r`; absent entries are zero.
    pub act: HashMap<(u32, u32, u32), ModElt>,
    pub grading: RightGrading,
}

impl DGBimodule {
    pub fn new(name: impl Into<String>, blocks: usize, grading: RightGrading) -> Self {
        DGBimodule { name: name.into(), blocks: vec![DGModule::new(); blocks], act: HashMap::new(), grading }
    }

    pub fn set(&mut self, v: u32, s: u32, g: u32, x: ModElt) {
        if x.is_empty() {
            self.act.remove(&(v, s, g));
        } else {
            self.act.insert((v, s, g), x);
        }
    }

    pub fn num_generators(&self) -> usize {
        self.blocks.iter().map(DGModule::len).sum()
    }

    /// `x × g` for `x` in block `v`.
    pub fn act_gen(&self, left: &Algebra, x: &ModElt, v: u32, g: u32) -> ModElt {
        let mut out = Vec::new();
        for &(b, s) in x {
            if let Some(img) = self.act.get(&(v, s, g)) {
                out.extend(img.iter().filter_map(|&(c, t)| left.mul_basis(b, c).map(|p| (p, t))));
            }
        }
        mod_from(out)
    }

    /// `x × w` for a word `w` starting at `v`.
    pub fn act_word(&self, left: &Algebra, right: &Algebra, x: &ModElt, v: u32, w: &[u32]) -> ModElt {
        let mut cur = x.clone();
        let mut at = v;
        for &g in w {
            if cur.is_empty() {
                break;
            }
            cur = self.act_gen(left, &cur, at, g);
            at = right.pres.gens[g as usize].tgt;
        }
        cur
    }

    /// `x × r` for a basis element `r` of the right algebra.
    pub fn act_basis(&self, left: &Algebra, right: &Algebra, x: &ModElt, v: u32, r: u32) -> ModElt {
        let e = &right.basis[r as usize];
        if e.src != v {
            return Vec::new();
        }
        self.act_word(left, right, x, v, &e.word)
    }

    pub fn render(&self, left: &Algebra, v: u32, x: &ModElt) -> String {
        self.blocks[v as usize].render(left, x)
    }

    /// Stable text form: blocks, then the nonzero action table.
    pub fn dump(&self, left: &Algebra, right: &Algebra) -> String {
        let mut out = String::new();
        for (v, m) in self.blocks.iter().enumerate() {
            out.push_str(&format!("[{}]\n", right.pres.vertices[v]));
            out.push_str(&m.dump(left));
        }
        let mut keys: Vec<_> = self.act.keys().copied().collect();
        keys.sort_unstable();
        for (v, s, g) in keys {
            let tgt = right.pres.gens[g as usize].tgt;
            out.push_str(&format!(
                "{} × {} = {}\n",
                self.blocks[v as usize].names[s as usize],
                right.pres.gens[g as usize].name,
                self.render(left, tgt, &self.act[&(v, s, g)])
            ));
        }
        out
    }
}

/// All generators as `(block, generator)`.
fn generators(b: &DGBimodule) -> Vec<(u32, u32)> {
    let mut v = Vec::new();
    for (w, m) in b.blocks.iter().enumerate() {
        for s in 0..m.len() as u32 {
            v.push((w as u32, s));
        }
    }
    v
}

fn collect(name: &str, results: Vec<(usize, Option<String>)>) -> CheckOutcome {
    let checked = results.iter().map(|r| r.0).sum();
    CheckOutcome::new(name, checked, results.into_iter().find_map(|r| r.1))
}

/// Exhaustive well-definedness checks of a bimodule.
pub fn verify_bimodule(b: &DGBimodule, left: &Algebra, right: &Algebra) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let gens = generators(b);

    // left differentials
    let mut merged: Vec<CheckOutcome> = Vec::new();
    for (w, m) in b.blocks.iter().enumerate() {
        for (k, c) in m.check(left).into_iter().enumerate() {
            if merged.len() <= k {
                merged.push(CheckOutcome { name: format!("block {}", c.name), checked: 0, pass: true, witness: None });
            }
            merged[k].checked += c.checked;
            if merged[k].witness.is_none() {
                if let Some(wt) = c.witness {
                    merged[k].witness = Some(format!("[{}] {wt}", right.pres.vertices[w]));
                    merged[k].pass = false;
                }
            }
        }
    }
    out.extend(merged);

    // table entries: right block, composable, degree
    let mut witness = None;
    let mut checked = 0;
    for (&(v, s, g), x) in &b.act {
        checked += 1;
        let spec = &right.pres.gens[g as usize];
        let m = &b.blocks[v as usize];
        let tgt = &b.blocks[spec.tgt as usize];
        let ok_src = spec.src == v && (s as usize) < m.len();
        let deg = m.degree_of(s) + b.grading.apply(spec.grade);
        let starts = x.iter().all(|&(c, _)| left.basis[c as usize].src == m.summands[s as usize].vertex);
        if !ok_src || !tgt.composable(left, x) || !starts {
            witness.get_or_insert_with(|| format!("{} × {} is malformed", m.names[s as usize], spec.name));
        } else if !tgt.homogeneous(left, x, deg) {
            witness.get_or_insert_with(|| {
                format!("deg({} × {}) != deg + deg: {}", m.names[s as usize], spec.name, tgt.render(left, x))
            });
        }
    }
    out.push(CheckOutcome::new("action well formed and graded", checked, witness));

    // relations
    let mut rels_from: Vec<Vec<usize>> = vec![Vec::new(); right.num_vertices()];
    for (k, r) in right.pres.relations.iter().enumerate() {
        rels_from[right.pres.word_src(r.lhs()) as usize].push(k);
    }
    let res = par::map(&gens, |&(v, s)| {
        let m = b.blocks[v as usize].gen(left, s);
        let rs = &rels_from[v as usize];
        for &k in rs {
            let r = &right.pres.relations[k];
            let l = b.act_word(left, right, &m, v, r.lhs());
            let rv = r.rhs().map(|w| b.act_word(left, right, &m, v, w)).unwrap_or_default();
            if l != rv {
                let t = right.pres.word_tgt(r.lhs());
                return (
                    rs.len(),
                    Some(format!(
                        "{} × ({}) = {} but the other side gives {}",
                        b.blocks[v as usize].names[s as usize],
                        right.pres.render_word(r.lhs()),
                        b.render(left, t, &l),
                        b.render(left, t, &rv)
                    )),
                );
            }
        }
        (rs.len(), None)
    });
    out.push(collect("relation compatibility", res));

    // Leibniz on generators
    let res = par::map(&gens, |&(v, s)| {
        let mb = &b.blocks[v as usize];
        let m = mb.gen(left, s);
        let rgens = right.gens_from(v);
        for &g in rgens {
            let t = right.pres.gens[g as usize].tgt;
            let lhs = b.blocks[t as usize].d_elt(left, &b.act_gen(left, &m, v, g));
            let mut rhs = b.act_gen(left, &mb.d_elt(left, &m), v, g);
            for w in &right.pres.differential[g as usize] {
                rhs = crate::dgmod::mod_add(&rhs, &b.act_word(left, right, &m, v, w));
            }
            if lhs != rhs {
                return (
                    rgens.len(),
                    Some(format!(
                        "d({} × {}) = {} but d(m) × r + m × d(r) = {}",
                        mb.names[s as usize],
                        right.pres.gens[g as usize].name,
                        b.render(left, t, &lhs),
                        b.render(left, t, &rhs)
                    )),
                );
            }
        }
        (rgens.len(), None)
    });
    out.push(collect("Leibniz rule", res));

    // left and right actions commute
    let res = par::map(&gens, |&(v, s)| {
        let mb = &b.blocks[v as usize];
        let vert = mb.summands[s as usize].vertex;
        let m = mb.gen(left, s);
        let mut count = 0;
        for (a, spec) in left.pres.gens.iter().enumerate() {
            if spec.tgt != vert {
                continue;
            }
            let Some(ab) = left.word_value(&[a as u32]) else { continue };
            for &g in right.gens_from(v) {
                count += 1;
                let one = b.act_gen(left, &mb.mul_left(left, ab, &m), v, g);
                let two = b.blocks[right.pres.gens[g as usize].tgt as usize].mul_left(left, ab, &b.act_gen(left, &m, v, g));
                if one != two {
                    return (count, Some(format!("a·(m × r) != (a·m) × r for m = {}", mb.names[s as usize])));
                }
            }
        }
        (count, None)
    });
    out.push(collect("left-right commutation", res));
    out
}

/// `b ⊗ P(v){shift}`: the block at `v`, shifted.
pub fn tensor_with(b: &DGBimodule, v: u32, shift: Trigrade) -> DGModule {
    b.blocks[v as usize].shifted(b.grading.apply(shift))
}

/// Graded dimensions of `e(u)·M` over the left algebra, keyed by `(u, degree)`.
pub fn expansion_dims(left: &Algebra, m: &DGModule) -> BTreeMap<(u32, Trigrade), usize> {
    let mut out = BTreeMap::new();
    for p in &m.summands {
        for e in &left.basis {
            if e.tgt == p.vertex {
                *out.entry((e.src, e.grade + p.degree())).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Graded dimensions of `b ⊗_R R·e(v)` built as the span of `m ⊗ r`
/// modulo `(m × g) ⊗ r = m ⊗ (g·r)`, without using the block structure.
pub fn quotient_tensor_dims(b: &DGBimodule, left: &Algebra, right: &Algebra, v: u32) -> BTreeMap<(u32, Trigrade), usize> {
    // spanning set: (a, block w, generator s, r) with tgt(a) = vertex(s), r: w → v
    let mut index: HashMap<(u32, u32, u32, u32), (u32, Trigrade, usize)> = HashMap::new();
    let mut sizes: BTreeMap<(u32, Trigrade), usize> = BTreeMap::new();
    let into_v: Vec<u32> = (0..right.dim() as u32).filter(|&r| right.basis[r as usize].tgt == v).collect();
    for &r in &into_v {
        let re = &right.basis[r as usize];
        let m = &b.blocks[re.src as usize];
        for (s, p) in m.summands.iter().enumerate() {
            for (a, ae) in left.basis.iter().enumerate() {
                if ae.tgt != p.vertex {
                    continue;
                }
                let key = (ae.src, ae.grade + p.degree() + b.grading.apply(re.grade));
                let slot = sizes.entry(key).or_insert(0);
                index.insert((a as u32, re.src, s as u32, r), (key.0, key.1, *slot));
                *slot += 1;
            }
        }
    }
    let mut relations: BTreeMap<(u32, Trigrade), Vec<BitVec>> = BTreeMap::new();
    for (w, m) in b.blocks.iter().enumerate() {
        let w = w as u32;
        for (s, p) in m.summands.iter().enumerate() {
            let s = s as u32;
            for &g in right.gens_from(w) {
                let gt = right.pres.gens[g as usize].tgt;
                let Some(gb) = right.word_value(&[g]) else { continue };
                for &r in &into_v {
                    if right.basis[r as usize].src != gt {
                        continue;
                    }
                    for (a, ae) in left.basis.iter().enumerate() {
                        if ae.tgt != p.vertex {
                            continue;
                        }
                        let mut terms: Vec<(u32, u32, u32, u32)> = Vec::new();
                        for &(c, t) in &b.act_gen(left, &vec![(a as u32, s)], w, g) {
                            terms.push((c, gt, t, r));
                        }
                        if let Some(gr) = right.mul_basis(gb, r) {
                            terms.push((a as u32, w, s, gr));
                        }
                        if terms.is_empty() {
                            continue;
                        }
                        let key = {
                            let i = index[&terms[0]];
                            (i.0, i.1)
                        };
                        let len = sizes[&key];
                        let vec = BitVec::from_indices(len, terms.iter().map(|t| index[t].2));
                        relations.entry(key).or_default().push(vec);
                    }
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for (key, size) in sizes {
        let rank = relations.get(&key).map(|r| gf2::rank(r, size)).unwrap_or(0);
        if size > rank {
            out.insert(key, size - rank);
        }
    }
    out
}

/// Spanning-set size of `quotient_tensor_dims` at `v`.
pub fn quotient_tensor_size(b: &DGBimodule, left: &Algebra, right: &Algebra, v: u32) -> u64 {
    let mut into: Vec<u64> = vec![0; left.num_vertices()];
    for e in &left.basis {
        into[e.tgt as usize] += 1;
    }
    right
        .basis
        .iter()
        .filter(|re| re.tgt == v)
        .map(|re| b.blocks[re.src as usize].summands.iter().map(|p| into[p.vertex as usize]).sum::<u64>())
        .sum()
}

/// Largest spanning set `check_tensor_with` is run on by the suites.
pub const TENSOR_BUDGET: u64 = 20_000;

/// The block lookup and the quotient construction agree at `v`.
pub fn check_tensor_with(b: &DGBimodule, left: &Algebra, right: &Algebra, v: u32) -> CheckOutcome {
    let block = expansion_dims(left, &tensor_with(b, v, Trigrade::ZERO));
    let quot = quotient_tensor_dims(b, left, right, v);
    let witness = (block != quot).then(|| {
        format!("at {}: block dims {:?} vs quotient dims {:?}", right.pres.vertices[v as usize], block, quot)
    });
    CheckOutcome::new("tensor product equals block", block.values().sum(), witness)
}

fn gen_basis(alg: &Algebra, name: &str) -> u32 {
    let g = alg.gen_id(name).unwrap_or_else(|| panic!("no generator {name}"));
    alg.word_value(&[g]).expect("generators are nonzero")
}

fn word_basis(alg: &Algebra, names: &[&str]) -> u32 {
    let w: Vec<u32> = names.iter().map(|n| alg.gen_id(n).unwrap_or_else(|| panic!("no generator {n}"))).collect();
    alg.word_value(&w).expect("nonzero path")
}

/// Multiplication bimodule N over (A, A⊗A).
pub fn build_N(a: &Algebra) -> DGBimodule {
    build_N_with(a, NTable::Completed)
}

/// Which right-action table N uses on `m_{EF,EF}(EF)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NTable {
    /// Exactly the published cases. Fails the relation check: the
    /// interchange relation from N(EF,I) to N(I,EF) and the zero relation
    /// (ρ(I,EF)ρ(EF,I))⊗e(EF) from N(I,EF) cannot both hold.
    Published,
    /// Published cases plus, with ℓ = ρ(EF,I)ρ(I,EF):
    /// `m_{I,EF}(EF) × (ρ(I,EF)⊗e(EF)) = m_{EF,EF}(EF) + ℓ·m'_{EF,EF}(EF)` and
    /// `m_{EF,EF}(EF) × (ρ(EF,I)⊗e(EF)) = ℓ·m_{I,EF}(EF)`.
    /// One of the two minimal completions; the other is its mirror in the
    /// second factor and differs by the basis change m ↦ m + ℓ·m'.
    Completed,
}

pub fn build_N_with(a: &Algebra, table: NTable) -> DGBimodule {
    use UtBasis::*;
    let tp = aoa_tensor();
    let nb = UT_ORDER.len();
    let mut b = DGBimodule::new("N", nb * nb, RightGrading::Same);
    let blk = |g1: UtBasis, g2: UtBasis| tp.vertex(a_vertex(g1), a_vertex(g2));
    let av = a_vertex;
    let name = |g1: UtBasis, g2: UtBasis, g: UtBasis, primed: bool| {
        format!("m{}_{{{},{}}}({})", if primed { "'" } else { "" }, g1.name(), g2.name(), g.name())
    };
    let add = |b: &mut DGBimodule, g1, g2, g, shift: Trigrade, primed| -> u32 {
        b.blocks[blk(g1, g2) as usize].add(name(g1, g2, g, primed), av(g), shift)
    };
    let mut id: HashMap<(UtBasis, UtBasis, bool), u32> = HashMap::new();
    for g in UT_ORDER {
        id.insert((g, I, false), add(&mut b, g, I, g, Trigrade::ZERO, false));
        if g != I {
            id.insert((I, g, false), add(&mut b, I, g, g, Trigrade::ZERO, false));
        }
    }
    id.insert((E, F, false), add(&mut b, E, F, EF, Trigrade::ZERO, false));
    id.insert((F, EF, false), add(&mut b, F, EF, F, Trigrade::ZERO, false));
    id.insert((F, EF, true), add(&mut b, F, EF, F, Trigrade::bi(1, 1), true));
    id.insert((EF, E, false), add(&mut b, EF, E, E, Trigrade::ZERO, false));
    id.insert((EF, E, true), add(&mut b, EF, E, E, Trigrade::bi(-1, 1), true));
    id.insert((EF, EF, false), add(&mut b, EF, EF, EF, Trigrade::ZERO, false));
    id.insert((EF, EF, true), add(&mut b, EF, EF, EF, Trigrade::bi(1, 1), true));
    // N(F,E) = P(I) ⊕ P(EF)[-1] ⊕ P(I){1}[-1]
    let fe = blk(F, E) as usize;
    let m0 = b.blocks[fe].add("m_{F,E}(I)", av(I), Trigrade::ZERO);
    let m1 = b.blocks[fe].add("m_{F,E}(EF)", av(EF), Trigrade::bi(-1, 0));
    let m2 = b.blocks[fe].add("m'_{F,E}(I)", av(I), Trigrade::bi(-1, 1));
    let (r_ie, r_ei) = (gen_basis(a, "ρ(I,EF)"), gen_basis(a, "ρ(EF,I)"));
    b.blocks[fe].set_d(m0, vec![(r_ie, m1)]);
    b.blocks[fe].set_d(m1, vec![(r_ei, m2)]);

    let e = |g: UtBasis| a.idempotent(av(g));
    let lg = |rho: u32, g2: UtBasis| tp.left[&(rho, av(g2))];
    let rg = |g1: UtBasis, rho: u32| tp.right[&(av(g1), rho)];
    let (ie, ei) = (crate::zoo::RHO_I_EF, crate::zoo::RHO_EF_I);
    let set = |b: &mut DGBimodule, src: (UtBasis, UtBasis, bool), g: u32, terms: Vec<(u32, (UtBasis, UtBasis, bool))>| {
        let v = blk(src.0, src.1);
        let s = id[&src];
        b.set(v, s, g, terms.into_iter().map(|(c, k)| (c, id[&k])).collect());
    };
    // (2)
    set(&mut b, (EF, E, true), lg(ei, E), vec![(e(E), (I, E, false))]);
    set(&mut b, (I, E, false), lg(ie, E), vec![(e(E), (EF, E, false))]);
    // (3)
    set(&mut b, (F, EF, true), rg(F, ei), vec![(e(F), (F, I, false))]);
    set(&mut b, (F, I, false), rg(F, ie), vec![(e(F), (F, EF, false))]);
    // (4)
    set(&mut b, (EF, I, false), lg(ei, I), vec![(r_ei, (I, I, false))]);
    set(&mut b, (I, I, false), lg(ie, I), vec![(r_ie, (EF, I, false))]);
    set(&mut b, (I, EF, false), rg(I, ei), vec![(r_ei, (I, I, false))]);
    set(&mut b, (I, I, false), rg(I, ie), vec![(r_ie, (I, EF, false))]);
    // (5)
    set(&mut b, (EF, EF, true), lg(ei, EF), vec![(e(EF), (I, EF, false))]);
    set(&mut b, (EF, EF, true), rg(EF, ei), vec![(e(EF), (EF, I, false))]);
    set(&mut b, (I, EF, false), lg(ie, EF), vec![(e(EF), (EF, EF, false))]);
    set(&mut b, (EF, I, false), rg(EF, ie), vec![(e(EF), (EF, EF, false))]);
    if table == NTable::Completed {
        let lp = a.mul_basis(r_ei, r_ie).expect("loop at EF");
        set(&mut b, (I, EF, false), lg(ie, EF), vec![(e(EF), (EF, EF, false)), (lp, (EF, EF, true))]);
        set(&mut b, (EF, EF, false), lg(ei, EF), vec![(lp, (I, EF, false))]);
    }
    b
}

/// Comultiplication bimodule S over (B, A).
pub fn build_S(bb: &Algebra) -> DGBimodule {
    use UtBasis::*;
    let mut s = DGBimodule::new("S", UT_ORDER.len(), RightGrading::Diagonal);
    let bv = b_vertex;
    let nm = |g1: UtBasis, g2: UtBasis| format!("m({}⊗{})", g1.name(), g2.name());
    let rho = |s1: (UtBasis, UtBasis), s2: (UtBasis, UtBasis)| {
        format!("ρ({}⊗{},{}⊗{})", s1.0.name(), s1.1.name(), s2.0.name(), s2.1.name())
    };
    let blk = |g: UtBasis| a_vertex(g) as usize;

    let ii = s.blocks[blk(I)].add(nm(I, I), bv(I, I), Trigrade::ZERO);

    let m = &mut s.blocks[blk(E)];
    let ei = m.add(nm(E, I), bv(E, I), Trigrade::ZERO);
    let ie = m.add(nm(I, E), bv(I, E), Trigrade::ZERO);
    m.set_d(ei, vec![(gen_basis(bb, &rho((E, I), (I, E))), ie)]);

    let m = &mut s.blocks[blk(F)];
    let i_f = m.add(nm(I, F), bv(I, F), Trigrade::ZERO);
    let fi = m.add(nm(F, I), bv(F, I), Trigrade::new(0, 0, 1));
    m.set_d(i_f, vec![(gen_basis(bb, &rho((I, F), (F, I))), fi)]);

    let m = &mut s.blocks[blk(EF)];
    let ef = m.add(nm(E, F), bv(E, F), Trigrade::ZERO);
    let i_ef = m.add(nm(I, EF), bv(I, EF), Trigrade::ZERO);
    let ef_i = m.add(nm(EF, I), bv(EF, I), Trigrade::new(0, 0, 1));
    let fe = m.add(nm(F, E), bv(F, E), Trigrade::new(-1, 0, 1));
    m.set_d(ef, vec![(gen_basis(bb, &rho((E, F), (I, EF))), i_ef)]);
    let path = [rho((I, EF), (EF, EF)), rho((EF, EF), (EF, I))];
    m.set_d(i_ef, vec![(word_basis(bb, &[&path[0], &path[1]]), ef_i)]);
    m.set_d(ef_i, vec![(gen_basis(bb, &rho((EF, I), (F, E))), fe)]);

    let (r_ie, r_ei) = (crate::zoo::RHO_I_EF, crate::zoo::RHO_EF_I);
    s.set(blk(I) as u32, ii, r_ie, vec![(gen_basis(bb, &rho((I, I), (I, EF))), i_ef)]);
    s.set(blk(EF) as u32, ef_i, r_ei, vec![(gen_basis(bb, &rho((EF, I), (I, I))), ii)]);
    s
}

/// Every `(block, generator, right generator)` where Leibniz fails, with
/// `d(m × r) + d(m) × r + m × d(r)`.
pub fn leibniz_defects(b: &DGBimodule, left: &Algebra, right: &Algebra) -> Vec<((u32, u32, u32), ModElt)> {
    let gens = generators(b);
    let per = par::map(&gens, |&(v, s)| {
        let mb = &b.blocks[v as usize];
        let m = mb.gen(left, s);
        let mut out = Vec::new();
        for &g in right.gens_from(v) {
            let t = right.pres.gens[g as usize].tgt;
            let mut x = b.blocks[t as usize].d_elt(left, &b.act_gen(left, &m, v, g));
            x = crate::dgmod::mod_add(&x, &b.act_gen(left, &mb.d_elt(left, &m), v, g));
            for w in &right.pres.differential[g as usize] {
                x = crate::dgmod::mod_add(&x, &b.act_word(left, right, &m, v, w));
            }
            if !x.is_empty() {
                out.push(((v, s, g), x));
            }
        }
        out
    });
    per.into_iter().flatten().collect()
}

/// Every `(block, generator, relation index)` where the two sides differ.
pub fn relation_defects(b: &DGBimodule, left: &Algebra, right: &Algebra) -> Vec<(u32, u32, usize)> {
    let gens = generators(b);
    let per = par::map(&gens, |&(v, s)| {
        let m = b.blocks[v as usize].gen(left, s);
        let mut out = Vec::new();
        for (k, r) in right.pres.relations.iter().enumerate() {
            if right.pres.word_src(r.lhs()) != v {
                continue;
            }
            let l = b.act_word(left, right, &m, v, r.lhs());
            let rv = r.rhs().map(|w| b.act_word(left, right, &m, v, w)).unwrap_or_default();
            if l != rv {
                out.push((v, s, k));
            }
        }
        out
    });
    per.into_iter().flatten().collect()
}
