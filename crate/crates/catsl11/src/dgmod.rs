//! Finite complexes of shifted projective modules over a built algebra.
//!
//! A module is a list of generators `m_s`, each spanning a copy of
//! `alg · e(v_s)` shifted by `{t}[h]`, with a differential given on the
//! generators and extended left-linearly. An element is a GF(2) sum of
//! `a · m_s` with `tgt(a) == v_s`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::foundation::{LaurentPoly2, Trigrade};
use crate::gf2::{self, BitVec};
use crate::par;
use crate::presented::{Algebra, CheckOutcome, TensorPres};
use crate::zoo::{parity, RookAlgebra, ARn, UT_ORDER};

/// `(basis element, generator)` pairs, sorted and without repeats.
pub type ModElt = Vec<(u32, u32)>;

pub fn mod_from(mut v: Vec<(u32, u32)>) -> ModElt {
    v.sort_unstable();
    let mut out: ModElt = Vec::with_capacity(v.len());
    for x in v {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn mod_add(a: &ModElt, b: &ModElt) -> ModElt {
    mod_from(a.iter().chain(b).copied().collect())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DgError {
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("map has {0} images for {1} generators")]
    Arity(usize, usize),
}

/// `P(v){t1,t2}[h]`, stored as `shift = (h; t1, t2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProjSummand {
    pub vertex: u32,
    pub shift: Trigrade,
}

impl ProjSummand {
    pub fn new(vertex: u32, shift: Trigrade) -> Self {
        ProjSummand { vertex, shift }
    }

    /// Degree of the generator: `{1}` lowers t by one, `[1]` lowers h by one.
    pub fn degree(&self) -> Trigrade {
        -self.shift
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DGModule {
    pub summands: Vec<ProjSummand>,
    pub names: Vec<String>,
    /// `d(m_s)`
    pub d: Vec<ModElt>,
}

/// Grothendieck class: `Σ (-1)^h T1^t1 T2^t2 [v]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct K0Class {
    pub coords: BTreeMap<u32, LaurentPoly2>,
}

impl K0Class {
    pub fn coeff(&self, v: u32) -> LaurentPoly2 {
        self.coords.get(&v).cloned().unwrap_or_else(LaurentPoly2::zero)
    }

    pub fn add_term(&mut self, v: u32, p: &LaurentPoly2) {
        let c = &self.coeff(v) + p;
        if c.is_zero() {
            self.coords.remove(&v);
        } else {
            self.coords.insert(v, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn sub(&self, o: &K0Class) -> K0Class {
        let mut r = self.clone();
        for (&v, p) in &o.coords {
            r.add_term(v, &p.scale(-1));
        }
        r
    }
}

impl DGModule {
    pub fn new() -> Self {
        DGModule::default()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn add(&mut self, name: impl Into<String>, vertex: u32, shift: Trigrade) -> u32 {
        self.summands.push(ProjSummand::new(vertex, shift));
        self.names.push(name.into());
        self.d.push(Vec::new());
        (self.summands.len() - 1) as u32
    }

    pub fn set_d(&mut self, s: u32, x: ModElt) {
        self.d[s as usize] = x;
    }

    pub fn degree_of(&self, s: u32) -> Trigrade {
        self.summands[s as usize].degree()
    }

    /// The generator `m_s` as an element.
    pub fn gen(&self, alg: &Algebra, s: u32) -> ModElt {
        vec![(alg.idempotent(self.summands[s as usize].vertex), s)]
    }

    /// `Σ a·m_s` for the given (basis element, generator) pairs.
    pub fn elt(&self, terms: impl IntoIterator<Item = (u32, u32)>) -> ModElt {
        mod_from(terms.into_iter().collect())
    }

    pub fn mul_left(&self, alg: &Algebra, a: u32, x: &ModElt) -> ModElt {
        mod_from(x.iter().filter_map(|&(b, s)| alg.mul_basis(a, b).map(|c| (c, s))).collect())
    }

    pub fn d_elt(&self, alg: &Algebra, x: &ModElt) -> ModElt {
        let mut out = Vec::new();
        for &(b, s) in x {
            out.extend(alg.d_basis(b).iter().map(|&c| (c, s)));
            out.extend(self.mul_left(alg, b, &self.d[s as usize]));
        }
        mod_from(out)
    }

    pub fn term_degree(&self, alg: &Algebra, (b, s): (u32, u32)) -> Trigrade {
        alg.basis[b as usize].grade + self.degree_of(s)
    }

    /// Every term of `x` sits at degree `deg`.
    pub fn homogeneous(&self, alg: &Algebra, x: &ModElt, deg: Trigrade) -> bool {
        x.iter().all(|&t| self.term_degree(alg, t) == deg)
    }

    pub fn composable(&self, alg: &Algebra, x: &ModElt) -> bool {
        x.iter().all(|&(b, s)| {
            (s as usize) < self.len() && alg.basis[b as usize].tgt == self.summands[s as usize].vertex
        })
    }

    pub fn shifted(&self, by: Trigrade) -> DGModule {
        let mut m = self.clone();
        for s in &mut m.summands {
            s.shift = s.shift + by;
        }
        m
    }

    /// `self ⊕ other`; generators of `other` are renumbered after ours.
    pub fn direct_sum(&self, other: &DGModule) -> DGModule {
        let off = self.len() as u32;
        let mut m = self.clone();
        m.summands.extend(other.summands.iter().copied());
        m.names.extend(other.names.iter().cloned());
        m.d.extend(other.d.iter().map(|x| x.iter().map(|&(b, s)| (b, s + off)).collect()));
        m
    }

    /// Well-formedness: composable entries, `deg d = (1;0,0)`, `d² = 0`.
    pub fn check(&self, alg: &Algebra) -> Vec<CheckOutcome> {
        let mut w_comp = None;
        let mut w_deg = None;
        let mut w_sq = None;
        for s in 0..self.len() as u32 {
            let ds = &self.d[s as usize];
            if w_comp.is_none() && !self.composable(alg, ds) {
                w_comp = Some(format!("d({}) has a non-composable term", self.names[s as usize]));
                continue;
            }
            if w_deg.is_none() && !self.homogeneous(alg, ds, self.degree_of(s) + Trigrade::D) {
                w_deg = Some(format!("d({}) = {} is not of degree (1;0,0)", self.names[s as usize], self.render(alg, ds)));
            }
            let dd = self.d_elt(alg, ds);
            if w_sq.is_none() && !dd.is_empty() {
                w_sq = Some(format!("d²({}) = {}", self.names[s as usize], self.render(alg, &dd)));
            }
        }
        vec![
            CheckOutcome::new("module differential composable", self.len(), w_comp),
            CheckOutcome::new("module differential of degree (1;0,0)", self.len(), w_deg),
            CheckOutcome::new("module d² = 0", self.len(), w_sq),
        ]
    }

    pub fn render(&self, alg: &Algebra, x: &ModElt) -> String {
        if x.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .iter()
            .map(|&(b, s)| {
                let name = &self.names[s as usize];
                if alg.basis[b as usize].word.is_empty() {
                    name.clone()
                } else {
                    format!("{}·{}", alg.render_basis(b), name)
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Stable text form: one line per generator, then the differential.
    pub fn dump(&self, alg: &Algebra) -> String {
        let mut out = String::new();
        for (s, (p, name)) in self.summands.iter().zip(&self.names).enumerate() {
            let _ = writeln!(
                out,
                "{name}: P({}){{{},{}}}[{}]",
                alg.pres.vertices[p.vertex as usize], p.shift.t1, p.shift.t2, p.shift.h
            );
            if !self.d[s].is_empty() {
                let _ = writeln!(out, "  d = {}", self.render(alg, &self.d[s]));
            }
        }
        out
    }
}

pub fn k0_class(m: &DGModule) -> K0Class {
    let mut k = K0Class::default();
    for p in &m.summands {
        let sign = if p.shift.h.rem_euclid(2) == 0 { 1 } else { -1 };
        k.add_term(p.vertex, &LaurentPoly2::monomial(sign, p.shift.t1, p.shift.t2));
    }
    k
}

/// Whether `images` (one per generator of `src`) define a degree-(0;0,0)
/// chain map `src → dst`; `None` if so.
pub fn chain_map_defect(alg: &Algebra, src: &DGModule, dst: &DGModule, images: &[ModElt]) -> Option<String> {
    if images.len() != src.len() {
        return Some(format!("{} images for {} generators", images.len(), src.len()));
    }
    let apply = |x: &ModElt| -> ModElt {
        let mut out = Vec::new();
        for &(b, s) in x {
            out.extend(dst.mul_left(alg, b, &images[s as usize]));
        }
        mod_from(out)
    };
    for s in 0..src.len() as u32 {
        let img = &images[s as usize];
        if !dst.composable(alg, img) || !dst.homogeneous(alg, img, src.degree_of(s)) {
            return Some(format!("image of {} is not composable or not of degree 0", src.names[s as usize]));
        }
        for &(b, _) in img {
            if alg.basis[b as usize].src != src.summands[s as usize].vertex {
                return Some(format!("image of {} starts at the wrong idempotent", src.names[s as usize]));
            }
        }
        let fd = apply(&src.d[s as usize]);
        let df = dst.d_elt(alg, img);
        if fd != df {
            return Some(format!("f∘d != d∘f on {}", src.names[s as usize]));
        }
    }
    None
}

/// Mapping cone `dst ⊕ src[1]` of a chain map.
pub fn cone(alg: &Algebra, src: &DGModule, dst: &DGModule, images: &[ModElt]) -> Result<DGModule, DgError> {
    if images.len() != src.len() {
        return Err(DgError::Arity(images.len(), src.len()));
    }
    if let Some(w) = chain_map_defect(alg, src, dst, images) {
        return Err(DgError::NotChainMap(w));
    }
    let mut m = dst.direct_sum(&src.shifted(Trigrade::new(1, 0, 0)));
    let off = dst.len() as u32;
    for s in 0..src.len() {
        let k = off as usize + s;
        m.d[k] = mod_add(&m.d[k], &images[s]);
        m.names[k] = format!("{}[1]", src.names[s]);
    }
    Ok(m)
}

/// Homology dimensions of `e(v)·M`, keyed by `(v, degree)`.
pub fn homology(alg: &Algebra, m: &DGModule) -> BTreeMap<(u32, Trigrade), usize> {
    // (left vertex, t1, t2) -> h -> terms
    let mut blocks: BTreeMap<(u32, i32, i32), BTreeMap<i32, Vec<(u32, u32)>>> = BTreeMap::new();
    for (s, p) in m.summands.iter().enumerate() {
        for (b, e) in alg.basis.iter().enumerate() {
            if e.tgt != p.vertex {
                continue;
            }
            let g = e.grade + p.degree();
            blocks.entry((e.src, g.t1, g.t2)).or_default().entry(g.h).or_default().push((b as u32, s as u32));
        }
    }
    let blocks: Vec<_> = blocks.into_iter().collect();
    let per = par::map(&blocks, |((v, t1, t2), by_h)| {
        let images = |from: &[(u32, u32)], to: &[(u32, u32)]| -> Vec<BitVec> {
            let pos: std::collections::HashMap<(u32, u32), usize> = to.iter().enumerate().map(|(k, &x)| (x, k)).collect();
            from.iter()
                .map(|&x| BitVec::from_indices(to.len(), m.d_elt(alg, &vec![x]).iter().map(|t| pos[t])))
                .collect()
        };
        let mut out = Vec::new();
        let empty = Vec::new();
        for (&h, cur) in by_h {
            let next = by_h.get(&(h + 1)).unwrap_or(&empty);
            let prev = by_h.get(&(h - 1)).unwrap_or(&empty);
            let r_out = gf2::rank(&images(cur, next), next.len());
            let r_in = gf2::rank(&images(prev, cur), cur.len());
            let dim = cur.len().saturating_sub(r_out + r_in);
            if dim > 0 {
                out.push(((*v, Trigrade::new(h, *t1, *t2)), dim));
            }
        }
        out
    });
    per.into_iter().flatten().collect()
}

/// Data needed to tensor modules over two algebras into a module over a
/// product algebra whose generators are `g ⊗ e(v2)` and `e(v1) ⊗ g`.
pub struct ProductLift<'a> {
    pub product: &'a Algebra,
    pub vertex: &'a dyn Fn(u32, u32) -> u32,
    pub left: &'a dyn Fn(u32, u32) -> u32,
    pub right: &'a dyn Fn(u32, u32) -> u32,
}

impl ProductLift<'_> {
    fn lift_left(&self, alg1: &Algebra, a: u32, v2: u32) -> Option<u32> {
        let e = &alg1.basis[a as usize];
        if e.word.is_empty() {
            return Some((self.vertex)(e.src, v2));
        }
        let w: Vec<u32> = e.word.iter().map(|&g| (self.left)(g, v2)).collect();
        self.product.word_value(&w)
    }

    fn lift_right(&self, alg2: &Algebra, v1: u32, b: u32) -> Option<u32> {
        let e = &alg2.basis[b as usize];
        if e.word.is_empty() {
            return Some((self.vertex)(v1, e.src));
        }
        let w: Vec<u32> = e.word.iter().map(|&g| (self.right)(v1, g)).collect();
        self.product.word_value(&w)
    }
}

/// Generator-wise tensor product with shifts from `shift(s1, s2)`.
pub fn tensor_modules(
    alg1: &Algebra,
    m1: &DGModule,
    alg2: &Algebra,
    m2: &DGModule,
    lift: &ProductLift,
    shift: impl Fn(&ProjSummand, &ProjSummand) -> Trigrade,
) -> DGModule {
    let mut m = DGModule::new();
    let id = |s1: u32, s2: u32| s1 * m2.len() as u32 + s2;
    for (s1, p1) in m1.summands.iter().enumerate() {
        for (s2, p2) in m2.summands.iter().enumerate() {
            m.add(format!("{}⊗{}", m1.names[s1], m2.names[s2]), (lift.vertex)(p1.vertex, p2.vertex), shift(p1, p2));
        }
    }
    for s1 in 0..m1.len() as u32 {
        for s2 in 0..m2.len() as u32 {
            let mut terms = Vec::new();
            let (v1, v2) = (m1.summands[s1 as usize].vertex, m2.summands[s2 as usize].vertex);
            for &(a, t1) in &m1.d[s1 as usize] {
                terms.extend(lift.lift_left(alg1, a, v2).map(|c| (c, id(t1, s2))));
            }
            for &(b, t2) in &m2.d[s2 as usize] {
                terms.extend(lift.lift_right(alg2, v1, b).map(|c| (c, id(s1, t2))));
            }
            m.set_d(id(s1, s2), mod_from(terms));
        }
    }
    m
}

/// χ: modules over A to a module over A⊗A, with
/// `P(Γ){t}[h] ⊠ P(Γ'){t'}[h'] = P(Γ,Γ'){t+t'}[h+h'+2t·p(Γ')]`.
pub fn chi(a: &Algebra, m1: &DGModule, m2: &DGModule, aoa: &Algebra, tp: &TensorPres) -> DGModule {
    let vertex = |v1: u32, v2: u32| tp.vertex(v1, v2);
    let left = |g: u32, v2: u32| tp.left[&(g, v2)];
    let right = |v1: u32, g: u32| tp.right[&(v1, g)];
    let lift = ProductLift { product: aoa, vertex: &vertex, left: &left, right: &right };
    tensor_modules(a, m1, a, m2, &lift, |p1, p2| {
        let tw = 2 * p1.shift.t1 * parity(UT_ORDER[p2.vertex as usize]);
        Trigrade::bi(p1.shift.h + p2.shift.h + tw, p1.shift.t1 + p2.shift.t1)
    })
}

/// χ_n: a module over A and one over H(R_n) to a module over A⊗H(R_n),
/// with t-shift `n·t + t'` and h-shift `h + h' + 2k·t` for `x` in the k-block.
pub fn chi_n(a: &Algebra, m1: &DGModule, h: &RookAlgebra, m2: &DGModule, aoh: &ARn) -> DGModule {
    let n = aoh.n;
    let vertex = |v1: u32, v2: u32| v1 * (1 << n) + v2;
    let left = |g: u32, v2: u32| aoh.left[&(g, v2)];
    let right = |v1: u32, g: u32| aoh.right[&(v1, g)];
    let lift = ProductLift { product: &aoh.alg, vertex: &vertex, left: &left, right: &right };
    tensor_modules(a, m1, &h.alg, m2, &lift, |p1, p2| {
        let k = p2.vertex.count_ones() as i32;
        Trigrade::bi(p1.shift.h + p2.shift.h + 2 * k * p1.shift.t1, n as i32 * p1.shift.t1 + p2.shift.t1)
    })
}
