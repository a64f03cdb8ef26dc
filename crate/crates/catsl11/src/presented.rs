//! Quiver-presented DG algebras over GF(2).
//!
//! Paths compose left to right: the word `[a, b]` is "a then b" and needs
//! `tgt(a) == src(b)`. Relations are binomial (`u = v`) or monomial
//! (`u = 0`) and homogeneous, so a word's class under the binomial moves is
//! finite and the class is zero exactly when one of its words contains a
//! monomial relation. [`Normalizer`] picks the lexicographically smallest
//! word of a class.
//!
//! [`Algebra::build`] avoids exploring classes: relations have equal-length
//! sides, so the length-(L+1) part is spanned by pairs (basis element of
//! length L, generator) modulo relations applied at the right end of a word.
//! Each level is one union-find pass.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::foundation::Trigrade;
use crate::gf2::{self, BitVec, Echelon};
use crate::par;

pub type Word = Vec<u32>;
/// GF(2) combination of basis elements: sorted, without repeats.
pub type Elt = Vec<u32>;

#[derive(Clone, Debug, Serialize)]
pub struct GenSpec {
    pub name: String,
    pub src: u32,
    pub tgt: u32,
    pub grade: Trigrade,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Zero(Word),
    Equal(Word, Word),
}

impl Relation {
    pub fn lhs(&self) -> &Word {
        match self {
            Relation::Zero(w) | Relation::Equal(w, _) => w,
        }
    }

    pub fn rhs(&self) -> Option<&Word> {
        match self {
            Relation::Zero(_) => None,
            Relation::Equal(_, w) => Some(w),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Presentation {
    pub name: String,
    pub vertices: Vec<String>,
    pub gens: Vec<GenSpec>,
    pub relations: Vec<Relation>,
    /// `differential[g]` is a GF(2) sum of words; empty means `d g = 0`.
    pub differential: Vec<Vec<Word>>,
    pub trigraded: bool,
}

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("generator {0} has endpoints out of range")]
    Endpoint(String),
    #[error("word {0} does not compose")]
    Chain(String),
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("relation {0} has mismatched endpoints")]
    RelationEndpoints(String),
    #[error("differential of {0} has the wrong endpoints or degree")]
    Differential(String),
    #[error("basis enumeration exceeded {0} elements")]
    TooLarge(usize),
    #[error("basis has words longer than {0} letters; the algebra looks infinite")]
    TooLong(usize),
}

impl Presentation {
    pub fn new(name: impl Into<String>, vertices: Vec<String>, trigraded: bool) -> Self {
        Presentation { name: name.into(), vertices, trigraded, ..Default::default() }
    }

    pub fn add_gen(&mut self, name: impl Into<String>, src: u32, tgt: u32, grade: Trigrade) -> u32 {
        self.gens.push(GenSpec { name: name.into(), src, tgt, grade });
        self.differential.push(Vec::new());
        (self.gens.len() - 1) as u32
    }

    pub fn word_src(&self, w: &[u32]) -> u32 {
        self.gens[w[0] as usize].src
    }

    pub fn word_tgt(&self, w: &[u32]) -> u32 {
        self.gens[*w.last().expect("nonempty word") as usize].tgt
    }

    pub fn word_grade(&self, w: &[u32]) -> Trigrade {
        w.iter().fold(Trigrade::ZERO, |acc, &g| acc + self.gens[g as usize].grade)
    }

    pub fn chains(&self, w: &[u32]) -> bool {
        w.windows(2).all(|p| self.gens[p[0] as usize].tgt == self.gens[p[1] as usize].src)
    }

    pub fn render_word(&self, w: &[u32]) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        w.iter().map(|&g| self.gens[g as usize].name.as_str()).collect::<Vec<_>>().join("·")
    }

    pub fn validate(&self) -> Result<(), PresentationError> {
        let nv = self.vertices.len() as u32;
        for g in &self.gens {
            if g.src >= nv || g.tgt >= nv {
                return Err(PresentationError::Endpoint(g.name.clone()));
            }
        }
        for r in &self.relations {
            let l = r.lhs();
            if l.is_empty() || !self.chains(l) {
                return Err(PresentationError::Chain(self.render_word(l)));
            }
            if let Some(rw) = r.rhs() {
                if rw.is_empty() || !self.chains(rw) {
                    return Err(PresentationError::Chain(self.render_word(rw)));
                }
                if self.word_src(l) != self.word_src(rw) || self.word_tgt(l) != self.word_tgt(rw) {
                    return Err(PresentationError::RelationEndpoints(self.render_word(l)));
                }
                if self.word_grade(l) != self.word_grade(rw) || l.len() != rw.len() {
                    return Err(PresentationError::Inhomogeneous(self.render_word(l)));
                }
            }
        }
        for (g, terms) in self.differential.iter().enumerate() {
            let spec = &self.gens[g];
            for w in terms {
                let ok = !w.is_empty()
                    && self.chains(w)
                    && self.word_src(w) == spec.src
                    && self.word_tgt(w) == spec.tgt
                    && self.word_grade(w) == spec.grade + Trigrade::D;
                if !ok {
                    return Err(PresentationError::Differential(spec.name.clone()));
                }
            }
        }
        Ok(())
    }

    /// The full subquiver on `keep`. Relations and differential terms that
    /// leave it are dropped, so this is the corner algebra only when no path
    /// between kept vertices passes through a dropped one.
    pub fn restrict(&self, keep: &[u32]) -> (Presentation, Vec<Option<u32>>) {
        let vmap: HashMap<u32, u32> = keep.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let verts = keep.iter().map(|&v| self.vertices[v as usize].clone()).collect();
        let mut p = Presentation::new(format!("{} (corner)", self.name), verts, self.trigraded);
        let mut gmap = vec![None; self.gens.len()];
        for (g, s) in self.gens.iter().enumerate() {
            if let (Some(&a), Some(&b)) = (vmap.get(&s.src), vmap.get(&s.tgt)) {
                gmap[g] = Some(p.add_gen(s.name.clone(), a, b, s.grade));
            }
        }
        let lift = |w: &Word| -> Option<Word> { w.iter().map(|&g| gmap[g as usize]).collect() };
        for r in &self.relations {
            match r {
                Relation::Zero(w) => {
                    if let Some(l) = lift(w) {
                        p.relations.push(Relation::Zero(l));
                    }
                }
                Relation::Equal(a, b) => {
                    if let (Some(l), Some(r)) = (lift(a), lift(b)) {
                        p.relations.push(Relation::Equal(l, r));
                    }
                }
            }
        }
        for (g, terms) in self.differential.iter().enumerate() {
            if let Some(id) = gmap[g] {
                p.differential[id as usize] = terms.iter().filter_map(&lift).collect();
            }
        }
        (p, gmap)
    }

    /// Text dump of generators and relations in a stable order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra {}", self.name);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "vertex {i} {v}");
        }
        for g in &self.gens {
            let _ = writeln!(
                s,
                "gen {} : {} -> {} {}",
                g.name, self.vertices[g.src as usize], self.vertices[g.tgt as usize], g.grade
            );
        }
        for r in &self.relations {
            match r {
                Relation::Zero(w) => {
                    let _ = writeln!(s, "rel {} = 0", self.render_word(w));
                }
                Relation::Equal(a, b) => {
                    let _ = writeln!(s, "rel {} = {}", self.render_word(a), self.render_word(b));
                }
            }
        }
        for (g, terms) in self.differential.iter().enumerate() {
            if !terms.is_empty() {
                let t: Vec<String> = terms.iter().map(|w| self.render_word(w)).collect();
                let _ = writeln!(s, "d {} = {}", self.gens[g].name, t.join(" + "));
            }
        }
        s
    }
}

/// Canonical forms of words modulo the relations.
#[derive(Clone, Debug)]
pub struct Normalizer {
    moves: HashMap<Word, Vec<Word>>,
    move_lens: Vec<usize>,
    zeros: HashSet<Word>,
    zero_lens: Vec<usize>,
    memo: HashMap<Word, Option<Word>>,
    memo_class_limit: usize,
}

impl Normalizer {
    pub fn new(p: &Presentation) -> Self {
        let mut moves: HashMap<Word, Vec<Word>> = HashMap::new();
        let mut zeros = HashSet::new();
        for r in &p.relations {
            match r {
                Relation::Zero(w) => {
                    zeros.insert(w.clone());
                }
                Relation::Equal(a, b) => {
                    moves.entry(a.clone()).or_default().push(b.clone());
                    moves.entry(b.clone()).or_default().push(a.clone());
                }
            }
        }
        let mut move_lens: Vec<usize> = moves.keys().map(Vec::len).collect();
        move_lens.sort_unstable();
        move_lens.dedup();
        let mut zero_lens: Vec<usize> = zeros.iter().map(Vec::len).collect();
        zero_lens.sort_unstable();
        zero_lens.dedup();
        Normalizer { moves, move_lens, zeros, zero_lens, memo: HashMap::new(), memo_class_limit: usize::MAX }
    }

    /// Classes larger than `limit` only memoize the queried word.
    pub fn with_memo_class_limit(mut self, limit: usize) -> Self {
        self.memo_class_limit = limit;
        self
    }

    fn has_zero_factor(&self, w: &[u32]) -> bool {
        self.zero_lens.iter().any(|&l| w.windows(l).any(|sub| self.zeros.contains(sub)))
    }

    /// Words reachable from `w` by one binomial move.
    pub fn neighbours(&self, w: &[u32]) -> Vec<Word> {
        let mut out = Vec::new();
        for &l in &self.move_lens {
            if l > w.len() {
                continue;
            }
            for k in 0..=(w.len() - l) {
                if let Some(reps) = self.moves.get(&w[k..k + l]) {
                    for r in reps {
                        let mut nw = w[..k].to_vec();
                        nw.extend_from_slice(r);
                        nw.extend_from_slice(&w[k + l..]);
                        out.push(nw);
                    }
                }
            }
        }
        out
    }

    /// Canonical word of the class of `w`, or `None` if the class is zero.
    pub fn normalize(&mut self, w: &[u32]) -> Option<Word> {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        let mut result: Option<Option<Word>> = None;
        while let Some(cur) = queue.pop_front() {
            if let Some(r) = self.memo.get(&cur) {
                result = Some(r.clone());
                break;
            }
            if self.has_zero_factor(&cur) {
                result = Some(None);
                break;
            }
            for nw in self.neighbours(&cur) {
                if seen.insert(nw.clone()) {
                    queue.push_back(nw);
                }
            }
        }
        let result = result.unwrap_or_else(|| seen.iter().min().cloned());
        if seen.len() <= self.memo_class_limit {
            for v in seen {
                self.memo.insert(v, result.clone());
            }
        } else {
            self.memo.insert(w.to_vec(), result.clone());
        }
        result
    }
}

/// Union-find with a "zero" mark per class.
struct UnionFind {
    parent: Vec<usize>,
    dead: Vec<bool>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), dead: vec![false; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
            self.dead[lo] |= self.dead[hi];
        }
    }

    fn kill(&mut self, a: usize) {
        let r = self.find(a);
        self.dead[r] = true;
    }
}

#[derive(Clone, Debug)]
pub struct BasisElt {
    pub word: Word,
    pub src: u32,
    pub tgt: u32,
    pub grade: Trigrade,
    /// `(parent, g)` with `self = parent · g`; `None` for idempotents.
    pub parent: Option<(u32, u32)>,
}

/// A presented algebra together with its enumerated basis and tables.
#[derive(Debug)]
pub struct Algebra {
    pub pres: Presentation,
    pub basis: Vec<BasisElt>,
    /// `rmul[b]`: sorted `(g, b·g)` for nonzero products.
    rmul: Vec<Vec<(u32, u32)>>,
    /// `d[b]`
    d: Vec<Elt>,
    gens_from: Vec<Vec<u32>>,
}

/// Longest basis word before enumeration gives up.
pub const MAX_WORD_LEN: usize = 512;
pub const DEFAULT_BASIS_LIMIT: usize = 400_000;

/// XOR-normalize a list of basis indices.
pub fn elt_from(mut v: Vec<u32>) -> Elt {
    v.sort_unstable();
    let mut out = Vec::with_capacity(v.len());
    for x in v {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn elt_add(a: &Elt, b: &Elt) -> Elt {
    let mut v = a.clone();
    v.extend_from_slice(b);
    elt_from(v)
}

impl Algebra {
    pub fn build(pres: Presentation) -> Result<Self, PresentationError> {
        Self::build_with_limit(pres, DEFAULT_BASIS_LIMIT)
    }

    pub fn build_with_limit(pres: Presentation, limit: usize) -> Result<Self, PresentationError> {
        pres.validate()?;
        let nv = pres.vertices.len();
        let mut gens_from = vec![Vec::new(); nv];
        for (g, spec) in pres.gens.iter().enumerate() {
            gens_from[spec.src as usize].push(g as u32);
        }
        // relations grouped by (source vertex, length)
        let max_len = pres.relations.iter().map(|r| r.lhs().len()).max().unwrap_or(0);
        let mut rels: Vec<Vec<Vec<&Relation>>> = vec![vec![Vec::new(); max_len + 1]; nv];
        for r in &pres.relations {
            rels[pres.word_src(r.lhs()) as usize][r.lhs().len()].push(r);
        }
        let mut basis: Vec<BasisElt> = (0..nv as u32)
            .map(|v| BasisElt { word: Vec::new(), src: v, tgt: v, grade: Trigrade::ZERO, parent: None })
            .collect();
        let mut rmul: Vec<Vec<(u32, u32)>> = vec![Vec::new(); nv];
        // levels[l] = range of basis ids of word length l
        let mut levels: Vec<std::ops::Range<u32>> = vec![0..nv as u32];
        loop {
            let cur = levels.last().unwrap().clone();
            // candidate nodes (b, g) for b in the top level
            let mut offset = Vec::with_capacity(cur.len() + 1);
            let mut total = 0usize;
            for b in cur.clone() {
                offset.push(total);
                total += gens_from[basis[b as usize].tgt as usize].len();
            }
            offset.push(total);
            let node = |b: u32, g: u32, basis: &[BasisElt]| -> usize {
                let row = &gens_from[basis[b as usize].tgt as usize];
                offset[(b - cur.start) as usize] + row.binary_search(&g).expect("composable")
            };
            let mut uf = UnionFind::new(total);
            let top = levels.len();
            for len in top.saturating_sub(max_len)..top.saturating_sub(1) {
                let l = top - len;
                for c in levels[len].clone() {
                    for r in &rels[basis[c as usize].tgt as usize][l] {
                        let lhs = r.lhs();
                        let mul_prefix = |w: &[u32]| -> Option<u32> {
                            let mut x = c;
                            for &g in &w[..w.len() - 1] {
                                let row = &rmul[x as usize];
                                x = row.binary_search_by_key(&g, |&(h, _)| h).ok().map(|k| row[k].1)?;
                            }
                            Some(x)
                        };
                        let a = mul_prefix(lhs).map(|b| node(b, *lhs.last().unwrap(), &basis));
                        let bnode = r.rhs().and_then(|w| mul_prefix(w).map(|b| node(b, *w.last().unwrap(), &basis)));
                        match (a, bnode) {
                            (Some(x), Some(y)) => uf.union(x, y),
                            (Some(x), None) => uf.kill(x),
                            (None, Some(y)) => uf.kill(y),
                            (None, None) => {}
                        }
                    }
                }
            }
            let start = basis.len() as u32;
            let mut class_id: HashMap<usize, u32> = HashMap::new();
            for b in cur.clone() {
                let tgt = basis[b as usize].tgt;
                let mut row = Vec::new();
                for &g in &gens_from[tgt as usize] {
                    let root = uf.find(node(b, g, &basis));
                    if uf.dead[root] {
                        continue;
                    }
                    let id = match class_id.get(&root) {
                        Some(&i) => i,
                        None => {
                            if basis.len() >= limit {
                                return Err(PresentationError::TooLarge(limit));
                            }
                            let i = basis.len() as u32;
                            let parent = &basis[b as usize];
                            let spec = &pres.gens[g as usize];
                            let mut word = parent.word.clone();
                            word.push(g);
                            basis.push(BasisElt {
                                word,
                                src: parent.src,
                                tgt: spec.tgt,
                                grade: parent.grade + spec.grade,
                                parent: Some((b, g)),
                            });
                            rmul.push(Vec::new());
                            class_id.insert(root, i);
                            i
                        }
                    };
                    row.push((g, id));
                }
                rmul[b as usize] = row;
            }
            let end = basis.len() as u32;
            if start == end {
                break;
            }
            // an infinite algebra may grow by a few elements per level
            if levels.len() > MAX_WORD_LEN {
                return Err(PresentationError::TooLong(MAX_WORD_LEN));
            }
            levels.push(start..end);
        }
        let mut alg = Algebra { pres, basis, rmul, d: Vec::new(), gens_from };
        alg.compute_differential();
        Ok(alg)
    }

    fn compute_differential(&mut self) {
        let mut d: Vec<Elt> = vec![Vec::new(); self.basis.len()];
        let dg: Vec<Vec<Word>> = self.pres.differential.clone();
        // basis elements are created after their parents
        for b in 0..self.basis.len() {
            if let Some((p, g)) = self.basis[b].parent {
                let mut terms = Vec::new();
                for &c in &d[p as usize] {
                    if let Some(x) = self.rmul_gen(c, g) {
                        terms.push(x);
                    }
                }
                for w in &dg[g as usize] {
                    if let Some(x) = self.mul_word(p, w) {
                        terms.push(x);
                    }
                }
                d[b] = elt_from(terms);
            }
        }
        self.d = d;
    }

    pub fn name(&self) -> &str {
        &self.pres.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.pres.vertices.len()
    }

    pub fn idempotent(&self, v: u32) -> u32 {
        v
    }

    /// Basis element equal to the word `w`, or `None` if it vanishes.
    pub fn index_of(&self, w: &[u32]) -> Option<u32> {
        if w.is_empty() {
            return None;
        }
        self.word_value(w)
    }

    pub fn gens_from(&self, v: u32) -> &[u32] {
        &self.gens_from[v as usize]
    }

    /// `b · g`, or `None` if zero. Requires `tgt(b) == src(g)`.
    pub fn rmul_gen(&self, b: u32, g: u32) -> Option<u32> {
        debug_assert_eq!(self.basis[b as usize].tgt, self.pres.gens[g as usize].src);
        let row = &self.rmul[b as usize];
        row.binary_search_by_key(&g, |&(h, _)| h).ok().map(|k| row[k].1)
    }

    /// `b · w` for a word `w`.
    pub fn mul_word(&self, b: u32, w: &[u32]) -> Option<u32> {
        let mut cur = b;
        for &g in w {
            cur = self.rmul_gen(cur, g)?;
        }
        Some(cur)
    }

    /// Value of a nonempty word, or `None` if it vanishes.
    pub fn word_value(&self, w: &[u32]) -> Option<u32> {
        self.mul_word(self.pres.word_src(w), w)
    }

    /// Product of basis elements; `None` if zero or not composable.
    pub fn mul_basis(&self, a: u32, b: u32) -> Option<u32> {
        let (ea, eb) = (&self.basis[a as usize], &self.basis[b as usize]);
        if ea.tgt != eb.src {
            return None;
        }
        self.mul_word(a, &eb.word)
    }

    pub fn mul(&self, x: &Elt, y: &Elt) -> Elt {
        let mut v = Vec::new();
        for &a in x {
            for &b in y {
                if let Some(c) = self.mul_basis(a, b) {
                    v.push(c);
                }
            }
        }
        elt_from(v)
    }

    /// Sum of words as an element.
    pub fn words_value(&self, ws: &[Word]) -> Elt {
        elt_from(ws.iter().filter_map(|w| self.word_value(w)).collect())
    }

    pub fn d_basis(&self, b: u32) -> &Elt {
        &self.d[b as usize]
    }

    pub fn d(&self, x: &Elt) -> Elt {
        elt_from(x.iter().flat_map(|&b| self.d[b as usize].iter().copied()).collect())
    }

    pub fn has_zero_differential(&self) -> bool {
        self.pres.differential.iter().all(Vec::is_empty)
    }

    /// `d` of a word computed by the Leibniz rule on the word itself.
    pub fn d_word(&self, w: &[u32]) -> Elt {
        let mut terms = Vec::new();
        for i in 0..w.len() {
            let prefix = &w[..i];
            let start = if prefix.is_empty() {
                Some(self.pres.gens[w[i] as usize].src)
            } else {
                self.word_value(prefix)
            };
            let Some(p) = start else { continue };
            for t in &self.pres.differential[w[i] as usize] {
                let mut rest = t.clone();
                rest.extend_from_slice(&w[i + 1..]);
                if let Some(x) = self.mul_word(p, &rest) {
                    terms.push(x);
                }
            }
        }
        elt_from(terms)
    }

    pub fn render_basis(&self, b: u32) -> String {
        let e = &self.basis[b as usize];
        if e.word.is_empty() {
            format!("e({})", self.pres.vertices[e.src as usize])
        } else {
            self.pres.render_word(&e.word)
        }
    }

    pub fn render(&self, x: &Elt) -> String {
        if x.is_empty() {
            return "0".to_string();
        }
        x.iter().map(|&b| self.render_basis(b)).collect::<Vec<_>>().join(" + ")
    }

    /// Basis elements grouped by `(src, tgt)`.
    pub fn blocks(&self) -> BTreeMap<(u32, u32), Vec<u32>> {
        let mut m: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
        for (i, e) in self.basis.iter().enumerate() {
            m.entry((e.src, e.tgt)).or_default().push(i as u32);
        }
        m
    }

    pub fn hom_dim(&self, src: u32, tgt: u32) -> usize {
        self.basis.iter().filter(|e| e.src == src && e.tgt == tgt).count()
    }

    /// Dimension table keyed by `(src, tgt, grade)`.
    pub fn graded_dims(&self) -> BTreeMap<(u32, u32, Trigrade), usize> {
        let mut m = BTreeMap::new();
        for e in &self.basis {
            *m.entry((e.src, e.tgt, e.grade)).or_insert(0) += 1;
        }
        m
    }

    pub fn vertex_id(&self, name: &str) -> Option<u32> {
        self.pres.vertices.iter().position(|v| v == name).map(|i| i as u32)
    }

    pub fn gen_id(&self, name: &str) -> Option<u32> {
        self.pres.gens.iter().position(|g| g.name == name).map(|i| i as u32)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn new(name: &str, checked: usize, witness: Option<String>) -> Self {
        CheckOutcome { name: name.to_string(), checked, pass: witness.is_none(), witness }
    }
}

/// Composable triples above this count skip the exhaustive associativity
/// pass; the right-action relation check already implies associativity.
pub const TRIPLE_BUDGET: u64 = 100_000_000;
/// Same for the all-pairs Leibniz pass.
pub const PAIR_BUDGET: u64 = 20_000_000;

/// Structural checks of a built algebra.
///
/// Every basis element is `e · word`, so a right action that respects each
/// relation makes the tables associative; the triple pass re-checks this
/// directly when it is affordable. Likewise Leibniz on `(b, g)` pairs plus
/// compatibility with relations gives Leibniz on all pairs.
pub fn verify_algebra(a: &Algebra) -> Vec<CheckOutcome> {
    let n = a.dim();
    let nv = a.num_vertices();
    let mut out = Vec::new();

    let mut rels_from: Vec<Vec<&Relation>> = vec![Vec::new(); nv];
    for r in &a.pres.relations {
        rels_from[a.pres.word_src(r.lhs()) as usize].push(r);
    }
    let results = par::map_range(n, |c| {
        let rs = &rels_from[a.basis[c].tgt as usize];
        for r in rs {
            let l = a.mul_word(c as u32, r.lhs());
            let rv = r.rhs().and_then(|w| a.mul_word(c as u32, w));
            if l != rv {
                return (rs.len(), Some(format!("{}·({}) breaks a relation", a.render_basis(c as u32), a.pres.render_word(r.lhs()))));
            }
        }
        (rs.len(), None)
    });
    let checked = results.iter().map(|r| r.0).sum();
    let witness = results.into_iter().find_map(|r| r.1);
    out.push(CheckOutcome::new("right action respects relations", checked, witness));

    let mut checked = 0;
    let mut witness = None;
    for (b, row) in a.rmul.iter().enumerate() {
        for &(g, c) in row {
            checked += 1;
            if a.basis[c as usize].grade != a.basis[b].grade + a.pres.gens[g as usize].grade {
                witness.get_or_insert_with(|| format!("grade of {}·{}", a.render_basis(b as u32), a.pres.gens[g as usize].name));
            }
        }
    }
    out.push(CheckOutcome::new("grade additivity", checked, witness));

    let mut by_src = vec![Vec::new(); nv];
    let mut into = vec![0u64; nv];
    for (i, e) in a.basis.iter().enumerate() {
        by_src[e.src as usize].push(i as u32);
        into[e.tgt as usize] += 1;
    }
    let triples: u64 = a.basis.iter().map(|e| into[e.src as usize] * by_src[e.tgt as usize].len() as u64).sum();
    let pairs: u64 = a.basis.iter().map(|e| by_src[e.tgt as usize].len() as u64).sum();
    if triples <= TRIPLE_BUDGET {
        let results = par::map_range(n, |x| {
            let mut count = 0usize;
            for &y in &by_src[a.basis[x].tgt as usize] {
                let xy = a.mul_basis(x as u32, y);
                for &z in &by_src[a.basis[y as usize].tgt as usize] {
                    count += 1;
                    let l = xy.and_then(|p| a.mul_basis(p, z));
                    let r = a.mul_basis(y, z).and_then(|q| a.mul_basis(x as u32, q));
                    if l != r {
                        let (sx, sy, sz) = (a.render_basis(x as u32), a.render_basis(y), a.render_basis(z));
                        return (count, Some(format!("({sx}·{sy})·{sz} != {sx}·({sy}·{sz})")));
                    }
                }
            }
            (count, None)
        });
        let checked = results.iter().map(|r| r.0).sum();
        let witness = results.into_iter().find_map(|r| r.1);
        out.push(CheckOutcome::new("associativity on all triples", checked, witness));
    }

    let mut witness = None;
    for r in &a.pres.relations {
        let l = a.d_word(r.lhs());
        let rv = r.rhs().map(|w| a.d_word(w)).unwrap_or_default();
        if l != rv {
            witness = Some(format!(
                "d({}) = {} but d of other side = {}",
                a.pres.render_word(r.lhs()),
                a.render(&l),
                a.render(&rv)
            ));
            break;
        }
    }
    out.push(CheckOutcome::new("differential respects relations", a.pres.relations.len(), witness));

    let witness = par::find_first(n, |b| {
        let db = a.d_basis(b as u32);
        for &c in db {
            if a.basis[c as usize].grade != a.basis[b].grade + Trigrade::D {
                return Some(format!("d({}) has a term of wrong degree", a.render_basis(b as u32)));
            }
        }
        let dd = a.d(db);
        (!dd.is_empty()).then(|| format!("d²({}) = {}", a.render_basis(b as u32), a.render(&dd)))
    });
    out.push(CheckOutcome::new("d² = 0 and deg d = (1,0)", n, witness));

    let results = par::map_range(n, |b| {
        let gens = a.gens_from(a.basis[b].tgt);
        for &g in gens {
            let lhs = a.rmul_gen(b as u32, g).map(|p| a.d_basis(p).clone()).unwrap_or_default();
            let mut terms: Vec<u32> = a.d_basis(b as u32).iter().filter_map(|&c| a.rmul_gen(c, g)).collect();
            for w in &a.pres.differential[g as usize] {
                terms.extend(a.mul_word(b as u32, w));
            }
            if lhs != elt_from(terms) {
                return (gens.len(), Some(format!("Leibniz fails on {}·{}", a.render_basis(b as u32), a.pres.gens[g as usize].name)));
            }
        }
        (gens.len(), None)
    });
    let checked = results.iter().map(|r| r.0).sum();
    let witness = results.into_iter().find_map(|r| r.1);
    out.push(CheckOutcome::new("Leibniz rule on generator products", checked, witness));

    if pairs <= PAIR_BUDGET {
        let results = par::map_range(n, |x| {
            let mut count = 0;
            for &y in &by_src[a.basis[x].tgt as usize] {
                count += 1;
                let lhs = a.mul_basis(x as u32, y).map(|p| a.d_basis(p).clone()).unwrap_or_default();
                let rhs = elt_add(&a.mul(a.d_basis(x as u32), &vec![y]), &a.mul(&vec![x as u32], a.d_basis(y)));
                if lhs != rhs {
                    return (count, Some(format!("Leibniz fails on {}·{}", a.render_basis(x as u32), a.render_basis(y))));
                }
            }
            (count, None)
        });
        let checked = results.iter().map(|r| r.0).sum();
        let witness = results.into_iter().find_map(|r| r.1);
        out.push(CheckOutcome::new("Leibniz rule on all pairs", checked, witness));
    }
    out
}

/// One block of the cohomology computation.
struct BlockComplex {
    /// basis indices by h
    by_h: BTreeMap<i32, Vec<u32>>,
}

fn block_complexes(a: &Algebra) -> BTreeMap<(u32, u32, i32, i32), BlockComplex> {
    let mut m: BTreeMap<(u32, u32, i32, i32), BlockComplex> = BTreeMap::new();
    for (i, e) in a.basis.iter().enumerate() {
        m.entry((e.src, e.tgt, e.grade.t1, e.grade.t2))
            .or_insert_with(|| BlockComplex { by_h: BTreeMap::new() })
            .by_h
            .entry(e.grade.h)
            .or_default()
            .push(i as u32);
    }
    m
}

fn position_map(v: &[u32]) -> HashMap<u32, usize> {
    v.iter().enumerate().map(|(k, &b)| (b, k)).collect()
}

fn images_in(a: &Algebra, src: &[u32], tgt: &[u32]) -> Vec<BitVec> {
    let pos = position_map(tgt);
    src.iter()
        .map(|&b| BitVec::from_indices(tgt.len(), a.d_basis(b).iter().map(|c| pos[c])))
        .collect()
}

/// Cohomology dimensions keyed by `(src, tgt, grade)`; zero entries omitted.
pub fn cohomology(a: &Algebra) -> BTreeMap<(u32, u32, Trigrade), usize> {
    let blocks: Vec<_> = block_complexes(a).into_iter().collect();
    let per = par::map(&blocks, |((s, t, t1, t2), bc)| {
        let mut out = Vec::new();
        for (&h, cur) in &bc.by_h {
            let empty = Vec::new();
            let next = bc.by_h.get(&(h + 1)).unwrap_or(&empty);
            let prev = bc.by_h.get(&(h - 1)).unwrap_or(&empty);
            let rank_out = gf2::rank(&images_in(a, cur, next), next.len());
            let rank_in = gf2::rank(&images_in(a, prev, cur), cur.len());
            let dim = cur.len().saturating_sub(rank_out + rank_in);
            if dim > 0 {
                out.push(((*s, *t, Trigrade::new(h, *t1, *t2)), dim));
            }
        }
        out
    });
    per.into_iter().flatten().collect()
}

/// Cocycle representatives of a basis of cohomology, per block and degree.
pub fn cohomology_representatives(a: &Algebra) -> BTreeMap<(u32, u32, Trigrade), Vec<Elt>> {
    let mut out = BTreeMap::new();
    for ((s, t, t1, t2), bc) in block_complexes(a) {
        for (&h, cur) in &bc.by_h {
            let empty = Vec::new();
            let next = bc.by_h.get(&(h + 1)).unwrap_or(&empty);
            let prev = bc.by_h.get(&(h - 1)).unwrap_or(&empty);
            let z = gf2::kernel(&images_in(a, cur, next), next.len());
            let mut ech = Echelon::new(cur.len());
            for b in images_in(a, prev, cur) {
                ech.insert(b);
            }
            let mut reps = Vec::new();
            for v in z {
                if ech.insert(v.clone()) {
                    reps.push(v.ones().map(|k| cur[k]).collect());
                }
            }
            if !reps.is_empty() {
                out.insert((s, t, Trigrade::new(h, t1, t2)), reps);
            }
        }
    }
    out
}

/// Whether `x` is a coboundary.
pub fn is_coboundary(a: &Algebra, x: &Elt) -> bool {
    if x.is_empty() {
        return true;
    }
    let e0 = &a.basis[x[0] as usize];
    let prev: Vec<u32> = a
        .basis
        .iter()
        .enumerate()
        .filter(|(_, e)| e.src == e0.src && e.tgt == e0.tgt && e.grade == e0.grade + (-Trigrade::D))
        .map(|(i, _)| i as u32)
        .collect();
    let cur: Vec<u32> = a
        .basis
        .iter()
        .enumerate()
        .filter(|(_, e)| e.src == e0.src && e.tgt == e0.tgt && e.grade == e0.grade)
        .map(|(i, _)| i as u32)
        .collect();
    let pos = position_map(&cur);
    let mut ech = Echelon::new(cur.len());
    for b in images_in(a, &prev, &cur) {
        ech.insert(b);
    }
    let Some(v) = x.iter().map(|c| pos.get(c).copied()).collect::<Option<Vec<_>>>() else {
        return false;
    };
    ech.contains(&BitVec::from_indices(cur.len(), v))
}

/// An algebra map given on vertices and generators.
pub struct AlgebraMap<'a> {
    pub src: &'a Algebra,
    pub dst: &'a Algebra,
    pub vertex_map: Vec<u32>,
    /// image of each source generator as a sum of destination words
    pub gen_map: Vec<Vec<Word>>,
}

impl AlgebraMap<'_> {
    fn gen_image(&self, g: u32) -> Elt {
        self.dst.words_value(&self.gen_map[g as usize])
    }

    /// Image of a word of source generators.
    pub fn word_image(&self, w: &[u32]) -> Elt {
        let mut cur: Elt = vec![self.vertex_map[self.src.pres.word_src(w) as usize]];
        for &g in w {
            cur = self.dst.mul(&cur, &self.gen_image(g));
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    pub fn basis_images(&self) -> Vec<Elt> {
        let mut out: Vec<Elt> = Vec::with_capacity(self.src.dim());
        for e in &self.src.basis {
            let img = match e.parent {
                None => vec![self.vertex_map[e.src as usize]],
                Some((p, g)) => self.dst.mul(&out[p as usize], &self.gen_image(g)),
            };
            out.push(img);
        }
        out
    }
}

/// Checks that `f` is a chain algebra map inducing an isomorphism on
/// cohomology, with independent eliminations on both sides.
pub fn check_quasi_iso(f: &AlgebraMap) -> Vec<CheckOutcome> {
    let (src, dst) = (f.src, f.dst);
    let mut out = Vec::new();

    let mut witness = None;
    for (g, spec) in src.pres.gens.iter().enumerate() {
        for w in &f.gen_map[g] {
            let ok = dst.pres.chains(w)
                && dst.pres.word_src(w) == f.vertex_map[spec.src as usize]
                && dst.pres.word_tgt(w) == f.vertex_map[spec.tgt as usize]
                && dst.pres.word_grade(w) == spec.grade;
            if !ok {
                witness = Some(format!("image of {} has wrong endpoints or grade", spec.name));
            }
        }
    }
    out.push(CheckOutcome::new("map preserves endpoints and grades", src.pres.gens.len(), witness));

    let mut witness = None;
    for r in &src.pres.relations {
        let l = f.word_image(r.lhs());
        let rv = r.rhs().map(|w| f.word_image(w)).unwrap_or_default();
        if l != rv {
            witness = Some(format!("relation {} not preserved", src.pres.render_word(r.lhs())));
            break;
        }
    }
    out.push(CheckOutcome::new("map respects relations", src.pres.relations.len(), witness));

    let mut witness = None;
    for g in 0..src.pres.gens.len() as u32 {
        let lhs = elt_from(
            src.pres.differential[g as usize].iter().flat_map(|w| f.word_image(w)).collect(),
        );
        let rhs = dst.d(&f.gen_image(g));
        if lhs != rhs {
            witness = Some(format!("f∘d != d∘f on {}", src.pres.gens[g as usize].name));
            break;
        }
    }
    out.push(CheckOutcome::new("chain map on generators", src.pres.gens.len(), witness));

    let images = f.basis_images();
    let src_blocks = block_complexes(src);
    let dst_blocks = block_complexes(dst);
    let mut keys: Vec<(u32, u32, i32, i32)> = dst_blocks.keys().copied().collect();
    let inv: HashMap<u32, u32> = f.vertex_map.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    for k in src_blocks.keys() {
        let mapped = (f.vertex_map[k.0 as usize], f.vertex_map[k.1 as usize], k.2, k.3);
        if !dst_blocks.contains_key(&mapped) {
            keys.push(mapped);
        }
    }
    keys.sort_unstable();
    keys.dedup();
    let results = par::map(&keys, |&(ds, dt, t1, t2)| {
        let empty_block = BlockComplex { by_h: BTreeMap::new() };
        let skey = (inv.get(&ds).copied(), inv.get(&dt).copied());
        let sb = match skey {
            (Some(s), Some(t)) => src_blocks.get(&(s, t, t1, t2)).unwrap_or(&empty_block),
            _ => &empty_block,
        };
        let db = dst_blocks.get(&(ds, dt, t1, t2)).unwrap_or(&empty_block);
        let mut hs: Vec<i32> = sb.by_h.keys().chain(db.by_h.keys()).copied().collect();
        hs.sort_unstable();
        hs.dedup();
        let empty = Vec::new();
        for h in hs {
            let s_cur = sb.by_h.get(&h).unwrap_or(&empty);
            let s_next = sb.by_h.get(&(h + 1)).unwrap_or(&empty);
            let s_prev = sb.by_h.get(&(h - 1)).unwrap_or(&empty);
            let d_cur = db.by_h.get(&h).unwrap_or(&empty);
            let d_next = db.by_h.get(&(h + 1)).unwrap_or(&empty);
            let d_prev = db.by_h.get(&(h - 1)).unwrap_or(&empty);
            let z = gf2::kernel(&images_in(src, s_cur, s_next), s_next.len());
            let b_src = gf2::rank(&images_in(src, s_prev, s_cur), s_cur.len());
            let h_src = z.len() - b_src;
            let z_dst = d_cur.len() - gf2::rank(&images_in(dst, d_cur, d_next), d_next.len());
            let mut bdst = Echelon::new(d_cur.len());
            for v in images_in(dst, d_prev, d_cur) {
                bdst.insert(v);
            }
            let h_dst = z_dst - bdst.rank();
            if h_src != h_dst {
                return Some(format!(
                    "block ({}, {}) t=({t1},{t2}) h={h}: dim H = {h_src} vs {h_dst}",
                    dst.pres.vertices[ds as usize], dst.pres.vertices[dt as usize]
                ));
            }
            let pos = position_map(d_cur);
            let base = bdst.rank();
            for zv in &z {
                let mut img = BitVec::zeros(d_cur.len());
                for k in zv.ones() {
                    for c in &images[s_cur[k] as usize] {
                        match pos.get(c) {
                            Some(&p) => img.flip(p),
                            None => return Some(format!("image of a cocycle leaves block at h={h}")),
                        }
                    }
                }
                bdst.insert(img);
            }
            if bdst.rank() - base != h_src {
                return Some(format!(
                    "block ({}, {}) t=({t1},{t2}) h={h}: induced map not injective",
                    dst.pres.vertices[ds as usize], dst.pres.vertices[dt as usize]
                ));
            }
        }
        None
    });
    let witness = results.into_iter().flatten().next();
    out.push(CheckOutcome::new("isomorphism on cohomology", keys.len(), witness));
    out
}

/// Builder for tensor products of presentations.
pub struct TensorPres {
    pub pres: Presentation,
    pub n2: usize,
    /// `(g1, v2) ↦ g1 ⊗ e(v2)`
    pub left: HashMap<(u32, u32), u32>,
    /// `(v1, g2) ↦ e(v1) ⊗ g2`
    pub right: HashMap<(u32, u32), u32>,
}

impl TensorPres {
    pub fn vertex(&self, v1: u32, v2: u32) -> u32 {
        v1 * self.n2 as u32 + v2
    }
}

/// Tensor product presentation. `grade_left(g1, v2)` and `grade_right(v1, g2)`
/// give the twisted grades; `interchange(g1, g2)` decides whether the
/// commutation relation between `g1 ⊗ e` and `e ⊗ g2` is imposed.
pub fn tensor(
    name: &str,
    p1: &Presentation,
    p2: &Presentation,
    trigraded: bool,
    grade_left: impl Fn(&GenSpec, u32) -> Trigrade,
    grade_right: impl Fn(u32, &GenSpec) -> Trigrade,
    interchange: impl Fn(u32, u32) -> bool,
) -> TensorPres {
    let (n1, n2) = (p1.vertices.len(), p2.vertices.len());
    let verts = (0..n1)
        .flat_map(|a| (0..n2).map(move |b| (a, b)))
        .map(|(a, b)| format!("{}⊗{}", p1.vertices[a], p2.vertices[b]))
        .collect();
    let mut pres = Presentation::new(name, verts, trigraded);
    let vid = |a: u32, b: u32| a * n2 as u32 + b;
    let mut left = HashMap::new();
    let mut right = HashMap::new();
    for (g, s) in p1.gens.iter().enumerate() {
        for v2 in 0..n2 as u32 {
            let id = pres.add_gen(
                format!("{}⊗e({})", s.name, p2.vertices[v2 as usize]),
                vid(s.src, v2),
                vid(s.tgt, v2),
                grade_left(s, v2),
            );
            left.insert((g as u32, v2), id);
        }
    }
    for v1 in 0..n1 as u32 {
        for (g, s) in p2.gens.iter().enumerate() {
            let id = pres.add_gen(
                format!("e({})⊗{}", p1.vertices[v1 as usize], s.name),
                vid(v1, s.src),
                vid(v1, s.tgt),
                grade_right(v1, s),
            );
            right.insert((v1, g as u32), id);
        }
    }
    let lift_l = |w: &Word, v2: u32| -> Word { w.iter().map(|g| left[&(*g, v2)]).collect() };
    let lift_r = |v1: u32, w: &Word| -> Word { w.iter().map(|g| right[&(v1, *g)]).collect() };
    for r in &p1.relations {
        for v2 in 0..n2 as u32 {
            pres.relations.push(match r {
                Relation::Zero(w) => Relation::Zero(lift_l(w, v2)),
                Relation::Equal(a, b) => Relation::Equal(lift_l(a, v2), lift_l(b, v2)),
            });
        }
    }
    for r in &p2.relations {
        for v1 in 0..n1 as u32 {
            pres.relations.push(match r {
                Relation::Zero(w) => Relation::Zero(lift_r(v1, w)),
                Relation::Equal(a, b) => Relation::Equal(lift_r(v1, a), lift_r(v1, b)),
            });
        }
    }
    for (g1, s1) in p1.gens.iter().enumerate() {
        for (g2, s2) in p2.gens.iter().enumerate() {
            if !interchange(g1 as u32, g2 as u32) {
                continue;
            }
            let a = vec![left[&(g1 as u32, s2.src)], right[&(s1.tgt, g2 as u32)]];
            let b = vec![right[&(s1.src, g2 as u32)], left[&(g1 as u32, s2.tgt)]];
            pres.relations.push(Relation::Equal(a, b));
        }
    }
    for (g, terms) in p1.differential.iter().enumerate() {
        for v2 in 0..n2 as u32 {
            let id = left[&(g as u32, v2)];
            pres.differential[id as usize] = terms.iter().map(|w| lift_l(w, v2)).collect();
        }
    }
    for (g, terms) in p2.differential.iter().enumerate() {
        for v1 in 0..n1 as u32 {
            let id = right[&(v1, g as u32)];
            pres.differential[id as usize] = terms.iter().map(|w| lift_r(v1, w)).collect();
        }
    }
    TensorPres { pres, n2, left, right }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Presentation {
        // a: 0 -> 1, b: 1 -> 0, a·b = 0
        let mut p = Presentation::new("toy", vec!["x".into(), "y".into()], false);
        let a = p.add_gen("a", 0, 1, Trigrade::bi(0, 0));
        let b = p.add_gen("b", 1, 0, Trigrade::bi(1, 1));
        p.relations.push(Relation::Zero(vec![a, b]));
        p
    }

    #[test]
    fn toy_dimension() {
        let alg = Algebra::build(toy()).unwrap();
        assert_eq!(alg.dim(), 5);
        for c in verify_algebra(&alg) {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn commuting_loops() {
        let mut p = Presentation::new("loops", vec!["v".into()], false);
        let a = p.add_gen("a", 0, 0, Trigrade::bi(-1, -1));
        let b = p.add_gen("b", 0, 0, Trigrade::bi(-1, -1));
        p.relations.push(Relation::Zero(vec![a, a]));
        p.relations.push(Relation::Zero(vec![b, b]));
        p.relations.push(Relation::Equal(vec![a, b], vec![b, a]));
        let alg = Algebra::build(p).unwrap();
        assert_eq!(alg.dim(), 4);
        let mut n = Normalizer::new(&alg.pres);
        assert_eq!(n.normalize(&[b, a]), Some(vec![a, b]));
        assert_eq!(n.normalize(&[b, a, b]), None);
    }
}
