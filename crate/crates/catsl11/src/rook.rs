//! Decorated rook diagrams: elementary diagrams, loops, their resolutions,
//! and the presentations of R_n and H(R_n) built from them.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::foundation::{Bigrade, Trigrade};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::presented::{CheckOutcome, Normalizer, Presentation, Relation, Word};
use crate::vn_rep::BasisState;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RookError {
    #[error("strand index {0} out of range")]
    Strand(usize),
    #[error("target position {0} is not an empty position below the strand")]
    Target(usize),
    #[error("position {0} is not a marking")]
    NotMarked(usize),
    #[error("strand {0} is not crossed")]
    NotCrossed(usize),
    #[error("word does not compose at factor {0}")]
    Chain(usize),
}

/// The strand with index `m` in `x` moves down from `x_m` to the empty position `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryDiagram {
    x: BasisState,
    m: usize,
    p: usize,
}

pub fn make_elementary(x: BasisState, m: usize, p: usize) -> Result<ElementaryDiagram, RookError> {
    if m == 0 || m > x.k() {
        return Err(RookError::Strand(m));
    }
    if p == 0 || p >= x.x(m) || x.occupied(p) {
        return Err(RookError::Target(p));
    }
    Ok(ElementaryDiagram { x, m, p })
}

impl ElementaryDiagram {
    pub fn x(&self) -> BasisState {
        self.x
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Bottom position of the moving strand.
    pub fn b(&self) -> usize {
        self.x.x(self.m)
    }

    /// Least strand index whose position lies above `p`.
    pub fn i(&self) -> usize {
        self.x.count_below(self.p) + 1
    }

    pub fn s1(&self) -> usize {
        self.m - self.i()
    }

    /// Empty positions strictly between `p` and `b`.
    pub fn markings(&self) -> Vec<usize> {
        (self.p + 1..self.b()).filter(|&q| !self.x.occupied(q)).collect()
    }

    pub fn s0(&self) -> usize {
        self.markings().len()
    }

    pub fn y(&self) -> BasisState {
        self.x.moved(self.b(), self.p)
    }

    pub fn v(&self) -> Vec<usize> {
        let (x, y) = (self.x.positions(), self.y().positions());
        (self.i()..=self.m).map(|j| x[j - 1] - y[j - 1] - 1).collect()
    }

    /// Indices of the vertical strands crossed.
    pub fn crossed(&self) -> Vec<usize> {
        (self.i()..self.m).collect()
    }

    pub fn grade(&self) -> Bigrade {
        Bigrade::new(1 - self.s1() as i32, 1 + self.s0() as i32)
    }

    pub fn is_adjacent(&self) -> bool {
        self.p + 1 == self.b()
    }

    pub fn render(&self) -> String {
        let n = self.x.n();
        let y = self.y();
        let row = |s: BasisState| (1..=n).map(|q| if s.occupied(q) { '1' } else { '.' }).collect::<String>();
        let mid: String = (1..=n)
            .map(|q| {
                if q == self.p {
                    '/'
                } else if q == self.b() {
                    '+'
                } else if q > self.p && q < self.b() {
                    if self.x.occupied(q) {
                        'x'
                    } else {
                        '*'
                    }
                } else if self.x.occupied(q) {
                    '|'
                } else {
                    ' '
                }
            })
            .collect();
        format!("{}\n{}\n{}", row(y), mid, row(self.x))
    }
}

impl fmt::Display for ElementaryDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r({}→{})", self.x, self.y())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopGen {
    pub x: BasisState,
    pub i: usize,
}

impl LoopGen {
    pub fn new(x: BasisState, i: usize) -> Result<Self, RookError> {
        if i == 0 || i > x.k() {
            return Err(RookError::Strand(i));
        }
        Ok(LoopGen { x, i })
    }

    pub fn grade(&self) -> Bigrade {
        Bigrade::new(-1, -1)
    }
}

impl fmt::Display for LoopGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ρ({},{})", self.x, self.i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RookGen {
    Loop(LoopGen),
    Move(ElementaryDiagram),
}

impl RookGen {
    pub fn src(&self) -> BasisState {
        match self {
            RookGen::Loop(l) => l.x,
            RookGen::Move(d) => d.x,
        }
    }

    pub fn tgt(&self) -> BasisState {
        match self {
            RookGen::Loop(l) => l.x,
            RookGen::Move(d) => d.y(),
        }
    }

    pub fn grade(&self) -> Bigrade {
        match self {
            RookGen::Loop(l) => l.grade(),
            RookGen::Move(d) => d.grade(),
        }
    }
}

impl fmt::Display for RookGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RookGen::Loop(l) => l.fmt(f),
            RookGen::Move(d) => d.fmt(f),
        }
    }
}

pub fn grade(g: &RookGen) -> Bigrade {
    g.grade()
}

fn lp(x: BasisState, i: usize) -> RookGen {
    RookGen::Loop(LoopGen { x, i })
}

fn mv(x: BasisState, m: usize, p: usize) -> RookGen {
    RookGen::Move(make_elementary(x, m, p).expect("valid elementary diagram"))
}

/// A composable sequence of generators; the empty word is `e(source)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramWord {
    pub source: BasisState,
    pub gens: Vec<RookGen>,
}

impl DiagramWord {
    pub fn new(source: BasisState, gens: Vec<RookGen>) -> Result<Self, RookError> {
        let mut cur = source;
        for (k, g) in gens.iter().enumerate() {
            if g.src() != cur {
                return Err(RookError::Chain(k));
            }
            cur = g.tgt();
        }
        Ok(DiagramWord { source, gens })
    }

    pub fn target(&self) -> BasisState {
        self.gens.last().map_or(self.source, RookGen::tgt)
    }

    pub fn grade(&self) -> Bigrade {
        self.gens.iter().fold(Bigrade::default(), |a, g| a + g.grade())
    }

    /// Totals of crossings and markings over the move factors.
    pub fn decorations(&self) -> (usize, usize) {
        self.gens.iter().fold((0, 0), |(a, b), g| match g {
            RookGen::Move(d) => (a + d.s1(), b + d.s0()),
            RookGen::Loop(_) => (a, b),
        })
    }
}

impl fmt::Display for DiagramWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "e({})", self.source);
        }
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("·"))
    }
}

impl Serialize for DiagramWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Split the moving strand at the empty position `q`.
pub fn resolve_marking(d: &ElementaryDiagram, q: usize) -> Result<DiagramWord, RookError> {
    if !d.markings().contains(&q) {
        return Err(RookError::NotMarked(q));
    }
    let x = d.x;
    let z = x.moved(d.b(), q);
    let first = mv(x, d.m, q);
    let second = mv(z, z.count_below(q) + 1, d.p);
    DiagramWord::new(x, vec![first, second])
}

/// Smooth the crossing with strand `c`; returns the two resulting words.
pub fn resolve_crossing(d: &ElementaryDiagram, c: usize) -> Result<[DiagramWord; 2], RookError> {
    if !d.crossed().contains(&c) {
        return Err(RookError::NotCrossed(c));
    }
    let (x, y) = (d.x, d.y());
    let xc = x.x(c);
    let z = x.moved(xc, d.p);
    let a = mv(x, c, d.p);
    let b = mv(z, d.m, xc);
    Ok([
        DiagramWord::new(x, vec![lp(x, c), a, b])?,
        DiagramWord::new(x, vec![a, b, lp(y, c + 1)])?,
    ])
}

/// All words of `d(g)` before cancellation.
pub fn differential_gen(g: &RookGen) -> Vec<DiagramWord> {
    let RookGen::Move(d) = g else { return Vec::new() };
    let mut out = Vec::new();
    for q in d.markings() {
        out.push(resolve_marking(d, q).expect("marking"));
    }
    for c in d.crossed() {
        out.extend(resolve_crossing(d, c).expect("crossing"));
    }
    out
}

/// Leibniz expansion of `d(w)` before cancellation.
pub fn differential_word(w: &DiagramWord) -> Vec<DiagramWord> {
    let mut out = Vec::new();
    for (k, g) in w.gens.iter().enumerate() {
        for t in differential_gen(g) {
            let mut gens = w.gens[..k].to_vec();
            gens.extend(t.gens);
            gens.extend_from_slice(&w.gens[k + 1..]);
            out.push(DiagramWord { source: w.source, gens });
        }
    }
    out
}

/// All loops and elementary diagrams over `n` positions.
pub fn all_generators(n: usize, adjacent_only: bool) -> Vec<RookGen> {
    let mut out = Vec::new();
    for x in BasisState::all(n) {
        for i in 1..=x.k() {
            out.push(lp(x, i));
        }
    }
    for x in BasisState::all(n) {
        for m in 1..=x.k() {
            for p in 1..x.x(m) {
                if let Ok(d) = make_elementary(x, m, p) {
                    if !adjacent_only || d.is_adjacent() {
                        out.push(RookGen::Move(d));
                    }
                }
            }
        }
    }
    out
}

/// A presentation over rook generators with a lookup table.
#[derive(Debug)]
pub struct RookPresentation {
    pub n: usize,
    pub pres: Presentation,
    pub gens: Vec<RookGen>,
    pub index: HashMap<RookGen, u32>,
}

impl RookPresentation {
    pub fn vertex(x: BasisState) -> u32 {
        x.bits()
    }

    pub fn id(&self, g: &RookGen) -> u32 {
        self.index[g]
    }

    pub fn word(&self, w: &DiagramWord) -> Word {
        w.gens.iter().map(|g| self.id(g)).collect()
    }

    pub fn diagram_word(&self, source: BasisState, w: &[u32]) -> DiagramWord {
        DiagramWord { source, gens: w.iter().map(|&g| self.gens[g as usize]).collect() }
    }

    fn new(n: usize, name: String, gens: Vec<RookGen>) -> Self {
        let verts = BasisState::all(n).map(|x| x.to_string()).collect();
        let mut pres = Presentation::new(name, verts, false);
        let mut index = HashMap::new();
        for g in &gens {
            let id = pres.add_gen(g.to_string(), Self::vertex(g.src()), Self::vertex(g.tgt()), Trigrade::from(g.grade()));
            index.insert(*g, id);
        }
        RookPresentation { n, pres, gens, index }
    }

    fn has(&self, g: &RookGen) -> bool {
        self.index.contains_key(g)
    }

    fn eq(&mut self, a: &[RookGen], b: &[RookGen]) {
        let a = a.iter().map(|g| self.index[g]).collect();
        let b = b.iter().map(|g| self.index[g]).collect();
        self.pres.relations.push(Relation::Equal(a, b));
    }

    fn zero(&mut self, a: &[RookGen]) {
        let a = a.iter().map(|g| self.index[g]).collect();
        self.pres.relations.push(Relation::Zero(a));
    }

    fn loop_relations(&mut self) {
        for x in BasisState::all(self.n) {
            for i in 1..=x.k() {
                self.zero(&[lp(x, i), lp(x, i)]);
                for i2 in i + 1..=x.k() {
                    self.eq(&[lp(x, i), lp(x, i2)], &[lp(x, i2), lp(x, i)]);
                }
            }
        }
    }

    /// Disjoint moves commute: the second move starts above the first's bottom.
    fn disjoint_relations(&mut self) {
        let moves: Vec<ElementaryDiagram> = self
            .gens
            .iter()
            .filter_map(|g| match g {
                RookGen::Move(d) => Some(*d),
                _ => None,
            })
            .collect();
        for d1 in &moves {
            let y = d1.y();
            for m2 in 1..=y.k() {
                let b2 = y.x(m2);
                for p2 in d1.b() + 1..b2 {
                    let Ok(d2) = make_elementary(y, m2, p2) else { continue };
                    if !self.has(&RookGen::Move(d2)) {
                        continue;
                    }
                    let a2 = make_elementary(d1.x, m2, p2).expect("disjoint move");
                    let a1 = make_elementary(a2.y(), d1.m, d1.p).expect("disjoint move");
                    self.eq(
                        &[RookGen::Move(*d1), RookGen::Move(d2)],
                        &[RookGen::Move(a2), RookGen::Move(a1)],
                    );
                }
            }
        }
    }
}

/// Presentation of R_n with its differential.
pub fn rn_presentation(n: usize) -> RookPresentation {
    let gens = all_generators(n, false);
    let mut rp = RookPresentation::new(n, format!("R_{n}"), gens.clone());
    rp.loop_relations();
    for g in &gens {
        let RookGen::Move(d) = g else { continue };
        let (x, y) = (d.x, d.y());
        for i2 in 1..=x.k() {
            if i2 < d.i() || i2 > d.m {
                rp.eq(&[lp(x, i2), *g], &[*g, lp(y, i2)]);
            } else if i2 < d.m {
                rp.eq(&[lp(x, i2), *g], &[*g, lp(y, i2 + 1)]);
            }
        }
    }
    rp.disjoint_relations();
    for g in &gens {
        let terms = differential_gen(g);
        let words = terms.iter().map(|w| rp.word(w)).collect();
        let id = rp.id(g);
        rp.pres.differential[id as usize] = words;
    }
    rp
}

/// Presentation of H(R_n): loops and adjacent moves, zero differential.
pub fn hrn_presentation(n: usize) -> RookPresentation {
    let gens = all_generators(n, true);
    let mut rp = RookPresentation::new(n, format!("H(R_{n})"), gens.clone());
    rp.loop_relations();
    for g in &gens {
        let RookGen::Move(d) = g else { continue };
        let (x, y) = (d.x, d.y());
        // a strand cannot move twice in a row
        if d.p >= 2 && !y.occupied(d.p - 1) {
            rp.zero(&[*g, mv(y, d.m, d.p - 1)]);
        }
        for i2 in 1..=x.k() {
            if i2 != d.m {
                rp.eq(&[lp(x, i2), *g], &[*g, lp(y, i2)]);
            }
        }
        // the crossing relation: strand m then strand m+1 into the vacated spot
        if d.m < x.k() && x.x(d.m + 1) == d.b() + 1 {
            let g2 = mv(y, d.m + 1, d.b());
            let z = g2.tgt();
            rp.eq(&[lp(x, d.m), *g, g2], &[*g, g2, lp(z, d.m + 1)]);
        }
    }
    rp.disjoint_relations();
    rp
}

/// Canonical forms of rook words in R_n.
pub struct RookCalculus {
    pub rp: RookPresentation,
    norm: Normalizer,
}

impl RookCalculus {
    pub fn new(n: usize) -> Self {
        let rp = rn_presentation(n);
        let norm = Normalizer::new(&rp.pres);
        RookCalculus { rp, norm }
    }

    /// Canonical representative, `None` if the word is zero in R_n.
    pub fn word_normal_form(&mut self, w: &DiagramWord) -> Result<Option<DiagramWord>, RookError> {
        DiagramWord::new(w.source, w.gens.clone())?;
        if w.gens.is_empty() {
            return Ok(Some(w.clone()));
        }
        let ids = self.rp.word(w);
        Ok(self.norm.normalize(&ids).map(|c| self.rp.diagram_word(w.source, &c)))
    }

    /// `d` of a word, reduced to canonical words with GF(2) cancellation.
    pub fn d(&mut self, w: &DiagramWord) -> Vec<DiagramWord> {
        let mut counts: HashMap<DiagramWord, usize> = HashMap::new();
        for t in differential_word(w) {
            if let Some(c) = self.word_normal_form(&t).expect("resolutions compose") {
                *counts.entry(c).or_insert(0) += 1;
            }
        }
        let mut out: Vec<DiagramWord> = counts.into_iter().filter(|(_, c)| c % 2 == 1).map(|(w, _)| w).collect();
        out.sort();
        out
    }

    /// One random application of a binomial relation, if any applies.
    pub fn random_rewrite(&self, w: &DiagramWord, pick: usize) -> DiagramWord {
        let ids = self.rp.word(w);
        let nb = self.norm.neighbours(&ids);
        if nb.is_empty() {
            return w.clone();
        }
        self.rp.diagram_word(w.source, &nb[pick % nb.len()])
    }
}

/// Elementary diagrams over `n` positions with at most `max_dec` decorations.
pub fn decorated_diagrams(n: usize, max_dec: usize) -> Vec<ElementaryDiagram> {
    all_generators(n, false)
        .into_iter()
        .filter_map(|g| match g {
            RookGen::Move(d) if d.s1() + d.s0() <= max_dec => Some(d),
            _ => None,
        })
        .collect()
}

fn witness_for(d: &ElementaryDiagram, what: String) -> String {
    format!("{d}: {what}\n{}", d.render())
}

/// Every single resolution removes exactly one decoration and raises the
/// bigrade by (1,0).
pub fn check_decoration_conservation(n: usize, max_dec: usize) -> CheckOutcome {
    let ds = decorated_diagrams(n, max_dec);
    let mut checked = 0;
    for d in &ds {
        let target = d.grade() + Bigrade::new(1, 0);
        let mut outputs: Vec<(DiagramWord, (usize, usize))> = Vec::new();
        for q in d.markings() {
            outputs.push((resolve_marking(d, q).expect("marking"), (d.s1(), d.s0() - 1)));
        }
        for c in d.crossed() {
            for w in resolve_crossing(d, c).expect("crossing") {
                outputs.push((w, (d.s1() - 1, d.s0())));
            }
        }
        for (w, dec) in outputs {
            checked += 1;
            if w.decorations() != dec || w.grade() != target || w.target() != d.y() {
                let got = w.decorations();
                return CheckOutcome::new(
                    "decoration conservation",
                    checked,
                    Some(witness_for(d, format!("{w} has decorations {got:?}, grade {}", w.grade()))),
                );
            }
        }
    }
    CheckOutcome::new("decoration conservation", checked, None)
}

/// `d² = 0` on every elementary diagram, computed in R_n.
pub fn check_d_squared(rc: &mut RookCalculus, max_dec: usize) -> CheckOutcome {
    let ds = decorated_diagrams(rc.rp.n, max_dec);
    for (k, d) in ds.iter().enumerate() {
        let w = DiagramWord { source: d.x, gens: vec![RookGen::Move(*d)] };
        let mut counts: HashMap<DiagramWord, usize> = HashMap::new();
        for t in rc.d(&w) {
            for u in rc.d(&t) {
                *counts.entry(u).or_insert(0) += 1;
            }
        }
        let mut odd: Vec<_> = counts.into_iter().filter(|(_, c)| c % 2 == 1).map(|(u, _)| u).collect();
        if !odd.is_empty() {
            odd.sort();
            let terms: Vec<String> = odd.iter().map(ToString::to_string).collect();
            return CheckOutcome::new("d² = 0", k + 1, Some(witness_for(d, format!("d² = {}", terms.join(" + ")))));
        }
    }
    CheckOutcome::new("d² = 0", ds.len(), None)
}

/// A double crossing is nonzero, and moving a crossing off a vertical strand
/// changes the element.
pub fn check_crossing_inequalities() -> CheckOutcome {
    let mut rc = RookCalculus::new(4);
    let x = BasisState::parse("|0011⟩").expect("state");
    let z = BasisState::parse("|0110⟩").expect("state");
    let double = DiagramWord::new(x, vec![mv(x, 2, 2), mv(z, 2, 1)]).expect("word");
    if rc.word_normal_form(&double).expect("word").is_none() {
        return CheckOutcome::new("crossing inequalities", 1, Some(format!("{double} is zero")));
    }
    let mut rc = RookCalculus::new(3);
    let (x, z, y) = (
        BasisState::parse("|011⟩").expect("state"),
        BasisState::parse("|101⟩").expect("state"),
        BasisState::parse("|110⟩").expect("state"),
    );
    let crossing = DiagramWord::new(x, vec![mv(x, 2, 1)]).expect("word");
    let split = DiagramWord::new(x, vec![mv(x, 1, 1), mv(z, 2, 2)]).expect("word");
    let loops = [
        DiagramWord::new(x, vec![lp(x, 1), mv(x, 1, 1), mv(z, 2, 2)]).expect("word"),
        DiagramWord::new(x, vec![mv(x, 1, 1), mv(z, 2, 2), lp(y, 2)]).expect("word"),
    ];
    let forms: Vec<Option<DiagramWord>> =
        [&crossing, &split, &loops[0], &loops[1]].iter().map(|w| rc.word_normal_form(w).expect("word")).collect();
    if forms.iter().any(Option::is_none) {
        return CheckOutcome::new("crossing inequalities", 2, Some("a crossing word is zero".into()));
    }
    if forms[0] == forms[1] || forms[2] == forms[3] {
        return CheckOutcome::new("crossing inequalities", 3, Some(format!("{crossing} or its loop resolutions collapse")));
    }
    CheckOutcome::new("crossing inequalities", 3, None)
}

/// `d r(|011⟩→|110⟩) = ρ·r₁·r₂ + r₁·r₂·ρ'` in R_3.
pub fn check_crossing_resolution() -> CheckOutcome {
    let mut rc = RookCalculus::new(3);
    let (x, z, y) = (
        BasisState::parse("|011⟩").expect("state"),
        BasisState::parse("|101⟩").expect("state"),
        BasisState::parse("|110⟩").expect("state"),
    );
    let r0 = DiagramWord::new(x, vec![mv(x, 2, 1)]).expect("word");
    let mut expected = vec![
        DiagramWord::new(x, vec![lp(x, 1), mv(x, 1, 1), mv(z, 2, 2)]).expect("word"),
        DiagramWord::new(x, vec![mv(x, 1, 1), mv(z, 2, 2), lp(y, 2)]).expect("word"),
    ]
    .into_iter()
    .map(|w| rc.word_normal_form(&w).expect("word").expect("nonzero"))
    .collect::<Vec<_>>();
    expected.sort();
    let got = rc.d(&r0);
    let witness = (got != expected).then(|| {
        let show = |v: &[DiagramWord]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ");
        format!("d{r0} = {} but expected {}\n{}", show(&got), show(&expected), make_elementary(x, 2, 1).expect("move").render())
    });
    CheckOutcome::new("crossing resolution in R_3", 1, witness)
}

/// Random composable words of length `len` whose normal form is nonzero.
fn random_words(rc: &mut RookCalculus, rng: &mut impl Rng, count: usize, len: usize) -> Vec<DiagramWord> {
    let gens = all_generators(rc.rp.n, false);
    let mut from: HashMap<BasisState, Vec<RookGen>> = HashMap::new();
    for g in gens {
        from.entry(g.src()).or_default().push(g);
    }
    let states: Vec<BasisState> = from.keys().copied().collect();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < 100 * count {
        tries += 1;
        let mut cur = states[rng.gen_range(0..states.len())];
        let mut w = DiagramWord { source: cur, gens: Vec::new() };
        for _ in 0..len {
            let Some(opts) = from.get(&cur) else { break };
            let g = opts[rng.gen_range(0..opts.len())];
            w.gens.push(g);
            cur = g.tgt();
        }
        if rc.word_normal_form(&w).expect("word").is_some() {
            out.push(w);
        }
    }
    out
}

/// Normal forms are unchanged by `rewrites` random applications of the
/// commutation and sliding relations.
pub fn check_confluence(n: usize, rewrites: usize, seed: u64) -> CheckOutcome {
    let mut rc = RookCalculus::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = random_words(&mut rc, &mut rng, 64, 4);
    if words.is_empty() {
        return CheckOutcome::new("normal form confluence", 0, None);
    }
    let mut cur: Vec<DiagramWord> = words.clone();
    let nfs: Vec<DiagramWord> = words.iter().map(|w| rc.word_normal_form(w).expect("word").expect("nonzero")).collect();
    for k in 0..rewrites {
        let i = k % cur.len();
        cur[i] = rc.random_rewrite(&cur[i], rng.gen());
        let nf = rc.word_normal_form(&cur[i]).expect("word");
        if nf.as_ref() != Some(&nfs[i]) {
            return CheckOutcome::new(
                "normal form confluence",
                k + 1,
                Some(format!("{} rewrote to {} with a different normal form", words[i], cur[i])),
            );
        }
    }
    CheckOutcome::new("normal form confluence", rewrites, None)
}

/// The rook-calculus suite for all n up to `n_max`.
pub fn rook_suite(n_max: usize, max_dec: usize, seed: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let per_n = crate::par::map_range(n_max, |k| {
        let n = k + 1;
        let mut rc = RookCalculus::new(n);
        let mut a = check_decoration_conservation(n, max_dec);
        a.name = format!("{} (n={n})", a.name);
        let mut b = check_d_squared(&mut rc, max_dec);
        b.name = format!("{} (n={n})", b.name);
        [a, b]
    });
    out.extend(per_n.into_iter().flatten());
    out.push(check_crossing_inequalities());
    out.push(check_crossing_resolution());
    out.push(check_confluence(n_max.min(4), 10_000, seed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> BasisState {
        BasisState::parse(s).unwrap()
    }

    #[test]
    fn adjacent_move() {
        let d = make_elementary(BasisState::from_positions(2, &[2]), 1, 1).unwrap();
        assert_eq!((d.i(), d.s1(), d.v(), d.s0()), (1, 0, vec![0], 0));
        assert_eq!(d.grade(), Bigrade::new(1, 1));
        assert!(make_elementary(st("|011⟩"), 1, 2).is_err());
        assert!(make_elementary(st("|011⟩"), 2, 2).is_err());
    }

    #[test]
    fn quiver_four_two() {
        let gens = all_generators(4, false);
        let moves: Vec<_> = gens
            .iter()
            .filter_map(|g| match g {
                RookGen::Move(d) if d.x.k() == 2 => Some(*d),
                _ => None,
            })
            .collect();
        assert_eq!(moves.len(), 12);
        assert_eq!(moves.iter().filter(|d| d.is_adjacent()).count(), 6);
    }
}
