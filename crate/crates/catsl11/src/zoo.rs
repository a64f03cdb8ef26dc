//! The concrete algebras: A, A⊗A, B, R_n, H(R_n), A⊠R_n, A⊗R_n, A⊗H(R_n),
//! and the maps used for the formality checks.

#![allow(non_snake_case)]

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::foundation::Trigrade;
use crate::presented::{tensor, Algebra, AlgebraMap, GenSpec, Presentation, PresentationError, Relation, TensorPres, Word};
use crate::rook::{hrn_presentation, rn_presentation, LoopGen, RookGen, RookPresentation};
use crate::ut_hopf::UtBasis;
use crate::vn_rep::BasisState;

/// Largest n accepted by the R_n family builders.
pub const MAX_N: usize = 6;

#[derive(Debug, Error)]
pub enum ZooError {
    #[error("n = {0} outside 1..={MAX_N}")]
    N(usize),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

fn check_n(n: usize) -> Result<(), ZooError> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(ZooError::N(n))
    }
}

pub const UT_ORDER: [UtBasis; 4] = [UtBasis::F, UtBasis::I, UtBasis::EF, UtBasis::E];

/// Vertex id of an idempotent of A.
pub fn a_vertex(g: UtBasis) -> u32 {
    UT_ORDER.iter().position(|&h| h == g).expect("basis") as u32
}

/// Parity p(Γ) of an idempotent of A.
pub fn parity(g: UtBasis) -> i32 {
    match g {
        UtBasis::F => 1,
        UtBasis::E => -1,
        UtBasis::I | UtBasis::EF => 0,
    }
}

pub const RHO_I_EF: u32 = 0;
pub const RHO_EF_I: u32 = 1;

pub fn a_presentation() -> Presentation {
    let verts = UT_ORDER.iter().map(|g| g.name().to_string()).collect();
    let mut p = Presentation::new("A", verts, false);
    let (i, ef) = (a_vertex(UtBasis::I), a_vertex(UtBasis::EF));
    p.add_gen("ρ(I,EF)", i, ef, Trigrade::bi(0, 0));
    p.add_gen("ρ(EF,I)", ef, i, Trigrade::bi(1, 1));
    p.relations.push(Relation::Zero(vec![RHO_I_EF, RHO_EF_I]));
    p
}

pub fn build_A() -> Algebra {
    Algebra::build(a_presentation()).expect("A is finite")
}

/// Presentation of A⊗A with the parity-twisted cohomological grading.
pub fn aoa_tensor() -> TensorPres {
    let a = a_presentation();
    tensor(
        "A⊗A",
        &a,
        &a,
        false,
        |g, v2| {
            let tw = 2 * g.grade.t1 * parity(UT_ORDER[v2 as usize]);
            Trigrade::bi(g.grade.h + tw, g.grade.t1)
        },
        |_, g| g.grade,
        |_, _| true,
    )
}

pub fn build_AoA() -> Algebra {
    Algebra::build(aoa_tensor().pres).expect("A⊗A is finite")
}

pub fn b_vertex(g1: UtBasis, g2: UtBasis) -> u32 {
    4 * a_vertex(g1) + a_vertex(g2)
}

pub fn b_presentation() -> Presentation {
    use UtBasis::*;
    let mut verts = Vec::new();
    for g1 in UT_ORDER {
        for g2 in UT_ORDER {
            verts.push(format!("{}⊗{}", g1.name(), g2.name()));
        }
    }
    let mut p = Presentation::new("B", verts, true);
    let arrows: [((UtBasis, UtBasis), (UtBasis, UtBasis)); 20] = [
        // parity -1
        ((E, EF), (E, I)),
        ((E, I), (E, EF)),
        ((EF, E), (I, E)),
        ((I, E), (EF, E)),
        ((E, I), (I, E)),
        // parity +1
        ((EF, F), (I, F)),
        ((I, F), (EF, F)),
        ((F, EF), (F, I)),
        ((F, I), (F, EF)),
        ((I, F), (F, I)),
        // parity 0
        ((E, F), (I, EF)),
        ((I, EF), (I, I)),
        ((I, I), (I, EF)),
        ((I, EF), (EF, EF)),
        ((EF, EF), (I, EF)),
        ((I, I), (EF, I)),
        ((EF, I), (I, I)),
        ((EF, EF), (EF, I)),
        ((EF, I), (EF, EF)),
        ((EF, I), (F, E)),
    ];
    let mut id = HashMap::new();
    for &(s, t) in &arrows {
        let grade = match (s, t) {
            ((E, I), (I, E)) | ((E, F), (I, EF)) => Trigrade::new(1, 0, 0),
            ((EF, g), (I, g2)) if g == g2 => Trigrade::new(1, 1, 0),
            ((I, F), (F, I)) => Trigrade::new(1, 0, 1),
            ((g, EF), (g2, I)) if g == g2 => Trigrade::new(1, 0, 1),
            _ => Trigrade::ZERO,
        };
        let name = format!("ρ({}⊗{},{}⊗{})", s.0.name(), s.1.name(), t.0.name(), t.1.name());
        let g = p.add_gen(name, b_vertex(s.0, s.1), b_vertex(t.0, t.1), grade);
        id.insert((s, t), g);
    }
    let w = |path: &[(UtBasis, UtBasis)]| -> Word { path.windows(2).map(|e| id[&(e[0], e[1])]).collect() };
    let zeros: [&[(UtBasis, UtBasis)]; 14] = [
        &[(E, I), (E, EF), (E, I)],
        &[(I, E), (EF, E), (I, E)],
        &[(E, EF), (E, I), (I, E)],
        &[(E, I), (I, E), (EF, E)],
        &[(I, I), (I, EF), (I, I)],
        &[(I, I), (EF, I), (I, I)],
        &[(I, EF), (EF, EF), (I, EF)],
        &[(EF, I), (EF, EF), (EF, I)],
        &[(E, F), (I, EF), (EF, EF)],
        &[(EF, EF), (EF, I), (F, E)],
        &[(I, F), (EF, F), (I, F)],
        &[(F, I), (F, EF), (F, I)],
        &[(EF, F), (I, F), (F, I)],
        &[(I, F), (F, I), (F, EF)],
    ];
    for z in zeros {
        p.relations.push(Relation::Zero(w(z)));
    }
    let squares: [[(UtBasis, UtBasis); 4]; 4] = [
        [(I, I), (I, EF), (EF, I), (EF, EF)],
        [(I, EF), (I, I), (EF, EF), (EF, I)],
        [(EF, I), (I, I), (EF, EF), (I, EF)],
        [(EF, EF), (I, EF), (EF, I), (I, I)],
    ];
    for [s, a, b, t] in squares {
        p.relations.push(Relation::Equal(w(&[s, a, t]), w(&[s, b, t])));
    }
    p
}

pub fn build_B() -> Algebra {
    Algebra::build(b_presentation()).expect("B is finite")
}

/// R_n or H(R_n) with the rook generator lookup.
#[derive(Debug)]
pub struct RookAlgebra {
    pub n: usize,
    pub alg: Algebra,
    pub gens: Vec<RookGen>,
    pub index: HashMap<RookGen, u32>,
}

impl RookAlgebra {
    fn from(rp: RookPresentation) -> Result<Self, ZooError> {
        let RookPresentation { n, pres, gens, index } = rp;
        Ok(RookAlgebra { n, alg: Algebra::build(pres)?, gens, index })
    }

    pub fn id(&self, g: &RookGen) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn loop_id(&self, x: BasisState, i: usize) -> u32 {
        self.index[&RookGen::Loop(LoopGen { x, i })]
    }

    /// Adjacent move of the strand with index `m` one step down.
    pub fn step_id(&self, x: BasisState, m: usize) -> Option<u32> {
        let b = x.x(m);
        let d = crate::rook::make_elementary(x, m, b.checked_sub(1)?).ok()?;
        self.id(&RookGen::Move(d))
    }
}

pub fn build_Rn(n: usize) -> Result<RookAlgebra, ZooError> {
    check_n(n)?;
    RookAlgebra::from(rn_presentation(n))
}

pub fn build_HRn(n: usize) -> Result<RookAlgebra, ZooError> {
    check_n(n)?;
    RookAlgebra::from(hrn_presentation(n))
}

/// The formality map g_n: R_n → H(R_n).
pub fn g_n<'a>(r: &'a RookAlgebra, h: &'a RookAlgebra) -> AlgebraMap<'a> {
    let gen_map = r
        .gens
        .iter()
        .map(|g| match h.id(g) {
            Some(id) => vec![vec![id]],
            None => Vec::new(),
        })
        .collect();
    AlgebraMap { src: &r.alg, dst: &h.alg, vertex_map: (0..r.alg.num_vertices() as u32).collect(), gen_map }
}

/// How the exceptions to commutation are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExceptionRule {
    /// Exceptions exactly as listed, whether or not the generator whose
    /// differential produces the commutator exists.
    AsWritten,
    /// An exception applies only when that generator exists.
    WhenDefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AboxOptions {
    pub exceptions: ExceptionRule,
    /// Impose (ρ(I,EF)⊠e)·ρ(EF x →j I x) = 0.
    pub zero_before_rho_prime: bool,
    /// Impose ρ(EF x →j I x)·(ρ(I,EF)⊠e) = 0.
    pub zero_after_rho_prime: bool,
}

impl Default for AboxOptions {
    fn default() -> Self {
        AboxOptions { exceptions: ExceptionRule::WhenDefined, zero_before_rho_prime: true, zero_after_rho_prime: false }
    }
}

/// An algebra whose vertices are pairs (Γ, x): A⊠R_n, A⊗R_n or A⊗H(R_n).
#[derive(Debug)]
pub struct ARn {
    pub n: usize,
    pub alg: Algebra,
    pub rook_gens: Vec<RookGen>,
    pub rook_index: HashMap<RookGen, u32>,
    /// `(a, x) ↦ a⊠e(x)` for a ∈ {ρ(I,EF), ρ(EF,I)}
    pub left: HashMap<(u32, u32), u32>,
    /// `(Γ, rook gen id) ↦ e(Γ)⊠r`
    pub right: HashMap<(u32, u32), u32>,
    /// `(x, i) ↦ ρ(I x →i EF x)`
    pub rho_bar: HashMap<(u32, usize), u32>,
    /// `(x, j) ↦ ρ(EF x →j I x)`
    pub rho_bar_prime: HashMap<(u32, usize), u32>,
    pub options: Option<AboxOptions>,
}

impl ARn {
    pub fn vertex(&self, g: UtBasis, x: BasisState) -> u32 {
        a_vertex(g) * (1 << self.n) + x.bits()
    }

    pub fn vertex_parts(&self, v: u32) -> (UtBasis, BasisState) {
        (UT_ORDER[(v >> self.n) as usize], BasisState::new(self.n, v & ((1 << self.n) - 1)))
    }

    pub fn a_gen(&self, a: u32, x: BasisState) -> u32 {
        self.left[&(a, x.bits())]
    }

    pub fn rook(&self, g: UtBasis, r: &RookGen) -> u32 {
        self.right[&(a_vertex(g), self.rook_index[r])]
    }

    pub fn loop_gen(&self, g: UtBasis, x: BasisState, i: usize) -> u32 {
        self.rook(g, &RookGen::Loop(LoopGen { x, i }))
    }
}

/// ρ(I x →i EF x) exists.
pub fn rho_bar_exists(x: BasisState, i: usize) -> bool {
    let (n, k) = (x.n(), x.k());
    i >= 1 && i <= k && k < n && x.x(i) == n - k + i
}

/// ρ(EF x →j I x) exists.
pub fn rho_bar_prime_exists(x: BasisState, j: usize) -> bool {
    let (n, k) = (x.n(), x.k());
    j >= 1 && j <= k && k < n && x.x(j) == j
}

fn twisted_left(n: usize) -> impl Fn(&GenSpec, u32) -> Trigrade {
    move |g, v2| {
        let k = v2.count_ones() as i32;
        Trigrade::bi(g.grade.h + 2 * k * g.grade.t1, n as i32 * g.grade.t1)
    }
}

fn build_product(n: usize, rp: RookPresentation, name: &str, options: Option<AboxOptions>) -> Result<ARn, ZooError> {
    check_n(n)?;
    let a = a_presentation();
    let RookPresentation { pres: rpres, gens: rook_gens, index: rook_index, .. } = rp;
    let exceptional = |ag: u32, rg: u32| -> bool {
        let Some(opt) = options else { return false };
        let RookGen::Loop(l) = rook_gens[rg as usize] else { return false };
        let (x, k) = (l.x, l.x.k());
        let when = |exists: bool| opt.exceptions == ExceptionRule::AsWritten || exists;
        match ag {
            RHO_I_EF => l.i == k && x.x(k) == n && when(rho_bar_exists(x, k)),
            _ => l.i == 1 && x.x(1) == 1 && when(rho_bar_prime_exists(x, 1)),
        }
    };
    let tp = tensor(name, &a, &rpres, false, twisted_left(n), |_, g| g.grade, |ag, rg| !exceptional(ag, rg));
    let mut pres = tp.pres;
    let vid = |g: UtBasis, x: BasisState| a_vertex(g) * (1 << n) + x.bits();
    let loop_id = |g: UtBasis, x: BasisState, i: usize| -> u32 {
        tp.right[&(a_vertex(g), rook_index[&RookGen::Loop(LoopGen { x, i })])]
    };
    let mut rho_bar = HashMap::new();
    let mut rho_bar_prime = HashMap::new();
    if let Some(opt) = options {
        let (ui, uef) = (UtBasis::I, UtBasis::EF);
        for x in BasisState::all(n) {
            let k = x.k() as i32;
            for i in 1..=x.k() {
                if rho_bar_exists(x, i) {
                    let c = k - i as i32 + 1;
                    let g = pres.add_gen(
                        format!("ρ(I{x}→EF{x},{i})"),
                        vid(ui, x),
                        vid(uef, x),
                        Trigrade::bi(-2 * c, -c),
                    );
                    rho_bar.insert((x.bits(), i), g);
                }
                if rho_bar_prime_exists(x, i) {
                    let g = pres.add_gen(
                        format!("ρ(EF{x}→I{x},{i})"),
                        vid(uef, x),
                        vid(ui, x),
                        Trigrade::bi(2 * k + 1 - 2 * i as i32, n as i32 - i as i32),
                    );
                    rho_bar_prime.insert((x.bits(), i), g);
                }
            }
        }
        let when = |exists: bool| opt.exceptions == ExceptionRule::AsWritten || exists;
        for (&(xb, i), &g) in &rho_bar {
            let x = BasisState::new(n, xb);
            let a_ief = tp.left[&(RHO_I_EF, xb)];
            let a_efi = tp.left[&(RHO_EF_I, xb)];
            for i2 in 1..=x.k() {
                let skip = i == i2 + 1 && when(rho_bar_exists(x, i2));
                if !skip {
                    pres.relations.push(Relation::Equal(vec![g, loop_id(uef, x, i2)], vec![loop_id(ui, x, i2), g]));
                }
            }
            for (rid, rg) in rook_gens.iter().enumerate() {
                let RookGen::Move(d) = rg else { continue };
                if d.x() != x || d.m() >= i {
                    continue;
                }
                let y = d.y();
                let gy = rho_bar[&(y.bits(), i)];
                pres.relations.push(Relation::Equal(
                    vec![g, tp.right[&(a_vertex(uef), rid as u32)]],
                    vec![tp.right[&(a_vertex(ui), rid as u32)], gy],
                ));
            }
            pres.relations.push(Relation::Zero(vec![g, a_efi]));
            for (&(xb2, _), &g2) in &rho_bar_prime {
                if xb2 == xb {
                    pres.relations.push(Relation::Zero(vec![g, g2]));
                }
            }
            // d ρ̄_k and d ρ̄_i
            let k = x.k();
            pres.differential[g as usize] = if i == k {
                vec![vec![a_ief, loop_id(uef, x, k)], vec![loop_id(ui, x, k), a_ief]]
            } else {
                let next = rho_bar[&(xb, i + 1)];
                vec![vec![next, loop_id(uef, x, i)], vec![loop_id(ui, x, i), next]]
            };
        }
        for (&(xb, j), &g) in &rho_bar_prime {
            let x = BasisState::new(n, xb);
            let a_ief = tp.left[&(RHO_I_EF, xb)];
            let a_efi = tp.left[&(RHO_EF_I, xb)];
            for j2 in 1..=x.k() {
                let skip = j2 == j + 1 && when(rho_bar_prime_exists(x, j2));
                if !skip {
                    pres.relations.push(Relation::Equal(vec![g, loop_id(ui, x, j2)], vec![loop_id(uef, x, j2), g]));
                }
            }
            for (rid, rg) in rook_gens.iter().enumerate() {
                let RookGen::Move(d) = rg else { continue };
                if d.x() != x || d.i() <= j {
                    continue;
                }
                let gy = rho_bar_prime[&(d.y().bits(), j)];
                pres.relations.push(Relation::Equal(
                    vec![g, tp.right[&(a_vertex(ui), rid as u32)]],
                    vec![tp.right[&(a_vertex(uef), rid as u32)], gy],
                ));
            }
            if opt.zero_before_rho_prime {
                pres.relations.push(Relation::Zero(vec![a_ief, g]));
            }
            if opt.zero_after_rho_prime {
                pres.relations.push(Relation::Zero(vec![g, a_ief]));
            }
            pres.differential[g as usize] = if j == 1 {
                vec![vec![a_efi, loop_id(ui, x, 1)], vec![loop_id(uef, x, 1), a_efi]]
            } else {
                let prev = rho_bar_prime[&(xb, j - 1)];
                vec![vec![prev, loop_id(ui, x, j)], vec![loop_id(uef, x, j), prev]]
            };
        }
    }
    let alg = Algebra::build(pres)?;
    Ok(ARn {
        n,
        alg,
        rook_gens,
        rook_index,
        left: tp.left,
        right: tp.right,
        rho_bar,
        rho_bar_prime,
        options,
    })
}

pub fn build_AboxRn(n: usize) -> Result<ARn, ZooError> {
    build_AboxRn_with(n, AboxOptions::default())
}

pub fn build_AboxRn_with(n: usize, options: AboxOptions) -> Result<ARn, ZooError> {
    build_product(n, rn_presentation(n), &format!("A⊠R_{n}"), Some(options))
}

/// A⊗R_n with the twisted grading.
pub fn build_AoRn(n: usize) -> Result<ARn, ZooError> {
    build_product(n, rn_presentation(n), &format!("A⊗R_{n}"), None)
}

/// A⊗H(R_n) with the twisted grading.
pub fn build_AoHRn(n: usize) -> Result<ARn, ZooError> {
    build_product(n, hrn_presentation(n), &format!("A⊗H(R_{n})"), None)
}

/// The projection A⊠R_n → A⊗R_n killing the extra generators.
pub fn projection<'a>(src: &'a ARn, dst: &'a ARn) -> AlgebraMap<'a> {
    let mut gen_map = vec![Vec::new(); src.alg.pres.gens.len()];
    for (k, v) in &src.left {
        gen_map[*v as usize] = vec![vec![dst.left[k]]];
    }
    for (k, v) in &src.right {
        gen_map[*v as usize] = vec![vec![dst.right[k]]];
    }
    AlgebraMap { src: &src.alg, dst: &dst.alg, vertex_map: (0..src.alg.num_vertices() as u32).collect(), gen_map }
}

/// id ⊗ g_n: A⊗R_n → A⊗H(R_n).
pub fn id_tensor_g<'a>(src: &'a ARn, dst: &'a ARn) -> AlgebraMap<'a> {
    let mut gen_map = vec![Vec::new(); src.alg.pres.gens.len()];
    for (k, v) in &src.left {
        gen_map[*v as usize] = vec![vec![dst.left[k]]];
    }
    for (&(g, rid), v) in &src.right {
        let rg = src.rook_gens[rid as usize];
        if let Some(hid) = dst.rook_index.get(&rg) {
            gen_map[*v as usize] = vec![vec![dst.right[&(g, *hid)]]];
        }
    }
    AlgebraMap { src: &src.alg, dst: &dst.alg, vertex_map: (0..src.alg.num_vertices() as u32).collect(), gen_map }
}

/// Algebras addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    A,
    AoA,
    B,
    Rn,
    HRn,
    AxRn,
}

impl Which {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "A" => Which::A,
            "AoA" => Which::AoA,
            "B" => Which::B,
            "Rn" => Which::Rn,
            "HRn" => Which::HRn,
            "AxRn" => Which::AxRn,
            _ => return None,
        })
    }

    pub fn uses_n(self) -> bool {
        matches!(self, Which::Rn | Which::HRn | Which::AxRn)
    }

    pub fn build(self, n: usize) -> Result<Algebra, ZooError> {
        Ok(match self {
            Which::A => build_A(),
            Which::AoA => build_AoA(),
            Which::B => build_B(),
            Which::Rn => build_Rn(n)?.alg,
            Which::HRn => build_HRn(n)?.alg,
            Which::AxRn => build_AboxRn(n)?.alg,
        })
    }
}
