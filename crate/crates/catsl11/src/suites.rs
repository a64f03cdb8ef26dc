//! Check suites addressable by name, each returning report cases.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bimod::{
    build_N, build_S, check_tensor_with, quotient_tensor_size, verify_bimodule, DGBimodule, TENSOR_BUDGET,
};
use crate::cn::build_Cn;
use crate::decat::{self, DecatReport};
use crate::presented::{check_quasi_iso, verify_algebra, Algebra, CheckOutcome};
use crate::report::Case;
use crate::rook::rook_suite;
use crate::ut_hopf::check_hopf_axioms;
use crate::vn_rep::{verify_rep, BasisState};
use crate::zoo::{
    build_A, build_AboxRn, build_AoA, build_AoHRn, build_AoRn, build_B, build_HRn, build_Rn, g_n, id_tensor_g,
    projection, Which, ZooError,
};

/// Largest n for the C_n and decategorification suites.
pub const MAX_N_CN: usize = 5;
/// Largest n for the representation suite.
pub const MAX_N_REP: usize = 8;
/// Largest n for everything built on R_n.
pub const MAX_N_ALG: usize = crate::zoo::MAX_N;
/// Decorations per elementary diagram in the rook suite.
pub const ROOK_MAX_DECORATIONS: usize = 3;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown name {0}")]
    Unknown(String),
    #[error("n = {n} outside 1..={max}")]
    Bound { n: usize, max: usize },
    #[error(transparent)]
    Zoo(#[from] ZooError),
}

/// Bimodules addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BimodWhich {
    N,
    S,
    Cn,
}

impl BimodWhich {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "N" => BimodWhich::N,
            "S" => BimodWhich::S,
            "Cn" => BimodWhich::Cn,
            _ => return None,
        })
    }
}

fn bound(n: usize, max: usize) -> Result<(), SuiteError> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(SuiteError::Bound { n, max })
    }
}

fn prefixed(prefix: &str, outcomes: Vec<CheckOutcome>) -> Vec<Case> {
    outcomes
        .into_iter()
        .map(|o| {
            let mut c = Case::from(o);
            c.name = format!("{prefix}: {}", c.name);
            c
        })
        .collect()
}

pub fn hopf() -> Vec<Case> {
    check_hopf_axioms()
        .into_iter()
        .map(|r| Case::new(format!("hopf: {}", r.axiom), r.checked, r.counterexample.filter(|_| !r.pass)))
        .collect()
}

/// Representation identities for every n in `1..=n`.
pub fn rep(n: usize) -> Result<Vec<Case>, SuiteError> {
    bound(n, MAX_N_REP)?;
    Ok((1..=n)
        .flat_map(|k| {
            verify_rep(k).into_iter().map(move |r| {
                let w = if r.pass { None } else { Some(r.counterexample.unwrap_or_else(|| "failed".into())) };
                Case::new(format!("rep n={k}: {}", r.name), r.checked, w)
            })
        })
        .collect())
}

/// Expected Hom-space dimensions of H(R_2), keyed by (source, target).
pub const HR2_HOM_DIMS: [(&str, &str, usize); 6] = [
    ("|00⟩", "|00⟩", 1),
    ("|01⟩", "|01⟩", 2),
    ("|10⟩", "|10⟩", 2),
    ("|01⟩", "|10⟩", 4),
    ("|11⟩", "|11⟩", 4),
    ("|10⟩", "|01⟩", 0),
];

fn hom_dims_case(h: &Algebra) -> Case {
    let mut bad = Vec::new();
    for (s, t, d) in HR2_HOM_DIMS {
        let v = |x: &str| BasisState::parse(x).expect("state").bits();
        let got = h.hom_dim(v(s), v(t));
        if got != d {
            bad.push(format!("Hom({s},{t}) = {got}, expected {d}"));
        }
    }
    Case::new("H(R_2) Hom dimensions", HR2_HOM_DIMS.len(), (!bad.is_empty()).then(|| bad.join("; ")))
}

pub fn algebra(which: Which, n: usize) -> Result<Vec<Case>, SuiteError> {
    if which.uses_n() {
        bound(n, MAX_N_ALG)?;
    }
    let alg = which.build(n)?;
    let mut out = prefixed(alg.name(), verify_algebra(&alg));
    out.push(Case::new(format!("{}: dimension", alg.name()), alg.dim(), None));
    if which == Which::HRn && n == 2 {
        out.push(hom_dims_case(&alg));
    }
    Ok(out)
}

/// Quasi-isomorphism checks for R_n → H(R_n), A⊠R_n → A⊗R_n and
/// A⊗R_n → A⊗H(R_n).
pub fn formality(n: usize) -> Result<Vec<Case>, SuiteError> {
    bound(n, MAX_N_ALG)?;
    let r = build_Rn(n)?;
    let h = build_HRn(n)?;
    let mut out = prefixed(&format!("g_{n}"), check_quasi_iso(&g_n(&r, &h)));
    let abox = build_AboxRn(n)?;
    let ao = build_AoRn(n)?;
    out.extend(prefixed(&format!("A⊠R_{n} → A⊗R_{n}"), check_quasi_iso(&projection(&abox, &ao))));
    let aoh = build_AoHRn(n)?;
    out.extend(prefixed(&format!("A⊗R_{n} → A⊗H(R_{n})"), check_quasi_iso(&id_tensor_g(&ao, &aoh))));
    Ok(out)
}

pub fn bimodule_cases(b: &DGBimodule, left: &Algebra, right: &Algebra) -> Vec<Case> {
    let mut out = prefixed(&b.name, verify_bimodule(b, left, right));
    let blocks: Vec<u32> = (0..b.blocks.len() as u32)
        .filter(|&v| quotient_tensor_size(b, left, right, v) <= TENSOR_BUDGET)
        .collect();
    let per_block = crate::par::map(&blocks, |&v| check_tensor_with(b, left, right, v));
    let failing = per_block.iter().find(|o| !o.pass).and_then(|o| o.witness.clone());
    out.push(Case::new(
        format!("{}: tensor product equals block ({} of {} blocks within budget)", b.name, blocks.len(), b.blocks.len()),
        per_block.iter().map(|o| o.checked).sum(),
        failing,
    ));
    out
}

pub fn bimodule(which: BimodWhich, n: usize) -> Result<Vec<Case>, SuiteError> {
    Ok(match which {
        BimodWhich::N => {
            let a = build_A();
            bimodule_cases(&build_N(&a), &a, &build_AoA())
        }
        BimodWhich::S => {
            let bb = build_B();
            bimodule_cases(&build_S(&bb), &bb, &build_A())
        }
        BimodWhich::Cn => {
            bound(n, MAX_N_CN)?;
            let h = build_HRn(n)?;
            let ar = build_AboxRn(n)?;
            let cn = build_Cn(&h, &ar);
            let mut b = cn.bimod;
            b.name = format!("C_{n}");
            bimodule_cases(&b, &h.alg, &ar.alg)
        }
    })
}

pub fn decat_cases(reports: &[DecatReport]) -> Vec<Case> {
    let mut out = Vec::new();
    for r in reports {
        for (kind, list) in [("", &r.cases), (" (aux)", &r.extra)] {
            for c in list.iter() {
                let w = (!c.pass).then(|| format!("expected {}\ncomputed {}", c.expected, c.computed));
                out.push(Case::new(format!("{}{kind}: {}", r.theorem, c.input), 1, w));
            }
        }
    }
    out
}

pub fn decat(n: usize) -> Result<Vec<Case>, SuiteError> {
    bound(n, MAX_N_CN)?;
    Ok(decat_cases(&decat::decat_suite(n)?))
}

pub fn rook(n: usize, seed: u64) -> Result<Vec<Case>, SuiteError> {
    bound(n, MAX_N_ALG)?;
    Ok(prefixed("rook", rook_suite(n, ROOK_MAX_DECORATIONS, seed)))
}

/// Hom-space dimensions of an algebra, one line per nonzero (source, target)
/// pair with its graded pieces.
pub fn dims(which: Which, n: usize) -> Result<String, SuiteError> {
    if which.uses_n() {
        bound(n, MAX_N_ALG)?;
    }
    let alg = which.build(n)?;
    let mut s = String::new();
    writeln!(s, "{}: dimension {}", alg.name(), alg.dim()).unwrap();
    let graded = alg.graded_dims();
    for (&(src, tgt), basis) in &alg.blocks() {
        let pieces: Vec<String> = graded
            .range((src, tgt, crate::foundation::Trigrade::new(i32::MIN, i32::MIN, i32::MIN))..)
            .take_while(|((a, b, _), _)| (*a, *b) == (src, tgt))
            .map(|((_, _, g), d)| format!("{d}@{g}"))
            .collect();
        writeln!(
            s,
            "  Hom({}, {}) = {}   [{}]",
            alg.pres.vertices[src as usize],
            alg.pres.vertices[tgt as usize],
            basis.len(),
            pieces.join(", ")
        )
        .unwrap();
    }
    Ok(s)
}

/// Everything at bound `n`: C_n and decat are capped at `MAX_N_CN`, the
/// representation suite runs up to `n` as well.
pub fn all(n: usize, seed: u64) -> Result<Vec<Case>, SuiteError> {
    let mut out = hopf();
    out.extend(rep(n.min(MAX_N_REP))?);
    for w in [Which::A, Which::AoA, Which::B, Which::Rn, Which::HRn, Which::AxRn] {
        out.extend(algebra(w, n)?);
    }
    out.extend(formality(n)?);
    for b in [BimodWhich::N, BimodWhich::S, BimodWhich::Cn] {
        out.extend(bimodule(b, n)?);
    }
    out.extend(decat(n)?);
    out.extend(rook(n, seed)?);
    Ok(out)
}
