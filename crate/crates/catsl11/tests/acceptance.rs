//! One PASS/FAIL line per acceptance criterion, with time limits pinned here.
//! Run with `cargo test --release --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use catsl11::report::Case;
use catsl11::suites::{self, BimodWhich, SuiteError};
use catsl11::zoo::Which;

const HOPF_LIMIT: Duration = Duration::from_secs(1);
const REP_LIMIT: Duration = Duration::from_secs(30);
const ALGEBRA_LIMIT: Duration = Duration::from_secs(300);
const FORMALITY_LIMIT: Duration = Duration::from_secs(300);
const BIMODULE_LIMIT: Duration = Duration::from_secs(600);
const DECAT_LIMIT: Duration = Duration::from_secs(120);
const ROOK_LIMIT: Duration = Duration::from_secs(120);

const REP_MAX_N: usize = 6;
const ALGEBRA_MAX_N: usize = 4;
const FORMALITY_MAX_N: usize = 3;
const CN_MAX_N: usize = 3;
const DECAT_MAX_N: usize = 4;
const ROOK_MAX_N: usize = 5;

fn criterion(
    name: &str,
    limit: Duration,
    extra: impl Fn(&[Case]) -> Option<String>,
    run: impl FnOnce() -> Result<Vec<Case>, SuiteError>,
) -> bool {
    let start = Instant::now();
    let res = run();
    let took = start.elapsed();
    let (ok, note) = match res {
        Err(e) => (false, format!("error: {e}")),
        Ok(cases) => {
            let failed: Vec<&str> = cases.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            let checked: usize = cases.iter().map(|c| c.checked).sum();
            if !failed.is_empty() {
                (false, format!("failing: {}", failed.join(", ")))
            } else if let Some(w) = extra(&cases) {
                (false, w)
            } else if took > limit {
                (false, format!("over the {limit:?} limit"))
            } else {
                (true, format!("{} cases, {checked} checked", cases.len()))
            }
        }
    };
    println!("{} {name} [{took:.2?} / {limit:?}] {note}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn none(_: &[Case]) -> Option<String> {
    None
}

fn checked_at_least(cases: &[Case], key: &str, min: usize) -> Option<String> {
    let got: usize = cases.iter().filter(|c| c.name.contains(key)).map(|c| c.checked).sum();
    (got < min).then(|| format!("{key}: {got} checked, need {min}"))
}

fn count_at_least(cases: &[Case], key: &str, min: usize) -> Option<String> {
    let got = cases.iter().filter(|c| c.name.starts_with(key)).count();
    (got < min).then(|| format!("{key}: {got} cases, need {min}"))
}

#[test]
fn acceptance() {
    let mut all = Vec::new();

    all.push(criterion(
        "hopf axioms on the basis",
        HOPF_LIMIT,
        |c| {
            checked_at_least(c, "multiplicativity", 16)
                .or_else(|| checked_at_least(c, "coassociativity", 4))
                .or_else(|| checked_at_least(c, "antipode", 4))
        },
        || Ok(suites::hopf()),
    ));

    all.push(criterion(
        &format!("representation identities n=1..{REP_MAX_N}"),
        REP_LIMIT,
        |c| (1..=REP_MAX_N).find_map(|k| count_at_least(c, &format!("rep n={k}:"), 1)),
        || suites::rep(REP_MAX_N),
    ));

    all.push(criterion(
        &format!("algebra structure n<={ALGEBRA_MAX_N}"),
        ALGEBRA_LIMIT,
        |c| count_at_least(c, "H(R_2) Hom dimensions", 1),
        || {
            let mut out = Vec::new();
            for w in [Which::A, Which::AoA, Which::B] {
                out.extend(suites::algebra(w, 1)?);
            }
            for n in 1..=ALGEBRA_MAX_N {
                for w in [Which::Rn, Which::HRn, Which::AxRn] {
                    out.extend(suites::algebra(w, n)?);
                }
            }
            Ok(out)
        },
    ));

    all.push(criterion(
        &format!("formality n<={FORMALITY_MAX_N}"),
        FORMALITY_LIMIT,
        none,
        || {
            let mut out = Vec::new();
            for n in 1..=FORMALITY_MAX_N {
                out.extend(suites::formality(n)?);
            }
            Ok(out)
        },
    ));

    all.push(criterion(
        &format!("bimodules N, S, C_n n<={CN_MAX_N}"),
        BIMODULE_LIMIT,
        none,
        || {
            let mut out = suites::bimodule(BimodWhich::N, 1)?;
            out.extend(suites::bimodule(BimodWhich::S, 1)?);
            for n in 1..=CN_MAX_N {
                out.extend(suites::bimodule(BimodWhich::Cn, n)?);
            }
            Ok(out)
        },
    ));

    all.push(criterion(
        &format!("decategorification n<={DECAT_MAX_N}"),
        DECAT_LIMIT,
        |c| {
            count_at_least(c, "multiplication: ", 16)
                .or_else(|| count_at_least(c, "comultiplication: ", 4))
                .or_else(|| count_at_least(c, "action: ", (1..=DECAT_MAX_N).map(|n| 4 << n).sum()))
        },
        || {
            let mut out = Vec::new();
            for n in 1..=DECAT_MAX_N {
                out.extend(suites::decat(n)?);
            }
            Ok(out)
        },
    ));

    all.push(criterion(
        &format!("rook calculus n<={ROOK_MAX_N}"),
        ROOK_LIMIT,
        none,
        || suites::rook(ROOK_MAX_N, 0),
    ));

    let passed = all.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria pass", all.len());
    assert!(all.iter().all(|&ok| ok));
}
