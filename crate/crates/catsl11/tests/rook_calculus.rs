//! Decorated rook diagrams: parameters, resolutions, relations, d² = 0.

use catsl11::foundation::Bigrade;
use catsl11::rook::*;
use catsl11::vn_rep::BasisState;
use proptest::prelude::*;

fn st(s: &str) -> BasisState {
    BasisState::parse(s).unwrap()
}

fn mv(x: BasisState, m: usize, p: usize) -> RookGen {
    RookGen::Move(make_elementary(x, m, p).unwrap())
}

fn lp(x: BasisState, i: usize) -> RookGen {
    RookGen::Loop(LoopGen::new(x, i).unwrap())
}

fn word(x: BasisState, gens: Vec<RookGen>) -> DiagramWord {
    DiagramWord::new(x, gens).unwrap()
}

#[test]
fn caption_vector_fits_shifted_state() {
    // v = (2,1,0,0), i = 1, s1 = 3 is realized by x = (4,6,7,8) with the strand at 8 moving to 1
    let d = make_elementary(BasisState::from_positions(8, &[4, 6, 7, 8]), 4, 1).unwrap();
    assert_eq!((d.i(), d.s1(), d.v(), d.s0()), (1, 3, vec![2, 1, 0, 0], 3));
    assert_eq!(d.grade(), Bigrade::new(-2, 4));
    // the state printed next to it gives a different vector
    let d = make_elementary(BasisState::from_positions(7, &[3, 5, 6, 7]), 4, 1).unwrap();
    assert_eq!((d.i(), d.s1(), d.v(), d.s0()), (1, 3, vec![1, 1, 0, 0], 2));
}

#[test]
fn grade_formula() {
    assert_eq!(lp(st("|1⟩"), 1).grade(), Bigrade::new(-1, -1));
    assert_eq!(mv(st("|01⟩"), 1, 1).grade(), Bigrade::new(1, 1));
    assert_eq!(mv(st("|001⟩"), 1, 1).grade(), Bigrade::new(1, 2));
    assert_eq!(mv(st("|011⟩"), 2, 1).grade(), Bigrade::new(0, 1));
}

#[test]
fn bad_diagrams_rejected() {
    assert_eq!(make_elementary(st("|011⟩"), 3, 1), Err(RookError::Strand(3)));
    assert_eq!(make_elementary(st("|011⟩"), 2, 2), Err(RookError::Target(2)));
    assert_eq!(make_elementary(st("|011⟩"), 1, 2), Err(RookError::Target(2)));
    assert!(LoopGen::new(st("|010⟩"), 2).is_err());
}

#[test]
fn marking_resolution_example() {
    let x = st("|001⟩");
    let d = make_elementary(x, 1, 1).unwrap();
    assert_eq!(d.markings(), vec![2]);
    let w = resolve_marking(&d, 2).unwrap();
    assert_eq!(w, word(x, vec![mv(x, 1, 2), mv(st("|010⟩"), 1, 1)]));
    assert_eq!(resolve_marking(&d, 3), Err(RookError::NotMarked(3)));
}

#[test]
fn crossing_resolution_example() {
    let (x, z, y) = (st("|011⟩"), st("|101⟩"), st("|110⟩"));
    let d = make_elementary(x, 2, 1).unwrap();
    assert_eq!(d.crossed(), vec![1]);
    let [a, b] = resolve_crossing(&d, 1).unwrap();
    assert_eq!(a, word(x, vec![lp(x, 1), mv(x, 1, 1), mv(z, 2, 2)]));
    assert_eq!(b, word(x, vec![mv(x, 1, 1), mv(z, 2, 2), lp(y, 2)]));
}

#[test]
fn one_marking_one_crossing_has_three_terms() {
    let d = make_elementary(st("|0101⟩"), 2, 1).unwrap();
    assert_eq!((d.s1(), d.s0()), (1, 1));
    assert_eq!(differential_gen(&RookGen::Move(d)).len(), 3);
}

#[test]
fn crossing_resolution_in_r3() {
    assert!(check_crossing_resolution().pass);
    let mut rc = RookCalculus::new(3);
    let d = rc.d(&word(st("|011⟩"), vec![mv(st("|011⟩"), 2, 1)]));
    assert_eq!(d.len(), 2);
}

#[test]
fn crossing_inequalities() {
    let o = check_crossing_inequalities();
    assert!(o.pass, "{:?}", o.witness);
}

#[test]
fn loop_relations() {
    let mut rc = RookCalculus::new(3);
    let x = st("|011⟩");
    assert_eq!(rc.word_normal_form(&word(x, vec![lp(x, 1), lp(x, 1)])).unwrap(), None);
    let a = rc.word_normal_form(&word(x, vec![lp(x, 1), lp(x, 2)])).unwrap();
    let b = rc.word_normal_form(&word(x, vec![lp(x, 2), lp(x, 1)])).unwrap();
    assert!(a.is_some());
    assert_eq!(a, b);
}

#[test]
fn loop_slides_over_crossing() {
    let mut rc = RookCalculus::new(3);
    let (x, y) = (st("|011⟩"), st("|110⟩"));
    let a = rc.word_normal_form(&word(x, vec![lp(x, 1), mv(x, 2, 1)])).unwrap();
    let b = rc.word_normal_form(&word(x, vec![mv(x, 2, 1), lp(y, 2)])).unwrap();
    assert!(a.is_some());
    assert_eq!(a, b);
}

#[test]
fn disjoint_moves_commute() {
    let mut rc = RookCalculus::new(4);
    let x = st("|0101⟩");
    let a = word(x, vec![mv(x, 1, 1), mv(st("|1001⟩"), 2, 3)]);
    let b = word(x, vec![mv(x, 2, 3), mv(st("|0110⟩"), 1, 1)]);
    assert_eq!(rc.word_normal_form(&a).unwrap(), rc.word_normal_form(&b).unwrap());
}

#[test]
fn words_must_compose() {
    let x = st("|01⟩");
    assert_eq!(DiagramWord::new(x, vec![mv(x, 1, 1), mv(x, 1, 1)]), Err(RookError::Chain(1)));
}

#[test]
fn exhaustive_conservation_and_d_squared() {
    for n in 1..=5 {
        let o = check_decoration_conservation(n, 3);
        assert!(o.pass, "{:?}", o.witness);
        let mut rc = RookCalculus::new(n);
        let o = check_d_squared(&mut rc, 3);
        assert!(o.pass, "{:?}", o.witness);
    }
    // frozen diagram counts with at most 3 decorations
    let counts: Vec<usize> = (1..=5).map(|n| decorated_diagrams(n, 3).len()).collect();
    assert_eq!(counts, vec![0, 1, 6, 24, 80]);
}

#[test]
fn confluence_smoke() {
    let o = check_confluence(4, 10_000, 11);
    assert!(o.pass, "{:?}", o.witness);
}

#[test]
fn failing_diagram_witness_draws_it() {
    let d = make_elementary(st("|0101⟩"), 2, 1).unwrap();
    let pic = d.render();
    assert_eq!(pic.lines().count(), 3);
    assert_eq!(pic.lines().last().unwrap(), ".1.1");
    assert_eq!(pic.lines().next().unwrap(), "11..");
}

fn any_word(n: usize) -> impl Strategy<Value = DiagramWord> {
    (0u32..(1 << n), proptest::collection::vec(any::<usize>(), 1..4)).prop_map(move |(bits, picks)| {
        let gens = all_generators(n, false);
        let mut cur = BasisState::new(n, bits);
        let mut out = Vec::new();
        for p in picks {
            let opts: Vec<RookGen> = gens.iter().copied().filter(|g| g.src() == cur).collect();
            if opts.is_empty() {
                break;
            }
            let g = opts[p % opts.len()];
            out.push(g);
            cur = g.tgt();
        }
        DiagramWord::new(BasisState::new(n, bits), out).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_on_words(w in any_word(4)) {
        let mut rc = RookCalculus::new(4);
        let mut counts = std::collections::HashMap::new();
        for t in rc.d(&w) {
            for u in rc.d(&t) {
                *counts.entry(u).or_insert(0usize) += 1;
            }
        }
        prop_assert!(counts.values().all(|c| c % 2 == 0));
    }

    #[test]
    fn d_raises_grade(w in any_word(4)) {
        let target = w.grade() + Bigrade::new(1, 0);
        for t in differential_word(&w) {
            prop_assert_eq!(t.grade(), target);
            prop_assert_eq!(t.target(), w.target());
        }
    }

    #[test]
    fn normal_form_is_idempotent(w in any_word(4)) {
        let mut rc = RookCalculus::new(4);
        if let Some(nf) = rc.word_normal_form(&w).unwrap() {
            prop_assert_eq!(rc.word_normal_form(&nf).unwrap(), Some(nf.clone()));
        }
    }
}
