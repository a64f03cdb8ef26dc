//! The tensor representations V₁^⊗n of U_t.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::foundation::{LaurentPoly, ParseError, Var};
use crate::ut_hopf::{koszul_sign, MultiTensor, UtBasis, UtElt};

/// A basis state of V₁^⊗n. Position `p` (1-indexed) is stored at bit `n - p`,
/// so the integer order of `bits` is the order of the bitstring read as a
/// binary number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    n: u8,
    bits: u32,
}

impl BasisState {
    pub fn new(n: usize, bits: u32) -> Self {
        assert!((1..=30).contains(&n), "n out of range");
        assert!(bits < (1 << n));
        BasisState { n: n as u8, bits }
    }

    pub fn all(n: usize) -> impl Iterator<Item = BasisState> {
        (0..(1u32 << n)).map(move |b| BasisState::new(n, b))
    }

    pub fn from_positions(n: usize, pos: &[usize]) -> Self {
        let mut bits = 0;
        for &p in pos {
            assert!((1..=n).contains(&p), "position {p} out of range");
            bits |= 1 << (n - p);
        }
        let s = BasisState::new(n, bits);
        assert_eq!(s.k(), pos.len(), "repeated position");
        s
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn k(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn occupied(self, p: usize) -> bool {
        self.bits >> (self.n() - p) & 1 == 1
    }

    /// Increasing sequence of occupied positions x₁ < … < x_k.
    pub fn positions(self) -> Vec<usize> {
        (1..=self.n()).filter(|&p| self.occupied(p)).collect()
    }

    /// Increasing sequence of empty positions x̄.
    pub fn complement(self) -> Vec<usize> {
        (1..=self.n()).filter(|&p| !self.occupied(p)).collect()
    }

    /// `x_i`, 1-indexed.
    pub fn x(self, i: usize) -> usize {
        self.positions()[i - 1]
    }

    /// `x̄_j`, 1-indexed.
    pub fn xbar(self, j: usize) -> usize {
        self.complement()[j - 1]
    }

    /// Number of occupied positions below `p`.
    pub fn count_below(self, p: usize) -> usize {
        (1..p).filter(|&q| self.occupied(q)).count()
    }

    pub fn with(self, p: usize) -> Self {
        assert!(!self.occupied(p));
        BasisState::new(self.n(), self.bits | 1 << (self.n() - p))
    }

    pub fn without(self, p: usize) -> Self {
        assert!(self.occupied(p));
        BasisState::new(self.n(), self.bits & !(1 << (self.n() - p)))
    }

    /// Move the strand at position `from` to the empty position `to`.
    pub fn moved(self, from: usize, to: usize) -> Self {
        self.without(from).with(to)
    }

    pub fn bitstring(self) -> String {
        (1..=self.n()).map(|p| if self.occupied(p) { '1' } else { '0' }).collect()
    }

    /// Parse `|0110⟩` (a trailing `>` is accepted too).
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::State(s.to_string());
        let body = s.trim().strip_prefix('|').ok_or_else(bad)?;
        let body = body.strip_suffix('⟩').or_else(|| body.strip_suffix('>')).ok_or_else(bad)?;
        if body.is_empty() || body.len() > 30 {
            return Err(bad());
        }
        let mut bits = 0;
        for c in body.chars() {
            bits = bits << 1
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(bad()),
                };
        }
        Ok(BasisState::new(body.len(), bits))
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩", self.bitstring())
    }
}

impl Serialize for BasisState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// β(x, p) = #{x_l < p} + 2 #{x_l > p}, for an empty position `p`.
pub fn beta(x: BasisState, p: usize) -> Result<usize, ParseError> {
    if p == 0 || p > x.n() || x.occupied(p) {
        return Err(ParseError::State(format!("position {p} is not empty in {x}")));
    }
    let below = x.count_below(p);
    Ok(below + 2 * (x.k() - below))
}

/// Element of V₁^⊗n.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VnElt {
    coords: BTreeMap<BasisState, LaurentPoly>,
}

impl VnElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: BasisState) -> Self {
        Self::term(x, LaurentPoly::one(Var::Small))
    }

    pub fn term(x: BasisState, p: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(x, &p);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, x: BasisState) -> LaurentPoly {
        self.coords.get(&x).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::Small))
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisState, &LaurentPoly)> {
        self.coords.iter().map(|(&x, p)| (x, p))
    }

    pub fn add_term(&mut self, x: BasisState, p: &LaurentPoly) {
        let mut c = self.coeff(x);
        c += p;
        if c.is_zero() {
            self.coords.remove(&x);
        } else {
            self.coords.insert(x, c.with_var(Var::Small));
        }
    }

    pub fn add(&self, o: &VnElt) -> VnElt {
        let mut r = self.clone();
        for (x, p) in o.terms() {
            r.add_term(x, p);
        }
        r
    }

    pub fn scale(&self, p: &LaurentPoly) -> VnElt {
        let mut r = VnElt::zero();
        for (x, q) in self.terms() {
            r.add_term(x, &(q * p));
        }
        r
    }

    /// Apply a linear operator given on basis states.
    pub fn map(&self, f: impl Fn(BasisState) -> VnElt) -> VnElt {
        let mut r = VnElt::zero();
        for (x, p) in self.terms() {
            r = r.add(&f(x).scale(p));
        }
        r
    }
}

impl fmt::Display for VnElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(x, p)| format!("({p})·{x}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn t_mono(c: i64, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(Var::Small, c, e)
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn act_f(x: BasisState) -> VnElt {
    let n = x.n();
    let mut r = VnElt::zero();
    for p in x.complement() {
        let b = beta(x, p).expect("empty position");
        r.add_term(x.with(p), &t_mono(sign(b), (n - p) as i32));
    }
    r
}

pub fn act_e(x: BasisState) -> VnElt {
    let one_minus_t = LaurentPoly::from_terms(Var::Small, [(0, 1), (1, -1)]);
    let mut r = VnElt::zero();
    for (i, p) in x.positions().into_iter().enumerate() {
        // (-1)^(1-i) with i 1-indexed
        r.add_term(x.without(p), &one_minus_t.scale(sign(i)));
    }
    r
}

pub fn act_t(v: &VnElt, n: usize) -> VnElt {
    v.scale(&t_mono(1, n as i32))
}

/// Action of a U_t basis element on a basis state; EF acts as E∘F.
pub fn act_basis(b: UtBasis, x: BasisState) -> VnElt {
    match b {
        UtBasis::I => VnElt::basis(x),
        UtBasis::E => act_e(x),
        UtBasis::F => act_f(x),
        UtBasis::EF => act_f(x).map(act_e),
    }
}

/// Action of `a` on `v`, with T acting as tⁿ.
pub fn act(a: &UtElt, v: &VnElt, n: usize) -> VnElt {
    let mut r = VnElt::zero();
    for (b, p) in a.terms() {
        let coeff = p.substitute_power(Var::Small, n as i32);
        r = r.add(&v.map(|x| act_basis(b, x)).scale(&coeff));
    }
    r
}

/// Independent route: act through the (n-1)-fold iterated comultiplication
/// on V₁ ⊗ … ⊗ V₁ with the graded sign rule.
pub fn act_iterated(b: UtBasis, x: BasisState) -> VnElt {
    let n = x.n();
    let mut d = MultiTensor::from_elt(&UtElt::basis(b));
    for _ in 1..n {
        d = d.comul_at(d.factors - 1);
    }
    let mut r = VnElt::zero();
    let bits: Vec<bool> = (1..=n).map(|p| x.occupied(p)).collect();
    for ((bs, es), c) in &d.terms {
        let mut coeff = t_mono(*c, es.iter().sum());
        let mut sgn = 1;
        for j in 0..n {
            for l in 0..j {
                sgn *= koszul_sign(bs[j].parity(), i32::from(bits[l]));
            }
        }
        coeff = coeff.scale(sgn);
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            // action on V₁: E|1⟩ = (1-t)|0⟩, F|0⟩ = |1⟩
            match (bs[j], bits[j]) {
                (UtBasis::I, v) => out.push(v),
                (UtBasis::F, false) => out.push(true),
                (UtBasis::E, true) => {
                    coeff = &coeff * &LaurentPoly::from_terms(Var::Small, [(0, 1), (1, -1)]);
                    out.push(false)
                }
                (UtBasis::EF, false) => {
                    coeff = &coeff * &LaurentPoly::from_terms(Var::Small, [(0, 1), (1, -1)]);
                    out.push(false)
                }
                _ => {
                    coeff = LaurentPoly::zero(Var::Small);
                    break;
                }
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let pos: Vec<usize> = (1..=n).filter(|&p| out[p - 1]).collect();
        r.add_term(BasisState::from_positions(n, &pos), &coeff);
    }
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct RepCheck {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// Operator identities on every basis state of V₁^⊗n, plus agreement of the
/// closed-form action with the iterated-comultiplication route.
pub fn verify_rep(n: usize) -> Vec<RepCheck> {
    let states: Vec<BasisState> = BasisState::all(n).collect();
    let tn = t_mono(1, n as i32);
    let one_minus_tn = &LaurentPoly::one(Var::Small) - &tn;
    type Check = (&'static str, Box<dyn Fn(BasisState) -> bool + Sync + Send>);
    let checks: Vec<Check> = vec![
        ("E^2 = 0", Box::new(|x| act_e(x).map(act_e).is_zero())),
        ("F^2 = 0", Box::new(|x| act_f(x).map(act_f).is_zero())),
        (
            "EF + FE = 1 - t^n",
            Box::new(move |x| {
                let lhs = act_f(x).map(act_e).add(&act_e(x).map(act_f));
                lhs == VnElt::term(x, one_minus_tn.clone())
            }),
        ),
        ("T = t^n", Box::new(move |x| act(&UtElt::mono(UtBasis::I, 1, 1), &VnElt::basis(x), n) == VnElt::term(x, tn.clone()))),
        (
            "ET = TE, FT = TF",
            Box::new(move |x| {
                let t = |v: &VnElt| act_t(v, n);
                act_e(x).map(|y| t(&VnElt::basis(y))) == t(&act_e(x))
                    && act_f(x).map(|y| t(&VnElt::basis(y))) == t(&act_f(x))
            }),
        ),
        (
            "closed form = iterated comultiplication",
            Box::new(|x| UtBasis::ALL.iter().all(|&b| act_basis(b, x) == act_iterated(b, x))),
        ),
    ];
    checks
        .iter()
        .map(|(name, f)| {
            let bad = crate::par::find_first(states.len(), |i| (!f(states[i])).then_some(states[i]));
            RepCheck {
                name: name.to_string(),
                checked: states.len(),
                pass: bad.is_none(),
                counterexample: bad.map(|x| format!("fails at {x}")),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> BasisState {
        BasisState::parse(s).unwrap()
    }

    #[test]
    fn encoding() {
        let x = st("|0110⟩");
        assert_eq!(x.positions(), vec![2, 3]);
        assert_eq!(x.complement(), vec![1, 4]);
        assert_eq!(x.to_string(), "|0110⟩");
        assert_eq!(BasisState::from_positions(4, &[2, 3]), x);
        let order: Vec<String> = BasisState::all(2).map(|s| s.to_string()).collect();
        assert_eq!(order, ["|00⟩", "|01⟩", "|10⟩", "|11⟩"]);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(st("|011⟩"), 1), Ok(4));
        assert_eq!(beta(st("|00⟩"), 1), Ok(0));
        assert_eq!(beta(st("|10⟩"), 2), Ok(1));
        assert!(beta(st("|10⟩"), 1).is_err());
    }
}
