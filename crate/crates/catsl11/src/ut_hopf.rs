//! The Hopf superalgebra U_t as a rank-4 free module over Z[T^±] with
//! basis F, I, EF, E.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::foundation::{add_exp, add_i64, mul_i64, LaurentPoly, LaurentPoly2, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UtBasis {
    F,
    I,
    EF,
    E,
}

impl UtBasis {
    pub const ALL: [UtBasis; 4] = [UtBasis::F, UtBasis::I, UtBasis::EF, UtBasis::E];

    pub fn parity(self) -> i32 {
        match self {
            UtBasis::F => 1,
            UtBasis::I | UtBasis::EF => 0,
            UtBasis::E => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UtBasis::F => "F",
            UtBasis::I => "I",
            UtBasis::EF => "EF",
            UtBasis::E => "E",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }
}

impl fmt::Display for UtBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(-1)^(a*b)` for integer parities.
pub fn koszul_sign(a: i32, b: i32) -> i64 {
    if (a * b).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Element of U_t.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UtElt {
    coords: BTreeMap<UtBasis, LaurentPoly>,
}

impl UtElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: UtBasis) -> Self {
        Self::term(b, LaurentPoly::one(Var::T))
    }

    /// `coeff * T^exp * b`
    pub fn mono(b: UtBasis, coeff: i64, exp: i32) -> Self {
        Self::term(b, LaurentPoly::monomial(Var::T, coeff, exp))
    }

    pub fn term(b: UtBasis, p: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(b, &p);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, b: UtBasis) -> LaurentPoly {
        self.coords.get(&b).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::T))
    }

    pub fn terms(&self) -> impl Iterator<Item = (UtBasis, &LaurentPoly)> {
        self.coords.iter().map(|(&b, p)| (b, p))
    }

    pub fn add_term(&mut self, b: UtBasis, p: &LaurentPoly) {
        let mut c = self.coeff(b);
        c += p;
        if c.is_zero() {
            self.coords.remove(&b);
        } else {
            self.coords.insert(b, c.with_var(Var::T));
        }
    }

    pub fn add(&self, o: &UtElt) -> UtElt {
        let mut r = self.clone();
        for (b, p) in o.terms() {
            r.add_term(b, p);
        }
        r
    }

    pub fn sub(&self, o: &UtElt) -> UtElt {
        self.add(&o.scale(&LaurentPoly::monomial(Var::T, -1, 0)))
    }

    pub fn scale(&self, p: &LaurentPoly) -> UtElt {
        let mut r = UtElt::zero();
        for (b, q) in self.terms() {
            r.add_term(b, &(q * p));
        }
        r
    }
}

impl fmt::Display for UtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(b, p)| format!("({p})·{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Product of two basis elements.
fn basis_mul(a: UtBasis, b: UtBasis) -> UtElt {
    use UtBasis::*;
    let one_minus_t = LaurentPoly::from_terms(Var::T, [(0, 1), (1, -1)]);
    match (a, b) {
        (I, x) | (x, I) => UtElt::basis(x),
        (E, E) | (F, F) | (E, EF) | (EF, F) => UtElt::zero(),
        (E, F) => UtElt::basis(EF),
        // FE = I - T - EF
        (F, E) => UtElt::term(I, one_minus_t).sub(&UtElt::basis(EF)),
        (F, EF) => UtElt::term(F, one_minus_t),
        (EF, E) => UtElt::term(E, one_minus_t),
        (EF, EF) => UtElt::term(EF, one_minus_t),
    }
}

pub fn ut_mul(a: &UtElt, b: &UtElt) -> UtElt {
    let mut r = UtElt::zero();
    for (x, p) in a.terms() {
        for (y, q) in b.terms() {
            r = r.add(&basis_mul(x, y).scale(&(p * q)));
        }
    }
    r
}

/// Element of U_t ⊗ U_t; `T1`, `T2` stand for `T⊗I`, `I⊗T`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UtTensorElt {
    coords: BTreeMap<(UtBasis, UtBasis), LaurentPoly2>,
}

impl UtTensorElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn mono(a: UtBasis, b: UtBasis, coeff: i64, e1: i32, e2: i32) -> Self {
        let mut r = Self::zero();
        r.add_term(a, b, &LaurentPoly2::monomial(coeff, e1, e2));
        r
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, a: UtBasis, b: UtBasis) -> LaurentPoly2 {
        self.coords.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((UtBasis, UtBasis), &LaurentPoly2)> {
        self.coords.iter().map(|(&k, p)| (k, p))
    }

    pub fn add_term(&mut self, a: UtBasis, b: UtBasis, p: &LaurentPoly2) {
        let c = &self.coeff(a, b) + p;
        if c.is_zero() {
            self.coords.remove(&(a, b));
        } else {
            self.coords.insert((a, b), c);
        }
    }

    pub fn add(&self, o: &UtTensorElt) -> UtTensorElt {
        let mut r = self.clone();
        for ((a, b), p) in o.terms() {
            r.add_term(a, b, p);
        }
        r
    }

    pub fn sub(&self, o: &UtTensorElt) -> UtTensorElt {
        let mut r = self.clone();
        for ((a, b), p) in o.terms() {
            r.add_term(a, b, &p.scale(-1));
        }
        r
    }

    fn to_multi(&self) -> MultiTensor {
        let mut m = MultiTensor::zero(2);
        for ((a, b), p) in self.terms() {
            for ((e1, e2), c) in p.terms() {
                m.add_term(vec![a, b], vec![e1, e2], c);
            }
        }
        m
    }

    fn from_multi(m: &MultiTensor) -> Self {
        assert_eq!(m.factors, 2);
        let mut r = Self::zero();
        for ((bs, es), c) in &m.terms {
            r.add_term(bs[0], bs[1], &LaurentPoly2::monomial(*c, es[0], es[1]));
        }
        r
    }
}

impl fmt::Display for UtTensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms().map(|((a, b), p)| format!("({p})·{a}⊗{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of an iterated tensor power of U_t; each factor carries its own
/// copy of T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTensor {
    pub factors: usize,
    pub terms: BTreeMap<(Vec<UtBasis>, Vec<i32>), i64>,
}

impl MultiTensor {
    pub fn zero(factors: usize) -> Self {
        MultiTensor { factors, terms: BTreeMap::new() }
    }

    pub fn from_elt(a: &UtElt) -> Self {
        let mut m = Self::zero(1);
        for (b, p) in a.terms() {
            for (e, c) in p.terms() {
                m.add_term(vec![b], vec![e], c);
            }
        }
        m
    }

    pub fn add_term(&mut self, bs: Vec<UtBasis>, es: Vec<i32>, c: i64) {
        if c == 0 {
            return;
        }
        let key = (bs, es);
        let v = add_i64(self.terms.get(&key).copied().unwrap_or(0), c);
        if v == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Koszul-signed product.
    pub fn mul(&self, o: &MultiTensor) -> MultiTensor {
        assert_eq!(self.factors, o.factors);
        let mut r = MultiTensor::zero(self.factors);
        for ((b1, e1), c1) in &self.terms {
            for ((b2, e2), c2) in &o.terms {
                // sign from moving b2[j] past b1[l] for l > j
                let mut sign = 1;
                for j in 0..self.factors {
                    for l in (j + 1)..self.factors {
                        sign *= koszul_sign(b2[j].parity(), b1[l].parity());
                    }
                }
                let mut acc: Vec<(Vec<UtBasis>, Vec<i32>, i64)> =
                    vec![(Vec::new(), Vec::new(), mul_i64(mul_i64(*c1, *c2), sign))];
                for j in 0..self.factors {
                    let prod = basis_mul(b1[j], b2[j]);
                    let mut next = Vec::new();
                    for (bs, es, c) in &acc {
                        for (b, p) in prod.terms() {
                            for (e, pc) in p.terms() {
                                let mut bs2 = bs.clone();
                                bs2.push(b);
                                let mut es2 = es.clone();
                                es2.push(add_exp(add_exp(e1[j], e2[j]), e));
                                next.push((bs2, es2, mul_i64(*c, pc)));
                            }
                        }
                    }
                    acc = next;
                }
                for (bs, es, c) in acc {
                    r.add_term(bs, es, c);
                }
            }
        }
        r
    }

    /// Apply the comultiplication to factor `pos`.
    pub fn comul_at(&self, pos: usize) -> MultiTensor {
        let mut r = MultiTensor::zero(self.factors + 1);
        for ((bs, es), c) in &self.terms {
            let d = ut_comul(&UtElt::basis(bs[pos]));
            for ((a, b), p) in d.terms() {
                for ((f1, f2), pc) in p.terms() {
                    let mut nb = bs[..pos].to_vec();
                    nb.extend([a, b]);
                    nb.extend_from_slice(&bs[pos + 1..]);
                    let mut ne = es[..pos].to_vec();
                    ne.extend([add_exp(es[pos], f1), add_exp(es[pos], f2)]);
                    ne.extend_from_slice(&es[pos + 1..]);
                    r.add_term(nb, ne, mul_i64(*c, pc));
                }
            }
        }
        r
    }
}

pub fn ut_comul(a: &UtElt) -> UtTensorElt {
    use UtBasis::*;
    let de = UtTensorElt::mono(E, I, 1, 0, 0).add(&UtTensorElt::mono(I, E, 1, 0, 0));
    let df = UtTensorElt::mono(F, I, 1, 0, 1).add(&UtTensorElt::mono(I, F, 1, 0, 0));
    let mut r = UtTensorElt::zero();
    for (b, p) in a.terms() {
        let image = match b {
            I => UtTensorElt::mono(I, I, 1, 0, 0),
            E => de.clone(),
            F => df.clone(),
            EF => ut_tensor_mul(&de, &df),
        };
        for (e, c) in p.terms() {
            // T ↦ T1 T2
            for ((x, y), q) in image.terms() {
                r.add_term(x, y, &q.shift(e, e).scale(c));
            }
        }
    }
    r
}

pub fn ut_tensor_mul(u: &UtTensorElt, v: &UtTensorElt) -> UtTensorElt {
    UtTensorElt::from_multi(&u.to_multi().mul(&v.to_multi()))
}

/// The counit, an algebra map to Z with `T ↦ 1`.
pub fn ut_counit(a: &UtElt) -> LaurentPoly {
    let mut r = LaurentPoly::zero(Var::T);
    for (b, p) in a.terms() {
        if b == UtBasis::I {
            r.add_term(0, p.eval_one());
        }
    }
    r
}

fn basis_antipode(b: UtBasis) -> UtElt {
    use UtBasis::*;
    match b {
        I => UtElt::basis(I),
        E => UtElt::mono(E, -1, 0),
        F => UtElt::mono(F, -1, -1),
        EF => {
            let sign = koszul_sign(E.parity(), F.parity());
            ut_mul(&basis_antipode(F), &basis_antipode(E))
                .scale(&LaurentPoly::monomial(Var::T, sign, 0))
        }
    }
}

pub fn ut_antipode(a: &UtElt) -> UtElt {
    let mut r = UtElt::zero();
    for (b, p) in a.terms() {
        r = r.add(&basis_antipode(b).scale(&p.substitute_power(Var::T, -1)));
    }
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub checked: usize,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// Inputs used for the axiom checks: every basis element and its T-multiple.
fn axiom_inputs() -> Vec<UtElt> {
    UtBasis::ALL
        .iter()
        .flat_map(|&b| [UtElt::basis(b), UtElt::mono(b, 1, 1)])
        .collect()
}

fn collapse(m: &MultiTensor) -> UtElt {
    // multiply the factors of a 2-fold tensor back together, T_i ↦ T
    let mut r = UtElt::zero();
    for ((bs, es), c) in &m.terms {
        let prod = ut_mul(&UtElt::basis(bs[0]), &UtElt::basis(bs[1]));
        let e = add_exp(es[0], es[1]);
        r = r.add(&prod.scale(&LaurentPoly::monomial(Var::T, *c, e)));
    }
    r
}

fn apply_first(m: &MultiTensor, f: impl Fn(&UtElt) -> UtElt, second: bool) -> MultiTensor {
    let mut r = MultiTensor::zero(2);
    let slot = usize::from(second);
    for ((bs, es), c) in &m.terms {
        let x = UtElt::mono(bs[slot], *c, es[slot]);
        for (b, p) in f(&x).terms() {
            for (e, pc) in p.terms() {
                let mut nb = bs.clone();
                let mut ne = es.clone();
                nb[slot] = b;
                ne[slot] = e;
                r.add_term(nb, ne, pc);
            }
        }
    }
    r
}

/// Exhaustive check of the Hopf superalgebra axioms.
pub fn check_hopf_axioms() -> Vec<AxiomResult> {
    let inputs = axiom_inputs();
    let mut out = Vec::new();

    let mut fail = None;
    let mut n = 0;
    for a in UtBasis::ALL {
        for b in UtBasis::ALL {
            let (a, b) = (UtElt::basis(a), UtElt::basis(b));
            n += 1;
            let lhs = ut_comul(&ut_mul(&a, &b));
            let rhs = ut_tensor_mul(&ut_comul(&a), &ut_comul(&b));
            if lhs != rhs && fail.is_none() {
                fail = Some(format!("Δ({a}·{b}) = {lhs} but Δ({a})Δ({b}) = {rhs}"));
            }
        }
    }
    out.push(AxiomResult { axiom: "multiplicativity", checked: n, pass: fail.is_none(), counterexample: fail });

    let mut fail = None;
    for a in &inputs {
        let d = MultiTensor::from_elt(a).comul_at(0);
        let (l, r) = (d.comul_at(0), d.comul_at(1));
        if l != r && fail.is_none() {
            fail = Some(format!("coassociativity fails on {a}"));
        }
    }
    out.push(AxiomResult { axiom: "coassociativity", checked: inputs.len(), pass: fail.is_none(), counterexample: fail });

    let mut fail = None;
    for a in &inputs {
        let d = ut_comul(a).to_multi();
        for second in [false, true] {
            // (ε⊗id)Δ and (id⊗ε)Δ
            let mut r = UtElt::zero();
            for ((bs, es), c) in &d.terms {
                let (keep, drop) = if second { (0, 1) } else { (1, 0) };
                let eps = ut_counit(&UtElt::mono(bs[drop], *c, es[drop]));
                r = r.add(&UtElt::mono(bs[keep], 1, es[keep]).scale(&eps));
            }
            if &r != a && fail.is_none() {
                fail = Some(format!("counit axiom fails on {a}: got {r}"));
            }
        }
    }
    out.push(AxiomResult { axiom: "counit", checked: inputs.len(), pass: fail.is_none(), counterexample: fail });

    let mut fail = None;
    for a in &inputs {
        let d = ut_comul(a).to_multi();
        let expected = UtElt::term(UtBasis::I, ut_counit(a));
        let left = collapse(&apply_first(&d, ut_antipode, false));
        let right = collapse(&apply_first(&d, ut_antipode, true));
        if (left != expected || right != expected) && fail.is_none() {
            fail = Some(format!("antipode axiom fails on {a}: {left} / {right}"));
        }
    }
    out.push(AxiomResult { axiom: "antipode", checked: inputs.len(), pass: fail.is_none(), counterexample: fail });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use UtBasis::*;

    #[test]
    fn table_examples() {
        assert_eq!(ut_mul(&UtElt::basis(E), &UtElt::basis(F)), UtElt::basis(EF));
        let fe = UtElt::basis(I).sub(&UtElt::mono(I, 1, 1)).sub(&UtElt::basis(EF));
        assert_eq!(ut_mul(&UtElt::basis(F), &UtElt::basis(E)), fe);
        assert!(ut_mul(&UtElt::basis(E), &UtElt::basis(E)).is_zero());
    }

    #[test]
    fn comul_examples() {
        let d = ut_comul(&UtElt::basis(EF));
        let expected = UtTensorElt::mono(EF, I, 1, 0, 1)
            .add(&UtTensorElt::mono(E, F, 1, 0, 0))
            .add(&UtTensorElt::mono(F, E, -1, 0, 1))
            .add(&UtTensorElt::mono(I, EF, 1, 0, 0));
        assert_eq!(d, expected);
    }

    #[test]
    fn axioms() {
        for r in check_hopf_axioms() {
            assert!(r.pass, "{:?}", r);
        }
    }
}
