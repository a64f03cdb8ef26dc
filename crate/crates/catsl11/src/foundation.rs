//! Exact scalars and grading bookkeeping.
//!
//! Integer coefficients use checked `i64` arithmetic: any overflow panics
//! instead of wrapping, so an identity can never pass by accident.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The two-element field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2(pub bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);
}

impl Add for F2 {
    type Output = F2;
    fn add(self, o: F2) -> F2 {
        F2(self.0 ^ o.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    fn mul(self, o: F2) -> F2 {
        F2(self.0 & o.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed term `{0}`")]
    Term(String),
    #[error("unexpected variable `{found}`, expected `{expected}`")]
    Variable { found: String, expected: String },
    #[error("malformed basis state `{0}`")]
    State(String),
}

pub(crate) fn add_i64(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in exact arithmetic")
}

pub(crate) fn mul_i64(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in exact arithmetic")
}

pub(crate) fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("exponent overflow")
}

/// Name of the polynomial variable; only affects printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    /// The central element of U_t.
    T,
    /// The grading variable of the representations.
    #[serde(rename = "t")]
    Small,
}

impl Var {
    fn symbol(self) -> &'static str {
        match self {
            Var::T => "T",
            Var::Small => "t",
        }
    }
}

/// Integer Laurent polynomial in one variable.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    var: Var,
    coeffs: BTreeMap<i32, i64>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, coeffs: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn monomial(var: Var, coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero(var);
        if coeff != 0 {
            p.coeffs.insert(exp, coeff);
        }
        p
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = add_i64(self.coeff(exp), coeff);
        if c == 0 {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, c);
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, a)| (e, mul_i64(a, c))))
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, a)| (add_exp(e, k), a)))
    }

    /// Substitute `var ↦ new_var^k` (k may be negative).
    pub fn substitute_power(&self, new_var: Var, k: i32) -> Self {
        let terms = self.terms().map(|(e, a)| (e.checked_mul(k).expect("exponent overflow"), a));
        Self::from_terms(new_var, terms)
    }

    /// Value at `var = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms().fold(0, |acc, (_, c)| add_i64(acc, c))
    }

    /// Parse the canonical text form, e.g. `1 - t^2` or `-T^-1 + 3T`.
    pub fn parse(var: Var, s: &str) -> Result<Self, ParseError> {
        let sym = var.symbol();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero(var));
        }
        let mut p = Self::zero(var);
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (neg, body) = if let Some(r) = rest.strip_prefix('-') {
                (true, r)
            } else if let Some(r) = rest.strip_prefix('+') {
                (false, r)
            } else if first {
                (false, rest)
            } else {
                return Err(ParseError::Term(rest.to_string()));
            };
            first = false;
            // a term ends at the next sign that is not part of an exponent
            let bytes = body.as_bytes();
            let mut end = bytes.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                    end = i;
                    break;
                }
            }
            let term = &body[..end];
            rest = &body[end..];
            let (c, e) = parse_term(term, sym)?;
            p.add_term(e, if neg { -c } else { c });
        }
        Ok(p)
    }
}

fn parse_term(term: &str, sym: &str) -> Result<(i64, i32), ParseError> {
    let bad = || ParseError::Term(term.to_string());
    let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
    let tail = &term[digits.len()..];
    let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| bad())? };
    if tail.is_empty() {
        if digits.is_empty() {
            return Err(bad());
        }
        return Ok((coeff, 0));
    }
    let tail = tail.strip_prefix('·').unwrap_or(tail);
    let letter: String = tail.chars().take_while(|c| c.is_alphabetic()).collect();
    if letter != sym {
        return Err(ParseError::Variable { found: letter, expected: sym.to_string() });
    }
    let after = &tail[letter.len()..];
    if after.is_empty() {
        return Ok((coeff, 1));
    }
    let exp = after.strip_prefix('^').ok_or_else(bad)?;
    Ok((coeff, exp.parse().map_err(|_| bad())?))
}

fn write_monomial(f: &mut fmt::Formatter<'_>, abs: i64, vars: &[(&str, i32)]) -> fmt::Result {
    let nontrivial: Vec<_> = vars.iter().filter(|(_, e)| *e != 0).collect();
    if nontrivial.is_empty() {
        return write!(f, "{abs}");
    }
    if abs != 1 {
        write!(f, "{abs}")?;
    }
    for (k, (v, e)) in nontrivial.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        if *e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, c.abs(), &[(self.var.symbol(), e)])?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(i32, i64)> = self.terms().collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<(i32, i64)> = Vec::deserialize(d)?;
        Ok(LaurentPoly::from_terms(Var::Small, v))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        for (e, c) in o.terms() {
            self.add_term(e, c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                r.add_term(add_exp(e1, e2), mul_i64(c1, c2));
            }
        }
        r
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $f:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $f(self, o: $t) -> $t {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(LaurentPoly, Add, add);
forward_owned!(LaurentPoly, Sub, sub);
forward_owned!(LaurentPoly, Mul, mul);

/// Integer Laurent polynomial in two variables `T1`, `T2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly2 {
    coeffs: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: i64, e1: i32, e2: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e1, e2, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), i64)>) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e1: i32, e2: i32) -> i64 {
        self.coeffs.get(&(e1, e2)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, e1: i32, e2: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = add_i64(self.coeff(e1, e2), coeff);
        if c == 0 {
            self.coeffs.remove(&(e1, e2));
        } else {
            self.coeffs.insert((e1, e2), c);
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, a)| (e, mul_i64(a, c))))
    }

    pub fn shift(&self, k1: i32, k2: i32) -> Self {
        Self::from_terms(self.terms().map(|((a, b), c)| ((add_exp(a, k1), add_exp(b, k2)), c)))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms().enumerate() {
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, c.abs(), &[("T1", a), ("T2", b)])?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<((i32, i32), i64)> = self.terms().collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<((i32, i32), i64)> = Vec::deserialize(d)?;
        Ok(LaurentPoly2::from_terms(v))
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut r = self.clone();
        for ((a, b), c) in o.terms() {
            r.add_term(a, b, c);
        }
        r
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self + &o.scale(-1)
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut r = LaurentPoly2::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in o.terms() {
                r.add_term(add_exp(a1, a2), add_exp(b1, b2), mul_i64(c1, c2));
            }
        }
        r
    }
}

forward_owned!(LaurentPoly2, Add, add);
forward_owned!(LaurentPoly2, Sub, sub);
forward_owned!(LaurentPoly2, Mul, mul);

/// Substitute `T1 ↦ var^a`, `T2 ↦ var^b`.
pub fn laurent_substitute(p: &LaurentPoly2, var: Var, a: i32, b: i32) -> LaurentPoly {
    let mut r = LaurentPoly::zero(var);
    for ((e1, e2), c) in p.terms() {
        let e = e1
            .checked_mul(a)
            .and_then(|x| e2.checked_mul(b).and_then(|y| x.checked_add(y)))
            .expect("exponent overflow");
        r.add_term(e, c);
    }
    r
}

/// Cohomological degree `h` and t-degree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bigrade {
    pub h: i32,
    pub t: i32,
}

impl Bigrade {
    pub const fn new(h: i32, t: i32) -> Self {
        Bigrade { h, t }
    }
}

impl Add for Bigrade {
    type Output = Bigrade;
    fn add(self, o: Bigrade) -> Bigrade {
        bigrade_add(self, o)
    }
}

pub fn bigrade_add(a: Bigrade, b: Bigrade) -> Bigrade {
    Bigrade::new(add_exp(a.h, b.h), add_exp(a.t, b.t))
}

impl fmt::Display for Bigrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.t)
    }
}

/// Cohomological degree and two t-degrees. Bigraded structures embed with `t2 = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Trigrade {
    pub h: i32,
    pub t1: i32,
    pub t2: i32,
}

impl Trigrade {
    pub const ZERO: Trigrade = Trigrade { h: 0, t1: 0, t2: 0 };
    /// Degree of a differential.
    pub const D: Trigrade = Trigrade { h: 1, t1: 0, t2: 0 };

    pub const fn new(h: i32, t1: i32, t2: i32) -> Self {
        Trigrade { h, t1, t2 }
    }

    pub const fn bi(h: i32, t: i32) -> Self {
        Trigrade { h, t1: t, t2: 0 }
    }

    pub fn bigrade(self) -> Bigrade {
        Bigrade::new(self.h, self.t1)
    }
}

impl From<Bigrade> for Trigrade {
    fn from(b: Bigrade) -> Self {
        Trigrade::bi(b.h, b.t)
    }
}

impl Add for Trigrade {
    type Output = Trigrade;
    fn add(self, o: Trigrade) -> Trigrade {
        trigrade_add(self, o)
    }
}

impl Neg for Trigrade {
    type Output = Trigrade;
    fn neg(self) -> Trigrade {
        Trigrade::new(-self.h, -self.t1, -self.t2)
    }
}

pub fn trigrade_add(a: Trigrade, b: Trigrade) -> Trigrade {
    Trigrade::new(add_exp(a.h, b.h), add_exp(a.t1, b.t1), add_exp(a.t2, b.t2))
}

impl fmt::Display for Trigrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{})", self.h, self.t1, self.t2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LaurentPoly {
        LaurentPoly::parse(Var::Small, s).unwrap()
    }

    #[test]
    fn text_form() {
        assert_eq!(t("1 - t^2").to_string(), "1 - t^2");
        assert_eq!(t("-t^-1 + 3t").to_string(), "-t^-1 + 3t");
        assert_eq!(t("t^2 + 1").to_string(), "1 + t^2");
        assert_eq!(t("0").to_string(), "0");
        assert!(LaurentPoly::parse(Var::Small, "T").is_err());
    }

    #[test]
    fn substitution() {
        let p = LaurentPoly2::monomial(1, 1, 1);
        assert_eq!(laurent_substitute(&p, Var::Small, 1, 1), t("t^2"));
        let q = LaurentPoly2::monomial(1, 0, 0) - LaurentPoly2::monomial(1, 1, 1);
        assert_eq!(laurent_substitute(&q, Var::Small, 1, 1), t("1 - t^2"));
        let r = LaurentPoly2::monomial(1, 1, 0) + LaurentPoly2::monomial(1, 0, 1);
        assert_eq!(laurent_substitute(&r, Var::Small, 3, 0), t("1 + t^3"));
    }

    #[test]
    fn grades() {
        assert_eq!(Bigrade::new(1, 1) + Bigrade::new(-1, -1), Bigrade::new(0, 0));
        assert_eq!(Trigrade::new(1, 0, 0) + Trigrade::new(0, 1, 0), Trigrade::new(1, 1, 0));
        assert_eq!(Bigrade::new(2, 1) + Bigrade::new(0, 0), Bigrade::new(2, 1));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_aborts() {
        let p = LaurentPoly::monomial(Var::T, i64::MAX, 0);
        let _ = &p + &p;
    }
}
