//! Exact arithmetic in the field Q(q) of rational functions in the
//! indeterminate `q`.
//!
//! Values are kept in a canonical form at all times, so equality (and in
//! particular equality to zero) is decidable by plain structural comparison.
//! Canonical form:
//!
//! - the numerator is a Laurent polynomial in `q` with exact rational
//!   coefficients (negative exponents allowed),
//! - the denominator is an ordinary polynomial with nonzero constant term
//!   (lowest exponent 0) and leading coefficient 1,
//! - numerator and denominator share no polynomial factor.
//!
//! The module also provides q-integers `qnum`, q-factorials `qfact`, exact
//! evaluation at a rational point, and a textual grammar (`Display` /
//! `FromStr`) that round-trips canonically.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("evaluation point q0 = 0 is outside the Laurent domain")]
    ZeroEvalPoint,
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Laurent polynomial in `q` over exact rationals.
///
/// Stored as the lowest exponent `lo` together with the coefficient vector
/// in ascending exponent order. The zero polynomial has an empty
/// coefficient vector; otherwise the first and last coefficients are
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn new(lo: i64, coeffs: Vec<BigRational>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        LaurentPoly { lo: 0, coeffs: vec![BigRational::one()] }
    }

    /// The monomial `c * q^e`.
    pub fn term(c: BigRational, e: i64) -> Self {
        LaurentPoly::new(e, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with nonzero coefficient.
    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        if self.is_zero() || e < self.lo || e > self.hi() {
            BigRational::zero()
        } else {
            self.coeffs[(e - self.lo) as usize].clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + i] += c;
        }
        LaurentPoly::new(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.lo + other.lo, coeffs)
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { lo: self.lo + e, coeffs: self.coeffs.clone() }
    }

    /// Exact substitution q -> q0. The caller guarantees q0 != 0 when the
    /// polynomial has negative exponents.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        // Horner on the ascending coefficients, then adjust by q0^lo.
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc * rat_pow(q0, self.lo)
    }
}

fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let mut base = if e > 0 { x.clone() } else { x.recip() };
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

// ---- ordinary-polynomial helpers (ascending coefficients, no Laurent part) ----

fn poly_deg(p: &[BigRational]) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn poly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    debug_assert!(!b.is_empty());
    let mut rem = a.to_vec();
    let db = poly_deg(b);
    let lead = b[db].clone();
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quo = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db || (rem.len() == db + 1 && !rem[db].is_zero()) {
        rem = poly_trim(rem);
        if rem.len() <= db {
            break;
        }
        let dr = poly_deg(&rem);
        let c = &rem[dr] / &lead;
        quo[dr - db] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            rem[dr - db + i] -= t;
        }
        rem = poly_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (poly_trim(quo), rem)
}

fn poly_make_monic(p: Vec<BigRational>) -> Vec<BigRational> {
    let p = poly_trim(p);
    if p.is_empty() {
        return p;
    }
    let lead = p[poly_deg(&p)].clone();
    p.into_iter().map(|c| c / &lead).collect()
}

/// Monic gcd of two ordinary polynomials by the Euclidean algorithm.
fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = poly_trim(a.to_vec());
    let mut y = poly_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = poly_div_rem(&x, &y);
        x = y;
        y = r;
    }
    poly_make_monic(x)
}

/// Exact rational function in `q`: the ground field for the whole crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRat {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QRat {
    /// Canonicalize `num_raw / den_raw`. Panics if the denominator is zero.
    pub fn new(num_raw: LaurentPoly, den_raw: LaurentPoly) -> Self {
        assert!(!den_raw.is_zero(), "QRat with zero denominator");
        if num_raw.is_zero() {
            return QRat { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        // Split off the q-power parts: num = q^a * n0, den = q^b * d0 with
        // n0, d0 having nonzero constant term. The whole power shift q^(a-b)
        // is carried by the numerator.
        let shift = num_raw.lo - den_raw.lo;
        let n0 = num_raw.coeffs.clone();
        let d0 = den_raw.coeffs.clone();
        let g = poly_gcd(&n0, &d0);
        let (n1, r1) = poly_div_rem(&n0, &g);
        debug_assert!(r1.is_empty());
        let (d1, r2) = poly_div_rem(&d0, &g);
        debug_assert!(r2.is_empty());
        let lead = d1[poly_deg(&d1)].clone();
        let n2: Vec<BigRational> = n1.into_iter().map(|c| c / &lead).collect();
        let d2: Vec<BigRational> = d1.into_iter().map(|c| c / &lead).collect();
        QRat {
            num: LaurentPoly::new(shift, n2),
            den: LaurentPoly::new(0, d2),
        }
    }

    pub fn zero() -> Self {
        QRat { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        QRat { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QRat::q_pow(1)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        QRat { num: LaurentPoly::term(BigRational::one(), e), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QRat::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        if r.is_zero() {
            return QRat::zero();
        }
        QRat { num: LaurentPoly::term(r, 0), den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(r) when the value is the constant rational r.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.den.is_one() && self.num.lo == 0 && self.num.coeffs.len() == 1 {
            return Some(self.num.coeffs[0].clone());
        }
        None
    }

    pub fn inverse(&self) -> Result<QRat, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QRat::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> QRat {
        if e == 0 {
            return QRat::one();
        }
        let base = if e > 0 {
            self.clone()
        } else {
            self.inverse().expect("zero base with negative exponent")
        };
        let mut acc = QRat::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        acc
    }

    /// Exact substitution q -> q0.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::ZeroEvalPoint);
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, other: &QRat) -> QRat {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        QRat::new(num, self.den.mul(&other.den))
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, other: &QRat) -> QRat {
        let num = self
            .num
            .mul(&other.den)
            .sub(&other.num.mul(&self.den));
        QRat::new(num, self.den.mul(&other.den))
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, other: &QRat) -> QRat {
        QRat::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, other: &QRat) -> QRat {
        assert!(!other.is_zero(), "division by zero in Q(q)");
        QRat::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: self.num.neg(), den: self.den.clone() }
    }
}

/// The q-integer k_q = (q^k - q^-k)/(q - q^-1), as the Laurent polynomial
/// q^(k-1) + q^(k-3) + ... + q^(1-k) for k >= 1; qnum(-k) = -qnum(k).
pub fn qnum(k: i64) -> QRat {
    if k == 0 {
        return QRat::zero();
    }
    let a = k.abs();
    // exponents 1-a, 3-a, ..., a-1 in steps of 2
    let mut p = LaurentPoly::zero();
    let mut e = 1 - a;
    while e <= a - 1 {
        p = p.add(&LaurentPoly::term(BigRational::one(), e));
        e += 2;
    }
    let v = QRat { num: p, den: LaurentPoly::one() };
    if k > 0 {
        v
    } else {
        -&v
    }
}

/// q-factorial k_q! = 1_q 2_q ... k_q, with qfact(0) = 1. Negative k is
/// rejected.
pub fn qfact(k: i64) -> QRat {
    assert!(k >= 0, "qfact of negative integer");
    let mut acc = QRat::one();
    for i in 1..=k {
        acc = &acc * &qnum(i);
    }
    acc
}

// ---- textual grammar ----
//
// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := '-'* atom ('^' exponent)?
// atom   := integer | 'q' | '(' expr ')'
// exponent := integer | '-' integer | '(' '-'? integer ')'

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<(), ScalarError> {
        match self.bump() {
            Some(x) if x == c => Ok(()),
            other => Err(ScalarError::Parse(format!(
                "expected '{}', found {:?} at byte {}",
                c as char,
                other.map(|b| b as char),
                self.pos
            ))),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ScalarError::Parse(format!("expected integer at byte {start}")));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn exponent(&mut self) -> Result<i64, ScalarError> {
        let mut sign = 1i64;
        let mut parens = false;
        if self.peek() == Some(b'(') {
            self.bump();
            parens = true;
        }
        if self.peek() == Some(b'-') {
            self.bump();
            sign = -1;
        }
        let n = self.integer()?;
        if parens {
            self.expect(b')')?;
        }
        let v: i64 = n
            .try_into()
            .map_err(|_| ScalarError::Parse("exponent too large".into()))?;
        Ok(sign * v)
    }

    fn atom(&mut self) -> Result<QRat, ScalarError> {
        match self.peek() {
            Some(b'q') => {
                self.bump();
                Ok(QRat::q())
            }
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QRat::from_rational(BigRational::from_integer(n)))
            }
            other => Err(ScalarError::Parse(format!(
                "unexpected token {:?} at byte {}",
                other.map(|b| b as char),
                self.pos
            ))),
        }
    }

    fn factor(&mut self) -> Result<QRat, ScalarError> {
        let mut neg = false;
        while self.peek() == Some(b'-') {
            self.bump();
            neg = !neg;
        }
        let mut v = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.exponent()?;
            v = v.pow(e);
        }
        if neg {
            v = -&v;
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<QRat, ScalarError> {
        let mut v = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    let f = self.factor()?;
                    v = &v * &f;
                }
                Some(b'/') => {
                    self.bump();
                    let f = self.factor()?;
                    if f.is_zero() {
                        return Err(ScalarError::Parse("division by zero".into()));
                    }
                    v = &v / &f;
                }
                _ => return Ok(v),
            }
        }
    }

    fn expr(&mut self) -> Result<QRat, ScalarError> {
        let mut v = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.term()?;
                    v = &v + &t;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.term()?;
                    v = &v - &t;
                }
                _ => return Ok(v),
            }
        }
    }
}

impl FromStr for QRat {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(ScalarError::Parse(format!(
                "trailing input at byte {}",
                p.pos
            )));
        }
        Ok(v)
    }
}

/// Print a Laurent polynomial with integer coefficients, descending
/// exponents.
fn fmt_int_laurent(f: &mut fmt::Formatter<'_>, lo: i64, coeffs: &[BigInt]) -> fmt::Result {
    if coeffs.iter().all(|c| c.is_zero()) {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = lo + i as i64;
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let need_coeff = !mag.is_one() || e == 0;
        if need_coeff {
            write!(f, "{mag}")?;
        }
        if e != 0 {
            if need_coeff {
                write!(f, "*")?;
            }
            match e {
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
    }
    Ok(())
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Scale both parts to integer coefficients by the lcm of all
        // coefficient denominators, then strip the common integer content.
        let mut lcm = BigInt::one();
        for c in self.num.coeffs.iter().chain(self.den.coeffs.iter()) {
            lcm = lcm.lcm(c.denom());
        }
        let to_int = |p: &LaurentPoly| -> Vec<BigInt> {
            p.coeffs
                .iter()
                .map(|c| {
                    let scaled = c * BigRational::from_integer(lcm.clone());
                    debug_assert!(scaled.denom().is_one());
                    scaled.numer().clone()
                })
                .collect()
        };
        let mut ni = to_int(&self.num);
        let mut di = to_int(&self.den);
        let mut content = BigInt::zero();
        for c in ni.iter().chain(di.iter()) {
            content = content.gcd(c);
        }
        if !content.is_one() && !content.is_zero() {
            for c in ni.iter_mut() {
                *c /= &content;
            }
            for c in di.iter_mut() {
                *c /= &content;
            }
        }
        let den_is_one = di.len() == 1 && di[0].is_one() && self.den.lo == 0;
        if den_is_one {
            fmt_int_laurent(f, self.num.lo, &ni)
        } else {
            write!(f, "(")?;
            fmt_int_laurent(f, self.num.lo, &ni)?;
            write!(f, ")/(")?;
            fmt_int_laurent(f, self.den.lo, &di)?;
            write!(f, ")")
        }
    }
}

impl serde::Serialize for QRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for QRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn qnum_small_values() {
        assert_eq!(qnum(1), QRat::one());
        assert_eq!(qnum(2), r("q + q^-1"));
        for k in -12..=12 {
            assert_eq!(qnum(-k), -&qnum(k));
        }
    }

    #[test]
    fn qnum_defining_identity() {
        // k_q (q - q^-1) = q^k - q^-k for |k| <= 12
        let d = r("q - q^-1");
        for k in -12..=12 {
            let lhs = &qnum(k) * &d;
            let rhs = &QRat::q_pow(k) - &QRat::q_pow(-k);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn qfact_values() {
        assert_eq!(qfact(0), QRat::one());
        assert_eq!(qfact(2), r("q + q^-1"));
        // hand-expanded oracle: (q + q^-1)(q^2 + 1 + q^-2)
        assert_eq!(qfact(3), r("q^3 + 2*q + 2*q^-1 + q^-3"));
    }

    #[test]
    #[should_panic]
    fn qfact_negative_rejected() {
        qfact(-1);
    }

    #[test]
    fn eval_at_values() {
        let one = BigRational::one();
        assert_eq!(qnum(3).eval_at(&one).unwrap(), BigRational::from_integer(3.into()));
        let two = BigRational::from_integer(2.into());
        assert_eq!(
            r("q - q^-1").eval_at(&two).unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(r("1/(q-1)").eval_at(&one), Err(ScalarError::Pole));
        assert_eq!(r("q^-1").eval_at(&BigRational::zero()), Err(ScalarError::ZeroEvalPoint));
    }

    #[test]
    fn canonical_equality_cross_multiplies() {
        // (q^2 - 1)/(q - 1) reduces to q + 1
        assert_eq!(r("(q^2 - 1)/(q - 1)"), r("q + 1"));
        // everything cancels: (q-1)(q+1) / 2q(q-1)(q+1)
        assert_eq!(r("(q^2 - 1)/(2*q^3 - 2*q)"), r("q^-1/2"));
        // denominator normalized to monic, lowest exponent 0
        let x = r("(q^2 - 1)/(2*q^3 + 2*q)");
        assert_eq!(x, r("(q - q^-1)/(2*q^2 + 2)"));
        assert_eq!(x.den().lo(), 0);
        assert_eq!(x.den().coeff(x.den().hi()), BigRational::one());
    }

    #[test]
    fn parser_grammar_examples() {
        assert_eq!(r("(q^2 - 1)/(q^3)"), &(&r("q^2") - &QRat::one()) / &r("q^3"));
        assert_eq!(r("q^-3"), QRat::q_pow(-3));
        assert_eq!(r("q^(-3)"), QRat::q_pow(-3));
        assert_eq!(r("-2*q + 1"), &QRat::one() - &(&QRat::from_int(2) * &QRat::q()));
        assert_eq!(r("0"), QRat::zero());
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            "0",
            "1",
            "q",
            "q + q^-1",
            "(q^2 - 1)/(q^3)",
            "(q + 1)/(2*q^2 - 2)",
            "3*q^-2 - 5",
            "(q^4 - 2*q^2 + 1)/(q^2 + q + 1)",
        ];
        for s in samples {
            let x = r(s);
            let printed = x.to_string();
            let back: QRat = printed.parse().unwrap();
            assert_eq!(back, x, "failed on {s} -> {printed}");
            assert_eq!(back.to_string(), printed);
        }
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(QRat::zero().inverse(), Err(ScalarError::DivisionByZero));
    }
}
