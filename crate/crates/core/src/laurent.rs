//! Laurent polynomials in q with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// `coeffs[k]` is the coefficient of q^(low+k). Trimmed at both ends; zero
/// has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    pub fn monomial(c: BigInt, e: i32) -> Self {
        let mut p = LaurentPoly { low: e, coeffs: vec![c] };
        p.trim();
        p
    }

    /// c·q^e
    pub fn term(c: i64, e: i32) -> Self {
        Self::monomial(BigInt::from(c), e)
    }

    pub fn q() -> Self {
        Self::term(1, 1)
    }

    pub fn q_inv() -> Self {
        Self::term(1, -1)
    }

    /// q − q^{−1}
    pub fn q_minus_qinv() -> Self {
        Self::from_terms(&[(1, 1), (-1, -1)])
    }

    /// δ = q + q^{−1}
    pub fn delta() -> Self {
        Self::from_terms(&[(1, 1), (1, -1)])
    }

    pub fn from_terms(terms: &[(i64, i32)]) -> Self {
        let mut p = Self::zero();
        for &(c, e) in terms {
            p += &Self::term(c, e);
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// ±q^k
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn low_degree(&self) -> i32 {
        self.low
    }

    pub fn high_degree(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// (exponent, coefficient) pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() };
        p.trim();
        p
    }

    /// Exact substitution of a nonzero rational.
    pub fn evaluate(&self, at: &BigRational) -> Result<BigRational> {
        if at.is_zero() {
            return domain("cannot evaluate a Laurent polynomial at 0");
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from_integer(c.clone()) * pow_rational(at, e);
        }
        Ok(acc)
    }

    pub fn evaluate_i64(&self, at: i64) -> Result<BigRational> {
        self.evaluate(&BigRational::from_integer(BigInt::from(at)))
    }

    /// Substitution of a nonzero residue modulo a prime.
    pub fn evaluate_mod(&self, at: u64, p: u64) -> Result<u64> {
        if at % p == 0 {
            return domain("cannot evaluate a Laurent polynomial at 0");
        }
        let inv = pow_mod(at, p - 2, p);
        let base = if self.low < 0 { inv } else { at };
        let mut x = pow_mod(base, self.low.unsigned_abs() as u64, p);
        let mut acc = 0u64;
        let pb = BigInt::from(p);
        for c in &self.coeffs {
            let r = c.mod_floor(&pb);
            let r: u64 = r.try_into().expect("residue fits");
            acc = ((acc as u128 + r as u128 * x as u128) % p as u128) as u64;
            x = ((x as u128 * at as u128) % p as u128) as u64;
        }
        Ok(acc)
    }

    /// Integer polynomial part after clearing the power of q (ascending coefficients).
    pub(crate) fn poly_part(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub(crate) fn from_poly(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Exact quotient self / d, if d divides self in Z[q, q^{−1}].
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = poly_divmod(&self.coeffs, &d.coeffs)?;
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_poly(self.low - d.low, q))
    }

    /// gcd in Z[q, q^{−1}], normalized to a polynomial with positive leading
    /// coefficient and nonzero constant term.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        Self::from_poly(0, poly_gcd(&self.coeffs, &other.coeffs)).normalized()
    }

    /// Associate with low degree 0 and positive leading coefficient.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut p = LaurentPoly { low: 0, coeffs: self.coeffs.clone() };
        if p.coeffs.last().unwrap().is_negative() {
            p = -p;
        }
        p
    }

    /// gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |a, c| a.gcd(c))
    }

    /// Substitute q ↦ q^{−1}.
    pub fn bar(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentPoly { low: -self.high_degree(), coeffs: c }
    }
}

fn pow_rational(x: &BigRational, e: i32) -> BigRational {
    let mut r = BigRational::one();
    let b = if e < 0 { x.recip() } else { x.clone() };
    for _ in 0..e.unsigned_abs() {
        r *= &b;
    }
    r
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Division over Z when the divisor's leading coefficient divides at each step.
fn poly_divmod(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Some((vec![], r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    let lb = &b[db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    r.truncate(db);
    Some((q, r))
}

fn trim_vec(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of a by b.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bi;
        }
        trim_vec(&mut r);
    }
    r
}

/// Primitive polynomial remainder sequence gcd in Z[q].
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ca = a.iter().fold(BigInt::zero(), |x, c| x.gcd(c));
    let cb = b.iter().fold(BigInt::zero(), |x, c| x.gcd(c));
    let content = ca.gcd(&cb);
    let mut x = primitive(a);
    let mut y = primitive(b);
    trim_vec(&mut x);
    trim_vec(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x.iter().map(|c| c * &content).collect()
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().max(rhs.high_degree());
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        self.coeffs.resize(len, BigInt::zero());
        let off = (rhs.low - low) as usize;
        for (k, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + k] += c;
        }
        self.trim();
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &(-rhs);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_poly(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> =
            self.terms().collect::<Vec<_>>().into_iter().rev().map(|(e, c)| format!("{c}*q^{e}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for t in s.split(" + ") {
            let t = t.trim();
            let (c, e) = t.split_once("*q^").ok_or_else(|| Error::Parse(format!("bad term {t:?}")))?;
            let c: BigInt = c.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            let e: i32 = e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
            p += &Self::monomial(c, e);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        let q = LaurentPoly::q();
        assert_eq!(&LaurentPoly::q_minus_qinv() * &q, lp("1*q^2 + -1*q^0"));
        let d = LaurentPoly::delta();
        assert_eq!(&d * &d, lp("1*q^2 + 2*q^0 + 1*q^-2"));
        assert!((&d - &d).is_zero());
        assert_eq!(lp("1*q^2 + -1*q^0").to_string(), "1*q^2 + -1*q^0");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation_examples() {
        let half = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert!(LaurentPoly::q_minus_qinv().evaluate_i64(1).unwrap().is_zero());
        assert_eq!(LaurentPoly::delta().evaluate_i64(1).unwrap(), half(2, 1));
        assert_eq!(LaurentPoly::delta().evaluate_i64(2).unwrap(), half(5, 2));
        assert!(LaurentPoly::q().evaluate_i64(0).is_err());
        assert!(LaurentPoly::q().evaluate_mod(7, 7).is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = lp("1*q^2 + -1*q^0");
        let b = lp("1*q^1 + -1*q^0");
        assert_eq!(a.div_exact(&b).unwrap(), lp("1*q^1 + 1*q^0"));
        assert!(b.div_exact(&a).is_none());
        assert_eq!(a.gcd(&lp("1*q^3 + -1*q^1")), a);
        let c = lp("2*q^1 + 2*q^0");
        assert_eq!(c.gcd(&lp("4*q^2 + -4*q^0")), lp("2*q^1 + 2*q^0"));
        assert!(LaurentPoly::term(-1, 3).is_unit());
    }

    fn arb_lp() -> impl Strategy<Value = LaurentPoly> {
        (-3i32..3, proptest::collection::vec(-4i64..5, 0..5))
            .prop_map(|(low, cs)| LaurentPoly::from_poly(low, cs.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_lp(), b in arb_lp(), c in arb_lp()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_homomorphism(a in arb_lp(), b in arb_lp(), x in 1i64..6) {
            let ab = (&a * &b).evaluate_i64(x).unwrap();
            prop_assert_eq!(ab, a.evaluate_i64(x).unwrap() * b.evaluate_i64(x).unwrap());
            let p = 1_000_000_007u64;
            let m = (&a * &b).evaluate_mod(x as u64, p).unwrap();
            let m2 = (a.evaluate_mod(x as u64, p).unwrap() as u128 * b.evaluate_mod(x as u64, p).unwrap() as u128 % p as u128) as u64;
            prop_assert_eq!(m, m2);
        }

        #[test]
        fn text_round_trip(a in arb_lp()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn exact_division_round_trip(a in arb_lp(), b in arb_lp()) {
            prop_assume!(!b.is_zero());
            let ab = &a * &b;
            prop_assert_eq!(ab.div_exact(&b).unwrap(), a.clone());
            let g = ab.gcd(&b);
            prop_assert!(b.div_exact(&g).is_some());
            prop_assert!(ab.div_exact(&g).is_some());
        }
    }
}
