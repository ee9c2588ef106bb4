//! Ground fields: the rationals with big integers, or a prime field F_p.
//!
//! A [`Scalar`] carries its own field tag so that matrices and algebras never
//! need a generic parameter. Mixing scalars from different fields panics; that
//! is always a programming error.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `0` selects the rationals, a prime `p` selects F_p.
    pub fn from_char(c: u64) -> Result<Field> {
        if c == 0 {
            return Ok(Field::Rational);
        }
        if !(2..=(1 << 31)).contains(&c) || !is_prime(c) {
            return Err(Error::BadParameters(format!("characteristic {c} is not 0 or a prime below 2^31")));
        }
        Ok(Field::Prime(c))
    }

    /// Parses `"Q"`, `"0"`, `"Fp:<p>"` or a bare prime.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "Q" || t == "0" {
            return Ok(Field::Rational);
        }
        let num = t.strip_prefix("Fp:").unwrap_or(t);
        let p: u64 = num
            .parse()
            .map_err(|_| Error::BadParameters(format!("cannot parse field descriptor {s:?}")))?;
        Field::from_char(p)
    }

    pub fn descriptor(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::P(v.rem_euclid(p as i64) as u64, p),
        }
    }

    /// The image of the rational `num/den`; fails in F_p when p divides `den`.
    pub fn ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match *self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = ((num % &pb) + &pb) % &pb;
                let d = ((den % &pb) + &pb) % &pb;
                if d.is_zero() {
                    return Err(Error::BadParameters(format!("denominator {den} vanishes mod {p}")));
                }
                let n = Scalar::P(n.to_u64().unwrap(), p);
                let d = Scalar::P(d.to_u64().unwrap(), p);
                Ok(n.div(&d))
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
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

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    P(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::P(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "division by zero");
                Scalar::Q(q.recip())
            }
            Scalar::P(v, p) => {
                assert!(*v != 0, "division by zero");
                Scalar::P(pow_mod(*v, p - 2, *p), *p)
            }
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self * &o.inv()
    }

    /// Integer power, negative exponents allowed for nonzero scalars.
    pub fn powi(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut r = self.field().one();
        for _ in 0..e.unsigned_abs() {
            r = &r * &base;
        }
        r
    }

    /// An exact `k`-th root inside the field, if one exists and is cheap to find.
    pub fn root(&self, k: u64) -> Option<Scalar> {
        if k == 1 {
            return Some(self.clone());
        }
        match self {
            Scalar::Q(q) => {
                let n = int_root(q.numer(), k)?;
                let d = int_root(q.denom(), k)?;
                Some(Scalar::Q(BigRational::new(n, d)))
            }
            Scalar::P(v, p) => {
                if *p > 1 << 20 {
                    return None;
                }
                (0..*p).find(|x| pow_mod(*x, k, *p) == *v).map(|x| Scalar::P(x, *p))
            }
        }
    }

    /// Returns `Some(+1)` or `Some(-1)` when the scalar is a sign.
    pub fn sign_value(&self) -> Option<i8> {
        if self.is_one() {
            return Some(1);
        }
        if (-self).is_one() {
            return Some(-1);
        }
        None
    }
}

fn int_root(n: &BigInt, k: u64) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return int_root(&-n, k).map(|r| -r);
    }
    let f = n.to_f64()?;
    let guess = f.powf(1.0 / k as f64).round() as i64;
    for c in [guess - 1, guess, guess + 1] {
        if c < 0 {
            continue;
        }
        let cb = BigInt::from(c);
        if num_traits::pow::pow(cb.clone(), k as usize) == *n {
            return Some(cb);
        }
    }
    None
}

fn same(a: &Scalar, b: &Scalar) {
    debug_assert_eq!(a.field(), b.field(), "mixed fields");
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        same(self, o);
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::P(a, p), Scalar::P(b, _)) => Scalar::P((a + b) % p, *p),
            _ => panic!("mixed fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        same(self, o);
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::P(a, p), Scalar::P(b, _)) => Scalar::P((a + p - b) % p, *p),
            _ => panic!("mixed fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        same(self, o);
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::P(a, p), Scalar::P(b, _)) => Scalar::P(((*a as u128 * *b as u128) % *p as u128) as u64, *p),
            _ => panic!("mixed fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::P(a, p) => Scalar::P((p - a) % p, *p),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P(v, _) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the textual form produced by `Display` (`"a"` or `"a/b"`).
pub fn parse_scalar(field: Field, s: &str) -> Result<Scalar> {
    let bad = || Error::BadParameters(format!("cannot parse scalar {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    field.ratio(&n, &d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(7);
        for v in 1..7 {
            let x = f.int(v);
            assert!((&x * &x.inv()).is_one());
        }
    }

    #[test]
    fn rational_roundtrip() {
        let f = Field::Rational;
        let x = parse_scalar(f, "-3/4").unwrap();
        assert_eq!(x.to_string(), "-3/4");
        assert_eq!(parse_scalar(f, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn field_parse() {
        assert_eq!(Field::parse("Q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("Fp:3").unwrap(), Field::Prime(3));
        assert_eq!(Field::parse("5").unwrap(), Field::Prime(5));
        assert!(Field::parse("4").is_err());
    }

    #[test]
    fn roots() {
        let f = Field::Rational;
        let x = parse_scalar(f, "9/4").unwrap();
        assert_eq!(x.root(2).unwrap().to_string(), "3/2");
        assert!(f.int(2).root(2).is_none());
        assert_eq!(Field::Prime(7).int(2).root(2).map(|r| &r * &r), Some(Field::Prime(7).int(2)));
    }
}
