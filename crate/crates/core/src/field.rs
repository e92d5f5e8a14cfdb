//! Exact scalar arithmetic over the two supported ground fields: arbitrary
//! precision rationals and prime fields GF(p).
//!
//! Every scalar carries its field descriptor. All values taking part in one
//! computation must share a descriptor; the container constructors in
//! [`crate::matrix`] and [`crate::tensor`] enforce this at the boundary, so
//! the arithmetic here treats a mismatch as a programming error.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;

/// Ground field descriptor shared by all scalars of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// Arbitrary-precision rationals.
    Rational,
    /// Integers modulo a prime `p`.
    Prime(u64),
}

impl Field {
    /// Builds a prime-field descriptor, rejecting non-prime moduli.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NonPrimeModulus(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::one()),
            Field::Prime(p) => Scalar::Mod(1 % p, *p),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod(v.rem_euclid(*p as i64) as u64, *p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (the [`BigRational`] normal form); prime-field residues live
/// in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod(r, _) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod(r, _) => *r == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod((a + b) % p, *p)
            }
            _ => panic!("mixed field descriptors"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            _ => panic!("mixed field descriptors"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod(a, p) => Scalar::Mod((p - a) % p, *p),
        }
    }

    /// Multiplicative inverse. Panics on zero; division by zero is a caller
    /// bug everywhere in this crate (pivots are checked nonzero first).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rational(a.recip())
            }
            Scalar::Mod(a, p) => {
                assert!(*a != 0, "inverse of zero");
                Scalar::Mod(mod_inverse(*a, *p), *p)
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }

    /// Parses `"p"`, `"-p"` or `"p/q"`. In GF(p) the quotient is resolved by
    /// modular inversion.
    pub fn parse(field: &Field, text: &str) -> Result<Scalar, Error> {
        let bad = || Error::ScalarSyntax(text.to_string());
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        match field {
            Field::Rational => {
                let n: BigInt = num_str.parse().map_err(|_| bad())?;
                let d: BigInt = match den_str {
                    Some(d) => d.parse().map_err(|_| bad())?,
                    None => BigInt::one(),
                };
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(p) => {
                let n: i64 = num_str.parse().map_err(|_| bad())?;
                let mut value = Scalar::Mod(n.rem_euclid(*p as i64) as u64, *p);
                if let Some(d) = den_str {
                    let d: i64 = d.parse().map_err(|_| bad())?;
                    let d = Scalar::Mod(d.rem_euclid(*p as i64) as u64, *p);
                    if d.is_zero() {
                        return Err(bad());
                    }
                    value = value.mul(&d.inv());
                }
                Ok(value)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(r, _) => write!(f, "{r}"),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) inverts a.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

/// Deterministic Miller-Rabin for u64 inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normal_form() {
        let half = Scalar::parse(&Field::Rational, "2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = Scalar::parse(&Field::Rational, "3/-6").unwrap();
        assert_eq!(neg.to_string(), "-1/2");
    }

    #[test]
    fn gf_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.mul(&b), f.from_i64(1)); // 15 = 1 mod 7
        assert_eq!(a.inv(), f.from_i64(5));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        let half = Scalar::parse(&f, "1/2").unwrap();
        assert_eq!(half, f.from_i64(4));
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(7919).is_ok());
    }
}
