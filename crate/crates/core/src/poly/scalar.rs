//! Exact field scalars: arbitrary-precision rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which coefficient field a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    /// The rational numbers.
    Rat,
    /// The prime field with the given modulus.
    Fp(u64),
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Rat => write!(f, "Q"),
            ScalarKind::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

impl ScalarKind {
    /// Validates that an `Fp` modulus is actually prime.
    pub fn validate(self) -> Result<Self> {
        match self {
            ScalarKind::Rat => Ok(self),
            ScalarKind::Fp(p) => {
                if is_prime(p) {
                    Ok(self)
                } else {
                    Err(Error::NotPrime(p))
                }
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= p) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A field element: a reduced rational or a residue mod a prime.
///
/// Rational values are kept in lowest terms with positive denominator
/// (guaranteed by `BigRational`); residues lie in `[0, p)`. Arithmetic
/// between the two kinds, or between different moduli, is a bug in the
/// caller and panics; the polynomial layer checks kinds up front.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rat(_) => ScalarKind::Rat,
            Scalar::Fp { modulus, .. } => ScalarKind::Fp(*modulus),
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        Scalar::from_int(kind, 0)
    }

    pub fn one(kind: ScalarKind) -> Self {
        Scalar::from_int(kind, 1)
    }

    /// Embeds a machine integer, reducing mod p for prime fields.
    pub fn from_int(kind: ScalarKind, n: i64) -> Self {
        Scalar::from_bigint(kind, BigInt::from(n))
    }

    /// Embeds an arbitrary-precision integer.
    pub fn from_bigint(kind: ScalarKind, n: BigInt) -> Self {
        match kind {
            ScalarKind::Rat => Scalar::Rat(BigRational::from_integer(n)),
            ScalarKind::Fp(p) => {
                let m = BigInt::from(p);
                let r = n.mod_floor(&m);
                Scalar::Fp {
                    residue: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Embeds a fraction `num/den`; over a prime field this divides by
    /// the image of `den`, which must be a unit.
    pub fn from_fraction(kind: ScalarKind, num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match kind {
            ScalarKind::Rat => Ok(Scalar::Rat(BigRational::new(num, den))),
            ScalarKind::Fp(_) => {
                let n = Scalar::from_bigint(kind, num);
                let d = Scalar::from_bigint(kind, den);
                n.div(&d)
            }
        }
    }

    pub fn rational(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { residue, .. } => *residue == 1,
        }
    }

    fn check_same(&self, other: &Scalar) -> (u64, bool) {
        match (self, other) {
            (Scalar::Rat(_), Scalar::Rat(_)) => (0, true),
            (Scalar::Fp { modulus: p, .. }, Scalar::Fp { modulus: q, .. }) if p == q => (*p, false),
            _ => panic!("scalar kind mismatch: {:?} vs {:?}", self.kind(), other.kind()),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let (p, rat) = self.check_same(other);
        if rat {
            let (Scalar::Rat(a), Scalar::Rat(b)) = (self, other) else {
                unreachable!()
            };
            Scalar::Rat(a + b)
        } else {
            let (Scalar::Fp { residue: a, .. }, Scalar::Fp { residue: b, .. }) = (self, other)
            else {
                unreachable!()
            };
            Scalar::Fp {
                residue: ((*a as u128 + *b as u128) % p as u128) as u64,
                modulus: p,
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let (p, rat) = self.check_same(other);
        if rat {
            let (Scalar::Rat(a), Scalar::Rat(b)) = (self, other) else {
                unreachable!()
            };
            Scalar::Rat(a * b)
        } else {
            let (Scalar::Fp { residue: a, .. }, Scalar::Fp { residue: b, .. }) = (self, other)
            else {
                unreachable!()
            };
            Scalar::Fp {
                residue: ((*a as u128 * *b as u128) % p as u128) as u64,
                modulus: p,
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fp { residue, modulus } => Scalar::Fp {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Fp { residue, modulus } => Ok(Scalar::Fp {
                residue: mod_inverse(*residue, *modulus),
                modulus: *modulus,
            }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    /// Multiplies by a machine integer (used by formal differentiation);
    /// in characteristic p the factor is reduced first.
    pub fn mul_int(&self, n: i64) -> Scalar {
        self.mul(&Scalar::from_int(self.kind(), n))
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_display_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    /// The scalar with any leading sign stripped, for display.
    pub fn display_abs(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.abs()),
            Scalar::Fp { .. } => self.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { residue, .. } => write!(f, "{residue}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_reduces() {
        let a = Scalar::from_fraction(ScalarKind::Rat, BigInt::from(2), BigInt::from(4)).unwrap();
        let b = Scalar::from_fraction(ScalarKind::Rat, BigInt::from(1), BigInt::from(2)).unwrap();
        assert_eq!(a, b);
        assert!(a.add(&b).is_one());
        assert_eq!(a.to_string(), "1/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let k = ScalarKind::Fp(7).validate().unwrap();
        let a = Scalar::from_int(k, 5);
        let b = Scalar::from_int(k, 4);
        assert_eq!(a.add(&b), Scalar::from_int(k, 2));
        assert_eq!(a.mul(&b), Scalar::from_int(k, 6));
        assert_eq!(a.inv().unwrap(), Scalar::from_int(k, 3));
        assert_eq!(Scalar::from_int(k, -1), Scalar::from_int(k, 6));
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(ScalarKind::Fp(6).validate(), Err(Error::NotPrime(6)));
        assert_eq!(ScalarKind::Fp(1).validate(), Err(Error::NotPrime(1)));
        assert!(ScalarKind::Fp(2).validate().is_ok());
        assert!(ScalarKind::Fp(101).validate().is_ok());
    }

    #[test]
    fn fraction_over_fp_divides() {
        let k = ScalarKind::Fp(7);
        let half = Scalar::from_fraction(k, BigInt::from(1), BigInt::from(2)).unwrap();
        assert_eq!(half, Scalar::from_int(k, 4));
        let err = Scalar::from_fraction(k, BigInt::from(1), BigInt::from(7));
        assert_eq!(err, Err(Error::DivisionByZero));
    }

    #[test]
    #[should_panic(expected = "scalar kind mismatch")]
    fn mixing_kinds_panics() {
        let a = Scalar::from_int(ScalarKind::Rat, 1);
        let b = Scalar::from_int(ScalarKind::Fp(3), 1);
        let _ = a.add(&b);
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime, a != 0
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus not prime or a == 0");
    ((t % p as i128 + p as i128) % p as i128) as u64
}
