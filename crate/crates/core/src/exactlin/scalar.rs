use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field of a computation.
///
/// `Rational` is the reference semantics. `Prime(p)` trades generality for
/// speed; Betti numbers may differ from the rational ones in small
/// characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Validates `p` before constructing a prime field.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Input(format!("prime {p} exceeds the supported range (< 2^32)")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp(0, p),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp(v.rem_euclid(p as i64) as u64, p),
        }
    }

    /// Maps a rational number into the field. Fails when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = (q.numer() % &pb + &pb) % &pb;
                let den = (q.denom() % &pb + &pb) % &pb;
                let den = den.to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::Input(format!("coefficient {q} is undefined modulo {p}")));
                }
                let num = num.to_u64().unwrap_or(0);
                Ok(Scalar::Fp(mul_mod(num, inv_mod(den, p), p), p))
            }
        }
    }

    pub fn name(self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F {p}"),
        }
    }
}

/// An exact field element. Both operands of a binary operation must come
/// from the same [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    /// `(value, p)` with `value < p`.
    Fp(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp((a + b) % p, *p),
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp((a + p - b) % p, *p),
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp(mul_mod(*a, *b, *p), *p),
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(a, p) => Scalar::Fp((p - a) % p, *p),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp(a, p) => Scalar::Fp(inv_mod(*a, *p), *p),
        })
    }

    /// Canonical text form: `a`, `a/b` (rationals) or the residue in `[0, p)`.
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Q(a) => {
                if a.is_integer() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                }
            }
            Scalar::Fp(a, _) => a.to_string(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(a) => a.is_negative(),
            Scalar::Fp(..) => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for v in 1..7 {
            let a = f.from_i64(v);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(32001).is_err());
        assert!(Field::prime(32003).is_ok());
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::Prime(5);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let h = f.from_rational(&half).unwrap();
        assert_eq!(h.mul(&f.from_i64(2)), f.one());
        let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert!(f.from_rational(&fifth).is_err());
    }

    #[test]
    fn text_forms() {
        let q = Field::Rational;
        let a = q.from_rational(&BigRational::new(BigInt::from(-3), BigInt::from(6))).unwrap();
        assert_eq!(a.to_text(), "-1/2");
        assert_eq!(Field::Prime(7).from_i64(-1).to_text(), "6");
    }
}
