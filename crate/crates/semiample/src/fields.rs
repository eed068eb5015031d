//! Exact coefficient fields: the rationals, and prime fields F_p for
//! p >= 5.  Every element is kept in canonical form (reduced fraction, or
//! residue in [0, p)), so equality is plain structural equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ExactField {
    Rationals,
    /// F_p; the constructor guarantees p is prime and >= 5.
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl ExactField {
    pub fn rationals() -> Self {
        ExactField::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p < 5 {
            return Err(Error::InvalidField(format!(
                "characteristic {p} not supported; need p >= 5"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(ExactField::Prime(p))
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            ExactField::Rationals => FieldElem::Rat(BigRational::zero()),
            ExactField::Prime(_) => FieldElem::Fp(0),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        match self {
            ExactField::Rationals => FieldElem::Rat(BigRational::from(BigInt::from(n))),
            ExactField::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                FieldElem::Fp(m)
            }
        }
    }

    fn check(&self, a: &FieldElem) -> Result<()> {
        match (self, a) {
            (ExactField::Rationals, FieldElem::Rat(_)) => Ok(()),
            (ExactField::Prime(p), FieldElem::Fp(v)) if v < p => Ok(()),
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (_, FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x + y),
            (ExactField::Prime(p), FieldElem::Fp(x), FieldElem::Fp(y)) => {
                FieldElem::Fp((x + y) % p)
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.add(a, &self.neg(b)?)
    }

    pub fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        Ok(match (self, a) {
            (_, FieldElem::Rat(x)) => FieldElem::Rat(-x),
            (ExactField::Prime(p), FieldElem::Fp(x)) => FieldElem::Fp(if *x == 0 {
                0
            } else {
                p - x
            }),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (_, FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x * y),
            (ExactField::Prime(p), FieldElem::Fp(x), FieldElem::Fp(y)) => {
                FieldElem::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        match (self, a) {
            (_, FieldElem::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::Internal("division by zero".into()))
                } else {
                    Ok(FieldElem::Rat(x.recip()))
                }
            }
            (ExactField::Prime(p), FieldElem::Fp(x)) => {
                if *x == 0 {
                    Err(Error::Internal("division by zero".into()))
                } else {
                    Ok(FieldElem::Fp(crate::modroots::inv_mod(*x, *p)))
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        let bi = self.inv(b)?;
        self.mul(a, &bi)
    }

    pub fn is_zero(&self, a: &FieldElem) -> Result<bool> {
        self.check(a)?;
        Ok(match a {
            FieldElem::Rat(x) => x.is_zero(),
            FieldElem::Fp(x) => *x == 0,
        })
    }

    /// Number of field elements, for exhaustive enumeration over F_p.
    pub fn size(&self) -> Option<u64> {
        match self {
            ExactField::Rationals => None,
            ExactField::Prime(p) => Some(*p),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum FieldElem {
    Rat(BigRational),
    Fp(u64),
}

impl FieldElem {
    pub fn from_rational(x: BigRational) -> Self {
        FieldElem::Rat(x)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rat(x) => Some(x),
            FieldElem::Fp(_) => None,
        }
    }
}

/// Parse "num/den" or "num" (decimal integers) into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Config(format!("cannot parse rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_to_string(x: &BigRational) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Field elements serialize as strings: rationals as "num/den" (or plain
/// integer), F_p residues as the decimal residue.
impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FieldElem::Rat(x) => serializer.serialize_str(&rational_to_string(x)),
            FieldElem::Fp(v) => serializer.serialize_str(&v.to_string()),
        }
    }
}

/// Deserialization yields a field-agnostic rational; the owning structure
/// reinterprets it in its field via `FieldElem::reinterpret`.
impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        let r = parse_rational(&s).map_err(D::Error::custom)?;
        Ok(FieldElem::Rat(r))
    }
}

impl FieldElem {
    /// Coerce a parsed rational literal into the given field: a/b becomes
    /// a * b^-1 mod p over F_p.  Errors if b is divisible by p.
    pub fn reinterpret(&self, field: &ExactField) -> Result<FieldElem> {
        match (field, self) {
            (ExactField::Rationals, FieldElem::Rat(_)) => Ok(self.clone()),
            (ExactField::Prime(p), FieldElem::Rat(x)) => {
                let p_big = BigInt::from(*p);
                let den = x.denom() % &p_big;
                if den.is_zero() {
                    return Err(Error::Config(format!(
                        "denominator of {} vanishes mod {p}",
                        rational_to_string(x)
                    )));
                }
                let num = ((x.numer() % &p_big) + &p_big) % &p_big;
                let num = num.to_u64().unwrap();
                let den = (((den) + &p_big) % &p_big).to_u64().unwrap();
                let v = (num as u128 * crate::modroots::inv_mod(den, *p) as u128
                    % *p as u128) as u64;
                Ok(FieldElem::Fp(v))
            }
            (ExactField::Prime(p), FieldElem::Fp(v)) if v < p => Ok(self.clone()),
            _ => Err(Error::FieldMismatch),
        }
    }
}

/// JSON shape for a field: the string "Q" or an object {"p": <prime>}.
impl Serialize for ExactField {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExactField::Rationals => serializer.serialize_str("Q"),
            ExactField::Prime(p) => {
                use serde::ser::SerializeMap;
                let mut m = serializer.serialize_map(Some(1))?;
                m.serialize_entry("p", p)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for ExactField {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Name(String),
            Prime { p: u64 },
        }
        match Repr::deserialize(deserializer)? {
            Repr::Name(s) if s == "Q" => Ok(ExactField::Rationals),
            Repr::Name(s) => Err(D::Error::custom(format!("unknown field {s:?}"))),
            Repr::Prime { p } => ExactField::prime(p).map_err(D::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_validation() {
        assert!(ExactField::prime(5).is_ok());
        assert!(ExactField::prime(99991).is_ok());
        assert!(ExactField::prime(4).is_err());
        assert!(ExactField::prime(3).is_err());
        assert!(ExactField::prime(91).is_err()); // 7 * 13
    }

    #[test]
    fn fp_arithmetic() {
        let f = ExactField::prime(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b).unwrap(), f.from_i64(2));
        assert_eq!(f.mul(&a, &b).unwrap(), f.from_i64(6));
        assert_eq!(f.neg(&a).unwrap(), f.from_i64(2));
        assert_eq!(f.inv(&a).unwrap(), f.from_i64(3)); // 5*3 = 15 = 1 mod 7
        assert_eq!(f.from_i64(-3), f.from_i64(4));
    }

    #[test]
    fn field_mismatch_is_detected() {
        let q = ExactField::Rationals;
        let f7 = ExactField::prime(7).unwrap();
        let a = q.one();
        let b = f7.one();
        assert!(matches!(q.add(&a, &b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn rational_parsing_roundtrip() {
        let x = parse_rational("-6/4").unwrap();
        assert_eq!(rational_to_string(&x), "-3/2");
        assert_eq!(rational_to_string(&parse_rational("7").unwrap()), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn reinterpret_rational_in_fp() {
        let f = ExactField::prime(7).unwrap();
        let half = FieldElem::Rat(parse_rational("1/2").unwrap());
        // 2^-1 = 4 mod 7
        assert_eq!(half.reinterpret(&f).unwrap(), f.from_i64(4));
        let bad = FieldElem::Rat(parse_rational("1/7").unwrap());
        assert!(bad.reinterpret(&f).is_err());
    }
}
