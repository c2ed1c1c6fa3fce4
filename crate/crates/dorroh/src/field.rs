//! Exact ground-field arithmetic: arbitrary-precision rationals and prime
//! residue fields. Everything downstream is an exact identity check, so no
//! floating point appears anywhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::FieldError;

/// The ground field: the rationals or GF(p) for a prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Builds GF(p), rejecting composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<FieldSpec, FieldError> {
        if p < 2 || p >= (1 << 31) {
            return Err(FieldError::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(FieldError::NotPrime(p));
            }
            d += 1;
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 1 % *p, modulus: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let p_i = *p as i64;
                let mut v = n % p_i;
                if v < 0 {
                    v += p_i;
                }
                Scalar::Mod { value: v as u64, modulus: *p }
            }
        }
    }

    /// Builds num/den in this field. Over GF(p) the denominator must be a unit.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::ZeroDenominator);
        }
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        let inv = d.inverse().ok_or(FieldError::ZeroDenominator)?;
        Ok(n.mul(&inv))
    }

    /// All field elements, for finite fields only.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(
                (0..*p)
                    .map(|v| Scalar::Mod { value: v, modulus: *p })
                    .collect(),
            ),
        }
    }

    /// Parses a scalar literal: an integer or a fraction `a/b`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, FieldError> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let num: i64 = n
                .trim()
                .parse()
                .map_err(|_| FieldError::BadLiteral(text.to_string()))?;
            let den: i64 = d
                .trim()
                .parse()
                .map_err(|_| FieldError::BadLiteral(text.to_string()))?;
            self.fraction(num, den)
        } else {
            let n: i64 = text
                .parse()
                .map_err(|_| FieldError::BadLiteral(text.to_string()))?;
            Ok(self.from_i64(n))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF {p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (the representation `BigRational` maintains);
/// residues are reduced into `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, modulus } => *value == 1 % *modulus,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "scalar arithmetic across different fields");
                Scalar::Mod { value: (a + b) % p, modulus: *p }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "scalar arithmetic across different fields");
                Scalar::Mod { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inverse().expect("division by zero scalar"))
    }

    /// The literal used in structure-constant documents: residues print as
    /// bare integers because the field is declared in the header.
    pub fn doc_literal(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => value.to_string(),
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
            Scalar::Mod { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

/// Renders a coefficient-vector as a linear combination over named basis
/// elements, e.g. `x - 2*y`. Zero renders as `0`.
pub fn render_combination(coeffs: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = match c {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = if neg { c.neg() } else { c.clone() };
        if mag.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{}*{}", mag.doc_literal(), name));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Basis names of a tensor product, lexicographic with the first factor major.
pub fn tensor_names(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(format!("{x}⊗{y}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(FieldSpec::prime_field(6).is_err());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(31).is_ok());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldSpec::Rationals;
        let half = f.fraction(1, 2).unwrap();
        let third = f.fraction(1, 3).unwrap();
        let sum = half.add(&third);
        assert_eq!(sum, f.fraction(5, 6).unwrap());
        assert_eq!(sum.mul(&f.from_i64(6)), f.from_i64(5));
    }

    #[test]
    fn mod_inverse_round_trips() {
        let f = FieldSpec::prime_field(7).unwrap();
        for v in 1..7 {
            let s = f.from_i64(v);
            let inv = s.inverse().unwrap();
            assert!(s.mul(&inv).is_one());
        }
    }

    #[test]
    fn fraction_over_gf2_rejects_even_denominator() {
        let f = FieldSpec::prime_field(2).unwrap();
        assert!(f.fraction(1, 1).is_ok());
        assert!(f.fraction(1, 2).is_err());
        assert!(f.fraction(1, 0).is_err());
    }

    #[test]
    fn parse_scalar_literals() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse_scalar("-3/2").unwrap(), q.fraction(-3, 2).unwrap());
        assert_eq!(q.parse_scalar("4").unwrap(), q.from_i64(4));
        assert!(q.parse_scalar("x").is_err());
        let g3 = FieldSpec::prime_field(3).unwrap();
        assert_eq!(g3.parse_scalar("-2").unwrap(), g3.from_i64(1));
    }

    #[test]
    fn render_combination_formats() {
        let q = FieldSpec::Rationals;
        let names = vec!["one".to_string(), "g".to_string()];
        let v = vec![q.from_i64(-1), q.fraction(3, 2).unwrap()];
        assert_eq!(render_combination(&v, &names), "-one + 3/2*g");
        let z = vec![q.zero(), q.zero()];
        assert_eq!(render_combination(&z, &names), "0");
    }
}
