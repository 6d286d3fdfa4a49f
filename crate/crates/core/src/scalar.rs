//! Exact field arithmetic over the rationals and prime fields GF(p).
//!
//! A [`Scalar`] is a value in one of the two supported coefficient fields.
//! All operations are exact; two scalars entering one operation must carry
//! the same [`Field`] descriptor.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Coefficient field descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers, arbitrary precision.
    Q,
    /// The prime field GF(p) for a machine-word prime p.
    Fp(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { val: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { val: 1 % p, p },
        }
    }

    /// Embed a signed machine integer.
    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Fp(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::Fp { val: r, p }
            }
        }
    }

    pub fn is_prime_field(self) -> bool {
        matches!(self, Field::Fp(_))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Field::Q);
        }
        if let Some(rest) = s.strip_prefix("Fp:").or_else(|| s.strip_prefix("GF:")) {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::Parameter(format!("bad prime in field descriptor '{s}'")))?;
            if !is_prime_u64(p) {
                return Err(Error::Parameter(format!("{p} is not prime")));
            }
            return Ok(Field::Fp(p));
        }
        Err(Error::Parameter(format!(
            "unknown field descriptor '{s}' (expected 'Q' or 'Fp:<prime>')"
        )))
    }
}

/// Deterministic trial-division primality test, adequate for word-size moduli
/// used at desk scale.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 37u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element: a reduced rational or a prime-field residue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    /// Canonical rational from a numerator/denominator pair: reduced,
    /// positive denominator, zero stored as 0/1.
    pub fn rational(num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rat(BigRational::new(num, den)))
    }

    pub fn rational_i64(num: i64, den: i64) -> Result<Scalar> {
        Scalar::rational(BigInt::from(num), BigInt::from(den))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, p } => *val == 1 % *p,
        }
    }

    fn check_same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::Incompatible(format!(
                "scalars over {} and {}",
                self.field(),
                other.field()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => {
                Scalar::Fp { val: add_mod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => {
                Scalar::Fp { val: mul_mod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp { val: if *val == 0 { 0 } else { p - val }, p: *p },
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { val, p } => Scalar::Fp { val: inv_mod(*val, *p), p: *p },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inverse()?)
    }

    /// Reduce a rational scalar into GF(p); errors when the denominator
    /// vanishes mod p. Prime-field scalars must already live in the target.
    pub fn reduce_mod(&self, p: u64) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) => {
                let num = bigint_mod(r.numer(), p);
                let den = bigint_mod(r.denom(), p);
                if den == 0 {
                    return Err(Error::NotInvertible);
                }
                Ok(Scalar::Fp { val: mul_mod(num, inv_mod(den, p), p), p })
            }
            Scalar::Fp { val, p: q } => {
                if *q != p {
                    return Err(Error::Incompatible(format!("residue mod {q} reduced mod {p}")));
                }
                Ok(Scalar::Fp { val: *val, p })
            }
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit mod {p}");
    s0.rem_euclid(p as i128) as u64
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
            Scalar::Fp { val, p } => write!(f, "{val} mod {p}"),
        }
    }
}

impl Scalar {
    /// Parse scalar text: `a`, `a/b`, or `a mod p`.
    pub fn parse(s: &str, field: Field) -> Result<Scalar> {
        let s = s.trim();
        if let Some((a, p)) = s.split_once(" mod ") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("bad modulus in '{s}'")))?;
            if field != Field::Fp(p) {
                return Err(Error::Incompatible(format!("'{s}' parsed in field {field}")));
            }
            let a: i64 = a
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("bad residue in '{s}'")))?;
            return Ok(field.from_i64(a));
        }
        if let Some((num, den)) = s.split_once('/') {
            let num = BigInt::from_str(num.trim())
                .map_err(|_| Error::Parameter(format!("bad numerator in '{s}'")))?;
            let den = BigInt::from_str(den.trim())
                .map_err(|_| Error::Parameter(format!("bad denominator in '{s}'")))?;
            let r = Scalar::rational(num, den)?;
            return match field {
                Field::Q => Ok(r),
                Field::Fp(p) => r.reduce_mod(p),
            };
        }
        let n = BigInt::from_str(s).map_err(|_| Error::Parameter(format!("bad integer '{s}'")))?;
        let r = Scalar::Rat(BigRational::from_integer(n));
        match field {
            Field::Q => Ok(r),
            Field::Fp(p) => r.reduce_mod(p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational_i64(n, d).unwrap()
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        let z = q(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert!(Scalar::rational_i64(1, 0).is_err());
    }

    #[test]
    fn normalize_is_idempotent() {
        let a = q(42, -70);
        if let Scalar::Rat(r) = &a {
            let again = Scalar::rational(r.numer().clone(), r.denom().clone()).unwrap();
            assert_eq!(a, again);
        }
    }

    #[test]
    fn field_inverse_examples() {
        assert_eq!(q(2, 3).inverse().unwrap(), q(3, 2));
        let f = Field::Fp(5);
        assert_eq!(f.from_i64(2).inverse().unwrap(), f.from_i64(3));
        let g = Field::Fp(101);
        // 100 = -1 mod 101 is its own inverse
        assert_eq!(g.from_i64(100).inverse().unwrap(), g.from_i64(100));
        assert_eq!(g.from_i64(0).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let f = Field::Fp(101);
        let a = f.from_i64(37);
        assert_eq!(a.to_string(), "37 mod 101");
        assert_eq!(Scalar::parse("37 mod 101", f).unwrap(), a);
        assert_eq!(Scalar::parse("-5/3", Field::Q).unwrap(), q(-5, 3));
        assert_eq!(Scalar::parse("7", Field::Q).unwrap(), q(7, 1));
    }

    #[test]
    fn field_descriptor_parse() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Q);
        assert_eq!("Fp:101".parse::<Field>().unwrap(), Field::Fp(101));
        assert!("Fp:100".parse::<Field>().is_err());
    }

    #[test]
    fn mixed_field_rejected() {
        let a = Field::Fp(5).from_i64(1);
        let b = Field::Fp(7).from_i64(1);
        assert!(a.add(&b).is_err());
        assert!(a.add(&q(1, 1)).is_err());
    }

    fn arb_rat() -> impl Strategy<Value = Scalar> {
        (-40i64..40, 1i64..30).prop_map(|(n, d)| q(n, d))
    }

    fn arb_fp() -> impl Strategy<Value = Scalar> {
        (0i64..101).prop_map(|v| Field::Fp(101).from_i64(v))
    }

    proptest! {
        #[test]
        fn field_axioms_q(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            let ab_c = a.add(&b).unwrap().add(&c).unwrap();
            let a_bc = a.add(&b.add(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_one());
            }
        }

        #[test]
        fn field_axioms_fp(a in arb_fp(), b in arb_fp(), c in arb_fp()) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_one());
            }
        }

        #[test]
        fn fp_agrees_with_reduced_rationals(x in -50i64..50, y in -50i64..50) {
            let p = 101u64;
            let f = Field::Fp(p);
            let rq = q(x, 1).mul(&q(y, 1)).unwrap().add(&q(x, 1)).unwrap();
            let rf = f.from_i64(x).mul(&f.from_i64(y)).unwrap().add(&f.from_i64(x)).unwrap();
            prop_assert_eq!(rq.reduce_mod(p).unwrap(), rf);
        }
    }
}
