//! Arbitrary-precision rationals and their text format.
//!
//! Values are always held in lowest terms with a positive denominator, so
//! `==` is structural equality. The text form is an optional minus sign,
//! a decimal integer, and optionally `/` followed by a positive decimal
//! integer: `-3/2`, `7`, `0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rat = num_rational::BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d`, normalized. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

fn digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses the strict rational text format.
pub fn parse(text: &str) -> Result<Rat, Error> {
    let bad = || Error::ParseRational(text.to_string());
    let s = text.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) {
        return Err(bad());
    }
    let mut numer: BigInt = num.parse().map_err(|_| bad())?;
    if neg {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

/// Canonical text form; integers print without a denominator.
pub fn format(r: &Rat) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64 on its own
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// `r^e` for a possibly negative exponent. Panics on `0^negative`.
/// Powers of coprime parts stay coprime, so no reduction is needed.
pub fn pow(r: &Rat, e: i64) -> Rat {
    let k = u32::try_from(e.unsigned_abs()).expect("exponent fits in u32");
    if e >= 0 {
        Rat::new_raw(r.numer().pow(k), r.denom().pow(k))
    } else {
        assert!(!r.is_zero(), "zero to a negative power");
        let (n, d) = (r.numer().pow(k), r.denom().pow(k));
        if n.is_negative() {
            Rat::new_raw(-d, -n)
        } else {
            Rat::new_raw(d, n)
        }
    }
}

/// Sum of products of rationals with a single gcd reduction at the end.
/// Intermediate denominators are products of the factor denominators and
/// stay positive.
#[derive(Clone, Debug)]
pub struct LazySum {
    num: BigInt,
    den: BigInt,
}

impl Default for LazySum {
    fn default() -> Self {
        LazySum { num: BigInt::zero(), den: BigInt::one() }
    }
}

impl LazySum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `sign * prod(factors)`, `sign` being `+1` or `-1`.
    pub fn add_product(&mut self, negative: bool, factors: &[&Rat]) {
        let mut pn = if negative { -BigInt::one() } else { BigInt::one() };
        let mut pd = BigInt::one();
        for f in factors {
            if f.is_zero() {
                return;
            }
            pn *= f.numer();
            pd *= f.denom();
        }
        if pd == self.den {
            self.num += pn;
        } else {
            self.num = &self.num * &pd + pn * &self.den;
            self.den *= pd;
        }
    }

    pub fn finish(self) -> Rat {
        Rat::new(self.num, self.den)
    }
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

pub fn floor_i64(r: &Rat) -> i64 {
    r.floor().to_integer().to_i64().expect("floor out of i64 range")
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Serde adapter storing a `Rat` as its text form.
pub mod serde_text {
    use super::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(t) => super::parse(&t).map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(super::int(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_matches_repeated_multiplication() {
        for r in [frac(-3, 2), frac(2, 7), int(-1), int(5), frac(-1, 3)] {
            let mut acc = int(1);
            for e in 0..6 {
                assert_eq!(pow(&r, e), acc);
                assert_eq!(pow(&r, -e), acc.recip());
                acc *= &r;
            }
        }
        assert_eq!(pow(&int(0), 0), int(1));
    }

    #[test]
    fn lazy_sum_matches_eager() {
        let vals = [frac(1, 2), frac(-2, 3), frac(5, 4), int(0), frac(7, 9)];
        let mut lazy = LazySum::new();
        let mut eager = int(0);
        for (i, a) in vals.iter().enumerate() {
            for b in &vals {
                let neg = i % 2 == 1;
                lazy.add_product(neg, &[a, b, &frac(3, 5)]);
                let t = a * b * frac(3, 5);
                eager += if neg { -t } else { t };
            }
        }
        let got = lazy.finish();
        assert_eq!(got, eager);
        assert_eq!(got.denom(), Rat::new(got.numer().clone(), got.denom().clone()).denom());
    }

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse("0").unwrap(), int(0));
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse(" 5/10 ").unwrap(), frac(1, 2));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "-", "1/", "/2", "1/0", "3/-2", "1.5", "+2", "1/2/3", "--1", "a"] {
            assert!(parse(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn formats_normalized() {
        assert_eq!(format(&frac(6, -4)), "-3/2");
        assert_eq!(format(&frac(8, 4)), "2");
        assert_eq!(format(&int(0)), "0");
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(pow(&int(-2), 3), int(-8));
        assert_eq!(pow(&int(5), 0), int(1));
    }

    #[test]
    fn floors() {
        assert_eq!(floor_i64(&frac(-5, 2)), -3);
        assert_eq!(floor_i64(&frac(9, 4)), 2);
        assert_eq!(floor_i64(&int(-1)), -1);
    }
}
