//! Truncated formal power series in `u` over `Rat`.
//!
//! A series of order `N` carries exactly the coefficients of `u^0..=u^N`.
//! Binary operations on mixed orders truncate to the smaller order.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rat::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Order is `coeffs.len() - 1`; panics on an empty vector.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the u^0 coefficient");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        Series::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Rat::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |k| if k == 0 { Rat::one() } else { Rat::zero() })
    }

    /// The generating variable `u` itself.
    pub fn variable(order: usize) -> Self {
        Self::from_fn(order, |k| if k == 1 { Rat::one() } else { Rat::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Series, Error> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::InverseConstant);
        }
        let inv0 = a0.recip();
        let mut b: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for k in 1..=self.order() {
            let mut s = Rat::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &b[k - i];
            }
            b.push(-(s * &inv0));
        }
        Ok(Series::new(b))
    }

    /// `log(a)` for `a(0) = 1`, from `L' = a'/a`.
    pub fn log(&self) -> Result<Series, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstant(rat::format(&self.coeffs[0])));
        }
        let n = self.order();
        let mut l = vec![Rat::zero(); n + 1];
        for k in 1..=n {
            // k l_k = k a_k - sum_{i=1}^{k-1} i l_i a_{k-i}
            let mut s = &self.coeffs[k] * rat::int(k as i64);
            for i in 1..k {
                s -= &l[i] * rat::int(i as i64) * &self.coeffs[k - i];
            }
            l[k] = s / rat::int(k as i64);
        }
        Ok(Series::new(l))
    }

    /// `exp(a)` for `a(0) = 0`, from `E' = a' E`.
    pub fn exp(&self) -> Result<Series, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstant(rat::format(&self.coeffs[0])));
        }
        let n = self.order();
        let mut e = Vec::with_capacity(n + 1);
        e.push(Rat::one());
        for k in 1..=n {
            let mut s = Rat::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    s += &self.coeffs[i] * rat::int(i as i64) * &e[k - i];
                }
            }
            e.push(s / rat::int(k as i64));
        }
        Ok(Series::new(e))
    }

    /// `exp(alpha * log(a))` for `a(0) = 1`.
    pub fn pow_rat(&self, alpha: &Rat) -> Result<Series, Error> {
        self.log()?.scale(alpha).exp()
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::from_fn(n, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::from_fn(n, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Mul for &Series {
    type Output = Series;
    /// Truncated Cauchy product.
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series::from_fn(n, |k| {
            let mut s = Rat::zero();
            for i in 0..=k {
                s += &self.coeffs[i] * &rhs.coeffs[k - i];
            }
            s
        })
    }
}
