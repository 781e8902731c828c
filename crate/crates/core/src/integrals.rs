//! Integrals over `[0, x]` of products `prod_s F_{n_s}^{(α_s)}(b_s z + y_s)`.
//!
//! The closed forms integrate by parts against the last factor, which must
//! be Euler: each step raises its degree by one and divides by its scale,
//! while the derivative lands on the product of the others and is spread
//! over them by a multinomial sum. Everything here is exact; the oracle
//! expands the whole integrand and integrates term by term.
//!
//! Values are reported raw or divided by `prod n_s!` (the `normalized`
//! flag). Internally the by-parts sums work in normalized form.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{factorial_rat, multinomial, Compositions};
use crate::error::Error;
use crate::poly::Poly;
use crate::rat::{self, Rat};
use crate::special::{self, Family};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub family: Family,
    pub degree: usize,
    #[serde(with = "rat::serde_text")]
    pub order: Rat,
    #[serde(with = "rat::serde_text")]
    pub scale: Rat,
    #[serde(with = "rat::serde_text")]
    pub shift: Rat,
}

impl FactorSpec {
    pub fn new(family: Family, degree: usize, order: Rat, scale: Rat, shift: Rat) -> Self {
        FactorSpec { family, degree, order, scale, shift }
    }

    pub fn euler(degree: usize, order: Rat, scale: Rat, shift: Rat) -> Self {
        Self::new(Family::Euler, degree, order, scale, shift)
    }

    pub fn bernoulli(degree: usize, order: Rat, scale: Rat, shift: Rat) -> Self {
        Self::new(Family::Bernoulli, degree, order, scale, shift)
    }

    /// The factor as a polynomial in `z`.
    pub fn poly(&self) -> Poly {
        special::poly(self.family, self.degree, &self.order).affine_compose(&self.scale, &self.shift)
    }

    /// `F_k^{(α)}(b x + y)` for the same family, order, scale and shift.
    fn value_with_degree(&self, k: usize, x: &Rat) -> Rat {
        special::value(self.family, k, &self.order, &(&self.scale * x + &self.shift))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductIntegral {
    pub factors: Vec<FactorSpec>,
    #[serde(with = "rat::serde_text")]
    pub upper: Rat,
    #[serde(default)]
    pub normalized: bool,
}

impl ProductIntegral {
    pub fn new(factors: Vec<FactorSpec>, upper: Rat, normalized: bool) -> Self {
        ProductIntegral { factors, upper, normalized }
    }

    /// `prod n_s!`
    pub fn degree_factorials(&self) -> Rat {
        self.factors.iter().map(|f| factorial_rat(f.degree)).product()
    }

    /// Largest useful μ: the total degree of all but the last factor.
    pub fn max_mu(&self) -> usize {
        match self.factors.split_last() {
            Some((_, lead)) => lead.iter().map(|f| f.degree).sum(),
            None => 0,
        }
    }

    fn from_normalized(&self, v: Rat) -> Rat {
        if self.normalized {
            v
        } else {
            v * self.degree_factorials()
        }
    }

    fn check_last_scale(&self) -> Result<(), Error> {
        let (last, _) = self.factors.split_last().ok_or(Error::NoFactors)?;
        if last.scale.is_zero() {
            return Err(Error::ZeroScale { index: self.factors.len() - 1 });
        }
        if last.family != Family::Euler {
            return Err(Error::WrongFamily {
                index: self.factors.len() - 1,
                reason: "the factor integrated against must be Euler".into(),
            });
        }
        Ok(())
    }
}

/// Expand the whole integrand and integrate it; no closed form involved.
pub fn product_integral_oracle(pi: &ProductIntegral) -> Rat {
    let integrand = pi.factors.iter().fold(Poly::one(), |acc, f| &acc * &f.poly());
    let v = integrand.definite_integral(&Rat::zero(), &pi.upper);
    if pi.normalized {
        v / pi.degree_factorials()
    } else {
        v
    }
}

/// Normalized boundary sum `sum_{a=0}^{μ} (-1)^a sum_j multinomial * prod b_s^{j_s}
/// * b_r^{-a-1} * [value difference]`, for any leading families.
fn boundary_sum(factors: &[FactorSpec], x: &Rat, mu: usize) -> Rat {
    let (last, lead) = factors.split_last().expect("nonempty");
    let caps: Vec<usize> = lead.iter().map(|f| f.degree).collect();
    let zero = Rat::zero();
    let mut total = Rat::zero();
    for a in 0..=mu {
        let tail_k = last.degree + a + 1;
        let tail_norm = factorial_rat(tail_k);
        let tail_x = last.value_with_degree(tail_k, x) / &tail_norm;
        let tail_0 = last.value_with_degree(tail_k, &zero) / &tail_norm;
        let mut inner = Rat::zero();
        // parts above n_s would differentiate a factor to zero
        for js in Compositions::bounded(a, caps.clone()) {
            let mut coef = rat::from_bigint(multinomial(&js));
            let mut at_x = tail_x.clone();
            let mut at_0 = tail_0.clone();
            for (f, &j) in lead.iter().zip(&js) {
                let k = f.degree - j;
                coef *= rat::pow(&f.scale, j as i64);
                let norm = factorial_rat(k);
                at_x *= f.value_with_degree(k, x) / &norm;
                at_0 *= f.value_with_degree(k, &zero) / &norm;
            }
            inner += coef * (at_x - at_0);
        }
        total += rat::sign_pow(a as i64) * rat::pow(&last.scale, -(a as i64) - 1) * inner;
    }
    total
}

/// Normalized remainder after μ+1 integrations by parts:
/// `(-1)^{μ+1} b_r^{-μ-1} / ((n_r+μ+1)! prod_{s<r} n_s!) * int_0^x f^{(μ+1)} E_{n_r+μ+1}^{(α_r)}(b_r z + y_r) dz`
/// with `f` the product of the leading factors.
fn remainder(pi: &ProductIntegral, mu: usize) -> Rat {
    let (last, lead) = pi.factors.split_last().expect("nonempty");
    let f = lead.iter().fold(Poly::one(), |acc, g| &acc * &g.poly());
    let df = f.nth_derivative(mu + 1);
    if df.is_zero() {
        return Rat::zero();
    }
    let k = last.degree + mu + 1;
    let tail = FactorSpec { degree: k, ..last.clone() }.poly();
    let integral = (&df * &tail).definite_integral(&Rat::zero(), &pi.upper);
    let lead_norm: Rat = lead.iter().map(|g| factorial_rat(g.degree)).product();
    rat::sign_pow(mu as i64 + 1) * rat::pow(&last.scale, -(mu as i64) - 1) * integral
        / (factorial_rat(k) * lead_norm)
}

fn require_all_euler(pi: &ProductIntegral) -> Result<(), Error> {
    for (index, f) in pi.factors.iter().enumerate() {
        if f.family != Family::Euler {
            return Err(Error::WrongFamily { index, reason: "expected an Euler factor".into() });
        }
    }
    Ok(())
}

/// Truncated by-parts sum up to `μ` plus the exact remainder.
pub fn euler_product_integral(pi: &ProductIntegral, mu: usize) -> Result<Rat, Error> {
    pi.check_last_scale()?;
    require_all_euler(pi)?;
    let v = boundary_sum(&pi.factors, &pi.upper, mu) + remainder(pi, mu);
    Ok(pi.from_normalized(v))
}

/// The by-parts sum at `μ = n_1+...+n_{r-1}`, where the remainder's
/// integrand `f^{(μ+1)}` has degree below zero and is never formed.
pub fn euler_product_integral_closed(pi: &ProductIntegral) -> Result<Rat, Error> {
    pi.check_last_scale()?;
    require_all_euler(pi)?;
    Ok(pi.from_normalized(boundary_sum(&pi.factors, &pi.upper, pi.max_mu())))
}

/// `l` Bernoulli factors followed by `r >= 1` Euler factors, closed form at
/// `μ = n_1+...+n_l+m_1+...+m_{r-1}`.
pub fn mixed_product_integral_closed(pi: &ProductIntegral) -> Result<Rat, Error> {
    pi.check_last_scale()?;
    let mut seen_euler = false;
    for (index, f) in pi.factors.iter().enumerate() {
        match f.family {
            Family::Euler => seen_euler = true,
            Family::Bernoulli if seen_euler => {
                return Err(Error::WrongFamily {
                    index,
                    reason: "Bernoulli factors must precede all Euler factors".into(),
                })
            }
            Family::Bernoulli => {}
        }
    }
    Ok(pi.from_normalized(boundary_sum(&pi.factors, &pi.upper, pi.max_mu())))
}

/// The integral the parity special case evaluates: `x = 1`, `b_s = α_s - 2y_s`,
/// normalized.
pub fn parity_integral(degrees: &[usize], orders: &[Rat], shifts: &[Rat]) -> Result<ProductIntegral, Error> {
    if degrees.is_empty() {
        return Err(Error::NoFactors);
    }
    if degrees.len() != orders.len() || degrees.len() != shifts.len() {
        return Err(Error::Invalid(format!(
            "{} degrees, {} orders, {} shifts",
            degrees.len(),
            orders.len(),
            shifts.len()
        )));
    }
    let mut factors = Vec::with_capacity(degrees.len());
    for (index, ((&n, a), y)) in degrees.iter().zip(orders).zip(shifts).enumerate() {
        let b = a - rat::int(2) * y;
        if b.is_zero() {
            return Err(Error::DegenerateShift { index });
        }
        factors.push(FactorSpec::euler(n, a.clone(), b, y.clone()));
    }
    Ok(ProductIntegral::new(factors, Rat::one(), true))
}

/// Normalized integral at `x = 1`, `b_s = α_s - 2y_s`. Reflection turns every
/// boundary difference into `((-1)^{n_1+...+n_r+1} - 1)` times the value at
/// the shifts, so the result is 0 when `n_1+...+n_r+1` is even.
pub fn euler_parity_special_case(degrees: &[usize], orders: &[Rat], shifts: &[Rat]) -> Result<Rat, Error> {
    let pi = parity_integral(degrees, orders, shifts)?;
    let total: usize = degrees.iter().sum();
    if (total + 1) % 2 == 0 {
        return Ok(Rat::zero());
    }
    let (last, lead) = pi.factors.split_last().expect("nonempty");
    let caps: Vec<usize> = lead.iter().map(|f| f.degree).collect();
    let mut outer = Rat::zero();
    for a in 0..=pi.max_mu() {
        let k = last.degree + a + 1;
        let head = rat::sign_pow(a as i64) * rat::pow(&last.scale, -(a as i64) - 1) / factorial_rat(k)
            * special::euler(k, &last.order, &last.shift);
        let mut inner = Rat::zero();
        for js in Compositions::bounded(a, caps.clone()) {
            let mut term = rat::from_bigint(multinomial(&js));
            for (f, &j) in lead.iter().zip(&js) {
                term *= rat::pow(&f.scale, j as i64) / factorial_rat(f.degree - j)
                    * special::euler(f.degree - j, &f.order, &f.shift);
            }
            inner += term;
        }
        outer += head * inner;
    }
    Ok(rat::int(-2) * outer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn e(n: usize, a: Rat, b: Rat, y: Rat) -> FactorSpec {
        FactorSpec::euler(n, a, b, y)
    }

    fn first_example() -> ProductIntegral {
        ProductIntegral::new(
            vec![
                e(2, int(3), int(7), int(-2)),
                e(3, frac(1, 2), frac(-3, 2), int(1)),
                e(10, int(5), int(4), frac(1, 2)),
            ],
            int(1),
            false,
        )
    }

    #[test]
    fn oracle_small_cases() {
        let pi = ProductIntegral::new(vec![e(0, int(2), int(5), int(-1))], frac(3, 4), false);
        assert_eq!(product_integral_oracle(&pi), frac(3, 4));
        let pi = ProductIntegral::new(vec![e(1, int(1), int(1), int(0)); 2], int(1), false);
        assert_eq!(product_integral_oracle(&pi), frac(1, 12));
        assert_eq!(product_integral_oracle(&first_example()), int(0));
    }

    #[test]
    fn single_factor_is_one_boundary_term() {
        let pi = ProductIntegral::new(vec![e(2, int(1), int(2), int(0))], int(1), false);
        let want = (special::euler1(3, &int(2)) - special::euler1(3, &int(0))) / int(2) / int(6) * int(2);
        assert_eq!(euler_product_integral(&pi, 0).unwrap(), want);
        assert_eq!(euler_product_integral(&pi, 0).unwrap(), product_integral_oracle(&pi));
        let pi = ProductIntegral::new(vec![e(3, frac(1, 2), frac(-3, 2), int(1))], int(1), true);
        assert_eq!(euler_product_integral_closed(&pi).unwrap(), product_integral_oracle(&pi));
    }

    #[test]
    fn every_mu_matches_the_oracle() {
        let pi = ProductIntegral::new(
            vec![e(2, int(2), frac(-1, 3), int(1)), e(3, frac(1, 2), int(3), frac(2, 5)), e(2, int(1), int(-2), int(0))],
            frac(3, 2),
            true,
        );
        let want = product_integral_oracle(&pi);
        for mu in 0..=pi.max_mu() + 1 {
            assert_eq!(euler_product_integral(&pi, mu).unwrap(), want, "mu = {mu}");
        }
        assert_eq!(euler_product_integral_closed(&pi).unwrap(), want);
    }

    #[test]
    fn remainder_needs_the_scale_power() {
        // with b_r = 3 the μ = 0 truncation alone is off by the remainder
        let pi = ProductIntegral::new(vec![e(2, int(1), int(1), int(0)), e(1, int(1), int(3), int(0))], int(1), true);
        let rem = remainder(&pi, 0);
        assert!(!rem.is_zero());
        assert_eq!(boundary_sum(&pi.factors, &pi.upper, 0) + rem, product_integral_oracle(&pi));
    }

    #[test]
    fn toy_two_factor_closed() {
        let pi = ProductIntegral::new(vec![e(1, int(1), int(1), int(0)); 2], int(1), true);
        assert_eq!(euler_product_integral(&pi, 1).unwrap(), frac(1, 12));
        assert_eq!(euler_product_integral_closed(&pi).unwrap(), frac(1, 12));
    }

    #[test]
    fn second_worked_example() {
        let pi = ProductIntegral::new(vec![e(2, int(3), int(3), int(0)), e(10, int(5), int(-3), int(4))], int(1), true);
        let mut want = Rat::zero();
        for a in 0..=2usize {
            want += special::euler(2 - a, &int(3), &int(0)) / factorial_rat(2 - a)
                * special::euler(11 + a, &int(5), &int(4))
                / factorial_rat(11 + a);
        }
        want *= frac(2, 3);
        assert_eq!(euler_product_integral_closed(&pi).unwrap(), want);
        assert_eq!(product_integral_oracle(&pi), want);
        assert_eq!(euler_parity_special_case(&[2, 10], &[int(3), int(5)], &[int(0), int(4)]).unwrap(), want);
    }

    #[test]
    fn parity_cases() {
        let v = euler_parity_special_case(&[2, 3, 10], &[int(3), frac(1, 2), int(5)], &[int(-2), int(1), frac(1, 2)]);
        assert_eq!(v.unwrap(), int(0));
        let pi = parity_integral(&[2, 3, 10], &[int(3), frac(1, 2), int(5)], &[int(-2), int(1), frac(1, 2)]).unwrap();
        assert_eq!(pi.factors, first_example().factors);
        assert_eq!(euler_parity_special_case(&[0], &[int(1)], &[int(0)]).unwrap(), int(1));
        assert_eq!(
            euler_parity_special_case(&[1], &[int(2)], &[int(1)]),
            Err(Error::DegenerateShift { index: 0 })
        );
    }

    #[test]
    fn mixed_cases() {
        let pi = ProductIntegral::new(
            vec![FactorSpec::bernoulli(1, int(1), int(1), int(0)), e(1, int(1), int(1), int(0))],
            int(1),
            false,
        );
        assert_eq!(mixed_product_integral_closed(&pi).unwrap(), frac(1, 12));
        let pi = ProductIntegral::new(
            vec![
                FactorSpec::bernoulli(2, int(2), int(1), frac(1, 3)),
                FactorSpec::bernoulli(1, int(1), int(-2), int(0)),
                e(3, frac(1, 2), int(3), int(-1)),
            ],
            frac(1, 2),
            true,
        );
        assert_eq!(mixed_product_integral_closed(&pi).unwrap(), product_integral_oracle(&pi));
        let pi = ProductIntegral::new(
            vec![e(2, int(1), int(1), int(0)), e(3, int(1), int(2), frac(1, 2))],
            int(1),
            false,
        );
        assert_eq!(mixed_product_integral_closed(&pi).unwrap(), euler_product_integral_closed(&pi).unwrap());
    }

    #[test]
    fn rejections() {
        let pi = ProductIntegral::new(vec![e(1, int(1), int(1), int(0)), e(1, int(1), int(0), int(0))], int(1), false);
        assert_eq!(euler_product_integral_closed(&pi), Err(Error::ZeroScale { index: 1 }));
        let pi = ProductIntegral::new(
            vec![e(1, int(1), int(1), int(0)), FactorSpec::bernoulli(1, int(1), int(1), int(0)), e(1, int(1), int(1), int(0))],
            int(1),
            false,
        );
        assert!(matches!(mixed_product_integral_closed(&pi), Err(Error::WrongFamily { index: 1, .. })));
        assert!(matches!(euler_product_integral(&pi, 0), Err(Error::WrongFamily { index: 1, .. })));
        let empty = ProductIntegral::new(vec![], int(1), false);
        assert_eq!(euler_product_integral_closed(&empty), Err(Error::NoFactors));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"factors":[{"family":"euler","degree":2,"order":"3","scale":"3","shift":"0"}],"upper":"1","normalized":true}"#;
        let pi: ProductIntegral = serde_json::from_str(text).unwrap();
        assert_eq!(pi.factors[0], e(2, int(3), int(3), int(0)));
        assert_eq!(serde_json::to_string(&pi).unwrap(), text);
    }
}
