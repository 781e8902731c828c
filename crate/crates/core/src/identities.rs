//! Convolution formulas for higher-order Bernoulli and Euler polynomials.
//!
//! Each operation returns both sides exactly so a failing case shows its
//! residual.
//!
//! The Euler–Euler and Bernoulli–Bernoulli formulas come from
//! differentiating `G(u)^n e^{uz}` with `n = β+γ-1`; the product of the two
//! generating functions equals `n` times the left side, not the left side
//! itself. The literal right sides therefore only match when `β+γ = 2`.
//! The `*_scaled` checks multiply the left side by `β+γ-1`.

use num_traits::{One, Zero};

use crate::combinat::binomial_rat;
use crate::params;
use crate::rat::{self, Rat};
use crate::report::VerificationReport;
use crate::special::{bernoulli, euler};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionCase {
    pub m: usize,
    pub beta: Rat,
    pub gamma: Rat,
    pub x: Rat,
    pub y: Rat,
}

impl ConvolutionCase {
    pub fn new(m: usize, beta: Rat, gamma: Rat, x: Rat, y: Rat) -> Self {
        ConvolutionCase { m, beta, gamma, x, y }
    }

    /// `β + γ - 1`, the order on the right-hand side.
    pub fn joint_order(&self) -> Rat {
        &self.beta + &self.gamma - Rat::one()
    }

    fn params(&self) -> crate::report::Params {
        params! {"m" => self.m, "beta" => &self.beta, "gamma" => &self.gamma, "x" => &self.x, "y" => &self.y}
    }
}

/// `sum_k C(m,k) E_k^{(β)}(x) E_{m-k}^{(γ)}(y)` vs
/// `2(x+y-1) E_m^{(β+γ-1)}(x+y-1) - 2 E_{m+1}^{(β+γ-1)}(x+y-1)`.
pub fn conv_euler_euler(case: &ConvolutionCase) -> (Rat, Rat) {
    let m = case.m;
    let mut lhs = Rat::zero();
    for k in 0..=m {
        lhs += binomial_rat(m, k) * euler(k, &case.beta, &case.x) * euler(m - k, &case.gamma, &case.y);
    }
    let z = &case.x + &case.y - Rat::one();
    let n = case.joint_order();
    let two = rat::int(2);
    let rhs = &two * &z * euler(m, &n, &z) - &two * euler(m + 1, &n, &z);
    (lhs, rhs)
}

/// `sum_k C(m,k) B_k^{(β)}(x) B_{m-k}^{(γ)}(y)` vs
/// `(x+y-1) m B_{m-1}^{(β+γ-1)}(x+y-1) + (γ+β-1-m) B_m^{(β+γ-1)}(x+y-1)`.
pub fn conv_bern_bern(case: &ConvolutionCase) -> (Rat, Rat) {
    let m = case.m;
    let mut lhs = Rat::zero();
    for k in 0..=m {
        lhs += binomial_rat(m, k) * bernoulli(k, &case.beta, &case.x) * bernoulli(m - k, &case.gamma, &case.y);
    }
    let z = &case.x + &case.y - Rat::one();
    let n = case.joint_order();
    let first = if m == 0 {
        Rat::zero()
    } else {
        &z * rat::int(m as i64) * bernoulli(m - 1, &n, &z)
    };
    let rhs = first + (&n - rat::int(m as i64)) * bernoulli(m, &n, &z);
    (lhs, rhs)
}

/// `sum_k C(m,k) B_{m-k}^{(n)}(x) E_k^{(n)}(y)` vs `2^m B_m^{(n)}((x+y)/2)`.
pub fn conv_bern_euler(m: usize, n: &Rat, x: &Rat, y: &Rat) -> (Rat, Rat) {
    let mut lhs = Rat::zero();
    for k in 0..=m {
        lhs += binomial_rat(m, k) * bernoulli(m - k, n, x) * euler(k, n, y);
    }
    let mid = (x + y) / rat::int(2);
    let rhs = rat::pow(&rat::int(2), m as i64) * bernoulli(m, n, &mid);
    (lhs, rhs)
}

pub fn check_eq41(case: &ConvolutionCase) -> VerificationReport {
    let (l, r) = conv_euler_euler(case);
    let rep = VerificationReport::exact("eq41", case.params(), &l, &r);
    if rep.pass {
        rep
    } else {
        rep.with_note("literal form; holds only for beta+gamma=2, see eq41-scaled")
    }
}

/// `(β+γ-1) * lhs = rhs`.
pub fn check_eq41_scaled(case: &ConvolutionCase) -> VerificationReport {
    let (l, r) = conv_euler_euler(case);
    VerificationReport::exact("eq41-scaled", case.params(), &(l * case.joint_order()), &r)
}

pub fn check_bern_conv(case: &ConvolutionCase) -> VerificationReport {
    let (l, r) = conv_bern_bern(case);
    let rep = VerificationReport::exact("bconv", case.params(), &l, &r);
    if rep.pass {
        rep
    } else {
        rep.with_note("literal form; holds only for beta+gamma=2, see bconv-scaled")
    }
}

pub fn check_bern_conv_scaled(case: &ConvolutionCase) -> VerificationReport {
    let (l, r) = conv_bern_bern(case);
    VerificationReport::exact("bconv-scaled", case.params(), &(l * case.joint_order()), &r)
}

pub fn check_eq34(m: usize, n: &Rat, x: &Rat, y: &Rat) -> VerificationReport {
    let (l, r) = conv_bern_euler(m, n, x, y);
    VerificationReport::exact("eq34", params! {"m" => m, "n" => n, "x" => x, "y" => y}, &l, &r)
}
