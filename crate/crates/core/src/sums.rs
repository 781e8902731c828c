//! Generalized Dedekind sums `T_r(c,d)` and Hardy–Berndt sums `s_{3,r}`,
//! `s_{4,r}`, with their reciprocity laws.

use num_traits::Zero;

use crate::combinat::binomial_rat;
use crate::error::Error;
use crate::params;
use crate::rat::{self, Rat};
use crate::report::VerificationReport;
use crate::special::{bernoulli_number, periodic_bernoulli, periodic_euler};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumParams {
    pub r: usize,
    pub c: i64,
    pub d: i64,
}

impl SumParams {
    pub fn new(r: usize, c: i64, d: i64) -> Self {
        SumParams { r, c, d }
    }

    fn params(&self) -> crate::report::Params {
        params! {"r" => self.r, "c" => self.c, "d" => self.d}
    }
}

/// `T_r(c,d) = sum_{j=0}^{|d|-1} (-1)^j Ē_1(j/d) Ē_r(cj/d)`.
pub fn dedekind_t(p: SumParams) -> Result<Rat, Error> {
    if p.d == 0 {
        return Err(Error::BadModulus("nonzero"));
    }
    let mut acc = Rat::zero();
    for j in 0..p.d.abs() {
        let term = periodic_euler(1, &rat::frac(j, p.d)) * periodic_euler(p.r, &rat::frac(p.c * j, p.d));
        acc += rat::sign_pow(j) * term;
    }
    Ok(acc)
}

/// Both sides of `c d^r T_r(c,d) + d c^r T_r(d,c) =
/// -(1/2) sum_a C(r,a) d^{a-1} c^{r-1-a} Ē_a(0) Ē_{r-a}(0) + Ē_{r+1}(0)`.
pub fn dedekind_reciprocity_sides(p: SumParams) -> Result<(Rat, Rat), Error> {
    if p.c == 0 {
        return Err(Error::BadModulus("nonzero"));
    }
    let (c, d) = (rat::int(p.c), rat::int(p.d));
    let r = p.r as i64;
    let lhs = &c * rat::pow(&d, r) * dedekind_t(p)? + &d * rat::pow(&c, r) * dedekind_t(SumParams::new(p.r, p.d, p.c))?;
    let zero = Rat::zero();
    let mut sum = Rat::zero();
    for a in 0..=p.r {
        sum += binomial_rat(p.r, a)
            * rat::pow(&d, a as i64 - 1)
            * rat::pow(&c, r - 1 - a as i64)
            * periodic_euler(a, &zero)
            * periodic_euler(p.r - a, &zero);
    }
    let rhs = rat::frac(-1, 2) * sum + periodic_euler(p.r + 1, &zero);
    Ok((lhs, rhs))
}

pub fn check_dedekind_reciprocity(p: SumParams) -> Result<VerificationReport, Error> {
    let (l, r) = dedekind_reciprocity_sides(p)?;
    Ok(VerificationReport::exact("eq47c", p.params(), &l, &r))
}

fn require_modulus(d: i64) -> Result<(), Error> {
    if d < 1 {
        Err(Error::BadModulus("at least 1"))
    } else {
        Ok(())
    }
}

/// `s_{3,r}(c,d) = sum_{j=1}^{d-1} (-1)^j B̄_r(cj/d)`.
pub fn hardy_s3(p: SumParams) -> Result<Rat, Error> {
    require_modulus(p.d)?;
    let mut acc = Rat::zero();
    for j in 1..p.d {
        acc += rat::sign_pow(j) * periodic_bernoulli(p.r, &rat::frac(p.c * j, p.d));
    }
    Ok(acc)
}

/// `s_{4,r}(c,d) = -4 sum_{j=1}^{d-1} B̄_r(cj/(2d))`.
pub fn hardy_s4(p: SumParams) -> Result<Rat, Error> {
    require_modulus(p.d)?;
    let mut acc = Rat::zero();
    for j in 1..p.d {
        acc += periodic_bernoulli(p.r, &rat::frac(p.c * j, 2 * p.d));
    }
    Ok(rat::int(-4) * acc)
}

/// `2 sum_{a=1}^{r+1} C(r+1,a) (-1)^a c^a d^{r+1-a} (1-2^a) B_a B_{r+1-a}`.
pub fn hardy_reciprocity_rhs(r: usize, c: &Rat, d: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for a in 1..=r + 1 {
        acc += binomial_rat(r + 1, a)
            * rat::sign_pow(a as i64)
            * rat::pow(c, a as i64)
            * rat::pow(d, (r + 1 - a) as i64)
            * (rat::int(1) - rat::pow(&rat::int(2), a as i64))
            * bernoulli_number(a)
            * bernoulli_number(r + 1 - a);
    }
    rat::int(2) * acc
}

/// `c d^r s_{3,r}(c,d) - 2^{-2} d (2c)^r s_{4,r}(d,c)`.
pub fn hardy_pair(r: usize, c: i64, d: i64) -> Result<Rat, Error> {
    let (cr, dr) = (rat::int(c), rat::int(d));
    let s3 = hardy_s3(SumParams::new(r, c, d))?;
    let s4 = hardy_s4(SumParams::new(r, d, c))?;
    Ok(&cr * rat::pow(&dr, r as i64) * s3 - rat::frac(1, 4) * &dr * rat::pow(&(rat::int(2) * &cr), r as i64) * s4)
}

/// `(r+1)(c d^r s_{3,r}(c,d) - 2^{-2} d (2c)^r s_{4,r}(d,c))` against the
/// Bernoulli-number sum; needs `d` and `r` odd.
pub fn check_hardy_reciprocity(p: SumParams) -> Result<VerificationReport, Error> {
    if p.d % 2 == 0 {
        return Err(Error::Parity(format!("d = {} must be odd", p.d)));
    }
    if p.r % 2 == 0 {
        return Err(Error::Parity(format!("r = {} must be odd", p.r)));
    }
    let lhs = rat::int(p.r as i64 + 1) * hardy_pair(p.r, p.c, p.d)?;
    let rhs = hardy_reciprocity_rhs(p.r, &rat::int(p.c), &rat::int(p.d));
    Ok(VerificationReport::exact("eq51", p.params(), &lhs, &rhs))
}
