//! Laplace transform of the periodic Euler function `Ē_n(tu)`:
//!
//! ```text
//! (1/n!) int_0^inf e^{-su} Ē_n(tu) du
//!   = (1/s) sum_{a<=n} (E_a(0)/a!) (t/s)^{n-a} - (t^n/s^{n+1}) 2/(e^{s/t}+1)
//! ```
//!
//! and its derivatives in `s`. The closed side is evaluated in double
//! precision; the numeric side integrates piece by piece, exactly up to
//! rounding, over the intervals where `Ē_n(tu)` is a single polynomial.

use std::sync::LazyLock;

use num_traits::ToPrimitive;

use crate::combinat::{binomial, factorial_rat};
use crate::error::Error;
use crate::params;
use crate::rat;
use crate::report::VerificationReport;
use crate::special::{self, Family};

/// Pieces beyond this count report nonconvergence.
pub const MAX_PIECES: usize = 200_000;

/// Highest derivative order the moment check accepts.
pub const MAX_MOMENT: usize = 4;

/// Closed form switches to its tail series below this `|s/t|`.
const TAIL_SWITCH: f64 = 1.0;

/// Moments switch from the Taylor series to the recurrence above this `λ`.
const MOMENT_SWITCH: f64 = 8.0;

const TAIL_TERMS: usize = 120;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LaplaceCase {
    pub n: usize,
    pub s: f64,
    pub t: f64,
    pub tol: f64,
}

impl LaplaceCase {
    pub fn new(n: usize, s: f64, t: f64, tol: f64) -> Self {
        LaplaceCase { n, s, t, tol }
    }

    pub fn ratio(&self) -> f64 {
        self.s / self.t
    }

    /// `|s/t| < π`, where the series behind the closed form converges.
    pub fn in_series_domain(&self) -> bool {
        self.ratio().abs() < std::f64::consts::PI
    }

    fn validate(&self) -> Result<(), Error> {
        if !(self.s.is_finite() && self.s > 0.0) {
            return Err(Error::LaplaceDomain(format!("s = {} must be positive", self.s)));
        }
        if !self.t.is_finite() || self.t == 0.0 {
            return Err(Error::LaplaceDomain(format!("t = {} must be nonzero", self.t)));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::LaplaceDomain(format!("tol = {} must be positive", self.tol)));
        }
        Ok(())
    }

    fn params(&self) -> crate::report::Params {
        params! {"n" => self.n, "s" => self.s, "t" => self.t, "tol" => self.tol}
    }
}

/// `E_a(0)/a!` for `a < TAIL_TERMS`.
static EULER_ZERO: LazyLock<Vec<f64>> = LazyLock::new(|| {
    (0..TAIL_TERMS)
        .map(|a| rat::to_f64(&(special::euler1(a, &rat::int(0)) / factorial_rat(a))))
        .collect()
});

/// `p (p-1) ... (p-m+1)`.
fn falling(p: i64, m: usize) -> f64 {
    (0..m as i64).map(|i| (p - i) as f64).product()
}

/// `d^m/ds^m s^p`.
fn dpow(s: f64, p: i64, m: usize) -> f64 {
    let f = falling(p, m);
    if f == 0.0 {
        0.0
    } else {
        f * s.powi((p - m as i64) as i32)
    }
}

/// Polynomials `P_k` with `d^k/dw^k σ(w) = P_k(σ(w))`, `σ = 1/(e^w+1)`,
/// from `σ' = σ² - σ`. Coefficients in increasing powers of σ.
fn logistic_derivative_polys(max_k: usize) -> Vec<Vec<f64>> {
    let mut out = vec![vec![0.0, 1.0]];
    for _ in 0..max_k {
        let p = out.last().expect("P_0 present");
        // P' (σ² - σ)
        let mut next = vec![0.0; p.len() + 1];
        for (i, c) in p.iter().enumerate().skip(1) {
            let d = c * i as f64;
            next[i + 1] += d; // σ^{i-1} σ²
            next[i] -= d; // σ^{i-1} σ
        }
        out.push(next);
    }
    out
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// `d^m/ds^m` of the closed form, including `m = 0`.
fn closed_derivative(n: usize, s: f64, t: f64, m: usize) -> f64 {
    if (s / t).abs() < TAIL_SWITCH {
        closed_tail(n, s, t, m)
    } else {
        closed_direct(n, s, t, m)
    }
}

/// The closed form as written; its two terms cancel for small `|s/t|`.
fn closed_direct(n: usize, s: f64, t: f64, m: usize) -> f64 {
    let n_i = n as i64;
    let mut acc = 0.0;
    for (a, c) in EULER_ZERO.iter().enumerate().take(n + 1) {
        acc += c * t.powi((n - a) as i32) * dpow(s, a as i64 - n_i - 1, m);
    }
    // t^n s^{-n-1} g(s), g = 2σ(s/t), g^{(k)} = 2 t^{-k} P_k(σ)
    let sigma = 1.0 / ((s / t).exp() + 1.0);
    let polys = logistic_derivative_polys(m);
    let mut leibniz = 0.0;
    for i in 0..=m {
        let k = m - i;
        let g_k = 2.0 * t.powi(-(k as i32)) * horner(&polys[k], sigma);
        leibniz += binomial_f64(m, i) * dpow(s, -n_i - 1, i) * g_k;
    }
    acc - t.powi(n as i32) * leibniz
}

/// The same function as `-sum_{a>n} (E_a(0)/a!) t^{n-a} s^{a-n-1}`,
/// convergent for `|s/t| < π`.
fn closed_tail(n: usize, s: f64, t: f64, m: usize) -> f64 {
    let n_i = n as i64;
    let mut acc = 0.0;
    for (a, c) in EULER_ZERO.iter().enumerate().skip(n + 1) {
        if *c != 0.0 {
            acc += c * t.powi((n_i - a as i64) as i32) * dpow(s, a as i64 - n_i - 1, m);
        }
    }
    -acc
}

fn binomial_f64(n: usize, k: usize) -> f64 {
    binomial(n, k).to_f64().expect("binomial fits in f64")
}

pub fn laplace_closed(case: &LaplaceCase) -> Result<f64, Error> {
    case.validate()?;
    Ok(closed_derivative(case.n, case.s, case.t, 0))
}

/// `M_j = int_0^1 v^j e^{-λv} dv` for `j <= max_j`.
fn moments(lambda: f64, max_j: usize) -> Vec<f64> {
    if lambda.abs() <= MOMENT_SWITCH {
        (0..=max_j)
            .map(|j| {
                // sum_i (-λ)^i / (i! (j+i+1))
                let mut term = 1.0;
                let mut acc = 1.0 / (j as f64 + 1.0);
                for i in 1..200 {
                    term *= -lambda / i as f64;
                    let add = term / (j + i + 1) as f64;
                    acc += add;
                    if add.abs() < 1e-18 * acc.abs().max(1e-300) {
                        break;
                    }
                }
                acc
            })
            .collect()
    } else {
        let el = (-lambda).exp();
        let mut out = Vec::with_capacity(max_j + 1);
        out.push((1.0 - el) / lambda);
        for j in 1..=max_j {
            let prev = out[j - 1];
            out.push((j as f64 * prev - el) / lambda);
        }
        out
    }
}

fn euler_coeffs(n: usize) -> Vec<f64> {
    special::poly(Family::Euler, n, &rat::int(1)).coeffs().iter().map(rat::to_f64).collect()
}

/// Piecewise evaluation of `int_0^inf u^m e^{-su} Ē_n(tu) du`; returns the
/// value and the individual piece contributions.
fn piecewise(n: usize, m: usize, s: f64, t: f64, tol: f64) -> Result<(f64, Vec<f64>), Error> {
    if t <= 0.0 {
        return Err(Error::LaplaceDomain(format!("numeric path needs t > 0, got {t}")));
    }
    let lambda = s / t;
    let en = euler_coeffs(n);
    let mx: f64 = en.iter().map(|c| c.abs()).sum();
    let mom = moments(lambda, n + m);
    let nfact = rat::to_f64(&factorial_rat(n));
    let binoms: Vec<f64> = (0..=m).map(|i| binomial_f64(m, i)).collect();
    let tm = t.powi(m as i32);
    let mut pieces = Vec::new();
    let mut total = 0.0;
    for k in 0..MAX_PIECES {
        // q_k(v) = ((v+k)/t)^m E_n(v)
        let kf = k as f64;
        let mut shift = vec![0.0; m + 1];
        for (i, b) in binoms.iter().enumerate() {
            shift[i] = b * kf.powi((m - i) as i32) / tm;
        }
        let mut integral = 0.0;
        for (i, a) in shift.iter().enumerate() {
            for (j, c) in en.iter().enumerate() {
                integral += a * c * mom[i + j];
            }
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let piece = sign * (-lambda * kf).exp() / t * integral;
        pieces.push(piece);
        total += piece;
        // Mx int_U^inf u^m e^{-su} du with U = (k+1)/t, divided by n!
        let u = (k + 1) as f64 / t;
        let mut tail = 0.0;
        let mut ff = 1.0;
        for i in 0..=m {
            if i > 0 {
                ff *= (m - i + 1) as f64;
            }
            tail += ff * u.powi((m - i) as i32) / s.powi(i as i32 + 1);
        }
        let bound = mx * (-s * u).exp() * tail / nfact;
        if bound < tol {
            return Ok((total, pieces));
        }
    }
    Err(Error::Nonconvergence { tol, pieces: MAX_PIECES })
}

/// `(1/n!) int_0^inf e^{-su} Ē_n(tu) du`, piecewise; needs `t > 0`.
pub fn laplace_numeric(case: &LaplaceCase) -> Result<f64, Error> {
    case.validate()?;
    let nfact = rat::to_f64(&factorial_rat(case.n));
    Ok(piecewise(case.n, 0, case.s, case.t, case.tol)?.0 / nfact)
}

const DOMAIN_NOTE: &str = "|s/t| >= pi: outside the series domain of the derivation; closed form evaluated anyway";

/// Numeric against closed transform within `tol`.
pub fn check_laplace(case: &LaplaceCase) -> Result<VerificationReport, Error> {
    let lhs = laplace_numeric(case)?;
    let rhs = laplace_closed(case)?;
    let rep = VerificationReport::approx("eq16", case.params(), lhs, rhs, case.tol);
    Ok(if case.in_series_domain() { rep } else { rep.with_note(DOMAIN_NOTE) })
}

/// `((-1)^m/n!) int_0^inf u^m e^{-su} Ē_n(tu) du` against the `m`-th
/// derivative of the closed form.
pub fn laplace_moment_check(m: usize, case: &LaplaceCase) -> Result<VerificationReport, Error> {
    case.validate()?;
    if m > MAX_MOMENT {
        return Err(Error::LaplaceDomain(format!("derivative order {m} exceeds {MAX_MOMENT}")));
    }
    let nfact = rat::to_f64(&factorial_rat(case.n));
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let lhs = sign * piecewise(case.n, m, case.s, case.t, case.tol)?.0 / nfact;
    let rhs = closed_derivative(case.n, case.s, case.t, m);
    let mut params = case.params();
    params.insert("m".into(), m.to_string());
    let rep = VerificationReport::approx("eq16-moment", params, lhs, rhs, case.tol);
    Ok(if case.in_series_domain() { rep } else { rep.with_note(DOMAIN_NOTE) })
}

/// The first `count` pieces of the transform (`m = 0`); consecutive
/// magnitudes shrink by exactly `e^{-s/t}`.
pub fn laplace_pieces(case: &LaplaceCase, count: usize) -> Result<Vec<f64>, Error> {
    case.validate()?;
    let mut pieces = piecewise(case.n, 0, case.s, case.t, case.tol)?.1;
    pieces.truncate(count);
    Ok(pieces)
}

/// Largest relative deviation of `|p_{k+1}/p_k|` from `e^{-s/t}` over the
/// first `count` pieces, reported against `tol`.
pub fn check_piece_decay(case: &LaplaceCase, count: usize) -> Result<VerificationReport, Error> {
    let pieces = laplace_pieces(case, count)?;
    let want = (-case.ratio()).exp();
    let mut worst = 0.0f64;
    for w in pieces.windows(2) {
        if w[0] != 0.0 {
            worst = worst.max(((w[1] / w[0]).abs() - want).abs() / want);
        }
    }
    let mut params = case.params();
    params.insert("pieces".into(), pieces.len().to_string());
    Ok(VerificationReport::approx("eq16-decay", params, worst, 0.0, case.tol))
}
