//! Higher-order Bernoulli and Euler polynomials of rational order.
//!
//! `F_m^{(α)}(x)` is `m!` times the coefficient of `u^m` in
//! `G(u)^α e^{xu}`, where `G(u) = u/(e^u - 1)` or `2/(e^u + 1)`. The
//! power `G^α` is formed as `exp(α log G)` so any rational order works.
//!
//! The constant terms `F_k^{(α)}(0)` (Nörlund numbers) for each
//! `(family, α)` are cached; everything else is rebuilt from them with a
//! binomial sum.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial_rat, factorial_rat};
use crate::error::Error;
use crate::poly::Poly;
use crate::rat::{self, Rat};
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Bernoulli,
    Euler,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "bernoulli" | "b" => Ok(Family::Bernoulli),
            "euler" | "e" => Ok(Family::Euler),
            other => Err(Error::Invalid(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolySpec {
    pub family: Family,
    pub degree: usize,
    pub order: Rat,
}

impl PolySpec {
    pub fn new(family: Family, degree: usize, order: Rat) -> Self {
        PolySpec { family, degree, order }
    }
}

/// `u/(e^u-1)` or `2/(e^u+1)` truncated at `u^order`.
pub fn base_series(family: Family, order: usize) -> Series {
    let denom = match family {
        // (e^u - 1)/u = sum u^k/(k+1)!
        Family::Bernoulli => Series::from_fn(order, |k| factorial_rat(k + 1).recip()),
        // (e^u + 1)/2 = 1 + sum_{k>=1} u^k/(2 k!)
        Family::Euler => Series::from_fn(order, |k| {
            if k == 0 {
                Rat::one()
            } else {
                (factorial_rat(k) * rat::int(2)).recip()
            }
        }),
    };
    denom.inverse().expect("constant term is 1")
}

type NorlundKey = (Family, Rat);

/// Smallest table length computed on a cache miss.
const MIN_TABLE: usize = 16;

static NORLUND: LazyLock<RwLock<HashMap<NorlundKey, Arc<Vec<Rat>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `[F_0^{(α)}(0), ..., F_m^{(α)}(0)]`, possibly longer.
fn norlund_table(family: Family, order: &Rat, m: usize) -> Arc<Vec<Rat>> {
    let key = (family, order.clone());
    let mut target = m.max(MIN_TABLE);
    if let Some(t) = NORLUND.read().expect("norlund lock").get(&key) {
        if t.len() > m {
            return Arc::clone(t);
        }
        // geometric growth keeps repeated extension amortized
        target = target.max(2 * t.len());
    }
    let p = base_series(family, target)
        .pow_rat(order)
        .expect("base series has constant term 1");
    let table: Vec<Rat> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * factorial_rat(k))
        .collect();
    let table = Arc::new(table);
    let mut w = NORLUND.write().expect("norlund lock");
    let slot = w.entry(key).or_insert_with(|| Arc::clone(&table));
    if slot.len() < table.len() {
        *slot = Arc::clone(&table);
    }
    Arc::clone(slot)
}

/// `F_m^{(α)}(0)`.
pub fn norlund_number(family: Family, m: usize, order: &Rat) -> Rat {
    norlund_table(family, order, m)[m].clone()
}

/// `F_m^{(α)}(x) = sum_k C(m,k) F_k^{(α)}(0) x^{m-k}`.
pub fn higher_order_poly(spec: &PolySpec) -> Poly {
    let m = spec.degree;
    let t = norlund_table(spec.family, &spec.order, m);
    let mut coeffs = vec![Rat::default(); m + 1];
    for (k, nk) in t.iter().take(m + 1).enumerate() {
        coeffs[m - k] = binomial_rat(m, k) * nk;
    }
    Poly::new(coeffs)
}

pub fn poly(family: Family, m: usize, order: &Rat) -> Poly {
    higher_order_poly(&PolySpec::new(family, m, order.clone()))
}

type PointKey = (Family, Rat, Rat);

static POINT_VALUES: LazyLock<RwLock<HashMap<PointKey, Arc<Vec<Rat>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Entries kept before the point cache is dropped and rebuilt.
const POINT_CACHE_CAP: usize = 1 << 15;

/// `[F_0^{(α)}(x), ..., F_m^{(α)}(x)]` from
/// `F_k(x) = sum_j C(k,j) F_j(0) x^{k-j}`.
fn compute_point_values(family: Family, order: &Rat, x: &Rat, m: usize) -> Vec<Rat> {
    let t = norlund_table(family, order, m);
    let mut powers = Vec::with_capacity(m + 1);
    powers.push(Rat::one());
    for k in 1..=m {
        let next = &powers[k - 1] * x;
        powers.push(next);
    }
    (0..=m)
        .map(|k| {
            let mut acc = Rat::default();
            for j in 0..=k {
                if !t[j].is_zero() {
                    acc += binomial_rat(k, j) * &t[j] * &powers[k - j];
                }
            }
            acc
        })
        .collect()
}

/// Value `F_m^{(α)}(x)`, memoized per `(family, α, x)` since identity
/// grids revisit the same points for every degree.
pub fn value(family: Family, m: usize, order: &Rat, x: &Rat) -> Rat {
    let key = (family, order.clone(), x.clone());
    let mut target = m;
    if let Some(v) = POINT_VALUES.read().expect("point cache").get(&key) {
        if v.len() > m {
            return v[m].clone();
        }
        target = target.max(2 * v.len());
    }
    let vals = compute_point_values(family, order, x, target);
    let out = vals[m].clone();
    let mut w = POINT_VALUES.write().expect("point cache");
    if w.len() >= POINT_CACHE_CAP {
        w.clear();
    }
    let slot = w.entry(key).or_insert_with(|| Arc::new(Vec::new()));
    if slot.len() < vals.len() {
        *slot = Arc::new(vals);
    }
    out
}

pub fn euler(m: usize, order: &Rat, x: &Rat) -> Rat {
    value(Family::Euler, m, order, x)
}

pub fn bernoulli(m: usize, order: &Rat, x: &Rat) -> Rat {
    value(Family::Bernoulli, m, order, x)
}

/// Classical `E_m(x)`.
pub fn euler1(m: usize, x: &Rat) -> Rat {
    euler(m, &Rat::one(), x)
}

/// Classical `B_m(x)`.
pub fn bernoulli1(m: usize, x: &Rat) -> Rat {
    bernoulli(m, &Rat::one(), x)
}

static BERNOULLI_NUMBERS: LazyLock<RwLock<HashMap<usize, Rat>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));
static EULER_NUMBERS: LazyLock<RwLock<HashMap<usize, Rat>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn memo(cache: &RwLock<HashMap<usize, Rat>>, m: usize, f: impl FnOnce() -> Rat) -> Rat {
    if let Some(v) = cache.read().expect("number cache").get(&m) {
        return v.clone();
    }
    let v = f();
    cache
        .write()
        .expect("number cache")
        .entry(m)
        .or_insert(v)
        .clone()
}

/// `B_m = B_m(0)`.
pub fn bernoulli_number(m: usize) -> Rat {
    memo(&BERNOULLI_NUMBERS, m, || norlund_number(Family::Bernoulli, m, &Rat::one()))
}

/// `E_m = 2^m E_m(1/2)`.
pub fn euler_number(m: usize) -> Rat {
    memo(&EULER_NUMBERS, m, || {
        rat::pow(&rat::int(2), m as i64) * euler1(m, &rat::frac(1, 2))
    })
}

/// Antiperiodic extension of `E_r` from `[0,1)`: `Ē_r(x+p) = (-1)^p Ē_r(x)`.
/// At integers the right limit is used.
pub fn periodic_euler(r: usize, x: &Rat) -> Rat {
    let p = rat::floor_i64(x);
    let f = x - rat::int(p);
    rat::sign_pow(p) * euler1(r, &f)
}

/// `B_r({x})` with `{x}` the fractional part.
pub fn periodic_bernoulli(r: usize, x: &Rat) -> Rat {
    let p = rat::floor_i64(x);
    bernoulli1(r, &(x - rat::int(p)))
}
