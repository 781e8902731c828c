//! Binomials, factorials, multinomials and weak compositions.
//!
//! Binomial rows and factorials are memoized in append-only tables behind
//! `RwLock`s: concurrent readers, serialized growth.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::rat::{self, Rat};

static PASCAL: LazyLock<RwLock<Vec<Vec<BigInt>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![BigInt::one()]]));

static FACTORIALS: LazyLock<RwLock<Vec<BigInt>>> =
    LazyLock::new(|| RwLock::new(vec![BigInt::one()]));

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::ZERO;
    }
    {
        let rows = PASCAL.read().expect("pascal lock");
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = PASCAL.write().expect("pascal lock");
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 present");
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigInt::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

pub fn binomial_rat(n: usize, k: usize) -> Rat {
    rat::from_bigint(binomial(n, k))
}

pub fn factorial(n: usize) -> BigInt {
    {
        let t = FACTORIALS.read().expect("factorial lock");
        if let Some(f) = t.get(n) {
            return f.clone();
        }
    }
    let mut t = FACTORIALS.write().expect("factorial lock");
    while t.len() <= n {
        let next = t.last().expect("0! present") * BigInt::from(t.len());
        t.push(next);
    }
    t[n].clone()
}

pub fn factorial_rat(n: usize) -> Rat {
    rat::from_bigint(factorial(n))
}

/// `a! / (j_1! ... j_k!)` where `a = sum(j)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let a: usize = parts.iter().sum();
    let mut acc = BigInt::one();
    let mut seen = 0usize;
    for &j in parts {
        seen += j;
        acc *= binomial(seen, j);
    }
    debug_assert_eq!(seen, a);
    acc
}

/// Weak compositions of `total` into `caps.len()` parts with `part[i] <=
/// caps[i]`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Compositions {
    caps: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn bounded(total: usize, caps: Vec<usize>) -> Self {
        let current = fill_right(total, &caps);
        Compositions { caps, current }
    }

    pub fn unbounded(total: usize, parts: usize) -> Self {
        Self::bounded(total, vec![total; parts])
    }
}

/// Lexicographically smallest placement of `total` into `caps`.
fn fill_right(mut total: usize, caps: &[usize]) -> Option<Vec<usize>> {
    let mut v = vec![0; caps.len()];
    for i in (0..caps.len()).rev() {
        let take = total.min(caps[i]);
        v[i] = take;
        total -= take;
    }
    (total == 0).then_some(v)
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut tail: usize = 0;
        for i in (0..k).rev() {
            if i + 1 < k {
                tail += out[i + 1];
            }
            if tail > 0 && out[i] < self.caps[i] {
                let mut nxt = out.clone();
                nxt[i] += 1;
                let rest = fill_right(tail - 1, &self.caps[i + 1..]).expect("smaller remainder fits");
                nxt[i + 1..].copy_from_slice(&rest);
                self.current = Some(nxt);
                break;
            }
        }
        Some(out)
    }
}
