//! Chern-character coefficients `a_{j,k}`: the coefficient of `t^j` in
//! `ch(x^k) = (e^t - 1)^k` on `CP^N`.
//!
//! Three independent routes are provided:
//!
//! * [`chern_via_series`] raises the truncated series `e^t - 1` to the `k`-th
//!   power and reads off degree `j`.
//! * [`chern_via_compositions`] expands the product termwise, summing
//!   `∏ 1/i_l!` over ordered compositions `i_1 + … + i_k = j` with every
//!   part `≥ 1`. It enumerates nondecreasing part lists and weights each by
//!   its number of distinct orderings.
//! * [`chern_via_stirling`] uses the classical identity
//!   `a_{j,k} = k!·S(j,k)/j!`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::order::SamelsonParams;
use crate::rational::{factorial, stirling2, Integer, Rational};
use crate::series::TruncSeries;
use crate::{Error, Result};

/// Largest `j` the composition expansion accepts.
pub const COMPOSITION_LIMIT: u32 = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernCoefficient {
    pub j: u32,
    pub k: u32,
    pub value: Rational,
}

impl ChernCoefficient {
    pub fn new(j: u32, k: u32) -> Self {
        Self {
            j,
            k,
            value: chern_via_series(j, k),
        }
    }

    /// `j!·a_{j,k}`, which is always the integer `k!·S(j,k)`.
    pub fn scaled_by_factorial(&self) -> Rational {
        &self.value * Rational::from_integer(factorial(self.j))
    }
}

pub fn chern_via_series(j: u32, k: u32) -> Rational {
    let cap = j as usize;
    TruncSeries::exp_minus_one(cap)
        .pow(k)
        .coefficient(cap)
        .cloned()
        .expect("degree equals cap")
}

pub fn chern_via_compositions(j: u32, k: u32) -> Result<Rational> {
    if j > COMPOSITION_LIMIT {
        return Err(Error::OracleSizeLimit {
            j,
            limit: COMPOSITION_LIMIT,
        });
    }
    if k > j || k == 0 {
        return Ok(if j == 0 && k == 0 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    let inv_factorials: Vec<Rational> = (0..=j)
        .map(|i| Rational::from_integer(factorial(i)).recip())
        .collect();
    let mut walker = PartitionWalker {
        inv_factorials: &inv_factorials,
        k_factorial: factorial(k),
        parts: Vec::with_capacity(k as usize),
        total: Rational::zero(),
    };
    walker.walk(j, k, 1);
    Ok(walker.total)
}

pub fn chern_via_stirling(j: u32, k: u32) -> Rational {
    Rational::new(factorial(k) * stirling2(j, k), factorial(j))
}

/// `Σ_{i=1}^{n-m} 1/(i!·(2n-2m+1-i)!)`: the sum over splittings of the odd
/// degree `2n-2m+1` into an unordered pair of parts. Each unordered pair
/// appears twice among ordered compositions, so twice this sum is
/// `ch_{2n-2m+1}(x^2)`.
pub fn pair_sum_half_range(params: SamelsonParams) -> Rational {
    let top = params.top_degree();
    (1..=params.n() - params.m())
        .map(|i| Rational::from_integer(factorial(i) * factorial(top - i)).recip())
        .fold(Rational::zero(), |acc, term| acc + term)
}

/// All three coefficient routes side by side. The composition route is
/// `None` when `j` exceeds [`COMPOSITION_LIMIT`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub j: u32,
    pub k: u32,
    pub series: Rational,
    pub compositions: Option<Rational>,
    pub stirling: Rational,
}

impl Triangulation {
    pub fn compute(j: u32, k: u32) -> Self {
        Self {
            j,
            k,
            series: chern_via_series(j, k),
            compositions: chern_via_compositions(j, k).ok(),
            stirling: chern_via_stirling(j, k),
        }
    }

    pub fn agree(&self) -> bool {
        self.series == self.stirling && self.compositions.as_ref().is_none_or(|c| *c == self.series)
    }
}

struct PartitionWalker<'a> {
    inv_factorials: &'a [Rational],
    k_factorial: Integer,
    parts: Vec<u32>,
    total: Rational,
}

impl PartitionWalker<'_> {
    fn walk(&mut self, remaining: u32, slots: u32, min_part: u32) {
        if slots == 0 {
            if remaining == 0 {
                self.total += self.weight();
            }
            return;
        }
        // Remaining slots each take at least `part`.
        let mut part = min_part;
        while part * slots <= remaining {
            self.parts.push(part);
            self.walk(remaining - part, slots - 1, part);
            self.parts.pop();
            part += 1;
        }
    }

    /// `(k! / ∏ multiplicity!) · ∏ 1/part!` for the current nondecreasing list.
    fn weight(&self) -> Rational {
        let mut orderings = self.k_factorial.clone();
        let mut term = Rational::one();
        let mut run = 0u32;
        for (idx, &part) in self.parts.iter().enumerate() {
            term *= &self.inv_factorials[part as usize];
            run += 1;
            if self.parts.get(idx + 1) != Some(&part) {
                orderings /= factorial(run);
                run = 0;
            }
        }
        term * Rational::from_integer(orderings)
    }
}
