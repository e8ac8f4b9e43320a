//! Arbitrary-precision integers and reduced rationals, plus the combinatorial
//! helpers the rest of the crate is built on.
//!
//! `Rational` is always stored in lowest terms with a positive denominator,
//! so structural equality is numeric equality.

use alloc::format;
use alloc::string::String;
use alloc::vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `k!`, exactly.
pub fn factorial(k: u32) -> Integer {
    (2..=k).fold(Integer::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    // Each partial product is C(n - k + i, i), so the division is exact.
    (1..=k).fold(Integer::one(), |acc, i| acc * (n - k + i) / i)
}

/// Positive generator of the subgroup of Z spanned by `values`.
pub fn gcd_all(values: &[Integer]) -> Result<Integer> {
    let g = values.iter().fold(Integer::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        Err(Error::DegenerateSubgroup)
    } else {
        Ok(g.abs())
    }
}

/// Stirling number of the second kind `S(j, k)`.
pub fn stirling2(j: u32, k: u32) -> Integer {
    if k > j {
        return Integer::zero();
    }
    let k = k as usize;
    // row[i] holds S(r, i) for the current r.
    let mut row = vec![Integer::zero(); k + 1];
    row[0] = Integer::one();
    for r in 1..=j as usize {
        for i in (1..=k.min(r)).rev() {
            let carried = core::mem::take(&mut row[i]) * i + &row[i - 1];
            row[i] = carried;
        }
        row[0] = Integer::zero();
    }
    core::mem::take(&mut row[k])
}

pub fn from_ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Renders `0` as `"0"` and everything else as `"p/q"`, including `"1/1"`.
pub fn fraction_string(value: &Rational) -> String {
    if value.is_zero() {
        String::from("0")
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
