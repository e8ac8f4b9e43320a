//! Truncated polynomials `Q[t]/(t^{D+1})`.
//!
//! This is the rational cohomology of `CP^D`, the target of the Chern
//! character. The cap `D` is fixed at construction and mixing caps is an
//! error.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::rational::{factorial, Integer, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(cap: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The generator `t`; collapses to zero when `cap == 0`.
    pub fn variable(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if cap >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Coefficients indexed by degree; the cap is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// `e^t - 1` truncated at `cap`: the Chern character of the reduced
    /// line bundle class `x = L - 1`.
    pub fn exp_minus_one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        for (j, c) in s.coeffs.iter_mut().enumerate().skip(1) {
            *c = Rational::from_integer(factorial(j as u32)).recip();
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, degree: usize) -> Result<&Rational> {
        self.coeffs.get(degree).ok_or(Error::DegreeOutOfRange {
            degree,
            cap: self.cap(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product, discarding every term above the cap.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(self.mul_same_cap(other))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut result = Self::one(self.cap());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_same_cap(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_same_cap(&base);
            }
        }
        result
    }

    fn check_cap(&self, other: &Self) -> Result<()> {
        if self.cap() != other.cap() {
            return Err(Error::CapMismatch {
                left: self.cap(),
                right: other.cap(),
            });
        }
        Ok(())
    }

    /// Convolves integer numerators over a common denominator, so each
    /// output coefficient is reduced once instead of once per term.
    fn mul_same_cap(&self, other: &Self) -> Self {
        let cap = self.cap();
        let (lhs, lhs_den) = self.integer_form();
        let (rhs, rhs_den) = other.integer_form();
        let mut sums = vec![Integer::zero(); cap + 1];
        for (i, a) in lhs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs[..=cap - i].iter().enumerate() {
                if !b.is_zero() {
                    sums[i + j] += a * b;
                }
            }
        }
        let den = lhs_den * rhs_den;
        Self {
            coeffs: sums
                .into_iter()
                .map(|s| Rational::new(s, den.clone()))
                .collect(),
        }
    }

    /// Numerators scaled to the lcm of all denominators, and that lcm.
    fn integer_form(&self) -> (Vec<Integer>, Integer) {
        let den = self
            .coeffs
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (nums, den)
    }
}
