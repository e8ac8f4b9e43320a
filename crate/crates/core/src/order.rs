//! The order of `<ε_{m,n}, ε_{m,n}>` as the cokernel of
//! `ψ: KSp^{-2}(X) → H^{4n+2}(X) ≅ Z`, `X = S^{4m-1} ∧ Q_{n-m+1}`.
//!
//! `KSp^{-2}(X)` is free on `ξ_1, …, ξ_{n-m+1}`, with `ξ_k` over the cell
//! `S^{4(m+k-1)+2}`. Complexification sends `ξ_k` to `σ_k ξ'_k`, and
//! `ξ'_k` is the image of `ζ ⊗ x^{2k-1}` from `K^{-2}(Σ^{4m} CP^{2n-2m+1})`.
//! Hence
//!
//! ```text
//! |ψ(ξ_k)| = σ(m+k-1) · (2n+1)! · a_{2n-2m+1, 2k-1}
//! ```
//!
//! in units of the generator of `H^{4n+2}(X)`. The image is `d·Z` with
//! `d` the gcd of these values, and the group is `Z/d`. Signs are dropped
//! throughout since they do not change the subgroup.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::bott::{BottSigma, SigmaTable};
use crate::rational::{factorial, gcd_all, Integer, Rational};
use crate::series::TruncSeries;
use crate::{Error, Result};

/// An instance `(m, n)` with `1 ≤ m < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SamelsonParams {
    m: u32,
    n: u32,
}

impl SamelsonParams {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m >= 1 && m < n {
            Ok(Self { m, n })
        } else {
            Err(Error::InvalidParams { m, n })
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `2n - 2m + 1`: the complex dimension of the projective space whose
    /// top Chern-character coefficient lands in `H^{4n+2}(X)`, and the
    /// truncation cap used for the series.
    pub fn top_degree(&self) -> u32 {
        2 * (self.n - self.m) + 1
    }

    /// Rank of `KSp^{-2}(X)`, i.e. the number of generators `ξ_k`.
    pub fn rank(&self) -> u32 {
        self.n - self.m + 1
    }

    /// All instances with `n ≤ max_n`, ordered by `n` then `m`.
    pub fn sweep(max_n: u32) -> impl Iterator<Item = SamelsonParams> {
        (2..=max_n).flat_map(|n| (1..n).map(move |m| SamelsonParams { m, n }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiGenerator {
    /// 1-based position in the basis `ξ_1, …, ξ_{n-m+1}`.
    pub k: u32,
    /// `a_{2n-2m+1, 2k-1}`.
    pub chern_coeff: Rational,
    /// `(2n+1)!·chern_coeff`.
    pub phi_value: Integer,
    pub sigma: u32,
    pub psi_value: Integer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub params: SamelsonParams,
    pub generators: Vec<PsiGenerator>,
    pub computed_order: Integer,
    pub closed_form_order: Integer,
    pub verdict: Verdict,
}

impl OrderReport {
    /// `[X, Sp(n)]` is cyclic of the computed order.
    pub fn group_description(&self) -> String {
        format!("Z/{}", self.computed_order)
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }

    /// Whether the first generator alone already spans the image: every
    /// later `|ψ(ξ_k)|` is a multiple of `|ψ(ξ_1)|`.
    pub fn first_generator_dominates(&self) -> bool {
        let Some((first, rest)) = self.generators.split_first() else {
            return false;
        };
        let lead = first.psi_value.abs();
        !lead.is_zero() && rest.iter().all(|g| g.psi_value.is_multiple_of(&lead))
    }
}

pub fn build_generators(params: SamelsonParams) -> Result<Vec<PsiGenerator>> {
    build_generators_with(params, &BottSigma)
}

pub fn build_generators_with(
    params: SamelsonParams,
    sigma: &dyn SigmaTable,
) -> Result<Vec<PsiGenerator>> {
    let top = params.top_degree() as usize;
    let scale = factorial(2 * params.n + 1);
    let x = TruncSeries::exp_minus_one(top);
    let x_squared = x.pow(2);

    let mut generators = Vec::with_capacity(params.rank() as usize);
    // Odd powers x, x^3, x^5, … by repeated multiplication with x^2.
    let mut odd_power = x;
    for k in 1..=params.rank() {
        if k > 1 {
            odd_power = odd_power.try_mul(&x_squared)?;
        }
        let chern_coeff = odd_power.coefficient(top)?.clone();
        let phi = &chern_coeff * Rational::from_integer(scale.clone());
        if !phi.is_integer() {
            return Err(Error::IntegralityViolation {
                m: params.m,
                n: params.n,
                k,
            });
        }
        let phi_value = phi.to_integer();
        let sigma = sigma.sigma(params.m + k - 1);
        let psi_value = &phi_value * sigma;
        generators.push(PsiGenerator {
            k,
            chern_coeff,
            phi_value,
            sigma,
            psi_value,
        });
    }
    Ok(generators)
}

/// `(2n+1)!/(2n-2m+1)!` for even `m`, twice that for odd `m`.
pub fn closed_form(params: SamelsonParams) -> Integer {
    let quotient = factorial(2 * params.n + 1) / factorial(params.top_degree());
    if params.m.is_multiple_of(2) {
        quotient
    } else {
        quotient * 2u32
    }
}

pub fn compute_order(params: SamelsonParams) -> Result<OrderReport> {
    compute_order_with(params, &BottSigma)
}

pub fn compute_order_with(params: SamelsonParams, sigma: &dyn SigmaTable) -> Result<OrderReport> {
    let generators = build_generators_with(params, sigma)?;
    let values: Vec<Integer> = generators.iter().map(|g| g.psi_value.clone()).collect();
    let computed_order = gcd_all(&values)?;
    let closed_form_order = closed_form(params);
    let verdict = if computed_order == closed_form_order {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    Ok(OrderReport {
        params,
        generators,
        computed_order,
        closed_form_order,
        verdict,
    })
}

pub fn first_generator_dominates(params: SamelsonParams) -> Result<bool> {
    Ok(compute_order(params)?.first_generator_dominates())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::chern_via_stirling;
    use crate::rational::from_ratio;

    fn p(m: u32, n: u32) -> SamelsonParams {
        SamelsonParams::new(m, n).unwrap()
    }

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn params_validation() {
        assert!(SamelsonParams::new(1, 2).is_ok());
        assert_eq!(
            SamelsonParams::new(3, 3),
            Err(Error::InvalidParams { m: 3, n: 3 })
        );
        assert_eq!(
            SamelsonParams::new(0, 3),
            Err(Error::InvalidParams { m: 0, n: 3 })
        );
        assert_eq!(
            SamelsonParams::new(4, 2),
            Err(Error::InvalidParams { m: 4, n: 2 })
        );
    }

    #[test]
    fn sweep_order_and_size() {
        let all: Vec<_> = SamelsonParams::sweep(4).map(|q| (q.m(), q.n())).collect();
        assert_eq!(all, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(SamelsonParams::sweep(12).count(), 66);
        assert_eq!(SamelsonParams::sweep(1).count(), 0);
    }

    #[test]
    fn generators_for_two_three() {
        let g = build_generators(p(2, 3)).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].chern_coeff, from_ratio(1, 6));
        assert_eq!(g[0].phi_value, int(840));
        assert_eq!(g[0].sigma, 1);
        assert_eq!(g[0].psi_value, int(840));
        // a_{3,3} = 1, σ(3) = 2
        assert_eq!(g[1].chern_coeff, from_ratio(1, 1));
        assert_eq!(g[1].psi_value, int(10080));
    }

    #[test]
    fn generators_for_one_two() {
        let g = build_generators(p(1, 2)).unwrap();
        assert_eq!(g[0].chern_coeff, from_ratio(1, 6));
        assert_eq!(g[0].phi_value, int(20));
        assert_eq!(g[0].sigma, 2);
        assert_eq!(g[0].psi_value, int(40));
        assert_eq!(g[1].chern_coeff, from_ratio(1, 1));
        assert_eq!(g[1].phi_value, int(120));
        assert_eq!(g[1].sigma, 1);
        assert_eq!(g[1].psi_value, int(120));
    }

    #[test]
    fn generator_coefficients_match_stirling_route() {
        for params in SamelsonParams::sweep(9) {
            for g in build_generators(params).unwrap() {
                assert_eq!(
                    g.chern_coeff,
                    chern_via_stirling(params.top_degree(), 2 * g.k - 1)
                );
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(p(2, 3)), int(840));
        assert_eq!(closed_form(p(1, 2)), int(40));
        assert_eq!(closed_form(p(3, 4)), int(120960));
    }

    #[test]
    fn orders_for_small_instances() {
        let r = compute_order(p(2, 3)).unwrap();
        assert_eq!(r.computed_order, int(840));
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.group_description(), "Z/840");

        let r = compute_order(p(1, 2)).unwrap();
        assert_eq!(r.computed_order, int(40));
        assert!(r.is_match());
        for g in &r.generators {
            assert!(g.psi_value.is_multiple_of(&r.computed_order));
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(first_generator_dominates(p(1, 2)).unwrap());
        assert!(first_generator_dominates(p(2, 4)).unwrap());
    }

    #[test]
    fn corrupted_sigma_flips_verdict() {
        let halved = |j: u32| if j == 1 { 1 } else { BottSigma.sigma(j) };
        let r = compute_order_with(p(1, 2), &halved).unwrap();
        assert_eq!(r.computed_order, int(20));
        assert_eq!(r.verdict, Verdict::Mismatch);
    }
}
