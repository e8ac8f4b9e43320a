use num_integer::Integer as _;
use num_traits::Signed;
use samelson_core::bott::{complexification_sigma, BottSigma, SigmaTable};
use samelson_core::order::{build_generators, compute_order_with};
use samelson_core::rational::{factorial, stirling2};
use samelson_core::{closed_form, compute_order, Integer, SamelsonParams, Verdict};

/// The σ list exactly as the basis-scaling statement gives it: the first two
/// entries depend on the parity of m, the last on the parity of n, and the
/// entries in between alternate.
fn stated_endpoints(params: SamelsonParams) -> (u32, u32, u32) {
    let (first, second) = if params.m().is_multiple_of(2) {
        (1, 2)
    } else {
        (2, 1)
    };
    let last = if params.n().is_multiple_of(2) { 1 } else { 2 };
    (first, second, last)
}

#[test]
fn sigma_sequence_matches_stated_endpoints() {
    for params in SamelsonParams::sweep(12) {
        let seq: Vec<u32> = (1..=params.rank())
            .map(|k| complexification_sigma(params.m() + k - 1).sigma())
            .collect();
        let (first, second, last) = stated_endpoints(params);
        assert_eq!(seq[0], first, "{params:?}");
        assert_eq!(seq[1], second, "{params:?}");
        assert_eq!(*seq.last().unwrap(), last, "{params:?}");
        assert!(seq.windows(2).all(|w| w[0] != w[1]), "{params:?}");
    }
}

#[test]
fn theorem_reproduced_up_to_twelve() {
    for params in SamelsonParams::sweep(12) {
        let report = compute_order(params).unwrap();
        assert_eq!(report.verdict, Verdict::Match, "{params:?}");
        assert!(report.first_generator_dominates(), "{params:?}");
        assert_eq!(report.computed_order, report.generators[0].psi_value.abs());
        assert_eq!(
            report.group_description(),
            format!("Z/{}", closed_form(params))
        );
    }
}

#[test]
fn parity_mechanism_keeps_the_factor_two() {
    for params in SamelsonParams::sweep(12) {
        for k in 2..=params.rank() {
            let scaled = factorial(2 * k - 1) * stirling2(params.top_degree(), 2 * k - 1);
            assert!(scaled.is_even(), "{params:?} k = {k}");
        }
    }
}

#[test]
fn every_generator_value_is_divisible_by_the_order() {
    for params in SamelsonParams::sweep(10) {
        let report = compute_order(params).unwrap();
        for g in &report.generators {
            assert!(g.psi_value.is_multiple_of(&report.computed_order));
            assert_eq!(g.psi_value, &g.phi_value * g.sigma);
        }
    }
}

#[test]
fn sweep_extends_past_default_bound() {
    for params in SamelsonParams::sweep(18).filter(|p| p.n() > 12) {
        assert!(compute_order(params).unwrap().is_match(), "{params:?}");
    }
}

#[test]
fn flipping_any_sigma_is_detected() {
    // Flipping σ(j) breaks the instance with m = j, whose first generator uses it.
    for j in 1..12u32 {
        let flipped = move |i: u32| {
            let s = BottSigma.sigma(i);
            if i == j {
                3 - s
            } else {
                s
            }
        };
        let params = SamelsonParams::new(j, 12).unwrap();
        let report = compute_order_with(params, &flipped).unwrap();
        assert_eq!(report.verdict, Verdict::Mismatch, "j = {j}");
    }
}

#[test]
fn first_generator_value_is_closed_form() {
    for params in SamelsonParams::sweep(12) {
        let g = &build_generators(params).unwrap()[0];
        let expected: Integer =
            factorial(2 * params.n() + 1) / factorial(params.top_degree()) * g.sigma;
        assert_eq!(g.psi_value, expected);
    }
}
