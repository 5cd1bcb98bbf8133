//! Randomized invariants of the audit arithmetic: exactness against
//! independent recomputation, monotonicity, linearity, cap semantics,
//! ranking coherence, the weakest-chain rule, and display round-trips.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

use weakchain::{
    cipher_keyspace, crack_duration, effective_keyspace, format_duration, min_charset_size,
    passphrase_keyspace, recommend_min_charset, weakest_link, AttackModel, BigCount,
    CharacterSet, ExactSeconds, LifetimeBudget, PassphrasePolicy, SecurityComponent,
    SecurityStack,
};

fn attack(rate: u64) -> AttackModel {
    AttackModel::new(BigCount::from(rate), format!("{rate} keys/second")).unwrap()
}

fn passphrase_component(id: String, size: u64, length: u32) -> SecurityComponent {
    let set = CharacterSet::sized(format!("set-{size}"), size).unwrap();
    let policy = PassphrasePolicy::new(set, length).unwrap();
    SecurityComponent::passphrase(id, policy, None)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn passphrase_keyspace_matches_repeated_multiplication(
        size in 1u64..=62,
        length in 1u32..=64,
    ) {
        let ks = passphrase_keyspace(size, length).unwrap();
        let mut manual = BigUint::one();
        for _ in 0..length {
            manual *= size;
        }
        prop_assert_eq!(ks.as_uint(), &manual);
    }

    #[test]
    fn cipher_keyspace_matches_repeated_doubling(bits in 1u32..=256) {
        let ks = cipher_keyspace(bits).unwrap();
        let mut manual = BigUint::one();
        for _ in 0..bits {
            manual *= 2u32;
        }
        prop_assert_eq!(ks.as_uint(), &manual);
    }

    #[test]
    fn keyspace_strictly_monotone_in_set_size(size in 1u64..=61, length in 1u32..=64) {
        let smaller = passphrase_keyspace(size, length).unwrap();
        let larger = passphrase_keyspace(size + 1, length).unwrap();
        prop_assert!(smaller.as_uint() < larger.as_uint());
    }

    #[test]
    fn keyspace_monotone_in_length(size in 1u64..=62, length in 1u32..=63) {
        let shorter = passphrase_keyspace(size, length).unwrap();
        let longer = passphrase_keyspace(size, length + 1).unwrap();
        if size == 1 {
            prop_assert_eq!(shorter.as_uint(), longer.as_uint());
        } else {
            prop_assert!(shorter.as_uint() < longer.as_uint());
        }
    }

    #[test]
    fn duration_is_exactly_keyspace_over_rate(
        size in 1u64..=62,
        length in 1u32..=64,
        rate in 1u64..=10_000_000_000_000,
    ) {
        let ks = passphrase_keyspace(size, length).unwrap();
        let duration = crack_duration(&ks, &attack(rate));
        let product = duration.as_ratio() * BigRational::from_integer(BigInt::from(rate));
        let expected = BigRational::from_integer(BigInt::from(ks.as_uint().clone()));
        prop_assert_eq!(product, expected);
    }

    #[test]
    fn effective_keyspace_is_the_minimum(
        size in 1u64..=62,
        length in 1u32..=64,
        bits in 1u32..=256,
    ) {
        let passphrase = passphrase_keyspace(size, length).unwrap();
        let cipher = cipher_keyspace(bits).unwrap();
        let effective = effective_keyspace(&passphrase, Some(&cipher));
        prop_assert!(effective.as_uint() <= passphrase.as_uint());
        prop_assert!(effective.as_uint() <= cipher.as_uint());
        prop_assert!(
            effective.as_uint() == passphrase.as_uint()
                || effective.as_uint() == cipher.as_uint()
        );
        // Without a cap the passphrase keyspace passes through untouched.
        let uncapped = effective_keyspace(&passphrase, None);
        prop_assert_eq!(uncapped.as_uint(), passphrase.as_uint());
    }

    #[test]
    fn ranking_by_duration_equals_ranking_by_keyspace(
        specs in proptest::collection::vec((1u64..=62, 1u32..=64), 2..=6),
        rate in 1u64..=10_000_000_000_000,
    ) {
        let components: Vec<SecurityComponent> = specs
            .iter()
            .enumerate()
            .map(|(i, &(size, length))| passphrase_component(format!("c{i}"), size, length))
            .collect();
        let stack = SecurityStack::new(components, attack(rate), LifetimeBudget::default()).unwrap();
        let report = weakest_link(&stack).unwrap();

        // The same order must fall out of a stable sort by raw keyspace.
        let mut by_keyspace: Vec<(usize, BigUint)> = specs
            .iter()
            .enumerate()
            .map(|(i, &(size, length))| {
                (i, passphrase_keyspace(size, length).unwrap().into_uint())
            })
            .collect();
        by_keyspace.sort_by(|a, b| a.1.cmp(&b.1));
        let expected: Vec<String> = by_keyspace.iter().map(|(i, _)| format!("c{i}")).collect();
        let actual: Vec<String> = report
            .assessments()
            .iter()
            .map(|a| a.component_id().to_string())
            .collect();
        prop_assert_eq!(actual, expected);
    }

    #[test]
    fn weakest_chain_rule_and_removal_invariance(
        specs in proptest::collection::vec((1u64..=62, 1u32..=64), 2..=6),
        removal_choice in 0usize..5,
    ) {
        let components: Vec<SecurityComponent> = specs
            .iter()
            .enumerate()
            .map(|(i, &(size, length))| passphrase_component(format!("c{i}"), size, length))
            .collect();
        let stack = SecurityStack::new(
            components.clone(),
            AttackModel::default(),
            LifetimeBudget::default(),
        )
        .unwrap();
        let report = weakest_link(&stack).unwrap();

        // Overall verdict is the conjunction of component verdicts.
        let all_secure = report
            .assessments()
            .iter()
            .all(|a| a.secure().unwrap().is_secure());
        prop_assert_eq!(report.overall_secure().is_secure(), all_secure);

        // The weakest entry leads the ranking and no entry beats it.
        let weakest_duration = report.assessments()[0].duration().unwrap().as_ratio().clone();
        prop_assert_eq!(report.assessments()[0].component_id(), report.weakest_id());
        for a in report.assessments() {
            prop_assert!(a.duration().unwrap().as_ratio() >= &weakest_duration);
        }

        // Dropping any non-weakest component leaves the weakest in place.
        let victim = removal_choice % components.len();
        if components[victim].id() != report.weakest_id() {
            let mut reduced = components;
            reduced.remove(victim);
            let reduced_stack = SecurityStack::new(
                reduced,
                AttackModel::default(),
                LifetimeBudget::default(),
            )
            .unwrap();
            let reduced_report = weakest_link(&reduced_stack).unwrap();
            prop_assert_eq!(reduced_report.weakest_id(), report.weakest_id());
        }
    }

    #[test]
    fn formatted_durations_round_trip_to_nine_digits(
        mantissa in 1u64..,
        exponent in 0u32..=60,
        denominator in 1u64..,
    ) {
        let value = BigRational::new(
            BigInt::from(mantissa) * BigInt::from(10u32).pow(exponent),
            BigInt::from(denominator),
        );
        let duration = ExactSeconds::from_ratio(value.clone()).unwrap();
        let formatted = format_duration(&duration);
        let recovered = formatted.approx_seconds().unwrap();
        // Half-even rounding at the 9th significant digit keeps the
        // round-trip within half an ulp: 0.5 * 10^-8 relative.
        let rel = ((&recovered - &value) / &value).abs();
        prop_assert!(
            rel <= BigRational::new(BigInt::one(), BigInt::from(200_000_000u64)),
            "{} came back as {}",
            value,
            recovered
        );
    }

    #[test]
    fn recommended_ceiling_is_tight(
        length in 1u32..=64,
        rate in 1u64..=10_000_000_000_000,
        years_units in 1u64..=200,
        years_cents in 0u64..=99,
    ) {
        let years = format!("{years_units}.{years_cents:02}");
        let budget = LifetimeBudget::from_years_str(&years).unwrap();
        let attack = attack(rate);
        let rec = recommend_min_charset(length, &budget, &attack).unwrap();

        let threshold = budget.seconds().as_ratio()
            * BigRational::from_integer(BigInt::from(rate));
        let ceiling = rec.integer_ceiling().as_uint().clone();
        let clears = |s: &BigUint| {
            BigRational::from_integer(BigInt::from(s.pow(length)))
                / BigRational::from_integer(BigInt::from(rate))
                > budget.seconds().as_ratio().clone()
        };
        prop_assert!(clears(&ceiling), "ceiling {ceiling} misses {threshold}");
        if ceiling > BigUint::one() {
            let below = &ceiling - BigUint::one();
            prop_assert!(!clears(&below), "ceiling {ceiling} is not tight");
        }
        // The float root stays consistent with the exact integer: the
        // ceiling is ceil(root), or root + 1 when the root lands exactly
        // on an integer, so it sits in [root, root + 1] up to float noise.
        let root = rec.real_value();
        prop_assert!(root > 0.0);
        let ceiling_f = rec.integer_ceiling().to_f64();
        let slack = root.max(1.0) * 1e-9;
        prop_assert!(ceiling_f >= root - slack, "ceiling {ceiling_f} below root {root}");
        prop_assert!(ceiling_f <= root + 1.0 + slack, "ceiling {ceiling_f} above root {root} + 1");
    }
}

/// The reference lengths: the float root and the exact integer answer agree
/// on both sides of the threshold.
#[test]
fn root_round_trip_at_reference_lengths() {
    let budget = LifetimeBudget::default();
    let attack = AttackModel::default();
    let rate = BigUint::from(10u64).pow(12);
    let threshold = budget.seconds().as_ratio() * BigRational::from_integer(BigInt::from(rate));

    for length in [5u32, 8, 13, 16, 32, 63] {
        let x = min_charset_size(length, &budget, &attack).unwrap();
        let ceil = x.ceil() as u64;
        let floor = x.floor() as u64;
        let clears = |s: u64| {
            BigRational::from_integer(BigInt::from(BigUint::from(s).pow(length)))
                > threshold.clone()
        };
        assert!(clears(ceil), "length {length}: ceil {ceil} must clear the budget");
        if ceil > floor && floor >= 1 {
            assert!(
                !clears(floor),
                "length {length}: floor {floor} must not clear the budget"
            );
        }
    }
}

/// Hex-passphrase equivalences hold exactly: 16^10 = 2^40, 16^26 = 2^104,
/// 16^64 = 2^256.
#[test]
fn hexadecimal_equivalences_are_exact() {
    for (length, bits) in [(10u32, 40u32), (26, 104), (64, 256)] {
        let hex = passphrase_keyspace(16, length).unwrap();
        let cipher = cipher_keyspace(bits).unwrap();
        assert_eq!(hex.as_uint(), cipher.as_uint(), "16^{length} vs 2^{bits}");
    }
}

/// Durations are never negative and zero only for a zero keyspace, which the
/// constructors already rule out.
#[test]
fn durations_are_positive() {
    let ks = passphrase_keyspace(1, 1).unwrap();
    let d = crack_duration(&ks, &AttackModel::default());
    assert!(!d.is_zero());
    assert!(!d.as_ratio().is_negative());
}
