//! Security stacks: the components of an 802.11 deployment, their
//! assessments, and the weakest-link ranking.
//!
//! Cipher and passphrase components get exact keyspaces and crack times.
//! Access-control and authentication protocols carry no quantitative model,
//! so they ride along as descriptive entries that document the stack without
//! ever being ranked.

use num_bigint::BigUint;
use num_traits::One;

use crate::charset::{registry_by_size, CharacterSet, PassphrasePolicy};
use crate::duration::format_duration;
use crate::error::{Error, Result};
use crate::keyspace::{
    cipher_keyspace, crack_duration, effective_keyspace, is_secure, min_charset_size,
    nth_root_floor, passphrase_keyspace, AttackModel, BigCount, ExactSeconds, LifetimeBudget,
    Verdict,
};
use crate::protocol::{CipherSpec, SecurityLayer};

/// What a stack component is: an assessable keyed cipher or passphrase, or a
/// descriptive (unranked) protocol entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentKind {
    Cipher(CipherSpec),
    Passphrase {
        policy: PassphrasePolicy,
        /// A governing cipher caps the passphrase keyspace at its own.
        governing: Option<CipherSpec>,
    },
    Descriptive {
        layer: SecurityLayer,
        protocol_name: String,
    },
}

/// One element of a security stack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecurityComponent {
    id: String,
    kind: ComponentKind,
}

impl SecurityComponent {
    pub fn cipher(id: impl Into<String>, spec: CipherSpec) -> Self {
        SecurityComponent {
            id: id.into(),
            kind: ComponentKind::Cipher(spec),
        }
    }

    pub fn passphrase(
        id: impl Into<String>,
        policy: PassphrasePolicy,
        governing: Option<CipherSpec>,
    ) -> Self {
        SecurityComponent {
            id: id.into(),
            kind: ComponentKind::Passphrase { policy, governing },
        }
    }

    pub fn descriptive(
        id: impl Into<String>,
        layer: SecurityLayer,
        protocol_name: impl Into<String>,
    ) -> Self {
        SecurityComponent {
            id: id.into(),
            kind: ComponentKind::Descriptive {
                layer,
                protocol_name: protocol_name.into(),
            },
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> &ComponentKind {
        &self.kind
    }

    /// Whether the component has a keyspace and takes part in ranking.
    pub fn is_assessable(&self) -> bool {
        !matches!(self.kind, ComponentKind::Descriptive { .. })
    }

    /// Human-readable summary of what the component is.
    pub fn describe(&self) -> String {
        match &self.kind {
            ComponentKind::Cipher(spec) => format!("cipher key, {spec}"),
            ComponentKind::Passphrase { policy, governing } => {
                let set = policy.charset();
                let base = format!(
                    "passphrase, {} characters from the {}-symbol set \"{}\"",
                    policy.length(),
                    set.size(),
                    set.name()
                );
                match governing {
                    Some(spec) => format!("{base}, governed by {spec}"),
                    None => base,
                }
            }
            ComponentKind::Descriptive {
                layer,
                protocol_name,
            } => format!("{layer} layer protocol, {protocol_name}"),
        }
    }
}

/// An ordered set of components plus the attack model and budget they are
/// judged against.
#[derive(Debug, Clone)]
pub struct SecurityStack {
    components: Vec<SecurityComponent>,
    attack: AttackModel,
    budget: LifetimeBudget,
}

impl SecurityStack {
    /// Requires at least one assessable component and unique ids.
    pub fn new(
        components: Vec<SecurityComponent>,
        attack: AttackModel,
        budget: LifetimeBudget,
    ) -> Result<Self> {
        if !components.iter().any(SecurityComponent::is_assessable) {
            return Err(Error::NoAssessableComponent);
        }
        let mut seen = std::collections::HashSet::new();
        for c in &components {
            if !seen.insert(c.id.as_str()) {
                return Err(Error::DuplicateComponentId(c.id.clone()));
            }
        }
        Ok(SecurityStack {
            components,
            attack,
            budget,
        })
    }

    pub fn components(&self) -> &[SecurityComponent] {
        &self.components
    }

    pub fn attack(&self) -> &AttackModel {
        &self.attack
    }

    pub fn budget(&self) -> &LifetimeBudget {
        &self.budget
    }
}

/// The assessment of one component. Keyspace, duration and verdict are
/// present exactly when the component is assessable.
#[derive(Debug, Clone)]
pub struct ComponentAssessment {
    component_id: String,
    description: String,
    keyspace: Option<BigCount>,
    duration: Option<ExactSeconds>,
    duration_text: String,
    secure: Option<Verdict>,
}

impl ComponentAssessment {
    pub fn component_id(&self) -> &str {
        &self.component_id
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn keyspace(&self) -> Option<&BigCount> {
        self.keyspace.as_ref()
    }

    pub fn duration(&self) -> Option<&ExactSeconds> {
        self.duration.as_ref()
    }

    pub fn duration_text(&self) -> &str {
        &self.duration_text
    }

    pub fn secure(&self) -> Option<Verdict> {
        self.secure
    }

    pub fn is_assessable(&self) -> bool {
        self.duration.is_some()
    }
}

/// Computes keyspace, crack duration and verdict for one component.
pub fn assess_component(
    component: &SecurityComponent,
    attack: &AttackModel,
    budget: &LifetimeBudget,
) -> Result<ComponentAssessment> {
    let keyspace = match &component.kind {
        ComponentKind::Cipher(spec) => Some(cipher_keyspace(spec.effective_key_bits())?),
        ComponentKind::Passphrase { policy, governing } => {
            let raw = passphrase_keyspace(policy.charset().size(), policy.length())?;
            let cap = governing
                .as_ref()
                .map(|spec| cipher_keyspace(spec.effective_key_bits()))
                .transpose()?;
            Some(effective_keyspace(&raw, cap.as_ref()))
        }
        ComponentKind::Descriptive { .. } => None,
    };
    let (duration, duration_text, secure) = match &keyspace {
        Some(ks) => {
            let d = crack_duration(ks, attack);
            let text = format_duration(&d).to_string();
            let verdict = is_secure(&d, budget);
            (Some(d), text, Some(verdict))
        }
        None => (None, "n/a".to_string(), None),
    };
    Ok(ComponentAssessment {
        component_id: component.id.clone(),
        description: component.describe(),
        keyspace,
        duration,
        duration_text,
        secure,
    })
}

/// The minimum character-set size for a passphrase length to outlast the
/// budget: the real root, its exact integer ceiling, and the smallest named
/// set that reaches it (none when even 62 symbols fall short).
#[derive(Debug, Clone)]
pub struct MinCharsetRecommendation {
    length: u32,
    real_value: f64,
    integer_ceiling: BigCount,
    named_set: Option<CharacterSet>,
}

impl MinCharsetRecommendation {
    pub fn length(&self) -> u32 {
        self.length
    }

    /// The real `length`-th root of `budget_seconds * rate`.
    pub fn real_value(&self) -> f64 {
        self.real_value
    }

    /// Smallest integer set size whose keyspace strictly outlasts the budget.
    pub fn integer_ceiling(&self) -> &BigCount {
        &self.integer_ceiling
    }

    pub fn named_set(&self) -> Option<&CharacterSet> {
        self.named_set.as_ref()
    }

    /// The advice a report prints for this recommendation.
    pub fn advice_text(&self) -> String {
        match &self.named_set {
            Some(set) => format!(
                "generate the {}-character passphrase completely randomly from a set of \
                 at least {} characters; the smallest named set that suffices is \
                 \"{}\" ({} characters)",
                self.length,
                self.integer_ceiling,
                set.name(),
                set.size()
            ),
            None => format!(
                "generate the {}-character passphrase completely randomly from a set of \
                 at least {} characters; no named character set is that large, so \
                 increase the passphrase length",
                self.length, self.integer_ceiling
            ),
        }
    }
}

/// Exact strict check: does a set of `size` symbols at this length outlast
/// the budget?
fn clears_budget(
    size: &BigUint,
    length: u32,
    budget: &LifetimeBudget,
    attack: &AttackModel,
) -> bool {
    // size^length / rate > budget  <=>  size^length * budget_den > budget_num * rate
    let seconds = budget.seconds().as_ratio();
    let num = seconds.numer().magnitude();
    let den = seconds.denom().magnitude();
    size.pow(length) * den > num * attack.rate().as_uint()
}

/// Minimum character-set size for `length`-character passphrases, as a real
/// root plus an exactly verified integer ceiling and named-set suggestion.
pub fn recommend_min_charset(
    length: u32,
    budget: &LifetimeBudget,
    attack: &AttackModel,
) -> Result<MinCharsetRecommendation> {
    let real_value = min_charset_size(length, budget, attack)?;

    // floor(T)'s integer root r satisfies r^L <= T < (r+1)^L for the strict
    // threshold T = budget_seconds * rate, so the ceiling is r + 1. The
    // fix-up loops below keep that conclusion independent of any rounding.
    let seconds = budget.seconds().as_ratio();
    let threshold_floor = (seconds.numer().magnitude() * attack.rate().as_uint())
        / seconds.denom().magnitude();
    let mut ceiling = nth_root_floor(&threshold_floor, length) + BigUint::one();
    while !clears_budget(&ceiling, length, budget, attack) {
        ceiling += BigUint::one();
    }
    while ceiling > BigUint::one() {
        let lower = &ceiling - BigUint::one();
        if clears_budget(&lower, length, budget, attack) {
            ceiling = lower;
        } else {
            break;
        }
    }

    let named_set = registry_by_size()
        .into_iter()
        .find(|set| BigUint::from(set.size()) >= ceiling);
    Ok(MinCharsetRecommendation {
        length,
        real_value,
        integer_ceiling: BigCount::new(ceiling),
        named_set,
    })
}

/// A full stack audit: every component assessed, ranked ascending by crack
/// time, with the weakest link called out.
#[derive(Debug, Clone)]
pub struct WeakestLinkReport {
    assessments: Vec<ComponentAssessment>,
    weakest_id: String,
    overall_secure: Verdict,
    recommendation: Option<MinCharsetRecommendation>,
}

impl WeakestLinkReport {
    /// Assessable components sorted ascending by exact duration (declaration
    /// order breaks ties), descriptive components appended unranked.
    pub fn assessments(&self) -> &[ComponentAssessment] {
        &self.assessments
    }

    pub fn weakest_id(&self) -> &str {
        &self.weakest_id
    }

    /// Secure iff every assessable component is secure.
    pub fn overall_secure(&self) -> Verdict {
        self.overall_secure
    }

    /// Populated when the weakest component is a passphrase.
    pub fn recommendation(&self) -> Option<&MinCharsetRecommendation> {
        self.recommendation.as_ref()
    }
}

/// Assesses every component and ranks them to find the weakest link.
pub fn weakest_link(stack: &SecurityStack) -> Result<WeakestLinkReport> {
    let mut ranked: Vec<ComponentAssessment> = Vec::new();
    let mut descriptive: Vec<ComponentAssessment> = Vec::new();
    for component in stack.components() {
        let assessment = assess_component(component, stack.attack(), stack.budget())?;
        if assessment.is_assessable() {
            ranked.push(assessment);
        } else {
            descriptive.push(assessment);
        }
    }
    if ranked.is_empty() {
        return Err(Error::NoAssessableComponent);
    }

    // Stable sort: exact-equal durations keep declaration order.
    ranked.sort_by(|a, b| {
        let da = a.duration().expect("ranked entries have durations");
        let db = b.duration().expect("ranked entries have durations");
        da.as_ratio().cmp(db.as_ratio())
    });

    let weakest_id = ranked[0].component_id().to_string();
    let overall_secure = if ranked
        .iter()
        .all(|a| a.secure().expect("ranked entries have verdicts").is_secure())
    {
        Verdict::Secure
    } else {
        Verdict::Insecure
    };

    let weakest_component = stack
        .components()
        .iter()
        .find(|c| c.id() == weakest_id)
        .expect("weakest id comes from the stack");
    let recommendation = match weakest_component.kind() {
        ComponentKind::Passphrase { policy, .. } => Some(recommend_min_charset(
            policy.length(),
            stack.budget(),
            stack.attack(),
        )?),
        _ => None,
    };

    let mut assessments = ranked;
    assessments.extend(descriptive);
    Ok(WeakestLinkReport {
        assessments,
        weakest_id,
        overall_secure,
        recommendation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charset::lookup;

    fn default_stack(components: Vec<SecurityComponent>) -> SecurityStack {
        SecurityStack::new(components, AttackModel::default(), LifetimeBudget::default()).unwrap()
    }

    fn passphrase_component(id: &str, set: &str, length: u32, governing: Option<CipherSpec>) -> SecurityComponent {
        let policy = PassphrasePolicy::new(lookup(set).unwrap(), length).unwrap();
        SecurityComponent::passphrase(id, policy, governing)
    }

    #[test]
    fn wep40_cipher_assessment_matches_reference() {
        let component = SecurityComponent::cipher("wep", CipherSpec::from_protocol("WEP", None).unwrap());
        let a = assess_component(&component, &AttackModel::default(), &LifetimeBudget::default()).unwrap();
        assert_eq!(a.duration_text(), "1.09951163 seconds");
        assert_eq!(a.secure(), Some(Verdict::Insecure));
        assert_eq!(a.keyspace().unwrap().to_decimal_string(), "1099511627776");
    }

    #[test]
    fn governed_passphrase_uses_effective_keyspace() {
        let wpa2 = CipherSpec::from_protocol("WPA2", None).unwrap();
        let short = passphrase_component("pp", "alphanumeric", 8, Some(wpa2.clone()));
        let a = assess_component(&short, &AttackModel::default(), &LifetimeBudget::default()).unwrap();
        assert_eq!(a.duration_text(), "3.63900176 minutes");
        assert_eq!(a.secure(), Some(Verdict::Insecure));

        // 26^63 dwarfs 2^256, so the cap binds and the verdict flips.
        let long = passphrase_component("pp", "lowercase", 63, Some(wpa2));
        let a = assess_component(&long, &AttackModel::default(), &LifetimeBudget::default()).unwrap();
        assert_eq!(a.duration_text(), "3.67174306×10^57 years");
        assert_eq!(a.secure(), Some(Verdict::Secure));
        assert_eq!(
            a.keyspace().unwrap().as_uint(),
            cipher_keyspace(256).unwrap().as_uint()
        );
    }

    #[test]
    fn descriptive_components_carry_no_numbers() {
        let c = SecurityComponent::descriptive("leap", SecurityLayer::Authentication, "LEAP");
        let a = assess_component(&c, &AttackModel::default(), &LifetimeBudget::default()).unwrap();
        assert!(a.keyspace().is_none());
        assert!(a.duration().is_none());
        assert!(a.secure().is_none());
        assert_eq!(a.duration_text(), "n/a");
    }

    #[test]
    fn weakest_link_finds_the_short_passphrase() {
        let wpa2 = CipherSpec::from_protocol("WPA2", None).unwrap();
        let stack = default_stack(vec![
            SecurityComponent::cipher("cipher", wpa2.clone()),
            passphrase_component("passphrase", "alphanumeric", 8, Some(wpa2)),
        ]);
        let report = weakest_link(&stack).unwrap();
        assert_eq!(report.weakest_id(), "passphrase");
        assert!(!report.overall_secure().is_secure());
        let rec = report.recommendation().unwrap();
        assert_eq!(rec.integer_ceiling().to_decimal_string(), "481");
        assert!(rec.named_set().is_none());
    }

    #[test]
    fn weakest_link_finds_the_weak_cipher() {
        let stack = default_stack(vec![
            SecurityComponent::cipher("cipher", CipherSpec::from_protocol("WEP", None).unwrap()),
            passphrase_component("passphrase", "digits", 13, None),
        ]);
        let report = weakest_link(&stack).unwrap();
        // 1.0995 s for the 40-bit key vs 10 s for the 13-digit passphrase.
        assert_eq!(report.weakest_id(), "cipher");
        assert!(report.recommendation().is_none());
        assert_eq!(report.assessments()[0].component_id(), "cipher");
        assert_eq!(report.assessments()[1].duration_text(), "10 seconds");
    }

    #[test]
    fn single_secure_cipher_stack() {
        let stack = default_stack(vec![SecurityComponent::cipher(
            "only",
            CipherSpec::from_protocol("WPA2", None).unwrap(),
        )]);
        let report = weakest_link(&stack).unwrap();
        assert_eq!(report.weakest_id(), "only");
        assert!(report.overall_secure().is_secure());
    }

    #[test]
    fn descriptive_components_rank_last_and_never_win() {
        let stack = default_stack(vec![
            SecurityComponent::descriptive("dot1x", SecurityLayer::AccessControl, "802.1X"),
            SecurityComponent::cipher("wep", CipherSpec::from_protocol("WEP", None).unwrap()),
        ]);
        let report = weakest_link(&stack).unwrap();
        assert_eq!(report.weakest_id(), "wep");
        assert_eq!(report.assessments().len(), 2);
        assert_eq!(report.assessments()[1].component_id(), "dot1x");
        assert!(!report.assessments()[1].is_assessable());
    }

    #[test]
    fn equal_keyspaces_tie_by_declaration_order() {
        // 16^10 == 2^40 exactly, so order of declaration decides.
        let stack = default_stack(vec![
            passphrase_component("hex10", "hexadecimal", 10, None),
            SecurityComponent::cipher("wep40", CipherSpec::from_protocol("WEP", None).unwrap()),
        ]);
        let report = weakest_link(&stack).unwrap();
        assert_eq!(report.weakest_id(), "hex10");

        let flipped = default_stack(vec![
            SecurityComponent::cipher("wep40", CipherSpec::from_protocol("WEP", None).unwrap()),
            passphrase_component("hex10", "hexadecimal", 10, None),
        ]);
        assert_eq!(weakest_link(&flipped).unwrap().weakest_id(), "wep40");
    }

    #[test]
    fn stack_validation() {
        let only_descriptive = SecurityStack::new(
            vec![SecurityComponent::descriptive(
                "tls",
                SecurityLayer::Authentication,
                "TLS",
            )],
            AttackModel::default(),
            LifetimeBudget::default(),
        );
        assert!(matches!(only_descriptive, Err(Error::NoAssessableComponent)));

        let dup = SecurityStack::new(
            vec![
                SecurityComponent::cipher("x", CipherSpec::new("A", 40).unwrap()),
                SecurityComponent::cipher("x", CipherSpec::new("B", 104).unwrap()),
            ],
            AttackModel::default(),
            LifetimeBudget::default(),
        );
        assert!(matches!(dup, Err(Error::DuplicateComponentId(_))));
    }

    #[test]
    fn recommendation_ceilings_match_exact_integer_checks() {
        let budget = LifetimeBudget::default();
        let attack = AttackModel::default();
        let expected: [(u32, &str, Option<&str>); 6] = [
            (5, "19517", None),
            (8, "481", None),
            (13, "45", Some("mixed-case-letters")),
            (16, "22", Some("lowercase")),
            (32, "5", Some("digits")),
            (63, "3", Some("digits")),
        ];
        for (length, ceiling, named) in expected {
            let rec = recommend_min_charset(length, &budget, &attack).unwrap();
            assert_eq!(rec.integer_ceiling().to_decimal_string(), ceiling, "L={length}");
            assert_eq!(rec.named_set().map(|s| s.name().to_string()).as_deref(), named, "L={length}");
        }
    }

    #[test]
    fn recommendation_reals_match_reference_roots() {
        let budget = LifetimeBudget::default();
        let attack = AttackModel::default();
        let expected = [
            (5, 19_516.289),
            (8, 480.284174),
            (13, 44.6840764),
            (16, 21.9153867),
            (32, 4.68138726),
            (63, 2.19032075),
        ];
        for (length, value) in expected {
            let rec = recommend_min_charset(length, &budget, &attack).unwrap();
            let rel = (rec.real_value() - value).abs() / value;
            assert!(rel < 1e-3, "L={length}: {} vs {value}", rec.real_value());
        }
    }

    #[test]
    fn advice_text_states_length_and_set() {
        let rec = recommend_min_charset(16, &LifetimeBudget::default(), &AttackModel::default()).unwrap();
        let text = rec.advice_text();
        assert!(text.contains("16-character"));
        assert!(text.contains("at least 22"));
        assert!(text.contains("lowercase"));
    }
}
