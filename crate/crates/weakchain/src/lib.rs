//! Brute-force resistance auditing for 802.11 wireless security stacks.
//!
//! The library quantifies how long an exhaustive key search takes against
//! each component of a wireless deployment (cipher keys, passphrases),
//! compares the result to a human-lifetime security budget, and finds the
//! weakest link in the stack. All audit arithmetic is exact: keyspaces are
//! arbitrary-precision integers, durations are arbitrary-precision
//! rationals, and floating point appears only in the one genuinely real
//! valued operation (the minimum character-set root) and in display
//! formatting.
//!
//! Modules:
//!
//! - [`keyspace`]: exact counting model (`2^bits`, `s^L`), crack durations,
//!   verdicts, and the minimum character-set root.
//! - [`charset`] and [`protocol`]: the named character sets and the
//!   three-layer protocol registry.
//! - [`stack`]: security stacks, per-component assessment, weakest-link
//!   ranking, and the passphrase policy recommender.
//! - [`oracle`]: desk-scale exhaustive enumeration that validates the
//!   counting model empirically and measures local throughput.
//! - [`duration`], [`decimal`], [`tables`], [`report`], [`config`]:
//!   formatting, reference-table regeneration, report emission, and config
//!   parsing for the CLI.
//!
//! The `parallel` feature (on by default) lets the oracle partition large
//! enumerations by leading symbol across a thread pool; disabling it gives
//! a fully sequential build with identical results.

pub mod charset;
pub mod config;
pub mod decimal;
pub mod duration;
pub mod error;
pub mod keyspace;
pub mod oracle;
pub mod protocol;
pub mod report;
pub mod stack;
pub mod tables;

pub use charset::{lookup, registry, registry_by_size, CharacterSet, PassphrasePolicy};
pub use config::{parse_config, AuditConfig};
pub use duration::{format_duration, FormattedDuration, TimeUnit};
pub use error::{Error, Result};
pub use keyspace::{
    cipher_keyspace, crack_duration, effective_keyspace, is_secure, min_charset_size,
    passphrase_keyspace, AttackModel, BigCount, ExactSeconds, LifetimeBudget, Verdict,
    SECONDS_PER_YEAR,
};
pub use oracle::{
    enumerate_keyspace, enumerate_keyspace_with, extrapolate_local_crack_time, find_target,
    find_target_with, for_each_candidate, EnumerationResult, Parallelism, SearchTrial,
    DEFAULT_ENUMERATION_CAP,
};
pub use protocol::{lookup_protocol, protocol_registry, CipherSpec, ProtocolInfo, SecurityLayer};
pub use report::{build_stack, render_report, run_audit, AuditOutcome};
pub use stack::{
    assess_component, recommend_min_charset, weakest_link, ComponentAssessment, ComponentKind,
    MinCharsetRecommendation, SecurityComponent, SecurityStack, WeakestLinkReport,
};
pub use tables::{build_table, render_tables, OutputFormat, Table, TableId};
