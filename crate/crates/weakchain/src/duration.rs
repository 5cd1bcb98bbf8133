//! Human-readable duration formatting.
//!
//! Crack times span 30+ orders of magnitude, so each value is scaled into
//! the unit band it reads best in, then rendered to 9 significant digits
//! (half-even). Years of 10^9 and above switch to scientific notation.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::decimal;
use crate::error::{Error, Result};
use crate::keyspace::{ExactSeconds, SECONDS_PER_YEAR};

/// Significant digits carried by every formatted duration.
pub const DISPLAY_SIG_DIGITS: u32 = 9;

/// Scientific notation kicks in at this many years.
const SCIENTIFIC_YEARS_THRESHOLD: u64 = 1_000_000_000;

/// Display units, smallest to largest. Unit words are plural and
/// unhyphenated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TimeUnit {
    Nanoseconds,
    Microseconds,
    Milliseconds,
    Seconds,
    Minutes,
    Hours,
    Days,
    Years,
}

impl TimeUnit {
    pub fn as_str(self) -> &'static str {
        match self {
            TimeUnit::Nanoseconds => "nanoseconds",
            TimeUnit::Microseconds => "microseconds",
            TimeUnit::Milliseconds => "milliseconds",
            TimeUnit::Seconds => "seconds",
            TimeUnit::Minutes => "minutes",
            TimeUnit::Hours => "hours",
            TimeUnit::Days => "days",
            TimeUnit::Years => "years",
        }
    }

    /// Exact length of one unit in seconds.
    pub fn seconds_per_unit(self) -> BigRational {
        let (numer, denom): (u64, u64) = match self {
            TimeUnit::Nanoseconds => (1, 1_000_000_000),
            TimeUnit::Microseconds => (1, 1_000_000),
            TimeUnit::Milliseconds => (1, 1_000),
            TimeUnit::Seconds => (1, 1),
            TimeUnit::Minutes => (60, 1),
            TimeUnit::Hours => (3_600, 1),
            TimeUnit::Days => (86_400, 1),
            TimeUnit::Years => (SECONDS_PER_YEAR, 1),
        };
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let wanted = text.trim().to_ascii_lowercase();
        [
            TimeUnit::Nanoseconds,
            TimeUnit::Microseconds,
            TimeUnit::Milliseconds,
            TimeUnit::Seconds,
            TimeUnit::Minutes,
            TimeUnit::Hours,
            TimeUnit::Days,
            TimeUnit::Years,
        ]
        .into_iter()
        .find(|u| u.as_str() == wanted)
        .ok_or(Error::InvalidDecimal(text.to_string()))
    }
}

impl std::fmt::Display for TimeUnit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A rendered duration: number text (plain or `M×10^E`) plus its unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormattedDuration {
    value_text: String,
    unit: TimeUnit,
}

impl FormattedDuration {
    pub fn value_text(&self) -> &str {
        &self.value_text
    }

    pub fn unit(&self) -> TimeUnit {
        self.unit
    }

    /// The rendered value converted back to seconds. Exact arithmetic on the
    /// rounded text, so it differs from the source by at most the display
    /// rounding (half an ulp at 9 significant digits).
    pub fn approx_seconds(&self) -> Result<BigRational> {
        Ok(decimal::parse_number(&self.value_text)? * self.unit.seconds_per_unit())
    }
}

impl std::fmt::Display for FormattedDuration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}", self.value_text, self.unit)
    }
}

fn seconds_threshold(numer: u64, denom: u64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Scales a duration into its display band and renders it.
pub fn format_duration(d: &ExactSeconds) -> FormattedDuration {
    let v = d.as_ratio();

    let unit = if *v < seconds_threshold(1, 1_000_000) {
        TimeUnit::Nanoseconds
    } else if *v < seconds_threshold(1, 1_000) {
        TimeUnit::Microseconds
    } else if *v < seconds_threshold(1, 1) {
        TimeUnit::Milliseconds
    } else if *v < seconds_threshold(60, 1) {
        TimeUnit::Seconds
    } else if *v < seconds_threshold(3_600, 1) {
        TimeUnit::Minutes
    } else if *v < seconds_threshold(86_400, 1) {
        TimeUnit::Hours
    } else if *v < seconds_threshold(SECONDS_PER_YEAR, 1) {
        TimeUnit::Days
    } else {
        TimeUnit::Years
    };

    let scaled = v / unit.seconds_per_unit();
    let scientific = unit == TimeUnit::Years
        && scaled >= BigRational::from_integer(BigInt::from(SCIENTIFIC_YEARS_THRESHOLD));
    let value_text = if scientific {
        decimal::to_scientific_string(&scaled, DISPLAY_SIG_DIGITS)
    } else {
        decimal::to_plain_string(&scaled, DISPLAY_SIG_DIGITS)
    };
    FormattedDuration { value_text, unit }
}
