//! Exact arithmetic for keyspace sizes, crack durations and security verdicts.
//!
//! Everything in this module is integer or rational arithmetic with no
//! magnitude limit: a 256-bit keyspace is held exactly, and a crack duration
//! is an exact fraction of seconds. The single floating-point escape hatch is
//! [`min_charset_size`], which evaluates a real-valued root; its result is
//! never used for verdicts without an exact integer re-check (see
//! [`crate::stack::recommend_min_charset`]).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::decimal;
use crate::error::{Error, Result};

/// Seconds in a 365-day year, the year convention used throughout.
pub const SECONDS_PER_YEAR: u64 = 365 * 86_400;

/// Count of candidate keys. Arbitrary precision, never negative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn new(value: BigUint) -> Self {
        BigCount(value)
    }

    /// Ten to the given power, handy for attack rates like 10^12.
    pub fn ten_pow(exp: u32) -> Self {
        BigCount(BigUint::from(10u32).pow(exp))
    }

    pub fn as_uint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_uint(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Nearest double, saturating to infinity far beyond 2^1024.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Full decimal expansion, no separators.
    pub fn to_decimal_string(&self) -> String {
        self.0.to_str_radix(10)
    }

    pub fn parse_decimal(text: &str) -> Result<Self> {
        let cleaned = text.trim();
        if cleaned.is_empty() || !cleaned.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidDecimal(text.to_string()));
        }
        Ok(BigCount(
            BigUint::parse_bytes(cleaned.as_bytes(), 10)
                .ok_or_else(|| Error::InvalidDecimal(text.to_string()))?,
        ))
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact non-negative duration in seconds, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactSeconds(BigRational);

impl ExactSeconds {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::from_ratio(BigRational::new(numerator, denominator))
    }

    pub fn from_ratio(ratio: BigRational) -> Result<Self> {
        if ratio.is_negative() {
            return Err(Error::NegativeDuration);
        }
        Ok(ExactSeconds(ratio))
    }

    pub fn zero() -> Self {
        ExactSeconds(BigRational::zero())
    }

    pub fn from_integer_seconds(seconds: u64) -> Self {
        ExactSeconds(BigRational::from_integer(BigInt::from(seconds)))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Numerator of the reduced fraction (non-negative).
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced fraction (positive).
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Approximate double, for display-side math only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl fmt::Display for ExactSeconds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} s", self.0.numer(), self.0.denom())
    }
}

/// The assumed brute-force capability: how many candidate keys per second.
#[derive(Debug, Clone)]
pub struct AttackModel {
    rate: BigCount,
    description: String,
}

impl AttackModel {
    pub fn new(rate_keys_per_second: BigCount, description: impl Into<String>) -> Result<Self> {
        if rate_keys_per_second.is_zero() {
            return Err(Error::InvalidAttackRate);
        }
        Ok(AttackModel {
            rate: rate_keys_per_second,
            description: description.into(),
        })
    }

    pub fn rate(&self) -> &BigCount {
        &self.rate
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

impl Default for AttackModel {
    /// 10,000 ASIC chips at 100 MHz each, 10^12 keys per second.
    fn default() -> Self {
        AttackModel {
            rate: BigCount::ten_pow(12),
            description: "10,000 ASIC chips at 100 MHz (10^12 keys/second)".to_string(),
        }
    }
}

/// Crack-time threshold below which a component counts as breakable.
///
/// The default is 89.78 years, the highest national average life expectancy
/// at birth: a key that survives a full human lifetime is treated as secure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LifetimeBudget {
    years: BigRational,
    seconds: ExactSeconds,
}

impl LifetimeBudget {
    pub fn from_years_ratio(years: BigRational) -> Result<Self> {
        if years.is_negative() {
            return Err(Error::NegativeDuration);
        }
        let seconds =
            ExactSeconds::from_ratio(&years * BigRational::from_integer(SECONDS_PER_YEAR.into()))?;
        Ok(LifetimeBudget { years, seconds })
    }

    /// Parses a plain decimal such as `89.78`.
    pub fn from_years_str(text: &str) -> Result<Self> {
        Self::from_years_ratio(decimal::parse_decimal(text)?)
    }

    pub fn years(&self) -> &BigRational {
        &self.years
    }

    /// The budget as exact seconds. Always `years * 31,536,000`.
    pub fn seconds(&self) -> &ExactSeconds {
        &self.seconds
    }

    /// Decimal rendering of the year count, e.g. `89.78`.
    pub fn years_text(&self) -> String {
        decimal::to_plain_string(&self.years, 9)
    }
}

impl Default for LifetimeBudget {
    fn default() -> Self {
        LifetimeBudget::from_years_str("89.78").expect("default budget is a valid decimal")
    }
}

/// Outcome of comparing a crack duration against a budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Secure,
    Insecure,
}

impl Verdict {
    pub fn is_secure(self) -> bool {
        matches!(self, Verdict::Secure)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Secure => "secure",
            Verdict::Insecure => "insecure",
        })
    }
}

/// Keyspace of a cipher with the given effective key size: exactly 2^bits.
pub fn cipher_keyspace(bits: u32) -> Result<BigCount> {
    if bits < 1 {
        return Err(Error::InvalidKeyBits(bits));
    }
    Ok(BigCount(BigUint::one() << bits))
}

/// Keyspace of a passphrase: exactly `set_size^length`.
pub fn passphrase_keyspace(set_size: u64, length: u32) -> Result<BigCount> {
    if set_size < 1 {
        return Err(Error::InvalidSetSize(set_size));
    }
    if length < 1 {
        return Err(Error::InvalidLength(length));
    }
    Ok(BigCount(BigUint::from(set_size).pow(length)))
}

/// Caps a passphrase keyspace by the governing cipher keyspace.
///
/// A passphrase space larger than the cipher's own keyspace buys nothing:
/// the attacker can search the cipher keys directly. The effective space is
/// the minimum of the two.
pub fn effective_keyspace(passphrase: &BigCount, cipher: Option<&BigCount>) -> BigCount {
    match cipher {
        Some(c) if c < passphrase => c.clone(),
        _ => passphrase.clone(),
    }
}

/// Worst-case exhaustive search time: `keyspace / rate`, as an exact rational.
pub fn crack_duration(keyspace: &BigCount, attack: &AttackModel) -> ExactSeconds {
    // AttackModel guarantees rate >= 1, so the ratio is well formed.
    ExactSeconds(BigRational::new(
        BigInt::from(keyspace.0.clone()),
        BigInt::from(attack.rate.0.clone()),
    ))
}

/// Secure iff the duration strictly exceeds the budget. Exact comparison.
pub fn is_secure(duration: &ExactSeconds, budget: &LifetimeBudget) -> Verdict {
    if duration.0 > budget.seconds.0 {
        Verdict::Secure
    } else {
        Verdict::Insecure
    }
}

// Guard digits carried through the root extraction below. The result is
// accurate to ~10^-30 relative before the final conversion to f64, so the
// f64 is correctly rounded to its full precision.
const ROOT_GUARD_DIGITS: u32 = 30;

/// Smallest real character-set size whose `length`-character passphrases
/// outlast the budget: the `length`-th root of `budget_seconds * rate`.
///
/// Computed by integer root extraction with 30 guard digits, so the returned
/// double carries its full 15-17 significant digits.
pub fn min_charset_size(length: u32, budget: &LifetimeBudget, attack: &AttackModel) -> Result<f64> {
    if length < 1 {
        return Err(Error::InvalidLength(length));
    }
    let radicand = budget.seconds.as_ratio()
        * BigRational::from_integer(BigInt::from(attack.rate.0.clone()));
    if radicand.is_zero() {
        return Err(Error::ZeroBudget);
    }
    let num = radicand
        .numer()
        .to_biguint()
        .expect("radicand is non-negative");
    let den = radicand
        .denom()
        .to_biguint()
        .expect("denominator is positive");

    // floor((num/den * 10^(G*length))) has an exact integer length-th root
    // equal to floor(root * 10^G) up to one unit in the last guard digit.
    let scale = BigUint::from(10u32).pow(ROOT_GUARD_DIGITS * length);
    let scaled = num * scale / den;
    let root = nth_root_floor(&scaled, length);

    let value = BigRational::new(
        BigInt::from(root),
        BigInt::from(BigUint::from(10u32).pow(ROOT_GUARD_DIGITS)),
    );
    Ok(value.to_f64().unwrap_or(f64::INFINITY))
}

/// floor(a^(1/n)) by integer Newton iteration.
pub(crate) fn nth_root_floor(a: &BigUint, n: u32) -> BigUint {
    assert!(n >= 1, "root order must be at least 1");
    if n == 1 || a.is_zero() || a.is_one() {
        return a.clone();
    }
    // Start above the root: a < 2^bits implies root < 2^ceil(bits/n).
    let shift = a.bits().div_ceil(u64::from(n));
    let mut x = BigUint::one() << shift;
    loop {
        let next = (&x * (n - 1) + a / x.pow(n - 1)) / n;
        if next >= x {
            break;
        }
        x = next;
    }
    while x.pow(n) > *a {
        x -= BigUint::one();
    }
    x
}
