//! Exact decimal rendering and parsing for rationals.
//!
//! Rendering rounds half-to-even at the requested significant digit and is
//! done entirely in integer arithmetic, so arbitrarily large or small values
//! format correctly.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Digits of `value` rounded half-even to `sig` significant digits, plus the
/// decimal exponent `e` such that `10^(e-1) <= value < 10^e` after rounding.
///
/// `value` must be strictly positive. The digit string has exactly `sig`
/// characters.
pub fn significant_digits(value: &BigRational, sig: u32) -> (String, i64) {
    assert!(sig >= 1);
    assert!(value.is_positive(), "significant_digits needs value > 0");
    let p = value.numer().magnitude().clone();
    let q = value.denom().magnitude().clone();

    // Decimal digit counts bound the exponent to two candidates.
    let dp = p.to_str_radix(10).len() as i64;
    let dq = q.to_str_radix(10).len() as i64;
    let e = dp - dq;
    let at_least_10_pow_e = if e >= 0 {
        p >= &q * pow10(e as u64)
    } else {
        &p * pow10((-e) as u64) >= q
    };
    let mut exp10 = if at_least_10_pow_e { e + 1 } else { e };

    // Mantissa: round(value * 10^(sig - exp10)) with sig digits.
    let k = i64::from(sig) - exp10;
    let (a, b) = if k >= 0 {
        (&p * pow10(k as u64), q.clone())
    } else {
        (p.clone(), &q * pow10((-k) as u64))
    };
    let mut mantissa = div_round_half_even(&a, &b);

    let limit = pow10(u64::from(sig));
    if mantissa >= limit {
        // 999...9.5+ rounded up to the next power of ten.
        mantissa = pow10(u64::from(sig) - 1);
        exp10 += 1;
    }
    let digits = mantissa.to_str_radix(10);
    debug_assert_eq!(digits.len(), sig as usize);
    (digits, exp10)
}

/// Plain decimal rendering with `sig` significant digits, trailing zeros in
/// the fraction trimmed: `1.09951163`, `100`, `0.208827065`.
pub fn to_plain_string(value: &BigRational, sig: u32) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let (digits, exp10) = significant_digits(value, sig);
    render_plain(&digits, exp10)
}

/// Scientific rendering with `sig` significant digits: `3.67174306×10^57`.
pub fn to_scientific_string(value: &BigRational, sig: u32) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let (digits, exp10) = significant_digits(value, sig);
    let mantissa = render_plain(&digits, 1);
    format!("{mantissa}×10^{}", exp10 - 1)
}

fn render_plain(digits: &str, exp10: i64) -> String {
    let sig = digits.len() as i64;
    if exp10 <= 0 {
        let frac = digits.trim_end_matches('0');
        format!("0.{}{}", "0".repeat((-exp10) as usize), frac)
    } else if exp10 < sig {
        let (int_part, frac_part) = digits.split_at(exp10 as usize);
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac}")
        }
    } else {
        format!("{digits}{}", "0".repeat((exp10 - sig) as usize))
    }
}

fn pow10(exp: u64) -> BigUint {
    BigUint::from(10u32).pow(u32::try_from(exp).expect("decimal exponent fits u32"))
}

fn div_round_half_even(a: &BigUint, b: &BigUint) -> BigUint {
    let q = a / b;
    let r = a - &q * b;
    let twice: BigUint = &r << 1;
    let round_up = match twice.cmp(b) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Equal => (&q & BigUint::one()) == BigUint::one(),
        std::cmp::Ordering::Less => false,
    };
    if round_up {
        q + BigUint::one()
    } else {
        q
    }
}

/// Parses a plain non-negative decimal (`89.78`, `120`, `0.001`) exactly.
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let cleaned = text.trim();
    let bad = || Error::InvalidDecimal(text.to_string());
    let (int_part, frac_part) = match cleaned.split_once('.') {
        Some((i, f)) => (i, f),
        None => (cleaned, ""),
    };
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let numer = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(bad)?;
    let denom = BigInt::from(pow10(frac_part.len() as u64));
    Ok(BigRational::new(numer, denom))
}

/// Parses either a plain decimal or the scientific form emitted by
/// [`to_scientific_string`] (`1.51×10^9`).
pub fn parse_number(text: &str) -> Result<BigRational> {
    match text.split_once("×10^") {
        None => parse_decimal(text),
        Some((mantissa, exp)) => {
            let exp: i64 = exp
                .parse()
                .map_err(|_| Error::InvalidDecimal(text.to_string()))?;
            let base = parse_decimal(mantissa)?;
            let factor = BigRational::from_integer(BigInt::from(pow10(exp.unsigned_abs())));
            Ok(if exp >= 0 { base * factor } else { base / factor })
        }
    }
}

/// Renders a finite positive double with `sig` significant digits, using the
/// exact binary value of the double.
pub fn f64_to_plain_string(value: f64, sig: u32) -> String {
    match BigRational::from_float(value) {
        Some(r) if !r.is_zero() => to_plain_string(&r, sig),
        _ => "0".to_string(),
    }
}
