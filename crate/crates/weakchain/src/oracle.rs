//! Empirical validation of the counting model on desk-scale keyspaces.
//!
//! The analytic path computes `s^L` by exponentiation; this module checks it
//! by actually generating every candidate in canonical odometer order
//! (rightmost position varies fastest) and counting what comes out. It also
//! times the run, so local throughput can be plugged into the crack-time
//! model in place of the reference attack rate.
//!
//! With the `parallel` feature (on by default) large spaces are partitioned
//! by leading symbol across threads; counts are summed, which is
//! order-independent, so the result is deterministic either way.

use std::hint::black_box;
use std::time::Instant;

use num_bigint::BigUint;

use crate::charset::CharacterSet;
use crate::error::{Error, Result};
use crate::keyspace::BigCount;

/// Spaces above this many candidates are refused; the analytic path exists
/// for them.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Below this many candidates, thread fan-out costs more than it saves.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: u64 = 65_536;

/// How an enumeration run schedules its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    /// Single thread, one odometer over the whole space.
    Sequential,
    /// Partition by leading symbol across the thread pool.
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Parallel
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

/// Outcome of one exhaustive enumeration run.
#[derive(Debug, Clone)]
pub struct EnumerationResult {
    charset_name: String,
    length: u32,
    enumerated_count: BigCount,
    elapsed_seconds: f64,
    throughput_keys_per_second: f64,
}

impl EnumerationResult {
    /// Builds a result from a raw measurement, deriving throughput.
    pub fn from_measurement(
        charset_name: impl Into<String>,
        length: u32,
        enumerated_count: BigCount,
        elapsed_seconds: f64,
    ) -> Self {
        // Sub-nanosecond elapsed readings are clock artifacts; clamp so the
        // derived throughput stays finite.
        let clamped = elapsed_seconds.max(1e-9);
        let throughput = enumerated_count.to_f64() / clamped;
        EnumerationResult {
            charset_name: charset_name.into(),
            length,
            enumerated_count,
            elapsed_seconds,
            throughput_keys_per_second: throughput,
        }
    }

    pub fn charset_name(&self) -> &str {
        &self.charset_name
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// Candidates actually generated, never the closed-form count.
    pub fn enumerated_count(&self) -> &BigCount {
        &self.enumerated_count
    }

    pub fn elapsed_seconds(&self) -> f64 {
        self.elapsed_seconds
    }

    pub fn throughput_keys_per_second(&self) -> f64 {
        self.throughput_keys_per_second
    }
}

/// One simulated brute-force search: where in the canonical order the
/// target sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTrial {
    target: String,
    tries_until_found: u64,
}

impl SearchTrial {
    pub fn target(&self) -> &str {
        &self.target
    }

    /// 1-based position of the target in canonical odometer order.
    pub fn tries_until_found(&self) -> u64 {
        self.tries_until_found
    }
}

/// In-place candidate generator: fixed prefix (for partitioned runs) plus
/// `var_len` odometer positions over `members`.
struct Odometer<'a> {
    members: &'a [char],
    indices: Vec<usize>,
    buffer: Vec<char>,
    fixed: usize,
}

impl<'a> Odometer<'a> {
    fn new(members: &'a [char], prefix: Option<char>, var_len: usize) -> Self {
        let fixed = usize::from(prefix.is_some());
        let mut buffer = Vec::with_capacity(fixed + var_len);
        buffer.extend(prefix);
        buffer.extend(std::iter::repeat(members[0]).take(var_len));
        Odometer {
            members,
            indices: vec![0; var_len],
            buffer,
            fixed,
        }
    }

    fn current(&self) -> &[char] {
        &self.buffer
    }

    /// Steps to the next candidate; false once the space is exhausted.
    fn advance(&mut self) -> bool {
        for pos in (0..self.indices.len()).rev() {
            self.indices[pos] += 1;
            if self.indices[pos] < self.members.len() {
                self.buffer[self.fixed + pos] = self.members[self.indices[pos]];
                return true;
            }
            self.indices[pos] = 0;
            self.buffer[self.fixed + pos] = self.members[0];
        }
        false
    }
}

fn scan(members: &[char], prefix: Option<char>, var_len: usize, mut visit: impl FnMut(&[char])) -> u64 {
    let mut odo = Odometer::new(members, prefix, var_len);
    let mut count = 0u64;
    loop {
        visit(odo.current());
        count += 1;
        if !odo.advance() {
            return count;
        }
    }
}

fn count_sequential(members: &[char], length: u32) -> u64 {
    scan(members, None, length as usize, |candidate| {
        black_box(candidate);
    })
}

#[cfg(feature = "parallel")]
fn count_parallel(members: &[char], length: u32) -> u64 {
    use rayon::prelude::*;
    members
        .par_iter()
        .map(|&lead| {
            scan(members, Some(lead), (length - 1) as usize, |candidate| {
                black_box(candidate);
            })
        })
        .sum()
}

fn checked_space(charset: &CharacterSet, length: u32, cap: u64) -> Result<u64> {
    if length < 1 {
        return Err(Error::InvalidLength(length));
    }
    let space = BigUint::from(charset.size()).pow(length);
    if space > BigUint::from(cap) {
        return Err(Error::EnumerationCapExceeded {
            space: space.to_string(),
            cap,
        });
    }
    Ok(u64::try_from(&space).expect("space fits u64 under the cap"))
}

/// Exhaustively generates and counts the space, with explicit cap and
/// scheduling choices.
pub fn enumerate_keyspace_with(
    charset: &CharacterSet,
    length: u32,
    cap: u64,
    mode: Parallelism,
) -> Result<EnumerationResult> {
    let members = charset.require_members()?;
    let space = checked_space(charset, length, cap)?;

    let start = Instant::now();
    let count = match mode {
        Parallelism::Sequential => count_sequential(members, length),
        #[cfg(feature = "parallel")]
        Parallelism::Parallel => {
            if space >= PARALLEL_THRESHOLD && length >= 2 {
                count_parallel(members, length)
            } else {
                count_sequential(members, length)
            }
        }
    };
    let elapsed = start.elapsed().as_secs_f64();
    debug_assert_eq!(count, space);
    Ok(EnumerationResult::from_measurement(
        charset.name(),
        length,
        BigCount::from(count),
        elapsed,
    ))
}

/// Exhaustively generates and counts the space with the default cap and
/// scheduling.
pub fn enumerate_keyspace(charset: &CharacterSet, length: u32) -> Result<EnumerationResult> {
    enumerate_keyspace_with(charset, length, DEFAULT_ENUMERATION_CAP, Parallelism::default())
}

/// Visits every candidate sequentially in canonical order. Returns the
/// generated count. Test hook for duplicate/coverage bookkeeping.
pub fn for_each_candidate(
    charset: &CharacterSet,
    length: u32,
    cap: u64,
    mut visit: impl FnMut(&[char]),
) -> Result<u64> {
    let members = charset.require_members()?;
    checked_space(charset, length, cap)?;
    Ok(scan(members, None, length as usize, |c| visit(c)))
}

/// Scans the canonical order until `target` appears; the trial records its
/// 1-based position. Sequential by construction: position is the point.
pub fn find_target_with(
    charset: &CharacterSet,
    length: u32,
    target: &str,
    cap: u64,
) -> Result<SearchTrial> {
    let members = charset.require_members()?;
    checked_space(charset, length, cap)?;

    let wanted: Vec<char> = target.chars().collect();
    let malformed = || Error::MalformedTarget {
        target: target.to_string(),
        charset: charset.name().to_string(),
        length,
    };
    if wanted.len() != length as usize || !wanted.iter().all(|c| members.contains(c)) {
        return Err(malformed());
    }

    let mut position = 0u64;
    let mut found = false;
    scan(members, None, length as usize, |candidate| {
        if !found {
            position += 1;
            found = candidate == wanted.as_slice();
        }
    });
    debug_assert!(found, "well-formed targets always appear");
    Ok(SearchTrial {
        target: target.to_string(),
        tries_until_found: position,
    })
}

/// [`find_target_with`] at the default cap.
pub fn find_target(charset: &CharacterSet, length: u32, target: &str) -> Result<SearchTrial> {
    find_target_with(charset, length, target, DEFAULT_ENUMERATION_CAP)
}

/// The crack-time model evaluated at a locally measured rate instead of the
/// reference attack rate: `keyspace / measured throughput`, in seconds.
/// Advisory only; verdicts never come from this path.
pub fn extrapolate_local_crack_time(
    measured: &EnumerationResult,
    keyspace: &BigCount,
) -> Result<f64> {
    if measured.throughput_keys_per_second <= 0.0 {
        return Err(Error::ZeroThroughput);
    }
    Ok(keyspace.to_f64() / measured.throughput_keys_per_second)
}
