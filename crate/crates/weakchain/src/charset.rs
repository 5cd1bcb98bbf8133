//! Character sets passphrases draw from, plus the named registry.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// An alphabet of distinct symbols. The member list is optional: analytic
/// operations only need the size, exhaustive enumeration needs the symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSet {
    name: String,
    size: u64,
    members: Option<Vec<char>>,
}

impl CharacterSet {
    /// A set known only by its size, e.g. from `passphrase_charset = 36`.
    pub fn sized(name: impl Into<String>, size: u64) -> Result<Self> {
        if size < 1 {
            return Err(Error::InvalidSetSize(size));
        }
        Ok(CharacterSet {
            name: name.into(),
            size,
            members: None,
        })
    }

    /// A set with an explicit, ordered member list. Members must be distinct.
    pub fn with_members(name: impl Into<String>, members: impl IntoIterator<Item = char>) -> Result<Self> {
        let name = name.into();
        let members: Vec<char> = members.into_iter().collect();
        let distinct: HashSet<char> = members.iter().copied().collect();
        if members.is_empty() || distinct.len() != members.len() {
            return Err(Error::BadMemberList {
                name,
                size: members.len() as u64,
                members: distinct.len(),
            });
        }
        Ok(CharacterSet {
            name,
            size: members.len() as u64,
            members: Some(members),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn members(&self) -> Option<&[char]> {
        self.members.as_deref()
    }

    /// Members, or an error naming the set when it has none.
    pub fn require_members(&self) -> Result<&[char]> {
        self.members()
            .ok_or_else(|| Error::NoMembers(self.name.clone()))
    }
}

const DIGITS: &str = "0123456789";
const LOWERCASE: &str = "abcdefghijklmnopqrstuvwxyz";
const UPPERCASE: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
const HEX: &str = "0123456789abcdef";

/// Registry names in canonical declaration order.
pub const REGISTRY_NAMES: [&str; 7] = [
    "digits",
    "lowercase",
    "uppercase",
    "letters-one-case-plus-digits",
    "mixed-case-letters",
    "alphanumeric",
    "hexadecimal",
];

fn build(name: &str) -> CharacterSet {
    let members: String = match name {
        "digits" => DIGITS.to_string(),
        "lowercase" => LOWERCASE.to_string(),
        "uppercase" => UPPERCASE.to_string(),
        "letters-one-case-plus-digits" => format!("{LOWERCASE}{DIGITS}"),
        "mixed-case-letters" => format!("{LOWERCASE}{UPPERCASE}"),
        "alphanumeric" => format!("{LOWERCASE}{UPPERCASE}{DIGITS}"),
        "hexadecimal" => HEX.to_string(),
        other => unreachable!("not a registry name: {other}"),
    };
    CharacterSet::with_members(name, members.chars()).expect("registry sets are well formed")
}

/// All named character sets, in declaration order.
pub fn registry() -> Vec<CharacterSet> {
    REGISTRY_NAMES.iter().map(|n| build(n)).collect()
}

/// Case-insensitive lookup of a named set.
pub fn lookup(name: &str) -> Result<CharacterSet> {
    let wanted = name.trim().to_ascii_lowercase();
    REGISTRY_NAMES
        .iter()
        .find(|n| **n == wanted)
        .map(|n| build(n))
        .ok_or_else(|| Error::UnknownCharset(name.to_string()))
}

/// Registry sets ordered by size then declaration order, for "smallest set
/// that clears a threshold" scans.
pub fn registry_by_size() -> Vec<CharacterSet> {
    let mut sets = registry();
    sets.sort_by_key(|s| s.size());
    sets
}

/// A character set plus a passphrase length: the full passphrase policy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassphrasePolicy {
    charset: CharacterSet,
    length: u32,
}

impl PassphrasePolicy {
    pub fn new(charset: CharacterSet, length: u32) -> Result<Self> {
        if length < 1 {
            return Err(Error::InvalidLength(length));
        }
        Ok(PassphrasePolicy { charset, length })
    }

    pub fn charset(&self) -> &CharacterSet {
        &self.charset
    }

    pub fn length(&self) -> u32 {
        self.length
    }
}
