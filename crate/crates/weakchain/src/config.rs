//! Audit configuration files.
//!
//! Line-oriented `key = value`, UTF-8, `#` starts a comment, keys are
//! case-insensitive. Recognized keys:
//!
//! ```text
//! wlan_protocol               = WPA2            (required, registry name)
//! effective_key_bits          = 128             (optional override)
//! passphrase_charset          = alphanumeric    (registry name or integer size)
//! passphrase_length           = 8
//! attack_rate_keys_per_second = 1000000000000   (default 10^12)
//! lifetime_budget_years       = 89.78           (default 89.78)
//! descriptive_component       = layer:name      (repeatable)
//! ```
//!
//! `passphrase_charset` and `passphrase_length` come as a pair; leaving both
//! out audits the cipher alone.

use crate::charset::{lookup, CharacterSet};
use crate::error::{Error, Result};
use crate::keyspace::{AttackModel, BigCount, LifetimeBudget};
use crate::protocol::{lookup_protocol, SecurityLayer};

/// A parsed, registry-validated audit configuration.
#[derive(Debug, Clone)]
pub struct AuditConfig {
    wlan_protocol: String,
    effective_key_bits: Option<u32>,
    passphrase_charset: Option<CharacterSet>,
    passphrase_length: Option<u32>,
    attack: AttackModel,
    budget: LifetimeBudget,
    descriptive_components: Vec<(SecurityLayer, String)>,
}

impl AuditConfig {
    /// Canonical registry name of the wlan-layer protocol under audit.
    pub fn wlan_protocol(&self) -> &str {
        &self.wlan_protocol
    }

    pub fn effective_key_bits(&self) -> Option<u32> {
        self.effective_key_bits
    }

    pub fn passphrase_charset(&self) -> Option<&CharacterSet> {
        self.passphrase_charset.as_ref()
    }

    pub fn passphrase_length(&self) -> Option<u32> {
        self.passphrase_length
    }

    pub fn attack(&self) -> &AttackModel {
        &self.attack
    }

    pub fn budget(&self) -> &LifetimeBudget {
        &self.budget
    }

    pub fn descriptive_components(&self) -> &[(SecurityLayer, String)] {
        &self.descriptive_components
    }
}

fn config_error(line: usize, problem: impl Into<String>) -> Error {
    Error::Config {
        line,
        problem: problem.into(),
    }
}

fn parse_u32(value: &str, line: usize, key: &str) -> Result<u32> {
    value
        .parse::<u32>()
        .map_err(|_| config_error(line, format!("{key} must be a non-negative integer, got \"{value}\"")))
}

/// Parses and validates a config document. Every rejection names the line
/// and the offending token.
pub fn parse_config(text: &str) -> Result<AuditConfig> {
    let mut wlan_protocol: Option<String> = None;
    let mut effective_key_bits: Option<u32> = None;
    let mut passphrase_charset: Option<CharacterSet> = None;
    let mut passphrase_length: Option<u32> = None;
    let mut attack: Option<AttackModel> = None;
    let mut budget: Option<LifetimeBudget> = None;
    let mut descriptive_components: Vec<(SecurityLayer, String)> = Vec::new();
    let mut seen: std::collections::HashSet<String> = std::collections::HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| config_error(line, format!("expected key = value, got \"{content}\"")))?;
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim();
        if value.is_empty() {
            return Err(config_error(line, format!("key \"{key}\" has an empty value")));
        }
        if key != "descriptive_component" && !seen.insert(key.clone()) {
            return Err(config_error(line, format!("duplicate key \"{key}\"")));
        }

        match key.as_str() {
            "wlan_protocol" => {
                let info = lookup_protocol(value).map_err(|e| e.at_line(line))?;
                if !info.is_cipher() {
                    return Err(Error::NotACipherProtocol(info.name.to_string()).at_line(line));
                }
                wlan_protocol = Some(info.name.to_string());
            }
            "effective_key_bits" => {
                let bits = parse_u32(value, line, "effective_key_bits")?;
                if bits < 1 {
                    return Err(Error::InvalidKeyBits(bits).at_line(line));
                }
                effective_key_bits = Some(bits);
            }
            "passphrase_charset" => {
                let set = if value.bytes().all(|b| b.is_ascii_digit()) {
                    let size = value.parse::<u64>().map_err(|_| {
                        config_error(line, format!("character set size \"{value}\" is out of range"))
                    })?;
                    CharacterSet::sized(value, size).map_err(|e| e.at_line(line))?
                } else {
                    lookup(value).map_err(|e| e.at_line(line))?
                };
                passphrase_charset = Some(set);
            }
            "passphrase_length" => {
                let length = parse_u32(value, line, "passphrase_length")?;
                if length < 1 {
                    return Err(Error::InvalidLength(length).at_line(line));
                }
                passphrase_length = Some(length);
            }
            "attack_rate_keys_per_second" => {
                let rate = BigCount::parse_decimal(value).map_err(|e| e.at_line(line))?;
                let description = format!("{value} keys/second (configured)");
                attack = Some(AttackModel::new(rate, description).map_err(|e| e.at_line(line))?);
            }
            "lifetime_budget_years" => {
                budget = Some(LifetimeBudget::from_years_str(value).map_err(|e| e.at_line(line))?);
            }
            "descriptive_component" => {
                let (layer, name) = value.split_once(':').ok_or_else(|| {
                    config_error(line, format!("expected layer:name, got \"{value}\""))
                })?;
                let layer = SecurityLayer::parse(layer).map_err(|e| match e {
                    Error::Config { problem, .. } => config_error(line, problem),
                    other => other.at_line(line),
                })?;
                let name = name.trim();
                if name.is_empty() {
                    return Err(config_error(line, "descriptive component name is empty"));
                }
                descriptive_components.push((layer, name.to_string()));
            }
            unknown => {
                return Err(config_error(line, format!("unknown key \"{unknown}\"")));
            }
        }
    }

    let wlan_protocol = wlan_protocol
        .ok_or_else(|| Error::ConfigIncomplete("wlan_protocol is required".to_string()))?;
    match (&passphrase_charset, &passphrase_length) {
        (Some(_), Some(_)) | (None, None) => {}
        (Some(_), None) => {
            return Err(Error::ConfigIncomplete(
                "passphrase_charset given without passphrase_length".to_string(),
            ))
        }
        (None, Some(_)) => {
            return Err(Error::ConfigIncomplete(
                "passphrase_length given without passphrase_charset".to_string(),
            ))
        }
    }

    Ok(AuditConfig {
        wlan_protocol,
        effective_key_bits,
        passphrase_charset,
        passphrase_length,
        attack: attack.unwrap_or_default(),
        budget: budget.unwrap_or_default(),
        descriptive_components,
    })
}
