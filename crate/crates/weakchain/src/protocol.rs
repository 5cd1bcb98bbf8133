//! Descriptive registry of 802.11 security-stack protocols, and the cipher
//! specifications derived from the wlan-layer entries.
//!
//! Only wlan-layer protocols carry effective key sizes. Access-control and
//! authentication protocols are documented for report completeness but are
//! never assigned a keyspace or ranked.

use crate::error::{Error, Result};

/// The three layers of the wireless security stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SecurityLayer {
    Wlan,
    AccessControl,
    Authentication,
}

impl SecurityLayer {
    pub fn as_str(self) -> &'static str {
        match self {
            SecurityLayer::Wlan => "wlan",
            SecurityLayer::AccessControl => "access-control",
            SecurityLayer::Authentication => "authentication",
        }
    }

    /// Case-insensitive parse of the layer names used in config files.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim().to_ascii_lowercase().as_str() {
            "wlan" => Ok(SecurityLayer::Wlan),
            "access-control" => Ok(SecurityLayer::AccessControl),
            "authentication" => Ok(SecurityLayer::Authentication),
            _ => Err(Error::Config {
                line: 0,
                problem: format!(
                    "unknown layer \"{text}\" (expected wlan, access-control or authentication)"
                ),
            }),
        }
    }
}

impl std::fmt::Display for SecurityLayer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One registry entry: a protocol, its layer, the effective key sizes it is
/// assessed at (empty when the protocol carries no key), and a short note.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolInfo {
    pub name: &'static str,
    pub layer: SecurityLayer,
    pub effective_key_bits: &'static [u32],
    pub notes: &'static str,
}

impl ProtocolInfo {
    /// Whether the protocol encrypts traffic and can be assessed as a cipher.
    pub fn is_cipher(&self) -> bool {
        !self.effective_key_bits.is_empty()
    }
}

const REGISTRY: &[ProtocolInfo] = &[
    ProtocolInfo {
        name: "WEP",
        layer: SecurityLayer::Wlan,
        effective_key_bits: &[40, 104],
        notes: "RC4 stream cipher with a 24-bit IV; effective key size 40 or 104 bits",
    },
    ProtocolInfo {
        name: "WPA",
        layer: SecurityLayer::Wlan,
        effective_key_bits: &[256],
        notes: "RC4 with a doubled IV; assessed at 256-bit key strength",
    },
    ProtocolInfo {
        name: "WPA2",
        layer: SecurityLayer::Wlan,
        effective_key_bits: &[256],
        notes: "AES block cipher; assessed at 256-bit key strength",
    },
    ProtocolInfo {
        name: "802.1X",
        layer: SecurityLayer::AccessControl,
        effective_key_bits: &[],
        notes: "port-based access control; forwards credentials to an authentication server, typically RADIUS",
    },
    ProtocolInfo {
        name: "RADIUS",
        layer: SecurityLayer::AccessControl,
        effective_key_bits: &[],
        notes: "central database of usernames, passwords and user attributes",
    },
    ProtocolInfo {
        name: "EAP",
        layer: SecurityLayer::AccessControl,
        effective_key_bits: &[],
        notes: "extensible intermediary between access control and authentication protocols",
    },
    ProtocolInfo {
        name: "TLS",
        layer: SecurityLayer::Authentication,
        effective_key_bits: &[],
        notes: "standardized SSL; certificate-based with symmetric and asymmetric ciphers",
    },
    ProtocolInfo {
        name: "Kerberos",
        layer: SecurityLayer::Authentication,
        effective_key_bits: &[],
        notes: "ticket-granting protocol built on symmetric ciphers",
    },
    ProtocolInfo {
        name: "LEAP",
        layer: SecurityLayer::Authentication,
        effective_key_bits: &[],
        notes: "Cisco EAP variant based on MS-CHAPv1, which is considered an unsecure protocol",
    },
    ProtocolInfo {
        name: "PEAP",
        layer: SecurityLayer::Authentication,
        effective_key_bits: &[],
        notes: "wraps EAP exchanges to keep credentials confidential",
    },
];

/// The full protocol table, in declaration order.
pub fn protocol_registry() -> &'static [ProtocolInfo] {
    REGISTRY
}

/// Case-insensitive lookup by protocol name.
pub fn lookup_protocol(name: &str) -> Result<&'static ProtocolInfo> {
    let wanted = name.trim().to_ascii_lowercase();
    REGISTRY
        .iter()
        .find(|p| p.name.to_ascii_lowercase() == wanted)
        .ok_or_else(|| Error::UnknownProtocol(name.to_string()))
}

/// A concrete cipher under assessment: a protocol label and the effective
/// key size in bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherSpec {
    protocol_label: String,
    effective_key_bits: u32,
}

impl CipherSpec {
    /// Direct construction with an arbitrary positive key size. The label is
    /// free text; use [`CipherSpec::from_protocol`] to enforce registry sizes.
    pub fn new(protocol_label: impl Into<String>, effective_key_bits: u32) -> Result<Self> {
        if effective_key_bits < 1 {
            return Err(Error::InvalidKeyBits(effective_key_bits));
        }
        Ok(CipherSpec {
            protocol_label: protocol_label.into(),
            effective_key_bits,
        })
    }

    /// Construction from a registry protocol. `bits` must be one of the
    /// protocol's known key sizes; omitted, it defaults to the first listed
    /// (40 for WEP, 256 for WPA/WPA2).
    pub fn from_protocol(name: &str, bits: Option<u32>) -> Result<Self> {
        let info = lookup_protocol(name)?;
        if !info.is_cipher() {
            return Err(Error::NotACipherProtocol(info.name.to_string()));
        }
        let chosen = match bits {
            Some(b) if info.effective_key_bits.contains(&b) => b,
            Some(b) => {
                let allowed = info
                    .effective_key_bits
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                return Err(Error::UnsupportedKeyBits {
                    protocol: info.name.to_string(),
                    bits: b,
                    allowed,
                });
            }
            None => info.effective_key_bits[0],
        };
        Ok(CipherSpec {
            protocol_label: info.name.to_string(),
            effective_key_bits: chosen,
        })
    }

    pub fn protocol_label(&self) -> &str {
        &self.protocol_label
    }

    pub fn effective_key_bits(&self) -> u32 {
        self.effective_key_bits
    }
}

impl std::fmt::Display for CipherSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({}-bit)", self.protocol_label, self.effective_key_bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wep_is_wlan_with_two_key_sizes() {
        let info = lookup_protocol("wep").unwrap();
        assert_eq!(info.layer, SecurityLayer::Wlan);
        assert_eq!(info.effective_key_bits, &[40, 104]);
    }

    #[test]
    fn wpa2_is_256_bit() {
        let info = lookup_protocol("WPA2").unwrap();
        assert_eq!(info.layer, SecurityLayer::Wlan);
        assert_eq!(info.effective_key_bits, &[256]);
    }

    #[test]
    fn leap_note_mentions_mschapv1() {
        let info = lookup_protocol("LeAp").unwrap();
        assert_eq!(info.layer, SecurityLayer::Authentication);
        assert!(!info.is_cipher());
        assert!(info.notes.contains("MS-CHAPv1"));
    }

    #[test]
    fn registry_covers_all_three_layers() {
        let reg = protocol_registry();
        for layer in [
            SecurityLayer::Wlan,
            SecurityLayer::AccessControl,
            SecurityLayer::Authentication,
        ] {
            assert!(reg.iter().any(|p| p.layer == layer));
        }
        assert!(matches!(
            lookup_protocol("WEP3"),
            Err(Error::UnknownProtocol(_))
        ));
    }

    #[test]
    fn named_cipher_defaults_to_first_listed_size() {
        assert_eq!(
            CipherSpec::from_protocol("WEP", None).unwrap().effective_key_bits(),
            40
        );
        assert_eq!(
            CipherSpec::from_protocol("wpa2", None).unwrap().effective_key_bits(),
            256
        );
        assert_eq!(
            CipherSpec::from_protocol("WEP", Some(104)).unwrap().effective_key_bits(),
            104
        );
    }

    #[test]
    fn named_cipher_rejects_foreign_sizes_and_keyless_protocols() {
        assert!(matches!(
            CipherSpec::from_protocol("WEP", Some(256)),
            Err(Error::UnsupportedKeyBits { .. })
        ));
        assert!(matches!(
            CipherSpec::from_protocol("RADIUS", None),
            Err(Error::NotACipherProtocol(_))
        ));
    }

    #[test]
    fn direct_construction_allows_any_positive_size() {
        let spec = CipherSpec::new("WPA2", 128).unwrap();
        assert_eq!(spec.effective_key_bits(), 128);
        assert_eq!(spec.to_string(), "WPA2 (128-bit)");
        assert!(CipherSpec::new("x", 0).is_err());
    }

    #[test]
    fn layer_parse_is_case_insensitive() {
        assert_eq!(SecurityLayer::parse("WLAN").unwrap(), SecurityLayer::Wlan);
        assert_eq!(
            SecurityLayer::parse("Access-Control").unwrap(),
            SecurityLayer::AccessControl
        );
        assert!(SecurityLayer::parse("physical").is_err());
    }
}
