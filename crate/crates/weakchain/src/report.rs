//! Audit execution and report rendering.
//!
//! Turns a parsed config into a security stack, runs the weakest-link
//! analysis, and emits the report as text, markdown, CSV or JSON. The
//! machine formats carry exact values (keyspace as a full decimal integer,
//! durations as numerator/denominator strings) next to the formatted text,
//! so nothing downstream depends on display rounding.

use std::collections::HashSet;

use num_rational::BigRational;

use crate::charset::PassphrasePolicy;
use crate::config::AuditConfig;
use crate::decimal;
use crate::duration::DISPLAY_SIG_DIGITS;
use crate::error::Result;
use crate::keyspace::BigCount;
use crate::protocol::CipherSpec;
use crate::stack::{
    weakest_link, ComponentAssessment, SecurityComponent, SecurityStack, WeakestLinkReport,
};
use crate::tables::{csv_row, render_markdown, render_text, OutputFormat, Table};

/// Result of one audit run: the analysis, its rendered document, and the
/// process exit code the verdict maps to.
#[derive(Debug)]
pub struct AuditOutcome {
    report: WeakestLinkReport,
    document: String,
    exit_code: i32,
}

impl AuditOutcome {
    pub fn report(&self) -> &WeakestLinkReport {
        &self.report
    }

    pub fn document(&self) -> &str {
        &self.document
    }

    /// 0 when the stack is secure, 1 when it is not. Usage and config
    /// errors never reach an outcome; callers map those to 2.
    pub fn exit_code(&self) -> i32 {
        self.exit_code
    }
}

fn unique_id(base: &str, used: &mut HashSet<String>) -> String {
    if used.insert(base.to_string()) {
        return base.to_string();
    }
    let mut n = 2;
    loop {
        let candidate = format!("{base}-{n}");
        if used.insert(candidate.clone()) {
            return candidate;
        }
        n += 1;
    }
}

/// Assembles the security stack a config describes: the wlan cipher, the
/// passphrase it governs (when configured), and any descriptive entries.
pub fn build_stack(config: &AuditConfig) -> Result<SecurityStack> {
    let cipher = match config.effective_key_bits() {
        Some(bits) => CipherSpec::new(config.wlan_protocol(), bits)?,
        None => CipherSpec::from_protocol(config.wlan_protocol(), None)?,
    };

    let mut used = HashSet::new();
    let mut components = Vec::new();
    let cipher_id = unique_id(
        &format!("{}-key", config.wlan_protocol().to_ascii_lowercase()),
        &mut used,
    );
    components.push(SecurityComponent::cipher(cipher_id, cipher.clone()));

    if let (Some(set), Some(length)) = (config.passphrase_charset(), config.passphrase_length()) {
        let policy = PassphrasePolicy::new(set.clone(), length)?;
        let id = unique_id("passphrase", &mut used);
        components.push(SecurityComponent::passphrase(id, policy, Some(cipher)));
    }

    for (layer, name) in config.descriptive_components() {
        let id = unique_id(&name.to_ascii_lowercase(), &mut used);
        components.push(SecurityComponent::descriptive(id, *layer, name.clone()));
    }

    SecurityStack::new(components, config.attack().clone(), config.budget().clone())
}

/// Keyspace for display: full integer up to 13 digits, scientific beyond.
fn keyspace_display(keyspace: &BigCount) -> String {
    let digits = keyspace.to_decimal_string();
    if digits.len() <= 13 {
        digits
    } else {
        let ratio = BigRational::from_integer(keyspace.as_uint().clone().into());
        decimal::to_scientific_string(&ratio, DISPLAY_SIG_DIGITS)
    }
}

fn verdict_cell(assessment: &ComponentAssessment) -> String {
    match assessment.secure() {
        Some(v) => v.to_string(),
        None => "n/a".to_string(),
    }
}

fn component_table(report: &WeakestLinkReport) -> Table {
    let headers = vec![
        "rank".to_string(),
        "component".to_string(),
        "description".to_string(),
        "keyspace".to_string(),
        "crack time".to_string(),
        "verdict".to_string(),
    ];
    let mut rank = 0usize;
    let rows = report
        .assessments()
        .iter()
        .map(|a| {
            let rank_cell = if a.is_assessable() {
                rank += 1;
                rank.to_string()
            } else {
                "-".to_string()
            };
            vec![
                rank_cell,
                a.component_id().to_string(),
                a.description().to_string(),
                a.keyspace().map(keyspace_display).unwrap_or_else(|| "n/a".to_string()),
                a.duration_text().to_string(),
                verdict_cell(a),
            ]
        })
        .collect();
    Table::new("Components, weakest first", headers, rows)
}

fn weakest_duration_text(report: &WeakestLinkReport) -> &str {
    report
        .assessments()
        .iter()
        .find(|a| a.component_id() == report.weakest_id())
        .map(|a| a.duration_text())
        .unwrap_or("n/a")
}

fn render_report_text(stack: &SecurityStack, report: &WeakestLinkReport) -> String {
    let mut out = String::new();
    out.push_str("Wireless security stack audit\n");
    out.push_str(&format!("attack model: {}\n", stack.attack().description()));
    out.push_str(&format!(
        "attack rate: {} keys/second\n",
        stack.attack().rate()
    ));
    out.push_str(&format!(
        "security budget: {} years\n\n",
        stack.budget().years_text()
    ));
    out.push_str(&render_text(&component_table(report)));
    out.push('\n');
    out.push_str(&format!(
        "weakest link: {} (crack time {})\n",
        report.weakest_id(),
        weakest_duration_text(report)
    ));
    out.push_str(&format!("overall verdict: {}\n", report.overall_secure()));
    if let Some(rec) = report.recommendation() {
        out.push_str(&format!("recommendation: {}\n", rec.advice_text()));
    }
    out
}

fn render_report_markdown(stack: &SecurityStack, report: &WeakestLinkReport) -> String {
    let mut out = String::new();
    out.push_str("# Wireless security stack audit\n\n");
    out.push_str(&format!("- attack model: {}\n", stack.attack().description()));
    out.push_str(&format!(
        "- attack rate: {} keys/second\n",
        stack.attack().rate()
    ));
    out.push_str(&format!(
        "- security budget: {} years\n\n",
        stack.budget().years_text()
    ));
    out.push_str(&render_markdown(&component_table(report)));
    out.push('\n');
    out.push_str(&format!(
        "**Weakest link:** {} (crack time {})\n\n",
        report.weakest_id(),
        weakest_duration_text(report)
    ));
    out.push_str(&format!("**Overall verdict:** {}\n", report.overall_secure()));
    if let Some(rec) = report.recommendation() {
        out.push_str(&format!("\n**Recommendation:** {}\n", rec.advice_text()));
    }
    out
}

fn render_report_csv(report: &WeakestLinkReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# weakest: {}\n", report.weakest_id()));
    out.push_str(&format!("# overall: {}\n", report.overall_secure()));
    if let Some(rec) = report.recommendation() {
        out.push_str(&format!("# recommendation: {}\n", rec.advice_text()));
    }
    let headers = vec![
        "rank".to_string(),
        "component".to_string(),
        "description".to_string(),
        "keyspace".to_string(),
        "duration_seconds_numerator".to_string(),
        "duration_seconds_denominator".to_string(),
        "duration_text".to_string(),
        "verdict".to_string(),
    ];
    out.push_str(&csv_row(&headers));
    out.push('\n');
    let mut rank = 0usize;
    for a in report.assessments() {
        let rank_cell = if a.is_assessable() {
            rank += 1;
            rank.to_string()
        } else {
            String::new()
        };
        let row = vec![
            rank_cell,
            a.component_id().to_string(),
            a.description().to_string(),
            a.keyspace()
                .map(BigCount::to_decimal_string)
                .unwrap_or_default(),
            a.duration().map(|d| d.numerator().to_string()).unwrap_or_default(),
            a.duration().map(|d| d.denominator().to_string()).unwrap_or_default(),
            a.duration_text().to_string(),
            a.secure().map(|v| v.to_string()).unwrap_or_default(),
        ];
        out.push_str(&csv_row(&row));
        out.push('\n');
    }
    out
}

fn render_report_json(stack: &SecurityStack, report: &WeakestLinkReport) -> String {
    let budget_seconds = stack.budget().seconds();
    let components: Vec<serde_json::Value> = report
        .assessments()
        .iter()
        .map(|a| {
            serde_json::json!({
                "id": a.component_id(),
                "description": a.description(),
                "keyspace": a.keyspace().map(BigCount::to_decimal_string),
                "duration_seconds": a.duration().map(|d| serde_json::json!({
                    "numerator": d.numerator().to_string(),
                    "denominator": d.denominator().to_string(),
                })),
                "duration_text": a.duration_text(),
                "secure": a.secure().map(|v| v.is_secure()),
            })
        })
        .collect();
    let recommendation = report.recommendation().map(|rec| {
        serde_json::json!({
            "passphrase_length": rec.length(),
            "minimum_set_size_real": decimal::f64_to_plain_string(rec.real_value(), DISPLAY_SIG_DIGITS),
            "minimum_set_size": rec.integer_ceiling().to_decimal_string(),
            "named_set": rec.named_set().map(|s| serde_json::json!({
                "name": s.name(),
                "size": s.size(),
            })),
            "advice": rec.advice_text(),
        })
    });
    let document = serde_json::json!({
        "attack": {
            "rate_keys_per_second": stack.attack().rate().to_decimal_string(),
            "description": stack.attack().description(),
        },
        "budget": {
            "years": stack.budget().years_text(),
            "seconds": {
                "numerator": budget_seconds.numerator().to_string(),
                "denominator": budget_seconds.denominator().to_string(),
            },
        },
        "components": components,
        "weakest": report.weakest_id(),
        "overall_secure": report.overall_secure().is_secure(),
        "recommendation": recommendation,
    });
    let mut text = serde_json::to_string_pretty(&document).expect("report serializes");
    text.push('\n');
    text
}

/// Renders a finished analysis in the requested format.
pub fn render_report(
    stack: &SecurityStack,
    report: &WeakestLinkReport,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => render_report_text(stack, report),
        OutputFormat::Markdown => render_report_markdown(stack, report),
        OutputFormat::Csv => render_report_csv(report),
        OutputFormat::Json => render_report_json(stack, report),
    }
}

/// Builds the stack, finds the weakest link, renders the report, and maps
/// the verdict to an exit code.
pub fn run_audit(config: &AuditConfig, format: OutputFormat) -> Result<AuditOutcome> {
    let stack = build_stack(config)?;
    let report = weakest_link(&stack)?;
    let document = render_report(&stack, &report, format);
    let exit_code = i32::from(!report.overall_secure().is_secure());
    Ok(AuditOutcome {
        report,
        document,
        exit_code,
    })
}
