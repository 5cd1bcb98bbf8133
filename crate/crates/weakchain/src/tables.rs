//! The three reference tables, regenerated from first principles on every
//! call: cipher key strength, passphrase strength by character set, and
//! minimum character-set sizes. No value is hard-coded; each cell comes out
//! of the keyspace operations.

use num_rational::BigRational;

use crate::decimal;
use crate::duration::{format_duration, DISPLAY_SIG_DIGITS};
use crate::error::{Error, Result};
use crate::keyspace::{
    cipher_keyspace, crack_duration, effective_keyspace, min_charset_size, passphrase_keyspace,
    AttackModel, BigCount, LifetimeBudget,
};

/// Output formats shared by tables and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Markdown,
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "markdown" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Which reference table to regenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableId {
    CipherStrength,
    PassphraseStrength,
    MinimumCharset,
}

impl TableId {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "1" => Ok(TableId::CipherStrength),
            "2" => Ok(TableId::PassphraseStrength),
            "3" => Ok(TableId::MinimumCharset),
            other => Err(Error::UnknownTable(other.to_string())),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            TableId::CipherStrength => 1,
            TableId::PassphraseStrength => 2,
            TableId::MinimumCharset => 3,
        }
    }
}

/// A rendered-value table: title, column headers, string cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    title: String,
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: Vec<String>, rows: Vec<Vec<String>>) -> Self {
        Table {
            title: title.into(),
            headers,
            rows,
        }
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }
}

/// The row axes shared by the passphrase tables: cipher context and
/// passphrase length.
const PASSPHRASE_ROWS: [(u32, &str, u32); 6] = [
    (40, "40-bit WEP", 5),
    (256, "256-bit WPA/WPA2 PSK", 8),
    (104, "104-bit WEP", 13),
    (256, "256-bit WPA/WPA2 PSK", 16),
    (256, "256-bit WPA/WPA2 PSK", 32),
    (256, "256-bit WPA/WPA2 PSK", 63),
];

/// Character-set sizes across the passphrase table columns.
const SET_SIZES: [u64; 5] = [10, 26, 36, 52, 62];

fn crack_text(keyspace: &BigCount, attack: &AttackModel) -> String {
    format_duration(&crack_duration(keyspace, attack)).to_string()
}

/// Cipher key strength: worst-case exhaustive crack time per key size.
pub fn cipher_strength_table(attack: &AttackModel) -> Table {
    let rows = [(40u32, "WEP"), (104, "WEP"), (256, "WPA / WPA2")]
        .into_iter()
        .map(|(bits, protocol)| {
            let ks = cipher_keyspace(bits).expect("table key sizes are positive");
            vec![
                format!("{bits}-bit"),
                protocol.to_string(),
                crack_text(&ks, attack),
            ]
        })
        .collect();
    Table {
        title: "Cipher key strength".to_string(),
        headers: vec![
            "Key length".to_string(),
            "Protocol".to_string(),
            "Crack time".to_string(),
        ],
        rows,
    }
}

/// Passphrase strength: crack time per length and character-set size, with
/// the 63-character row shown both raw ("calculated") and capped by the
/// cipher keyspace ("practical").
pub fn passphrase_strength_table(attack: &AttackModel) -> Table {
    let mut headers = vec![
        "Encryption key".to_string(),
        "Passphrase length".to_string(),
    ];
    headers.extend(SET_SIZES.iter().map(|s| format!("{s}-symbol set")));

    let mut rows = Vec::new();
    for (bits, cipher_label, length) in PASSPHRASE_ROWS {
        let cap = cipher_keyspace(bits).expect("table key sizes are positive");
        let capped_row: Vec<(BigCount, bool)> = SET_SIZES
            .iter()
            .map(|&size| {
                let raw = passphrase_keyspace(size, length).expect("table axes are positive");
                let effective = effective_keyspace(&raw, Some(&cap));
                let cap_binds = effective.as_uint() != raw.as_uint();
                (raw, cap_binds)
            })
            .collect();
        let any_capped = capped_row.iter().any(|(_, binds)| *binds);

        let mut row = vec![cipher_label.to_string(), format!("{length} characters")];
        for (raw, binds) in &capped_row {
            let mut cell = crack_text(raw, attack);
            if *binds {
                cell.push_str(" (calculated)");
            }
            row.push(cell);
        }
        rows.push(row);

        // A second, capped row only where the cap actually bites.
        if any_capped {
            let mut row = vec![cipher_label.to_string(), format!("{length} characters")];
            for (raw, binds) in &capped_row {
                let effective = effective_keyspace(raw, Some(&cap));
                let mut cell = crack_text(&effective, attack);
                if *binds {
                    cell.push_str(" (practical)");
                }
                row.push(cell);
            }
            rows.push(row);
        }
    }

    Table {
        title: "Passphrase strength".to_string(),
        headers,
        rows,
    }
}

/// Minimum character-set size per passphrase length: the real root of
/// `budget_seconds * rate`.
pub fn minimum_charset_table(attack: &AttackModel, budget: &LifetimeBudget) -> Table {
    let rows = PASSPHRASE_ROWS
        .into_iter()
        .map(|(_, cipher_label, length)| {
            let root = min_charset_size(length, budget, attack)
                .expect("table lengths are positive");
            vec![
                cipher_label.to_string(),
                format!("{length} characters"),
                decimal::f64_to_plain_string(root, DISPLAY_SIG_DIGITS),
            ]
        })
        .collect();
    Table {
        title: "Minimum character-set size".to_string(),
        headers: vec![
            "Encryption key".to_string(),
            "Passphrase length".to_string(),
            "Minimum set size".to_string(),
        ],
        rows,
    }
}

/// Builds one table by id.
pub fn build_table(id: TableId, attack: &AttackModel, budget: &LifetimeBudget) -> Table {
    match id {
        TableId::CipherStrength => cipher_strength_table(attack),
        TableId::PassphraseStrength => passphrase_strength_table(attack),
        TableId::MinimumCharset => minimum_charset_table(attack, budget),
    }
}

pub(crate) fn render_text(table: &Table) -> String {
    let columns = table.headers.len();
    let mut widths: Vec<usize> = table.headers.iter().map(|h| h.chars().count()).collect();
    for row in &table.rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    out.push_str(&table.title);
    out.push('\n');
    let push_row = |out: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < columns {
                for _ in cell.chars().count()..widths[i] {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    push_row(&mut out, &table.headers);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    push_row(&mut out, &rule);
    for row in &table.rows {
        push_row(&mut out, row);
    }
    out
}

pub(crate) fn render_markdown(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&format!("## {}\n\n", table.title));
    out.push_str(&format!("| {} |\n", table.headers.join(" | ")));
    out.push_str(&format!(
        "|{}\n",
        " --- |".repeat(table.headers.len())
    ));
    for row in &table.rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

/// Minimal CSV field quoting: quotes only when the field needs it.
pub(crate) fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub(crate) fn csv_row(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| csv_field(c))
        .collect::<Vec<_>>()
        .join(",")
}

fn render_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {}\n", table.title));
    out.push_str(&csv_row(table.headers()));
    out.push('\n');
    for row in &table.rows {
        out.push_str(&csv_row(row));
        out.push('\n');
    }
    out
}

fn table_json(table: &Table) -> serde_json::Value {
    serde_json::json!({
        "title": table.title,
        "headers": table.headers,
        "rows": table.rows,
    })
}

/// Renders the selected tables into one document.
pub fn render_tables(
    ids: &[TableId],
    attack: &AttackModel,
    budget: &LifetimeBudget,
    format: OutputFormat,
) -> String {
    let tables: Vec<Table> = ids.iter().map(|&id| build_table(id, attack, budget)).collect();
    match format {
        OutputFormat::Json => {
            let values: Vec<serde_json::Value> = tables.iter().map(table_json).collect();
            let mut text = serde_json::to_string_pretty(&values).expect("tables serialize");
            text.push('\n');
            text
        }
        _ => {
            let mut parts = Vec::new();
            for table in &tables {
                parts.push(match format {
                    OutputFormat::Text => render_text(table),
                    OutputFormat::Markdown => render_markdown(table),
                    OutputFormat::Csv => render_csv(table),
                    OutputFormat::Json => unreachable!(),
                });
            }
            parts.join("\n")
        }
    }
}

/// Strips a cell's annotation and splits it into numeric text and unit.
/// Test helper for comparing cells by value rather than by string.
pub fn parse_cell(cell: &str) -> Result<(BigRational, String)> {
    let cleaned = cell
        .replace("(calculated)", "")
        .replace("(practical)", "");
    let cleaned = cleaned.trim();
    let (number, unit) = cleaned
        .rsplit_once(' ')
        .ok_or_else(|| Error::InvalidDecimal(cell.to_string()))?;
    Ok((decimal::parse_number(number.trim())?, unit.trim().to_string()))
}

/// A cell's exact value in seconds.
pub fn cell_seconds(cell: &str) -> Result<BigRational> {
    let (value, unit) = parse_cell(cell)?;
    let parsed = crate::duration::TimeUnit::parse(&unit)?;
    Ok(value * parsed.seconds_per_unit())
}
