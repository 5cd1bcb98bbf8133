//! `wlan-audit`: brute-force resistance of 802.11 security stacks.
//!
//! Exit codes: 0 when the audited scheme is secure against the lifetime
//! budget, 1 when it is not, 2 on usage or config errors.

use std::fs;
use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand};
use weakchain::{
    cipher_keyspace, crack_duration, decimal, format_duration, is_secure, lookup,
    parse_config, passphrase_keyspace, recommend_min_charset, registry, render_tables,
    run_audit, AttackModel, BigCount, CharacterSet, Error, LifetimeBudget, OutputFormat,
    Parallelism, Result, TableId,
};

#[derive(Parser)]
#[command(
    name = "wlan-audit",
    version,
    about = "Quantify how long a brute-force attack needs against wireless cipher keys \
             and passphrases, find the weakest component, and recommend passphrase policies."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Worst-case crack time for one cipher key size or passphrase scheme
    CrackTime(CrackTimeArgs),
    /// Smallest character-set size whose keyspace outlasts the budget
    MinCharset(MinCharsetArgs),
    /// Reference tables: cipher strength, passphrase strength, minimum sets
    Tables(TablesArgs),
    /// Audit the security stack described by a config file
    Assess(AssessArgs),
    /// Enumerate small keyspaces, verify counts, and measure throughput
    Oracle(OracleArgs),
}

/// Attack-rate and budget overrides shared by the calculator commands.
#[derive(Args)]
struct ModelArgs {
    /// Attack rate in keys per second (default: 10^12)
    #[arg(long)]
    rate: Option<u64>,
    /// Lifetime budget in years, decimal (default: 89.78)
    #[arg(long = "budget-years")]
    budget_years: Option<String>,
}

impl ModelArgs {
    fn resolve(&self) -> Result<(AttackModel, LifetimeBudget)> {
        let attack = match self.rate {
            Some(rate) => AttackModel::new(
                BigCount::from(rate),
                format!("{rate} keys/second (configured)"),
            )?,
            None => AttackModel::default(),
        };
        let budget = match &self.budget_years {
            Some(years) => LifetimeBudget::from_years_str(years)?,
            None => LifetimeBudget::default(),
        };
        Ok((attack, budget))
    }
}

#[derive(Args)]
struct CrackTimeArgs {
    /// Effective cipher key size in bits
    #[arg(long, conflicts_with_all = ["charset", "length"])]
    bits: Option<u32>,
    /// Character set for a passphrase: registry name or explicit size
    #[arg(long, requires = "length", required_unless_present = "bits")]
    charset: Option<String>,
    /// Passphrase length in characters
    #[arg(long, requires = "charset")]
    length: Option<u32>,
    #[command(flatten)]
    model: ModelArgs,
}

#[derive(Args)]
struct MinCharsetArgs {
    /// Passphrase length the recommendation is for
    #[arg(long)]
    length: u32,
    #[command(flatten)]
    model: ModelArgs,
}

#[derive(Args)]
struct TablesArgs {
    /// Comma-separated table numbers out of 1,2,3
    #[arg(long, default_value = "1,2,3")]
    which: String,
    /// Output format: text, markdown, csv, or json
    #[arg(long, default_value = "text")]
    format: String,
    #[command(flatten)]
    model: ModelArgs,
}

#[derive(Args)]
struct AssessArgs {
    /// Path to a `key = value` audit config
    file: PathBuf,
    /// Output format: text, markdown, csv, or json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct OracleArgs {
    /// Largest keyspace to enumerate per charset and length
    #[arg(long = "max-space", default_value_t = 100_000)]
    max_space: u64,
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::CrackTime(args) => crack_time(&args),
        Command::MinCharset(args) => min_charset(&args),
        Command::Tables(args) => tables(&args),
        Command::Assess(args) => assess(&args),
        Command::Oracle(args) => oracle(&args),
    }
}

/// A charset argument is either a registry name or a bare size.
fn resolve_charset(token: &str) -> Result<CharacterSet> {
    if token.bytes().all(|b| b.is_ascii_digit()) {
        let size = token
            .parse::<u64>()
            .map_err(|_| Error::UnknownCharset(token.to_string()))?;
        CharacterSet::sized(token, size)
    } else {
        lookup(token)
    }
}

fn crack_time(args: &CrackTimeArgs) -> Result<i32> {
    let (attack, budget) = args.model.resolve()?;
    let keyspace = match (args.bits, &args.charset, args.length) {
        (Some(bits), None, None) => {
            println!("scheme: {bits}-bit cipher key");
            cipher_keyspace(bits)?
        }
        (None, Some(token), Some(length)) => {
            let set = resolve_charset(token)?;
            println!(
                "scheme: {length} characters from the {}-symbol set \"{}\"",
                set.size(),
                set.name()
            );
            passphrase_keyspace(set.size(), length)?
        }
        // clap enforces the bits-or-charset group.
        _ => unreachable!(),
    };
    let duration = crack_duration(&keyspace, &attack);
    let verdict = is_secure(&duration, &budget);
    println!("keyspace: {}", keyspace.to_decimal_string());
    println!("attack model: {}", attack.description());
    println!("worst-case crack time: {}", format_duration(&duration));
    println!("lifetime budget: {} years", budget.years_text());
    println!("verdict: {verdict}");
    Ok(i32::from(!verdict.is_secure()))
}

fn min_charset(args: &MinCharsetArgs) -> Result<i32> {
    let (attack, budget) = args.model.resolve()?;
    let rec = recommend_min_charset(args.length, &budget, &attack)?;
    println!("passphrase length: {}", rec.length());
    println!(
        "minimum set size (real): {}",
        decimal::f64_to_plain_string(rec.real_value(), 9)
    );
    println!(
        "minimum set size (integer): {}",
        rec.integer_ceiling().to_decimal_string()
    );
    match rec.named_set() {
        Some(set) => println!(
            "smallest sufficient standard set: {} ({} symbols)",
            set.name(),
            set.size()
        ),
        None => println!("smallest sufficient standard set: none (every standard set is too small)"),
    }
    println!("advice: {}", rec.advice_text());
    Ok(0)
}

fn tables(args: &TablesArgs) -> Result<i32> {
    let (attack, budget) = args.model.resolve()?;
    let mut ids = Vec::new();
    for token in args.which.split(',') {
        ids.push(TableId::parse(token)?);
    }
    let format = OutputFormat::parse(&args.format)?;
    let document = render_tables(&ids, &attack, &budget, format);
    print!("{document}");
    if !document.ends_with('\n') {
        println!();
    }
    Ok(0)
}

fn assess(args: &AssessArgs) -> Result<i32> {
    let format = OutputFormat::parse(&args.format)?;
    let text = fs::read_to_string(&args.file).map_err(|err| {
        Error::Io(std::io::Error::new(
            err.kind(),
            format!("{}: {err}", args.file.display()),
        ))
    })?;
    let config = parse_config(&text)?;
    let outcome = run_audit(&config, format)?;
    print!("{}", outcome.document());
    if !outcome.document().ends_with('\n') {
        println!();
    }
    Ok(outcome.exit_code())
}

fn oracle(args: &OracleArgs) -> Result<i32> {
    let cap = BigCount::from(args.max_space);
    let mut best: Option<weakchain::EnumerationResult> = None;
    for set in registry() {
        let mut length = 1u32;
        loop {
            let space = passphrase_keyspace(set.size(), length)?;
            if space.as_uint() > cap.as_uint() {
                break;
            }
            let result = weakchain::enumerate_keyspace_with(
                &set,
                length,
                args.max_space,
                Parallelism::default(),
            )?;
            // The generated count must equal the closed form; anything else
            // is a generator defect, not a reportable measurement.
            assert_eq!(
                result.enumerated_count().as_uint(),
                space.as_uint(),
                "enumeration of {} length {length} lost or repeated candidates",
                set.name()
            );
            println!(
                "{} length {}: {} candidates in {:.6} s ({:.3e} keys/s)",
                set.name(),
                length,
                result.enumerated_count().to_decimal_string(),
                result.elapsed_seconds(),
                result.throughput_keys_per_second()
            );
            let faster = best.as_ref().map_or(true, |b| {
                result.throughput_keys_per_second() > b.throughput_keys_per_second()
            });
            if faster {
                best = Some(result);
            }
            length += 1;
        }
    }
    if let Some(best) = &best {
        let wpa2 = cipher_keyspace(256)?;
        let local = weakchain::extrapolate_local_crack_time(best, &wpa2)?;
        println!(
            "at the best local rate ({:.3e} keys/s), a 256-bit keyspace needs ~{local:.3e} seconds",
            best.throughput_keys_per_second()
        );
    }
    Ok(0)
}
