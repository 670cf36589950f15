//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on domain errors (ranges, malformed trees,
//! I/O), 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bdd::{ev_with_limit, plain_bdd_with_limit, reduce, reduced_bdd_with_limit, Bdd};
use crate::error::{Error, Result};
use crate::natbits::Nat;
use crate::pairing::PairScheme;
use crate::ranking::{enumerate_with_limit, rank, unrank, Variant};
use crate::text::{parse_any, to_json, to_sexp};
use crate::truthtab::{shannon_fuse_with_limit, shannon_split_with_limit, var_tt_with_limit};
use crate::DEFAULT_MAX_VARS;

#[derive(Debug, Parser)]
#[command(name = "natbdd", version, about = "Naturals as truth tables, pairing functions and ranked decision trees")]
pub struct Cli {
    /// Print numbers in hexadecimal with a `0x` prefix.
    #[arg(long, global = true)]
    hex: bool,

    /// Output format for trees.
    #[arg(long, global = true, value_enum, default_value_t = Format::Sexp)]
    format: Format,

    /// Largest variable count accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VARS)]
    max_vars: u32,

    /// Write the result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Sexp,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Cantor,
    Pepis,
    Bitmerge,
}

impl From<SchemeArg> for PairScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Cantor => PairScheme::Cantor,
            SchemeArg::Pepis => PairScheme::Pepis,
            SchemeArg::Bitmerge => PairScheme::Bitmerge,
        }
    }
}

#[derive(Debug, Args)]
struct VariantFlags {
    /// Complete, unreduced trees.
    #[arg(long, conflicts_with = "reduced")]
    plain: bool,

    /// Reduced trees (default).
    #[arg(long)]
    reduced: bool,
}

impl VariantFlags {
    fn variant(&self) -> Variant {
        if self.plain {
            Variant::Plain
        } else {
            Variant::Reduced
        }
    }
}

#[derive(Debug, Args)]
struct InputArg {
    /// Read the tree from FILE instead of standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pair two naturals into one.
    Pair {
        #[arg(long, value_enum, default_value_t = SchemeArg::Bitmerge)]
        scheme: SchemeArg,
        #[arg(value_parser = parse_nat)]
        x: Nat,
        #[arg(value_parser = parse_nat)]
        y: Nat,
    },
    /// Split a natural into the pair it encodes.
    Unpair {
        #[arg(long, value_enum, default_value_t = SchemeArg::Bitmerge)]
        scheme: SchemeArg,
        #[arg(value_parser = parse_nat)]
        z: Nat,
    },
    /// Build the decision tree of a truth table.
    Tt2bdd {
        #[arg(long)]
        vars: u32,
        #[arg(long, value_parser = parse_nat)]
        tt: Nat,
        #[command(flatten)]
        variant: VariantFlags,
    },
    /// Evaluate a tree back to its truth table.
    Bdd2tt {
        #[command(flatten)]
        input: InputArg,
    },
    /// Reduce a tree.
    Reduce {
        #[command(flatten)]
        input: InputArg,
    },
    /// Rank of a tree in the enumeration.
    Rank {
        #[command(flatten)]
        variant: VariantFlags,
        #[command(flatten)]
        input: InputArg,
    },
    /// Tree at a given rank.
    Unrank {
        #[command(flatten)]
        variant: VariantFlags,
        #[arg(value_parser = parse_nat)]
        n: Nat,
    },
    /// Trees at consecutive ranks, one per line.
    Enum {
        #[arg(long, value_parser = parse_nat, default_value = "0")]
        from: Nat,
        #[arg(long)]
        count: u64,
        #[command(flatten)]
        variant: VariantFlags,
    },
    /// Split a truth table on its top variable, or fuse two halves.
    Shannon {
        #[command(subcommand)]
        op: ShannonOp,
    },
    /// Truth table of a single variable.
    Varbits {
        #[arg(long)]
        vars: u32,
        #[arg(long)]
        index: u32,
    },
}

#[derive(Debug, Subcommand)]
enum ShannonOp {
    /// Print `HI LO`.
    Split {
        #[arg(long)]
        vars: u32,
        #[arg(value_parser = parse_nat)]
        x: Nat,
    },
    /// Print `HI * 2^(2^(vars-1)) + LO`.
    Fuse {
        #[arg(long)]
        vars: u32,
        #[arg(value_parser = parse_nat)]
        hi: Nat,
        #[arg(value_parser = parse_nat)]
        lo: Nat,
    },
}

/// Decimal, or hexadecimal with a `0x` prefix.
pub fn parse_nat(s: &str) -> std::result::Result<Nat, String> {
    let (digits, radix) = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => (hex, 16),
        None => (s, 10),
    };
    if digits.is_empty() || !digits.chars().all(|c| c.is_digit(radix)) {
        return Err(format!("`{s}` is not a natural number"));
    }
    Nat::parse_bytes(digits.as_bytes(), radix).ok_or_else(|| format!("`{s}` is not a natural number"))
}

struct Printer {
    hex: bool,
    format: Format,
}

impl Printer {
    fn nat(&self, n: &Nat) -> String {
        if self.hex {
            format!("{n:#x}")
        } else {
            n.to_string()
        }
    }

    fn bdd(&self, b: &Bdd) -> String {
        match self.format {
            Format::Sexp => to_sexp(b),
            Format::Json => to_json(b),
        }
    }
}

fn read_tree(input: &InputArg, stdin: &mut dyn Read) -> Result<Bdd> {
    let text = match &input.input {
        Some(path) => read_file(path)?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
            s
        }
    };
    parse_any(&text)
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    let p = Printer {
        hex: cli.hex,
        format: cli.format,
    };
    let max = cli.max_vars;
    let mut out = match &cli.command {
        Command::Pair { scheme, x, y } => p.nat(&PairScheme::from(*scheme).pair(x, y)),
        Command::Unpair { scheme, z } => {
            let (x, y) = PairScheme::from(*scheme).unpair(z);
            format!("{} {}", p.nat(&x), p.nat(&y))
        }
        Command::Tt2bdd { vars, tt, variant } => {
            let b = match variant.variant() {
                Variant::Plain => plain_bdd_with_limit(*vars, tt, max)?,
                Variant::Reduced => reduced_bdd_with_limit(*vars, tt, max)?,
            };
            p.bdd(&b)
        }
        Command::Bdd2tt { input } => p.nat(&ev_with_limit(&read_tree(input, stdin)?, max)?),
        Command::Reduce { input } => p.bdd(&reduce(&read_tree(input, stdin)?)),
        Command::Rank { variant, input } => {
            let b = read_tree(input, stdin)?;
            p.nat(&rank(variant.variant(), &b, max)?)
        }
        Command::Unrank { variant, n } => p.bdd(&unrank(variant.variant(), n, max)?),
        Command::Enum {
            from,
            count,
            variant,
        } => {
            let lines = enumerate_with_limit(variant.variant(), from, *count, max)
                .map(|b| b.map(|b| p.bdd(&b)))
                .collect::<Result<Vec<_>>>()?;
            if lines.is_empty() {
                return Ok(String::new());
            }
            lines.join("\n")
        }
        Command::Shannon { op } => match op {
            ShannonOp::Split { vars, x } => {
                let (hi, lo) = shannon_split_with_limit(*vars, x, max)?;
                format!("{} {}", p.nat(&hi), p.nat(&lo))
            }
            ShannonOp::Fuse { vars, hi, lo } => p.nat(&shannon_fuse_with_limit(*vars, hi, lo, max)?),
        },
        Command::Varbits { vars, index } => p.nat(&var_tt_with_limit(*vars, *index, max)?),
    };
    out.push('\n');
    Ok(out)
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
            return code;
        }
    };
    let text = match execute(&cli, stdin) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
