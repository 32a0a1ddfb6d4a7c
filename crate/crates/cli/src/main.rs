//! `intposet`: inspect interval posets and their dissection images, and run
//! the exhaustive census.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 cap
//! exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use intposet::census::{self, Census, CensusCaps, CensusConfig, CensusError, Family};
use intposet::perm::{parse_permutation, Permutation};
use intposet::polygon::{Chord, Dissection};
use intposet::poset::{parse_family_text, validate_interval_family, IntervalPoset};
use intposet::render::{dissection_to_svg, poset_to_dot};
use intposet::{phi, phi_inverse};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "intposet",
    version,
    about = "Interval posets of permutations and polygon dissections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every interval of a permutation.
    Intervals { perm: String },
    /// Print the interval poset and its Hasse edges.
    Poset { perm: String },
    /// Print the simple / block-wise simple / tree flags.
    Classify { perm: String },
    /// Print the dissection image of a permutation's poset.
    Phi { perm: String },
    /// Read a dissection of the m-gon back as an interval family.
    Inverse {
        m: u32,
        /// Diagonals as `u,v` or `u-v` tokens, or as a flat list of endpoints.
        chords: Vec<String>,
    },
    /// Find the lexicographically least permutation with a given interval set.
    Realize {
        #[arg(long)]
        n: u32,
        /// File of `lo hi` lines (optional `n <n>` header); trivial intervals are implied.
        #[arg(long)]
        intervals: PathBuf,
        #[command(flatten)]
        limits: Limits,
    },
    /// Compare distinct-poset counts with dissection counts.
    Census {
        #[arg(long)]
        max_n: u32,
        #[arg(long, default_value_t = 1)]
        min_n: u32,
        #[arg(long, value_enum)]
        class: FamilyArg,
        /// OEIS b-file to cross-check the poset counts against.
        #[arg(long)]
        oeis: Option<PathBuf>,
        /// Order n is compared with b-file index n - offset (default per class).
        #[arg(long, requires = "oeis", allow_hyphen_values = true)]
        offset: Option<i64>,
        /// Write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Treat the order-1 permutation as not block-wise simple.
        #[arg(long)]
        order_one_not_blockwise: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run the structural identities and the forward direction checks.
    Verify {
        #[arg(long)]
        max_n: u32,
        /// Run the block-wise forward check up to this order (default: max-n).
        #[arg(long)]
        blockwise_max_n: Option<u32>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Emit a Hasse diagram (DOT) or a dissection (SVG).
    #[command(group(ArgGroup::new("kind").required(true).args(["poset", "polygon"])))]
    #[command(group(ArgGroup::new("source").required(true).args(["perm", "input"])))]
    Render {
        #[arg(long)]
        poset: bool,
        #[arg(long)]
        polygon: bool,
        #[arg(long, value_enum)]
        format: Format,
        perm: Option<String>,
        /// Poset or dissection text file instead of a permutation.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Limits {
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Raise every size cap to at least this order.
    #[arg(long)]
    cap: Option<u32>,
}

impl Limits {
    fn census(&self, order_one_block_wise_simple: bool) -> Result<Census, Failure> {
        let caps = match self.cap {
            Some(n) => CensusCaps::default().raised_to(n),
            None => CensusCaps::default(),
        };
        Census::new(CensusConfig {
            caps,
            threads: self.threads,
            order_one_block_wise_simple,
        })
        .map_err(Failure::from)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FamilyArg {
    All,
    Tree,
    Blockwise,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::All => Family::All,
            FamilyArg::Tree => Family::Tree,
            FamilyArg::Blockwise => Family::BlockwiseSimple,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Dot,
    Svg,
}

/// A failed run: message for stderr plus exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CensusError> for Failure {
    fn from(e: CensusError) -> Self {
        Failure {
            code: if e.is_cap_exceeded() {
                EXIT_CAP
            } else {
                EXIT_USAGE
            },
            message: e.to_string(),
        }
    }
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn perm_arg(text: &str) -> Result<Permutation, Failure> {
    parse_permutation(text).map_err(|e| Failure::usage(format!("{text:?}: {e}")))
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<Verdict, Failure> {
    match command {
        Command::Intervals { perm } => {
            let p = perm_arg(&perm)?;
            let mut ivs = p.intervals();
            ivs.sort_by_key(|v| (v.len(), v.lo));
            let words: Vec<String> = ivs.iter().map(|v| v.to_string()).collect();
            println!("{}", words.join(" "));
        }
        Command::Poset { perm } => {
            let poset = IntervalPoset::of(&perm_arg(&perm)?);
            print!("{}", poset.to_text());
            println!("# hasse edges");
            for c in poset.hasse_edges() {
                println!("# {} -> {}", c.parent, c.child);
            }
        }
        Command::Classify { perm } => {
            let p = perm_arg(&perm)?;
            println!(
                "simple: {}, block-wise simple: {}, tree poset: {}",
                p.is_simple(),
                p.is_block_wise_simple(),
                IntervalPoset::of(&p).is_tree()
            );
        }
        Command::Phi { perm } => {
            print!("{}", phi(&IntervalPoset::of(&perm_arg(&perm)?)).to_text());
        }
        Command::Inverse { m, chords } => {
            let d = Dissection::new(m, parse_chords(&chords)?)
                .map_err(|e| Failure::usage(e.to_string()))?;
            if m < 3 {
                return Err(Failure::usage("inverse needs m >= 3"));
            }
            let poset = phi_inverse(&d);
            print!("{}", poset.to_text());
            let family = poset.intervals().copied().collect();
            println!(
                "# validate: {}",
                validate_interval_family(&family, poset.n())
            );
        }
        Command::Realize {
            n,
            intervals,
            limits,
        } => {
            let text = read(&intervals)?;
            let (header, family) =
                parse_family_text(&text, None).map_err(|e| Failure::usage(e.to_string()))?;
            if header.is_some_and(|h| h != n) {
                return Err(Failure::usage(format!(
                    "file header n = {} disagrees with --n {n}",
                    header.unwrap()
                )));
            }
            if let Some(v) = family.iter().find(|v| v.hi > n) {
                return Err(Failure::usage(format!("{v} exceeds n = {n}")));
            }
            let family = IntervalPoset::from_family(n, family)
                .intervals()
                .copied()
                .collect();
            match limits.census(true)?.realize(&family, n)? {
                Some(p) => println!("{p}"),
                None => println!("none"),
            }
        }
        Command::Census {
            max_n,
            min_n,
            class,
            oeis,
            offset,
            out,
            order_one_not_blockwise,
            limits,
        } => {
            let family = Family::from(class);
            let census = limits.census(!order_one_not_blockwise)?;
            let mut report = census.report(family, min_n, max_n)?;
            if let Some(path) = oeis {
                let terms = census::load_bfile(&read(&path)?)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                let offset = offset.unwrap_or_else(|| family.sequence_offset());
                report.sequence_check =
                    Some(census::align_with_sequence(&report.rows, &terms, offset));
            }
            print!("{}", report.to_table());
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&report)
                    .map_err(|e| Failure::usage(e.to_string()))?;
                emit(&(json + "\n"), Some(&path))?;
            }
            if !report.all_match() {
                return Ok(Verdict::Mismatch);
            }
        }
        Command::Verify {
            max_n,
            blockwise_max_n,
            limits,
        } => {
            let census = limits.census(true)?;
            let mut ok = true;
            let mut show = |r: census::CheckResult| {
                ok &= r.passed;
                println!("{r}");
            };
            for n in 1..=max_n {
                for r in census.check_identities(n)? {
                    show(r);
                }
                show(census.check_forward(n, Family::All)?);
                show(census.check_forward(n, Family::Tree)?);
            }
            for n in 1..=blockwise_max_n.unwrap_or(max_n) {
                show(census.check_forward(n, Family::BlockwiseSimple)?);
            }
            if !ok {
                return Ok(Verdict::Mismatch);
            }
        }
        Command::Render {
            poset,
            polygon,
            format,
            perm,
            input,
            out,
        } => {
            let text = match (poset, polygon, format) {
                (true, _, Format::Dot) => {
                    let p = match (&perm, &input) {
                        (Some(s), _) => IntervalPoset::of(&perm_arg(s)?),
                        (None, Some(path)) => IntervalPoset::parse_text(&read(path)?)
                            .map_err(|e| Failure::usage(e.to_string()))?,
                        (None, None) => unreachable!("clap requires a source"),
                    };
                    poset_to_dot(&p)
                }
                (_, true, Format::Svg) => {
                    let d = match (&perm, &input) {
                        (Some(s), _) => phi(&IntervalPoset::of(&perm_arg(s)?)),
                        (None, Some(path)) => Dissection::parse_text(&read(path)?)
                            .map_err(|e| Failure::usage(e.to_string()))?,
                        (None, None) => unreachable!("clap requires a source"),
                    };
                    dissection_to_svg(&d)
                }
                (true, _, _) => return Err(Failure::usage("--poset renders as --format dot")),
                _ => return Err(Failure::usage("--polygon renders as --format svg")),
            };
            emit(&text, out.as_ref())?;
        }
    }
    Ok(Verdict::Ok)
}

/// Accepts `u,v` / `u-v` tokens or a flat list of endpoints taken in pairs.
fn parse_chords(tokens: &[String]) -> Result<Vec<Chord>, Failure> {
    let mut numbers = Vec::new();
    for t in tokens {
        for part in t.split([',', '-']).filter(|s| !s.is_empty()) {
            numbers.push(
                part.parse::<u32>()
                    .map_err(|_| Failure::usage(format!("bad chord token {t:?}")))?,
            );
        }
    }
    if numbers.len() % 2 != 0 {
        return Err(Failure::usage("chords need an even number of endpoints"));
    }
    Ok(numbers.chunks(2).map(|c| Chord::new(c[0], c[1])).collect())
}
