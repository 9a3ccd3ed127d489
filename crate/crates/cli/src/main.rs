//! `heffter`: construct, verify and certify globally simple Heffter arrays.
//!
//! Exit codes: 0 success, 1 verification or certification failure (or an
//! inconclusive search), 2 usage error, 3 the requested array must be
//! supplied as a fixture.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use heffter::biembed::{certify_biembedding, composition_for};
use heffter::constructions::{accept_fixture, Construction};
use heffter::decomp::{
    certify_orthogonal, decompositions_from_array, difference_check, orthogonality_witness,
    BaseCycleSet, GraphKind,
};
use heffter::search::{
    find_heffter, find_simple_ordering, naive_orthogonality, SearchBudget, SearchStatus,
    NAIVE_LIMIT,
};
use heffter::verify::ZeroSumMode;
use heffter::{build, verify_shape, BuildOutcome, BuildSpec, Classification, GridFile};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const NEEDS_FIXTURE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "heffter",
    version,
    about = "Globally simple Heffter arrays and their cycle decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Complete,
    Cocktail,
}

impl From<Kind> for GraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Complete => GraphKind::Complete,
            Kind::Cocktail => GraphKind::CocktailParty,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Threshold {
    Heffter,
    Simple,
    Star,
}

impl From<Threshold> for Classification {
    fn from(t: Threshold) -> Self {
        match t {
            Threshold::Heffter => Classification::Heffter,
            Threshold::Simple => Classification::GloballySimple,
            Threshold::Star => Classification::GloballySimpleStar,
        }
    }
}

#[derive(clap::Args)]
struct Budget {
    /// Backtracking node limit.
    #[arg(long, default_value_t = 200_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 120, value_parser = clap::value_parser!(u64).range(1..))]
    seconds: u64,
}

impl Budget {
    fn get(&self) -> SearchBudget {
        SearchBudget::new(self.nodes, Duration::from_secs(self.seconds))
            .expect("clap enforces positive limits")
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build SH*(n;k) and write its grid and manifest.
    Construct {
        n: usize,
        k: usize,
        /// Grid output path; the manifest goes to PATH.manifest. Prints to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use this grid file instead of a construction (it is verified first).
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Classify the array in a grid file.
    Verify {
        file: PathBuf,
        /// Minimum classification for exit status 0.
        #[arg(long, value_enum, default_value = "heffter")]
        threshold: Threshold,
        /// Check line sums modulo 2nk+1 instead of exactly.
        #[arg(long)]
        modular: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write the row and column base cycles of an array with their certificates.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Output prefix: PREFIX.rows.cycles, PREFIX.cols.cycles, PREFIX.cert. Prints to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check orthogonality: of an array's row and column decompositions at
    /// both moduli, or of two cycle-set files.
    Orthogonal {
        file: PathBuf,
        second: Option<PathBuf>,
        /// Also run the unreduced oracle (moduli up to 500).
        #[arg(long)]
        naive: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the hypotheses for a biembedding of the two decompositions.
    Biembed {
        file: PathBuf,
        /// Print the composition cycle of the orderings.
        #[arg(long)]
        show_cycle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Backtracking search for an m x n Heffter array with h per row and k per column.
    Search {
        m: usize,
        n: usize,
        h: usize,
        k: usize,
        #[command(flatten)]
        budget: Budget,
        /// Write a found witness here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for an ordering of VALUES with distinct partial sums modulo V.
    SimpleOrdering {
        #[arg(long = "modulus", short = 'v')]
        modulus: u64,
        #[arg(required = true, allow_negative_numbers = true)]
        values: Vec<i64>,
        #[command(flatten)]
        budget: Budget,
    },
}

/// A failure that maps to a specific exit status.
#[derive(Debug)]
struct Fail {
    code: u8,
    msg: String,
}

impl std::fmt::Display for Fail {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.msg)
    }
}

impl std::error::Error for Fail {}

fn exit(code: u8, msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Fail {
        code,
        msg: msg.into()
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => match e.downcast::<Fail>() {
            Ok(Fail { code, msg }) => {
                eprintln!("{msg}");
                ExitCode::from(code)
            }
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(USAGE)
            }
        },
    }
}

fn read_grid(path: &Path) -> Result<GridFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.parse::<GridFile>()
        .with_context(|| format!("parsing {}", path.display()))
}

fn read_cycles(path: &Path) -> Result<BaseCycleSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.parse::<BaseCycleSet>()
        .with_context(|| format!("parsing {}", path.display()))
}

/// Writes every file or none: all contents go to temporaries first, then
/// each is renamed into place.
fn write_all(files: &[(PathBuf, String)]) -> Result<()> {
    let mut staged = Vec::with_capacity(files.len());
    for (path, text) in files {
        let mut tmp = path.clone().into_os_string();
        tmp.push(".partial");
        let tmp = PathBuf::from(tmp);
        if let Err(e) = fs::write(&tmp, text) {
            for (t, _) in &staged {
                let _ = fs::remove_file(t);
            }
            return Err(e).with_context(|| format!("writing {}", path.display()));
        }
        staged.push((tmp, path));
    }
    for (tmp, path) in &staged {
        fs::rename(tmp, path).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Row count `h` implied by an `m x n` grid with `k` per column.
fn row_count(g: &GridFile) -> Result<usize> {
    let (m, n) = (g.array.rows(), g.array.cols());
    if m == 0 || (n * g.k) % m != 0 {
        return Err(exit(
            FAILED,
            format!("a {m}x{n} array cannot have {} cells per column", g.k),
        ));
    }
    Ok(n * g.k / m)
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Construct { n, k, out, fixture } => construct(n, k, out, fixture),
        Command::Verify {
            file,
            threshold,
            modular,
            format,
        } => {
            let g = read_grid(&file)?;
            let h = row_count(&g)?;
            let mode = if modular {
                ZeroSumMode::Modular
            } else {
                ZeroSumMode::Exact
            };
            let report = verify_shape(&g.array, h, g.k, mode);
            print!("{}", report.render(format == Format::Structured));
            Ok(if report.classification >= threshold.into() {
                OK
            } else {
                FAILED
            })
        }
        Command::Decompose {
            file,
            kind,
            out,
            format,
        } => decompose(&file, kind.into(), out, format),
        Command::Orthogonal {
            file,
            second,
            naive,
            format,
        } => orthogonal(&file, second.as_deref(), naive, format),
        Command::Biembed {
            file,
            show_cycle,
            format,
        } => {
            let g = read_grid(&file)?;
            let report = certify_biembedding(&g.array, g.k);
            print!("{}", report.render(format == Format::Structured));
            if show_cycle {
                match composition_for(&g.array, g.k) {
                    Ok((b, comp)) => {
                        for (idx, cycle) in comp.cycles.iter().enumerate() {
                            let values: Vec<String> = cycle
                                .iter()
                                .map(|&c| b.get(c).expect("filled cell").to_string())
                                .collect();
                            println!("composition cycle {}: ({})", idx + 1, values.join(", "));
                        }
                    }
                    Err(reason) => println!("composition: unavailable ({reason})"),
                }
            }
            Ok(if report.holds_for_all() { OK } else { FAILED })
        }
        Command::Search {
            m,
            n,
            h,
            k,
            budget,
            out,
        } => {
            let outcome =
                find_heffter(m, n, h, k, budget.get()).map_err(|e| exit(USAGE, e.to_string()))?;
            println!("{outcome}");
            match outcome.status {
                SearchStatus::Found(array) => {
                    let text = array.to_grid_text(k);
                    match out {
                        Some(path) => write_all(&[(path, text)])?,
                        None => print!("{text}"),
                    }
                    Ok(OK)
                }
                SearchStatus::ProvenAbsent => Ok(OK),
                SearchStatus::Unknown => Ok(FAILED),
            }
        }
        Command::SimpleOrdering {
            modulus,
            values,
            budget,
        } => {
            if modulus < 2 {
                return Err(exit(USAGE, "modulus must be at least 2"));
            }
            let (hyp, outcome) = find_simple_ordering(&values, modulus, budget.get())
                .map_err(|e| exit(USAGE, e.to_string()))?;
            println!("size={} zero_sum={}", hyp.size, hyp.zero_sum);
            println!("{outcome}");
            match outcome.status {
                SearchStatus::Found(order) => {
                    let parts: Vec<String> = order.iter().map(i64::to_string).collect();
                    println!("ordering: {}", parts.join(" "));
                    Ok(OK)
                }
                _ => Ok(FAILED),
            }
        }
    }
}

fn construct(n: usize, k: usize, out: Option<PathBuf>, fixture: Option<PathBuf>) -> Result<u8> {
    let spec = BuildSpec::new(n, k);
    let construction: Construction = match fixture {
        Some(path) => {
            let g = read_grid(&path)?;
            if g.k != k {
                return Err(exit(
                    FAILED,
                    format!("fixture declares k = {}, expected {k}", g.k),
                ));
            }
            accept_fixture(spec, g.array)
                .map_err(|e| exit(FAILED, format!("fixture rejected: {e}")))?
        }
        None => match build(spec).map_err(|e| exit(FAILED, e.to_string()))? {
            BuildOutcome::Built(c) => c,
            BuildOutcome::NeedsFixture(msg) => {
                return Err(exit(NEEDS_FIXTURE, format!("needs fixture: {msg}")))
            }
            BuildOutcome::Nonexistent(msg) => {
                return Err(exit(FAILED, format!("nonexistent: {msg}")))
            }
            BuildOutcome::OutOfRange(msg) => {
                return Err(exit(USAGE, format!("out of range: {msg}")))
            }
        },
    };
    let grid = construction.array.to_grid_text(k);
    let manifest = construction.manifest.to_text();
    match out {
        Some(path) => {
            let manifest_path = with_suffix(&path, ".manifest");
            write_all(&[(path.clone(), grid), (manifest_path.clone(), manifest)])?;
            println!("wrote {} and {}", path.display(), manifest_path.display());
        }
        None => {
            print!("{grid}");
            print!("{manifest}");
        }
    }
    Ok(OK)
}

fn decompose(file: &Path, kind: GraphKind, out: Option<PathBuf>, format: Format) -> Result<u8> {
    let g = read_grid(file)?;
    let (rows, cols) = decompositions_from_array(&g.array, g.k, kind)
        .map_err(|e| exit(FAILED, format!("cannot decompose: {e}")))?;
    let rows_check = difference_check(&rows);
    let cols_check = difference_check(&cols);
    let orthogonal = certify_orthogonal(&rows, &cols);
    let ok = rows_check.is_ok() && cols_check.is_ok() && orthogonal;
    let cert = if format == Format::Structured {
        format!(
            "#fmt 1\nv={}\nkind={}\nrow_cycles={}\ncol_cycles={}\nrows_base_cycles={}\ncols_base_cycles={}\northogonal={}\n",
            rows.modulus,
            kind.name(),
            rows.cycles.len(),
            cols.cycles.len(),
            rows_check.is_ok(),
            cols_check.is_ok(),
            orthogonal
        )
    } else {
        let word = |b: bool| if b { "pass" } else { "FAIL" };
        format!(
            "#fmt 1\nv = {} ({})\nrow base cycles: {} ({} cycles)\ncolumn base cycles: {} ({} cycles)\northogonal: {}\n",
            rows.modulus,
            kind.name(),
            word(rows_check.is_ok()),
            rows.cycles.len(),
            word(cols_check.is_ok()),
            cols.cycles.len(),
            word(orthogonal)
        )
    };
    match out {
        Some(prefix) => {
            let files = [
                (with_suffix(&prefix, ".rows.cycles"), rows.to_text()),
                (with_suffix(&prefix, ".cols.cycles"), cols.to_text()),
                (with_suffix(&prefix, ".cert"), cert.clone()),
            ];
            if !ok {
                print!("{cert}");
                return Err(exit(FAILED, "certificates failed; nothing written"));
            }
            write_all(&files)?;
            print!("{cert}");
            for (p, _) in &files {
                println!("wrote {}", p.display());
            }
        }
        None => {
            print!("{}", rows.to_text());
            print!("{}", cols.to_text());
            print!("{cert}");
        }
    }
    Ok(if ok { OK } else { FAILED })
}

fn orthogonal(file: &Path, second: Option<&Path>, naive: bool, format: Format) -> Result<u8> {
    let pairs: Vec<(BaseCycleSet, BaseCycleSet)> = match second {
        Some(other) => {
            let (a, b) = (read_cycles(file)?, read_cycles(other)?);
            if a.modulus != b.modulus {
                return Err(exit(USAGE, "cycle sets use different moduli"));
            }
            vec![(a, b)]
        }
        None => {
            let g = read_grid(file)?;
            [GraphKind::Complete, GraphKind::CocktailParty]
                .into_iter()
                .map(|kind| {
                    decompositions_from_array(&g.array, g.k, kind)
                        .map_err(|e| exit(FAILED, format!("cannot decompose: {e}")))
                })
                .collect::<Result<_>>()?
        }
    };
    let mut all = true;
    for (a, b) in &pairs {
        let witness = orthogonality_witness(a, b);
        let holds = witness.is_none();
        let oracle = if naive && a.modulus <= NAIVE_LIMIT {
            Some(naive_orthogonality(a, b, NAIVE_LIMIT).expect("size checked"))
        } else {
            None
        };
        let agrees = oracle.is_none_or(|o| o == holds);
        all &= holds && agrees;
        if format == Format::Structured {
            println!("v={} orthogonal={holds}", a.modulus);
            if let Some(o) = oracle {
                println!("v={} naive={o}", a.modulus);
            }
            if let Some(w) = witness {
                println!(
                    "v={} witness_first={} witness_second={} witness_shift={} shared_edges={}",
                    a.modulus, w.first, w.second, w.shift, w.shared
                );
            }
        } else {
            println!(
                "mod {}: {}",
                a.modulus,
                if holds {
                    "orthogonal"
                } else {
                    "NOT orthogonal"
                }
            );
            if let Some(o) = oracle {
                println!(
                    "mod {}: naive oracle {}",
                    a.modulus,
                    if o == holds { "agrees" } else { "DISAGREES" }
                );
            }
            if let Some(w) = witness {
                println!(
                    "  first-set cycle {} and second-set cycle {} shifted by {} share {} edges",
                    w.first + 1,
                    w.second + 1,
                    w.shift,
                    w.shared
                );
            }
        }
    }
    Ok(if all { OK } else { FAILED })
}
