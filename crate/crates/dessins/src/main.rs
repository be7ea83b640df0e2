//! Thin command-line wrapper over the library: every subcommand calls
//! one library operation and prints its plain-text form. All results go
//! to stdout, all diagnostics to stderr; exit 0 on success, 1 on domain
//! errors, 2 on usage errors. Identical inputs always produce
//! byte-identical output.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dessins::algebra::{self, FormalSum, MinPolyCaps};
use dessins::catalog::{self, Catalog};
use dessins::dessin::{Dessin, IrreducibleDessin, DEFAULT_GROUP_ORDER_CAP};
use dessins::exact::factor::factor_over_q;
use dessins::galois::{self, OrbitTable, SubalgebraCaps};

#[derive(Parser)]
#[command(
    name = "dessins",
    version,
    about = "Exact computations with dessins: canonical forms, the formal-sum ring, minimal polynomials, branch-point symmetries, and orbit-table projections."
)]
struct Cli {
    /// Config file with `key = value` lines (# comments). Keys:
    /// max-edges, minpoly-degree-cap, minpoly-basis-cap,
    /// group-order-cap, subalgebra-degree-cap, subalgebra-size-cap.
    /// Command-line flags override config values.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a dessin.
    Canon {
        /// Dessin line, e.g. "n=2 a=1,0 b=0,1".
        #[arg(long, value_name = "LINE")]
        dessin: String,
    },
    /// Print the irreducible components of a dessin, one per line.
    Decompose {
        #[arg(long, value_name = "LINE")]
        dessin: String,
    },
    /// Multiply two dessins and print the product's canonical form.
    Product {
        #[arg(long, value_name = "LINE")]
        left: String,
        #[arg(long, value_name = "LINE")]
        right: String,
    },
    /// Print branch cycle types, genus, and monodromy group order of an
    /// irreducible dessin.
    Passport {
        #[arg(long, value_name = "LINE")]
        dessin: String,
        /// Group-order search limit; larger orders print as overflow.
        #[arg(long, value_name = "N")]
        group_order_cap: Option<usize>,
    },
    /// Print the orbit of a dessin under the six branch-point
    /// symmetries, one canonical form per line.
    S3Orbit {
        #[arg(long, value_name = "LINE")]
        dessin: String,
    },
    /// Print the minimal polynomial of a formal sum as an ascending
    /// coefficient list, optionally with its prime factorization.
    Minpoly {
        #[command(flatten)]
        input: SumInput,
        /// Also print one `factor <coeffs> multiplicity <m>` line per
        /// prime factor.
        #[arg(long)]
        factor: bool,
        #[command(flatten)]
        caps: MinPolyFlags,
    },
    /// For every irreducible dessin in a catalog, report whether its
    /// minimal polynomial splits into linear factors.
    VerifySplitting {
        /// Catalog file, `-` for stdin.
        #[arg(long, value_name = "FILE")]
        catalog: String,
        #[command(flatten)]
        caps: MinPolyFlags,
    },
    /// Enumerate all dessins with n edges up to relabelling and print
    /// (or save) the catalog.
    Enumerate {
        /// Edge count.
        n: usize,
        /// Keep only irreducible dessins.
        #[arg(long)]
        irreducible: bool,
        /// Write the catalog to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Enumeration guard; raising it is a deliberate choice.
        #[arg(long, value_name = "N")]
        max_edges: Option<usize>,
    },
    /// Count dessins with n edges by summation over the symmetric
    /// group, independently of the enumerator.
    Burnside {
        /// Edge count (at most 6).
        n: usize,
    },
    /// Check an orbit table's invariants and print one line per
    /// violation found (no output means none; always exits 0).
    ValidateOrbits {
        /// Orbit-table file, `-` for stdin.
        #[arg(long, value_name = "FILE")]
        table: String,
        /// Skip the per-orbit passport-constancy check.
        #[arg(long)]
        lenient: bool,
    },
    /// Print the balanced sum of a dessin: its symmetry average minus
    /// the symmetry average of its orbit mean (empty output for zero).
    Balanced {
        #[arg(long, value_name = "LINE")]
        dessin: String,
        /// Orbit-table file, `-` for stdin.
        #[arg(long, value_name = "FILE")]
        table: String,
    },
    /// Report, per dessin, whether exactly one prime factor of the
    /// balanced sum's minimal polynomial has degree equal to the
    /// balanced orbit size. Verdicts are data, not assertions.
    CheckConjecture1 {
        #[command(flatten)]
        input: CheckInput,
        /// Orbit-table file, `-` for stdin.
        #[arg(long, value_name = "FILE")]
        table: String,
        #[command(flatten)]
        caps: MinPolyFlags,
    },
    /// Print an independent basis of the subalgebra generated by the
    /// sums in a file (blank-line-separated), in discovery order.
    Subalgebra {
        /// Generators file, `-` for stdin.
        #[arg(long, value_name = "FILE")]
        generators: String,
        /// Longest generator product explored.
        #[arg(long, value_name = "N")]
        degree_cap: Option<usize>,
        /// Basis size limit; exceeding it is an error.
        #[arg(long, value_name = "N")]
        size_cap: Option<usize>,
    },
}

/// A formal sum given either inline as a dessin or as a file of terms.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct SumInput {
    /// Dessin line, interpreted as the sum of its components.
    #[arg(long, value_name = "LINE")]
    dessin: Option<String>,
    /// Formal-sum file (`<rational> * <dessin>` lines), `-` for stdin.
    #[arg(long, value_name = "FILE")]
    sum: Option<String>,
}

/// One dessin, or a whole catalog checked entry by entry.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct CheckInput {
    /// Single irreducible dessin line.
    #[arg(long, value_name = "LINE")]
    dessin: Option<String>,
    /// Catalog file, `-` for stdin; covered entries are reported,
    /// uncovered entries are skipped.
    #[arg(long, value_name = "FILE")]
    catalog: Option<String>,
}

#[derive(Args)]
struct MinPolyFlags {
    /// Minimal-polynomial degree limit.
    #[arg(long, value_name = "N")]
    degree_cap: Option<usize>,
    /// Power support-size limit.
    #[arg(long, value_name = "N")]
    basis_cap: Option<usize>,
}

/// Defaults, overridden by the config file, overridden by flags.
#[derive(Clone, Copy)]
struct Settings {
    max_edges: usize,
    minpoly_degree_cap: usize,
    minpoly_basis_cap: usize,
    group_order_cap: usize,
    subalgebra_degree_cap: usize,
    subalgebra_size_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_edges: catalog::DEFAULT_MAX_EDGES,
            minpoly_degree_cap: algebra::DEFAULT_MINPOLY_DEGREE_CAP,
            minpoly_basis_cap: algebra::DEFAULT_MINPOLY_BASIS_CAP,
            group_order_cap: DEFAULT_GROUP_ORDER_CAP,
            subalgebra_degree_cap: galois::DEFAULT_SUBALGEBRA_DEGREE_CAP,
            subalgebra_size_cap: galois::DEFAULT_SUBALGEBRA_SIZE_CAP,
        }
    }
}

enum Failure {
    /// Bad math or bad input files: exit 1.
    Domain(dessins::Error),
    /// Bad caps or malformed config: exit 2.
    Usage(String),
}

impl From<dessins::Error> for Failure {
    fn from(e: dessins::Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let settings = load_settings(cli.config.as_deref())?;
    match cli.command {
        Command::Canon { dessin } => {
            let d: Dessin = dessin.parse().map_err(Failure::Domain)?;
            Ok(format!("{}\n", d.canonicalize()))
        }
        Command::Decompose { dessin } => {
            let d: Dessin = dessin.parse().map_err(Failure::Domain)?;
            let mut out = String::new();
            for component in d.decompose() {
                writeln!(out, "{component}").expect("string write");
            }
            Ok(out)
        }
        Command::Product { left, right } => {
            let left: Dessin = left.parse().map_err(Failure::Domain)?;
            let right: Dessin = right.parse().map_err(Failure::Domain)?;
            Ok(format!("{}\n", left.product(&right).canonicalize()))
        }
        Command::Passport {
            dessin,
            group_order_cap,
        } => {
            let cap = positive(
                group_order_cap.unwrap_or(settings.group_order_cap),
                "group-order cap",
            )?;
            let d: Dessin = dessin.parse().map_err(Failure::Domain)?;
            let d = IrreducibleDessin::new(&d)?;
            Ok(format!("{}\n", d.passport_with_cap(cap)))
        }
        Command::S3Orbit { dessin } => {
            let d: Dessin = dessin.parse().map_err(Failure::Domain)?;
            let mut out = String::new();
            for member in d.s3_orbit() {
                writeln!(out, "{member}").expect("string write");
            }
            Ok(out)
        }
        Command::Minpoly {
            input,
            factor,
            caps,
        } => {
            let sum = read_sum(&input)?;
            let caps = minpoly_caps(&caps, &settings)?;
            let p = algebra::minimal_polynomial(&sum, caps)?;
            let mut out = format!("{p}\n");
            if factor {
                let (_, factors) = factor_over_q(&p)?;
                for (prime, multiplicity) in factors {
                    writeln!(out, "factor {prime} multiplicity {multiplicity}")
                        .expect("string write");
                }
            }
            Ok(out)
        }
        Command::VerifySplitting { catalog, caps } => {
            let caps = minpoly_caps(&caps, &settings)?;
            let catalog: Catalog = read_input(&catalog)?.parse().map_err(Failure::Domain)?;
            let mut out = String::new();
            for d in catalog.irreducible_entries() {
                let report = algebra::verify_linear_splitting(&d, caps)?;
                writeln!(out, "{report}").expect("string write");
            }
            Ok(out)
        }
        Command::Enumerate {
            n,
            irreducible,
            out,
            max_edges,
        } => {
            let limit = positive(max_edges.unwrap_or(settings.max_edges), "edge-count guard")?;
            let catalog = catalog::enumerate_with_limit(n, irreducible, limit)?;
            match out {
                Some(path) => {
                    catalog.save(path)?;
                    Ok(String::new())
                }
                None => Ok(catalog.to_string()),
            }
        }
        Command::Burnside { n } => Ok(format!("{}\n", catalog::burnside_count(n)?)),
        Command::ValidateOrbits { table, lenient } => {
            let table: OrbitTable = read_input(&table)?.parse().map_err(Failure::Domain)?;
            let mut out = String::new();
            for violation in table.validate(!lenient) {
                writeln!(out, "{violation}").expect("string write");
            }
            Ok(out)
        }
        Command::Balanced { dessin, table } => {
            let d: Dessin = dessin.parse().map_err(Failure::Domain)?;
            let d = IrreducibleDessin::new(&d)?;
            let table: OrbitTable = read_input(&table)?.parse().map_err(Failure::Domain)?;
            let psi = galois::balanced(&d, &table)?;
            if psi.is_zero() {
                Ok(String::new())
            } else {
                Ok(format!("{psi}\n"))
            }
        }
        Command::CheckConjecture1 { input, table, caps } => {
            let caps = minpoly_caps(&caps, &settings)?;
            let table: OrbitTable = read_input(&table)?.parse().map_err(Failure::Domain)?;
            let mut out = String::new();
            match (&input.dessin, &input.catalog) {
                (Some(line), None) => {
                    let d: Dessin = line.parse().map_err(Failure::Domain)?;
                    let d = IrreducibleDessin::new(&d)?;
                    let report = galois::conjecture1_check(&d, &table, caps)?;
                    writeln!(out, "{report}").expect("string write");
                }
                (None, Some(path)) => {
                    let catalog: Catalog = read_input(path)?.parse().map_err(Failure::Domain)?;
                    for d in catalog.irreducible_entries() {
                        if !table.covers(&d) {
                            continue;
                        }
                        let report = galois::conjecture1_check(&d, &table, caps)?;
                        writeln!(out, "{report}").expect("string write");
                    }
                }
                _ => unreachable!("clap enforces exactly one input"),
            }
            Ok(out)
        }
        Command::Subalgebra {
            generators,
            degree_cap,
            size_cap,
        } => {
            let caps = SubalgebraCaps {
                degree: positive(
                    degree_cap.unwrap_or(settings.subalgebra_degree_cap),
                    "subalgebra degree cap",
                )?,
                size: positive(
                    size_cap.unwrap_or(settings.subalgebra_size_cap),
                    "subalgebra size cap",
                )?,
            };
            let generators = algebra::parse_sums(&read_input(&generators)?)?;
            let basis = galois::balanced_subalgebra_basis(&generators, caps)?;
            let mut out = String::new();
            for (i, element) in basis.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                writeln!(out, "{element}").expect("string write");
            }
            Ok(out)
        }
    }
}

fn read_input(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Domain(e.into()))?;
        Ok(text)
    } else {
        read_file(Path::new(source))
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| {
        let named = std::io::Error::new(e.kind(), format!("{}: {e}", path.display()));
        Failure::Domain(named.into())
    })
}

fn read_sum(input: &SumInput) -> Result<FormalSum, Failure> {
    match (&input.dessin, &input.sum) {
        (Some(line), None) => {
            let d: Dessin = line.parse().map_err(Failure::Domain)?;
            Ok(FormalSum::from_dessin(&d))
        }
        (None, Some(path)) => Ok(read_input(path)?.parse().map_err(Failure::Domain)?),
        _ => unreachable!("clap enforces exactly one input"),
    }
}

fn positive(value: usize, what: &str) -> Result<usize, Failure> {
    if value == 0 {
        return Err(Failure::Usage(format!("{what} must be positive")));
    }
    Ok(value)
}

fn minpoly_caps(flags: &MinPolyFlags, settings: &Settings) -> Result<MinPolyCaps, Failure> {
    Ok(MinPolyCaps {
        degree: positive(
            flags.degree_cap.unwrap_or(settings.minpoly_degree_cap),
            "minimal-polynomial degree cap",
        )?,
        basis: positive(
            flags.basis_cap.unwrap_or(settings.minpoly_basis_cap),
            "minimal-polynomial basis cap",
        )?,
    })
}

fn load_settings(path: Option<&Path>) -> Result<Settings, Failure> {
    let mut settings = Settings::default();
    let Some(path) = path else {
        return Ok(settings);
    };
    let text = read_file(path)?;
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Failure::Usage(format!(
                "config line {}: expected `key = value`, got {line:?}",
                index + 1
            ))
        })?;
        let value: usize = value.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "config line {}: value must be a non-negative integer",
                index + 1
            ))
        })?;
        let slot = match key.trim() {
            "max-edges" => &mut settings.max_edges,
            "minpoly-degree-cap" => &mut settings.minpoly_degree_cap,
            "minpoly-basis-cap" => &mut settings.minpoly_basis_cap,
            "group-order-cap" => &mut settings.group_order_cap,
            "subalgebra-degree-cap" => &mut settings.subalgebra_degree_cap,
            "subalgebra-size-cap" => &mut settings.subalgebra_size_cap,
            other => {
                return Err(Failure::Usage(format!(
                    "config line {}: unknown key {other:?}",
                    index + 1
                )))
            }
        };
        *slot = value;
    }
    Ok(settings)
}
