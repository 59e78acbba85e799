//! The `rootlattice` command line.
//!
//! Exit codes: 0 success, 2 bad input, 3 enumeration cap exceeded,
//! 4 precondition failed (not a subfield), 5 value outside the domain
//! (not an algebraic integer).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::cyclo::{kronecker_classify, CycloError};
use crate::expr::{eval_str, ExprError};
use crate::field::{make_field, FieldDescriptor};
use crate::qgraph::{compute_qk, extend_classes, rank2_gram, rank2_roots, QGraphError};
use crate::report::{self, ReportDocument, RootsJson};
use crate::rootsys::{enumerate_roots, gram_of_type, CoxeterType, GramMatrix, RootError, RootVec};

#[derive(Parser, Debug)]
#[command(name = "rootlattice", version, about = "Exact root-lattice computations for totally real abelian number fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degree, modulus and Galois data of K = Q(zeta_2n^+ : n in gens).
    Field {
        #[arg(long, default_value = "")]
        gens: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The graph Q_K.
    Qgraph {
        #[arg(long, default_value = "")]
        gens: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank-2 classes and the rank >= 3 existence table.
    Classify {
        #[arg(long, default_value = "")]
        gens: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the roots of a catalogued type or of a Gram matrix file.
    Roots {
        #[arg(long = "type", conflicts_with = "gram")]
        ty: Option<String>,
        #[arg(long)]
        gram: Option<PathBuf>,
        /// Field for I2(m): the roots of O[zeta_2m] over that field.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, value_enum, default_value_t = Emit::Count)]
        emit: Emit,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scalar extension of rank-2 classes from K1 to K2 (gens as comma lists).
    Extend {
        gens1: String,
        gens2: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify an algebraic integer by its conjugates.
    Kronecker { expr: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Count,
    List,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Domain(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Domain(_) => 5,
        }
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        match e {
            RootError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<QGraphError> for CliError {
    fn from(e: QGraphError) -> Self {
        match e {
            QGraphError::NotSubfield => CliError::Precondition(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Parses a comma-separated generator list; empty means `Q`.
pub fn parse_gens(s: &str) -> Result<FieldDescriptor, CliError> {
    let gens = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| CliError::Input(format!("invalid generator '{t}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    make_field(gens).map_err(|e| CliError::Input(e.to_string()))
}

fn emit(out: &Option<PathBuf>, text: String, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs a parsed command, writing results to `stdout`.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Field { gens, format, out } => {
            let f = parse_gens(&gens)?;
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&report::FieldJson::from(&f)).expect("serializes")
                        + "\n"
                }
                _ => format!(
                    "field: {f}\ndegree: {}\nmodulus: {}\n|H|: {}\n",
                    f.degree(),
                    f.modulus(),
                    f.h_group().len()
                ),
            };
            emit(&out, text, stdout)
        }
        Command::Qgraph { gens, format, out } => {
            let f = parse_gens(&gens)?;
            let g = compute_qk(&f);
            let text = match format {
                Format::Dot => report::qgraph_dot(&g),
                Format::Json => report::qgraph_json(&g),
                Format::Text => {
                    let mut s = format!("vertices: {:?}\n", g.vertices());
                    for &(x, y) in g.edges() {
                        s.push_str(&format!("{x} -> {y}\n"));
                    }
                    s
                }
            };
            emit(&out, text, stdout)
        }
        Command::Classify {
            gens,
            nmax,
            format,
            out,
        } => {
            let f = parse_gens(&gens)?;
            let doc = ReportDocument::build(&f, nmax)?;
            let text = match format {
                Format::Text => classify_text(&f, &doc),
                _ => doc.to_json(),
            };
            emit(&out, text, stdout)
        }
        Command::Roots {
            ty,
            gram,
            gens,
            emit: what,
            cap,
            out,
        } => {
            let (label, g, roots) = roots_for(ty, gram, gens, cap)?;
            let text = match what {
                Emit::Count => format!("{}\n", roots.len()),
                Emit::List => report::sorted_root_strings(&roots)
                    .into_iter()
                    .map(|r| format!("[{}]\n", r.join(", ")))
                    .collect(),
                Emit::Json => {
                    serde_json::to_string_pretty(&RootsJson::new(label, &g, &roots))
                        .expect("serializes")
                        + "\n"
                }
            };
            emit(&out, text, stdout)
        }
        Command::Extend {
            gens1,
            gens2,
            format,
            out,
        } => {
            let f1 = parse_gens(&gens1)?;
            let f2 = parse_gens(&gens2)?;
            let text = match format {
                Format::Json => report::extension_json(&f1, &f2)?,
                _ => extend_classes(&f1, &f2)?
                    .iter()
                    .map(|(a, b)| format!("{} -> {}\n", a.label(), b.label()))
                    .collect(),
            };
            emit(&out, text, stdout)
        }
        Command::Kronecker { expr } => {
            let a = eval_str(&expr).map_err(|e| match e {
                ExprError::Parse(p) => CliError::Input(p.to_string()),
                ExprError::Eval(c) => CliError::Input(c.to_string()),
            })?;
            let class = kronecker_classify(&a).map_err(|e| match e {
                CycloError::NotAlgebraicInteger => CliError::Domain(e.to_string()),
                other => CliError::Input(other.to_string()),
            })?;
            emit(&None, format!("{class}\n"), stdout)
        }
    }
}

fn classify_text(f: &FieldDescriptor, doc: &ReportDocument) -> String {
    let mut s = format!("field: {f} (degree {})\n", f.degree());
    s.push_str(&format!("Q_K: {:?}\n", doc.qk.vertices));
    let edges: Vec<String> = doc.qk.edges.iter().map(|[x, y]| format!("{x}->{y}")).collect();
    s.push_str(&format!("edges: {}\n", edges.join(", ")));
    s.push_str(&format!("P_K: {:?}\n", doc.qk.prime_power_classes));
    s.push_str(&format!("R_K: {:?}\n", doc.qk.composite_components));
    s.push_str("rank 2:\n");
    for c in &doc.rank2 {
        s.push_str(&format!("  {} (mu order {}, {} {:?})\n", c.label, c.mu_order, c.kind, c.members));
    }
    s.push_str("rank >= 3:\n");
    for (k, v) in &doc.rank_ge3 {
        s.push_str(&format!("  {k}: {}\n", if *v { "yes" } else { "no" }));
    }
    s
}

type RootsOutput = (Option<String>, GramMatrix, Vec<RootVec>);

fn roots_for(
    ty: Option<String>,
    gram: Option<PathBuf>,
    gens: Option<String>,
    cap: Option<usize>,
) -> Result<RootsOutput, CliError> {
    if let Some(path) = gram {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let g = report::parse_gram_file(&text).map_err(|e| CliError::Input(e.to_string()))?;
        let roots = enumerate_roots(&g, cap.unwrap_or(10_000))?.into_vec();
        return Ok((None, g, roots));
    }
    let Some(ty) = ty else {
        return Err(CliError::Input("one of --type or --gram is required".into()));
    };
    let t: CoxeterType = ty.parse()?;
    if let Some(gens) = gens {
        let m = match t {
            CoxeterType::I2(m) => m,
            CoxeterType::A(2) => 3,
            CoxeterType::B(2) => 4,
            _ => return Err(CliError::Input("--gens applies to rank-2 types only".into())),
        };
        let f = parse_gens(&gens)?;
        let g = rank2_gram(m);
        let roots = rank2_roots(&f, m)?
            .into_iter()
            .map(|(a, b)| RootVec(vec![a, b]))
            .collect();
        return Ok((Some(t.to_string()), g, roots));
    }
    let g = gram_of_type(t)?;
    let roots = enumerate_roots(&g, cap.unwrap_or(2 * t.root_count()))?.into_vec();
    Ok((Some(t.to_string()), g, roots))
}

/// Parses `args` (including the program name) and runs. Returns the exit
/// code; diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
