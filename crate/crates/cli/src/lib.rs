//! Command-line front end: argument parsing, dispatch and rendering.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use oriented_ideal::io::{
    ass_json, characterization_json, cm_json, cover_analysis_json, decomposition_json,
    fast_certificate_json, unmixed_json,
};
use oriented_ideal::unmixed::FastReason;
use oriented_ideal::{
    associated_primes, characterize_all, classify_shape, cm_status, display_decomposition,
    enumerate_minimal_covers, enumerate_strong_covers, fixtures, is_unmixed, load_graph,
    mixedness_fast_certificates, strong_cover_decomposition, CharacterizationResult, CmStatus,
    Error, Limits, LoadError, MixedCertificate, VertexSet, WeightedOrientedGraph,
};

/// Verification runs by default up to this many vertices.
pub const DEFAULT_VERIFY_MAX_N: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "oriented-ideal",
    version,
    about = "Edge ideals of weighted oriented graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irredundant irreducible decomposition of I(D)
    Decompose(Common),
    /// Associated primes of I(D)
    Ass(Common),
    /// Unmixedness: the three criteria and their certificates
    Unmixed(Common),
    /// Strong vertex covers with their L-partitions
    Covers {
        #[command(flatten)]
        common: Common,
        /// List the minimal vertex covers instead
        #[arg(long)]
        minimal: bool,
    },
    /// Shape tags and the closed-form unmixedness criteria that apply
    Characterize(Common),
    /// Cross-check the decomposition against the oracle and the criteria
    /// against each other
    Verify(Common),
    /// Cohen-Macaulay status for paths and complete graphs
    Cm(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Graph JSON file
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    pub input: Option<PathBuf>,
    /// Use a built-in graph instead of a file
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(fixtures::NAMES))]
    pub fixture: Option<String>,
    /// Check the decomposition against the splitting oracle
    #[arg(long, conflicts_with = "no_verify")]
    pub verify: bool,
    /// Skip the oracle check even on small graphs
    #[arg(long)]
    pub no_verify: bool,
    /// Largest vertex count for cover enumeration
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Failure of one CLI invocation.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Analysis(#[from] Error),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    /// 2 for bad input, 3 for enumeration caps, 1 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Load(_) => 2,
            CliError::Analysis(e) if e.is_size_cap() => 3,
            CliError::Analysis(Error::VerificationFailure(_) | Error::CriteriaDisagreement(_)) => 1,
            CliError::Analysis(_) => 2,
            CliError::Mismatch(_) => 1,
        }
    }
}

impl Common {
    fn graph(&self) -> Result<WeightedOrientedGraph, CliError> {
        match (&self.fixture, &self.input) {
            (Some(name), _) => Ok(fixtures::by_name(name).expect("clap restricts fixture names")),
            (None, Some(path)) => Ok(load_graph(path)?),
            (None, None) => unreachable!("clap requires an input"),
        }
    }

    fn limits(&self) -> Limits {
        let limits = Limits::from_env();
        match self.max_n {
            Some(n) => limits.with_max_n(n),
            None => limits,
        }
    }

    fn verify_for(&self, g: &WeightedOrientedGraph) -> bool {
        self.verify || (!self.no_verify && g.n() <= DEFAULT_VERIFY_MAX_N)
    }
}

/// Runs a parsed command, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<(), CliError> {
    let text = render(cli)?;
    out.write_all(text.as_bytes()).expect("write to output");
    Ok(())
}

/// Renders the report of a parsed command.
pub fn render(cli: &Cli) -> Result<String, CliError> {
    let (common, body) = match &cli.command {
        Command::Decompose(c) => (c, decompose(c)?),
        Command::Ass(c) => (c, ass(c)?),
        Command::Unmixed(c) => (c, unmixed(c)?),
        Command::Covers { common, minimal } => (common, covers(common, *minimal)?),
        Command::Characterize(c) => (c, characterize(c)?),
        Command::Verify(c) => (c, verify(c)?),
        Command::Cm(c) => (c, cm(c)?),
    };
    Ok(match (common.format, body) {
        (Format::Text, Body::Text(t)) => t,
        (Format::Json, Body::Json(v)) => {
            serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
        }
        _ => unreachable!("renderers follow the requested format"),
    })
}

enum Body {
    Text(String),
    Json(Value),
}

fn body(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> Body {
    match format {
        Format::Text => Body::Text(text()),
        Format::Json => Body::Json(value()),
    }
}

fn set(g: &WeightedOrientedGraph, s: VertexSet) -> String {
    format!("{{{}}}", g.set_names(s).join(","))
}

fn decompose(c: &Common) -> Result<Body, CliError> {
    let g = c.graph()?;
    let report = strong_cover_decomposition(&g, c.verify_for(&g), &c.limits())?;
    Ok(body(
        c.format,
        || display_decomposition(&report.ideals(), g.names()) + "\n",
        || decomposition_json(&g, &report),
    ))
}

fn ass(c: &Common) -> Result<Body, CliError> {
    let g = c.graph()?;
    let primes = associated_primes(&g, &c.limits())?;
    Ok(body(
        c.format,
        || {
            primes
                .iter()
                .map(|&p| format!("({})\n", g.set_names(p).join(",")))
                .collect()
        },
        || ass_json(&g, &primes),
    ))
}

fn certificate_text(g: &WeightedOrientedGraph, c: &MixedCertificate) -> String {
    match *c {
        MixedCertificate::StrongSizes { smaller, larger } => {
            format!(
                "certificate=strong covers {} and {} differ in size",
                set(g, smaller),
                set(g, larger)
            )
        }
        MixedCertificate::NonemptyL3 { cover, l3 } => {
            format!(
                "certificate=strong cover {} has L3={}",
                set(g, cover),
                set(g, l3)
            )
        }
        MixedCertificate::UnderlyingMixed { smaller, larger } => format!(
            "certificate=minimal covers {} and {} of the underlying graph differ in size",
            set(g, smaller),
            set(g, larger)
        ),
    }
}

fn unmixed(c: &Common) -> Result<Body, CliError> {
    let g = c.graph()?;
    let fast = mixedness_fast_certificates(&g);
    let report = is_unmixed(&g, &c.limits())?;
    Ok(body(
        c.format,
        || {
            let mut t = String::new();
            writeln!(t, "unmixed={}", report.unmixed).unwrap();
            writeln!(t, "minimal_strong={}", report.minimal_strong).unwrap();
            writeln!(t, "graph_unmixed={}", report.graph_unmixed).unwrap();
            writeln!(
                t,
                "criterion.strong_cardinality={}",
                report.criterion_strong_cardinality
            )
            .unwrap();
            writeln!(
                t,
                "criterion.graph_unmixed_and_l3_empty={}",
                report.criterion_graph_unmixed_and_l3
            )
            .unwrap();
            writeln!(
                t,
                "criterion.minimal_strong_and_graph_unmixed={}",
                report.criterion_minimal_strong_and_g
            )
            .unwrap();
            writeln!(t, "agreement={}", report.agreement).unwrap();
            if let Some(f) = &fast {
                let reason = match f.reason {
                    FastReason::AllHeavy => "all weights differ from 1",
                    FastReason::FullVertexSetStrong => "every vertex has a heavy in-neighbour",
                };
                writeln!(t, "fast_certificate={reason}").unwrap();
            }
            for cert in &report.certificates {
                writeln!(t, "{}", certificate_text(&g, cert)).unwrap();
            }
            t
        },
        || {
            let mut v = unmixed_json(&g, &report);
            v["fast_certificate"] = fast
                .as_ref()
                .map_or(Value::Null, |f| fast_certificate_json(&g, f));
            v
        },
    ))
}

fn covers(c: &Common, minimal: bool) -> Result<Body, CliError> {
    let g = c.graph()?;
    let limits = c.limits();
    if minimal {
        let sets = enumerate_minimal_covers(&g, &limits)?;
        return Ok(body(
            c.format,
            || sets.iter().map(|&s| set(&g, s) + "\n").collect(),
            || json!({ "minimal_covers": sets.iter().map(|&s| g.set_names(s)).collect::<Vec<_>>() }),
        ));
    }
    let strong = enumerate_strong_covers(&g, &limits)?;
    Ok(body(
        c.format,
        || {
            strong
                .iter()
                .map(|a| {
                    format!(
                        "{} L1={} L2={} L3={} {}\n",
                        set(&g, a.cover),
                        set(&g, a.l1),
                        set(&g, a.l2),
                        set(&g, a.l3),
                        if a.is_minimal { "minimal" } else { "strong" }
                    )
                })
                .collect()
        },
        || json!({ "strong_covers": strong.iter().map(|a| cover_analysis_json(&g, a)).collect::<Vec<_>>() }),
    ))
}

fn characterization_text(g: &WeightedOrientedGraph, r: &CharacterizationResult) -> String {
    let mut t = format!("{}: verdict={} clause={}", r.shape, r.verdict, r.clause);
    if !r.witness_vertices.is_empty() {
        let names: Vec<&str> = r.witness_vertices.iter().map(|&v| g.name(v)).collect();
        write!(t, " vertices=[{}]", names.join(",")).unwrap();
    }
    if !r.witness_edges.is_empty() {
        let edges: Vec<String> = r
            .witness_edges
            .iter()
            .map(|&(a, b)| format!("({},{})", g.name(a), g.name(b)))
            .collect();
        write!(t, " edges=[{}]", edges.join(",")).unwrap();
    }
    t
}

fn characterize(c: &Common) -> Result<Body, CliError> {
    let g = c.graph()?;
    let tags = classify_shape(&g);
    let results: Vec<CharacterizationResult> = characterize_all(&g)
        .into_iter()
        .filter(|r| r.applicable)
        .collect();
    Ok(body(
        c.format,
        || {
            let mut t = format!("shape={}\n", tags.labels().join(","));
            for r in &results {
                writeln!(t, "{}", characterization_text(&g, r)).unwrap();
            }
            t
        },
        || {
            json!({
                "shape": tags.labels(),
                "characterizations": results.iter().map(|r| characterization_json(&g, r)).collect::<Vec<_>>(),
            })
        },
    ))
}

fn verify(c: &Common) -> Result<Body, CliError> {
    let g = c.graph()?;
    let limits = c.limits();
    let report = strong_cover_decomposition(&g, true, &limits)?;
    let unmixed = is_unmixed(&g, &limits)?;
    let results: Vec<CharacterizationResult> = characterize_all(&g)
        .into_iter()
        .filter(|r| r.applicable)
        .collect();
    if let Some(r) = results.iter().find(|r| r.verdict != unmixed.unmixed) {
        return Err(CliError::Mismatch(format!(
            "{} criterion says {} but the strong covers say {}",
            r.shape, r.verdict, unmixed.unmixed
        )));
    }
    if let Some(f) = mixedness_fast_certificates(&g) {
        if unmixed.unmixed {
            return Err(CliError::Mismatch(format!(
                "fast certificate {:?} on an unmixed graph",
                f.reason
            )));
        }
    }
    let shapes: Vec<&str> = results.iter().map(|r| r.shape).collect();
    Ok(body(
        c.format,
        || {
            format!(
                "decomposition: {} components agree with the oracle\nunmixed criteria agree: unmixed={}\nshape criteria agree: [{}]\n",
                report.components.len(),
                unmixed.unmixed,
                shapes.join(",")
            )
        },
        || {
            json!({
                "components": report.components.len(),
                "oracle_agreement": true,
                "unmixed": unmixed.unmixed,
                "criteria_agreement": true,
                "shape_criteria": shapes,
            })
        },
    ))
}

fn cm(c: &Common) -> Result<Body, CliError> {
    let g = c.graph()?;
    let status = cm_status(&g, &c.limits())?;
    Ok(body(
        c.format,
        || match &status {
            CmStatus::Decided(r) => format!(
                "cohen_macaulay={}\n{}\n",
                r.verdict,
                characterization_text(&g, r)
            ),
            CmStatus::RequiresExternalCas {
                unmixed,
                minimal_strong,
            } => {
                format!(
                    "requires external CAS\nunmixed={unmixed}\nminimal_strong={minimal_strong}\n"
                )
            }
        },
        || cm_json(&g, &status),
    ))
}
