//! The `locc` command line: argument parsing, input loading, reports and
//! exit codes.
//!
//! Exit codes: 0 yes / ok, 1 no / verification failed, 2 bad input,
//! 3 unknown, 4 degenerate domino phases.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::domino::{builtin_diagram, DominoDiagram, DominoError};
use crate::graphs::{clique_cover_number, SimpleGraph};
use crate::locc::{decide_one_way, verify_report, Budget, LoccError, MeasurementWitness, SynthesisPath, Verdict};
use crate::numerics::Tolerance;
use crate::states::{builtin, Party, ProductStateSet, StateSetFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

/// Environment variable that replaces the default tolerance.
pub const TOL_ENV: &str = "LOCC_TOL";

#[derive(Debug, Parser)]
#[command(name = "locc", version, about = "One-way LOCC distinguishability of product states")]
pub struct Cli {
    /// Zero threshold for inner products and projections.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print both confusability graphs and their clique cover numbers.
    Graphs {
        /// State-set file or builtin:NAME.
        states: String,
    },
    /// Decide one-way distinguishability and write a witness or certificate.
    Decide(DecideArgs),
    /// Check a measurement witness against a state set.
    Verify { states: String, witness: PathBuf },
    /// Domino diagrams.
    #[command(subcommand)]
    Domino(DominoCommand),
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    pub states: String,
    #[arg(long, default_value = "alice")]
    pub first: Party,
    #[arg(long, default_value_t = 256)]
    pub budget_graphs: usize,
    #[arg(long, default_value_t = 512)]
    pub budget_covers: usize,
    #[arg(long, default_value_t = 5040)]
    pub budget_orderings: usize,
    /// Where to write the witness, certificate or search statistics.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum DominoCommand {
    /// Write the state set of a diagram.
    Generate {
        /// Diagram file or builtin:bennett3x3.
        diagram: String,
        /// Draw random unit phases from this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Validate a diagram and report bounds, verdicts and graph consistency.
    Analyze {
        diagram: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// An error already mapped to its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl std::fmt::Display) -> Self {
        Self { code: EXIT_INVALID, message: message.to_string() }
    }
}

impl From<LoccError> for Failure {
    fn from(e: LoccError) -> Self {
        Failure::invalid(e)
    }
}

impl From<DominoError> for Failure {
    fn from(e: DominoError) -> Self {
        let code = if matches!(e, DominoError::PhaseDegeneracy(_)) { EXIT_DEGENERATE } else { EXIT_INVALID };
        Failure { code, message: e.to_string() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let tol = tolerance_override(cli.tol)?;
    match &cli.command {
        Command::Graphs { states } => cmd_graphs(&load_states(states, tol)?, cli.format, out),
        Command::Decide(args) => cmd_decide(&load_states(&args.states, tol)?, args, cli.format, out),
        Command::Verify { states, witness } => {
            let text = read(witness)?;
            let witness = MeasurementWitness::from_json(&text)?;
            cmd_verify(&load_states(states, tol)?, &witness, cli.format, out)
        }
        Command::Domino(DominoCommand::Generate { diagram, seed, output }) => {
            let d = load_diagram(diagram, *seed)?;
            d.check_consistency()?;
            let mut set = d.generate_states()?;
            if let Some(t) = tol {
                set = set.with_tol(t);
            }
            emit(output.as_ref(), &set.to_json(), out)?;
            Ok(EXIT_OK)
        }
        Command::Domino(DominoCommand::Analyze { diagram, seed }) => {
            cmd_domino_analyze(&load_diagram(diagram, *seed)?, cli.format, out)
        }
    }
}

fn tolerance_override(flag: Option<f64>) -> Result<Option<Tolerance>, Failure> {
    let raw = match flag {
        Some(t) => Some(t),
        None => match std::env::var(TOL_ENV) {
            Ok(s) => Some(
                s.trim().parse::<f64>().map_err(|_| Failure::invalid(format!("{TOL_ENV}={s:?} is not a number")))?,
            ),
            Err(_) => None,
        },
    };
    raw.map(|t| Tolerance::new(t).map_err(Failure::invalid)).transpose()
}

fn read(path: &std::path::Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

/// Loads a state-set file or `builtin:NAME`. An explicit tolerance wins
/// over the one stored in the file.
pub fn load_states(source: &str, tol: Option<Tolerance>) -> Result<ProductStateSet, Failure> {
    let set = if let Some(name) = source.strip_prefix("builtin:") {
        match builtin_diagram(name) {
            Some(d) => d.generate_states().map_err(Failure::from)?,
            None => builtin(name).map_err(Failure::invalid)?,
        }
    } else {
        let text = read(source.as_ref())?;
        let file: StateSetFile = serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("{source}: {e}")))?;
        file.into_set().map_err(Failure::invalid)?
    };
    Ok(match tol {
        Some(t) => set.with_tol(t),
        None => set,
    })
}

/// Loads a diagram file or `builtin:NAME`, optionally re-drawing phases.
pub fn load_diagram(source: &str, seed: Option<u64>) -> Result<DominoDiagram, Failure> {
    let d = if let Some(name) = source.strip_prefix("builtin:") {
        builtin_diagram(name).ok_or_else(|| Failure::invalid(format!("unknown builtin diagram {name:?}")))?
    } else {
        DominoDiagram::from_json(&read(source.as_ref())?)?
    };
    let report = d.validate();
    if !report.is_valid() {
        return Err(DominoError::Invalid(report).into());
    }
    Ok(match seed {
        Some(s) => d.with_random_phases(s),
        None => d,
    })
}

fn emit(path: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Failure::invalid(format!("{}: {e}", p.display()))),
        None => writeln!(out, "{text}").map_err(Failure::invalid),
    }
}

fn print(out: &mut dyn Write, format: Format, report: &Value, text: &str) -> Result<(), Failure> {
    let s = match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize"),
        Format::Text => text.trim_end().to_owned(),
    };
    writeln!(out, "{s}").map_err(Failure::invalid)
}

fn edge_list(g: &SimpleGraph) -> String {
    g.edges().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn cc_or_null(g: &SimpleGraph) -> Value {
    clique_cover_number(g).map_or(Value::Null, |c| json!(c))
}

fn cmd_graphs(set: &ProductStateSet, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = set.confusability_graphs().map_err(Failure::invalid)?;
    let equality = g.g_a == g.g_b.complement();
    let (ca, cb) = (g.g_a.complement(), g.g_b.complement());
    let report = json!({
        "labels": set.labels(),
        "g_a": g.g_a,
        "g_b": g.g_b,
        "complement_equality": equality,
        "cc_g_a": cc_or_null(&g.g_a),
        "cc_g_b": cc_or_null(&g.g_b),
        "cc_complement_g_a": cc_or_null(&ca),
        "cc_complement_g_b": cc_or_null(&cb),
    });
    let show = |v: &Value| v.as_u64().map_or("over limit".to_owned(), |c| c.to_string());
    let text = format!(
        "states: {}\nG_A edges: {}\nG_B edges: {}\nG_A = complement(G_B): {}\ncc(G_A) = {}\ncc(G_B) = {}\ncc(complement G_A) = {}\ncc(complement G_B) = {}\n",
        set.labels().join(" "),
        edge_list(&g.g_a),
        edge_list(&g.g_b),
        equality,
        show(&report["cc_g_a"]),
        show(&report["cc_g_b"]),
        show(&report["cc_complement_g_a"]),
        show(&report["cc_complement_g_b"]),
    );
    print(out, format, &report, &text)?;
    Ok(EXIT_OK)
}

fn cmd_decide(set: &ProductStateSet, args: &DecideArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let budget = Budget::new(args.budget_graphs, args.budget_covers, args.budget_orderings)?;
    let verdict = decide_one_way(set, args.first, budget)?;
    let (code, artifact, report, text) = match &verdict {
        Verdict::Yes(s) => {
            let witness: Value = serde_json::from_str(&s.witness.to_json()).expect("witness json");
            let method = match &s.path {
                SynthesisPath::Chordal => "chordal".to_owned(),
                SynthesisPath::Greedy { .. } => "greedy".to_owned(),
            };
            let supports: Vec<Vec<String>> = s.witness.outcomes.iter().map(|o| o.survivors.clone()).collect();
            let text = format!(
                "verdict: yes ({} first)\nmethod: {method}\nintermediate graph edges: {}\noutcome supports: {}\n",
                args.first,
                edge_list(&s.graph),
                supports.iter().map(|x| format!("{{{}}}", x.join(","))).collect::<Vec<_>>().join(" "),
            );
            let report = json!({"verdict": "yes", "first_party": args.first, "method": method, "graph": s.graph, "witness": witness});
            (EXIT_OK, s.witness.to_json(), report, text)
        }
        Verdict::No(c) => {
            let text = format!(
                "verdict: no ({} first)\ncertificate: clique cover number {} exceeds dimension {}\ngraph edges: {}\n",
                args.first,
                c.cc,
                c.dim,
                edge_list(&c.graph)
            );
            let report = json!({"verdict": "no", "first_party": args.first, "certificate": c});
            (EXIT_NO, c.to_json(), report, text)
        }
        Verdict::Unknown(st) => {
            let text = format!(
                "verdict: unknown ({} first)\ngraphs tried: {}, covers: {}, orderings: {}, budget exhausted: {}\n",
                args.first, st.graphs_tried, st.covers_tried, st.orderings_tried, st.budget_exhausted
            );
            let report = json!({"verdict": "unknown", "first_party": args.first, "stats": st});
            (EXIT_UNKNOWN, serde_json::to_string_pretty(st).expect("stats json"), report, text)
        }
    };
    match &args.output {
        Some(path) => {
            emit(Some(path), &artifact, out)?;
            print(out, format, &report, &text)?;
        }
        None => print(out, format, &report, &text)?,
    }
    Ok(code)
}

fn cmd_verify(
    set: &ProductStateSet,
    witness: &MeasurementWitness,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let r = verify_report(set, witness)?;
    let ok = r.is_valid();
    let report = json!({"valid": ok, "report": r});
    let text = format!(
        "valid: {ok}\ncompleteness residual: {:.3e}\nsurvivor mismatches: {:?}\nconfusable pairs: {:?}\n",
        r.completeness_residual, r.survivor_mismatches, r.confusable_pairs
    );
    print(out, format, &report, &text)?;
    Ok(if ok { EXIT_OK } else { EXIT_NO })
}

fn cmd_domino_analyze(d: &DominoDiagram, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let consistency = d.consistency()?;
    let bounds = d.bounds()?;
    let verdict = match d.verdict() {
        Ok(v) => Some(v),
        Err(DominoError::HypothesisNotMet) => None,
        Err(e) => return Err(e.into()),
    };
    let report = json!({
        "m": d.m,
        "n": d.n,
        "valid": true,
        "bounds": bounds,
        "complement_condition": bounds.complement_condition,
        "verdict": verdict,
        "consistency": consistency,
    });
    let dir = |v: crate::domino::DirectionVerdict| match v {
        crate::domino::DirectionVerdict::NotDistinguishable { domino } => {
            format!("not distinguishable (domino {domino})")
        }
        crate::domino::DirectionVerdict::NoConclusion => "no conclusion".to_owned(),
    };
    let verdict_text = match verdict {
        Some(v) => format!("alice first: {}\nbob first: {}", dir(v.alice_first), dir(v.bob_first)),
        None => "verdict: not applicable (some dominoes share neither a row nor a column)".to_owned(),
    };
    let text = format!(
        "diagram: {}x{}, {} dominoes, valid\nh = {}, v = {}\nlower bound row side: {} (Bob dimension {})\nlower bound column side: {} (Alice dimension {})\ncomplement condition: {}\n{verdict_text}\ngraph consistency: {}\n",
        d.m,
        d.n,
        d.dominoes.len(),
        bounds.h,
        bounds.v,
        bounds.lower_row,
        d.n,
        bounds.lower_col,
        d.m,
        bounds.complement_condition,
        if consistency.is_consistent() { "ok" } else { "MISMATCH" },
    );
    print(out, format, &report, &text)?;
    if consistency.is_consistent() {
        Ok(EXIT_OK)
    } else {
        Err(DominoError::PhaseDegeneracy(consistency).into())
    }
}
