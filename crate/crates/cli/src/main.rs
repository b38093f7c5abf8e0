//! `hermtool`: spectra, inertia, eigenvalue relations and theorem fuzzing
//! for Hermitian matrices and graph operators.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use inertia_core::format::{parse_graph, parse_hmat, parse_roots, write_hmat};
use inertia_core::graphs::{build_operator, laplacian_difference, weight_reduction_difference, GraphSpec, Level, OperatorKind};
use inertia_core::inertia::{inertia_exact, inertia_float_detail, pencil_inertia};
use inertia_core::interlace::{matrix_relation, relation_counting, relation_spectral, MatrixMethod};
use inertia_core::scalar::parse_rational;
use inertia_core::theorem::{default_size_bound, fuzz_with, Claim, FuzzConfig, TheoremId, Verifier};
use inertia_core::{Error, HermitianMatrix, Method, RealRootedPoly, Real, Relation, RelationReport, Tolerance};
use serde_json::{json, Value};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;

#[derive(Parser)]
#[command(name = "hermtool", version, about = "Eigenvalue inequalities for Hermitian matrices via inertia counts")]
struct Cli {
    /// Absolute zero tolerance for floating decisions (default: relative 1e-9).
    #[arg(long, global = true, value_name = "TAU")]
    tol: Option<f64>,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eigenvalues of a matrix or graph operator, descending.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_name = "KIND")]
        operator: Option<OperatorKind>,
    },
    /// Inertia of A - R*I, or of L - R*D with --pencil-degree.
    Inertia {
        file: PathBuf,
        #[arg(long, value_name = "KIND")]
        operator: Option<OperatorKind>,
        #[arg(long, value_name = "R", default_value = "0", allow_hyphen_values = true)]
        shift: String,
        /// Exact congruence inertia (q-field matrix and rational shift).
        #[arg(long)]
        exact: bool,
        /// Use the degree pencil L - R*D of a graph Laplacian.
        #[arg(long)]
        pencil_degree: bool,
    },
    /// Decide a shift dominance, interlacing or compatibility relation.
    Check(CheckArgs),
    /// Write the operator matrix of a graph as `.hmat`.
    Build {
        graph: PathBuf,
        #[arg(long, value_name = "KIND")]
        operator: OperatorKind,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Delete one record and compare operators before and after.
    DeleteEdge {
        graph: PathBuf,
        #[arg(long, value_name = "K")]
        record: usize,
        #[arg(long, value_name = "KIND", default_value = "laplacian")]
        operator: OperatorKind,
        /// Lower the record's weight by W instead of deleting it.
        #[arg(long, value_name = "W")]
        reduce_by: Option<String>,
    },
    /// Fuzz a theorem verifier on seeded random inputs.
    Verify {
        theorem: TheoremId,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest matrix dimension or graph order (default 8, graphs 12).
        #[arg(long)]
        size: Option<usize>,
        /// Check the hard-coded false variant instead of the theorem.
        #[arg(long)]
        mutated: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Interlace,
    Compatible,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Spectral,
    Inertia,
    Both,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("kind").required(true).args(["m", "relation"]))]
struct CheckArgs {
    /// Check l_(i+M)(B) <= l_i(A) for all i.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Check A interlaces B, or A compatible with B.
    #[arg(long)]
    relation: Option<RelationArg>,
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
    /// Decide with exact inertia at these comma-separated rational shifts.
    #[arg(long, value_name = "R1,R2,...", allow_hyphen_values = true)]
    exact_shifts: Option<String>,
    /// Operator used for `.graph` inputs.
    #[arg(long, value_name = "KIND", default_value = "laplacian")]
    operator: OperatorKind,
    a: PathBuf,
    /// Omit when A is a `.roots` file with two lists.
    b: Option<PathBuf>,
}

/// A failure that ends the run with a diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }

    fn in_file(file: &Path, e: Error) -> Self {
        let code = match e {
            Error::MethodDisagreement { .. } => EXIT_INDETERMINATE,
            _ => EXIT_INPUT,
        };
        let message = match e {
            Error::Parse { line, token, message } => {
                format!("{}:{line}: bad token `{token}`: {message}", file.display())
            }
            other => format!("{}: {other}", file.display()),
        };
        Failure { code, message }
    }
}

type Outcome = Result<u8, Failure>;

/// Fixed-point text with 12 decimals, trailing zeros removed, no `-0`.
fn number(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn rounded(values: &[f64]) -> Vec<f64> {
    values.iter().map(|x| number(*x).parse().expect("formatted number")).collect()
}

fn joined(values: &[f64]) -> String {
    values.iter().map(|x| number(*x)).collect::<Vec<_>>().join(" ")
}

fn tolerance(cli: &Cli) -> Tolerance {
    cli.tol.map(Tolerance::Absolute).unwrap_or_default()
}

fn header(tol: Tolerance) -> String {
    format!("# tolerance: {tol}")
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn extension(path: &Path) -> &str {
    path.extension().and_then(|e| e.to_str()).unwrap_or("")
}

fn load_graph(path: &Path) -> Result<GraphSpec, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::in_file(path, e))
}

/// A `.hmat` file, or the operator of a `.graph` file.
fn load_matrix(path: &Path, operator: Option<OperatorKind>) -> Result<HermitianMatrix, Failure> {
    match extension(path) {
        "graph" => {
            let g = load_graph(path)?;
            build_operator(&g, operator.unwrap_or(OperatorKind::Laplacian)).map_err(|e| Failure::in_file(path, e))
        }
        _ => {
            if operator.is_some() {
                return Err(Failure::input(format!("{}: --operator applies to .graph inputs", path.display())));
            }
            parse_hmat(&read(path)?).map_err(|e| Failure::in_file(path, e))
        }
    }
}

fn verdict_code(report: &RelationReport) -> u8 {
    if report.indeterminate {
        EXIT_INDETERMINATE
    } else if report.holds {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(value).expect("report serializes"));
}

fn spectrum(cli: &Cli, file: &Path, operator: Option<OperatorKind>) -> Outcome {
    let a = load_matrix(file, operator)?;
    let values = a.eigenvalues().map_err(|e| Failure::in_file(file, e))?;
    if cli.json {
        let operator = operator.or((extension(file) == "graph").then_some(OperatorKind::Laplacian));
        print_json(&json!({
            "file": file.display().to_string(),
            "operator": operator.map(|k| k.name()),
            "field": a.field().to_string(),
            "n": a.n(),
            "eigenvalues": rounded(values.values()),
        }));
    } else {
        println!("{}", joined(values.values()));
    }
    Ok(EXIT_OK)
}

fn inertia(cli: &Cli, file: &Path, operator: Option<OperatorKind>, shift: &str, exact: bool, pencil_degree: bool) -> Outcome {
    let tol = tolerance(cli);
    if pencil_degree && extension(file) != "graph" {
        return Err(Failure::input("--pencil-degree needs a .graph input"));
    }
    let kind = operator.unwrap_or(OperatorKind::Laplacian);
    if pencil_degree && kind.level() != Level::Laplacian {
        return Err(Failure::input(format!("--pencil-degree needs a Laplacian operator, not {kind}")));
    }
    let a = load_matrix(file, operator)?;
    let bad_shift = || Failure::input(format!("--shift: `{shift}` is not a rational or decimal number"));
    let r = parse_rational(shift).ok_or_else(bad_shift)?;
    if exact && !a.field().is_exact() {
        return Err(Failure::input(format!("{}: --exact needs a q(-1) or q(-3) matrix", file.display())));
    }
    let fail = |e| Failure::in_file(file, e);

    let (result, ambiguous) = if pencil_degree {
        let d = match a.exact_entries() {
            Some((field, entries)) => {
                let n = a.n();
                let diagonal: Vec<_> = (0..n).map(|i| entries[i * n + i].re().clone()).collect();
                HermitianMatrix::from_rational_diagonal(&diagonal, field)
            }
            None => HermitianMatrix::from_real_diagonal(&a.diagonal_f64()),
        };
        if exact {
            (pencil_inertia(&a, &d, &Real::Exact(r.clone()), Method::Exact).map_err(fail)?, false)
        } else {
            let shifted = a.embed_float().pencil_shift(&d.embed_float(), &Real::Exact(r.clone())).map_err(fail)?;
            let detail = inertia_float_detail(&shifted, tol).map_err(fail)?;
            (detail.inertia, detail.ambiguous)
        }
    } else if exact {
        let shifted = a.shift(&Real::Exact(r.clone())).map_err(fail)?;
        (inertia_exact(&shifted).map_err(fail)?, false)
    } else {
        let shifted = a.embed_float().shift(&Real::Exact(r.clone())).map_err(fail)?;
        let detail = inertia_float_detail(&shifted, tol).map_err(fail)?;
        (detail.inertia, detail.ambiguous)
    };

    let target = if pencil_degree { format!("L - {r} D") } else { format!("A - {r} I") };
    if cli.json {
        print_json(&json!({
            "tolerance": tol.to_string(),
            "matrix": target,
            "method": if exact { "exact" } else { "float" },
            "inertia": result,
            "ambiguous": ambiguous,
        }));
    } else {
        println!("{}", header(tol));
        println!("inertia of {target}: {result}");
        if ambiguous {
            println!("ambiguous: an eigenvalue lies within 10 tau of zero");
        }
    }
    Ok(if ambiguous { EXIT_INDETERMINATE } else { EXIT_OK })
}

fn load_roots(path: &Path) -> Result<Vec<RealRootedPoly>, Failure> {
    parse_roots(&read(path)?).map_err(|e| Failure::in_file(path, e))
}

/// Root lists for `check`: matrices contribute their spectra.
fn roots_operands(args: &CheckArgs) -> Result<(RealRootedPoly, RealRootedPoly), Failure> {
    let single = |path: &Path| -> Result<RealRootedPoly, Failure> {
        if extension(path) == "roots" {
            let mut lists = load_roots(path)?;
            if lists.len() != 1 {
                return Err(Failure::input(format!("{}: expected one root list, found {}", path.display(), lists.len())));
            }
            Ok(lists.remove(0))
        } else {
            let a = load_matrix(path, graph_operator(path, args.operator))?;
            Ok(a.eigenvalues().map_err(|e| Failure::in_file(path, e))?.into())
        }
    };
    match &args.b {
        Some(b) => Ok((single(&args.a)?, single(b)?)),
        None => {
            let mut lists = load_roots(&args.a)?;
            if lists.len() != 2 {
                return Err(Failure::input(format!(
                    "{}: expected two root lists when B is omitted, found {}",
                    args.a.display(),
                    lists.len()
                )));
            }
            let g = lists.pop().expect("two lists");
            Ok((lists.pop().expect("two lists"), g))
        }
    }
}

fn graph_operator(path: &Path, operator: OperatorKind) -> Option<OperatorKind> {
    (extension(path) == "graph").then_some(operator)
}

fn check(cli: &Cli, args: &CheckArgs) -> Outcome {
    let tol = tolerance(cli);
    let relation = match (args.m, args.relation) {
        (Some(m), _) => Relation::ShiftDominates(m),
        (None, Some(RelationArg::Interlace)) => Relation::Interlaces,
        (None, Some(RelationArg::Compatible)) => Relation::Compatible,
        (None, None) => unreachable!("clap requires --m or --relation"),
    };
    let uses_roots = extension(&args.a) == "roots" || args.b.as_deref().is_some_and(|b| extension(b) == "roots");

    let report = if uses_roots {
        if args.exact_shifts.is_some() {
            return Err(Failure::input("--exact-shifts needs matrix inputs"));
        }
        let (f, g) = roots_operands(args)?;
        let spectral = relation_spectral(&f, &g, relation);
        let counting = relation_counting(&f, &g, relation);
        match args.method {
            MethodArg::Spectral => spectral,
            MethodArg::Inertia => counting,
            MethodArg::Both if spectral.holds == counting.holds => spectral,
            MethodArg::Both => {
                return Err(Failure::in_file(
                    &args.a,
                    Error::MethodDisagreement { spectral: Box::new(spectral), inertia: Box::new(counting) },
                ))
            }
        }
    } else {
        let Some(b_path) = &args.b else {
            return Err(Failure::input("check needs two matrix files, or one .roots file with two lists"));
        };
        let a = load_matrix(&args.a, graph_operator(&args.a, args.operator))?;
        let b = load_matrix(b_path, graph_operator(b_path, args.operator))?;
        let method = match &args.exact_shifts {
            Some(list) => MatrixMethod::ExactInertia(
                list.split(',')
                    .map(|t| {
                        parse_rational(t.trim())
                            .ok_or_else(|| Failure::input(format!("--exact-shifts: `{t}` is not a rational number")))
                    })
                    .collect::<Result<_, _>>()?,
            ),
            None => match args.method {
                MethodArg::Spectral => MatrixMethod::Spectral,
                MethodArg::Inertia => MatrixMethod::Inertia,
                MethodArg::Both => MatrixMethod::Both,
            },
        };
        matrix_relation(&a, &b, relation, &method, tol).map_err(|e| Failure::in_file(&args.a, e))?
    };

    if !cli.json {
        println!("{}", header(tol));
    }
    print_json(&report);
    Ok(verdict_code(&report))
}

fn build(cli: &Cli, graph: &Path, operator: OperatorKind, output: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let a = build_operator(&g, operator).map_err(|e| Failure::in_file(graph, e))?;
    let text = if cli.json { serde_json::to_string(&a).expect("matrix serializes") + "\n" } else { write_hmat(&a) };
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn delete_edge(cli: &Cli, graph: &Path, record: usize, operator: OperatorKind, reduce_by: Option<&str>) -> Outcome {
    let tol = tolerance(cli);
    if operator.level() != Level::Laplacian {
        return Err(Failure::input(format!("delete-edge needs a Laplacian operator, not {operator}")));
    }
    let g = load_graph(graph)?;
    let fail = |e| Failure::in_file(graph, e);
    if record >= g.records().len() {
        return Err(Failure::input(format!(
            "{}: record {record} out of range ({} records)",
            graph.display(),
            g.records().len()
        )));
    }
    let (after, difference) = match reduce_by {
        Some(w) => {
            let by = parse_rational(w).ok_or_else(|| Failure::input(format!("--reduce-by: `{w}` is not a rational number")))?;
            (g.reduce_weight(record, &by).map_err(fail)?, weight_reduction_difference(&g, record, &by, operator).map_err(fail)?)
        }
        None => (g.delete_record(record).map_err(fail)?, laplacian_difference(&g, record, operator).map_err(fail)?),
    };
    let normalized = OperatorKind::from_parts(operator.family(), Level::Normalized);
    let matrices = [(&g, operator), (&after, operator), (&g, normalized), (&after, normalized)]
        .into_iter()
        .map(|(graph, kind)| build_operator(graph, kind))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    let spectra = matrices
        .iter()
        .map(|m| m.eigenvalues().map(|s| s.into_values()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    let laplacians = matrix_relation(&matrices[1], &matrices[0], Relation::Interlaces, &MatrixMethod::Both, tol).map_err(fail)?;
    let normalizers =
        matrix_relation(&matrices[3], &matrices[2], Relation::Compatible, &MatrixMethod::Both, tol).map_err(fail)?;
    let combined = laplacians.clone().and(normalizers.clone());

    if cli.json {
        print_json(&json!({
            "tolerance": tol.to_string(),
            "operator": operator.name(),
            "normalized": normalized.name(),
            "record": g.records()[record],
            "difference": difference,
            "before": { "operator": rounded(&spectra[0]), "normalized": rounded(&spectra[2]) },
            "after": { "operator": rounded(&spectra[1]), "normalized": rounded(&spectra[3]) },
            "operator_interlaces": laplacians,
            "normalized_compatible": normalizers,
        }));
    } else {
        println!("{}", header(tol));
        let r = &g.records()[record];
        println!("record {record}: {} {} {} weight {}", r.kind, r.u, r.v, r.weight);
        println!("difference: w = {}, c = {} on ({}, {})", difference.w, difference.c, difference.u, difference.v);
        println!("{operator} before: {}", joined(&spectra[0]));
        println!("{operator} after:  {}", joined(&spectra[1]));
        println!("{normalized} before: {}", joined(&spectra[2]));
        println!("{normalized} after:  {}", joined(&spectra[3]));
        println!("after interlaces before ({operator}): {}", describe(&laplacians));
        println!("after compatible with before ({normalized}): {}", describe(&normalizers));
    }
    Ok(verdict_code(&combined))
}

fn describe(report: &RelationReport) -> String {
    let verdict = if report.holds { "holds" } else { "fails" };
    let mut s = verdict.to_string();
    if report.indeterminate {
        s.push_str(" (indeterminate)");
    }
    if let Some(w) = &report.witness {
        s.push_str(&format!(" {}", serde_json::to_string(w).expect("witness serializes")));
    }
    s
}

fn verify(cli: &Cli, theorem: TheoremId, trials: u64, seed: u64, size: Option<usize>, mutated: bool) -> Outcome {
    if trials == 0 {
        return Err(Failure::input("--trials must be at least 1"));
    }
    let tol = tolerance(cli);
    let config = FuzzConfig {
        claim: if mutated { Claim::Mutated } else { Claim::Stated },
        verifier: Verifier { tolerance: tol, ..Verifier::default() },
        ..FuzzConfig::new(trials, seed, size.unwrap_or_else(|| default_size_bound(theorem)))
    };
    let report = fuzz_with(theorem, &config);
    if cli.json {
        print_json(&report);
    } else {
        println!("{}", header(tol));
        let claim = if mutated { "mutated" } else { "stated" };
        println!("theorem: {theorem} ({claim}): {}", report.statement);
        println!("seed {} size {} trials {}", report.rng_seed, report.size_bound, report.trials);
        println!(
            "passed {}, indeterminate {}, failed {}",
            report.passed,
            report.indeterminate,
            report.failures.len()
        );
        if let Some(first) = report.failures.first() {
            let detail: Value = serde_json::to_value(first).expect("failure serializes");
            println!("first failure: {detail}");
        }
    }
    Ok(if !report.failures.is_empty() {
        EXIT_VIOLATION
    } else if report.indeterminate > 0 {
        EXIT_INDETERMINATE
    } else {
        EXIT_OK
    })
}

fn run(cli: &Cli) -> Outcome {
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(Failure::input(format!("--tol: {t} is not a positive number")));
        }
    }
    match &cli.command {
        Command::Spectrum { file, operator } => spectrum(cli, file, *operator),
        Command::Inertia { file, operator, shift, exact, pencil_degree } => {
            inertia(cli, file, *operator, shift, *exact, *pencil_degree)
        }
        Command::Check(args) => check(cli, args),
        Command::Build { graph, operator, output } => build(cli, graph, *operator, output.as_deref()),
        Command::DeleteEdge { graph, record, operator, reduce_by } => {
            delete_edge(cli, graph, *record, *operator, reduce_by.as_deref())
        }
        Command::Verify { theorem, trials, seed, size, mutated } => verify(cli, *theorem, *trials, *seed, *size, *mutated),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("hermtool: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_are_trimmed() {
        assert_eq!(number(2.0), "2");
        assert_eq!(number(-1e-17), "0");
        assert_eq!(number(0.5), "0.5");
        assert_eq!(number(1.0 / 3.0), "0.333333333333");
        assert_eq!(number(-2.25), "-2.25");
    }
}
