use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use awpa::awpa::Awpa;
use awpa::cyclotomic::{Cyclo, CycloParams};
use awpa::error::Error;
use awpa::frobenius::{AlgElem, FrobAlg};
use awpa::io::{load_spec_file, resolve_algebra, AlgebraSpec};
use awpa::structure::{center, from_wreath, graded_dimension, jucys_murphy};
use awpa::suite::{frobenius_checks, run_suite, CheckResult};

#[derive(Parser)]
#[command(name = "awpa", version, about = "Exact arithmetic in affine wreath product algebras")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Built-in name (trivial, clifford, dual_numbers, cyclic_group:M, taft:Q, s3, ...) or spec file.
    #[arg(long, short = 'a')]
    algebra: String,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    #[arg(long, short = 'n')]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect algebra specs.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Normal-form product of two elements.
    Mul {
        #[command(flatten)]
        rank: RankArgs,
        a: String,
        b: String,
    },
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        rank: RankArgs,
        expr: String,
    },
    /// Monomial counts by degree.
    Grdim {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long)]
        cutoff: u32,
    },
    /// Left dual basis of F under its trace.
    DualBasis {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// The Nakayama automorphism of F on its basis.
    Nakayama {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Basis of the center up to a polynomial degree.
    Center {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long)]
        degree: u32,
    },
    /// The Jucys-Murphy element J_k.
    Jm {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long)]
        k: usize,
    },
    /// Seeded randomized property suite.
    Suite {
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances per relation.
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
    /// Cyclotomic quotients; parameters come from the `cyclotomic` section of a spec file.
    Cyclotomic {
        action: CycloAction,
        #[arg(long)]
        params: PathBuf,
        #[arg(long, short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random pairs for the Nakayama identity.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
    },
}

#[derive(Subcommand)]
enum AlgebraAction {
    /// Build the algebra and check its Frobenius invariants.
    Verify { spec: String },
    /// Print the spec file of an algebra.
    Export { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum CycloAction {
    Gram,
    Nakayama,
    Basis,
}

/// Exit status 1 carries a failed check, 2 a usage or input error.
enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
        if self.json {
            put(&serde_json::to_string_pretty(&value()).expect("json serializes"));
        } else {
            put(&text());
        }
    }
}

/// Writes a line to stdout; a closed pipe (e.g. `| head`) ends the process quietly.
fn put(line: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{}", line).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {}", e);
    }
}

fn load(name: &str) -> Result<(Arc<FrobAlg>, Option<Arc<CycloParams>>), Failure> {
    let (loaded, warning) = resolve_algebra(name)?;
    if let Some(w) = warning {
        eprintln!("warning: {}", w);
    }
    Ok((loaded.algebra, loaded.params))
}

fn awpa_for(rank: &RankArgs) -> Result<Awpa, Failure> {
    let (f, _) = load(&rank.algebra.algebra)?;
    Ok(Awpa::new(f, rank.n))
}

fn checks_json(results: &[CheckResult]) -> Value {
    Value::Array(
        results
            .iter()
            .map(|r| json!({"name": r.name, "instances": r.instances, "passed": r.passed(), "counterexample": r.counterexample}))
            .collect(),
    )
}

fn first_failure(results: &[CheckResult]) -> Outcome {
    match results.iter().find(|r| !r.passed()) {
        Some(r) => Err(Failure::Check(r.line())),
        None => Ok(()),
    }
}

fn elem_text(f: &FrobAlg, e: &AlgElem) -> String {
    f.format_elem(e)
}

fn run(cli: Cli) -> Outcome {
    let out = Out { json: cli.json };
    match cli.command {
        Command::Algebra { action: AlgebraAction::Verify { spec } } => {
            let (f, params) = load(&spec)?;
            let results = frobenius_checks(&f);
            out.emit(
                || {
                    let mut lines = vec![format!(
                        "{}: dim {}, conductor {}, theta {}, delta {}",
                        f.name,
                        f.dim(),
                        f.conductor(),
                        f.theta(),
                        f.delta()
                    )];
                    if let Some(p) = &params {
                        lines.push(format!("cyclotomic parameters of level {}", p.level()));
                    }
                    lines.extend(results.iter().map(|r| r.line()));
                    lines.join("\n")
                },
                || {
                    json!({
                        "algebra": f.name, "dim": f.dim(), "conductor": f.conductor(),
                        "theta": f.theta(), "delta": f.delta(),
                        "level": params.as_ref().map(|p| p.level()),
                        "checks": checks_json(&results),
                    })
                },
            );
            first_failure(&results)
        }
        Command::Algebra { action: AlgebraAction::Export { spec } } => {
            let (f, params) = load(&spec)?;
            let s = AlgebraSpec::from_algebra(&f, params.as_deref())?;
            put(&s.to_json());
            Ok(())
        }
        Command::Mul { rank, a, b } => {
            let alg = awpa_for(&rank)?;
            let p = alg.mul(&alg.parse(&a)?, &alg.parse(&b)?)?;
            let text = alg.format(&p);
            out.emit(|| text.clone(), || json!({"result": text}));
            Ok(())
        }
        Command::Nf { rank, expr } => {
            let alg = awpa_for(&rank)?;
            let text = alg.format(&alg.parse(&expr)?);
            out.emit(|| text.clone(), || json!({"result": text}));
            Ok(())
        }
        Command::Grdim { rank, cutoff } => {
            let alg = awpa_for(&rank)?;
            let g = graded_dimension(&alg, cutoff);
            let var = if g.by_polynomial_layer { "polynomial degree" } else { "degree" };
            out.emit(
                || g.coeffs.iter().enumerate().map(|(k, c)| format!("{} {}: {}", var, k, c)).collect::<Vec<_>>().join("\n"),
                || json!({"by_polynomial_layer": g.by_polynomial_layer, "coeffs": g.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>()}),
            );
            Ok(())
        }
        Command::DualBasis { algebra } => {
            let (f, _) = load(&algebra.algebra)?;
            let duals = f.dual_basis();
            let rows: Vec<(String, String)> =
                duals.iter().enumerate().map(|(i, d)| (f.label(i).to_string(), elem_text(&f, d))).collect();
            out.emit(
                || rows.iter().map(|(b, d)| format!("{}^v = {}", b, d)).collect::<Vec<_>>().join("\n"),
                || Value::Array(rows.iter().map(|(b, d)| json!({"basis": b, "dual": d})).collect()),
            );
            Ok(())
        }
        Command::Nakayama { algebra } => {
            let (f, _) = load(&algebra.algebra)?;
            let d = f.dim();
            let rows: Vec<(String, String)> =
                (0..d).map(|i| (f.label(i).to_string(), elem_text(&f, &f.psi_pow(1, &AlgElem::basis(d, i))))).collect();
            out.emit(
                || {
                    let mut lines = vec![format!("order {}", f.theta())];
                    lines.extend(rows.iter().map(|(b, p)| format!("psi({}) = {}", b, p)));
                    lines.join("\n")
                },
                || json!({"order": f.theta(), "images": rows.iter().map(|(b, p)| json!({"basis": b, "image": p})).collect::<Vec<_>>()}),
            );
            Ok(())
        }
        Command::Center { rank, degree } => {
            let alg = awpa_for(&rank)?;
            let z: Vec<String> = center(&alg, degree)?.iter().map(|e| alg.format(e)).collect();
            out.emit(|| z.join("\n"), || json!({"dimension": z.len(), "basis": z}));
            Ok(())
        }
        Command::Jm { rank, k } => {
            let alg = awpa_for(&rank)?;
            let text = alg.format(&from_wreath(&alg, &jucys_murphy(&alg, k)?)?);
            out.emit(|| text.clone(), || json!({"result": text}));
            Ok(())
        }
        Command::Suite { rank, seed, instances } => {
            let alg = awpa_for(&rank)?;
            let mut results = frobenius_checks(alg.algebra());
            let report = run_suite(&alg, seed, instances)?;
            results.extend(report.results);
            out.emit(
                || {
                    let mut lines = vec![format!("suite {} n={} seed={}", report.algebra, report.n, seed)];
                    lines.extend(results.iter().map(|r| r.line()));
                    lines.join("\n")
                },
                || json!({"algebra": report.algebra, "n": report.n, "seed": seed, "checks": checks_json(&results)}),
            );
            first_failure(&results)
        }
        Command::Cyclotomic { action, params, n, seed, pairs } => {
            let loaded = load_spec_file(&params)?;
            let p = loaded.params.ok_or_else(|| Failure::Input(format!("{} has no cyclotomic section", params.display())))?;
            let c = Cyclo::new(p, n)?;
            cyclotomic(&out, &c, action, seed, pairs)
        }
    }
}

fn cyclotomic(out: &Out, c: &Cyclo, action: CycloAction, seed: u64, pairs: usize) -> Outcome {
    match action {
        CycloAction::Basis => {
            let b: Vec<String> = (0..c.dim()).map(|i| c.format(&c.basis_elem(i))).collect();
            out.emit(|| b.join("\n"), || json!({"level": c.level(), "dimension": b.len(), "basis": b}));
            Ok(())
        }
        CycloAction::Gram => {
            let g = c.gram_matrix()?;
            let m = c.params().algebra().conductor();
            let rows: Vec<Vec<String>> = g.matrix.iter().map(|r| r.iter().map(|x| x.format_in(m)).collect()).collect();
            out.emit(
                || format!("dimension {}, rank {}, invertible {}", rows.len(), g.rank, g.invertible),
                || json!({"dimension": rows.len(), "rank": g.rank, "invertible": g.invertible, "matrix": rows}),
            );
            if g.invertible {
                Ok(())
            } else {
                Err(Failure::Check(format!("Gram matrix has rank {} < {}", g.rank, rows.len())))
            }
        }
        CycloAction::Nakayama => {
            let r = match c.nakayama_check_seeded(seed, pairs) {
                Err(Error::DegenerateGram) => return Err(Failure::Check("Gram matrix is degenerate".into())),
                other => other?,
            };
            out.emit(
                || {
                    let mut lines = vec![
                        format!("seed {}, {} pairs checked, identity holds: {}", seed, r.pairs_checked, r.holds),
                        format!("symmetric: {}, theta divides level: {}", r.symmetric, r.theta_divides_level),
                    ];
                    if let Some(g) = r.generators_match {
                        lines.push(format!("Gram-derived map matches on generators: {}", g));
                    }
                    lines.join("\n")
                },
                || {
                    json!({
                        "seed": seed, "pairs_checked": r.pairs_checked, "holds": r.holds,
                        "counterexample": r.counterexample, "symmetric": r.symmetric,
                        "theta_divides_level": r.theta_divides_level, "generators_match": r.generators_match,
                        "gram_super_symmetric": r.gram_super_symmetric,
                    })
                },
            );
            match (&r.counterexample, r.generators_match) {
                (Some((a, b)), _) => Err(Failure::Check(format!("Nakayama identity fails for a = {}, b = {}", a, b))),
                (None, Some(false)) => Err(Failure::Check("Gram-derived Nakayama map differs on generators".into())),
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
