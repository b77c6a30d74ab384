//! `aqg`: load an algebra, run check suites, print derived objects.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or usage,
//! 3 a precondition failed.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use aqg::approx::{set_tolerance, Approx};
use aqg::catalog::{self, Builtin};
use aqg::dual::DualPair;
use aqg::duality::apply_bilinear;
use aqg::element::{Element, Tensor};
use aqg::format::{parse_algebra_file, parse_element, write_report};
use aqg::fourier::Fourier;
use aqg::report::Report;
use aqg::suites::{self, derive_report, is_precondition, modular_data, Subject, SUITE_NAMES};
use aqg::{Cyclotomic, Error, Scalar};

#[derive(Parser)]
#[command(name = "aqg", version, about = "Checks for algebraic quantum groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite.
    Check {
        #[command(flatten)]
        input: Input,
        /// One of axioms, integrals, identities1, dual, heisenberg, duality-v, fourier, pentagon, all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print integrals, modular data and the dual data.
    Derive {
        #[command(flatten)]
        input: Input,
    },
    /// Transform an element and check the round trips.
    Fourier {
        #[command(flatten)]
        input: Input,
        /// Element of A, e.g. `g` or `2*g - 1/2*x`.
        #[arg(long)]
        element: String,
    },
}

#[derive(Args)]
struct Input {
    /// A built-in example, e.g. h4, group:s3, taft:3, kz.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    builtin: Option<String>,
    /// An algebra file (TOML, version v1).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Write the structured report (JSON) here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Check window -K..K for infinite examples.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..=50))]
    window: i64,
    /// Use the approximate complex backend.
    #[arg(long)]
    float: bool,
    /// Tolerance for --float.
    #[arg(long, default_value_t = 1e-9, requires = "float")]
    eps: f64,
}

enum Failure {
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        if is_precondition(&err) {
            Failure::Precondition(err.to_string())
        } else {
            Failure::Input(err.to_string())
        }
    }
}

fn load<F: Scalar>(input: &Input) -> Result<Subject<F>, Failure> {
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let parsed = parse_algebra_file(&text)?;
        let h = parsed.build::<F>()?;
        return Ok(Subject::Single(h, parsed.integral()));
    }
    let name = input.builtin.as_deref().unwrap_or_default();
    match catalog::builtin::<F>(name, input.window) {
        Ok(Builtin::Hopf(h)) => Ok(Subject::Single(h, None)),
        Ok(Builtin::Pair(p)) => Ok(Subject::Pair(*p)),
        Err(err) => Err(Failure::Precondition(format!(
            "{err}; known examples: {}",
            catalog::builtin_names().join(", ")
        ))),
    }
}

fn print_report(r: &Report) {
    for c in &r.checks {
        match (&c.witness, c.passed) {
            (_, true) => println!("PASS {} ({} cases)", c.name, c.cases),
            (Some(w), false) => println!("FAIL {}: {w}", c.name),
            (None, false) => println!("FAIL {}", c.name),
        }
    }
    for d in &r.derived {
        println!("{} = {}", d.name, d.value);
    }
}

fn finish(r: &Report, input: &Input, started: Instant) -> Result<ExitCode, Failure> {
    print_report(r);
    let failed = r.failures().count();
    println!(
        "{}: {} checks, {failed} failed, {:.2?}",
        r.suite,
        r.checks.len(),
        started.elapsed()
    );
    if let Some(path) = &input.report {
        std::fs::write(path, write_report(r))
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn finite_pair<F: Scalar>(subject: Subject<F>) -> Result<DualPair<F>, Failure> {
    let Subject::Single(h, phi) = subject else {
        return Err(Failure::Precondition(
            "this command needs a finite-dimensional algebra".into(),
        ));
    };
    h.algebra().require_dim()?;
    let axioms = h.check_axioms();
    if let Some(c) = axioms.failures().next() {
        return Err(Failure::Precondition(format!(
            "not a Hopf algebra: {} fails at {}",
            c.name,
            c.witness.as_deref().unwrap_or("?")
        )));
    }
    let md = modular_data(&h, phi.as_ref())?;
    Ok(DualPair::from_modular(&h, md)?)
}

fn fourier_demo<F: Scalar>(dp: DualPair<F>, text: &str) -> Result<Report, Failure> {
    let (a, b) = (dp.a().clone(), dp.b().clone());
    let x = parse_element(text, a.algebra().basis())?;
    let x = Element::from_terms(x.terms().map(|(k, c)| (k, F::from_cyclotomic(c))));
    let f = Fourier::new(dp);
    let fx = f.transform(&x);
    let back = f.inverse(&fx);
    let alt = f.transform_alt(&x);
    let alt_back = f.inverse_alt(&alt);
    let lhs = f.transformed_slice(&x, &x);
    let rhs = apply_bilinear(&Tensor::pure2(&fx, &fx), 2, |y, y2| Ok(f.w_inverse(y, y2)))?;

    let mut r = Report::new("fourier");
    r.note("x", a.show(&x));
    r.note("ℱ(x)", b.show(&fx));
    r.note("ℱ⁻¹(ℱ(x))", a.show(&back));
    r.note("ℱ′(x)", b.show(&alt));
    r.note("ℱ′⁻¹(ℱ′(x))", a.show(&alt_back));
    r.note("(ℱ⊗ℱ)(Δ(x)(1⊗x))", b.show_tensor(&lhs));
    r.note("W⁻¹(ℱx⊗ℱx)", b.show_tensor(&rhs));
    r.record("ℱ⁻¹ℱ(x) = x", (back != x).then(|| a.show(&back)));
    r.record("ℱ′⁻¹ℱ′(x) = x", (alt_back != x).then(|| a.show(&alt_back)));
    r.record(
        "(ℱ⊗ℱ)(Δ(x)(1⊗x)) = W⁻¹(ℱx⊗ℱx)",
        (lhs != rhs).then(|| b.show_tensor(&rhs)),
    );
    Ok(r)
}

fn execute<F: Scalar>(cli: &Cli) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    match &cli.command {
        Command::Check { input, suite } => {
            if !SUITE_NAMES.contains(&suite.as_str()) {
                return Err(Failure::Input(format!(
                    "unknown suite `{suite}`; expected one of {}",
                    SUITE_NAMES.join(", ")
                )));
            }
            let subject = load::<F>(input)?;
            let r = suites::run(&subject, suite)?;
            finish(&r, input, started)
        }
        Command::Derive { input } => {
            let dp = finite_pair(load::<F>(input)?)?;
            finish(&derive_report(&dp), input, started)
        }
        Command::Fourier { input, element } => {
            let dp = finite_pair(load::<F>(input)?)?;
            let r = fourier_demo(dp, element)?;
            finish(&r, input, started)
        }
    }
}

fn input_of(cli: &Cli) -> &Input {
    match &cli.command {
        Command::Check { input, .. }
        | Command::Derive { input }
        | Command::Fourier { input, .. } => input,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let input = input_of(&cli);
    let outcome = if input.float {
        if !(input.eps > 0.0 && input.eps.is_finite()) {
            eprintln!("error: --eps must be positive");
            return ExitCode::from(2);
        }
        set_tolerance(input.eps);
        execute::<Approx>(&cli)
    } else {
        execute::<Cyclotomic>(&cli)
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("precondition failed: {msg}");
            ExitCode::from(3)
        }
    }
}
