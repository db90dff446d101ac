//! `genocchi`: Genocchi tables, ball generation, f-vectors and identity checks.
//!
//! Exit codes: 0 all identities hold, 1 a nonzero residual or cross-check
//! mismatch, 2 usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use genocchi_core::arith::format_rational;
use genocchi_core::corpus::{build_corpus, table_for, verify_corpus, CorpusBall, CorpusGrid};
use genocchi_core::format::{parse_complex, FacetFile};
use genocchi_core::generators::{
    barycentric_subdivision, boundary_sphere, cone_over_boundary, simplex_ball, sphere_minus_facet,
    stacked_ball, SphereFamily,
};
use genocchi_core::number_theory::{genocchi, GenocchiMethod, GenocchiTable};
use genocchi_core::simplicial::{
    ball_check, boundary_complex, f_vector, interior_f_vector, Complex,
};
use genocchi_core::verifier::{verify_ball, VerificationReport, VerifyError};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "genocchi",
    version,
    about = "Genocchi numbers and f-vectors of simplicial balls"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print G_2..G_{2N}.
    Genocchi {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=2000))]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Write a ball as a JSON facet file.
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// Vertices per facet (simplex, stacked) or sphere parameter (cone, sphere-minus-facet).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of facets for stacked balls.
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Sphere family for cone and sphere-minus-facet.
        #[arg(long, value_enum, default_value_t = Base::Simplex)]
        base: Base,
        /// Ball to subdivide (barycentric); defaults to the simplex on `--n` vertices.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print f(B), f(∂B) and f(int B).
    Fvector { input: PathBuf },
    /// Check the identities on a facet file or the built-in corpus.
    Verify {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        input: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        /// Corpus grid file replacing the built-in grid.
        #[arg(long, requires = "corpus")]
        config: Option<PathBuf>,
        /// Skip corpus balls with more vertices per facet.
        #[arg(long, requires = "corpus")]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Series,
    RecursionEven,
    RecursionOdd,
    Bernoulli,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Simplex,
    Stacked,
    Cone,
    SphereMinusFacet,
    Barycentric,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Simplex,
    #[value(alias = "cross_polytope")]
    CrossPolytope,
}

impl From<Base> for SphereFamily {
    fn from(b: Base) -> Self {
        match b {
            Base::Simplex => SphereFamily::Simplex,
            Base::CrossPolytope => SphereFamily::CrossPolytope,
        }
    }
}

/// Input or usage problem; exits with status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Genocchi { n, method } => cmd_genocchi(n as usize, method),
        Command::Generate {
            family,
            n,
            m,
            seed,
            base,
            input,
            name,
            out,
        } => cmd_generate(
            family,
            n,
            m,
            seed,
            base,
            input.as_deref(),
            name,
            out.as_deref(),
        ),
        Command::Fvector { input } => cmd_fvector(&input),
        Command::Verify {
            input,
            corpus,
            config,
            max_n,
            json,
        } => {
            if corpus {
                cmd_verify_corpus(config.as_deref(), max_n, json)
            } else {
                cmd_verify_file(input.as_deref().expect("clap enforces input"), json)
            }
        }
    };
    result.unwrap_or_else(|InputError(msg)| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}

fn cmd_genocchi(n: usize, method: MethodArg) -> CmdResult {
    let methods: Vec<GenocchiMethod> = match method {
        MethodArg::Series => vec![GenocchiMethod::Series],
        MethodArg::RecursionEven => vec![GenocchiMethod::RecursionEven],
        MethodArg::RecursionOdd => vec![GenocchiMethod::RecursionOdd],
        MethodArg::Bernoulli => vec![GenocchiMethod::Bernoulli],
        MethodArg::All => GenocchiMethod::ALL.to_vec(),
    };
    let tables = methods
        .iter()
        .map(|&m| genocchi(n, m))
        .collect::<Result<Vec<GenocchiTable>, _>>()?;
    if tables.len() == 1 {
        for (index, g) in tables[0].iter() {
            println!("{index} {g}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let header: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    println!("2n {}", header.join(" "));
    for row in 0..n {
        let cells: Vec<String> = tables.iter().map(|t| t.even(row + 1).to_string()).collect();
        println!("{} {}", 2 * (row + 1), cells.join(" "));
    }
    if tables.windows(2).all(|w| w[0].same_values(&w[1])) {
        println!("verdict: OK");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verdict: MISMATCH");
        Ok(ExitCode::from(1))
    }
}

fn read_complex(path: &Path) -> Result<Complex, InputError> {
    let bytes = fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_complex(&bytes).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    family: Family,
    n: usize,
    m: usize,
    seed: u64,
    base: Base,
    input: Option<&Path>,
    name: Option<String>,
    out: Option<&Path>,
) -> CmdResult {
    let sphere = |n: usize| -> Result<Complex, InputError> {
        if n < 2 {
            return Err(InputError("sphere parameter --n must be at least 2".into()));
        }
        Ok(boundary_sphere(base.into(), n))
    };
    let complex = match family {
        Family::Simplex => {
            if n < 1 {
                return Err(InputError("--n must be at least 1".into()));
            }
            simplex_ball(n)
        }
        Family::Stacked => {
            if n < 2 || m < 1 {
                return Err(InputError("stacked needs --n >= 2 and --m >= 1".into()));
            }
            stacked_ball(n, m, seed)
        }
        Family::Cone => cone_over_boundary(&sphere(n)?)?,
        Family::SphereMinusFacet => sphere_minus_facet(&sphere(n)?)?,
        Family::Barycentric => {
            let source = match input {
                Some(path) => read_complex(path)?,
                None if n >= 1 => simplex_ball(n),
                None => return Err(InputError("--n must be at least 1".into())),
            };
            barycentric_subdivision(&source)
        }
    };
    let text = FacetFile::from_complex(&complex, name).to_json();
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_fvector(path: &Path) -> CmdResult {
    let complex = read_complex(path)?;
    println!("f(B) = {}", f_vector(&complex));
    let screen = ball_check(&complex);
    if !screen.passes() {
        return Err(InputError(format!("not a ball: {screen}")));
    }
    println!("f(∂B) = {}", f_vector(&boundary_complex(&complex)?));
    println!("f(int B) = {}", interior_f_vector(&complex)?);
    Ok(ExitCode::SUCCESS)
}

fn ball_json(name: &str, report: &VerificationReport) -> serde_json::Value {
    json!({
        "name": name,
        "n": report.n,
        "pass": report.pass(),
        "entries": report.records(),
    })
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify_file(path: &Path, json: bool) -> CmdResult {
    let complex = read_complex(path)?;
    let report = verify_ball(&complex, &table_for(complex.n()))?;
    if json {
        let name = path.display().to_string();
        let doc = json!({ "pass": report.pass(), "balls": [ball_json(&name, &report)] });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("{report}");
        println!("{}", if report.pass() { "PASS" } else { "FAIL" });
    }
    Ok(exit_for(report.pass()))
}

fn cmd_verify_corpus(config: Option<&Path>, max_n: Option<usize>, json: bool) -> CmdResult {
    let grid = match config {
        Some(path) => {
            let bytes =
                fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            CorpusGrid::from_json(&bytes)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?
        }
        None => CorpusGrid::default(),
    };
    let balls: Vec<CorpusBall> = build_corpus(&grid)
        .into_iter()
        .filter(|b| max_n.is_none_or(|max| b.complex.n() <= max))
        .collect();
    let results = verify_corpus(&balls);
    let reports = balls
        .iter()
        .zip(results)
        .map(|(ball, r)| {
            r.map(|rep| (ball, rep))
                .map_err(|e: VerifyError| InputError(format!("{}: {e}", ball.name)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let all_pass = reports.iter().all(|(_, r)| r.pass());
    if json {
        let doc = json!({
            "pass": all_pass,
            "balls": reports.iter().map(|(b, r)| ball_json(&b.name, r)).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        for (ball, report) in &reports {
            let worst = report
                .entries
                .iter()
                .find(|e| !e.pass())
                .map(|e| {
                    format!(
                        " {} k={} residual={}",
                        e.identity,
                        e.k,
                        format_rational(&e.residual)
                    )
                })
                .unwrap_or_default();
            println!(
                "{} {} n={} f={} checks={}{}",
                if report.pass() { "PASS" } else { "FAIL" },
                ball.name,
                report.n,
                report.f_ball,
                report.entries.len(),
                worst
            );
        }
        let passed = reports.iter().filter(|(_, r)| r.pass()).count();
        println!(
            "corpus: {} balls, {} pass, {} fail",
            reports.len(),
            passed,
            reports.len() - passed
        );
    }
    Ok(exit_for(all_pass))
}
