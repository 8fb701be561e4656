//! `hermite2d`: coefficient tables, deformation matrices, determinants and
//! exact verification sweeps for bivariate complex Hermite polynomials.
//!
//! Exit status is 0 when everything passes, 1 when an identity fails and 2
//! on usage or configuration errors.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hermite2d::determinant::{determinant_json, positivity_check};
use hermite2d::hermite::{
    complex_hermite_operator, deformation_matrix, deformed_rodrigues, deformed_sum,
    deformed_via_matrix, gf_table, real_basis_matrix, sandwich_route,
};
use hermite2d::suites::{run_suite, RunConfig, SuiteId};
use hermite2d::{
    DeformationMatrix, DeterminantError, ExactError, ExactScalar, GMatrix, GaussianRational,
    HankelSpec, SparsePoly, Variable,
};

#[derive(Parser)]
#[command(
    name = "hermite2d",
    version,
    about = "Exact bivariate complex Hermite polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Deformation,
    RealBasis,
}

// Parsed once per process; boxing the big variants buys nothing.
#[allow(clippy::large_enum_variant)]
#[derive(Subcommand)]
enum Command {
    /// Coefficients of `H[m,n]^g` (g defaults to the identity).
    Coeffs {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_g)]
        g: Option<GMatrix>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact value of `H[m,n]^g` at a point.
    ///
    /// `--z` evaluates on the diagonal (z, conj z); `--z1`/`--z2` give both
    /// arguments independently.
    Eval {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_g)]
        g: Option<GMatrix>,
        #[arg(long, value_parser = parse_point, conflicts_with_all = ["z1", "z2"], allow_hyphen_values = true)]
        z: Option<GaussianRational>,
        #[arg(long, value_parser = parse_scalar, requires = "z2", allow_hyphen_values = true)]
        z1: Option<ExactScalar>,
        #[arg(long, value_parser = parse_scalar, requires = "z1", allow_hyphen_values = true)]
        z2: Option<ExactScalar>,
    },
    /// Deformation matrix M(g,L) or real-basis matrix M(L).
    Matrix {
        #[arg(long = "L")]
        degree: u32,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_parser = parse_g)]
        g: Option<GMatrix>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Hankel determinant Δ_N and its positivity.
    Det {
        #[arg(long = "N")]
        size: usize,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        z: GaussianRational,
        #[arg(long, value_parser = parse_g)]
        g: Option<GMatrix>,
    },
    /// Run a verification suite (or `all`) and stream JSON-line reports.
    Verify {
        suite: String,
        /// Caps each suite's degree bound.
        #[arg(long, env = "HERMITE2D_MAX_DEGREE", allow_negative_numbers = true)]
        max_degree: Option<i64>,
        /// Worker threads; 0 uses every processor.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Largest determinant size.
        #[arg(long = "N", default_value_t = 4)]
        size: usize,
        /// Replaces the bundled g set; repeatable.
        #[arg(long, value_parser = parse_g)]
        g: Vec<GMatrix>,
        /// Replaces the default evaluation points; repeatable.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Vec<GaussianRational>,
        /// Write reports here instead of standard output.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Time each construction route up to a degree.
    Bench {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[arg(long, value_parser = parse_g)]
        g: Option<GMatrix>,
    },
}

fn parse_g(text: &str) -> Result<GMatrix, String> {
    text.parse()
        .map_err(|e: hermite2d::HermiteError| e.to_string())
}

fn parse_point(text: &str) -> Result<GaussianRational, String> {
    text.parse().map_err(|e: ExactError| e.to_string())
}

fn parse_scalar(text: &str) -> Result<ExactScalar, String> {
    text.parse().map_err(|e: ExactError| e.to_string())
}

/// A failure already reported on stderr, carrying its exit status.
struct Exit(u8);

fn usage(msg: impl std::fmt::Display) -> Exit {
    eprintln!("error: {msg}");
    Exit(2)
}

fn failure(msg: impl std::fmt::Display) -> Exit {
    eprintln!("error: {msg}");
    Exit(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code)) => ExitCode::from(code),
    }
}

fn run(command: Command) -> Result<(), Exit> {
    match command {
        Command::Coeffs { m, n, g, format } => {
            let p = deformed_sum(&g.unwrap_or_else(GMatrix::identity), m, n);
            print_coeffs(m, n, &p, format);
            Ok(())
        }
        Command::Eval { m, n, g, z, z1, z2 } => eval(m, n, g, z, z1, z2),
        Command::Matrix {
            degree,
            kind,
            g,
            format,
        } => {
            let matrix = match (kind, g) {
                (Kind::RealBasis, _) => real_basis_matrix(degree),
                (Kind::Deformation, Some(g)) => deformation_matrix(&g, degree),
                (Kind::Deformation, None) => return Err(usage("--kind deformation requires --g")),
            };
            print_matrix(&matrix, format);
            Ok(())
        }
        Command::Det { size, s, z, g } => det(size, s, &z, g),
        Command::Verify {
            suite,
            max_degree,
            jobs,
            size,
            g,
            point,
            output,
        } => {
            let suites = SuiteId::selection(&suite).map_err(usage)?;
            let max_degree = match max_degree {
                Some(d) if d < 0 => {
                    return Err(usage(format!("--max-degree must be ≥ 0, got {d}")))
                }
                Some(d) => Some(
                    u32::try_from(d)
                        .map_err(|_| usage(format!("--max-degree {d} is too large")))?,
                ),
                None => None,
            };
            if size == 0 {
                return Err(usage("--N must be ≥ 1"));
            }
            let mut config = RunConfig {
                max_degree,
                det_max_size: size,
                ..RunConfig::default()
            };
            if !g.is_empty() {
                config.g_set = g.into_iter().map(|g| (g.to_string(), g)).collect();
            }
            if !point.is_empty() {
                config.points = Some(point);
            }
            verify(&suites, &config, jobs, output)
        }
        Command::Bench { max_degree, g } => {
            bench(max_degree, &g.unwrap_or_else(GMatrix::identity));
            Ok(())
        }
    }
}

fn print_coeffs(m: u32, n: u32, p: &SparsePoly, format: Format) {
    match format {
        Format::Json => println!("{}", p.to_json()),
        Format::Pretty => println!("H[{m},{n}] = {p}"),
        Format::Csv => {
            println!("m,n,exp_z1,exp_z2,coeff");
            for (mono, c) in p.terms().rev() {
                println!(
                    "{m},{n},{},{},{c}",
                    mono.exponent(Variable::Z1),
                    mono.exponent(Variable::Z2)
                );
            }
        }
    }
}

fn print_matrix(matrix: &DeformationMatrix, format: Format) {
    match format {
        Format::Json => println!("{}", matrix.to_json()),
        Format::Csv => {
            for row in &matrix.entries {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                println!("{}", cells.join(","));
            }
        }
        Format::Pretty => {
            let cells: Vec<Vec<String>> = matrix
                .entries
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect();
            let width = cells
                .iter()
                .flatten()
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0);
            println!("{} with L = {}", matrix.kind.label(), matrix.degree);
            for row in cells {
                let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                println!("  {}", padded.join("  "));
            }
        }
    }
}

fn eval(
    m: u32,
    n: u32,
    g: Option<GMatrix>,
    z: Option<GaussianRational>,
    z1: Option<ExactScalar>,
    z2: Option<ExactScalar>,
) -> Result<(), Exit> {
    let (z1, z2) = match (z, z1, z2) {
        (Some(z), _, _) => {
            let z = ExactScalar::from(z);
            let conj = z.conj();
            (z, conj)
        }
        (None, Some(a), Some(b)) => (a, b),
        _ => return Err(usage("give either --z or both --z1 and --z2")),
    };
    let g = g.unwrap_or_else(GMatrix::identity);
    let point: BTreeMap<Variable, ExactScalar> =
        [(Variable::Z1, z1.clone()), (Variable::Z2, z2.clone())]
            .into_iter()
            .collect();
    let value = deformed_sum(&g, m, n).evaluate(&point).map_err(failure)?;
    let record = json!({
        "m": m,
        "n": n,
        "g": g.to_json(),
        "z1": z1.to_string(),
        "z2": z2.to_string(),
        "value": value.to_string(),
    });
    println!("{record}");
    Ok(())
}

fn det(size: usize, s: u32, z: &GaussianRational, g: Option<GMatrix>) -> Result<(), Exit> {
    let spec = HankelSpec::new(g.unwrap_or_else(GMatrix::identity), size, s, z);
    match positivity_check(&spec) {
        Ok((delta, positive)) => {
            println!("{}", determinant_json(&spec, &delta, positive));
            if positive {
                Ok(())
            } else {
                Err(failure(format!("Δ_{size} = {delta} is not positive")))
            }
        }
        Err(e @ (DeterminantError::NotHermitianPair | DeterminantError::InvalidSize { .. })) => {
            Err(usage(e))
        }
        Err(e) => Err(failure(e)),
    }
}

fn verify(
    suites: &[SuiteId],
    config: &RunConfig,
    jobs: usize,
    output: Option<std::path::PathBuf>,
) -> Result<(), Exit> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(usage)?;
    let mut out: Box<dyn Write> = match &output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let start = Instant::now();
    let (mut total, mut passed) = (0usize, 0usize);
    for &suite in suites {
        let suite_start = Instant::now();
        let reports = pool.install(|| run_suite(suite, config));
        let ok = reports.iter().filter(|r| r.pass).count();
        for r in &reports {
            writeln!(out, "{}", r.to_json_line()).map_err(failure)?;
        }
        eprintln!(
            "{suite}: {ok}/{} passed in {:.2?}",
            reports.len(),
            suite_start.elapsed()
        );
        total += reports.len();
        passed += ok;
    }
    out.flush().map_err(failure)?;
    eprintln!(
        "summary: {passed}/{total} passed, {} failed, {:.2?}",
        total - passed,
        start.elapsed()
    );
    if passed == total {
        Ok(())
    } else {
        Err(Exit(1))
    }
}

fn bench(max_degree: u32, g: &GMatrix) {
    let pairs: Vec<(u32, u32)> = (0..=max_degree)
        .flat_map(|m| (0..=max_degree).map(move |n| (m, n)))
        .collect();
    let time = |route: &str, f: &dyn Fn()| {
        let start = Instant::now();
        f();
        let record: Value = json!({
            "route": route,
            "g": g.to_json(),
            "max_degree": max_degree,
            "micros": start.elapsed().as_micros() as u64,
        });
        println!("{record}");
    };
    time("sum", &|| {
        pairs.iter().for_each(|&(m, n)| drop(deformed_sum(g, m, n)))
    });
    time("rodrigues", &|| {
        pairs
            .iter()
            .for_each(|&(m, n)| drop(deformed_rodrigues(g, m, n)))
    });
    time("sandwich", &|| {
        pairs
            .iter()
            .for_each(|&(m, n)| drop(sandwich_route(g, m, n)))
    });
    time("matrix", &|| {
        pairs
            .iter()
            .for_each(|&(m, n)| drop(deformed_via_matrix(g, m, m + n)))
    });
    time("generating-function", &|| drop(gf_table(g, 2 * max_degree)));
    time("creation-operator", &|| {
        pairs
            .iter()
            .for_each(|&(m, n)| drop(complex_hermite_operator(m, n)))
    });
}
