//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hermite2d::integrate::verify_wigner;
use hermite2d::suites::{run_suite, wigner_points, wigner_shifts, RunConfig, SuiteId};
use hermite2d::VerificationReport;

type Verdict = Result<String, String>;

fn run(suites: &[SuiteId]) -> Vec<VerificationReport> {
    let config = RunConfig::default();
    suites.iter().flat_map(|&s| run_suite(s, &config)).collect()
}

/// Every report passes and each identity has exactly the expected number of
/// cases, so a shrunken sweep cannot pass silently.
fn all_pass(reports: &[VerificationReport], expected: &[(&str, usize)]) -> Verdict {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for r in reports {
        *counts.entry(r.identity.as_str()).or_default() += 1;
    }
    for &(identity, n) in expected {
        let got = counts.get(identity).copied().unwrap_or(0);
        if got != n {
            return Err(format!("{identity}: {got} cases, expected {n}"));
        }
    }
    if let Some(bad) = reports.iter().find(|r| !r.pass) {
        return Err(format!("failing case {}", bad.to_json_line()));
    }
    let summary: Vec<String> = expected.iter().map(|(id, n)| format!("{id} {n}")).collect();
    Ok(summary.join(", "))
}

fn pairs_le(d: usize) -> usize {
    (d + 1) * (d + 1)
}

fn triangle(d: usize) -> usize {
    (0..=d).map(|l| l + 1).sum()
}

fn route_equality() -> Verdict {
    let per_g = pairs_le(6);
    all_pass(
        &run(&[SuiteId::Gf, SuiteId::RodriguesRoutes]),
        &[
            ("generating-function", 5 * per_g),
            ("creation-operator", per_g),
            ("deformed-rodrigues", 5 * per_g),
            ("sandwich", 5 * per_g),
            ("deformation-matrix", 5 * per_g),
        ],
    )
}

fn orthogonality() -> Verdict {
    all_pass(
        &run(&[SuiteId::Orthogonality]),
        &[
            ("orthogonality", pairs_le(5).pow(2)),
            ("orthogonality-deformed", 5 * pairs_le(4).pow(2)),
            ("orthogonality-witness", 1),
        ],
    )
}

fn moment_representation() -> Verdict {
    all_pass(
        &run(&[SuiteId::MomentRep]),
        &[("moment-representation", 5 * pairs_le(4) * 3)],
    )
}

fn wigner() -> Verdict {
    let summary = all_pass(
        &run(&[SuiteId::Wigner, SuiteId::WignerDeformed]),
        &[
            ("wigner", pairs_le(5) * 9),
            ("wigner-deformed", 5 * triangle(4) * 9),
        ],
    )?;
    for m in 0..=5 {
        for n in 0..=5 {
            for a in wigner_shifts() {
                for z in wigner_points() {
                    let check = verify_wigner(m, n, &a, &z).map_err(|e| e.to_string())?;
                    if !check.rhs.coeff().is_gaussian() {
                        return Err(format!("√2 residue at m={m} n={n} a={a} z={z}"));
                    }
                }
            }
        }
    }
    Ok(format!("{summary}, no √2 residue"))
}

fn translation() -> Verdict {
    all_pass(
        &run(&[SuiteId::Translation]),
        &[
            ("translation", pairs_le(3).pow(2) * 4),
            ("translation-origin", pairs_le(3).pow(2)),
        ],
    )
}

fn determinants() -> Verdict {
    let reports = run(&[SuiteId::Determinants, SuiteId::DeterminantOracle]);
    let summary = all_pass(
        &reports,
        &[
            ("determinant-positivity", 3 * 4 * 3 * 5),
            ("determinant-oracle", 3 * 2 * 2 * 5),
            ("determinant-closed-form", 2 * 5),
        ],
    )?;
    // Δ_1 = π and Δ_2 = π² at g = identity, s = 0.
    for r in reports
        .iter()
        .filter(|r| r.identity == "determinant-closed-form")
    {
        let size = r.params["N"].as_i64().unwrap_or(0);
        if r.lhs != "1" || i64::from(r.pi_power) != size {
            return Err(format!("closed form: {}", r.to_json_line()));
        }
    }
    Ok(summary)
}

fn real_basis() -> Verdict {
    all_pass(
        &run(&[SuiteId::RealBasis, SuiteId::Gram]),
        &[
            ("real-basis", triangle(8)),
            ("gram", (0..=8).map(|l| (l + 1) * (l + 1)).sum()),
        ],
    )
}

fn point_identities() -> Verdict {
    all_pass(
        &run(&[SuiteId::AtZero, SuiteId::RealHermite, SuiteId::Swap]),
        &[
            ("at-zero", pairs_le(8)),
            ("real-hermite", 13),
            ("swap-arguments", pairs_le(6)),
            ("swap-deformation", pairs_le(6)),
        ],
    )
}

fn verify_all(jobs: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hermite2d"))
        .args(["verify", "all", "--jobs", jobs])
        .env_remove("HERMITE2D_MAX_DEGREE")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("--jobs {jobs} exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn deterministic_verify_all() -> Verdict {
    let serial = verify_all("1")?;
    let parallel = verify_all("8")?;
    if serial != parallel {
        return Err("--jobs 1 and --jobs 8 outputs differ".into());
    }
    let lines = serial.iter().filter(|&&b| b == b'\n').count();
    Ok(format!("{lines} identical lines"))
}

/// Number, title, time limit in seconds, check.
type Criterion = (u32, &'static str, u64, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "route equality", 30, route_equality),
        (2, "orthogonality", 60, orthogonality),
        (3, "moment representation", 30, moment_representation),
        (4, "wigner identity", 30, wigner),
        (5, "translation identity", 60, translation),
        (6, "determinant positivity", 120, determinants),
        (7, "real-basis change", 30, real_basis),
        (8, "point identities", 10, point_identities),
        (9, "deterministic verify all", 600, deterministic_verify_all),
    ];
    let mut failures = 0;
    for (number, title, limit, check) in criteria {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed > Duration::from_secs(limit) => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit} s"))
            }
            other => other,
        };
        match verdict {
            Ok(detail) => println!("criterion {number} ({title}): PASS [{elapsed:.2?}] {detail}"),
            Err(detail) => {
                failures += 1;
                println!("criterion {number} ({title}): FAIL [{elapsed:.2?}] {detail}");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
