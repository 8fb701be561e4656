//! Named verification sweeps. Each suite enumerates its cases in a fixed
//! order, evaluates them in parallel, and returns the reports in that order,
//! so output does not depend on the thread count.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::determinant::{oracle_delta, positivity_check, HankelSpec};
use crate::exact::{factorial, ExactScalar, GaussianRational};
use crate::hermite::{
    complex_hermite, complex_hermite_operator, complex_to_real_expand, deformed_rodrigues,
    deformed_sum, deformed_via_matrix, diagonal_map, gf_table, hermite_at_zero, real_basis_matrix,
    real_hermite, real_hermite_rodrigues, sandwich_route, GMatrix,
};
use crate::integrate::{
    diagonal_conjugate, integrate_gaussian, orthogonality_condition, orthogonality_expected,
    verify_moment_rep, verify_translation, verify_wigner, verify_wigner_deformed, ScaledExact,
};
use crate::poly::{SparsePoly, Variable};
use crate::report::{Params, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteId {
    Gf,
    RodriguesRoutes,
    Swap,
    Orthogonality,
    OrthogonalityCondition,
    MomentRep,
    Wigner,
    WignerDeformed,
    Translation,
    RealBasis,
    Gram,
    Determinants,
    DeterminantOracle,
    RealHermite,
    AtZero,
}

impl SuiteId {
    pub const ALL: [SuiteId; 15] = [
        SuiteId::Gf,
        SuiteId::RodriguesRoutes,
        SuiteId::Swap,
        SuiteId::Orthogonality,
        SuiteId::OrthogonalityCondition,
        SuiteId::MomentRep,
        SuiteId::Wigner,
        SuiteId::WignerDeformed,
        SuiteId::Translation,
        SuiteId::RealBasis,
        SuiteId::Gram,
        SuiteId::Determinants,
        SuiteId::DeterminantOracle,
        SuiteId::RealHermite,
        SuiteId::AtZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Gf => "gf",
            SuiteId::RodriguesRoutes => "rodrigues-routes",
            SuiteId::Swap => "swap",
            SuiteId::Orthogonality => "orthogonality",
            SuiteId::OrthogonalityCondition => "orthogonality-condition",
            SuiteId::MomentRep => "moment-rep",
            SuiteId::Wigner => "wigner",
            SuiteId::WignerDeformed => "wigner-deformed",
            SuiteId::Translation => "translation",
            SuiteId::RealBasis => "real-basis",
            SuiteId::Gram => "gram",
            SuiteId::Determinants => "determinants",
            SuiteId::DeterminantOracle => "determinant-oracle",
            SuiteId::RealHermite => "real-hermite",
            SuiteId::AtZero => "at-zero",
        }
    }

    /// Degree bound used when no `max_degree` is configured.
    pub fn natural_bound(self) -> u32 {
        match self {
            SuiteId::Gf | SuiteId::RodriguesRoutes | SuiteId::Swap => 6,
            SuiteId::Orthogonality => 5,
            SuiteId::OrthogonalityCondition => 3,
            SuiteId::MomentRep => 4,
            SuiteId::Wigner => 5,
            SuiteId::WignerDeformed => 4,
            SuiteId::Translation => 3,
            SuiteId::RealBasis | SuiteId::Gram | SuiteId::AtZero => 8,
            SuiteId::Determinants => 2,
            SuiteId::DeterminantOracle => 1,
            SuiteId::RealHermite => 12,
        }
    }

    /// Suites named by `text`, where `all` selects every suite.
    pub fn selection(text: &str) -> Result<Vec<SuiteId>, String> {
        if text == "all" {
            Ok(SuiteId::ALL.to_vec())
        } else {
            text.parse().map(|id| vec![id])
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Caps every suite's degree bound; `None` keeps the natural bounds.
    /// For the determinant suites it caps the shift `s`.
    pub max_degree: Option<u32>,
    pub g_set: Vec<(String, GMatrix)>,
    /// Evaluation points; `None` uses each suite's defaults.
    pub points: Option<Vec<GaussianRational>>,
    /// Largest determinant size `N`.
    pub det_max_size: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_degree: None,
            g_set: GMatrix::test_set(),
            points: None,
            det_max_size: 4,
        }
    }
}

fn gr(text: &str) -> GaussianRational {
    text.parse().expect("built-in point parses")
}

fn scalar(text: &str) -> ExactScalar {
    text.parse().expect("built-in scalar parses")
}

pub fn default_points() -> Vec<GaussianRational> {
    ["1/2+1/3i", "1", "-1+2i"].map(gr).to_vec()
}

pub fn determinant_points() -> Vec<GaussianRational> {
    ["0", "1/2+1/3i", "1", "-1+2i", "3/4-1/5i"].map(gr).to_vec()
}

pub fn wigner_shifts() -> Vec<ExactScalar> {
    ["0", "1/2", "1/3i"].map(scalar).to_vec()
}

pub fn wigner_points() -> Vec<GaussianRational> {
    ["1+i", "1/3+1/5i", "-2+1/2i"].map(gr).to_vec()
}

pub fn translation_shifts() -> Vec<GaussianRational> {
    ["0", "1", "1+i", "1/2-1/3i"].map(gr).to_vec()
}

impl RunConfig {
    pub fn bound(&self, suite: SuiteId) -> u32 {
        let natural = suite.natural_bound();
        self.max_degree.map_or(natural, |cap| cap.min(natural))
    }

    fn points_or(&self, default: fn() -> Vec<GaussianRational>) -> Vec<GaussianRational> {
        self.points.clone().unwrap_or_else(default)
    }

    fn hermitian_set(&self) -> Vec<&(String, GMatrix)> {
        self.g_set
            .iter()
            .filter(|(_, g)| g.hermitian_pair())
            .collect()
    }
}

/// Runs one suite on the current rayon pool.
pub fn run_suite(suite: SuiteId, config: &RunConfig) -> Vec<VerificationReport> {
    let d = config.bound(suite);
    match suite {
        SuiteId::Gf => gf(config, d),
        SuiteId::RodriguesRoutes => routes(config, d),
        SuiteId::Swap => swap(d),
        SuiteId::Orthogonality => orthogonality(config, d),
        SuiteId::OrthogonalityCondition => orthogonality_condition_suite(config, d),
        SuiteId::MomentRep => moment_rep(config, d),
        SuiteId::Wigner => wigner(config, d),
        SuiteId::WignerDeformed => wigner_deformed(config, d),
        SuiteId::Translation => translation(config, d),
        SuiteId::RealBasis => real_basis(d),
        SuiteId::Gram => gram(d),
        SuiteId::Determinants => determinants(config, d),
        SuiteId::DeterminantOracle => determinant_oracle(config, d),
        SuiteId::RealHermite => real_hermite_suite(d),
        SuiteId::AtZero => at_zero(d),
    }
}

/// Runs the suites one after another, concatenating their reports.
pub fn run_all(suites: &[SuiteId], config: &RunConfig) -> Vec<VerificationReport> {
    suites.iter().flat_map(|&s| run_suite(s, config)).collect()
}

fn par_flat<C: Sync, F>(cases: Vec<C>, f: F) -> Vec<VerificationReport>
where
    F: Fn(&C) -> Vec<VerificationReport> + Sync + Send,
{
    let nested: Vec<Vec<VerificationReport>> = cases.par_iter().map(f).collect();
    nested.into_iter().flatten().collect()
}

fn pairs(d: u32) -> Vec<(u32, u32)> {
    (0..=d).flat_map(|m| (0..=d).map(move |n| (m, n))).collect()
}

fn mn(name: &str, m: u32, n: u32) -> Params {
    Params::new().text("g", name).with("m", m).with("n", n)
}

fn gf(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    par_flat(config.g_set.clone(), |(name, g)| {
        let table = gf_table(g, 2 * d);
        pairs(d)
            .into_iter()
            .map(|(m, n)| {
                VerificationReport::polynomials(
                    "generating-function",
                    mn(name, m, n),
                    &table[&(m, n)],
                    &deformed_sum(g, m, n),
                )
            })
            .collect()
    })
}

fn routes(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let mut out = par_flat(pairs(d), |&(m, n)| {
        vec![VerificationReport::polynomials(
            "creation-operator",
            Params::new().with("m", m).with("n", n),
            &complex_hermite_operator(m, n),
            &complex_hermite(m, n),
        )]
    });
    let cases: Vec<_> = config
        .g_set
        .iter()
        .flat_map(|(name, g)| pairs(d).into_iter().map(move |(m, n)| (name, g, m, n)))
        .collect();
    out.extend(par_flat(cases, |&(name, g, m, n)| {
        let sum = deformed_sum(g, m, n);
        let via_matrix = deformed_via_matrix(g, m, m + n).expect("m ≤ m + n");
        vec![
            VerificationReport::polynomials(
                "deformed-rodrigues",
                mn(name, m, n),
                &deformed_rodrigues(g, m, n),
                &sum,
            ),
            VerificationReport::polynomials(
                "sandwich",
                mn(name, m, n),
                &sandwich_route(g, m, n),
                &sum,
            ),
            VerificationReport::polynomials(
                "deformation-matrix",
                mn(name, m, n),
                &via_matrix,
                &sum,
            ),
        ]
    }));
    out
}

fn swap(d: u32) -> Vec<VerificationReport> {
    let swap = GMatrix::swap();
    par_flat(pairs(d), |&(m, n)| {
        let params = || Params::new().with("m", m).with("n", n);
        let target = complex_hermite(n, m);
        let swapped_args = complex_hermite(m, n)
            .rename(&[(Variable::Z1, Variable::Z2), (Variable::Z2, Variable::Z1)]);
        vec![
            VerificationReport::polynomials("swap-arguments", params(), &swapped_args, &target),
            VerificationReport::polynomials(
                "swap-deformation",
                params(),
                &deformed_sum(&swap, m, n),
                &target,
            ),
        ]
    })
}

/// `H^g[m,n]` on the diagonal and `conj(H^h[p,q])` on the diagonal, for all
/// indices up to `d`.
struct DiagonalFamily {
    left: Vec<SparsePoly>,
    right: Vec<SparsePoly>,
    d: u32,
}

impl DiagonalFamily {
    fn new(g: &GMatrix, h: &GMatrix, d: u32) -> Self {
        let diag = diagonal_map();
        let left = pairs(d)
            .into_par_iter()
            .map(|(m, n)| deformed_sum(g, m, n).substitute(&diag))
            .collect();
        let right = pairs(d)
            .into_par_iter()
            .map(|(p, q)| {
                diagonal_conjugate(&deformed_sum(h, p, q))
                    .expect("only z1 and z2 occur")
                    .substitute(&diag)
            })
            .collect();
        DiagonalFamily { left, right, d }
    }

    fn index(&self, (m, n): (u32, u32)) -> usize {
        (m * (self.d + 1) + n) as usize
    }

    fn integral(&self, mn: (u32, u32), pq: (u32, u32)) -> ScaledExact {
        let product = &self.left[self.index(mn)] * &self.right[self.index(pq)];
        integrate_gaussian(&product, &[Variable::X, Variable::Y], true).expect("x and y only")
    }
}

fn quads(d: u32) -> Vec<((u32, u32), (u32, u32))> {
    let p = pairs(d);
    p.iter()
        .flat_map(|&a| p.iter().map(move |&b| (a, b)))
        .collect()
}

fn orth_params(g: &str, h: &str, (m, n): (u32, u32), (p, q): (u32, u32)) -> Params {
    Params::new()
        .text("g", g)
        .text("h", h)
        .with("m", m)
        .with("n", n)
        .with("p", p)
        .with("q", q)
}

fn orthogonality_sweep(
    identity: &str,
    (g_name, g): (&str, &GMatrix),
    (h_name, h): (&str, &GMatrix),
    lambdas: &(ExactScalar, ExactScalar),
    d: u32,
) -> Vec<VerificationReport> {
    let family = DiagonalFamily::new(g, h, d);
    par_flat(quads(d), |&(a, b)| {
        vec![VerificationReport::equality(
            identity,
            orth_params(g_name, h_name, a, b),
            &family.integral(a, b),
            &orthogonality_expected(a, b, &lambdas.0, &lambdas.1),
        )]
    })
}

fn orthogonality(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let id = GMatrix::identity();
    let ones = (ExactScalar::one(), ExactScalar::one());
    let mut out = orthogonality_sweep(
        "orthogonality",
        ("identity", &id),
        ("identity", &id),
        &ones,
        d,
    );

    let deformed_bound = d.min(4);
    for (name, g) in &config.g_set {
        let params = Params::new().text("g", name);
        match g.dual() {
            Ok(h) => out.extend(orthogonality_sweep(
                "orthogonality-deformed",
                (name, g),
                ("dual", &h),
                &ones,
                deformed_bound,
            )),
            Err(e) => out.push(VerificationReport::error(
                "orthogonality-deformed",
                params,
                e,
            )),
        }
    }

    // A pair violating the diagonal condition must have a nonzero cross term.
    let h: GMatrix = "1,1;0,1".parse().expect("literal matrix");
    let witness_bound = d.min(2);
    let family = DiagonalFamily::new(&id, &h, witness_bound);
    let found = quads(witness_bound)
        .into_iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a, b, family.integral(a, b)))
        .find(|(_, _, v)| !v.is_zero());
    out.push(match found {
        Some((a, b, value)) => VerificationReport::relation(
            "orthogonality-witness",
            orth_params("identity", &h.to_string(), a, b),
            &value,
            "!=",
            "0",
            true,
        ),
        None => VerificationReport::relation(
            "orthogonality-witness",
            Params::new().text("g", "identity").text("h", h),
            &ScaledExact::zero(),
            "!=",
            "0",
            false,
        ),
    });
    out
}

fn lambda_text(lambdas: &Option<(ExactScalar, ExactScalar)>) -> String {
    match lambdas {
        Some((a, b)) => format!("diagonal({a}, {b})"),
        None => "not diagonal".to_string(),
    }
}

fn orthogonality_condition_suite(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let scaling = GMatrix::diagonal(scalar("2"), scalar("1/3+i"));
    let mut out = Vec::new();
    for (name, g) in &config.g_set {
        let Ok(dual) = g.dual() else {
            out.push(VerificationReport::error(
                "orthogonality-condition",
                Params::new().text("g", name),
                "g is singular",
            ));
            continue;
        };
        // h = (g*)^{-1} D gives h* g = D*, so λ = conj(D).
        let h = dual.mul(&scaling);
        let expected = Some((scaling.g11.conj(), scaling.g22.conj()));
        let cond = orthogonality_condition(g, &h);
        out.push(VerificationReport::texts(
            "orthogonality-condition",
            Params::new().text("g", name).text("h", &h),
            lambda_text(&cond.lambdas),
            lambda_text(&expected),
        ));
        if let Some(lambdas) = cond.lambdas {
            out.extend(orthogonality_sweep(
                "orthogonality-scaled",
                (name, g),
                (&h.to_string(), &h),
                &lambdas,
                d,
            ));
        }
    }
    let upper: GMatrix = "1,1;0,1".parse().expect("literal matrix");
    let cond = orthogonality_condition(&GMatrix::identity(), &upper);
    out.push(VerificationReport::texts(
        "orthogonality-condition",
        Params::new().text("g", "identity").text("h", &upper),
        lambda_text(&cond.lambdas),
        lambda_text(&None),
    ));
    out
}

fn moment_rep(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let points = config.points_or(default_points);
    let cases: Vec<_> = config
        .g_set
        .iter()
        .flat_map(|(name, g)| {
            let points = &points;
            pairs(d)
                .into_iter()
                .flat_map(move |(m, n)| points.iter().map(move |z| (name, g, m, n, z)))
        })
        .collect();
    par_flat(cases, |&(name, g, m, n, z)| {
        let params = mn(name, m, n).text("z", z);
        vec![match verify_moment_rep(g, m, n, &z.re, &z.im) {
            Ok(check) => VerificationReport::check("moment-representation", params, &check),
            Err(e) => VerificationReport::error("moment-representation", params, e),
        }]
    })
}

fn wigner_cases(config: &RunConfig) -> Vec<(ExactScalar, GaussianRational)> {
    let zs = config.points_or(wigner_points);
    wigner_shifts()
        .into_iter()
        .flat_map(|a| zs.iter().map(move |z| (a.clone(), z.clone())))
        .collect()
}

fn wigner(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let cases: Vec<_> = pairs(d)
        .into_iter()
        .flat_map(|mn| wigner_cases(config).into_iter().map(move |az| (mn, az)))
        .collect();
    par_flat(cases, |((m, n), (a, z))| {
        let params = Params::new()
            .with("m", *m)
            .with("n", *n)
            .text("a", a)
            .text("z", z);
        vec![match verify_wigner(*m, *n, a, z) {
            Ok(check) => {
                let mut report = VerificationReport::check("wigner", params, &check);
                report.pass &= check.radical_free();
                report
            }
            Err(e) => VerificationReport::error("wigner", params, e),
        }]
    })
}

fn wigner_deformed(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let mut cases = Vec::new();
    for (name, g) in &config.g_set {
        for big_l in 0..=d {
            for k in 0..=big_l {
                for az in wigner_cases(config) {
                    cases.push((name, g, k, big_l, az));
                }
            }
        }
    }
    par_flat(cases, |(name, g, k, big_l, (a, z))| {
        let params = Params::new()
            .text("g", name)
            .with("k", *k)
            .with("L", *big_l)
            .text("a", a)
            .text("z", z);
        vec![match verify_wigner_deformed(g, *k, *big_l, a, z) {
            Ok(check) => VerificationReport::check("wigner-deformed", params, &check),
            Err(e) => VerificationReport::error("wigner-deformed", params, e),
        }]
    })
}

fn translation(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let shifts = config.points.clone().unwrap_or_else(translation_shifts);
    let cases: Vec<_> = quads(d)
        .into_iter()
        .flat_map(|q| shifts.iter().map(move |a| (q, a)))
        .collect();
    par_flat(cases, |&(((m, n), (p, q)), a)| {
        let params = Params::new()
            .with("m", m)
            .with("n", n)
            .with("p", p)
            .with("q", q)
            .text("a", a);
        let check = match verify_translation((m, n), (p, q), a) {
            Ok(check) => check,
            Err(e) => return vec![VerificationReport::error("translation", params, e)],
        };
        let mut out = vec![VerificationReport::check(
            "translation",
            params.clone(),
            &check,
        )];
        if a.is_zero() {
            // At a = 0 the left side is π times the orthogonality value.
            let one = ExactScalar::one();
            let orth = orthogonality_expected((m, n), (q, p), &one, &one);
            out.push(VerificationReport::equality(
                "translation-origin",
                params,
                &check.lhs,
                &orth.mul(&ScaledExact::new(one, 1)),
            ));
        }
        out
    })
}

fn list_text(values: &[ExactScalar]) -> String {
    let items: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn real_basis(d: u32) -> Vec<VerificationReport> {
    let cases: Vec<_> = (0..=d).flat_map(|l| (0..=l).map(move |m| (l, m))).collect();
    par_flat(cases, |&(big_l, m)| {
        let params = Params::new().with("L", big_l).with("m", m);
        vec![match complex_to_real_expand(m, big_l - m) {
            Ok(expansion) => VerificationReport::texts(
                "real-basis",
                params,
                list_text(&expansion),
                list_text(&real_basis_matrix(big_l).column(m as usize)),
            ),
            Err(e) => VerificationReport::error("real-basis", params, e),
        }]
    })
}

fn gram(d: u32) -> Vec<VerificationReport> {
    let cases: Vec<_> = (0..=d)
        .flat_map(|l| (0..=l).flat_map(move |m| (0..=l).map(move |k| (l, m, k))))
        .collect();
    par_flat(cases, |&(big_l, m, k)| {
        let matrix = real_basis_matrix(big_l);
        let lhs: ExactScalar = (0..=big_l)
            .map(|r| {
                let weight = (factorial(r) * factorial(big_l - r)) << big_l;
                matrix.get(r as usize, m as usize)
                    * &matrix.get(r as usize, k as usize).conj()
                    * ExactScalar::from(weight)
            })
            .sum();
        let rhs = if m == k {
            ExactScalar::from(factorial(m) * factorial(big_l - m))
        } else {
            ExactScalar::zero()
        };
        vec![VerificationReport::equality(
            "gram",
            Params::new().with("L", big_l).with("m", m).with("m'", k),
            &ScaledExact::new(lhs, 0),
            &ScaledExact::new(rhs, 0),
        )]
    })
}

fn det_params(name: &str, size: usize, shift: u32, z: &GaussianRational) -> Params {
    Params::new()
        .text("g", name)
        .with("N", size)
        .with("s", shift)
        .text("z", z)
}

fn determinants(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let points = config.points_or(determinant_points);
    let mut cases = Vec::new();
    for (name, g) in config.hermitian_set() {
        for size in 1..=config.det_max_size {
            for shift in 0..=d {
                for z in &points {
                    cases.push((name, HankelSpec::new(g.clone(), size, shift, z)));
                }
            }
        }
    }
    par_flat(cases, |(name, spec)| {
        let params = det_params(name, spec.size, spec.shift, &spec.z());
        vec![match positivity_check(spec) {
            Ok((delta, positive)) => VerificationReport::relation(
                "determinant-positivity",
                params,
                &delta,
                ">",
                "0",
                positive,
            ),
            Err(e) => VerificationReport::error("determinant-positivity", params, e),
        }]
    })
}

fn determinant_oracle(config: &RunConfig, d: u32) -> Vec<VerificationReport> {
    let points = config.points_or(determinant_points);
    let max_size = config.det_max_size.min(2);
    let mut cases = Vec::new();
    for (name, g) in config.hermitian_set() {
        for size in 1..=max_size {
            for shift in 0..=d {
                for z in &points {
                    cases.push((name, HankelSpec::new(g.clone(), size, shift, z)));
                }
            }
        }
    }
    let mut out = par_flat(cases, |(name, spec)| {
        let params = det_params(name, spec.size, spec.shift, &spec.z());
        let both = positivity_check(spec)
            .map_err(|e| e.to_string())
            .and_then(|(delta, _)| Ok((delta, oracle_delta(spec).map_err(|e| e.to_string())?)));
        vec![match both {
            Ok((delta, oracle)) => {
                VerificationReport::equality("determinant-oracle", params, &delta, &oracle)
            }
            Err(e) => VerificationReport::error("determinant-oracle", params, e),
        }]
    });
    // Closed values at g = identity, s = 0: Δ_N = π^N.
    for size in 1..=max_size {
        for z in &points {
            let spec = HankelSpec::new(GMatrix::identity(), size, 0, z);
            let params = det_params("identity", size, 0, z);
            out.push(match positivity_check(&spec) {
                Ok((delta, _)) => VerificationReport::equality(
                    "determinant-closed-form",
                    params,
                    &delta,
                    &ScaledExact::new(ExactScalar::one(), size as i32),
                ),
                Err(e) => VerificationReport::error("determinant-closed-form", params, e),
            });
        }
    }
    out
}

fn real_hermite_suite(d: u32) -> Vec<VerificationReport> {
    par_flat((0..=d).collect(), |&n| {
        vec![VerificationReport::polynomials(
            "real-hermite",
            Params::new().with("n", n),
            &real_hermite(n),
            &real_hermite_rodrigues(n),
        )]
    })
}

fn at_zero(d: u32) -> Vec<VerificationReport> {
    par_flat(pairs(d), |&(m, n)| {
        let expected = if m == n {
            let f = ExactScalar::from(factorial(n));
            if n % 2 == 1 {
                -f
            } else {
                f
            }
        } else {
            ExactScalar::zero()
        };
        vec![VerificationReport::equality(
            "at-zero",
            Params::new().with("m", m).with("n", n),
            &ScaledExact::new(hermite_at_zero(m, n), 0),
            &ScaledExact::new(expected, 0),
        )]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>(), Ok(id));
        }
        assert_eq!(SuiteId::selection("all").unwrap().len(), 15);
        assert!(SuiteId::selection("bogus").is_err());
    }

    #[test]
    fn max_degree_caps_natural_bounds() {
        let config = RunConfig {
            max_degree: Some(3),
            ..RunConfig::default()
        };
        assert_eq!(config.bound(SuiteId::RealHermite), 3);
        assert_eq!(config.bound(SuiteId::DeterminantOracle), 1);
        assert_eq!(RunConfig::default().bound(SuiteId::Gram), 8);
    }

    #[test]
    fn small_sweeps_pass() {
        let config = RunConfig {
            max_degree: Some(2),
            det_max_size: 2,
            ..RunConfig::default()
        };
        for id in SuiteId::ALL {
            let reports = run_suite(id, &config);
            assert!(!reports.is_empty(), "{id}");
            for r in &reports {
                assert!(r.pass, "{}", r.to_json_line());
            }
        }
    }
}
