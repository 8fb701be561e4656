//! Real, complex and deformed complex Hermite polynomials.
//!
//! The deformed family `H[m,n]^g` can be built five independent ways, and
//! those routes agreeing with one another is the main test surface of the
//! crate:
//!
//! * [`deformed_rodrigues`]: `exp(−∂₁∂₂)` applied to a product of linear forms,
//! * [`deformed_sum`]: a double binomial sum over undeformed `H[j,k]`,
//! * [`sandwich_route`]: `exp(−∂₁∂₂) ∘ S_g ∘ exp(∂₁∂₂)` applied to `H[m,n]`,
//! * [`deformed_via_matrix`]: the degree-`L` block matrix `M(g, L)`,
//! * [`gf_table`]: coefficients of the truncated exponential generating function.
//!
//! Conventions are unnormalized throughout: `H[m,n]` has leading term
//! `z1^m z2^n` and real `H_n` has leading coefficient `2^n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::HermiteError;
use crate::exact::{binomial, factorial, ExactScalar};
use crate::poly::{AffineMap, LinearForm, Monomial, SparsePoly, Variable};

use Variable::{X, Y, Z1, Z2};

/// A 2×2 matrix `((g11, g12), (g21, g22))` over ℚ(i, √2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GMatrix {
    pub g11: ExactScalar,
    pub g12: ExactScalar,
    pub g21: ExactScalar,
    pub g22: ExactScalar,
}

impl GMatrix {
    pub fn new(g11: ExactScalar, g12: ExactScalar, g21: ExactScalar, g22: ExactScalar) -> Self {
        GMatrix { g11, g12, g21, g22 }
    }

    pub fn identity() -> Self {
        GMatrix::diagonal(ExactScalar::one(), ExactScalar::one())
    }

    pub fn swap() -> Self {
        GMatrix::new(
            ExactScalar::zero(),
            ExactScalar::one(),
            ExactScalar::one(),
            ExactScalar::zero(),
        )
    }

    pub fn diagonal(a: ExactScalar, d: ExactScalar) -> Self {
        GMatrix::new(a, ExactScalar::zero(), ExactScalar::zero(), d)
    }

    pub fn determinant(&self) -> ExactScalar {
        &self.g11 * &self.g22 - &self.g12 * &self.g21
    }

    /// Conjugate transpose `g*`.
    pub fn adjoint(&self) -> Self {
        GMatrix::new(
            self.g11.conj(),
            self.g21.conj(),
            self.g12.conj(),
            self.g22.conj(),
        )
    }

    pub fn inverse(&self) -> Result<Self, HermiteError> {
        let det = self.determinant();
        if det.is_zero() {
            return Err(HermiteError::Singular);
        }
        let d = det.inv()?;
        Ok(GMatrix::new(
            &self.g22 * &d,
            -(&self.g12 * &d),
            -(&self.g21 * &d),
            &self.g11 * &d,
        ))
    }

    /// The partner `(g*)^{-1}` for which the pair is biorthogonal with unit
    /// normalization.
    pub fn dual(&self) -> Result<Self, HermiteError> {
        self.adjoint().inverse()
    }

    pub fn mul(&self, rhs: &GMatrix) -> GMatrix {
        GMatrix::new(
            &self.g11 * &rhs.g11 + &self.g12 * &rhs.g21,
            &self.g11 * &rhs.g12 + &self.g12 * &rhs.g22,
            &self.g21 * &rhs.g11 + &self.g22 * &rhs.g21,
            &self.g21 * &rhs.g12 + &self.g22 * &rhs.g22,
        )
    }

    /// `g12 = conj(g21)` and `g22 = conj(g11)`.
    pub fn hermitian_pair(&self) -> bool {
        self.g12 == self.g21.conj() && self.g22 == self.g11.conj()
    }

    /// Row-major string entries, as used in JSON output.
    pub fn to_json(&self) -> Value {
        json!([
            [self.g11.to_string(), self.g12.to_string()],
            [self.g21.to_string(), self.g22.to_string()]
        ])
    }

    /// The substitution `z1 ↦ g11 z1 + g21 z2`, `z2 ↦ g12 z1 + g22 z2`.
    pub fn substitution(&self) -> AffineMap {
        AffineMap::new()
            .with(
                Z1,
                LinearForm::new()
                    .plus(Z1, self.g11.clone())
                    .plus(Z2, self.g21.clone()),
            )
            .with(
                Z2,
                LinearForm::new()
                    .plus(Z1, self.g12.clone())
                    .plus(Z2, self.g22.clone()),
            )
    }

    /// The fixed, versioned set of deformation matrices used by the route
    /// equality, orthogonality and integral suites.
    pub fn test_set() -> Vec<(String, GMatrix)> {
        parse_g_set(include_str!("../data/g-set-v1.txt")).expect("bundled g set parses")
    }
}

/// Parses lines of `name: a,b;c,d`; blank lines and `#` comments are skipped.
pub fn parse_g_set(text: &str) -> Result<Vec<(String, GMatrix)>, HermiteError> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(|line| {
            let (name, matrix) =
                line.split_once(':')
                    .ok_or_else(|| HermiteError::MatrixSyntax {
                        input: line.to_string(),
                        reason: "expected `name: a,b;c,d`".to_string(),
                    })?;
            Ok((name.trim().to_string(), matrix.trim().parse()?))
        })
        .collect()
}

impl FromStr for GMatrix {
    type Err = HermiteError;

    /// Row-major `"a,b;c,d"` with canonical scalar entries.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = |reason: &str| HermiteError::MatrixSyntax {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(syntax("expected two rows separated by `;`"));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(syntax("expected two entries per row separated by `,`"));
            }
            for col in cols {
                entries.push(col.trim().parse::<ExactScalar>()?);
            }
        }
        let mut it = entries.into_iter();
        let mut next = || it.next().unwrap();
        Ok(GMatrix::new(next(), next(), next(), next()))
    }
}

impl fmt::Display for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.g11, self.g12, self.g21, self.g22)
    }
}

impl fmt::Debug for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GMatrix({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// `M(g, L)`: degree-`L` deformed polynomials in the undeformed basis.
    Deformation,
    /// `M(L)`: `H[m, L−m](z, z̄)` in the basis `H_r(x) H_{L−r}(y)`.
    RealBasis,
}

impl MatrixKind {
    pub fn label(self) -> &'static str {
        match self {
            MatrixKind::Deformation => "M(g,L)",
            MatrixKind::RealBasis => "M(L)",
        }
    }
}

/// An `(L+1)×(L+1)` basis-change matrix, indexed `[row r][column k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationMatrix {
    pub kind: MatrixKind,
    pub degree: u32,
    pub g: Option<GMatrix>,
    pub entries: Vec<Vec<ExactScalar>>,
}

impl DeformationMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, k: usize) -> &ExactScalar {
        &self.entries[r][k]
    }

    pub fn column(&self, k: usize) -> Vec<ExactScalar> {
        self.entries.iter().map(|row| row[k].clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(k, x)| if r == k { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        let mut out = serde_json::Map::new();
        out.insert("kind".into(), json!(self.kind.label()));
        out.insert("L".into(), json!(self.degree));
        if let Some(g) = &self.g {
            out.insert("g".into(), g.to_json());
        }
        out.insert("entries".into(), json!(entries));
        Value::Object(out)
    }
}

fn int(n: BigInt) -> ExactScalar {
    ExactScalar::from(n)
}

/// `H_n` in the variable `var` via `H_{n+1} = 2x H_n − 2n H_{n−1}`.
pub fn real_hermite_in(var: Variable, n: u32) -> SparsePoly {
    let x = SparsePoly::var(var);
    let two_x = x.scale(&ExactScalar::from_int(2));
    let mut prev = SparsePoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&ExactScalar::from_int(2 * i64::from(k)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence.
pub fn real_hermite(n: u32) -> SparsePoly {
    real_hermite_in(X, n)
}

/// `H_n(x)` by iterating `Q ↦ 2xQ − Q'` from `Q = 1`, each step being one
/// application of `−e^{x²} ∂ₓ e^{−x²}`.
pub fn real_hermite_rodrigues(n: u32) -> SparsePoly {
    let two_x = SparsePoly::var(X).scale(&ExactScalar::from_int(2));
    (0..n).fold(SparsePoly::one(), |q, _| {
        &(&two_x * &q) - &q.partial_derivative(X)
    })
}

/// `H[m,n](z1,z2) = Σ_k (−1)^k k! C(m,k) C(n,k) z1^{m−k} z2^{n−k}`.
pub fn complex_hermite(m: u32, n: u32) -> SparsePoly {
    let mut p = SparsePoly::zero();
    for k in 0..=m.min(n) {
        let mut c = factorial(k) * binomial(m, k) * binomial(n, k);
        if k % 2 == 1 {
            c = -c;
        }
        let mono = Monomial::one()
            .with(Z1, (m - k) as u16)
            .with(Z2, (n - k) as u16);
        p.add_term(mono, &int(c));
    }
    p
}

/// `(z1 − ∂_{z2})^m (z2 − ∂_{z1})^n 1`, the creation-operator construction.
pub fn complex_hermite_operator(m: u32, n: u32) -> SparsePoly {
    let raise = |p: &SparsePoly, mult: Variable, diff: Variable| {
        &(&SparsePoly::var(mult) * p) - &p.partial_derivative(diff)
    };
    let mut p = SparsePoly::one();
    for _ in 0..n {
        p = raise(&p, Z2, Z1);
    }
    for _ in 0..m {
        p = raise(&p, Z1, Z2);
    }
    p
}

fn linear(a: &ExactScalar, b: &ExactScalar) -> SparsePoly {
    LinearForm::new()
        .plus(Z1, a.clone())
        .plus(Z2, b.clone())
        .to_poly()
}

/// `exp(−∂₁∂₂) (g11 z1 + g21 z2)^m (g12 z1 + g22 z2)^n`.
pub fn deformed_rodrigues(g: &GMatrix, m: u32, n: u32) -> SparsePoly {
    let product = &linear(&g.g11, &g.g21).pow(m) * &linear(&g.g12, &g.g22).pow(n);
    product.mixed_exp_operator(&ExactScalar::from_int(-1), Z1, Z2)
}

/// `Σ_j Σ_k C(m,j) C(n,k) g11^j g21^{m−j} g12^k g22^{n−k} H[j+k, m+n−j−k]`.
pub fn deformed_sum(g: &GMatrix, m: u32, n: u32) -> SparsePoly {
    let mut coeffs: BTreeMap<u32, ExactScalar> = BTreeMap::new();
    for j in 0..=m {
        let left = int(binomial(m, j)) * g.g11.pow(j) * g.g21.pow(m - j);
        if left.is_zero() {
            continue;
        }
        for k in 0..=n {
            let c = &left * &(int(binomial(n, k)) * g.g12.pow(k) * g.g22.pow(n - k));
            *coeffs.entry(j + k).or_default() += &c;
        }
    }
    let mut p = SparsePoly::zero();
    for (first, c) in coeffs {
        if !c.is_zero() {
            p = &p + &complex_hermite(first, m + n - first).scale(&c);
        }
    }
    p
}

/// `exp(−∂₁∂₂) S_g exp(∂₁∂₂) H[m,n]` where `S_g` is [`GMatrix::substitution`].
pub fn sandwich_route(g: &GMatrix, m: u32, n: u32) -> SparsePoly {
    complex_hermite(m, n)
        .mixed_exp_operator(&ExactScalar::one(), Z1, Z2)
        .substitute(&g.substitution())
        .mixed_exp_operator(&ExactScalar::from_int(-1), Z1, Z2)
}

/// Entry `(r, k)` of `M(g, L)`:
/// `Σ_q C(k,q) C(L−k,r−q) g11^q g21^{k−q} g12^{r−q} g22^{L−k+q−r}`, with `0⁰ = 1`.
pub fn deformation_entry(g: &GMatrix, big_l: u32, r: u32, k: u32) -> ExactScalar {
    let lo = (r + k).saturating_sub(big_l);
    let hi = r.min(k);
    (lo..=hi)
        .map(|q| {
            int(binomial(k, q) * binomial(big_l - k, r - q))
                * g.g11.pow(q)
                * g.g21.pow(k - q)
                * g.g12.pow(r - q)
                * g.g22.pow(big_l - k + q - r)
        })
        .sum()
}

pub fn deformation_matrix(g: &GMatrix, big_l: u32) -> DeformationMatrix {
    let entries = (0..=big_l)
        .map(|r| {
            (0..=big_l)
                .map(|k| deformation_entry(g, big_l, r, k))
                .collect()
        })
        .collect();
    DeformationMatrix {
        kind: MatrixKind::Deformation,
        degree: big_l,
        g: Some(g.clone()),
        entries,
    }
}

/// `H[k, L−k]^g = Σ_r M(g,L)[r][k] H[r, L−r]`.
pub fn deformed_via_matrix(g: &GMatrix, k: u32, big_l: u32) -> Result<SparsePoly, HermiteError> {
    if k > big_l {
        return Err(HermiteError::IndexOutOfRange {
            index: k as usize,
            bound: big_l as usize,
        });
    }
    let mut p = SparsePoly::zero();
    for r in 0..=big_l {
        let c = deformation_entry(g, big_l, r, k);
        if !c.is_zero() {
            p = &p + &complex_hermite(r, big_l - r).scale(&c);
        }
    }
    Ok(p)
}

/// Truncated expansion of the generating function
/// `exp(g₁(u,v) z1 + g₂(u,v) z2 − g₁ g₂)` with `g₁ = g11 u + g12 v`,
/// `g₂ = g21 u + g22 v`. Entry `(m, n)` is `m! n!` times the coefficient of
/// `u^m v^n`, for every `m + n ≤ max_total`.
pub fn gf_table(g: &GMatrix, max_total: u32) -> BTreeMap<(u32, u32), SparsePoly> {
    use Variable::{U, V};
    let g1 = LinearForm::new()
        .plus(U, g.g11.clone())
        .plus(V, g.g12.clone())
        .to_poly();
    let g2 = LinearForm::new()
        .plus(U, g.g21.clone())
        .plus(V, g.g22.clone())
        .to_poly();
    let exponent = &(&(&g1 * &SparsePoly::var(Z1)) + &(&g2 * &SparsePoly::var(Z2))) - &(&g1 * &g2);
    let series = if exponent.is_zero() {
        SparsePoly::one()
    } else {
        exponent
            .series_exp(&[U, V], max_total)
            .expect("every term of the exponent has positive degree in u, v")
    };
    let mut table = BTreeMap::new();
    for total in 0..=max_total {
        for m in 0..=total {
            let n = total - m;
            let coeff = series.coefficient_of(&[(U, m as u16), (V, n as u16)]);
            table.insert((m, n), coeff.scale(&int(factorial(m) * factorial(n))));
        }
    }
    table
}

/// Entry `(r, m)` of `M(L)`:
/// `2^{−L} Σ_k (−1)^{L−m−r+k} i^{L−r} C(m,k) C(L−m,r−k)`.
pub fn real_basis_entry(big_l: u32, r: u32, m: u32) -> ExactScalar {
    let lo = (r + m).saturating_sub(big_l);
    let hi = r.min(m);
    let mut total = BigInt::zero();
    for k in lo..=hi {
        let term = binomial(m, k) * binomial(big_l - m, r - k);
        if (big_l + r + m + k) % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    let scale = ExactScalar::i().pow(big_l - r) * ExactScalar::ratio(1, 1i64 << big_l);
    int(total) * scale
}

pub fn real_basis_matrix(big_l: u32) -> DeformationMatrix {
    let entries = (0..=big_l)
        .map(|r| (0..=big_l).map(|m| real_basis_entry(big_l, r, m)).collect())
        .collect();
    DeformationMatrix {
        kind: MatrixKind::RealBasis,
        degree: big_l,
        g: None,
        entries,
    }
}

/// The substitution `z1 ↦ x + iy`, `z2 ↦ x − iy`.
pub fn diagonal_map() -> AffineMap {
    AffineMap::new()
        .with(Z1, LinearForm::var(X).plus(Y, ExactScalar::i()))
        .with(Z2, LinearForm::var(X).plus(Y, -ExactScalar::i()))
}

/// Expands a polynomial in `x, y` in the product basis `H_a(x) H_b(y)`.
///
/// Works by descending total degree: `H_a(x)H_b(y)` has leading term
/// `2^{a+b} x^a y^b` and otherwise only lower-degree terms.
pub fn real_hermite_expansion(p: &SparsePoly) -> BTreeMap<(u32, u32), ExactScalar> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    loop {
        let Some((m, c)) = rest.terms().next_back().map(|(m, c)| (*m, c.clone())) else {
            break;
        };
        let a = u32::from(m.exponent(X));
        let b = u32::from(m.exponent(Y));
        debug_assert_eq!(m.total_degree(), a + b, "only x and y may occur");
        let coeff = &c * &ExactScalar::ratio(1, 1i64 << (a + b));
        let basis = &real_hermite_in(X, a) * &real_hermite_in(Y, b);
        rest = &rest - &basis.scale(&coeff);
        out.insert((a, b), coeff);
    }
    out
}

/// Coefficients of `H[m,n](x+iy, x−iy)` on `H_r(x) H_{m+n−r}(y)`, `r = 0..=m+n`.
pub fn complex_to_real_expand(m: u32, n: u32) -> Result<Vec<ExactScalar>, HermiteError> {
    let big_l = m + n;
    let on_diagonal = complex_hermite(m, n).substitute(&diagonal_map());
    let expansion = real_hermite_expansion(&on_diagonal);
    if expansion.keys().any(|&(a, b)| a + b != big_l) {
        return Err(HermiteError::NotHomogeneous { m, n });
    }
    Ok((0..=big_l)
        .map(|r| expansion.get(&(r, big_l - r)).cloned().unwrap_or_default())
        .collect())
}

/// `H[m,n](0,0)`, the constant term of the explicit sum.
pub fn hermite_at_zero(m: u32, n: u32) -> ExactScalar {
    complex_hermite(m, n).constant_term()
}
