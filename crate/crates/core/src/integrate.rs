//! Exact Gaussian integration of polynomials and the integral identities
//! built on it.
//!
//! Every integrand here is a polynomial times a Gaussian, so integrals are
//! finite sums of moments `∫ t^k e^{−t²} dt/√π`, which are rational. Factors
//! of π are carried in [`ScaledExact::pi_power`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{IntegrateError, PolyError};
use crate::exact::{factorial, ExactScalar, GaussianRational};
use crate::hermite::{
    complex_hermite, deformation_entry, deformed_sum, diagonal_map, real_hermite_in, GMatrix,
};
use crate::poly::{AffineMap, LinearForm, SparsePoly, Variable};

use Variable::{R1, S1, T, X, Y, Z1, Z2};

/// `coeff · π^pi_power`; zero is always stored with `pi_power = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ScaledExact {
    coeff: ExactScalar,
    pi_power: i32,
}

impl ScaledExact {
    pub fn new(coeff: ExactScalar, pi_power: i32) -> Self {
        let pi_power = if coeff.is_zero() { 0 } else { pi_power };
        ScaledExact { coeff, pi_power }
    }

    pub fn zero() -> Self {
        ScaledExact::default()
    }

    pub fn coeff(&self) -> &ExactScalar {
        &self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        ScaledExact::new(&self.coeff * c, self.pi_power)
    }

    pub fn mul(&self, rhs: &ScaledExact) -> Self {
        ScaledExact::new(&self.coeff * &rhs.coeff, self.pi_power + rhs.pi_power)
    }
}

impl fmt::Display for ScaledExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})·π", self.coeff),
            k => write!(f, "({})·π^{k}", self.coeff),
        }
    }
}

impl fmt::Debug for ScaledExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `∫ t^k e^{−t²} dt / √π`: zero for odd `k`, `(2p)!/(4^p p!)` for `k = 2p`.
pub fn gaussian_moment(k: u32) -> BigRational {
    if k % 2 == 1 {
        return BigRational::zero();
    }
    let p = k / 2;
    let denom = BigInt::from(4u32).pow(p) * factorial(p);
    BigRational::new(factorial(2 * p), denom)
}

/// Integrates `p` against `∏ e^{−v²}` over the listed variables.
///
/// With `normalized` each variable carries the measure `dv/√π` and the
/// result has `pi_power = 0`; otherwise the plain Lebesgue measure is used,
/// which is only supported for an even number of variables (`pi_power =
/// vars/2`). Variables of `p` outside `vars` are rejected.
pub fn integrate_gaussian(
    p: &SparsePoly,
    vars: &[Variable],
    normalized: bool,
) -> Result<ScaledExact, IntegrateError> {
    if let Some(v) = p.variables().into_iter().find(|v| !vars.contains(v)) {
        return Err(PolyError::ForeignVariable(v).into());
    }
    if !normalized && vars.len() % 2 == 1 {
        return Err(IntegrateError::OddUnnormalized(vars.len()));
    }
    let max_e = p
        .terms()
        .flat_map(|(m, _)| vars.iter().map(move |&v| m.exponent(v)))
        .max()
        .unwrap_or(0);
    let moments: Vec<BigRational> = (0..=u32::from(max_e)).map(gaussian_moment).collect();
    let mut total = ExactScalar::zero();
    for (m, c) in p.terms() {
        if vars.iter().any(|&v| m.exponent(v) % 2 == 1) {
            continue;
        }
        let weight = vars.iter().fold(BigRational::one(), |acc, &v| {
            acc * &moments[usize::from(m.exponent(v))]
        });
        total += &(c * &ExactScalar::from(weight));
    }
    let pi_power = if normalized {
        0
    } else {
        (vars.len() / 2) as i32
    };
    Ok(ScaledExact::new(total, pi_power))
}

/// The conjugate of `p(z, z̄)` as a function on the diagonal `z2 = conj(z1)`:
/// conjugate every coefficient and exchange `z1` with `z2`.
pub fn diagonal_conjugate(p: &SparsePoly) -> Result<SparsePoly, PolyError> {
    if let Some(v) = p.variables().into_iter().find(|v| !matches!(v, Z1 | Z2)) {
        return Err(PolyError::ForeignVariable(v));
    }
    Ok(p.conjugate_coefficients().rename(&[(Z1, Z2), (Z2, Z1)]))
}

fn at_diagonal_point(p: &SparsePoly, z: &ExactScalar) -> Result<ExactScalar, PolyError> {
    let point: BTreeMap<_, _> = [(Z1, z.clone()), (Z2, z.conj())].into_iter().collect();
    p.evaluate(&point)
}

/// Outcome of the biorthogonality test on `h* g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthResult {
    pub is_orthogonal_family: bool,
    /// `(λ1, λ2)`, the diagonal of `h* g`, when it is diagonal.
    pub lambdas: Option<(ExactScalar, ExactScalar)>,
}

/// The families `H^g` and `H^h` are mutually orthogonal exactly when `h* g`
/// is diagonal.
pub fn orthogonality_condition(g: &GMatrix, h: &GMatrix) -> OrthResult {
    let product = h.adjoint().mul(g);
    let diagonal = product.g12.is_zero() && product.g21.is_zero();
    OrthResult {
        is_orthogonal_family: diagonal,
        lambdas: diagonal.then_some((product.g11, product.g22)),
    }
}

/// `∫ H[m,n]^g(z,z̄) · conj(H[p,q]^h(z,z̄)) e^{−x²−y²} dx dy / π`.
pub fn verify_orthogonality(
    g: &GMatrix,
    h: &GMatrix,
    (m, n): (u32, u32),
    (p, q): (u32, u32),
) -> Result<ScaledExact, IntegrateError> {
    let left = deformed_sum(g, m, n).substitute(&diagonal_map());
    let right = diagonal_conjugate(&deformed_sum(h, p, q))?.substitute(&diagonal_map());
    integrate_gaussian(&(&left * &right), &[X, Y], true)
}

/// `m! n! λ1^m λ2^n δ_{mp} δ_{nq}`.
pub fn orthogonality_expected(
    (m, n): (u32, u32),
    (p, q): (u32, u32),
    lambda1: &ExactScalar,
    lambda2: &ExactScalar,
) -> ScaledExact {
    if (m, n) != (p, q) {
        return ScaledExact::zero();
    }
    let c = ExactScalar::from(factorial(m) * factorial(n)) * lambda1.pow(m) * lambda2.pow(n);
    ScaledExact::new(c, 0)
}

/// Two exactly computed sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: ScaledExact,
    pub rhs: ScaledExact,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// True when the right side has no √2 component.
    pub fn radical_free(&self) -> bool {
        self.rhs.coeff.is_gaussian()
    }
}

/// Moment representation at `z = x0 + i y0`:
/// `H[m,n]^g(iz, iz̄) = i^{m+n}/π ∫ U^m V^n e^{−(r−x0)²−(s−y0)²} dr ds`
/// with `ζ = r + is`, `U = g11 ζ + g21 ζ̄`, `V = g12 ζ + g22 ζ̄`.
pub fn verify_moment_rep(
    g: &GMatrix,
    m: u32,
    n: u32,
    x0: &BigRational,
    y0: &BigRational,
) -> Result<IdentityCheck, IntegrateError> {
    let i = ExactScalar::i();
    let z = ExactScalar::from(GaussianRational::new(x0.clone(), y0.clone()));
    let point: BTreeMap<_, _> = [(Z1, &i * &z), (Z2, &i * &z.conj())].into_iter().collect();
    let lhs = deformed_sum(g, m, n).evaluate(&point)?;

    // ζ and ζ̄ as linear forms in (r, s)
    let zeta = |a: &ExactScalar, b: &ExactScalar| {
        LinearForm::new()
            .plus(R1, a + b)
            .plus(S1, &i * &(a - b))
            .to_poly()
    };
    let u = zeta(&g.g11, &g.g21);
    let v = zeta(&g.g12, &g.g22);
    let shift = AffineMap::shift(&[
        (R1, ExactScalar::from(x0.clone())),
        (S1, ExactScalar::from(y0.clone())),
    ]);
    let integrand = (&u.pow(m) * &v.pow(n)).substitute(&shift);
    let integral = integrate_gaussian(&integrand, &[R1, S1], true)?;
    Ok(IdentityCheck {
        lhs: ScaledExact::new(lhs, 0),
        rhs: integral.scale(&i.pow(m + n)),
    })
}

/// `(−1)^n 2^{−(m+n)/2} ∫ e^{−(u+a)²} H_m(u+b) H_n(u+c) du/√π` with
/// `b = a + z/√2`, `c = a − z̄/√2`, computed by shifting `u = t − a`.
pub fn wigner_integral(
    m: u32,
    n: u32,
    a: &ExactScalar,
    z: &GaussianRational,
) -> Result<ScaledExact, IntegrateError> {
    let z = ExactScalar::from(z.clone());
    let inv_sqrt2 = ExactScalar::sqrt2().inv()?;
    let b = a + &(&z * &inv_sqrt2);
    let c = a - &(&z.conj() * &inv_sqrt2);
    // u + b = t + (b − a) after u = t − a
    let shifted = |degree: u32, offset: &ExactScalar| {
        real_hermite_in(T, degree).substitute(&AffineMap::shift(&[(T, offset - a)]))
    };
    let integrand = &shifted(m, &b) * &shifted(n, &c);
    let integral = integrate_gaussian(&integrand, &[T], true)?;
    let sign = if n % 2 == 1 {
        -ExactScalar::one()
    } else {
        ExactScalar::one()
    };
    let prefactor = sign * ExactScalar::sqrt2().powi(-((m + n) as i32))?;
    Ok(integral.scale(&prefactor))
}

/// `H[m,n](z, z̄)` against its one-dimensional integral over real Hermite
/// polynomials with √2-shifted arguments.
pub fn verify_wigner(
    m: u32,
    n: u32,
    a: &ExactScalar,
    z: &GaussianRational,
) -> Result<IdentityCheck, IntegrateError> {
    let lhs = at_diagonal_point(&complex_hermite(m, n), &ExactScalar::from(z.clone()))?;
    Ok(IdentityCheck {
        lhs: ScaledExact::new(lhs, 0),
        rhs: wigner_integral(m, n, a, z)?,
    })
}

/// Deformed form: `H[k, L−k]^g(z, z̄) = Σ_r M(g,L)[r][k] · W(r, L−r)` where
/// `W` is [`wigner_integral`] with its own prefactor `(−1)^{L−r} 2^{−L/2}`.
pub fn verify_wigner_deformed(
    g: &GMatrix,
    k: u32,
    big_l: u32,
    a: &ExactScalar,
    z: &GaussianRational,
) -> Result<IdentityCheck, IntegrateError> {
    if k > big_l {
        return Err(crate::error::HermiteError::IndexOutOfRange {
            index: k as usize,
            bound: big_l as usize,
        }
        .into());
    }
    let mut rhs = ExactScalar::zero();
    for r in 0..=big_l {
        let weight = deformation_entry(g, big_l, r, k);
        if weight.is_zero() {
            continue;
        }
        let w = wigner_integral(r, big_l - r, a, z)?;
        rhs += &(&weight * w.coeff());
    }
    let lhs = at_diagonal_point(
        &deformed_sum(g, k, big_l - k),
        &ExactScalar::from(z.clone()),
    )?;
    Ok(IdentityCheck {
        lhs: ScaledExact::new(lhs, 0),
        rhs: ScaledExact::new(rhs, 0),
    })
}

/// `z1 ↦ x + iy + c`, `z2 ↦ x − iy + conj(c)`.
fn shifted_diagonal(c: &ExactScalar) -> AffineMap {
    let i = ExactScalar::i();
    AffineMap::new()
        .with(Z1, LinearForm::var(X).plus(Y, i.clone()).offset(c.clone()))
        .with(Z2, LinearForm::var(X).plus(Y, -i).offset(c.conj()))
}

/// Translation identity:
/// `∫ H[m,n](z+a, z̄+ā) H[p,q](z−a, z̄−ā) e^{−|z|²} dx dy
///  = (−1)^{p+q} π H[m,q](a, ā) H[n,p](ā, a)`.
///
/// The second factor is evaluated at `(ā, a)`; for real `a` this is the
/// same as `(a, ā)`.
pub fn verify_translation(
    (m, n): (u32, u32),
    (p, q): (u32, u32),
    a: &GaussianRational,
) -> Result<IdentityCheck, IntegrateError> {
    let a = ExactScalar::from(a.clone());
    let left = complex_hermite(m, n).substitute(&shifted_diagonal(&a));
    let right = complex_hermite(p, q).substitute(&shifted_diagonal(&-&a));
    let lhs = integrate_gaussian(&(&left * &right), &[X, Y], false)?;

    let at = |first: &ExactScalar, second: &ExactScalar| -> BTreeMap<Variable, ExactScalar> {
        [(Z1, first.clone()), (Z2, second.clone())]
            .into_iter()
            .collect()
    };
    let abar = a.conj();
    let first = complex_hermite(m, q).evaluate(&at(&a, &abar))?;
    let second = complex_hermite(n, p).evaluate(&at(&abar, &a))?;
    let sign = if (p + q) % 2 == 1 {
        -ExactScalar::one()
    } else {
        ExactScalar::one()
    };
    Ok(IdentityCheck {
        lhs,
        rhs: ScaledExact::new(sign * first * second, 1),
    })
}
