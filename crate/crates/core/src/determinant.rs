//! Hankel-type determinants of deformed Hermite values and their positivity.
//!
//! For `g` with `g12 = conj(g21)` and `g22 = conj(g11)`, the `N×N` matrix
//! with entries `(−i)^{m+n+2s} π H[m+s, n+s]^g(iz, iz̄)` is a moment matrix
//! of `U = g11 ζ + g21 ζ̄` against a shifted Gaussian, so its determinant
//! `Δ_N` is positive. [`oracle_delta`] recomputes small cases directly as
//!
//! ```text
//! Δ_N = 1/N! ∫ ∏_k |U_k|^{2s} ∏_{j<k} |U_j − U_k|² ∏_j e^{−(r_j−x)²−(s_j−y)²} dr_j ds_j
//! ```

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::DeterminantError;
use crate::exact::{factorial, ExactScalar, GaussianRational, Sign};
use crate::hermite::{deformed_sum, GMatrix};
use crate::integrate::{integrate_gaussian, ScaledExact};
use crate::poly::{AffineMap, LinearForm, SparsePoly, Variable};

/// Parameters of one determinant: matrix `g`, size `N`, index shift `s`
/// and evaluation point `z = x0 + i y0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelSpec {
    pub g: GMatrix,
    pub size: usize,
    pub shift: u32,
    pub x0: BigRational,
    pub y0: BigRational,
}

impl HankelSpec {
    pub fn new(g: GMatrix, size: usize, shift: u32, z: &GaussianRational) -> Self {
        HankelSpec {
            g,
            size,
            shift,
            x0: z.re.clone(),
            y0: z.im.clone(),
        }
    }

    pub fn z(&self) -> GaussianRational {
        GaussianRational::new(self.x0.clone(), self.y0.clone())
    }

    pub fn validate(&self) -> Result<(), DeterminantError> {
        if self.size == 0 {
            return Err(DeterminantError::InvalidSize {
                n: self.size,
                s: self.shift,
            });
        }
        if !self.g.hermitian_pair() {
            return Err(DeterminantError::NotHermitianPair);
        }
        Ok(())
    }
}

/// Square matrix whose entries all carry the same power of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: Vec<Vec<ExactScalar>>,
    pub pi_power: i32,
}

impl ExactMatrix {
    pub fn new(rows: Vec<Vec<ExactScalar>>, pi_power: i32) -> Self {
        ExactMatrix { rows, pi_power }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.size();
        let rows = (0..n)
            .map(|c| (0..n).map(|r| self.rows[r][c].clone()).collect())
            .collect();
        ExactMatrix::new(rows, self.pi_power)
    }
}

pub fn hankel_matrix(spec: &HankelSpec) -> Result<ExactMatrix, DeterminantError> {
    spec.validate()?;
    let i = ExactScalar::i();
    let z = ExactScalar::from(spec.z());
    let point: BTreeMap<Variable, ExactScalar> =
        [(Variable::Z1, &i * &z), (Variable::Z2, &i * &z.conj())]
            .into_iter()
            .collect();
    let minus_i = -ExactScalar::i();
    let s = spec.shift;
    let mut rows = Vec::with_capacity(spec.size);
    for m in 0..spec.size as u32 {
        let mut row = Vec::with_capacity(spec.size);
        for n in 0..spec.size as u32 {
            let value = deformed_sum(&spec.g, m + s, n + s)
                .evaluate(&point)
                .expect("z1 and z2 are bound");
            row.push(minus_i.pow(m + n + 2 * s) * value);
        }
        rows.push(row);
    }
    Ok(ExactMatrix::new(rows, 1))
}

/// Determinant by Gaussian elimination over the field, pivoting on the
/// first nonzero entry of each column.
pub fn exact_determinant(matrix: &ExactMatrix) -> Result<ScaledExact, DeterminantError> {
    let n = matrix.size();
    if matrix.rows.iter().any(|row| row.len() != n) {
        return Err(DeterminantError::NotSquare);
    }
    let pi_power = matrix.pi_power * n as i32;
    let mut a = matrix.rows.clone();
    let mut det = ExactScalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(ScaledExact::zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let inv = a[col][col].inv()?;
        det = &det * &a[col][col];
        let (top, bottom) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &(&factor * p);
            }
        }
    }
    Ok(ScaledExact::new(det, pi_power))
}

/// `Δ_N` together with whether it is strictly positive. A value with a
/// nonzero imaginary part is reported as [`ExactError::NotReal`].
///
/// [`ExactError::NotReal`]: crate::error::ExactError::NotReal
pub fn positivity_check(spec: &HankelSpec) -> Result<(ScaledExact, bool), DeterminantError> {
    let delta = exact_determinant(&hankel_matrix(spec)?)?;
    let positive = delta.coeff().sign()? == Sign::Positive;
    Ok((delta, positive))
}

fn r_s(k: usize) -> (Variable, Variable) {
    match k {
        0 => (Variable::R1, Variable::S1),
        _ => (Variable::R2, Variable::S2),
    }
}

/// Brute-force `Δ_N` for `N ≤ 2`, `s ≤ 1` from its integral representation.
pub fn oracle_delta(spec: &HankelSpec) -> Result<ScaledExact, DeterminantError> {
    spec.validate()?;
    if spec.size > 2 || spec.shift > 1 {
        return Err(DeterminantError::OracleRange {
            n: spec.size,
            s: spec.shift,
        });
    }
    let i = ExactScalar::i();
    let g = &spec.g;
    // a ζ + b ζ̄ with ζ = r + is
    let form = |k: usize, a: &ExactScalar, b: &ExactScalar| {
        let (r, s) = r_s(k);
        LinearForm::new()
            .plus(r, a + b)
            .plus(s, &i * &(a - b))
            .to_poly()
    };
    let us: Vec<SparsePoly> = (0..spec.size).map(|k| form(k, &g.g11, &g.g21)).collect();
    let vs: Vec<SparsePoly> = (0..spec.size).map(|k| form(k, &g.g12, &g.g22)).collect();

    let mut integrand = SparsePoly::one();
    for k in 0..spec.size {
        integrand = &integrand * &(&us[k] * &vs[k]).pow(spec.shift);
    }
    for j in 0..spec.size {
        for k in j + 1..spec.size {
            integrand = &integrand * &(&(&us[j] - &us[k]) * &(&vs[j] - &vs[k]));
        }
    }
    let mut shifts = Vec::new();
    let mut vars = Vec::new();
    for k in 0..spec.size {
        let (r, s) = r_s(k);
        shifts.push((r, ExactScalar::from(spec.x0.clone())));
        shifts.push((s, ExactScalar::from(spec.y0.clone())));
        vars.extend([r, s]);
    }
    let integrand = integrand.substitute(&AffineMap::shift(&shifts));
    let integral = integrate_gaussian(&integrand, &vars, false)?;
    let inv_n_fact = ExactScalar::from(factorial(spec.size as u32)).inv()?;
    Ok(integral.scale(&inv_n_fact))
}

/// `{"N":…,"s":…,"z":…,"g":[…],"delta":…,"pi_power":…,"positive":…}`.
pub fn determinant_json(spec: &HankelSpec, delta: &ScaledExact, positive: bool) -> Value {
    json!({
        "N": spec.size,
        "s": spec.shift,
        "z": spec.z().to_string(),
        "g": spec.g.to_json(),
        "delta": delta.coeff().to_string(),
        "pi_power": delta.pi_power(),
        "positive": positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> ExactScalar {
        text.parse().unwrap()
    }

    fn z(text: &str) -> GaussianRational {
        text.parse().unwrap()
    }

    #[test]
    fn hankel_examples() {
        let id = GMatrix::identity();
        let m = hankel_matrix(&HankelSpec::new(id.clone(), 1, 0, &z("1/2+1/3i"))).unwrap();
        assert_eq!(m, ExactMatrix::new(vec![vec![s("1")]], 1));

        let point = z("1/2+1/3i");
        let zz = ExactScalar::from(point.clone());
        let norm = ExactScalar::from(point.norm_sqr());
        let m = hankel_matrix(&HankelSpec::new(id.clone(), 2, 0, &point)).unwrap();
        assert_eq!(
            m.rows,
            vec![vec![s("1"), zz.conj()], vec![zz.clone(), &norm + &s("1")]]
        );
        let m = hankel_matrix(&HankelSpec::new(id, 1, 1, &point)).unwrap();
        assert_eq!(m.rows, vec![vec![&norm + &s("1")]]);

        assert_eq!(
            hankel_matrix(&HankelSpec::new("1,1;0,1".parse().unwrap(), 2, 0, &point)),
            Err(DeterminantError::NotHermitianPair)
        );
    }

    #[test]
    fn determinant_examples() {
        let eye = |n: usize| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| if r == c { s("1") } else { s("0") })
                        .collect()
                })
                .collect()
        };
        assert_eq!(
            exact_determinant(&ExactMatrix::new(eye(3), 0)).unwrap(),
            ScaledExact::new(s("1"), 0)
        );
        let zz = s("1/2+1/3i");
        let norm = &zz * &zz.conj();
        let m = ExactMatrix::new(vec![vec![s("1"), zz.conj()], vec![zz, norm + s("1")]], 0);
        assert_eq!(exact_determinant(&m).unwrap(), ScaledExact::new(s("1"), 0));
        let singular = ExactMatrix::new(vec![vec![s("1"), s("1")], vec![s("1"), s("1")]], 0);
        assert!(exact_determinant(&singular).unwrap().is_zero());
        // needs a row swap
        let swapped = ExactMatrix::new(vec![vec![s("0"), s("1")], vec![s("1"), s("0")]], 1);
        assert_eq!(
            exact_determinant(&swapped).unwrap(),
            ScaledExact::new(s("-1"), 2)
        );
    }

    #[test]
    fn positivity_examples() {
        let id = GMatrix::identity();
        let (d, pos) = positivity_check(&HankelSpec::new(id.clone(), 1, 0, &z("0"))).unwrap();
        assert_eq!(d, ScaledExact::new(s("1"), 1));
        assert!(pos);
        let (d, pos) = positivity_check(&HankelSpec::new(id, 2, 0, &z("-3/7+2i"))).unwrap();
        assert_eq!(d, ScaledExact::new(s("1"), 2));
        assert!(pos);
        let spec = HankelSpec::new("1,i;-i,1".parse().unwrap(), 2, 1, &z("1/2+1/3i"));
        assert!(positivity_check(&spec).unwrap().1);
    }

    #[test]
    fn oracle_examples() {
        let id = GMatrix::identity();
        assert_eq!(
            oracle_delta(&HankelSpec::new(id.clone(), 1, 0, &z("1/2"))).unwrap(),
            ScaledExact::new(s("1"), 1)
        );
        assert_eq!(
            oracle_delta(&HankelSpec::new(id.clone(), 2, 0, &z("2-1/3i"))).unwrap(),
            ScaledExact::new(s("1"), 2)
        );
        let point = z("2-1/3i");
        assert_eq!(
            oracle_delta(&HankelSpec::new(id.clone(), 1, 1, &point)).unwrap(),
            ScaledExact::new(ExactScalar::from(point.norm_sqr()) + s("1"), 1)
        );
        assert_eq!(
            oracle_delta(&HankelSpec::new(id, 3, 0, &point)),
            Err(DeterminantError::OracleRange { n: 3, s: 0 })
        );
    }
}
