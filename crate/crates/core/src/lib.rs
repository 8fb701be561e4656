//! Exact construction and verification of bivariate complex Hermite
//! polynomials `H[m,n](z1, z2)` and their deformed variants `H[m,n]^g`.
//!
//! All arithmetic happens in ℚ(i, √2) ([`exact::ExactScalar`]); Gaussian
//! integrals carry their powers of π symbolically
//! ([`integrate::ScaledExact`]). No identity in this crate is checked with a
//! floating-point tolerance.

pub mod determinant;
pub mod error;
pub mod exact;
pub mod hermite;
pub mod integrate;
pub mod poly;
pub mod report;
pub mod suites;

pub use determinant::{ExactMatrix, HankelSpec};
pub use error::{DeterminantError, ExactError, HermiteError, IntegrateError, PolyError};
pub use exact::{ExactScalar, GaussianRational, Sign};
pub use hermite::{DeformationMatrix, GMatrix, MatrixKind};
pub use integrate::{IdentityCheck, OrthResult, ScaledExact};
pub use poly::{AffineMap, LinearForm, Monomial, SparsePoly, Variable};
pub use report::{Params, VerificationReport};
pub use suites::{RunConfig, SuiteId};
