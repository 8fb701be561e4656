//! Compiles the listings of the guide in `book/src` as doctests, so the book
//! cannot drift from the library. mdbook itself cannot link against
//! workspace crates.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/hermite.md")]
pub mod hermite {}
#[doc = include_str!("../../../book/src/integrals.md")]
pub mod integrals {}
#[doc = include_str!("../../../book/src/determinants.md")]
pub mod determinants {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
