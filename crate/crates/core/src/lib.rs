//! Exact spectral theory of the operator
//!
//! ```text
//! T = ½ Σ_{a+b=p+q} x_a x_b ∂_p ∂_q
//! ```
//!
//! on the polynomial algebra `F = Q[x_1, x_2, ...]`, identified with
//! symmetric functions through `x_k = p_k / k`.
//!
//! `F` is bigraded by weighted degree (`deg x_k = k`) and length
//! (`len x_k = 1`); `T` preserves both gradings. On each finite-dimensional
//! piece `F(d, ℓ)` the crate builds:
//!
//! * the monomial basis and the basis `S(d, ℓ)` of products of the
//!   bihomogeneous functions `g(d, ℓ)` indexed by Young diagrams
//!   ([`genfun`]);
//! * the matrix of `T` in either basis, triangular in `S(d, ℓ)`
//!   ([`spectral`]);
//! * the exact integer spectrum, eigenvectors and an orthogonal eigenbasis
//!   for the factorial-weighted scalar product.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals.
//!
//! ```
//! use bihomogeneous::spectral::spectrum;
//!
//! let report = spectrum(12, 4).unwrap();
//! assert_eq!(
//!     report.eigenvalues(),
//!     vec![1, 3, 3, 5, 6, 7, 7, 10, 10, 10, 13, 15, 17, 19, 30]
//! );
//! ```

pub mod cli;
pub mod error;
pub mod genfun;
pub mod linalg;
pub mod operator;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use genfun::{g_poly, GCombination, GIndex, GProduct};
pub use operator::{apply_t, apply_t_structural, straighten_pair};
pub use partition::{hook_leg_profile, profile_to_partition, Partition};
pub use poly::{inner_product, Bidegree, Monomial, Polynomial};
pub use rational::Rational;
pub use spectral::{spectrum, SpectrumReport};
