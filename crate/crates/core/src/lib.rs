//! Exact symbolic kernel for deformed enveloping algebras of `so_N`.
//!
//! Everything here is computed over arbitrary-precision rationals; there is no
//! floating point anywhere and every identity check is a zero-tolerance
//! comparison of canonical forms. The crate is `no_std` (with `alloc`): all
//! IO, JSON and CLI plumbing lives in the companion `sohecke-cli` crate.
//!
//! Layout:
//! - [`rat`], [`vars`], [`poly`], [`series`]: coefficient field, interned
//!   variables, sparse multivariate polynomials, truncated Laurent series.
//! - [`matrix`]: dense matrices over an exact ring, plus rational linear
//!   algebra (RREF, kernels, determinants, triangular solves).
//! - [`so_lie`]: concrete realizations of `so(V_N, B)` for configurable
//!   symmetric forms, characteristic data, Pfaffians, rational rotations.
//! - [`enveloping`]: PBW normal forms in `U(so_N) ⋉ T(V_N)[ζ]` and the
//!   symmetrization map.
//! - [`hecke`]: the generator series `γ_{2j+1}` / `r_{2j+1}`, admissible
//!   pairing families, the Jacobiator obstruction and the Pfaffian pairing.
//! - [`poisson`]: the deformed Poisson structure on `S(so_N ⊕ V_N)` and its
//!   center generators.
//! - [`casimir`]: the deformed Casimir element `t_1 + C` and its coefficient
//!   recursion.
//! - [`slodowy`]: nilpotent slice linear algebra (sl2 triples, centralizers,
//!   gradings, restricted invariants).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod casimir;
pub mod enveloping;
pub mod error;
pub mod hecke;
pub mod matrix;
pub mod poisson;
pub mod poly;
pub mod rat;
pub mod series;
pub mod slodowy;
pub mod so_lie;
pub mod vars;

pub use error::Error;
pub use poly::Poly;
pub use rat::Rat;
pub use series::TruncSeries;
pub use vars::Var;
