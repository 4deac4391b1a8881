//! Exact computations on Stanley-Reisner rings of simplicial complexes.
//!
//! - [`complex`]: canonical complexes, links and stars, bistellar moves and
//!   seeded random walks.
//! - [`vectors`]: f-, h- and g-vectors, Macaulay pseudopowers, M-sequences.
//! - [`linalg`]: dense and sparse elimination over any [`Field`].
//! - [`homology`]: reduced Betti numbers and the manifold, sphere,
//!   Cohen-Macaulay, Buchsbaum and orientability tests.
//! - [`ring`]: linear systems of parameters and Artinian reductions with
//!   monomial bases and multiplication maps.
//! - [`lefschetz`]: weak Lefschetz searches, certificates, transfer across
//!   moves, and the manifold invariants `h'`, `h''`, `g''` and socles.
//! - [`toric`]: complete simplicial fans and their even Betti numbers.
//! - [`io`]: facet lists, JSON and certificates.
//!
//! Every computation is exact, over Q or a prime field chosen with
//! [`FieldSpec`], and every random choice is drawn from a seeded stream.

pub mod complex;
pub mod error;
pub mod field;
pub mod homology;
pub mod io;
pub mod lefschetz;
pub mod linalg;
pub mod ring;
pub mod toric;
pub mod vectors;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, ErrorClass, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
