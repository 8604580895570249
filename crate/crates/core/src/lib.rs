//! Exact computations in the book Hopf algebras `H(p, s)`.
//!
//! `H(p, s)` is generated by `g, x, y` over `Q(ζ_p)` subject to
//! `gx = q xg`, `gy = q^-s yg`, `xy = q^-s yx`, `g^p = 1`, `x^p = y^p = 0`.
//! The crate verifies its Hopf axioms exhaustively and finds every modular
//! pair in involution `(l, β)` by brute force, cross-checked against the
//! congruences that characterize them.

pub mod checks;
pub mod cli;
pub mod cyclotomic;
pub mod hopf;
pub mod mpi;
pub mod pbw;

pub use cyclotomic::{CycError, CycScalar, CyclotomicField};
pub use hopf::{BookAlgebra, Generator, HopfError};
pub use pbw::{Element, Monomial, PbwAlgebra, PbwKey, SparseSum, Tensor2, Tensor3};
