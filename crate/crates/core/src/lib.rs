//! Exact-arithmetic toolkit for the representation theory of Hecke algebras
//! of classical type.
//!
//! The crate has two halves that meet in the command-line tool:
//!
//! * combinatorial engines: Laurent polynomial arithmetic ([`exactpoly`]),
//!   bipartition combinatorics ([`partitions`]), the level-2 crystal graph
//!   ([`crystal`]), and the v-deformed Fock space with its canonical basis
//!   and decomposition matrices ([`fock`]);
//! * finite-dimensional algebra machinery: quiver classification and wild
//!   subquiver detection ([`quiver`]), path-algebra quotients ([`pathalg`]),
//!   string modules and Auslander-Reiten translates ([`strings`]), and the
//!   Poincare-polynomial representation-type classifiers ([`classify`]).
//!
//! Everything is exact: coefficients are arbitrary-precision integers (or
//! rationals inside the path-algebra elimination) and no floating point is
//! used anywhere.

pub mod classify;
pub mod crystal;
pub mod exactpoly;
pub mod fixtures;
pub mod fock;
pub mod partitions;
pub mod pathalg;
pub mod quiver;
pub mod reptype;
pub mod strings;

pub use reptype::RepType;
