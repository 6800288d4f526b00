//! Exact combinatorics of generalized Cartan matrices and the flag-type
//! manifolds they describe.
//!
//! Everything here is integer or arbitrary-precision rational arithmetic;
//! there is no floating point anywhere in the crate. The crate is `no_std`
//! and only needs `alloc`.
//!
//! Node indices follow the usual Dynkin convention `D = {1, ..., n}`: every
//! public function that takes or returns node sets, words or error positions
//! uses 1-based indices. Raw matrix accessors such as
//! [`CartanMatrix::entry`] are 0-based.
//!
//! Modules:
//!
//! * [`cartan`]: matrices, Dynkin diagrams, the finite catalog and the
//!   finite/affine/indefinite classification.
//! * [`rootsys`]: positive roots, admissible sets, the height filtration and
//!   anticanonical coefficients.
//! * [`coxeter`]: Weyl group actions, reduced words and the 0-Hecke monoid.
//! * [`flags`]: marked diagrams, exposed short nodes and induction sequences.
//! * [`ftverify`]: ingestion and verdicts for intersection matrices.
//! * [`picard2`]: the exact rank-two numeric core.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod cartan;
pub mod coxeter;
pub mod flags;
pub mod ftverify;
pub mod linalg;
pub mod picard2;
pub mod rootsys;

pub use cartan::{
    catalog, classify, CartanError, CartanMatrix, CartanType, ClassificationVerdict, DynkinDiagram,
    Edge, Family, Kind,
};
pub use coxeter::{HeckeElement, WeylElement, WeylGroup, Word};
pub use flags::MarkedDiagram;
pub use ftverify::{FtError, FtReport};
pub use rootsys::{RootSystem, RootVector, WeightVector};

/// Sorted, deduplicated copy of a node list.
pub(crate) fn normalize_nodes(nodes: &[usize]) -> alloc::vec::Vec<usize> {
    let mut v = nodes.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}
