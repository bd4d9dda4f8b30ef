//! Deformed local Weyl modules over `gl_r ⊗ C<X,Y>` (with `YX − XY = X`),
//! their wedge-monomial bases, bigraded characters, and the matching
//! combinatorics: ρ-parking functions, Schur expansions via the Frobenius
//! map, and truncated charge sectors of the semi-infinite wedge.
//!
//! Everything is exact: arbitrary-precision integers for counts and
//! big rationals for linear algebra. All containers are ordered, so every
//! enumeration and every character comes out in a deterministic order.
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI and file formats live
//! in the companion `weylpark-cli` crate.
//!
//! ```
//! use weylpark_core::combinatorics::Partition;
//! use weylpark_core::degeneration::bigraded_character;
//! use weylpark_core::wedge::cyclic_closure;
//!
//! let xi = Partition::new([2, 0]);
//! let basis = cyclic_closure(&xi, 2, 2);
//! assert_eq!(basis.dimension(), 5);
//!
//! let ch = bigraded_character(&xi, 2); // checks N-independence itself
//! assert!(ch.is_xy_symmetric());
//! assert_eq!(ch.total_dimension(), 5);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod combinatorics;
pub mod degeneration;
pub mod fock;
pub mod poly;
pub mod series;
pub mod symfunc;
pub mod wedge;

pub use arith::{Int, Rat};
pub use combinatorics::{Partition, WeightVector};
