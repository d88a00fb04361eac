//! Finite quasigroups and loops as Cayley tables.
//!
//! The crate decides the central identities
//!
//! * LC: `(xx)(yz) = (x(xy))z`
//! * RC: `(zy)(xx) = z((yx)x)`
//! * C:  `x(y(yz)) = ((xy)y)z`
//!
//! together with their characterizations through autotopisms, regular
//! bijections and closure of the representation sets `Π_λ`, `Π_ρ`. It can
//! rebuild a loop from a few generators of `Π_ρ` and sample shaped isotopes
//! `(A, B, B)` / `(A, B, A)` to check which identities survive.
//!
//! Elements are always the indices `0..n`. Permutations act on the right and
//! compose left to right; see [`perm`].

pub mod catalog;
pub mod error;
pub mod isotopy;
pub mod perm;
pub mod permfile;
pub mod properties;
pub mod regular;
pub mod report;
pub mod representation;
pub mod table;

pub use error::{Error, Result};
pub use perm::{PermSet, Permutation, TopismTriple};
pub use properties::Verdict;
pub use report::PropertyReport;
pub use table::CayleyTable;

/// Largest supported loop order.
pub const MAX_ORDER: usize = 64;
