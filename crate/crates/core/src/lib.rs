//! Exact counting of generalized vertex colorings on trees.
//!
//! * [`treelib`]: trees, canonical codes, free-tree enumeration.
//! * [`schemes`]: validity predicates for each coloring scheme.
//! * [`counting`]: pruned exhaustive counting plus closed forms, generic over
//!   the count type.
//! * [`extremal`]: census over all free trees and extremal-tree verification.
//! * [`cli`]: the `treecount` command-line front end.

pub mod cli;
pub mod counting;
pub mod extremal;
pub mod schemes;
pub mod treelib;

pub use counting::{Count, CountError};
pub use schemes::{Coloring, Scheme};
pub use treelib::{CanonicalCode, Tree};

/// Count type used by census records and the command line.
pub type CountValue = u128;

/// Arbitrary-precision count, for closed forms beyond 128 bits.
pub type BigCount = num_bigint::BigUint;

/// Native 64-bit count; enough for every brute-force search within budget.
pub type SmallCount = u64;
