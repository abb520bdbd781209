//! Exact computational backend for identities in framed pure braid groups,
//! their group-ring congruences, and the classical invariant-theory
//! dimension counts attached to them.
//!
//! Everything is exact: free-group words, integer framings, rational
//! series coefficients, integer Laurent characters. No floating point.

pub mod braid;
pub mod free_group;
pub mod invariant;
pub mod series;
