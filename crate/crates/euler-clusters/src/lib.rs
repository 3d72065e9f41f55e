//! Exact distributions of consecutive block patterns in column-increasing
//! fillings, computed two independent ways: brute-force enumeration and
//! cluster-method generating functions.
//!
//! A diagram is a row of columns: an optional prefix column of height `i`,
//! `n` body columns of height `k`, and an optional suffix column of height
//! `j`. A filling places `1..=total_cells` so every column increases upward.
//! Fillings may additionally be restricted so that every adjacent pair of
//! columns satisfies a [`combi::ColumnRelation`]. The library computes the
//! polynomial distribution of marked consecutive pattern blocks over such
//! fillings, the associated cluster polynomials (plain and generalized), and
//! the exponential-generating-function quotients that tie the two together.

pub mod clusters;
pub mod combi;
pub mod egf;
pub mod error;
pub mod families;
pub mod oracle;
pub mod poset;

pub use combi::{ColumnRelation, DiagramShape, Filling, Pattern, PatternSet};
pub use egf::{EgfSeries, MultiPoly};
pub use error::{Error, Result};
pub use poset::CellPoset;
