//! Spreads, stars and isomorphism checks for regular factorial designs over
//! `PG(n - 1, 2)`.
//!
//! Effects are points of the projective geometry, written as letter strings
//! (`A` is the first basic factor). A spread partitions the points into
//! disjoint flats; a star is a family of rays meeting pairwise in a common
//! nucleus. Two designs are equivalent when their flats coincide as point
//! sets and isomorphic when a collineation (an invertible matrix over GF(2))
//! relabels one into the other.

pub mod catalog;
pub mod collineation;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod geometry;
pub mod gf2;
pub mod isomorphism;
pub mod signature;

pub use catalog::{catalog_search, v_criterion, Catalog, CatalogEntry, RankedDesign, Rational};
pub use collineation::{apply_collineation, collineation_from_basis_map, Collineation};
pub use error::{Error, Result};
pub use format::{parse_design, render_design};
pub use geometry::{build_star, cyclic_spread, Design, Flat, PrimitivePoly, Spread, Star, StarParams};
pub use gf2::{Gf2Matrix, Point};
pub use isomorphism::{
    check_spread_isomorphism, check_star_isomorphism, star_to_spread, IsoResult, SearchOptions,
};
pub use signature::{check_spread_equivalence, check_star_equivalence, DesignSignature};
