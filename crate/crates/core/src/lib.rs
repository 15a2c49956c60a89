//! Exact computation in cluster categories of Dynkin type A and their abelian
//! quotients by a cluster tilting subcategory.
//!
//! The crate builds, from a quiver file, the module category of the path
//! algebra, the bounded derived category at desk scale, and the cluster
//! category as an orbit category; on top of those it enumerates cluster
//! tilting and support tilting subcategories and machine-checks the
//! projection/lifting correspondence between them. All arithmetic is exact
//! rational; every report is deterministic.

pub mod clustercat;
pub mod dercat;
pub mod error;
pub mod linalg;
pub mod quiver;
pub mod quotient;
pub mod repcat;
pub mod report;
pub mod tiltlab;

pub use error::Error;
