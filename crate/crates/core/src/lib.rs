//! Geometry and graph machinery for circle representations of 4-regular
//! planar multigraphs.
//!
//! A *circle representation* of a 4-regular plane (multi)graph is a set of
//! circles whose pairwise touching/crossing points realise the vertices and
//! whose arcs realise the edges. This crate provides:
//!
//! - [`geom`]: points, generalized circles (circle-or-line), intersection
//!   classification and Möbius transformations;
//! - [`chains`]: algebra of circles tangent to a common axis: tangent-circle
//!   constructions, four-chain gap laws, and the contradiction certificate
//!   showing the octuple touching configurations are unrealisable;
//! - [`solver`]: a deterministic multistart feasibility solver over
//!   axis-tangent configurations, used to probe residual floors;
//! - [`graphs`]: plane multigraphs with rotation systems, the base multigraph
//!   and 68-vertex counterexample constructions, gadget pruning, validation
//!   and multigraph isomorphism;
//! - [`representation`]: contact-graph extraction from circle sets,
//!   verification against a target multigraph, Möbius transport and SVG
//!   rendering.

pub mod chains;
pub mod geom;
pub mod graphs;
pub mod representation;
pub mod solver;
