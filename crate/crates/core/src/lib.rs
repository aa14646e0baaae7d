//! Segment number and line cover number computations for planar graphs.
//!
//! A planar straight-line drawing of a graph can be measured by how few
//! segments (maximal collinear runs of edges) or lines (shared supporting
//! lines) it needs. This crate provides:
//!
//! * exact rational drawing primitives and drawing validation,
//! * exhaustive grid-search oracles for small instances,
//! * closed-form and constructive solvers for banana paths, trees and cycles,
//! * polynomial constraint formulas over drawing coordinates plus three
//!   decision strategies (grid completion, numeric search, SMT emission),
//! * line arrangement enumeration and the routing machinery built on it,
//! * fixed-parameter solvers for the segment number parameterized by the
//!   number of lines and by vertex cover number,
//! * file formats and SVG rendering used by the command line front end.

pub mod arrangement;
pub mod banana;
pub mod decide;
pub mod drawing;
pub mod file;
pub mod formula;
pub mod fpt;
pub mod geom;
pub mod graph;
pub mod ilp;
pub mod oracle;
pub mod routing;
pub mod svg;
pub mod vc;
