//! Command line front end: input parsing, JSON reports, SVG rendering and
//! the randomized batch harness.

pub mod batch;
pub mod parse;
pub mod report;
pub mod sides;
pub mod svg;
