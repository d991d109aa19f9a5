//! Exact constructions of quasi-fractal sets and the index data attached to
//! their loops.
//!
//! * [`cantor`]: corner-squares Cantor dust with retained square boundaries.
//! * [`planar`]: Sierpinski carpet and gasket with their complement pieces.
//! * [`spatial`]: cube-wireframe and tetrahedral constructions in space.
//! * [`topology`]: winding numbers and index vectors of loops.
//! * [`toeplitz`]: Laurent-polynomial symbols, winding by two methods, and
//!   Fredholm indices of the corresponding Toeplitz operators.
//! * [`export`]: JSON documents, SVG and OBJ output.
//! * [`cli`]: the command-line front end used by the `quasifractal` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cantor;
pub mod cli;
mod components;
pub mod error;
pub mod export;
pub mod geom;
pub mod planar;
pub mod spatial;
pub mod toeplitz;
pub mod topology;

pub use error::{Error, Result};
pub use geom::{Loop, Point2, Point3, Rational, Segment, Segment2, Segment3};
