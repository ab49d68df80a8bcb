//! Exact path decompositions of small simple graphs, the addible-set
//! transformation calculus, SET/ESET constructions and batch verification
//! of Gallai-type bounds.
//!
//! ```
//! use gallai::graph::SimpleGraph;
//! use gallai::solver::pn_exact;
//!
//! let k5 = SimpleGraph::complete(5);
//! let r = pn_exact(&k5, 10_000);
//! assert_eq!(r.pn, 3);
//! ```

pub mod decomposition;
pub mod graph;
pub mod io;
pub mod solver;
pub mod transforms;
pub mod set_eset;
pub mod generators;
pub mod harness;
