//! Exact computation of the total Roman {2}-domination number and five
//! related domination parameters, the graph families and gadgets they are
//! studied on, a constructive generator for the trees where the total Roman
//! {2} and total Roman numbers coincide, and a falsification harness that
//! checks the known bounds and characterizations on concrete graphs.
//!
//! ```
//! use trdom::families::{self, FamilySpec};
//! use trdom::solver::{self, Parameter};
//!
//! let square = families::build(&FamilySpec::Cycle(4)).unwrap();
//! let result = solver::exact(&square, Parameter::TotalRoman2).unwrap();
//! assert_eq!(result.value, Some(3));
//! assert_eq!(result.witness.unwrap().values(), &[0, 1, 1, 1]);
//! ```

pub mod bitset;
pub mod canon;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod labeling;
pub mod report;
pub mod solver;
pub mod theorems;
pub mod tree_family;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use labeling::Labeling;
pub use solver::{Parameter, SolveResult};
