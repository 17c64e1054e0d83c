//! Exact toughness, Bondy–Chvátal style closures, degree-sequence conditions
//! and Hamiltonian cycle machinery for graphs on at most 64 vertices.

pub mod closure;
pub mod degree;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod hamiltonicity;
pub mod limits;
pub mod rational;
pub mod toughness;

pub use closure::{bc_closure, t_closure, ClosureResult, LemmaVerdict, Outcome};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use limits::Limits;
pub use rational::Rational;
pub use toughness::{toughness, Toughness, ToughnessReport};
