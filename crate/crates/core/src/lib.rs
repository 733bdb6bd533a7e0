//! Hereditary graph classes on at most 64 vertices: recognizers for split,
//! threshold, cograph, chordal and (p,q)-split graphs, the edge-add,
//! edge-apex and vertex-apex operators, canonical labelling, isomorph-free
//! generation, and exhaustive search for minimal forbidden induced
//! subgraphs. A [`matroid`] module carries the same questions over to
//! GF(2) and GF(3) matroids of small rank.
//!
//! ```
//! use hereditary::classes::HereditaryClass;
//! use hereditary::graph::named;
//! use hereditary::obstructions::is_minimal_obstruction;
//! use hereditary::operators::OperatorSpec;
//!
//! let edge_add_split = OperatorSpec::edge_add(HereditaryClass::Split);
//! assert!(is_minimal_obstruction(&named::c5(), &edge_add_split));
//! ```

pub mod canon;
pub mod classes;
pub mod cli;
pub mod error;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod matroid;
pub mod obstructions;
pub mod operators;

pub use canon::{canonical_form, canonical_key, dedup, is_isomorphic, CanonicalForm, CanonicalKey, IsoClasses};
pub use classes::{GraphClass, HereditaryClass};
pub use error::{Error, GraphError, Result};
pub use graph::{Edit, Graph, VertexSet};
pub use operators::OperatorSpec;
