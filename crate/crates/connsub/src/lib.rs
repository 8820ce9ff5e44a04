//! Exact enumeration of connected induced subgraphs on small graphs, the
//! complementary counting identities that govern them, and exhaustive
//! extremal searches over labeled graphs, trees, and unicyclic graphs.

pub mod eta;
pub mod families;
pub mod gen;
pub mod graph;
pub mod guide;
pub mod io;
pub mod laws;

pub use eta::{EtaError, EtaProfile, NgReport};
pub use families::{FamilyError, FamilySpec};
pub use gen::{GenError, GraphClassSpec};
pub use io::{emit_graph6, parse_graph6, Graph6Error};
pub use laws::{
    Certificate, ExtremalReport, LawError, LawReport, SearchOptions, Violation,
};
pub use graph::{CanonicalForm, Diameter, Graph, GraphError, VertexSet};
