//! Light spanners for weighted undirected graphs.
//!
//! [`lightsp::construct`] turns any sparse spanner algorithm into one whose
//! total weight is close to the minimum spanning tree's. The crate also
//! provides the black boxes it plugs in ([`blackbox`]), a simulation of the
//! two-pass streaming variant ([`streamsim`]), and exact checkers for
//! stretch, size and lightness ([`verify`]).

pub mod backbone;
pub mod blackbox;
pub mod error;
pub mod graph;
pub mod lightsp;
pub mod shortest_path;
pub mod stats;
pub mod streamsim;
pub mod unionfind;
pub mod verify;

pub use backbone::{build_backbone, build_mst, Backbone};
pub use error::{Error, ParseError, Result};
pub use graph::{generate, parse_graph, serialize_graph, Edge, EdgeRef, GeneratorSpec, WeightedGraph};
pub use lightsp::{construct, Params, SpannerResult, Variant};
pub use stats::Stats;
pub use streamsim::{run_stream, StreamHarness, StreamResult};
pub use unionfind::UnionFind;
pub use verify::{measure, verify_hop_stretch, verify_stretch, VerificationReport};
