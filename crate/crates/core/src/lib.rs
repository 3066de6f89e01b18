//! Domination in graphs and in lexicographic products.
//!
//! Vertex sets are fixed-universe bitsets ([`VertexSet`]); graphs are simple
//! and undirected with vertices `0..n`. On top of that sit exact solvers for
//! the domination, total domination and independence numbers, minimal
//! transversal enumeration, constructive enumeration of the minimal dominating
//! sets of `G[H]`, and several well-dominated recognizers.
//!
//! ```
//! use lexdom::named::{cycle, path};
//! use lexdom::{domination, lex_product, lexicographic, recognition};
//!
//! let g = path(5);
//! assert_eq!(domination::gamma(&g)?, 2);
//!
//! let p = lex_product(&g, &path(3))?;
//! let d = p.set_from_pairs([(1, 1), (2, 0), (3, 1)])?;
//! assert!(!lexicographic::check_minimal_product(&p, &d).minimal);
//!
//! let r = recognition::is_well_dominated_lex(&path(4), &cycle(4))?;
//! assert!(!r.verdict);
//! # Ok::<(), lexdom::Error>(())
//! ```

pub mod domination;
pub mod error;
pub mod family;
pub mod graph;
pub mod hypergraph;
pub mod lexicographic;
pub mod recognition;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{named, parse_graph, write_edge_list, write_edge_list_with_comments, Graph};
pub use hypergraph::Hypergraph;
pub use lexicographic::{lex_product, MinimalityReport, ProductGraph, ProductSet};
pub use recognition::{Method, MethodChoice, RecognitionReport, RecognizeOptions, Witness};
pub use vertex_set::VertexSet;
