//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! 4
//! 0 1
//! 0 3
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is the vertex count; every further non-empty
//! line is one edge `u v`. Writing always emits `u < v`, sorted.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::Graph;

pub fn read_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GraphError::Parse {
        line,
        reason: format!("bad vertex count {header:?}"),
    })?;

    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut fields = text.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(GraphError::Parse {
                line,
                reason: format!("expected two vertex ids, got {text:?}"),
            });
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| GraphError::Parse {
                line,
                reason: format!("bad vertex id {s:?}"),
            })
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    writeln!(out, "{}", g.order()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, theta_222};
    use proptest::prelude::*;

    #[test]
    fn reads_c4() {
        let g = read_edge_list("4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
        assert_eq!(g, cycle_graph(4).unwrap());
    }

    #[test]
    fn writes_theta_canonically() {
        assert_eq!(write_edge_list(&theta_222()), "5\n0 1\n0 2\n0 3\n1 4\n2 4\n3 4\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = read_edge_list("# header\n\n3\n# an edge\n0 2\n\n").unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn rejects() {
        assert!(matches!(read_edge_list("3\n0 0\n"), Err(GraphError::SelfLoop { vertex: 0 })));
        assert!(matches!(
            read_edge_list("3\n0 1\n1 0\n"),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            read_edge_list("3\n0 3\n"),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(read_edge_list(""), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(read_edge_list("x\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(read_edge_list("3\n0 1 2\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(read_edge_list("3\n0\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(read_edge_list("3\n0 -1\n"), Err(GraphError::Parse { line: 2, .. })));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..40).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges = pairs.zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let text = write_edge_list(&g);
            prop_assert_eq!(read_edge_list(&text).unwrap(), g);
        }
    }
}
