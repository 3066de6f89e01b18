//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! The edge-list text format read by [`parse_graph`] and written by
//! [`write_edge_list`]:
//!
//! ```text
//! # comment lines start with '#'
//! 5 4
//! 0 1
//! 1 2
//! 2 3
//! 3 4
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and out-of-range ends.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidArgument(format!("duplicate edge {{{u},{v}}}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `{u, v}` if absent. Panics on out-of-range vertices or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Closed neighborhood `N[v]`. Panics if `v` is out of range.
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::InvalidArgument(format!(
                "vertex set over {} vertices used with a graph on {}",
                s.universe(),
                self.n
            )));
        }
        Ok(())
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].clone())
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    /// `N[S]` when `closed`, else `N(S)`.
    pub fn neighborhood_of_set(&self, s: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.set_neighborhood(s, closed))
    }

    pub(crate) fn set_neighborhood(&self, s: &VertexSet, closed: bool) -> VertexSet {
        let mut out = if closed {
            s.clone()
        } else {
            VertexSet::empty(self.n)
        };
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `s`, relabelled to `0..|s|` in ascending order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let members = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for v in self.adj[u].iter() {
                let j = index[v];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components ordered by their minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n, start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !comp.contains(v) {
                        comp.insert(v);
                        stack.push(v);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.adj[v].is_empty() {
                out.insert(v);
            }
        }
        out
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.adj[v].len() + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }

    /// Whether `s` is a clique.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(&self.adj[v]))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// All 3-cliques in lexicographic order.
    pub fn enumerate_triangles(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.adj[a].iter().filter(|&b| b > a) {
                let common = self.adj[a].intersection(&self.adj[b]);
                for c in common.iter().filter(|&c| c > b) {
                    out.push(VertexSet::from_members(self.n, [a, b, c]).unwrap());
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|a| {
            self.adj[a]
                .iter()
                .filter(|&b| b > a)
                .all(|b| !self.adj[a].intersects(&self.adj[b]))
        })
    }

    /// Whether `t ∪ t2` induces the complement of `C6`: both are triangles and the
    /// edges between them form a perfect matching.
    pub fn induces_c6_complement(&self, t: &VertexSet, t2: &VertexSet) -> Result<bool> {
        self.check_set(t)?;
        self.check_set(t2)?;
        if t.len() != 3 || t2.len() != 3 {
            return Err(Error::InvalidArgument(format!(
                "expected two 3-sets, got sizes {} and {}",
                t.len(),
                t2.len()
            )));
        }
        if t.intersects(t2) {
            return Err(Error::InvalidArgument(format!("{t} and {t2} overlap")));
        }
        if !self.is_clique(t) || !self.is_clique(t2) {
            return Ok(false);
        }
        let matching = t.iter().all(|v| self.adj[v].intersection_len(t2) == 1)
            && t2.iter().all(|v| self.adj[v].intersection_len(t) == 1);
        Ok(matching)
    }
}

/// Parses the edge-list format. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two integers, found {:?}", l),
            });
        }
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("not a non-negative integer: {s:?}"),
            })
        };
        Ok((num(fields[0])?, num(fields[1])?))
    };

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut g = Graph::empty(n);
    let mut last_line = header_line;
    for (line, l) in lines {
        last_line = line;
        if g.edge_count() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("edge {u} {v}: index out of range for {n} vertices"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {u} {v}"),
            });
        }
        g.add_edge(u, v);
    }
    if g.edge_count() != m {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!("declared {m} edges, found {}", g.edge_count()),
        });
    }
    Ok(g)
}

/// Writes the edge-list format with edges sorted lexicographically.
pub fn write_edge_list(g: &Graph) -> String {
    write_edge_list_with_comments(g, &[])
}

pub fn write_edge_list_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Small named graphs used throughout the tests and the verification harness.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::empty(n)
    }

    /// Complement of `C6` on `0..6`: triangles `{0,2,4}`, `{1,3,5}` and the matching `03, 14, 25`.
    pub fn prism() -> Graph {
        cycle(6).complement()
    }

    /// Two copies of `K_n` on `0..n` and `n..2n`, joined by the matching `i ~ i+n`.
    pub fn twin_cliques(n: usize) -> Graph {
        let mut g = Graph::empty(2 * n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
                g.add_edge(u + n, v + n);
            }
            g.add_edge(u, u + n);
        }
        g
    }
}
