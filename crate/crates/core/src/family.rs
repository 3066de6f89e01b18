//! Test families: every graph up to isomorphism on a few vertices, and seeded
//! random graphs.
//!
//! Exhaustive generation adds one vertex at a time to every graph of the
//! previous order, in every possible way, and keeps one representative per
//! canonical form. Canonical forms come from colour refinement followed by a
//! search over orderings that respect the refined cells.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Largest order the canonical-form code supports (edge bits must fit in a `u64`).
pub const MAX_CANONICAL_N: usize = 11;

/// Adjacency rows as bitmasks; used only inside this module.
fn rows_of(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).to_mask()).collect()
}

fn graph_of(rows: &[u64]) -> Graph {
    let n = rows.len();
    let mut g = Graph::empty(n);
    for (u, row) in rows.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Upper-triangle adjacency bits of `rows` relabelled by `order` (position -> vertex).
fn code(rows: &[u64], order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = (c << 1) | (rows[order[i]] >> order[j] & 1);
        }
    }
    c
}

/// Ordered partition of the vertices refined until neighbour counts into every
/// cell are constant on each cell.
fn refine(rows: &[u64]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut cells: Vec<Vec<usize>> = vec![(0..n).collect()];
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let signature = |v: usize| -> Vec<u32> {
            masks.iter().map(|m| (rows[v] & m).count_ones()).collect()
        };
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn best_code(rows: &[u64], cells: &[Vec<usize>], idx: usize, order: &mut Vec<usize>, best: &mut u64) {
    if idx == cells.len() {
        *best = (*best).max(code(rows, order));
        return;
    }
    let mut cell = cells[idx].clone();
    permute(&mut cell, 0, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        best_code(rows, cells, idx + 1, order, best);
        order.truncate(len);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Isomorphism-invariant code: `(n, max adjacency code over cell-respecting orders)`.
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    assert!(g.n() <= MAX_CANONICAL_N, "canonical codes support at most {MAX_CANONICAL_N} vertices");
    let rows = rows_of(g);
    let cells = refine(&rows);
    let mut best = 0;
    best_code(&rows, &cells, 0, &mut Vec::with_capacity(g.n()), &mut best);
    (g.n(), best)
}

/// Rebuilds the canonical representative from a code.
fn graph_from_code(n: usize, c: u64) -> Graph {
    let mut g = Graph::empty(n);
    let total = n * n.saturating_sub(1) / 2;
    let mut bit = total;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if c >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// One canonical representative per isomorphism class on exactly `n` vertices,
/// ordered by canonical code.
fn graphs_of_order(prev: &[Graph], n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut codes = BTreeSet::new();
    for g in prev {
        let base = rows_of(g);
        for nb in 0u64..1 << (n - 1) {
            let mut rows = base.clone();
            rows.push(nb);
            for (v, row) in rows.iter_mut().enumerate().take(n - 1) {
                *row |= (nb >> v & 1) << (n - 1);
            }
            codes.insert(canonical_code(&graph_of(&rows)).1);
        }
    }
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// Every graph on `1..=max_n` vertices up to isomorphism, by order then canonical code.
pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut layer = vec![Graph::empty(0)];
    for n in 1..=max_n {
        layer = graphs_of_order(&layer, n);
        out.extend(layer.iter().cloned());
    }
    out
}

/// Like [`all_graphs`], but reuses a cache file at `path` when it holds the same family.
pub fn all_graphs_cached(max_n: usize, path: &Path) -> io::Result<Vec<Graph>> {
    if let Ok(text) = fs::read_to_string(path) {
        if let Some(graphs) = decode_cache(&text, max_n) {
            return Ok(graphs);
        }
    }
    let graphs = all_graphs(max_n);
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, encode_cache(&graphs, max_n))?;
    Ok(graphs)
}

fn encode_cache(graphs: &[Graph], max_n: usize) -> String {
    let mut out = format!("graph-family {max_n} {}\n", graphs.len());
    for g in graphs {
        let (n, c) = canonical_code(g);
        out.push_str(&format!("{n} {c:x}\n"));
    }
    out
}

fn decode_cache(text: &str, max_n: usize) -> Option<Vec<Graph>> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next()?.split_whitespace().collect();
    if header.len() != 3 || header[0] != "graph-family" || header[1].parse::<usize>().ok()? != max_n {
        return None;
    }
    let count: usize = header[2].parse().ok()?;
    let graphs: Vec<Graph> = lines
        .map(|l| {
            let (n, c) = l.split_once(' ')?;
            Some(graph_from_code(n.parse().ok()?, u64::from_str_radix(c, 16).ok()?))
        })
        .collect::<Option<_>>()?;
    (graphs.len() == count).then_some(graphs)
}

/// Connected members of a family.
pub fn connected(graphs: &[Graph]) -> Vec<Graph> {
    graphs.iter().filter(|g| g.is_connected()).cloned().collect()
}

/// Seeded random graphs with each edge present with a fixed probability.
pub struct RandomGraphs {
    rng: ChaCha8Rng,
    edge_probability: f64,
}

impl RandomGraphs {
    pub fn new(seed: u64) -> Self {
        RandomGraphs {
            rng: ChaCha8Rng::seed_from_u64(seed),
            edge_probability: 0.5,
        }
    }

    pub fn with_probability(seed: u64, edge_probability: f64) -> Self {
        RandomGraphs {
            rng: ChaCha8Rng::seed_from_u64(seed),
            edge_probability,
        }
    }

    pub fn graph(&mut self, n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.rng.gen_bool(self.edge_probability) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// A graph whose order is drawn uniformly from `min_n..=max_n`.
    pub fn graph_in(&mut self, min_n: usize, max_n: usize) -> Graph {
        let n = self.rng.gen_range(min_n..=max_n);
        self.graph(n)
    }

    /// Draws until `accept` holds.
    pub fn graph_where(&mut self, min_n: usize, max_n: usize, accept: impl Fn(&Graph) -> bool) -> Graph {
        loop {
            let g = self.graph_in(min_n, max_n);
            if accept(&g) {
                return g;
            }
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn counts_match_known_graph_counts() {
        // number of graphs on n unlabeled vertices: 1, 2, 4, 11, 34, 156
        let all = all_graphs(6);
        let counts: Vec<usize> = (1..=6).map(|n| all.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let c6 = cycle(6);
        let relabelled = Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert_eq!(canonical_code(&c6), canonical_code(&relabelled));
        assert_ne!(canonical_code(&c6), canonical_code(&prism()));
        let (n, c) = canonical_code(&prism());
        assert_eq!(canonical_code(&graph_from_code(n, c)), (n, c));
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("lexdom-family-test-{}", std::process::id()));
        let path = dir.join("family.txt");
        let first = all_graphs_cached(5, &path).unwrap();
        let second = all_graphs_cached(5, &path).unwrap();
        assert_eq!(first, second);
        assert_eq!(first, all_graphs(5));
        let _ = fs::remove_dir_all(dir);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a: Vec<Graph> = {
            let mut r = RandomGraphs::new(7);
            (0..5).map(|_| r.graph_in(1, 9)).collect()
        };
        let b: Vec<Graph> = {
            let mut r = RandomGraphs::new(7);
            (0..5).map(|_| r.graph_in(1, 9)).collect()
        };
        assert_eq!(a, b);
    }
}
