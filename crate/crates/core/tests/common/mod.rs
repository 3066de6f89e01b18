//! Brute-force reference implementations over `u64` masks.
//!
//! Nothing here calls the library's algorithms; graphs are read only through
//! `n()` and `has_edge`, and every answer comes from scanning subsets.

#![allow(dead_code)]

use lexdom::{Graph, VertexSet};

/// Adjacency rows as bitmasks.
#[derive(Clone, Debug)]
pub struct Adj {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.n();
        assert!(n <= 63);
        let rows = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && g.has_edge(u, v)).fold(0u64, |m, v| m | 1 << v))
            .collect();
        Adj { n, rows }
    }

    /// `G[H]` straight from the definition, vertex `(x, y)` at `x * |V(H)| + y`.
    pub fn lex(g: &Graph, h: &Graph) -> Adj {
        let (ng, nh) = (g.n(), h.n());
        let n = ng * nh;
        assert!(n <= 63);
        let mut rows = vec![0u64; n];
        for x1 in 0..ng {
            for y1 in 0..nh {
                for x2 in 0..ng {
                    for y2 in 0..nh {
                        let adjacent = (x1 != x2 && g.has_edge(x1, x2)) || (x1 == x2 && y1 != y2 && h.has_edge(y1, y2));
                        if adjacent {
                            rows[x1 * nh + y1] |= 1 << (x2 * nh + y2);
                        }
                    }
                }
            }
        }
        Adj { n, rows }
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn closed(&self, v: usize) -> u64 {
        self.rows[v] | 1 << v
    }

    pub fn open_of(&self, s: u64) -> u64 {
        members(s).fold(0, |acc, v| acc | self.rows[v])
    }

    pub fn closed_of(&self, s: u64) -> u64 {
        s | self.open_of(s)
    }

    pub fn dominating(&self, s: u64) -> bool {
        self.closed_of(s) == self.all()
    }

    pub fn total_dominating(&self, s: u64) -> bool {
        self.open_of(s) == self.all()
    }

    pub fn independent(&self, s: u64) -> bool {
        members(s).all(|v| self.rows[v] & s == 0)
    }

    pub fn minimal_dominating(&self, s: u64) -> bool {
        self.dominating(s) && members(s).all(|u| !self.dominating(s & !(1 << u)))
    }

    pub fn minimal_total_dominating(&self, s: u64) -> bool {
        self.total_dominating(s) && members(s).all(|u| !self.total_dominating(s & !(1 << u)))
    }

    /// Dominating, and no member can be dropped while keeping domination and the open neighbourhood.
    pub fn irreducible(&self, s: u64) -> bool {
        if !self.dominating(s) {
            return false;
        }
        let open = self.open_of(s);
        members(s).all(|u| {
            let t = s & !(1 << u);
            !(self.dominating(t) && self.open_of(t) == open)
        })
    }

    pub fn maximal_independent(&self, s: u64) -> bool {
        self.independent(s) && self.dominating(s)
    }

    pub fn subsets(&self) -> impl Iterator<Item = u64> {
        0..=self.all()
    }

    pub fn minimal_dominating_sets(&self) -> Vec<u64> {
        self.subsets().filter(|&s| self.minimal_dominating(s)).collect()
    }

    pub fn min_size(&self, pred: impl Fn(u64) -> bool) -> Option<usize> {
        self.subsets().filter(|&s| pred(s)).map(|s| s.count_ones() as usize).min()
    }

    pub fn max_size(&self, pred: impl Fn(u64) -> bool) -> Option<usize> {
        self.subsets().filter(|&s| pred(s)).map(|s| s.count_ones() as usize).max()
    }

    pub fn gamma(&self) -> usize {
        self.smallest_of_size(|s| self.dominating(s)).unwrap()
    }

    pub fn gamma_t(&self) -> Option<usize> {
        self.smallest_of_size(|s| self.total_dominating(s))
    }

    pub fn alpha(&self) -> usize {
        self.max_size(|s| self.independent(s)).unwrap()
    }

    pub fn upper_gamma(&self) -> usize {
        self.max_size(|s| self.minimal_dominating(s)).unwrap()
    }

    pub fn well_dominated(&self) -> bool {
        let sizes: Vec<u32> = self.minimal_dominating_sets().iter().map(|s| s.count_ones()).collect();
        sizes.iter().min() == sizes.iter().max()
    }

    pub fn well_covered(&self) -> bool {
        let sizes: Vec<u32> = self.subsets().filter(|&s| self.maximal_independent(s)).map(|s| s.count_ones()).collect();
        sizes.iter().min() == sizes.iter().max()
    }

    /// Smallest set satisfying an upward-closed predicate, scanning by size.
    fn smallest_of_size(&self, pred: impl Fn(u64) -> bool) -> Option<usize> {
        (0..=self.n).find(|&k| sets_of_size(self.n, k).any(&pred))
    }
}

pub fn members(s: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| s >> i & 1 == 1)
}

/// All `k`-element masks over `0..n`, by Gosper's hack.
pub fn sets_of_size(n: usize, k: usize) -> Box<dyn Iterator<Item = u64>> {
    if k == 0 {
        return Box::new(std::iter::once(0));
    }
    if k > n {
        return Box::new(std::iter::empty());
    }
    let limit = 1u64 << n;
    let mut cur = Some((1u64 << k) - 1);
    Box::new(std::iter::from_fn(move || {
        let s = cur?;
        let c = s & s.wrapping_neg();
        let r = s + c;
        let next = (((r ^ s) >> 2) / c) | r;
        cur = (next < limit).then_some(next);
        Some(s)
    }))
}

pub fn mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |acc, v| acc | 1 << v)
}

pub fn set(n: usize, m: u64) -> VertexSet {
    VertexSet::from_members(n, members(m)).unwrap()
}

/// Minimal transversals of a mask hypergraph, by subset scan.
pub fn minimal_transversals(n: usize, edges: &[u64]) -> Vec<u64> {
    let hits = |s: u64| edges.iter().all(|e| e & s != 0);
    (0u64..1 << n)
        .filter(|&s| hits(s) && members(s).all(|v| !hits(s & !(1 << v))))
        .collect()
}

/// Inclusion-minimal members, sorted and deduplicated.
pub fn minimal_members(edges: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = edges
        .iter()
        .copied()
        .filter(|&e| !edges.iter().any(|&f| f != e && f & e == f))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether the subgraph induced on `verts` (in order) is the triangular prism, by trying every bijection.
pub fn induces_prism(g: &Graph, verts: &[usize]) -> bool {
    // two triangles 0-1-2 and 3-4-5, matched i ~ i+3
    let prism = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        (a < 3 && b < 3) || (a >= 3 && b >= 3) || b == a + 3
    };
    let mut perm: Vec<usize> = (0..6).collect();
    loop {
        let ok = (0..6).all(|i| (0..6).all(|j| i == j || g.has_edge(verts[perm[i]], verts[perm[j]]) == prism(i, j)));
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Graphs on `min_n..=max_n` vertices with every edge set equally likely.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// A graph together with a subset of its vertices, as a mask.
pub fn arb_graph_and_set(min_n: usize, max_n: usize) -> impl proptest::strategy::Strategy<Value = (Graph, u64)> {
    use proptest::prelude::*;
    arb_graph(min_n, max_n).prop_flat_map(|g| {
        let all = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
        (Just(g), any::<u64>().prop_map(move |m| m & all))
    })
}
