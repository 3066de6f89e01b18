//! Hypergraphs and their minimal transversals.
//!
//! Minimal transversals of the closed-neighborhood hypergraph of a graph are
//! exactly its minimal dominating sets, so this module doubles as the
//! enumeration backend for [`crate::domination`].

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{k_subsets, subsets_up_to, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Hyperedges must lie inside `0..n`. Empty hyperedges are accepted here and
    /// rejected by the operations that cannot handle them.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for e in &edges {
            if e.universe() != n {
                return Err(Error::InvalidArgument(format!(
                    "hyperedge {e} is over {} vertices, expected {n}",
                    e.universe()
                )));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let edges = lists
            .iter()
            .map(|l| VertexSet::from_members(n, l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, edges)
    }

    /// The Sperner-reduced closed-neighborhood hypergraph of `g`.
    pub fn closed_neighborhoods(g: &Graph) -> Hypergraph {
        let edges = (0..g.n()).map(|v| g.closed(v)).collect();
        Hypergraph { n: g.n(), edges }.sperner_reduce()
    }

    /// The Sperner-reduced open-neighborhood hypergraph of `g`; its minimal
    /// transversals are the minimal total dominating sets.
    pub fn open_neighborhoods(g: &Graph) -> Hypergraph {
        let edges = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
        Hypergraph { n: g.n(), edges }.sperner_reduce()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.universe() != self.n {
            return Err(Error::InvalidArgument(format!(
                "set over {} vertices used with a hypergraph on {}",
                x.universe(),
                self.n
            )));
        }
        Ok(())
    }

    fn check_nonempty_edges(&self) -> Result<()> {
        match self.edges.iter().position(|e| e.is_empty()) {
            Some(index) => Err(Error::EmptyHyperedge { index }),
            None => Ok(()),
        }
    }

    fn check_sperner(&self) -> Result<()> {
        for (i, a) in self.edges.iter().enumerate() {
            for (j, b) in self.edges.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::NotSperner {
                        contained: i,
                        container: j,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_sperner(&self) -> bool {
        self.check_sperner().is_ok()
    }

    fn hits_all(&self, x: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(x))
    }

    pub fn is_transversal(&self, x: &VertexSet) -> Result<bool> {
        self.check_set(x)?;
        Ok(self.hits_all(x))
    }

    /// Single-vertex deletions suffice since transversality is monotone.
    pub fn is_minimal_transversal(&self, x: &VertexSet) -> Result<bool> {
        self.check_set(x)?;
        Ok(self.minimal_unchecked(x))
    }

    fn minimal_unchecked(&self, x: &VertexSet) -> bool {
        self.hits_all(x) && x.iter().all(|v| !self.hits_all(&x.without(v)))
    }

    /// Keeps the inclusion-minimal hyperedges, deduplicated, in canonical order.
    pub fn sperner_reduce(&self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: minimize(self.edges.iter().cloned().collect()),
        }
    }

    /// All minimal transversals in canonical order, by Berge multiplication.
    pub fn enumerate_minimal_transversals(&self) -> Result<Vec<VertexSet>> {
        self.check_nonempty_edges()?;
        let mut order: Vec<&VertexSet> = self.edges.iter().collect();
        order.sort();
        let mut family = vec![VertexSet::empty(self.n)];
        for edge in order {
            let (hit, missed): (Vec<VertexSet>, Vec<VertexSet>) =
                family.into_iter().partition(|t| t.intersects(edge));
            let mut next: BTreeSet<VertexSet> = hit.iter().cloned().collect();
            for t in &missed {
                for v in edge {
                    let candidate = t.with(v);
                    // only sets that already hit the edge can be contained in a candidate
                    if !hit.iter().any(|h| h.is_subset(&candidate)) {
                        next.insert(candidate);
                    }
                }
            }
            family = minimize(next);
        }
        family.sort();
        Ok(family)
    }

    /// All minimal transversals of size at most `k`, by exhaustive subset scan.
    pub fn minimal_transversals_up_to_size(&self, k: usize) -> Vec<VertexSet> {
        subsets_up_to(self.n, k)
            .filter(|x| self.minimal_unchecked(x))
            .collect()
    }

    /// Decides whether every minimal transversal has exactly `k` elements.
    ///
    /// Returns `Ok(None)` when they all do, otherwise the first counterexample in
    /// canonical search order. A transversal of size below `k` is found by a size-increasing
    /// scan (so the first hit is minimum). Otherwise the size-`k` minimal transversals
    /// are collected and a transversal avoiding all of them is searched for by
    /// backtracking; when found it is shrunk to a minimal transversal larger than `k`.
    pub fn all_minimal_transversals_have_size(&self, k: usize) -> Result<Option<VertexSet>> {
        self.check_nonempty_edges()?;
        self.check_sperner()?;

        for size in 0..k {
            if let Some(x) = k_subsets(self.n, size).find(|x| self.hits_all(x)) {
                return Ok(Some(x));
            }
        }
        let exact: Vec<VertexSet> = k_subsets(self.n, k)
            .filter(|x| self.minimal_unchecked(x))
            .collect();

        let mut search = AvoidingSearch {
            hyper: self,
            forbidden: &exact,
        };
        let found = search.run(VertexSet::empty(self.n), VertexSet::empty(self.n));
        Ok(found.map(|x| self.shrink(x)))
    }

    /// Drops vertices in ascending order while the set stays a transversal.
    fn shrink(&self, mut x: VertexSet) -> VertexSet {
        for v in x.to_vec() {
            let smaller = x.without(v);
            if self.hits_all(&smaller) {
                x = smaller;
            }
        }
        x
    }

    /// Hyperedge-list text: `"n m"` then one line of members per hyperedge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for e in &self.edges {
            let members: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", members.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.starts_with('#'));
        let numbers = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("not a non-negative integer: {t:?}"),
                    })
                })
                .collect()
        };
        let (hl, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or(Error::Parse {
                line: 1,
                message: "missing \"n m\" header".into(),
            })?;
        let head = numbers(hl, header)?;
        let [n, m] = head[..] else {
            return Err(Error::Parse {
                line: hl,
                message: "expected \"n m\"".into(),
            });
        };
        let mut edges = Vec::with_capacity(m);
        let mut last = hl;
        for (line, l) in lines.take(m) {
            last = line;
            let members = numbers(line, l)?;
            let e = VertexSet::from_members(n, members).map_err(|_| Error::Parse {
                line,
                message: format!("member out of range for {n} vertices"),
            })?;
            edges.push(e);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: last + 1,
                message: format!("declared {m} hyperedges, found {}", edges.len()),
            });
        }
        Ok(Hypergraph { n, edges })
    }
}

/// Inclusion-minimal members of a family, sorted canonically.
fn minimize(family: BTreeSet<VertexSet>) -> Vec<VertexSet> {
    // BTreeSet order is by size first, so each set only needs checking
    // against the already accepted (smaller or equal) ones.
    let mut kept: Vec<VertexSet> = Vec::with_capacity(family.len());
    for s in family {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

struct AvoidingSearch<'a> {
    hyper: &'a Hypergraph,
    forbidden: &'a [VertexSet],
}

impl AvoidingSearch<'_> {
    /// Looks for a transversal containing `chosen`, disjoint from `banned`,
    /// that contains no forbidden set.
    fn run(&mut self, chosen: VertexSet, banned: VertexSet) -> Option<VertexSet> {
        let Some(edge) = self.hyper.edges.iter().find(|e| !e.intersects(&chosen)) else {
            return Some(chosen);
        };
        let mut banned = banned;
        for v in edge.difference(&banned).iter() {
            let next = chosen.with(v);
            if !self.forbidden.iter().any(|f| f.is_subset(&next)) {
                if let Some(found) = self.run(next, banned.clone()) {
                    return Some(found);
                }
            }
            banned.insert(v);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{cycle, path};

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    fn triangle() -> Hypergraph {
        Hypergraph::from_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    #[test]
    fn transversal_predicates() {
        let h = triangle();
        assert!(h.is_transversal(&set(3, &[0, 1])).unwrap());
        assert!(h.is_minimal_transversal(&set(3, &[0, 1])).unwrap());
        assert!(h.is_transversal(&set(3, &[0, 1, 2])).unwrap());
        assert!(!h.is_minimal_transversal(&set(3, &[0, 1, 2])).unwrap());
        assert!(!h.is_transversal(&VertexSet::empty(3)).unwrap());
        assert!(h.is_transversal(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn sperner_reduction() {
        let h = Hypergraph::from_lists(3, &[&[0], &[0, 1], &[1, 2]]).unwrap();
        assert_eq!(h.sperner_reduce().edges(), &[set(3, &[0]), set(3, &[1, 2])]);
        let t = triangle().sperner_reduce();
        assert_eq!(t.sperner_reduce(), t);
        let p3 = Hypergraph {
            n: 3,
            edges: (0..3).map(|v| path(3).closed(v)).collect(),
        };
        assert_eq!(p3.sperner_reduce().edges(), &[set(3, &[0, 1]), set(3, &[1, 2])]);
    }

    #[test]
    fn berge_enumeration() {
        assert_eq!(
            triangle().enumerate_minimal_transversals().unwrap(),
            vec![set(3, &[0, 1]), set(3, &[0, 2]), set(3, &[1, 2])]
        );
        let single = Hypergraph::from_lists(1, &[&[0]]).unwrap();
        assert_eq!(single.enumerate_minimal_transversals().unwrap(), vec![set(1, &[0])]);
        let c4 = Hypergraph::closed_neighborhoods(&cycle(4));
        let mds = c4.enumerate_minimal_transversals().unwrap();
        assert_eq!(mds.len(), 6);
        assert!(mds.iter().all(|d| d.len() == 2));
        let empty_edge = Hypergraph::new(2, vec![VertexSet::empty(2)]).unwrap();
        assert_eq!(
            empty_edge.enumerate_minimal_transversals(),
            Err(Error::EmptyHyperedge { index: 0 })
        );
        let no_edges = Hypergraph::new(3, vec![]).unwrap();
        assert_eq!(no_edges.enumerate_minimal_transversals().unwrap(), vec![VertexSet::empty(3)]);
    }

    #[test]
    fn bounded_scan() {
        assert!(triangle().minimal_transversals_up_to_size(1).is_empty());
        assert_eq!(triangle().minimal_transversals_up_to_size(2).len(), 3);
        assert!(triangle().minimal_transversals_up_to_size(0).is_empty());
        let no_edges = Hypergraph::new(2, vec![]).unwrap();
        assert_eq!(no_edges.minimal_transversals_up_to_size(0), vec![VertexSet::empty(2)]);
    }

    #[test]
    fn uniform_size_decision() {
        let c4 = Hypergraph::closed_neighborhoods(&cycle(4));
        assert_eq!(c4.all_minimal_transversals_have_size(2).unwrap(), None);
        let p5 = Hypergraph::closed_neighborhoods(&path(5));
        assert_eq!(
            p5.all_minimal_transversals_have_size(2).unwrap(),
            Some(set(5, &[0, 2, 4]))
        );
        let single = Hypergraph::from_lists(1, &[&[0]]).unwrap();
        assert_eq!(single.all_minimal_transversals_have_size(1).unwrap(), None);
        // size below k is reported as the minimum transversal
        assert_eq!(
            p5.all_minimal_transversals_have_size(3).unwrap(),
            Some(set(5, &[0, 3]))
        );
        let not_sperner = Hypergraph::from_lists(2, &[&[0], &[0, 1]]).unwrap();
        assert!(matches!(
            not_sperner.all_minimal_transversals_have_size(1),
            Err(Error::NotSperner { .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let h = triangle();
        let text = h.to_text();
        assert_eq!(text, "3 3\n0 1\n1 2\n0 2\n");
        assert_eq!(Hypergraph::parse(&text).unwrap(), h);
        assert!(Hypergraph::parse("3 1\n0 3\n").is_err());
        assert!(Hypergraph::parse("3 2\n0 1\n").is_err());
    }
}
