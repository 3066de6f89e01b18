//! Domination predicates, parameters and enumerators on a single graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Vertex count above which enumerators refuse to run unless given a larger cap.
pub const DEFAULT_CAP: usize = 24;

pub(crate) fn require_nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

pub(crate) fn require_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    (0..g.n()).all(|v| d.contains(v) || g.neighbors(v).intersects(d))
}

pub fn is_total_dominating(g: &Graph, d: &VertexSet) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).intersects(d))
}

/// Vertices `v` with `N[v] ∩ d = {u}`.
pub fn private_closed_neighbors(g: &Graph, d: &VertexSet, u: usize) -> Result<VertexSet> {
    if !d.contains(u) {
        return Err(Error::NotAMember { vertex: u });
    }
    Ok(private_unchecked(g, d, u))
}

fn private_unchecked(g: &Graph, d: &VertexSet, u: usize) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in g.closed(u).iter() {
        let others = g.neighbors(v).intersection_len(d) + usize::from(d.contains(v));
        if others == 1 {
            out.insert(v);
        }
    }
    out
}

fn has_private(g: &Graph, d: &VertexSet, u: usize) -> bool {
    g.closed(u).iter().any(|v| {
        let hits = g.neighbors(v).intersection_len(d) + usize::from(d.contains(v));
        hits == 1
    })
}

/// Members of `d` with exactly one neighbor in `d`.
pub fn leaves(g: &Graph, d: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for u in d {
        if g.neighbors(u).intersection_len(d) == 1 {
            out.insert(u);
        }
    }
    out
}

/// Members of `d` without a private closed neighbor.
pub fn redundant(g: &Graph, d: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for u in d {
        if !has_private(g, d, u) {
            out.insert(u);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexStatus {
    pub dominated: bool,
    pub totally_dominated: bool,
    pub barely_dominated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationClassification {
    pub set: VertexSet,
    pub status: Vec<VertexStatus>,
    pub leaves: VertexSet,
    pub redundant: VertexSet,
}

pub fn classify(g: &Graph, d: &VertexSet) -> DominationClassification {
    let status = (0..g.n())
        .map(|v| {
            let totally = g.neighbors(v).intersects(d);
            let dominated = totally || d.contains(v);
            VertexStatus {
                dominated,
                totally_dominated: totally,
                barely_dominated: dominated && !totally,
            }
        })
        .collect();
    DominationClassification {
        set: d.clone(),
        status,
        leaves: leaves(g, d),
        redundant: redundant(g, d),
    }
}

pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> bool {
    is_dominating(g, d) && d.iter().all(|u| has_private(g, d, u))
}

/// Every member has a private closed neighbor or is adjacent to a leaf of `d`.
pub fn is_irreducible_dominating(g: &Graph, d: &VertexSet) -> bool {
    if !is_dominating(g, d) {
        return false;
    }
    let leaves = leaves(g, d);
    d.iter()
        .all(|u| has_private(g, d, u) || g.neighbors(u).intersects(&leaves))
}

/// Irreducibility straight from the definition: no member `u` such that `d - u`
/// still dominates and `N(d - u) = N(d)`.
pub fn is_irreducible_by_definition(g: &Graph, d: &VertexSet) -> bool {
    if !is_dominating(g, d) {
        return false;
    }
    let open = g.set_neighborhood(d, false);
    !d.iter().any(|u| {
        let rest = d.without(u);
        is_dominating(g, &rest) && g.set_neighborhood(&rest, false) == open
    })
}

pub fn is_minimal_total_dominating(g: &Graph, d: &VertexSet) -> bool {
    is_total_dominating(g, d) && d.iter().all(|u| !is_total_dominating(g, &d.without(u)))
}

/// Removes members in ascending order while the set keeps dominating.
pub fn shrink_to_minimal(g: &Graph, d: &VertexSet) -> VertexSet {
    let mut d = d.clone();
    for u in d.to_vec() {
        let rest = d.without(u);
        if is_dominating(g, &rest) {
            d = rest;
        }
    }
    d
}

/// Extends an independent set greedily in ascending vertex order to a maximal one.
pub fn extend_to_maximal_independent(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut s = s.clone();
    for v in 0..g.n() {
        if !s.contains(v) && !g.neighbors(v).intersects(&s) {
            s.insert(v);
        }
    }
    s
}

/// Exact cover search: `k` vertices whose rows (closed or open neighborhoods)
/// cover every vertex. Branches on the lowest uncovered vertex.
fn find_cover(g: &Graph, closed: bool, covered: &VertexSet, chosen: &VertexSet, k: usize) -> Option<VertexSet> {
    let Some(u) = covered.complement().first() else {
        return Some(chosen.clone());
    };
    if k == 0 {
        return None;
    }
    let candidates = if closed {
        g.closed(u)
    } else {
        g.neighbors(u).clone()
    };
    for c in candidates.iter() {
        if chosen.contains(c) {
            continue;
        }
        let mut next_cov = covered.union(g.neighbors(c));
        if closed {
            next_cov.insert(c);
        }
        if let Some(found) = find_cover(g, closed, &next_cov, &chosen.with(c), k - 1) {
            return Some(found);
        }
    }
    None
}

fn greedy_cover(g: &Graph, closed: bool) -> VertexSet {
    let n = g.n();
    let row = |v: usize| {
        if closed {
            g.closed(v)
        } else {
            g.neighbors(v).clone()
        }
    };
    let mut covered = VertexSet::empty(n);
    let mut chosen = VertexSet::empty(n);
    while !covered.is_full() {
        let best = (0..n)
            .max_by_key(|&v| (row(v).difference(&covered).len(), std::cmp::Reverse(v)))
            .expect("non-empty graph");
        chosen.insert(best);
        covered.union_with(&row(best));
    }
    chosen
}

fn minimum_cover(g: &Graph, closed: bool) -> VertexSet {
    let upper = greedy_cover(g, closed);
    let empty = VertexSet::empty(g.n());
    for k in 1..upper.len() {
        if let Some(found) = find_cover(g, closed, &empty, &empty, k) {
            return found;
        }
    }
    upper
}

pub fn minimum_dominating_set(g: &Graph) -> Result<VertexSet> {
    require_nonempty(g)?;
    Ok(minimum_cover(g, true))
}

pub fn gamma(g: &Graph) -> Result<usize> {
    minimum_dominating_set(g).map(|d| d.len())
}

pub fn minimum_total_dominating_set(g: &Graph) -> Result<VertexSet> {
    require_nonempty(g)?;
    if let Some(vertex) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex { vertex });
    }
    Ok(minimum_cover(g, false))
}

pub fn gamma_t(g: &Graph) -> Result<usize> {
    minimum_total_dominating_set(g).map(|d| d.len())
}

pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet> {
    require_nonempty(g)?;
    let mut best = VertexSet::empty(g.n());
    mis_branch(g, &g.vertices(), &VertexSet::empty(g.n()), &mut best);
    Ok(best)
}

fn mis_branch(g: &Graph, cands: &VertexSet, current: &VertexSet, best: &mut VertexSet) {
    if current.len() + cands.len() <= best.len() {
        return;
    }
    // Branch on the closed neighborhood of a minimum-degree candidate.
    let Some(v) = cands
        .iter()
        .min_by_key(|&v| (g.neighbors(v).intersection_len(cands), v))
    else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    };
    for w in g.closed(v).intersection(cands).iter() {
        let rest = cands.difference(&g.closed(w));
        mis_branch(g, &rest, &current.with(w), best);
    }
}

pub fn alpha(g: &Graph) -> Result<usize> {
    maximum_independent_set(g).map(|s| s.len())
}

pub fn enumerate_minimal_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_minimal_dominating_sets_with_cap(g, DEFAULT_CAP)
}

pub fn enumerate_minimal_dominating_sets_with_cap(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    require_nonempty(g)?;
    require_cap(g.n(), cap)?;
    Hypergraph::closed_neighborhoods(g).enumerate_minimal_transversals()
}

pub fn upper_gamma(g: &Graph) -> Result<usize> {
    upper_gamma_with_cap(g, DEFAULT_CAP)
}

pub fn upper_gamma_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let all = enumerate_minimal_dominating_sets_with_cap(g, cap)?;
    Ok(all.iter().map(VertexSet::len).max().unwrap_or(0))
}

pub fn enumerate_minimal_total_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_minimal_total_dominating_sets_with_cap(g, DEFAULT_CAP)
}

pub fn enumerate_minimal_total_dominating_sets_with_cap(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    require_nonempty(g)?;
    require_cap(g.n(), cap)?;
    if let Some(vertex) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex { vertex });
    }
    Hypergraph::open_neighborhoods(g).enumerate_minimal_transversals()
}

pub fn enumerate_irreducible_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_irreducible_dominating_sets_with_cap(g, DEFAULT_CAP)
}

/// Include/exclude search over vertices in ascending order. A vertex's
/// domination is settled once its closed neighborhood is decided, and a
/// member's irreducibility certificate once its distance-2 ball is decided;
/// branches failing either test are cut there.
pub fn enumerate_irreducible_dominating_sets_with_cap(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    require_nonempty(g)?;
    require_cap(g.n(), cap)?;
    let n = g.n();
    let mut settle_domination = vec![Vec::new(); n];
    let mut settle_member = vec![Vec::new(); n];
    for v in 0..n {
        let closed = g.closed(v);
        settle_domination[closed.iter().last().unwrap()].push(v);
        let ball = g.set_neighborhood(&closed, true);
        settle_member[ball.iter().last().unwrap()].push(v);
    }
    let search = IrreducibleSearch {
        g,
        settle_domination,
        settle_member,
    };
    let mut out = Vec::new();
    search.run(0, VertexSet::empty(n), &mut out);
    out.sort();
    Ok(out)
}

struct IrreducibleSearch<'a> {
    g: &'a Graph,
    settle_domination: Vec<Vec<usize>>,
    settle_member: Vec<Vec<usize>>,
}

impl IrreducibleSearch<'_> {
    fn run(&self, i: usize, d: VertexSet, out: &mut Vec<VertexSet>) {
        if i == self.g.n() {
            out.push(d);
            return;
        }
        let with = d.with(i);
        if self.consistent(i, &with) {
            self.run(i + 1, with, out);
        }
        if self.consistent(i, &d) {
            self.run(i + 1, d, out);
        }
    }

    fn consistent(&self, i: usize, d: &VertexSet) -> bool {
        let g = self.g;
        if !self.settle_domination[i]
            .iter()
            .all(|&v| d.contains(v) || g.neighbors(v).intersects(d))
        {
            return false;
        }
        self.settle_member[i].iter().all(|&u| {
            !d.contains(u)
                || has_private(g, d, u)
                || g
                    .neighbors(u)
                    .iter()
                    .any(|y| d.contains(y) && g.neighbors(y).intersection_len(d) == 1)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn dominating_and_total() {
        let p5 = path(5);
        assert!(is_dominating(&p5, &set(5, &[1, 3])));
        assert!(!is_dominating(&p5, &set(5, &[0, 1])));
        assert!(is_dominating(&p5, &p5.vertices()));
        assert!(is_total_dominating(&p5, &set(5, &[1, 2, 3])));
        assert!(!is_total_dominating(&p5, &set(5, &[1, 3])));
        assert!(!is_total_dominating(&complete(2), &set(2, &[0])));
    }

    #[test]
    fn classification() {
        let p5 = path(5);
        let c = classify(&p5, &set(5, &[0, 2, 4]));
        for v in [0, 2, 4] {
            assert!(c.status[v].barely_dominated);
        }
        assert!(c.leaves.is_empty());
        assert!(c.redundant.is_empty());

        let c = classify(&complete(3), &set(3, &[0, 1]));
        assert!(c.status[0].totally_dominated && c.status[1].totally_dominated);
        assert_eq!(c.leaves, set(3, &[0, 1]));
        assert_eq!(c.redundant, set(3, &[0, 1]));

        let c = classify(&p5, &set(5, &[1, 2, 3]));
        assert_eq!(c.leaves, set(5, &[1, 3]));
        assert_eq!(c.redundant, set(5, &[2]));
        for s in &c.status {
            assert_eq!(s.barely_dominated, s.dominated && !s.totally_dominated);
        }
    }

    #[test]
    fn private_neighbors() {
        let p5 = path(5);
        assert_eq!(
            private_closed_neighbors(&p5, &set(5, &[1, 3]), 1).unwrap(),
            set(5, &[0, 1])
        );
        assert!(private_closed_neighbors(&complete(3), &set(3, &[0, 1]), 0)
            .unwrap()
            .is_empty());
        assert_eq!(
            private_closed_neighbors(&p5, &set(5, &[2]), 2).unwrap(),
            set(5, &[1, 2, 3])
        );
        assert_eq!(
            private_closed_neighbors(&p5, &set(5, &[2]), 1),
            Err(Error::NotAMember { vertex: 1 })
        );
    }

    #[test]
    fn minimality_predicates() {
        assert!(is_minimal_dominating(&prism(), &set(6, &[0, 2, 4])));
        assert!(!is_minimal_dominating(&path(5), &set(5, &[1, 2, 3])));
        assert!(is_minimal_dominating(&cycle(4), &set(4, &[0, 1])));

        assert!(is_minimal_total_dominating(&path(5), &set(5, &[1, 2, 3])));
        assert!(is_minimal_total_dominating(&cycle(4), &set(4, &[0, 1])));
        assert!(!is_minimal_total_dominating(&path(5), &set(5, &[1, 2, 3, 4])));
    }

    #[test]
    fn irreducibility() {
        let k3 = complete(3);
        assert!(!is_irreducible_dominating(&k3, &k3.vertices()));
        assert!(is_irreducible_dominating(&k3, &set(3, &[0, 1])));
        assert!(is_irreducible_dominating(&path(5), &set(5, &[0, 2, 4])));
        assert!(!is_irreducible_dominating(&path(5), &set(5, &[0, 1])));
        for d in crate::vertex_set::subsets_up_to(5, 5) {
            assert_eq!(
                is_irreducible_dominating(&path(5), &d),
                is_irreducible_by_definition(&path(5), &d),
                "{d}"
            );
        }
    }

    #[test]
    fn parameters_of_p5() {
        let p5 = path(5);
        assert_eq!(gamma(&p5).unwrap(), 2);
        assert_eq!(gamma_t(&p5).unwrap(), 3);
        assert_eq!(upper_gamma(&p5).unwrap(), 3);
        assert_eq!(alpha(&p5).unwrap(), 3);
        for n in 1..6 {
            assert_eq!(gamma(&complete(n)).unwrap(), 1);
        }
        assert_eq!(gamma(&edgeless(4)).unwrap(), 4);
        assert_eq!(alpha(&edgeless(4)).unwrap(), 4);
        assert_eq!(alpha(&cycle(7)).unwrap(), 3);
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(gamma(&Graph::empty(0)), Err(Error::EmptyGraph));
        assert_eq!(
            gamma_t(&Graph::from_edges(3, [(0, 1)]).unwrap()),
            Err(Error::IsolatedVertex { vertex: 2 })
        );
        assert_eq!(
            enumerate_minimal_dominating_sets_with_cap(&path(5), 4),
            Err(Error::CapExceeded { n: 5, cap: 4 })
        );
    }

    #[test]
    fn minimal_dominating_enumeration() {
        let c4 = enumerate_minimal_dominating_sets(&cycle(4)).unwrap();
        assert_eq!(c4.len(), 6);
        assert!(c4.iter().all(|d| d.len() == 2));
        let p5 = enumerate_minimal_dominating_sets(&path(5)).unwrap();
        assert!(p5.contains(&set(5, &[1, 3])));
        assert!(p5.contains(&set(5, &[0, 2, 4])));
        assert_eq!(
            enumerate_minimal_dominating_sets(&complete(3)).unwrap(),
            vec![set(3, &[0]), set(3, &[1]), set(3, &[2])]
        );
    }

    #[test]
    fn irreducible_enumeration_in_complete_graphs() {
        let k3 = enumerate_irreducible_dominating_sets(&complete(3)).unwrap();
        assert_eq!(k3.len(), 6);
        assert!(k3.iter().all(|d| d.len() <= 2));
    }

    #[test]
    fn minimal_total_enumeration() {
        let p5 = enumerate_minimal_total_dominating_sets(&path(5)).unwrap();
        assert_eq!(p5, vec![set(5, &[1, 2, 3]), set(5, &[0, 1, 3, 4])]);
        assert!(enumerate_minimal_total_dominating_sets(&edgeless(2)).is_err());
    }

    #[test]
    fn shrink_and_extend() {
        let p5 = path(5);
        assert_eq!(shrink_to_minimal(&p5, &p5.vertices()), set(5, &[1, 4]));
        assert_eq!(
            extend_to_maximal_independent(&p5, &set(5, &[1])),
            set(5, &[1, 3])
        );
    }
}
