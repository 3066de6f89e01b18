//! Lexicographic products `G[H]` and the structure of their dominating sets.
//!
//! Product vertices `(g, h)` are flattened to `g * |V(H)| + h`. A set of
//! product vertices is described by its projection `p_G(D)` onto `G` and its
//! fibers `p_{H,x}(D)` over each projected vertex `x`; [`ProductSet`] keeps both
//! views in sync.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::domination::{
    self, classify, enumerate_irreducible_dominating_sets_with_cap,
    enumerate_minimal_dominating_sets_with_cap, is_dominating, is_irreducible_dominating,
    is_minimal_dominating, require_cap, DEFAULT_CAP,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    g: Graph,
    h: Graph,
    flat: Graph,
}

pub fn lex_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let nh = h.n();
    let mut flat = Graph::empty(g.n() * nh);
    for (x1, x2) in g.edges() {
        for y1 in 0..nh {
            for y2 in 0..nh {
                flat.add_edge(x1 * nh + y1, x2 * nh + y2);
            }
        }
    }
    for x in 0..g.n() {
        for (y1, y2) in h.edges() {
            flat.add_edge(x * nh + y1, x * nh + y2);
        }
    }
    Ok(ProductGraph {
        g: g.clone(),
        h: h.clone(),
        flat,
    })
}

impl ProductGraph {
    pub fn base(&self) -> &Graph {
        &self.g
    }

    pub fn fiber_graph(&self) -> &Graph {
        &self.h
    }

    pub fn flat(&self) -> &Graph {
        &self.flat
    }

    /// Both factors have at least two vertices.
    pub fn is_nontrivial(&self) -> bool {
        self.g.n() >= 2 && self.h.n() >= 2
    }

    pub fn encode(&self, x: usize, y: usize) -> usize {
        x * self.h.n() + y
    }

    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v / self.h.n(), v % self.h.n())
    }

    pub fn empty_set(&self) -> ProductSet {
        ProductSet::empty(self.g.n(), self.h.n())
    }

    pub fn set_from_pairs<I>(&self, pairs: I) -> Result<ProductSet>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        ProductSet::from_pairs(self.g.n(), self.h.n(), pairs)
    }
}

/// A subset of `V(G) × V(H)` kept both flattened and as projection plus fibers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProductSet {
    nh: usize,
    flat: VertexSet,
    projection: VertexSet,
    fibers: Vec<VertexSet>,
}

impl std::fmt::Debug for ProductSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.pairs())
    }
}

/// `{(x,y),...}` in encoding order.
impl std::fmt::Display for ProductSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (i, (x, y)) in self.pairs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("}")
    }
}

impl Ord for ProductSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.flat.cmp(&other.flat)
    }
}

impl PartialOrd for ProductSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl ProductSet {
    pub fn empty(ng: usize, nh: usize) -> Self {
        ProductSet {
            nh,
            flat: VertexSet::empty(ng * nh),
            projection: VertexSet::empty(ng),
            fibers: vec![VertexSet::empty(nh); ng],
        }
    }

    pub fn from_pairs<I>(ng: usize, nh: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = Self::empty(ng, nh);
        for (x, y) in pairs {
            if x >= ng {
                return Err(Error::VertexOutOfRange { vertex: x, n: ng });
            }
            if y >= nh {
                return Err(Error::VertexOutOfRange { vertex: y, n: nh });
            }
            s.insert(x, y);
        }
        Ok(s)
    }

    pub fn from_flat(ng: usize, nh: usize, flat: &VertexSet) -> Self {
        assert_eq!(flat.universe(), ng * nh);
        let mut s = Self::empty(ng, nh);
        for v in flat {
            s.insert(v / nh, v % nh);
        }
        s
    }

    /// Rebuilds a set from its projection and fibers (the disjoint-union form).
    pub fn from_fibers(ng: usize, nh: usize, fibers: &BTreeMap<usize, VertexSet>) -> Result<Self> {
        let mut s = Self::empty(ng, nh);
        for (&x, fiber) in fibers {
            if x >= ng {
                return Err(Error::VertexOutOfRange { vertex: x, n: ng });
            }
            for y in fiber {
                if y >= nh {
                    return Err(Error::VertexOutOfRange { vertex: y, n: nh });
                }
                s.insert(x, y);
            }
        }
        Ok(s)
    }

    /// `base × fiber`.
    pub fn product(base: &VertexSet, fiber: &VertexSet) -> Self {
        let mut s = Self::empty(base.universe(), fiber.universe());
        for x in base {
            for y in fiber {
                s.insert(x, y);
            }
        }
        s
    }

    fn insert(&mut self, x: usize, y: usize) {
        self.flat.insert(x * self.nh + y);
        self.projection.insert(x);
        self.fibers[x].insert(y);
    }

    pub fn len(&self) -> usize {
        self.flat.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn flat(&self) -> &VertexSet {
        &self.flat
    }

    /// `p_G(D)`.
    pub fn projection(&self) -> &VertexSet {
        &self.projection
    }

    /// `p_{H,x}(D)`; empty when `x` is not projected.
    pub fn fiber(&self, x: usize) -> &VertexSet {
        &self.fibers[x]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.flat.iter().map(|v| (v / self.nh, v % self.nh)).collect()
    }

    /// Projection and the non-empty fibers keyed by base vertex.
    pub fn project(&self) -> (VertexSet, BTreeMap<usize, VertexSet>) {
        let fibers = self
            .projection
            .iter()
            .map(|x| (x, self.fibers[x].clone()))
            .collect();
        (self.projection.clone(), fibers)
    }
}

impl Serialize for ProductSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            flat: &'a VertexSet,
            pairs: Vec<(usize, usize)>,
        }
        View {
            flat: &self.flat,
            pairs: self.pairs(),
        }
        .serialize(serializer)
    }
}

/// Whether `d` dominates `(x, y)`: either `p_G(d)` totally dominates `x` in `G`,
/// or the fiber over `x` dominates `y` in `H`.
pub fn dominates_product_vertex(p: &ProductGraph, d: &ProductSet, x: usize, y: usize) -> bool {
    p.g.neighbors(x).intersects(d.projection()) || p.h.closed(y).intersects(d.fiber(x))
}

/// `p_G(d)` dominates `G`, and every vertex barely dominated by it carries a
/// fiber dominating `H`.
pub fn is_dominating_product(p: &ProductGraph, d: &ProductSet) -> bool {
    let proj = d.projection();
    if !is_dominating(&p.g, proj) {
        return false;
    }
    proj.iter()
        .filter(|&x| !p.g.neighbors(x).intersects(proj))
        .all(|x| is_dominating(&p.h, d.fiber(x)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    /// `p_G(D)` is an irreducible dominating set of `G`.
    pub cond_i: bool,
    /// Fibers are singletons over totally dominated vertices and minimal
    /// dominating sets of `H` over barely dominated ones.
    pub cond_ii: bool,
    /// Every `p_G(D)`-redundant vertex is adjacent to a `p_G(D)`-leaf whose
    /// fiber does not dominate `H`.
    pub cond_iii: bool,
    pub minimal: bool,
}

fn fiber_shape_ok(p: &ProductGraph, d: &ProductSet) -> bool {
    let proj = d.projection();
    proj.iter().all(|x| {
        let fiber = d.fiber(x);
        if p.g.neighbors(x).intersects(proj) {
            fiber.len() == 1
        } else {
            is_minimal_dominating(&p.h, fiber)
        }
    })
}

/// Redundancy condition with a general domination test on each leaf fiber.
pub fn redundancy_condition(p: &ProductGraph, d: &ProductSet) -> bool {
    let proj = d.projection();
    let leaves = domination::leaves(&p.g, proj);
    domination::redundant(&p.g, proj).iter().all(|x| {
        p.g.neighbors(x)
            .intersection(&leaves)
            .iter()
            .any(|y| !is_dominating(&p.h, d.fiber(y)))
    })
}

/// Same condition assuming singleton leaf fibers: the fiber vertex must not be universal in `H`.
pub fn redundancy_condition_singletons(p: &ProductGraph, d: &ProductSet) -> bool {
    let proj = d.projection();
    let leaves = domination::leaves(&p.g, proj);
    domination::redundant(&p.g, proj).iter().all(|x| {
        p.g.neighbors(x).intersection(&leaves).iter().any(|y| {
            let fiber = d.fiber(y);
            debug_assert_eq!(fiber.len(), 1);
            fiber.first().is_some_and(|h| !p.h.is_universal(h))
        })
    })
}

pub fn check_minimal_product(p: &ProductGraph, d: &ProductSet) -> MinimalityReport {
    let cond_i = is_irreducible_dominating(&p.g, d.projection());
    let cond_ii = fiber_shape_ok(p, d);
    let cond_iii = if cond_ii {
        redundancy_condition_singletons(p, d)
    } else {
        redundancy_condition(p, d)
    };
    MinimalityReport {
        cond_i,
        cond_ii,
        cond_iii,
        minimal: cond_i && cond_ii && cond_iii,
    }
}

/// Calls `visit` on every minimal dominating set of `G[H]`, assembled from an
/// irreducible dominating set `P` of `G` and a fiber choice per member of `P`.
/// Visit order is by `P` in canonical order, then fiber choices in canonical order.
pub fn for_each_minimal_dominating_set_product<F>(p: &ProductGraph, cap: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&ProductSet),
{
    require_cap(p.g.n(), cap)?;
    require_cap(p.h.n(), cap)?;
    let nh = p.h.n();
    let singletons: Vec<VertexSet> = (0..nh).map(|y| VertexSet::singleton(nh, y)).collect();
    let h_minimal = enumerate_minimal_dominating_sets_with_cap(&p.h, cap)?;
    let non_universal: Vec<bool> = (0..nh).map(|y| !p.h.is_universal(y)).collect();

    for base in enumerate_irreducible_dominating_sets_with_cap(&p.g, cap)? {
        let c = classify(&p.g, &base);
        let members = base.to_vec();
        let options: Vec<&[VertexSet]> = members
            .iter()
            .map(|&x| {
                if c.status[x].totally_dominated {
                    &singletons[..]
                } else {
                    &h_minimal[..]
                }
            })
            .collect();
        // For every redundant vertex, the leaves next to it.
        let guards: Vec<Vec<usize>> = c
            .redundant
            .iter()
            .map(|x| p.g.neighbors(x).intersection(&c.leaves).to_vec())
            .collect();
        let mut choice = vec![0usize; members.len()];
        loop {
            let fiber_of = |x: usize| {
                let i = members.binary_search(&x).unwrap();
                &options[i][choice[i]]
            };
            let guarded = guards.iter().all(|leaves| {
                leaves
                    .iter()
                    .any(|&y| fiber_of(y).first().is_some_and(|h| non_universal[h]))
            });
            if guarded {
                let mut d = ProductSet::empty(p.g.n(), nh);
                for (i, &x) in members.iter().enumerate() {
                    for y in options[i][choice[i]].iter() {
                        d.insert(x, y);
                    }
                }
                visit(&d);
            }
            if !advance(&mut choice, &options) {
                break;
            }
        }
    }
    Ok(())
}

/// Odometer step over fiber choices, last member fastest. False once it wraps.
fn advance(choice: &mut [usize], options: &[&[VertexSet]]) -> bool {
    for i in (0..choice.len()).rev() {
        choice[i] += 1;
        if choice[i] < options[i].len() {
            return true;
        }
        choice[i] = 0;
    }
    false
}

pub fn enumerate_minimal_dominating_sets_product(g: &Graph, h: &Graph) -> Result<Vec<ProductSet>> {
    enumerate_minimal_dominating_sets_product_with_cap(g, h, DEFAULT_CAP)
}

pub fn enumerate_minimal_dominating_sets_product_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Vec<ProductSet>> {
    let p = lex_product(g, h)?;
    let mut out = BTreeSet::new();
    for_each_minimal_dominating_set_product(&p, cap, |d| {
        out.insert(d.clone());
    })?;
    Ok(out.into_iter().collect())
}

/// `Γ(G[H])` from the constructive enumeration.
pub fn upper_gamma_product(g: &Graph, h: &Graph, cap: usize) -> Result<usize> {
    let p = lex_product(g, h)?;
    let mut best = 0;
    for_each_minimal_dominating_set_product(&p, cap, |d| best = best.max(d.len()))?;
    Ok(best)
}

/// `γ(G[H])` from the factor parameters, with `I` the isolated vertices of `G`:
/// `|V(G)|·γ(H)` when `G` is edgeless, `γ(G)` when `γ(H) = 1`, and
/// `γ_t(G - I) + |I|·γ(H)` otherwise.
pub fn gamma_product(g: &Graph, h: &Graph) -> Result<usize> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let gamma_h = domination::gamma(h)?;
    if g.is_edgeless() {
        return Ok(g.n() * gamma_h);
    }
    if gamma_h == 1 {
        return domination::gamma(g);
    }
    let isolated = g.isolated_vertices();
    let core = g.induced_subgraph(&isolated.complement());
    Ok(domination::gamma_t(&core)? + isolated.len() * gamma_h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UpperBoundCheck {
    /// `α(G)·Γ(H)`.
    pub bound: usize,
    /// `Γ(G[H])`.
    pub upper_gamma: usize,
    pub holds: bool,
}

pub fn upper_gamma_product_bound(g: &Graph, h: &Graph) -> Result<UpperBoundCheck> {
    upper_gamma_product_bound_with_cap(g, h, DEFAULT_CAP)
}

pub fn upper_gamma_product_bound_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<UpperBoundCheck> {
    let bound = domination::alpha(g)? * domination::upper_gamma_with_cap(h, cap)?;
    let upper_gamma = upper_gamma_product(g, h, cap)?;
    Ok(UpperBoundCheck {
        bound,
        upper_gamma,
        holds: upper_gamma >= bound,
    })
}
