//! Subset-scan references for `verify`. Reads graphs only through `has_edge`.

use lexdom::{Graph, VertexSet};

pub struct Adj {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.n();
        let rows = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && g.has_edge(u, v)).fold(0u64, |m, v| m | 1 << v))
            .collect();
        Adj { n, rows }
    }

    pub fn lex(g: &Graph, h: &Graph) -> Adj {
        let (ng, nh) = (g.n(), h.n());
        let mut rows = vec![0u64; ng * nh];
        for (a, row) in rows.iter_mut().enumerate() {
            let (x1, y1) = (a / nh, a % nh);
            for b in 0..ng * nh {
                let (x2, y2) = (b / nh, b % nh);
                if (x1 != x2 && g.has_edge(x1, x2)) || (x1 == x2 && y1 != y2 && h.has_edge(y1, y2)) {
                    *row |= 1 << b;
                }
            }
        }
        Adj { n: ng * nh, rows }
    }

    pub fn all(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn closed(&self, v: usize) -> u64 {
        self.rows[v] | 1 << v
    }

    fn open_of(&self, s: u64) -> u64 {
        bits(s).fold(0, |m, v| m | self.rows[v])
    }

    pub fn dominating(&self, s: u64) -> bool {
        (s | self.open_of(s)) == self.all()
    }

    pub fn total_dominating(&self, s: u64) -> bool {
        self.open_of(s) == self.all()
    }

    pub fn independent(&self, s: u64) -> bool {
        bits(s).all(|v| self.rows[v] & s == 0)
    }

    pub fn minimal_dominating(&self, s: u64) -> bool {
        self.dominating(s) && bits(s).all(|u| !self.dominating(s & !(1 << u)))
    }

    pub fn minimal_total_dominating(&self, s: u64) -> bool {
        self.total_dominating(s) && bits(s).all(|u| !self.total_dominating(s & !(1 << u)))
    }

    pub fn irreducible(&self, s: u64) -> bool {
        let open = self.open_of(s);
        self.dominating(s)
            && bits(s).all(|u| {
                let t = s & !(1 << u);
                !(self.dominating(t) && self.open_of(t) == open)
            })
    }

    pub fn minimal_dominating_sets(&self) -> Vec<u64> {
        (0..=self.all()).filter(|&s| self.minimal_dominating(s)).collect()
    }

    pub fn gamma(&self) -> usize {
        (0..=self.all()).filter(|&s| self.dominating(s)).map(|s| s.count_ones() as usize).min().unwrap()
    }

    pub fn gamma_t(&self) -> Option<usize> {
        (0..=self.all()).filter(|&s| self.total_dominating(s)).map(|s| s.count_ones() as usize).min()
    }

    pub fn alpha(&self) -> usize {
        (0..=self.all()).filter(|&s| self.independent(s)).map(|s| s.count_ones() as usize).max().unwrap()
    }

    pub fn upper_gamma(&self) -> usize {
        self.minimal_dominating_sets().iter().map(|s| s.count_ones() as usize).max().unwrap()
    }

    pub fn well_dominated(&self) -> bool {
        let sizes: Vec<u32> = self.minimal_dominating_sets().iter().map(|s| s.count_ones()).collect();
        sizes.iter().min() == sizes.iter().max()
    }

    pub fn maximal_independent_sizes(&self) -> Vec<u32> {
        (0..=self.all())
            .filter(|&s| self.independent(s) && self.dominating(s))
            .map(|s| s.count_ones())
            .collect()
    }
}

pub fn bits(s: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| s >> i & 1 == 1)
}

pub fn mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

pub fn set(n: usize, m: u64) -> VertexSet {
    VertexSet::from_members(n, bits(m)).expect("mask fits the universe")
}

pub fn minimal_transversals(n: usize, edges: &[u64]) -> Vec<u64> {
    let hits = |s: u64| edges.iter().all(|e| e & s != 0);
    (0u64..1 << n).filter(|&s| hits(s) && bits(s).all(|v| !hits(s & !(1 << v)))).collect()
}

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
