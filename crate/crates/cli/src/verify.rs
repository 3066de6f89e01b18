//! Cross-check suites: library answers against subset-scan references.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use lexdom::domination::{enumerate_irreducible_dominating_sets_with_cap, is_irreducible_dominating};
use lexdom::family::{all_graphs, all_graphs_cached, RandomGraphs};
use lexdom::lexicographic::{
    check_minimal_product, dominates_product_vertex, enumerate_minimal_dominating_sets_product_with_cap,
    gamma_product, is_dominating_product, upper_gamma_product,
};
use lexdom::named::{complete, cycle, edgeless, path, prism, twin_cliques};
use lexdom::recognition::{
    is_well_covered_alpha2, is_well_dominated_bounded_k, is_well_dominated_enum_with_cap, is_well_dominated_gamma2,
    is_well_dominated_lex_with, RecognitionReport, RecognizeOptions,
};
use lexdom::{lex_product, Graph, Hypergraph, ProductSet, VertexSet};
use rand::{Rng, RngCore};
use serde::Serialize;

use crate::oracle::{bits, mask, minimal_members, minimal_transversals, set, Adj};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    Small,
    Full,
}

struct Sizes {
    family_n: usize,
    dom_g: usize,
    dom_h: usize,
    enum_g: usize,
    enum_h: usize,
    lex_h: usize,
    disconnected: usize,
    random: usize,
    hypergraphs: usize,
}

impl Scale {
    fn sizes(self) -> Sizes {
        match self {
            Scale::Small => Sizes {
                family_n: 6,
                dom_g: 3,
                dom_h: 3,
                enum_g: 4,
                enum_h: 3,
                lex_h: 3,
                disconnected: 20,
                random: 100,
                hypergraphs: 100,
            },
            Scale::Full => Sizes {
                family_n: 7,
                dom_g: 4,
                dom_h: 4,
                enum_g: 5,
                enum_h: 3,
                lex_h: 4,
                disconnected: 50,
                random: 500,
                hypergraphs: 300,
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Suite {
    pub name: &'static str,
    pub passed: bool,
    pub instances: usize,
    pub mismatches: usize,
    /// First few mismatch descriptions.
    pub examples: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Scoreboard {
    pub scale: Scale,
    pub seed: u64,
    pub suites: Vec<Suite>,
}

impl Scoreboard {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

struct Tally {
    instances: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { instances: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, name: &'static str) -> Suite {
        Suite {
            name,
            passed: self.failures.is_empty(),
            instances: self.instances,
            mismatches: self.failures.len(),
            examples: self.failures.into_iter().take(3).collect(),
        }
    }
}

struct Context {
    sizes: Sizes,
    seed: u64,
    cap: usize,
    family: Vec<Graph>,
    dump_dir: Option<PathBuf>,
    dumped: usize,
}

impl Context {
    fn graphs(&self, min_n: usize, max_n: usize) -> impl Iterator<Item = &Graph> {
        self.family.iter().filter(move |g| (min_n..=max_n).contains(&g.n()))
    }

    fn rng(&self, salt: u64) -> RandomGraphs {
        RandomGraphs::new(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn dump(&mut self, label: &str, h: &Hypergraph) {
        let Some(dir) = &self.dump_dir else { return };
        self.dumped += 1;
        let path = dir.join(format!("{label}-{}.hg", self.dumped));
        if fs::create_dir_all(dir).and_then(|_| fs::write(&path, h.to_text())).is_err() {
            eprintln!("warning: could not write {}", path.display());
        }
    }
}

fn family_cache_path(max_n: usize) -> PathBuf {
    std::env::temp_dir().join(format!("lexdom-graph-family-{max_n}.txt"))
}

pub fn run(scale: Scale, seed: u64, cap: usize, dump_dir: Option<&Path>) -> Scoreboard {
    let sizes = scale.sizes();
    let family = all_graphs_cached(sizes.family_n, &family_cache_path(sizes.family_n))
        .unwrap_or_else(|_| all_graphs(sizes.family_n));
    let mut cx = Context {
        sizes,
        seed,
        cap,
        family,
        dump_dir: dump_dir.map(Path::to_path_buf),
        dumped: 0,
    };
    let suites = vec![
        vertex_domination(&cx),
        minimal_product_sets(&cx),
        product_enumeration(&cx),
        product_gamma(&cx),
        upper_bound(&cx),
        p5_p3_regression(),
        twin_clique_regression(&cx),
        product_recognition(&cx),
        alpha_two(&cx),
        gamma_two(&cx),
        bounded_gamma(&mut cx),
        irreducibility(&cx),
        transversal_duality(&mut cx),
    ];
    Scoreboard { scale, seed, suites }
}

/// Every subset for products on at most 9 vertices, 1000 random ones above that.
fn sampled_sets(n: usize, rng: &mut RandomGraphs) -> Vec<u64> {
    let all = (1u64 << n) - 1;
    if n <= 9 {
        (0..=all).collect()
    } else {
        (0..1000).map(|_| rng.rng().next_u64() & all).collect()
    }
}

fn vertex_domination(cx: &Context) -> Suite {
    let mut t = Tally::new();
    let mut rng = cx.rng(1);
    for g in cx.graphs(1, cx.sizes.dom_g) {
        for h in cx.graphs(1, cx.sizes.dom_h) {
            let p = lex_product(g, h).expect("nonempty factors");
            let flat = Adj::lex(g, h);
            let base = Adj::of(g);
            let nh = h.n();
            for s in sampled_sets(flat.n, &mut rng) {
                let d = ProductSet::from_flat(g.n(), nh, &set(flat.n, s));
                for v in 0..flat.n {
                    let (x, y) = (v / nh, v % nh);
                    let want = flat.closed(v) & s != 0;
                    let got = dominates_product_vertex(&p, &d, x, y);
                    let projected = !got || base.closed(x) & mask(d.projection()) != 0;
                    t.check(got == want && projected, || format!("{g:?}[{h:?}] D={d:?} at ({x},{y})"));
                }
                let dominating = is_dominating_product(&p, &d);
                t.check(dominating == flat.dominating(s), || format!("{g:?}[{h:?}] D={d:?} domination"));
            }
        }
    }
    t.finish("vertex and set domination in products")
}

fn minimal_product_sets(cx: &Context) -> Suite {
    let mut t = Tally::new();
    let mut rng = cx.rng(2);
    for g in cx.graphs(1, cx.sizes.dom_g) {
        for h in cx.graphs(1, cx.sizes.dom_h) {
            let p = lex_product(g, h).expect("nonempty factors");
            let flat = Adj::lex(g, h);
            for s in sampled_sets(flat.n, &mut rng) {
                let d = ProductSet::from_flat(g.n(), h.n(), &set(flat.n, s));
                let r = check_minimal_product(&p, &d);
                t.check(r.minimal == flat.minimal_dominating(s), || format!("{g:?}[{h:?}] D={d:?} {r:?}"));
            }
        }
    }
    t.finish("minimality conditions in products")
}

fn product_enumeration(cx: &Context) -> Suite {
    let mut t = Tally::new();
    for g in cx.graphs(1, cx.sizes.enum_g) {
        for h in cx.graphs(1, cx.sizes.enum_h) {
            let got: Result<BTreeSet<u64>, _> = enumerate_minimal_dominating_sets_product_with_cap(g, h, cx.cap)
                .map(|v| v.iter().map(|d| mask(d.flat())).collect());
            let want: BTreeSet<u64> = Adj::lex(g, h).minimal_dominating_sets().into_iter().collect();
            t.check(got.as_ref() == Ok(&want), || format!("{g:?}[{h:?}]"));
        }
    }
    t.finish("constructive product enumeration")
}

fn product_gamma(cx: &Context) -> Suite {
    let mut t = Tally::new();
    for g in cx.graphs(1, cx.sizes.enum_g) {
        for h in cx.graphs(1, cx.sizes.enum_h) {
            let got = gamma_product(g, h).ok();
            let want = Adj::lex(g, h).gamma();
            t.check(got == Some(want), || format!("{g:?}[{h:?}]: {got:?} vs {want}"));
        }
    }
    let two_k1 = edgeless(2);
    for n in 2..=4 {
        for h in [cycle(4), path(4), two_k1.clone()] {
            let got = gamma_product(&complete(n), &h).ok();
            t.check(got == Some(2), || format!("K{n}[{h:?}]: {got:?}"));
        }
    }
    let mut rng = cx.rng(4);
    let count = cx.sizes.random.min(200);
    for _ in 0..count {
        let g = rng.graph_where(2, 9, |g| g.isolated_vertices().is_empty());
        let want = Adj::of(&g).gamma_t();
        let got = gamma_product(&g, &two_k1).ok();
        t.check(got == want, || format!("{g:?}[2K1]: {got:?} vs {want:?}"));
    }
    t.finish("product domination number")
}

fn upper_bound(cx: &Context) -> Suite {
    let mut t = Tally::new();
    for g in cx.graphs(1, cx.sizes.enum_g.min(4)) {
        for h in cx.graphs(1, cx.sizes.enum_h) {
            let flat = Adj::lex(g, h).upper_gamma();
            let bound = Adj::of(g).alpha() * Adj::of(h).upper_gamma();
            t.check(flat >= bound, || format!("{g:?}[{h:?}]: {flat} < {bound}"));
        }
    }
    t.finish("upper domination lower bound")
}

fn p5_p3_regression() -> Suite {
    let mut t = Tally::new();
    let p = lex_product(&path(5), &path(3)).expect("nonempty factors");
    let d = p.set_from_pairs([(1, 1), (2, 0), (3, 1)]).expect("pairs in range");
    let r = check_minimal_product(&p, &d);
    t.check(r.cond_i && r.cond_ii && !r.cond_iii && !r.minimal, || format!("{r:?}"));
    let smaller = p.set_from_pairs([(1, 1), (3, 1)]).expect("pairs in range");
    t.check(is_dominating_product(&p, &smaller), || "smaller set does not dominate".into());
    t.finish("P5[P3] irreducible projection regression")
}

fn twin_clique_regression(cx: &Context) -> Suite {
    let mut t = Tally::new();
    let c4 = cycle(4);
    for n in [4, 5] {
        let g = twin_cliques(n);
        let got = upper_gamma_product(&g, &c4, cx.cap).ok();
        t.check(got == Some(n), || format!("n={n}: {got:?}"));
        let bound = Adj::of(&g).alpha() * Adj::of(&c4).upper_gamma();
        t.check(bound == 4, || format!("n={n}: bound {bound}"));
    }
    t.finish("twin cliques times C4")
}

fn witness_ok(flat: &Graph, r: &RecognitionReport) -> bool {
    if r.verdict {
        return true;
    }
    let a = Adj::of(flat);
    match r.witness.differing_sets() {
        Some((x, y)) => x.len() != y.len() && a.minimal_dominating(mask(&x)) && a.minimal_dominating(mask(&y)),
        None => false,
    }
}

fn product_recognition(cx: &Context) -> Suite {
    let mut t = Tally::new();
    let opts = RecognizeOptions { cap: cx.cap, ..RecognizeOptions::default() };
    let run = |t: &mut Tally, g: &Graph, h: &Graph| {
        let want = Adj::lex(g, h).well_dominated();
        match is_well_dominated_lex_with(g, h, &opts) {
            Ok(r) => {
                let flat = lex_product(g, h).expect("nonempty factors");
                t.check(r.verdict == want && witness_ok(flat.flat(), &r), || format!("{g:?}[{h:?}]: {r:?}"));
            }
            Err(e) => t.check(false, || format!("{g:?}[{h:?}]: {e}")),
        }
    };
    for g in cx.graphs(2, 4).filter(|g| g.is_connected()) {
        for h in cx.graphs(2, cx.sizes.lex_h) {
            run(&mut t, g, h);
        }
    }
    let mut rng = cx.rng(8);
    let mut done = 0;
    while done < cx.sizes.disconnected {
        let g = rng.graph_where(2, 5, |g| !g.is_connected());
        let h = rng.graph_in(2, 4);
        if g.n() * h.n() <= 16 {
            run(&mut t, &g, &h);
            done += 1;
        }
    }
    t.finish("well-dominated products")
}

fn alpha_two(cx: &Context) -> Suite {
    let mut t = Tally::new();
    for g in cx.graphs(1, cx.sizes.family_n) {
        let sizes = Adj::of(g).maximal_independent_sizes();
        let want = sizes.iter().all(|&s| s == 2);
        let got = is_well_covered_alpha2(g);
        t.check(got == want, || format!("{g:?}: {got} vs {want}"));
    }
    t.finish("well-covered with independence two")
}

fn gamma_two(cx: &Context) -> Suite {
    let mut t = Tally::new();
    let check = |t: &mut Tally, g: &Graph| {
        let a = Adj::of(g);
        if a.gamma() != 2 {
            return;
        }
        let want = a.well_dominated();
        match (is_well_dominated_gamma2(g), is_well_dominated_enum_with_cap(g, cx.cap)) {
            (Ok(r), Ok(e)) => {
                let covered = !r.verdict || is_well_covered_alpha2(g);
                t.check(
                    r.verdict == want && e.verdict == want && covered && witness_ok(g, &r),
                    || format!("{g:?}: {} {} {want}", r.verdict, e.verdict),
                );
            }
            (r, e) => t.check(false, || format!("{g:?}: {r:?} {e:?}")),
        }
    };
    for g in cx.graphs(1, cx.sizes.family_n) {
        check(&mut t, g);
    }
    let mut rng = cx.rng(16);
    let mut done = 0;
    while done < cx.sizes.random {
        let g = rng.graph_in(2, 9);
        if Adj::of(&g).gamma() == 2 {
            check(&mut t, &g);
            done += 1;
        }
    }
    let p = prism();
    let r = is_well_dominated_gamma2(&p);
    t.check(matches!(&r, Ok(r) if !r.verdict && witness_ok(&p, r)), || format!("prism: {r:?}"));
    for g in [cycle(4), path(4)] {
        let r = is_well_dominated_gamma2(&g);
        t.check(matches!(&r, Ok(r) if r.verdict), || format!("{g:?}: {r:?}"));
    }
    t.finish("well-dominated with domination number two")
}

fn bounded_gamma(cx: &mut Context) -> Suite {
    let mut t = Tally::new();
    let mut rng = cx.rng(32);
    let per_k = cx.sizes.random.min(300) / 3;
    let mut counts = [0usize; 4];
    while counts[1..].iter().sum::<usize>() < 3 * per_k {
        let p = [0.25, 0.4, 0.55, 0.7][rng.rng().gen_range(0..4)];
        let g = RandomGraphs::with_probability(rng.rng().next_u64(), p).graph_in(1, 9);
        let a = Adj::of(&g);
        let k = a.gamma();
        if !(1..=3).contains(&k) || counts[k] >= per_k {
            continue;
        }
        counts[k] += 1;
        let want = a.well_dominated();
        let ok = matches!(is_well_dominated_bounded_k(&g, k), Ok(r) if r.verdict == want && witness_ok(&g, &r));
        if !ok {
            cx.dump("closed-neighborhoods", &Hypergraph::closed_neighborhoods(&g));
        }
        t.check(ok, || format!("{g:?} k={k}"));
    }
    t.finish("well-dominated with bounded domination number")
}

fn irreducibility(cx: &Context) -> Suite {
    let mut t = Tally::new();
    for g in cx.graphs(1, cx.sizes.family_n.min(6)) {
        let a = Adj::of(g);
        for s in 0..=a.all() {
            let got = is_irreducible_dominating(g, &set(g.n(), s));
            t.check(got == a.irreducible(s), || format!("{g:?} D={s:b}"));
            if a.minimal_dominating(s) || a.minimal_total_dominating(s) {
                t.check(got, || format!("{g:?} D={s:b} minimal but reducible"));
            }
            let low_degree = bits(s).all(|v| (a.rows[v] & s).count_ones() <= 1);
            if a.dominating(s) && low_degree {
                t.check(got, || format!("{g:?} D={s:b} low degree but reducible"));
            }
        }
    }
    for n in 3..=5 {
        let got: Option<BTreeSet<VertexSet>> =
            enumerate_irreducible_dominating_sets_with_cap(&complete(n), cx.cap).ok().map(|v| v.into_iter().collect());
        let want: BTreeSet<VertexSet> = (1u64..1 << n).filter(|s| s.count_ones() <= 2).map(|s| set(n, s)).collect();
        t.check(got.as_ref() == Some(&want), || format!("K{n}"));
    }
    t.finish("irreducible dominating sets")
}

fn transversal_duality(cx: &mut Context) -> Suite {
    let mut t = Tally::new();
    let mut rng = cx.rng(64);
    for _ in 0..cx.sizes.hypergraphs {
        let r = rng.rng();
        let n = r.gen_range(1..=7);
        let m = r.gen_range(1..=6);
        let raw: Vec<u64> = (0..m).map(|_| r.gen_range(1u64..1 << n)).collect();
        let edges = minimal_members(&raw);
        let h = Hypergraph::new(n, edges.iter().map(|&e| set(n, e)).collect()).expect("edges fit the universe");
        let want = minimal_transversals(n, &edges);
        let ok = match h.enumerate_minimal_transversals() {
            Ok(tr) => {
                let mut got: Vec<u64> = tr.iter().map(mask).collect();
                got.sort_unstable();
                let minimal = tr.iter().all(|x| h.is_minimal_transversal(x).unwrap_or(false));
                let back = Hypergraph::new(n, tr.clone()).and_then(|d| d.enumerate_minimal_transversals());
                let mut back: Vec<u64> = back.map(|v| v.iter().map(mask).collect()).unwrap_or_default();
                back.sort_unstable();
                let sizes: BTreeSet<usize> = tr.iter().map(VertexSet::len).collect();
                let decisions = (1..=n).all(|k| {
                    let uniform = sizes.len() == 1 && sizes.contains(&k);
                    match h.all_minimal_transversals_have_size(k) {
                        Ok(None) => uniform,
                        Ok(Some(w)) => !uniform && w.len() != k && want.contains(&mask(&w)),
                        Err(_) => false,
                    }
                });
                got == want && minimal && back == edges && decisions
            }
            Err(_) => false,
        };
        if !ok {
            cx.dump("transversal", &h);
        }
        t.check(ok, || h.to_text().replace('\n', " / "));
    }
    t.finish("transversal duality and size decision")
}
