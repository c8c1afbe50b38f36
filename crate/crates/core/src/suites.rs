//! Property suites over exhaustive and seeded corpora.
//!
//! Every suite is deterministic for a fixed [`SuiteConfig`]: enumeration
//! order is fixed, random draws come from the configured seed, and reports
//! contain no timings.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::Rng;

use crate::betti::BettiTable;
use crate::complex::SimplicialComplex;
use crate::corpus::{self, SplittableParams};
use crate::decompose::{is_shedding, is_shedding_by_definition, Decomposer};
use crate::error::{Error, Result};
use crate::graph::{self, cover_betti_recursive, is_scm_bipartite, Graph, ScmCertificate};
use crate::linalg::Field;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::oracle::{
    betti_oracle, has_linear_resolution, hochster_betti, is_cohen_macaulay, is_cohen_macaulay_reisner,
    koszul_betti, reduced_homology_dims,
};
use crate::split::{
    betti_from_sets, betti_recursive, find_linear_quotients, quotient_order_from_split, verify_betti_splitting_with,
    SplitTree, Splitter,
};
use crate::text::{default_names, format_face, format_monomial};

pub const SUITE_NAMES: &[&str] = &[
    "duality",
    "quotients",
    "betti",
    "splitting",
    "pd-bight",
    "recursions",
    "terai",
    "oracles",
    "eagon-reiner",
    "froberg",
    "corchor1",
    "chordal-split",
    "cover-recursion",
    "shedding",
];

/// Complexes are enumerated exhaustively up to this many vertices.
pub const EXHAUSTIVE_COMPLEX_N: usize = 5;
/// Graphs are enumerated exhaustively up to this many vertices.
pub const EXHAUSTIVE_GRAPH_N: usize = 6;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest vertex count; sizes beyond the exhaustive bounds are sampled.
    pub max_n: usize,
    pub seed: u64,
    /// Draws per sampled size, and the size of the random ideal corpus.
    pub samples: usize,
    pub field: Field,
    pub max_vars: usize,
    pub max_gens: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { max_n: 5, seed: 0, samples: 200, field: Field::Rational, max_vars: 7, max_gens: 12 }
    }
}

const MAX_DUMPED: usize = 10;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub lines: Vec<String>,
    pub counterexamples: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self { name: name.to_string(), checked: 0, failures: 0, lines: Vec::new(), counterexamples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.counterexamples.len() < MAX_DUMPED {
            self.counterexamples.push(what);
        }
    }

    fn note(&mut self, line: String) {
        self.lines.push(line);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "suite {}: {verdict}", self.name).unwrap();
        writeln!(out, "  checks: {}", self.checked).unwrap();
        for line in &self.lines {
            writeln!(out, "  {line}").unwrap();
        }
        writeln!(out, "  failures: {}", self.failures).unwrap();
        for c in &self.counterexamples {
            writeln!(out, "  counterexample: {c}").unwrap();
        }
        out
    }
}

pub fn render_all(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.render());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "summary: {} suites, {} failed", reports.len(), failed).unwrap();
    out
}

/// Runs one suite, or all of them for `"all"`.
pub fn run(name: &str, config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITE_NAMES.iter().map(|n| run_suite(n, config)).collect();
    }
    run_suite(name, config).map(|r| vec![r])
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    if config.max_n == 0 || config.max_n > 12 {
        return Err(Error::InvalidParameter(format!("max-n must be in 1..=12, got {}", config.max_n)));
    }
    let mut ctx = Context::new(config);
    let mut report = SuiteReport::new(name);
    match name {
        "duality" => ctx.duality(&mut report)?,
        "quotients" => ctx.quotients(&mut report)?,
        "betti" => ctx.betti(&mut report)?,
        "splitting" => ctx.splitting(&mut report)?,
        "pd-bight" => ctx.pd_bight(&mut report)?,
        "recursions" => ctx.recursions(&mut report)?,
        "terai" => ctx.terai(&mut report)?,
        "oracles" => ctx.oracles(&mut report)?,
        "eagon-reiner" => ctx.eagon_reiner(&mut report)?,
        "froberg" => ctx.froberg(&mut report)?,
        "corchor1" => ctx.corchor1(&mut report)?,
        "chordal-split" => ctx.chordal_split(&mut report)?,
        "cover-recursion" => ctx.cover_recursion(&mut report)?,
        "shedding" => ctx.shedding(&mut report)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(report)
}

fn describe_complex(c: &SimplicialComplex) -> String {
    let names = default_names(c.num_vars());
    let facets: Vec<String> = c.facets().iter().map(|f| format_face(*f, &names)).collect();
    format!("complex on {} vertices <{}>", c.ground().len(), facets.join(" | "))
}

fn describe_ideal(i: &MonomialIdeal) -> String {
    let names = default_names(i.num_vars());
    let gens: Vec<String> = i.generators().iter().map(|g| format_monomial(g, &names)).collect();
    format!("ideal ({})", gens.join(", "))
}

fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("graph n={} edges [{}]", g.num_vertices(), edges.join(" "))
}

struct Context<'a> {
    config: &'a SuiteConfig,
    tables: HashMap<MonomialIdeal, BettiTable>,
    decomposer: Decomposer,
    splitter: Splitter,
}

impl<'a> Context<'a> {
    fn new(config: &'a SuiteConfig) -> Self {
        Self { config, tables: HashMap::new(), decomposer: Decomposer::new(), splitter: Splitter::new() }
    }

    fn field(&self) -> Field {
        self.config.field
    }

    fn oracle(&mut self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        if let Some(t) = self.tables.get(ideal) {
            return Ok(t.clone());
        }
        let t = betti_oracle(ideal, self.config.field)?;
        self.tables.insert(ideal.clone(), t.clone());
        Ok(t)
    }

    /// Exhaustive complexes up to the bound, then seeded samples above it.
    fn complexes(&self, report: &mut SuiteReport) -> Result<Vec<SimplicialComplex>> {
        let exhaustive = self.config.max_n.min(EXHAUSTIVE_COMPLEX_N);
        let mut out = Vec::new();
        for n in 1..=exhaustive {
            out.extend(corpus::all_complexes(n)?);
        }
        let listed = out.len();
        let mut rng = corpus::rng(self.config.seed);
        for n in exhaustive + 1..=self.config.max_n {
            for _ in 0..self.config.samples {
                let facets = rng.gen_range(1..=2 * n);
                out.push(corpus::random_complex(&mut rng, n, facets)?);
            }
        }
        report.note(format!("complexes: {listed} exhaustive (n <= {exhaustive}), {} sampled", out.len() - listed));
        Ok(out)
    }

    /// Exhaustive graphs on `min_n..` vertices up to the bound, then seeded samples.
    fn graphs(&self, report: &mut SuiteReport, min_n: usize) -> Result<Vec<Graph>> {
        let exhaustive = self.config.max_n.min(EXHAUSTIVE_GRAPH_N);
        let mut out = Vec::new();
        for n in min_n..=exhaustive {
            out.extend(corpus::all_graphs(n)?);
        }
        let listed = out.len();
        let mut rng = corpus::rng(self.config.seed);
        for n in (exhaustive + 1).max(min_n)..=self.config.max_n {
            for _ in 0..self.config.samples {
                let p = rng.gen_range(0.0..1.0);
                out.push(corpus::random_graph(&mut rng, n, p)?);
            }
        }
        report.note(format!("graphs: {listed} exhaustive ({min_n} <= n <= {exhaustive}), {} sampled", out.len() - listed));
        Ok(out)
    }

    fn splittable(&self, report: &mut SuiteReport) -> Result<Vec<corpus::SplittableSample>> {
        let params = SplittableParams {
            num_vars: self.config.max_vars,
            max_gens: self.config.max_gens,
            ..SplittableParams::default()
        };
        let samples = corpus::splittable_corpus(self.config.seed, self.config.samples, params)?;
        let squarefree = samples.iter().filter(|s| s.ideal.is_squarefree()).count();
        let nodes: usize = samples.iter().map(|s| s.tree.num_nodes()).sum();
        report.note(format!(
            "random splittable ideals: {} (<= {} variables, <= {} generators), {squarefree} square-free, {nodes} split nodes",
            samples.len(),
            params.num_vars,
            params.max_gens
        ));
        Ok(samples)
    }

    /// Dual facet ideals of the vertex decomposable complexes, with split trees.
    fn vd_duals(&mut self, report: &mut SuiteReport) -> Result<Vec<(MonomialIdeal, SplitTree)>> {
        let mut out = Vec::new();
        for c in self.complexes(report)? {
            let ideal = c.dual_facet_ideal();
            if let Some(t) = self.splitter.split(&ideal) {
                out.push((ideal, t));
            }
        }
        report.note(format!("splittable dual facet ideals: {}", out.len()));
        Ok(out)
    }

    fn duality(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut decomposable = 0;
        for c in self.complexes(report)? {
            let ideal = c.dual_facet_ideal();
            let vd = self.decomposer.decompose(&c);
            let split = self.splitter.split(&ideal);
            decomposable += vd.is_some() as usize;
            report.check(vd.is_some() == split.is_some(), || {
                format!("{}: vertex decomposable {}, dual splittable {}", describe_complex(&c), vd.is_some(), split.is_some())
            });
            if let Some(t) = &vd {
                report.check(t.verify(&c), || format!("{}: certificate replay failed", describe_complex(&c)));
            }
            if let Some(t) = &split {
                let ok = t.ideal(c.num_vars()).map(|i| i == ideal).unwrap_or(false);
                report.check(ok, || format!("{}: split tree invalid", describe_ideal(&ideal)));
            }
        }
        report.note(format!("vertex decomposable: {decomposable}"));
        Ok(())
    }

    fn quotients(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut items: Vec<(MonomialIdeal, SplitTree)> =
            self.splittable(report)?.into_iter().map(|s| (s.ideal, s.tree)).collect();
        items.extend(self.vd_duals(report)?);
        let mut linear = 0;
        for (ideal, tree) in items {
            let order = quotient_order_from_split(&tree, ideal.num_vars())?;
            let same = {
                let mut a: Vec<&Monomial> = order.generators().collect();
                let mut b: Vec<&Monomial> = ideal.generators().iter().collect();
                a.sort_by(|x, y| x.exponents().cmp(y.exponents()));
                b.sort_by(|x, y| x.exponents().cmp(y.exponents()));
                a == b
            };
            report.check(same && order.verify(), || format!("{}: quotient order fails the colon check", describe_ideal(&ideal)));
            let found = find_linear_quotients(&ideal, 20)?;
            report.check(found.is_some_and(|o| o.verify()), || {
                format!("{}: subset search finds no linear quotients", describe_ideal(&ideal))
            });
            if ideal.is_equigenerated() {
                linear += 1;
                let ok = has_linear_resolution(&ideal, self.field())?;
                report.check(ok, || format!("{}: equigenerated but resolution not linear", describe_ideal(&ideal)));
            }
        }
        report.note(format!("equigenerated ideals checked for linear resolution: {linear}"));
        Ok(())
    }

    fn betti(&mut self, report: &mut SuiteReport) -> Result<()> {
        for s in self.splittable(report)? {
            let recursive = betti_recursive(&s.tree);
            let sets = betti_from_sets(&quotient_order_from_split(&s.tree, s.ideal.num_vars())?);
            let koszul = koszul_betti(&s.ideal, self.field())?;
            report.check(recursive == koszul && sets == koszul, || {
                format!(
                    "{}: recursive [{}] sets [{}] koszul [{}]",
                    describe_ideal(&s.ideal),
                    recursive.to_flat().trim().replace('\n', "; "),
                    sets.to_flat().trim().replace('\n', "; "),
                    koszul.to_flat().trim().replace('\n', "; ")
                )
            });
        }
        for (ideal, tree) in self.vd_duals(report)? {
            let oracle = self.oracle(&ideal)?;
            report.check(betti_recursive(&tree) == oracle, || format!("{}: recursion differs from Hochster", describe_ideal(&ideal)));
        }
        Ok(())
    }

    fn splitting(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut nodes = 0;
        for s in self.splittable(report)? {
            for node in s.tree.node_splits(s.ideal.num_vars())? {
                nodes += 1;
                let j = node.divisible_part();
                let ok = verify_betti_splitting_with(&node.ideal, &j, &node.right, |i| self.oracle(i))?;
                report.check(ok, || format!("{}: Betti splitting fails at variable {}", describe_ideal(&node.ideal), node.var));
                let x = Monomial::var(node.ideal.num_vars(), node.var)?;
                let meet = j.intersect(&node.right)?;
                let ok = meet == node.right.mul_monomial(&x)?;
                report.check(ok, || format!("{}: x*I1 meet I2 != x*I2 at variable {}", describe_ideal(&node.ideal), node.var));
            }
        }
        report.note(format!("nodes checked: {nodes}"));
        Ok(())
    }

    fn pd_bight(&mut self, report: &mut SuiteReport) -> Result<()> {
        let (mut vd, mut other, mut other_differs) = (0, 0, 0);
        for c in self.complexes(report)? {
            let pd = self.quotient_pd_reg(&c)?.0;
            if self.decomposer.decompose(&c).is_some() {
                vd += 1;
                report.check(pd == c.bight(), || format!("{}: pd {pd} != bight {}", describe_complex(&c), c.bight()));
            } else {
                other += 1;
                other_differs += (pd != c.bight()) as usize;
            }
        }
        report.note(format!("vertex decomposable complexes: {vd}"));
        report.note(format!("not vertex decomposable: {other}, of which pd != bight: {other_differs}"));
        Ok(())
    }

    fn quotient_pd_reg(&mut self, c: &SimplicialComplex) -> Result<(usize, usize)> {
        let q = self.oracle(&c.stanley_reisner_ideal())?.quotient()?;
        Ok((q.pd().expect("non-zero"), q.reg().expect("non-zero") as usize))
    }

    fn recursions(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut vd = 0;
        for c in self.complexes(report)? {
            let Some(tree) = self.decomposer.decompose(&c) else { continue };
            vd += 1;
            let recursive = tree.pd_reg();
            let oracle = self.quotient_pd_reg(&c)?;
            report.check(recursive == oracle, || {
                format!("{}: recursive (pd, reg) {recursive:?}, oracle {oracle:?}", describe_complex(&c))
            });
        }
        report.note(format!("vertex decomposable complexes: {vd}"));
        Ok(())
    }

    fn terai(&mut self, report: &mut SuiteReport) -> Result<()> {
        for c in self.complexes(report)? {
            let ideal = c.stanley_reisner_ideal();
            if ideal.is_zero() {
                continue;
            }
            let dual = ideal.alexander_dual()?;
            let pd_dual = self.oracle(&dual)?.pd().expect("non-zero");
            let reg_quotient = self.oracle(&ideal)?.quotient()?.reg().expect("non-zero") as usize;
            report.check(pd_dual == reg_quotient, || {
                format!("{}: pd(I^v) = {pd_dual}, reg(R/I) = {reg_quotient}", describe_ideal(&ideal))
            });
        }
        Ok(())
    }

    fn oracles(&mut self, report: &mut SuiteReport) -> Result<()> {
        for c in self.complexes(report)? {
            let h = reduced_homology_dims(&c, self.field());
            report.check(h.euler_from_chains() == h.euler_from_homology(), || {
                format!("{}: Euler characteristics differ", describe_complex(&c))
            });
            let ideal = c.stanley_reisner_ideal();
            if ideal.is_zero() {
                continue;
            }
            let hochster = hochster_betti(&c, self.field());
            let koszul = koszul_betti(&ideal, self.field())?;
            report.check(hochster == koszul, || format!("{}: Hochster and Koszul tables differ", describe_ideal(&ideal)));
        }
        Ok(())
    }

    fn eagon_reiner(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut cm = 0;
        for c in self.complexes(report)? {
            let by_dual = is_cohen_macaulay(&c, self.field())?;
            let by_links = is_cohen_macaulay_reisner(&c, self.field());
            cm += by_dual as usize;
            report.check(by_dual == by_links, || {
                format!("{}: dual linear resolution {by_dual}, link criterion {by_links}", describe_complex(&c))
            });
        }
        report.note(format!("Cohen-Macaulay: {cm}"));
        Ok(())
    }

    fn froberg(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut positive = 0;
        for g in self.graphs(report, 2)? {
            if g.num_edges() == 0 {
                continue;
            }
            let r = graph::froberg_with(&g, self.field(), &mut self.splitter)?;
            positive += r.complement_chordal as usize;
            report.check(r.all_agree(), || format!("{}: {r:?}", describe_graph(&g)));
        }
        report.note(format!("complement chordal: {positive}"));
        Ok(())
    }

    fn corchor1(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut positive = 0;
        for g in self.graphs(report, 2)? {
            if g.num_edges() == 0 {
                continue;
            }
            let r = graph::corchor1_with(&g, self.field(), &mut self.decomposer)?;
            positive += r.complement_chordal as usize;
            report.check(r.all_agree(), || format!("{}: {r:?}", describe_graph(&g)));
        }
        report.note(format!("complement chordal: {positive}"));
        Ok(())
    }

    fn chordal_split(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut rng = corpus::rng(self.config.seed);
        let (mut drawn, mut chordal) = (0, 0);
        while chordal < self.config.samples && drawn < 100 * self.config.samples.max(1) {
            drawn += 1;
            let n = rng.gen_range(1..=self.config.max_n);
            let p = rng.gen_range(0.0..1.0);
            let g = corpus::random_graph(&mut rng, n, p)?;
            if !g.is_chordal() {
                continue;
            }
            chordal += 1;
            let expected = g.complement().edge_ideal();
            let tree = graph::chordal_split(&g)?;
            let ok = tree.ideal(n).map(|i| i == expected).unwrap_or(false)
                && quotient_order_from_split(&tree, n).map(|o| o.verify()).unwrap_or(false);
            report.check(ok, || format!("{}: chordal split tree invalid", describe_graph(&g)));
        }
        report.note(format!("random graphs drawn: {drawn} (n <= {}), chordal: {chordal}", self.config.max_n));
        Ok(())
    }

    fn cover_recursion(&mut self, report: &mut SuiteReport) -> Result<()> {
        let (mut scm, mut chordal) = (0, 0);
        for g in self.graphs(report, 1)? {
            if g.num_edges() == 0 {
                continue;
            }
            let expected = self.oracle(&g.cover_ideal())?;
            if g.is_bipartite() {
                if let Some(ScmCertificate::Step { x, y, .. }) = is_scm_bipartite(&g)? {
                    scm += 1;
                    let got = cover_betti_recursive(&g, y, self.field())?;
                    report.check(got == expected, || format!("{}: recursion at y={y} differs from oracle", describe_graph(&g)));
                    let without_x = g.remove_vertices(g.closed_neighborhood(x)).cover_ideal();
                    let without_y = g.remove_vertices(crate::complex::VertexSet::singleton(y)).cover_ideal();
                    report.check(without_x == without_y, || format!("{}: cover ideals of G-N[x] and G-y differ", describe_graph(&g)));
                }
            }
            if let Some(x) = g.simplicial_vertex().filter(|_| g.is_chordal()) {
                chordal += 1;
                let independence = g.independence_complex();
                for y in g.neighbors(x).iter() {
                    let shed = is_shedding(&independence, y)?;
                    report.check(shed, || format!("{}: neighbour {y} of simplicial {x} does not shed", describe_graph(&g)));
                    if shed {
                        let got = cover_betti_recursive(&g, y, self.field())?;
                        report.check(got == expected, || format!("{}: recursion at y={y} differs from oracle", describe_graph(&g)));
                    }
                }
            }
        }
        report.note(format!("sequentially Cohen-Macaulay bipartite graphs: {scm}"));
        report.note(format!("chordal graphs: {chordal}"));
        Ok(())
    }

    fn shedding(&mut self, report: &mut SuiteReport) -> Result<()> {
        let mut shedding = 0;
        for c in self.complexes(report)? {
            for v in c.vertices().iter() {
                let by_link = is_shedding(&c, v)?;
                let by_deletion = is_shedding_by_definition(&c, v)?;
                report.check(by_link == by_deletion, || {
                    format!("{}: vertex {v} link test {by_link}, deletion test {by_deletion}", describe_complex(&c))
                });
                if !by_link {
                    continue;
                }
                shedding += 1;
                let (del, lk) = (c.deletion(v)?, c.link(v)?);
                let x = Monomial::var(c.num_vars(), v)?;
                let rebuilt = del.dual_facet_ideal().mul_monomial(&x)?.sum(&lk.dual_facet_ideal())?;
                let ok = rebuilt == c.dual_facet_ideal() && lk.dual_facet_ideal().is_subideal_of(&del.dual_facet_ideal())?;
                report.check(ok, || format!("{}: dual ideal identity fails at vertex {v}", describe_complex(&c)));
            }
        }
        let graphs = self.graphs(report, 1)?;
        for g in graphs {
            let independence = g.independence_complex();
            for y in g.domination_shedding() {
                let ok = is_shedding(&independence, y)?;
                report.check(ok, || format!("{}: dominating vertex {y} does not shed", describe_graph(&g)));
            }
        }
        report.note(format!("shedding (complex, vertex) pairs: {shedding}"));
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig { max_n: 4, samples: 30, ..SuiteConfig::default() }
    }

    #[test]
    fn every_suite_passes_on_small_inputs() {
        for name in SUITE_NAMES {
            let report = run_suite(name, &small()).unwrap();
            assert!(report.passed(), "{}", report.render());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = render_all(&run("all", &small()).unwrap());
        let b = render_all(&run("all", &small()).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert_eq!(run("nope", &small()).unwrap_err(), Error::UnknownSuite("nope".into()));
    }
}
