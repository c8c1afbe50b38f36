//! Vertex splittable ideals.
//!
//! An ideal is vertex splittable when it is principal (or zero), or when
//! `I = x·I₁ + I₂` for a variable `x` and vertex splittable ideals `I₁ ⊇ I₂`
//! not involving `x`. A [`SplitTree`] records one such recursive splitting.
//! From it we read off an order of linear quotients and the graded Betti
//! numbers, without any homology.

use std::collections::HashMap;

use crate::betti::{BettiTable, Subject};
use crate::complex::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::text::format_monomial;

/// Default bound on the number of generators for [`find_linear_quotients`].
pub const DEFAULT_QUOTIENT_CAP: usize = 20;

/// Certificate of vertex splittability.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SplitTree {
    /// The zero ideal.
    Zero,
    /// A principal ideal `(u)`; `u` may be `1`.
    Leaf(Monomial),
    /// `I = x·I₁ + I₂` with `left` certifying `I₁` and `right` certifying `I₂`.
    Node { var: usize, left: Box<SplitTree>, right: Box<SplitTree> },
}

/// The ideals at one node of a [`SplitTree`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NodeSplit {
    pub var: usize,
    pub ideal: MonomialIdeal,
    pub left: MonomialIdeal,
    pub right: MonomialIdeal,
}

impl NodeSplit {
    /// `x·I₁`, the part of `G(I)` divisible by `x`.
    pub fn divisible_part(&self) -> MonomialIdeal {
        let x = Monomial::var(self.ideal.num_vars(), self.var).expect("validated variable");
        self.left.mul_monomial(&x).expect("validated tree")
    }
}

impl SplitTree {
    /// Rebuilds the ideal, checking every node: neither part involves `x`,
    /// `I₂ ⊆ I₁`, and `G(I)` is the disjoint union of `x·G(I₁)` and `G(I₂)`.
    pub fn ideal(&self, num_vars: usize) -> Result<MonomialIdeal> {
        self.walk(num_vars, &mut |_| {})
    }

    /// Alias of [`SplitTree::ideal`], for call sites that only want the check.
    pub fn validate(&self, num_vars: usize) -> Result<MonomialIdeal> {
        self.ideal(num_vars)
    }

    /// Ideals at every internal node, in pre-order.
    pub fn node_splits(&self, num_vars: usize) -> Result<Vec<NodeSplit>> {
        let mut out = Vec::new();
        self.walk(num_vars, &mut |s| out.push(s))?;
        // walk reports children before parents
        out.reverse();
        Ok(out)
    }

    fn walk(&self, num_vars: usize, visit: &mut impl FnMut(NodeSplit)) -> Result<MonomialIdeal> {
        match self {
            SplitTree::Zero => Ok(MonomialIdeal::zero(num_vars)),
            SplitTree::Leaf(u) => {
                if u.num_vars() != num_vars {
                    return Err(Error::LengthMismatch { expected: num_vars, found: u.num_vars() });
                }
                Ok(MonomialIdeal::principal(u.clone()))
            }
            SplitTree::Node { var, left, right } => {
                let x = Monomial::var(num_vars, *var)?;
                let right_ideal = right.walk(num_vars, visit)?;
                let left_ideal = left.walk(num_vars, visit)?;
                if left_ideal.is_zero() {
                    return Err(Error::MalformedTree(format!("I1 is zero at variable {var}")));
                }
                if left_ideal.involves(*var) || right_ideal.involves(*var) {
                    return Err(Error::MalformedTree(format!("a part involves the splitting variable {var}")));
                }
                if !right_ideal.is_subideal_of(&left_ideal)? {
                    return Err(Error::MalformedTree(format!("I2 is not contained in I1 at variable {var}")));
                }
                let divisible = left_ideal.mul_monomial(&x)?;
                let ideal = divisible.sum(&right_ideal)?;
                if ideal.len() != divisible.len() + right_ideal.len() {
                    return Err(Error::MalformedTree(format!("x*I1 and I2 share generators at variable {var}")));
                }
                visit(NodeSplit { var: *var, ideal: ideal.clone(), left: left_ideal, right: right_ideal });
                Ok(ideal)
            }
        }
    }

    pub fn num_nodes(&self) -> usize {
        match self {
            SplitTree::Node { left, right, .. } => 1 + left.num_nodes() + right.num_nodes(),
            _ => 0,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            SplitTree::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
            _ => 0,
        }
    }

    /// Nested text form `(x: LEFT | RIGHT)` with leaves `u` and `0`.
    pub fn to_text(&self, names: &[String]) -> String {
        match self {
            SplitTree::Zero => "0".to_string(),
            SplitTree::Leaf(u) => format_monomial(u, names),
            SplitTree::Node { var, left, right } => {
                format!("({}: {} | {})", names[*var], left.to_text(names), right.to_text(names))
            }
        }
    }
}

/// Memoizing recognizer; reuse one instance to share work across calls.
#[derive(Default)]
pub struct Splitter {
    memo: HashMap<MonomialIdeal, Option<SplitTree>>,
}

impl Splitter {
    pub fn new() -> Self {
        Self::default()
    }

    /// A splitting certificate for `ideal`, or `None` if it is not vertex splittable.
    ///
    /// Candidate variables are tried in ascending index; the first success wins.
    pub fn split(&mut self, ideal: &MonomialIdeal) -> Option<SplitTree> {
        match ideal.generators() {
            [] => return Some(SplitTree::Zero),
            [u] => return Some(SplitTree::Leaf(u.clone())),
            _ => {}
        }
        if let Some(hit) = self.memo.get(ideal) {
            return hit.clone();
        }
        let found = self.search(ideal);
        self.memo.insert(ideal.clone(), found.clone());
        found
    }

    fn search(&mut self, ideal: &MonomialIdeal) -> Option<SplitTree> {
        for x in 0..ideal.num_vars() {
            let gens = ideal.generators();
            if !ideal.involves(x) || gens.iter().any(|g| g.exponent(x) >= 2) {
                continue;
            }
            let (divisible, rest) = ideal.x_partition(x).expect("index in range");
            let left = MonomialIdeal::minimalize_unchecked(
                ideal.num_vars(),
                divisible.generators().iter().map(|g| g.divide_by_var(x).expect("x divides g")).collect(),
            );
            if !rest.is_subideal_of(&left).expect("same ring") {
                continue;
            }
            let Some(l) = self.split(&left) else { continue };
            let Some(r) = self.split(&rest) else { continue };
            return Some(SplitTree::Node { var: x, left: Box::new(l), right: Box::new(r) });
        }
        None
    }
}

pub fn vertex_split(ideal: &MonomialIdeal) -> Option<SplitTree> {
    Splitter::new().split(ideal)
}

/// One generator of a linear quotient order with its variable set
/// `set(f_t) = {x_k : x_k ∈ (f_1, …, f_{t-1}) : f_t}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientStep {
    pub generator: Monomial,
    pub set: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearQuotientOrder {
    num_vars: usize,
    steps: Vec<QuotientStep>,
}

impl LinearQuotientOrder {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn steps(&self) -> &[QuotientStep] {
        &self.steps
    }

    pub fn generators(&self) -> impl Iterator<Item = &Monomial> {
        self.steps.iter().map(|s| &s.generator)
    }

    /// Computes the variable sets of a given generator order, or `None` if some
    /// colon ideal is not generated by variables.
    pub fn from_order(num_vars: usize, order: Vec<Monomial>) -> Result<Option<Self>> {
        let mut steps = Vec::with_capacity(order.len());
        for t in 0..order.len() {
            let prefix = MonomialIdeal::minimalize(num_vars, order[..t].iter().cloned())?;
            let colon = prefix.colon(&order[t])?;
            if colon.generators().iter().any(|g| g.degree() != 1) {
                return Ok(None);
            }
            let set = colon.generators().iter().flat_map(|g| g.support()).collect::<std::collections::BTreeSet<_>>();
            steps.push(QuotientStep { generator: order[t].clone(), set: set.into_iter().collect() });
        }
        Ok(Some(Self { num_vars, steps }))
    }

    /// Checks that the generators form an antichain and that each colon ideal
    /// is generated by exactly the recorded variables.
    pub fn verify(&self) -> bool {
        let gens: Vec<Monomial> = self.generators().cloned().collect();
        if gens.iter().any(|g| g.num_vars() != self.num_vars) {
            return false;
        }
        if MonomialIdeal::minimalize_unchecked(self.num_vars, gens.clone()).len() != gens.len() {
            return false;
        }
        self.steps.iter().enumerate().all(|(t, step)| {
            let prefix = MonomialIdeal::minimalize_unchecked(self.num_vars, gens[..t].to_vec());
            let colon = prefix.colon(&step.generator).expect("same ring");
            match MonomialIdeal::variables(self.num_vars, step.set.iter().copied()) {
                Ok(expected) => colon == expected,
                Err(_) => false,
            }
        })
    }
}

/// Linear quotient order read off a split tree: `x·f₁ < … < x·f_r < g₁ < … < g_s`,
/// with `set(x·f_t) = set_{I₁}(f_t)` and `set(g_k) = {x} ∪ set_{I₂}(g_k)`.
pub fn quotient_order_from_split(tree: &SplitTree, num_vars: usize) -> Result<LinearQuotientOrder> {
    tree.validate(num_vars)?;
    Ok(LinearQuotientOrder { num_vars, steps: order_steps(tree) })
}

fn order_steps(tree: &SplitTree) -> Vec<QuotientStep> {
    match tree {
        SplitTree::Zero => Vec::new(),
        SplitTree::Leaf(u) => vec![QuotientStep { generator: u.clone(), set: Vec::new() }],
        SplitTree::Node { var, left, right } => {
            let mut steps: Vec<QuotientStep> = order_steps(left)
                .into_iter()
                .map(|s| QuotientStep { generator: s.generator.times_var(*var).expect("validated tree"), set: s.set })
                .collect();
            steps.extend(order_steps(right).into_iter().map(|mut s| {
                s.set.push(*var);
                s.set.sort_unstable();
                s
            }));
            steps
        }
    }
}

/// Searches for an order of linear quotients by dynamic programming over
/// generator subsets: a subset is reachable when some member has a
/// variable-generated colon against the rest, and the rest is reachable.
pub fn find_linear_quotients(ideal: &MonomialIdeal, cap: usize) -> Result<Option<LinearQuotientOrder>> {
    let gens = ideal.generators();
    let m = gens.len();
    if m > cap {
        return Err(Error::TooLarge { what: "generator count", count: m, cap });
    }
    if m > 30 {
        return Err(Error::TooLarge { what: "generator count", count: m, cap: 30 });
    }
    if ideal.num_vars() > MAX_VERTICES {
        return Err(Error::TooManyVertices { requested: ideal.num_vars(), max: MAX_VERTICES });
    }
    // For each ordered pair, the support of g / gcd(g, f) and, when that
    // quotient is a single variable, its bit.
    let mut support = vec![vec![0u64; m]; m];
    let mut linear = vec![vec![0u64; m]; m];
    for (a, g) in gens.iter().enumerate() {
        for (b, f) in gens.iter().enumerate() {
            if a == b {
                continue;
            }
            let q = g.strip_common(f);
            support[a][b] = q.support_mask();
            if q.degree() == 1 {
                linear[a][b] = q.support_mask();
            }
        }
    }
    let colon_vars = |set: usize, f: usize| -> Option<u64> {
        let mut vars = 0u64;
        for g in (0..m).filter(|g| set >> g & 1 == 1) {
            vars |= linear[g][f];
        }
        (0..m).filter(|g| set >> g & 1 == 1).all(|g| support[g][f] & vars != 0).then_some(vars)
    };
    let full = (1usize << m) - 1;
    let mut last: Vec<u8> = vec![u8::MAX; full + 1];
    let mut reachable = vec![false; full + 1];
    reachable[0] = true;
    for set in 0..full {
        if !reachable[set] {
            continue;
        }
        for f in (0..m).filter(|f| set >> f & 1 == 0) {
            let next = set | 1 << f;
            if !reachable[next] && colon_vars(set, f).is_some() {
                reachable[next] = true;
                last[next] = f as u8;
            }
        }
    }
    if !reachable[full] {
        return Ok(None);
    }
    let mut steps = Vec::with_capacity(m);
    let mut set = full;
    while set != 0 {
        let f = last[set] as usize;
        set &= !(1 << f);
        let vars = colon_vars(set, f).expect("reachable step");
        let set_vars = (0..64).filter(|k| vars >> k & 1 == 1).collect();
        steps.push(QuotientStep { generator: gens[f].clone(), set: set_vars });
    }
    steps.reverse();
    Ok(Some(LinearQuotientOrder { num_vars: ideal.num_vars(), steps }))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `β_{i,j}(I) = Σ_{deg f_t = j-i} C(|set(f_t)|, i)`.
pub fn betti_from_sets(order: &LinearQuotientOrder) -> BettiTable {
    let mut table = BettiTable::new(Subject::Ideal);
    for step in order.steps() {
        let s = step.set.len() as u64;
        let d = step.generator.degree() as usize;
        for i in 0..=s {
            table.add(i as usize, d + i as usize, binomial(s, i));
        }
    }
    table
}

/// `β_{i,j}(I) = β_{i,j-1}(I₁) + β_{i,j}(I₂) + β_{i-1,j-1}(I₂)` down the tree.
pub fn betti_recursive(tree: &SplitTree) -> BettiTable {
    match tree {
        SplitTree::Zero => BettiTable::new(Subject::Ideal),
        SplitTree::Leaf(u) => BettiTable::from_entries(Subject::Ideal, [((0, u.degree() as usize), 1)]),
        SplitTree::Node { left, right, .. } => {
            let (t1, t2) = (betti_recursive(left), betti_recursive(right));
            let mut out = BettiTable::new(Subject::Ideal);
            for ((i, j), v) in t1.entries() {
                out.add(i, j + 1, v);
            }
            for ((i, j), v) in t2.entries() {
                out.add(i, j, v);
                out.add(i + 1, j + 1, v);
            }
            out
        }
    }
}

/// Checks `β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J ∩ K)` for all
/// `(i, j)`, with every table taken from the homology oracle.
pub fn verify_betti_splitting(
    ideal: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    field: crate::Field,
) -> Result<bool> {
    verify_betti_splitting_with(ideal, j, k, |i| crate::oracle::betti_oracle(i, field))
}

/// [`verify_betti_splitting`] with a caller-supplied table source, e.g. a cache.
pub fn verify_betti_splitting_with(
    ideal: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    mut tables: impl FnMut(&MonomialIdeal) -> Result<BettiTable>,
) -> Result<bool> {
    if j.num_vars() != ideal.num_vars() || k.num_vars() != ideal.num_vars() {
        return Err(Error::PartitionMismatch);
    }
    let overlap = j.generators().iter().any(|g| k.generators().contains(g));
    let mut union: Vec<&Monomial> = j.generators().iter().chain(k.generators()).collect();
    union.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    let mut own: Vec<&Monomial> = ideal.generators().iter().collect();
    own.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    if overlap || union != own {
        return Err(Error::PartitionMismatch);
    }
    let meet = j.intersect(k)?;
    let (ti, tj, tk, tm) = (tables(ideal)?, tables(j)?, tables(k)?, tables(&meet)?);
    let mut keys: Vec<(usize, usize)> = ti.entries().chain(tj.entries()).chain(tk.entries()).map(|(key, _)| key).collect();
    keys.extend(tm.entries().map(|((i, jj), _)| (i + 1, jj)));
    Ok(keys.into_iter().all(|(i, jj)| {
        let from_meet = if i == 0 { 0 } else { tm.get(i - 1, jj) };
        ti.get(i, jj) == tj.get(i, jj) + tk.get(i, jj) + from_meet
    }))
}
