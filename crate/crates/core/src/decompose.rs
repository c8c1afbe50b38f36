//! Shedding vertices and vertex decomposability.
//!
//! A complex is vertex decomposable when it is a simplex (including `{∅}`),
//! or has a shedding vertex `x` such that `del(x)` and `lk(x)` are both
//! vertex decomposable. Deletion and link live on the ground set `X ∖ {x}`.

use std::collections::HashMap;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::oracle::betti_oracle;
use crate::text::format_face;

/// Certificate of vertex decomposability.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DecompositionTree {
    /// A single-facet complex on `ground`.
    Simplex { facet: VertexSet, ground: VertexSet },
    /// A shedding vertex with certificates for its deletion and link.
    Node { vertex: usize, deletion: Box<DecompositionTree>, link: Box<DecompositionTree> },
}

/// `x` is shedding when no facet of `lk(x)` is a facet of `del(x)`.
pub fn is_shedding(complex: &SimplicialComplex, x: usize) -> Result<bool> {
    if !complex.is_vertex(x) {
        return Err(Error::NotAVertex { vertex: x });
    }
    let (del, lk) = (complex.deletion(x)?, complex.link(x)?);
    Ok(!lk.facets().iter().any(|f| del.facets().contains(f)))
}

/// The defining condition: every facet of `del(x)` is a facet of the complex.
pub fn is_shedding_by_definition(complex: &SimplicialComplex, x: usize) -> Result<bool> {
    if !complex.is_vertex(x) {
        return Err(Error::NotAVertex { vertex: x });
    }
    let del = complex.deletion(x)?;
    Ok(del.facets().iter().all(|f| complex.facets().contains(f)))
}

/// Memoizing recognizer; one instance may be reused across calls.
#[derive(Default)]
pub struct Decomposer {
    memo: HashMap<SimplicialComplex, Option<DecompositionTree>>,
}

impl Decomposer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Shedding vertices are tried in ascending order; the first success wins.
    pub fn decompose(&mut self, complex: &SimplicialComplex) -> Option<DecompositionTree> {
        if complex.is_simplex() {
            return Some(DecompositionTree::Simplex { facet: complex.facets()[0], ground: complex.ground() });
        }
        if let Some(hit) = self.memo.get(complex) {
            return hit.clone();
        }
        let found = self.search(complex);
        self.memo.insert(complex.clone(), found.clone());
        found
    }

    fn search(&mut self, complex: &SimplicialComplex) -> Option<DecompositionTree> {
        for x in complex.vertices().iter() {
            if !is_shedding(complex, x).expect("x is a vertex") {
                continue;
            }
            let Some(del) = self.decompose(&complex.deletion(x).expect("ground vertex")) else { continue };
            let Some(lk) = self.decompose(&complex.link(x).expect("x is a vertex")) else { continue };
            return Some(DecompositionTree::Node { vertex: x, deletion: Box::new(del), link: Box::new(lk) });
        }
        None
    }
}

pub fn vertex_decomposable(complex: &SimplicialComplex) -> Option<DecompositionTree> {
    Decomposer::new().decompose(complex)
}

impl DecompositionTree {
    /// Replays the certificate against `complex`, re-checking every shedding
    /// vertex and every leaf.
    pub fn verify(&self, complex: &SimplicialComplex) -> bool {
        match self {
            DecompositionTree::Simplex { facet, ground } => {
                complex.is_simplex() && complex.facets()[0] == *facet && complex.ground() == *ground
            }
            DecompositionTree::Node { vertex, deletion, link } => {
                if !matches!(is_shedding(complex, *vertex), Ok(true)) {
                    return false;
                }
                let (del, lk) = (complex.deletion(*vertex), complex.link(*vertex));
                matches!((del, lk), (Ok(d), Ok(l)) if deletion.verify(&d) && link.verify(&l))
            }
        }
    }

    pub fn num_nodes(&self) -> usize {
        match self {
            DecompositionTree::Simplex { .. } => 0,
            DecompositionTree::Node { deletion, link, .. } => 1 + deletion.num_nodes() + link.num_nodes(),
        }
    }

    /// `pd(R/I_Δ) = max(pd(del) + 1, pd(lk))` and `reg(R/I_Δ) = max(reg(del), reg(lk) + 1)`.
    ///
    /// A simplex on facet `F` and ground `V` has `I = (x_v : v ∈ V ∖ F)`, so
    /// `pd = |V ∖ F|` and `reg = 0`.
    pub fn pd_reg(&self) -> (usize, usize) {
        match self {
            DecompositionTree::Simplex { facet, ground } => (ground.difference(*facet).len(), 0),
            DecompositionTree::Node { deletion, link, .. } => {
                let ((pd1, reg1), (pd2, reg2)) = (deletion.pd_reg(), link.pd_reg());
                ((pd1 + 1).max(pd2), reg1.max(reg2 + 1))
            }
        }
    }

    /// Nested text form `(v: DEL | LK)`; leaves list their facet.
    pub fn to_text(&self, names: &[String]) -> String {
        match self {
            DecompositionTree::Simplex { facet, .. } => format_face(*facet, names),
            DecompositionTree::Node { vertex, deletion, link } => {
                format!("({}: {} | {})", names[*vertex], deletion.to_text(names), link.to_text(names))
            }
        }
    }
}

/// `(pd, reg)` of `R/I_Δ` from a decomposition.
pub fn pd_reg_recursive(complex: &SimplicialComplex) -> Result<(usize, usize)> {
    vertex_decomposable(complex).map(|t| t.pd_reg()).ok_or(Error::NotVertexDecomposable)
}

/// `(pd, reg)` of `R/I_Δ` from the homology oracle.
pub fn pd_reg_oracle(complex: &SimplicialComplex, field: Field) -> Result<(usize, usize)> {
    let q = betti_oracle(&complex.stanley_reisner_ideal(), field)?.quotient()?;
    let reg = q.reg().expect("R/I_Δ is non-zero");
    Ok((q.pd().expect("R/I_Δ is non-zero"), reg as usize))
}

/// Oracle `pd(R/I_Δ)` against `bight(I_Δ)`, for vertex decomposable `Δ`.
pub fn check_pd_equals_bight(complex: &SimplicialComplex, field: Field) -> Result<bool> {
    if vertex_decomposable(complex).is_none() {
        return Err(Error::NotVertexDecomposable);
    }
    Ok(pd_reg_oracle(complex, field)?.0 == complex.bight())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(n, facets).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied()).unwrap()
    }

    const X: usize = 0;
    const Y: usize = 1;
    const Z: usize = 2;

    #[test]
    fn shedding_examples() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        assert!(is_shedding(&d, Y).unwrap());
        assert!(is_shedding_by_definition(&d, Y).unwrap());
        let edge = cx(2, &[&[X, Y]]);
        assert!(!is_shedding(&edge, X).unwrap());
        let two_edges = cx(4, &[&[0, 1], &[2, 3]]);
        assert!(!is_shedding(&two_edges, 0).unwrap());
        let ghost = SimplicialComplex::on_ground(3, VertexSet::full(3), [set(&[X])]).unwrap();
        assert_eq!(is_shedding(&ghost, Y).unwrap_err(), Error::NotAVertex { vertex: Y });
    }

    #[test]
    fn decomposition_examples() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        let tree = vertex_decomposable(&d).unwrap();
        assert_eq!(
            tree,
            DecompositionTree::Node {
                vertex: Y,
                deletion: Box::new(DecompositionTree::Simplex { facet: set(&[X, Z]), ground: set(&[X, Z]) }),
                link: Box::new(DecompositionTree::Simplex { facet: VertexSet::EMPTY, ground: set(&[X, Z]) }),
            }
        );
        assert!(tree.verify(&d));
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(tree.to_text(&names), "(y: x,z | -)");
        assert!(vertex_decomposable(&cx(4, &[&[0, 1], &[2, 3]])).is_none());
        let simplex = cx(3, &[&[X, Y, Z]]);
        assert!(matches!(vertex_decomposable(&simplex), Some(DecompositionTree::Simplex { .. })));
    }

    #[test]
    fn replay_rejects_wrong_certificates() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        let bad = DecompositionTree::Node {
            vertex: X,
            deletion: Box::new(DecompositionTree::Simplex { facet: set(&[Z]), ground: set(&[Y, Z]) }),
            link: Box::new(DecompositionTree::Simplex { facet: set(&[Z]), ground: set(&[Y, Z]) }),
        };
        assert!(!bad.verify(&d));
        let leaf = DecompositionTree::Simplex { facet: set(&[X, Z]), ground: set(&[X, Y, Z]) };
        assert!(!leaf.verify(&d));
    }

    #[test]
    fn pd_reg_examples() {
        let d = cx(3, &[&[X, Z], &[Y]]);
        assert_eq!(pd_reg_recursive(&d).unwrap(), (2, 1));
        assert_eq!(pd_reg_oracle(&d, Field::Rational).unwrap(), (2, 1));
        assert_eq!(pd_reg_recursive(&cx(3, &[&[X, Y, Z]])).unwrap(), (0, 0));
        let c4 = cx(4, &[&[0, 2], &[1, 3]]);
        assert_eq!(pd_reg_recursive(&c4).unwrap_err(), Error::NotVertexDecomposable);
    }

    #[test]
    fn pd_equals_bight_examples() {
        assert!(check_pd_equals_bight(&cx(3, &[&[X, Z], &[Y]]), Field::Rational).unwrap());
        assert!(check_pd_equals_bight(&cx(3, &[&[X, Y, Z]]), Field::Rational).unwrap());
        // Independence complex of the path a-b-c-d.
        let p4 = cx(4, &[&[0, 2], &[0, 3], &[1, 3]]);
        assert!(check_pd_equals_bight(&p4, Field::Rational).unwrap());
        assert!(check_pd_equals_bight(&cx(4, &[&[0, 1], &[2, 3]]), Field::Rational).is_err());
    }

    #[test]
    fn node_identity_for_dual_ideals() {
        let d = cx(4, &[&[0, 2], &[0, 3], &[1, 3]]);
        let tree = vertex_decomposable(&d).unwrap();
        let DecompositionTree::Node { vertex, .. } = tree else { panic!("expected a node") };
        let (del, lk) = (d.deletion(vertex).unwrap(), d.link(vertex).unwrap());
        let x = Monomial::var(4, vertex).unwrap();
        let rebuilt = del.dual_facet_ideal().mul_monomial(&x).unwrap().sum(&lk.dual_facet_ideal()).unwrap();
        assert_eq!(rebuilt, d.dual_facet_ideal());
        assert!(lk.dual_facet_ideal().is_subideal_of(&del.dual_facet_ideal()).unwrap());
    }
}
