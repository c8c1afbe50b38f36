//! Brute-force homological ground truth.
//!
//! Betti numbers here come only from reduced simplicial homology: Hochster's
//! formula for square-free ideals and upper Koszul simplicial complexes for
//! arbitrary monomial ideals. Nothing in this module uses splittings,
//! decompositions or linear quotients.

use std::collections::HashSet;

use crate::betti::{BettiTable, Subject};
use crate::complex::{SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::linalg::{rank, Field};
use crate::monomial::{Monomial, MonomialIdeal};

/// Reduced homology dimensions `dim H̃_d` for `d = -1 ..= dim Δ`, together with
/// the chain-group ranks they were computed from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedHomology {
    dims: Vec<usize>,
    chain_ranks: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_d`, zero outside the computed range.
    pub fn dim(&self, d: isize) -> usize {
        usize::try_from(d + 1).ok().and_then(|k| self.dims.get(k)).copied().unwrap_or(0)
    }

    /// Dimensions indexed from `d = -1`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Ranks of the chain groups `C_d`, indexed from `d = -1`.
    pub fn chain_ranks(&self) -> &[usize] {
        &self.chain_ranks
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&h| h == 0)
    }

    pub fn euler_from_chains(&self) -> i64 {
        alternating_sum(&self.chain_ranks)
    }

    pub fn euler_from_homology(&self) -> i64 {
        alternating_sum(&self.dims)
    }
}

fn alternating_sum(v: &[usize]) -> i64 {
    // Index 0 is degree -1, which carries sign -1.
    v.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { -(x as i64) } else { x as i64 }).sum()
}

/// Reduced homology of a downward-closed face family sorted by size.
fn homology_of_faces(faces: &[VertexSet], field: Field) -> ReducedHomology {
    let top = faces.last().map_or(0, |f| f.len());
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_size[f.len()].push(f.bits());
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // ranks[k] = rank of ∂ : C_{k-1} -> C_{k-2}, i.e. faces of size k to size k-1.
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let (lower, upper) = (&by_size[k - 1], &by_size[k]);
        if lower.is_empty() || upper.is_empty() {
            continue;
        }
        let rows: Vec<Vec<i64>> = upper
            .iter()
            .map(|&face| {
                let mut row = vec![0i64; lower.len()];
                let mut sign = 1i64;
                let mut rest = face;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    let idx = lower.binary_search(&(face ^ bit)).expect("face family is not downward closed");
                    row[idx] = sign;
                    sign = -sign;
                    rest ^= bit;
                }
                row
            })
            .collect();
        ranks[k] = rank(&rows, field);
    }
    let chain_ranks: Vec<usize> = by_size.iter().map(Vec::len).collect();
    let dims = (0..=top).map(|k| chain_ranks[k] - ranks[k] - ranks[k + 1]).collect();
    ReducedHomology { dims, chain_ranks }
}

/// Reduced simplicial homology of `Δ` over `field`, for `d = -1 ..= dim Δ`.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: Field) -> ReducedHomology {
    homology_of_faces(&complex.faces(), field)
}

/// `β_{i,j}(I_Δ) = Σ_{|W| = j} dim H̃_{j-i-2}(Δ|_W)`.
pub fn hochster_betti(complex: &SimplicialComplex, field: Field) -> BettiTable {
    let mut table = BettiTable::new(Subject::Ideal);
    let mut subsets: Vec<VertexSet> = complex.ground().subsets().collect();
    subsets.sort_by_key(|w| (w.len(), *w));
    for w in subsets {
        let restricted = complex.induced(w).expect("subset of the ground set");
        if restricted.is_cone() {
            continue;
        }
        let h = reduced_homology_dims(&restricted, field);
        let j = w.len() as isize;
        for (k, &dim) in h.dims().iter().enumerate() {
            let d = k as isize - 1;
            let i = j - d - 2;
            if dim > 0 && i >= 0 {
                table.add(i as usize, j as usize, dim as u64);
            }
        }
    }
    table
}

/// All least common multiples of non-empty subsets of the generators.
fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut lattice: HashSet<Monomial> = HashSet::new();
    for g in ideal.generators() {
        let joined: Vec<Monomial> = lattice.iter().map(|l| l.lcm_unchecked(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(joined);
    }
    let mut out: Vec<Monomial> = lattice.into_iter().collect();
    out.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    out
}

/// Betti numbers of an arbitrary monomial ideal from the upper Koszul
/// simplicial complexes `K^b(I) = {F ⊆ supp b : x^{b-F} ∈ I}`, using
/// `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))`.
///
/// Only multidegrees in the lcm lattice can carry Betti numbers, so `b` ranges
/// over it.
pub fn koszul_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if ideal.num_vars() > MAX_VERTICES {
        return Err(Error::TooManyVertices { requested: ideal.num_vars(), max: MAX_VERTICES });
    }
    let mut table = BettiTable::new(Subject::Ideal);
    for b in lcm_lattice(ideal) {
        let support = VertexSet::from_bits(b.support_mask());
        // x^{b-F} ∈ I iff some g | b has F ⊆ {k : g_k < b_k}.
        let facets: Vec<VertexSet> = ideal
            .generators()
            .iter()
            .filter(|g| g.divides_unchecked(&b))
            .map(|g| {
                let slack = support.iter().filter(|&k| g.exponent(k) < b.exponent(k));
                VertexSet::from_indices(slack).expect("index below 64")
            })
            .collect();
        let upper = SimplicialComplex::on_ground(ideal.num_vars(), support, facets)?;
        if upper.is_cone() {
            continue;
        }
        let h = reduced_homology_dims(&upper, field);
        let j = b.degree() as usize;
        for (k, &dim) in h.dims().iter().enumerate() {
            // k = (i - 1) + 1
            table.add(k, j, dim as u64);
        }
    }
    Ok(table)
}

/// Oracle Betti table of an ideal: Hochster for square-free input, upper
/// Koszul otherwise.
pub fn betti_oracle(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Ok(BettiTable::from_entries(Subject::Ideal, [((0, 0), 1)]));
    }
    if ideal.is_squarefree() && ideal.num_vars() <= MAX_VERTICES {
        let complex = SimplicialComplex::from_stanley_reisner(ideal)?;
        return Ok(hochster_betti(&complex, field));
    }
    koszul_betti(ideal, field)
}

/// `β_{i,j}(I) = 0` for all `j ≠ i + d`, where every generator has degree `d`.
///
/// The zero ideal and ideals generated in several degrees are never linear.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    if ideal.is_zero() || !ideal.is_equigenerated() {
        return Ok(false);
    }
    let d = ideal.generators()[0].degree() as usize;
    Ok(betti_oracle(ideal, field)?.entries().all(|((i, j), _)| j == i + d))
}

/// Eagon–Reiner: `Δ` is Cohen–Macaulay iff `I_{Δ^∨}` has a linear resolution.
/// The full simplex counts as Cohen–Macaulay.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: Field) -> Result<bool> {
    if complex.stanley_reisner_ideal().is_zero() {
        return Ok(true);
    }
    has_linear_resolution(&complex.dual_facet_ideal(), field)
}

/// Reisner: `Δ` is Cohen–Macaulay iff `H̃_i(lk F) = 0` for every face `F`
/// and every `i < dim lk F`. Independent of [`is_cohen_macaulay`].
pub fn is_cohen_macaulay_reisner(complex: &SimplicialComplex, field: Field) -> bool {
    complex.faces().into_iter().all(|face| {
        let link = face.iter().fold(complex.clone(), |lk, v| lk.link(v).expect("vertex of a face"));
        let h = reduced_homology_dims(&link, field);
        (-1..link.dim()).all(|i| h.dim(i) == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_index_facets(n, facets).unwrap()
    }

    fn sf(n: usize, supports: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, supports.iter().map(|s| Monomial::from_support(n, s.iter().copied()).unwrap()))
            .unwrap()
    }

    fn table(entries: &[((usize, usize), u64)]) -> BettiTable {
        BettiTable::from_entries(Subject::Ideal, entries.iter().copied())
    }

    #[test]
    fn homology_of_small_complexes() {
        let two_points = reduced_homology_dims(&cx(2, &[&[0], &[1]]), Field::Rational);
        assert_eq!(two_points.dims(), &[0, 1]);
        let circle = reduced_homology_dims(&cx(3, &[&[0, 1], &[1, 2], &[0, 2]]), Field::Rational);
        assert_eq!(circle.dim(1), 1);
        assert_eq!(circle.dim(0), 0);
        for facet in [&[0][..], &[0, 1], &[0, 1, 2]] {
            let h = reduced_homology_dims(&cx(3, &[facet]), Field::Rational);
            assert!(h.is_acyclic());
        }
        let empty = reduced_homology_dims(&cx(1, &[&[]]), Field::Rational);
        assert_eq!(empty.dim(-1), 1);
    }

    #[test]
    fn euler_characteristic_matches() {
        let d = cx(5, &[&[0, 1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let h = reduced_homology_dims(&d, Field::Rational);
        assert_eq!(h.euler_from_chains(), h.euler_from_homology());
    }

    #[test]
    fn real_projective_plane_has_two_torsion() {
        // Six-vertex triangulation of RP^2.
        let facets: &[&[usize]] = &[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 1, 5],
            &[1, 2, 4],
            &[2, 3, 5],
            &[1, 3, 4],
            &[1, 3, 5],
            &[2, 4, 5],
        ];
        let rp2 = cx(6, facets);
        let q = reduced_homology_dims(&rp2, Field::Rational);
        assert!(q.is_acyclic());
        let f2 = reduced_homology_dims(&rp2, Field::Prime(2));
        assert_eq!((f2.dim(1), f2.dim(2)), (1, 1));
    }

    #[test]
    fn hochster_examples() {
        // (xy) in two variables: Δ = <{x},{y}>.
        let t = hochster_betti(&cx(2, &[&[0], &[1]]), Field::Rational);
        assert_eq!(t, table(&[((0, 2), 1)]));
        // (xy, yz)
        let t = hochster_betti(&cx(3, &[&[0, 2], &[1]]), Field::Rational);
        assert_eq!(t, table(&[((0, 2), 2), ((1, 3), 1)]));
        // (x, y)
        let t = hochster_betti(&cx(2, &[&[]]), Field::Rational);
        assert_eq!(t, table(&[((0, 1), 2), ((1, 2), 1)]));
    }

    #[test]
    fn koszul_examples() {
        let i = MonomialIdeal::minimalize(2, [Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1])]).unwrap();
        assert_eq!(koszul_betti(&i, Field::Rational).unwrap(), table(&[((0, 2), 2), ((1, 3), 1)]));
        let i = sf(3, &[&[0, 1, 2]]);
        assert_eq!(koszul_betti(&i, Field::Rational).unwrap(), table(&[((0, 3), 1)]));
        let i = sf(3, &[&[0, 1], &[1, 2]]);
        let complex = SimplicialComplex::from_stanley_reisner(&i).unwrap();
        assert_eq!(koszul_betti(&i, Field::Rational).unwrap(), hochster_betti(&complex, Field::Rational));
        assert!(koszul_betti(&MonomialIdeal::zero(2), Field::Rational).unwrap().is_empty());
        assert_eq!(koszul_betti(&MonomialIdeal::unit(2), Field::Rational).unwrap(), table(&[((0, 0), 1)]));
    }

    #[test]
    fn linear_resolution_examples() {
        let c4 = sf(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert!(has_linear_resolution(&c4, Field::Rational).unwrap());
        let two_k2 = sf(4, &[&[0, 1], &[2, 3]]);
        assert!(!has_linear_resolution(&two_k2, Field::Rational).unwrap());
        assert_eq!(betti_oracle(&two_k2, Field::Rational).unwrap().get(1, 4), 1);
        let mixed = sf(3, &[&[1], &[0, 2]]);
        assert!(!has_linear_resolution(&mixed, Field::Rational).unwrap());
        assert!(!has_linear_resolution(&MonomialIdeal::zero(3), Field::Rational).unwrap());
    }

    #[test]
    fn cohen_macaulay_examples() {
        // Δ_{P3}^∨: I(P3) = (xy, yz), Δ_{P3} = <{x,z},{y}>.
        let dual = cx(3, &[&[0, 2], &[1]]).alexander_dual().unwrap();
        assert!(is_cohen_macaulay(&dual, Field::Rational).unwrap());
        // Δ_{2K2}^∨ with I(2K2) = (ab, cd).
        let indep = SimplicialComplex::from_stanley_reisner(&sf(4, &[&[0, 1], &[2, 3]])).unwrap();
        assert!(!is_cohen_macaulay(&indep.alexander_dual().unwrap(), Field::Rational).unwrap());
        assert!(is_cohen_macaulay(&cx(3, &[&[0, 1, 2]]), Field::Rational).unwrap());
    }

    #[test]
    fn reisner_agrees_on_small_examples() {
        let cases = [
            (cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]), true),
            (cx(4, &[&[0, 1], &[2, 3]]), false),
            (cx(3, &[&[0, 2], &[1]]), false),
            (cx(3, &[&[0, 1, 2]]), true),
            (cx(3, &[&[0], &[1], &[2]]), true),
        ];
        for (complex, expected) in cases {
            assert_eq!(is_cohen_macaulay_reisner(&complex, Field::Rational), expected, "{complex:?}");
            assert_eq!(is_cohen_macaulay(&complex, Field::Rational).unwrap(), expected, "{complex:?}");
        }
    }
}
