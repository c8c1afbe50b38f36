use proptest::prelude::*;

use vdsplit_core::complex::{SimplicialComplex, VertexSet};
use vdsplit_core::corpus::all_complexes;
use vdsplit_core::oracle::{betti_oracle, hochster_betti, is_cohen_macaulay, koszul_betti, reduced_homology_dims};
use vdsplit_core::Field;

fn complex_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u64..(1 << n), 1..=2 * n)
            .prop_map(move |sets| SimplicialComplex::from_facets(n, sets.into_iter().map(VertexSet::from_bits)).unwrap())
    })
}

/// The six-vertex triangulation of the real projective plane.
fn rp2() -> SimplicialComplex {
    let facets: &[&[usize]] = &[
        &[0, 1, 2],
        &[0, 2, 3],
        &[0, 3, 4],
        &[0, 4, 5],
        &[0, 1, 5],
        &[1, 2, 4],
        &[2, 3, 5],
        &[1, 3, 4],
        &[2, 4, 5],
        &[1, 3, 5],
    ];
    SimplicialComplex::from_index_facets(6, facets).unwrap()
}

#[test]
fn projective_plane_sees_the_characteristic() {
    let c = rp2();
    let dims = |field| {
        let h = reduced_homology_dims(&c, field);
        (0..=2).map(|d| h.dim(d)).collect::<Vec<_>>()
    };
    assert_eq!(dims(Field::Rational), vec![0, 0, 0]);
    assert_eq!(dims(Field::prime(2).unwrap()), vec![0, 1, 1]);
    let q = hochster_betti(&c, Field::Rational);
    assert_eq!(q, hochster_betti(&c, Field::prime(5).unwrap()));
    assert_ne!(q, hochster_betti(&c, Field::prime(2).unwrap()));
    assert!(is_cohen_macaulay(&c, Field::Rational).unwrap());
    assert!(!is_cohen_macaulay(&c, Field::prime(2).unwrap()).unwrap());
}

#[test]
fn hochster_equals_koszul_exhaustively_up_to_five_vertices() {
    for n in 1..=5 {
        for c in all_complexes(n).unwrap() {
            let ideal = c.stanley_reisner_ideal();
            assert_eq!(hochster_betti(&c, Field::Rational), koszul_betti(&ideal, Field::Rational).unwrap(), "{c:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hochster_equals_koszul_on_six_vertices(c in complex_strategy(6, 6)) {
        let ideal = c.stanley_reisner_ideal();
        prop_assert_eq!(hochster_betti(&c, Field::Rational), koszul_betti(&ideal, Field::Rational).unwrap());
    }

    #[test]
    fn euler_characteristics_agree(c in complex_strategy(1, 7), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        for field in [Field::Rational, Field::prime(p).unwrap()] {
            let h = reduced_homology_dims(&c, field);
            prop_assert_eq!(h.euler_from_chains(), h.euler_from_homology());
        }
    }

    #[test]
    fn rational_and_large_prime_tables_agree(c in complex_strategy(1, 6)) {
        let q = betti_oracle(&c.stanley_reisner_ideal(), Field::Rational).unwrap();
        for p in [5u64, 7, 101] {
            prop_assert_eq!(&q, &betti_oracle(&c.stanley_reisner_ideal(), Field::prime(p).unwrap()).unwrap());
        }
    }

    #[test]
    fn terai_duality(c in complex_strategy(1, 6)) {
        let ideal = c.stanley_reisner_ideal();
        prop_assume!(!ideal.is_zero());
        let dual = ideal.alexander_dual().unwrap();
        let pd = betti_oracle(&dual, Field::Rational).unwrap().pd();
        let reg = betti_oracle(&ideal, Field::Rational).unwrap().quotient().unwrap().reg();
        prop_assert_eq!(pd.map(|p| p as i64), reg);
    }
}
