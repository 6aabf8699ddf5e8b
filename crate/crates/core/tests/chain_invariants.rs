use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use octachain::decomposition::{decompose, leading_principal_minors};
use octachain::invariants::{
    gutman, kirchhoff_resistance_route, kirchhoff_spectral_route, mult_kirchhoff_resistance_route,
    mult_kirchhoff_spectral_route, spanning_trees_matrix_tree, wiener, ResistanceMatrix,
};
use octachain::matrix::{char_poly, int, laplacian};
use octachain::ChainGraph;
use proptest::prelude::*;

#[test]
fn degree_multiset() {
    for n in 1..=8 {
        let g = ChainGraph::build(n).unwrap();
        let mut counts = [0usize; 6];
        for d in g.degrees() {
            counts[d] += 1;
        }
        let n = n as usize;
        assert_eq!(
            (counts[3], counts[4], counts[5]),
            (4, 4 * n, 2 * n - 2),
            "n={n}"
        );
    }
}

#[test]
fn laplacian_char_poly_counts_trees() {
    for n in 1..=4 {
        let g = ChainGraph::build(n).unwrap();
        let p = char_poly(&laplacian(&g)).unwrap();
        assert!(p.coeff(0).is_zero());
        let v = g.vertex_count();
        let c1 = p.coeff(1);
        let signed = if (v - 1).is_even() { c1 } else { -c1 };
        let tau = spanning_trees_matrix_tree(&g).unwrap();
        assert_eq!(
            signed,
            int(v as i64) * num_rational::BigRational::from_integer(tau)
        );
    }
}

#[test]
fn zero_eigenvalue_lives_in_symmetric_block() {
    for n in 1..=5 {
        let g = ChainGraph::build(n).unwrap();
        let b = decompose(&g).unwrap();
        assert!(!char_poly(&b.l_s).unwrap().coeff(0).is_zero());
        let ones = vec![int(1); b.l_a.rows()];
        assert!(b.l_a.mul_vec(&ones).unwrap().iter().all(Zero::is_zero));
        assert!(b
            .nl_a_similar
            .mul_vec(&ones)
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        let lap = char_poly(&laplacian(&g)).unwrap();
        assert!(!lap.coeff(1).is_zero());
    }
}

#[test]
fn leading_minors_of_symmetric_block_are_powers_of_two() {
    let g = ChainGraph::build(3).unwrap();
    let b = decompose(&g).unwrap();
    let w = leading_principal_minors(&b.l_a).unwrap();
    for (i, wi) in w.iter().take(10).enumerate() {
        assert_eq!(*wi, int(1 << i));
    }
    assert!(w[10].is_zero());
}

#[test]
fn resistance_metric_on_small_chains() {
    for n in 1..=3 {
        let g = ChainGraph::build(n).unwrap();
        let r = ResistanceMatrix::new(&g).unwrap();
        let hops = g.all_pairs_distances();
        let mirror = g.mirror();
        let v = g.vertex_count();
        for a in 0..v {
            assert!(r.get(a, a).is_zero());
            for b in 0..v {
                assert_eq!(r.get(a, b), r.get(b, a));
                assert_eq!(r.get(a, b), r.get(mirror[a], mirror[b]));
                assert!(*r.get(a, b) <= int(hops[a][b] as i64));
                if a != b {
                    assert!(*r.get(a, b) > int(0));
                }
                for c in 0..v {
                    assert!(*r.get(a, c) <= r.get(a, b) + r.get(b, c));
                }
            }
        }
    }
}

#[test]
fn invariants_grow_and_are_bounded_by_distances() {
    let mut last: Option<(
        num_rational::BigRational,
        num_rational::BigRational,
        u64,
        u64,
        BigInt,
    )> = None;
    for n in 1..=6 {
        let g = ChainGraph::build(n).unwrap();
        let kf = kirchhoff_spectral_route(&g).unwrap();
        let kfs = mult_kirchhoff_spectral_route(&g).unwrap();
        let (w, gut) = (wiener(&g), gutman(&g));
        let tau = spanning_trees_matrix_tree(&g).unwrap();
        assert!(kf <= int(w as i64));
        assert!(kfs <= int(gut as i64));
        if let Some((pk, pks, pw, pg, pt)) = last {
            assert!(kf > pk && kfs > pks && w > pw && gut > pg && tau > pt);
        }
        last = Some((kf, kfs, w, gut, tau));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn resistance_and_spectral_routes_agree(n in 1i64..=4) {
        let g = ChainGraph::build(n).unwrap();
        prop_assert_eq!(kirchhoff_resistance_route(&g).unwrap(), kirchhoff_spectral_route(&g).unwrap());
        prop_assert_eq!(
            mult_kirchhoff_resistance_route(&g).unwrap(),
            mult_kirchhoff_spectral_route(&g).unwrap()
        );
    }

    #[test]
    fn distances_respect_mirror(n in 1i64..=5) {
        let g = ChainGraph::build(n).unwrap();
        let d = g.all_pairs_distances();
        let m = g.mirror();
        for a in 0..g.vertex_count() {
            for b in 0..g.vertex_count() {
                prop_assert_eq!(d[a][b], d[b][a]);
                prop_assert_eq!(d[a][b], d[m[a]][m[b]]);
            }
        }
    }
}
