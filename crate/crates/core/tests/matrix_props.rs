use num_traits::{One, Zero};
use octachain::matrix::{
    char_poly, char_poly_by_interpolation, determinant, determinant_by_expansion, int,
    principal_minor_sum, principal_minor_sum_enumerated, solve,
};
use octachain::RationalMatrix;
use proptest::prelude::*;

fn int_matrix(max_dim: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_dim).prop_flat_map(|d| {
        prop::collection::vec(-6i64..=6, d * d)
            .prop_map(move |v| RationalMatrix::from_fn(d, d, |i, j| int(v[i * d + j])))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bareiss_matches_expansion(m in int_matrix(6)) {
        prop_assert_eq!(determinant(&m).unwrap(), determinant_by_expansion(&m).unwrap());
    }

    #[test]
    fn hessenberg_matches_interpolation(m in int_matrix(6)) {
        prop_assert_eq!(char_poly(&m).unwrap(), char_poly_by_interpolation(&m).unwrap());
    }

    #[test]
    fn char_poly_trace_and_determinant(m in int_matrix(6)) {
        let p = char_poly(&m).unwrap();
        let n = m.rows();
        prop_assert_eq!(p.coeff(n - 1), -m.trace());
        let det = determinant(&m).unwrap();
        let signed = if n % 2 == 0 { det } else { -det };
        prop_assert_eq!(p.coeff(0), signed.clone());
        prop_assert_eq!(p.eval(&num_rational::BigRational::zero()), signed);
    }

    #[test]
    fn minor_sums_match_coefficients(m in int_matrix(5)) {
        let n = m.rows();
        let p = char_poly(&m).unwrap();
        for order in 0..=n {
            let brute = principal_minor_sum_enumerated(&m, order).unwrap();
            prop_assert_eq!(&brute, &p.principal_minor_sum(order));
            prop_assert_eq!(&brute, &principal_minor_sum(&m, order).unwrap());
        }
    }

    #[test]
    fn solve_round_trips(m in int_matrix(6), seed in prop::collection::vec(-9i64..=9, 6)) {
        prop_assume!(!determinant(&m).unwrap().is_zero());
        let b: Vec<_> = seed[..m.rows()].iter().map(|&v| int(v)).collect();
        let x = solve(&m, &b).unwrap();
        prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
    }
}

#[test]
fn empty_minor_is_one() {
    let m = RationalMatrix::from_i64_rows(&[vec![3, 1], vec![1, 3]]);
    assert!(principal_minor_sum_enumerated(&m, 0).unwrap().is_one());
}
