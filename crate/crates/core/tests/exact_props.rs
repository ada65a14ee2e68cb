use proptest::prelude::*;
use qlab_core::exactnum::{ExactMatrix, GaussRational, RowSpace};

fn scalar() -> impl Strategy<Value = GaussRational> {
    (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5).prop_map(|(a, b, c, d)| {
        &GaussRational::from_ratio(a, b) + &(&GaussRational::from_ratio(c, d) * &GaussRational::i())
    })
}

fn sparse_scalar() -> impl Strategy<Value = GaussRational> {
    prop_oneof![Just(GaussRational::zero()), scalar()]
}

fn matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(sparse_scalar(), r * c).prop_map(move |e| ExactMatrix::new(r, c, e).unwrap())
    })
}

fn matrix_and_vector() -> impl Strategy<Value = (ExactMatrix, Vec<GaussRational>)> {
    matrix().prop_flat_map(|m| {
        let c = m.cols();
        (Just(m), proptest::collection::vec(sparse_scalar(), c))
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let (r, rank) = m.rref();
        let (rr, rank2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rank, m.rank());
    }

    #[test]
    fn membership_is_invariant_under_rref((m, v) in matrix_and_vector()) {
        let (r, _) = m.rref();
        prop_assert_eq!(m.in_row_space(&v).unwrap(), r.in_row_space(&v).unwrap());
    }

    #[test]
    fn rows_and_combinations_are_members((m, v) in matrix_and_vector()) {
        for row in m.row_iter() {
            prop_assert!(m.in_row_space(row).unwrap());
        }
        // v · m is a combination of the rows when v has one entry per row
        let coeffs: Vec<GaussRational> = v.iter().cycle().take(m.rows()).cloned().collect();
        let combo: Vec<GaussRational> = (0..m.cols())
            .map(|j| (0..m.rows()).fold(GaussRational::zero(), |acc, i| &acc + &(&coeffs[i] * m.get(i, j))))
            .collect();
        prop_assert!(m.in_row_space(&combo).unwrap());
    }

    #[test]
    fn row_space_is_canonical(m in matrix()) {
        let a = RowSpace::from_matrix(m.clone());
        let mut rows: Vec<Vec<GaussRational>> = m.row_iter().map(<[GaussRational]>::to_vec).collect();
        rows.reverse();
        let b = RowSpace::span(m.cols(), rows).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn arithmetic_is_exact(a in scalar(), b in scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn literal_round_trip(a in scalar()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<GaussRational>().unwrap(), a);
    }
}

#[test]
fn inverse_of_zero_fails() {
    assert!(GaussRational::zero().inv().is_err());
}
