use exactlinalg::{rank, rank_kernel, solve, Field, Fp, Solution, SparseMatrix, Q};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, c), r)
    })
}

fn to_q(rows: &[Vec<i64>]) -> SparseMatrix<Q> {
    let rows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| Q::from_i64(x)).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let m = SparseMatrix::from_dense(&rows);
    if rows.is_empty() {
        SparseMatrix::zeros(0, cols)
    } else {
        m
    }
}

fn to_fp<const P: u64>(rows: &[Vec<i64>]) -> SparseMatrix<Fp<P>> {
    let rows: Vec<Vec<Fp<P>>> = rows.iter().map(|r| r.iter().map(|&x| Fp::<P>::from_i64(x)).collect()).collect();
    SparseMatrix::from_dense(&rows)
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(rows in small_matrix()) {
        let m = to_q(&rows);
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        let p = to_fp::<5>(&rows);
        prop_assert_eq!(rank(&p), rank(&p.transpose()));
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in small_matrix()) {
        let m = to_q(&rows);
        let (r, ker) = rank_kernel(&m);
        prop_assert_eq!(r + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).unwrap().is_empty());
        }
        let k = SparseMatrix::from_columns(m.cols(), &ker).unwrap();
        prop_assert_eq!(rank(&k), ker.len());
    }

    #[test]
    fn solve_agrees_with_augmented_rank(rows in small_matrix(), seed in prop::collection::vec(-2i64..=2, 6)) {
        let m = to_q(&rows);
        let b: Vec<(usize, Q)> = (0..m.rows())
            .filter(|&i| seed[i] != 0)
            .map(|i| (i, Q::from_i64(seed[i])))
            .collect();
        let mut trip: Vec<(usize, usize, Q)> = m.triplets().map(|(i, j, v)| (i, j, v.clone())).collect();
        trip.extend(b.iter().map(|(i, v)| (*i, m.cols(), v.clone())));
        let aug = SparseMatrix::from_triplets(m.rows(), m.cols() + 1, trip).unwrap();
        let consistent = rank(&aug) == rank(&m);
        match solve(&m, &b).unwrap() {
            Solution::Solved(x) => {
                prop_assert!(consistent);
                prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
            }
            Solution::Inconsistent => prop_assert!(!consistent),
        }
    }

    #[test]
    fn elimination_is_deterministic(rows in small_matrix()) {
        let m = to_q(&rows);
        prop_assert_eq!(rank_kernel(&m), rank_kernel(&m));
    }
}
