use proptest::prelude::*;
use quiverdef::arith::{f2_rank_kernel, f2_solve, witt_poly_mul, F2Matrix, F2Poly, F2Vec, WittPoly, WittScalar};
use quiverdef::atlas::small::SmallMat;
use quiverdef::Error;

fn mat(rows: usize, cols: usize, bits: &[bool]) -> F2Matrix {
    F2Matrix::from_fn(rows, cols, |i, j| bits[i * cols + j])
}

fn arb_mat(max: usize) -> impl Strategy<Value = F2Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(any::<bool>(), r * c).prop_map(move |b| mat(r, c, &b)))
}

/// Rank by counting distinct row combinations: |row space| = 2^rank.
fn brute_rank(m: &F2Matrix) -> usize {
    let rows: Vec<F2Vec> = m.row_vecs();
    let mut span = std::collections::HashSet::new();
    for mask in 0u32..(1 << rows.len()) {
        let mut v = F2Vec::zeros(m.cols());
        for (i, r) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.xor_assign(r);
            }
        }
        span.insert(v.to_bit_string());
    }
    span.len().trailing_zeros() as usize
}

#[test]
fn rank_kernel_examples() {
    let (r, k) = f2_rank_kernel(&F2Matrix::identity(3));
    assert_eq!((r, k.len()), (3, 0));
    let (r, k) = f2_rank_kernel(&F2Matrix::zeros(2, 5));
    assert_eq!(r, 0);
    let units: Vec<String> = (0..5).map(|i| F2Vec::unit(5, i).to_bit_string()).collect();
    let mut got: Vec<String> = k.iter().map(F2Vec::to_bit_string).collect();
    got.sort();
    let mut want = units;
    want.sort();
    assert_eq!(got, want);
    let (r, k) = f2_rank_kernel(&F2Matrix::from_rows(&[[1u8, 1], [1, 1]], 2).unwrap());
    assert_eq!(r, 1);
    assert_eq!(k.iter().map(F2Vec::to_bit_string).collect::<Vec<_>>(), ["11"]);
}

#[test]
fn solve_examples() {
    let b = F2Vec::from_bit_str("101").unwrap();
    assert_eq!(f2_solve(&F2Matrix::identity(3), &b).unwrap(), Some(b.clone()));
    assert_eq!(f2_solve(&F2Matrix::zeros(3, 3), &b).unwrap(), None);
    let one = F2Matrix::from_rows(&[[1u8, 1]], 2).unwrap();
    assert_eq!(f2_solve(&one, &F2Vec::from_bit_str("1").unwrap()).unwrap().unwrap().to_bit_string(), "10");
    assert!(matches!(f2_solve(&one, &b), Err(Error::DimensionMismatch(_))));
}

#[test]
fn witt_poly_examples() {
    let t = WittPoly::t(8).unwrap();
    assert_eq!(witt_poly_mul(&t, &t).unwrap(), WittPoly::from_coeffs(&[0, 0, 1], 8).unwrap());
    let q = WittPoly::from_coeffs(&[-2, 0, 1], 8).unwrap();
    assert_eq!(witt_poly_mul(&t, &q).unwrap().raw_coefficients(), [0, 254, 0, 1]);
    let q16 = WittPoly::from_coeffs(&[-2, 0, 1], 16).unwrap();
    assert_eq!(witt_poly_mul(&q16, &q16).unwrap().signed_coefficients(), [4, 0, -4, 0, 1]);
    assert!(matches!(witt_poly_mul(&q, &q16), Err(Error::PrecisionMismatch(8, 16))));
    assert!(matches!(WittScalar::new(1, 65), Err(Error::Unsupported(_))));
}

proptest! {
    #[test]
    fn rank_matches_transpose_and_brute_force(m in arb_mat(7)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank(), brute_rank(&m));
        let (r, k) = f2_rank_kernel(&m);
        prop_assert_eq!(r + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn solve_agrees_with_rank(m in arb_mat(6), bits in prop::collection::vec(any::<bool>(), 6)) {
        let b = F2Vec::from_bits(bits.into_iter().take(m.rows()));
        let consistent = m.hstack(&F2Matrix::from_col_vecs(std::slice::from_ref(&b), m.rows())).rank() == m.rank();
        match f2_solve(&m, &b).unwrap() {
            Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
            None => prop_assert!(!consistent),
        }
    }

    #[test]
    fn product_transpose(a in arb_mat(5), bits in prop::collection::vec(any::<bool>(), 25), c in 1usize..=5) {
        let b = mat(a.cols(), c, &bits[..a.cols() * c]);
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn small_matrices_agree(a in 0u64..(1 << 16), b in 0u64..(1 << 16)) {
        let (x, y) = (SmallMat::from_bits(4, 4, a), SmallMat::from_bits(4, 4, b));
        prop_assert_eq!(x.rank(), x.to_f2().rank());
        prop_assert_eq!(SmallMat::from_f2(&x.to_f2().mul(&y.to_f2())), x.mul(&y));
        prop_assert_eq!(SmallMat::from_f2(&x.to_f2().add(&y.to_f2())), x.add(&y));
    }

    #[test]
    fn witt_scalars_form_a_ring(m in prop::sample::select(vec![1u32, 8, 32, 64]), a: i64, b: i64, c: i64) {
        let s = |v| WittScalar::new(v, m).unwrap();
        let (a, b, c) = (s(a), s(b), s(c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
        prop_assert_eq!(a.sub(&b).unwrap().add(&b).unwrap(), a);
    }

    #[test]
    fn witt_polys_form_a_ring(m in prop::sample::select(vec![1u32, 8, 32]),
                              a in prop::collection::vec(-300i64..300, 0..6),
                              b in prop::collection::vec(-300i64..300, 0..6),
                              c in prop::collection::vec(-300i64..300, 0..6)) {
        let p = |v: &[i64]| WittPoly::from_coeffs(v, m).unwrap();
        let (a, b, c) = (p(&a), p(&b), p(&c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        // reduction mod 2 and truncation are ring maps
        prop_assert_eq!(a.mul(&b).unwrap().mod2(), a.mod2().mul(&b.mod2()));
        prop_assert_eq!(a.add(&b).unwrap().mod2(), a.mod2().add(&b.mod2()));
        let k = m.min(4);
        prop_assert_eq!(a.mul(&b).unwrap().truncate(k).unwrap(), a.truncate(k).unwrap().mul(&b.truncate(k).unwrap()).unwrap());
    }

    #[test]
    fn f2_poly_products(a in prop::collection::vec(any::<bool>(), 0..40), b in prop::collection::vec(any::<bool>(), 0..40)) {
        let (x, y) = (F2Poly::from_bits(a), F2Poly::from_bits(b));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).degree(), x.degree().zip(y.degree()).map(|(p, q)| p + q));
    }
}
