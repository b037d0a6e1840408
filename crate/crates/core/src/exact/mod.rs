//! Exact rational scalars and dense matrices, plus the linear-algebra
//! kernels the rest of the crate is built on.

mod mat;
mod rat;
mod scaled;
mod span;

pub use mat::Mat;
pub use rat::{q, Rat};
pub use scaled::{scaled_exp, ScaledMat};
pub use span::{SpanBasis, SparseVec};

use crate::error::{Error, Result};

/// `[A, B] = AB − BA`.
pub fn lie_bracket(a: &Mat, b: &Mat) -> Result<Mat> {
    if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "bracket of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

/// `K_B − K_{B,I} K_I⁻¹ K_{I,B}` where `I = interior` and `B` is the
/// complement of `I`, kept in original order.
pub fn schur_complement(k: &Mat, interior: &[usize]) -> Result<Mat> {
    if !k.is_square() {
        return Err(Error::DimensionMismatch(
            "Schur complement of a non-square matrix".into(),
        ));
    }
    let n = k.rows();
    if let Some(&bad) = interior.iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            max: n.saturating_sub(1),
        });
    }
    let mut inner: Vec<usize> = interior.to_vec();
    inner.sort_unstable();
    inner.dedup();
    let outer: Vec<usize> = (0..n).filter(|i| inner.binary_search(i).is_err()).collect();
    let k_b = k.select(&outer, &outer);
    if inner.is_empty() {
        return Ok(k_b);
    }
    let k_i = k.select(&inner, &inner);
    let k_ib = k.select(&inner, &outer);
    let k_bi = k.select(&outer, &inner);
    let x = k_i.solve(&k_ib)?.ok_or(Error::SingularInterior)?;
    k_b.try_sub(&k_bi.try_mul(&x)?)
}

/// `Σ tᵐ Nᵐ / m!`, which terminates because `N` is nilpotent.
pub fn exp_nilpotent(n: &Mat, t: &Rat) -> Result<Mat> {
    if !n.is_square() {
        return Err(Error::DimensionMismatch(
            "exp of a non-square matrix".into(),
        ));
    }
    let size = n.rows();
    let mut sum = Mat::identity(size);
    if size == 0 {
        return Ok(sum);
    }
    let mut power = Mat::identity(size);
    let mut coeff = Rat::one();
    for m in 1..=size {
        power = power.try_mul(n)?;
        if power.is_zero() {
            return Ok(sum);
        }
        coeff = &coeff * t / Rat::int(m as i64);
        sum = &sum + &power.scale(&coeff);
    }
    Err(Error::NotNilpotent(size))
}

/// Dimension of the rational span of equally shaped matrices.
pub fn span_dim(mats: &[Mat]) -> Result<usize> {
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    let mut basis = SpanBasis::new();
    for m in mats {
        if m.rows() != first.rows() || m.cols() != first.cols() {
            return Err(Error::DimensionMismatch(
                "span of differently shaped matrices".into(),
            ));
        }
        basis.insert(m.entries().iter().cloned().enumerate());
    }
    Ok(basis.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i, j)
    }

    #[test]
    fn bracket_sl2() {
        let h = lie_bracket(&e(2, 1, 2), &e(2, 2, 1)).unwrap();
        assert_eq!(h, Mat::from_ints(&[&[1, 0], &[0, -1]]));
        let a = Mat::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(lie_bracket(&a, &a).unwrap().is_zero());
        assert!(matches!(
            lie_bracket(&a, &Mat::zeros(3, 3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn bracket_eb2_generators() {
        let ee = Mat::from_ints(&[&[1, 1], &[0, 1]]);
        let f = e(2, 2, 1);
        let inner = lie_bracket(&f, &ee).unwrap();
        assert_eq!(lie_bracket(&f, &inner).unwrap(), f.scale(&Rat::int(-2)));
    }

    #[test]
    fn schur_examples() {
        let k = Mat::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(schur_complement(&k, &[]).unwrap(), k);

        // Star with unit weights, centre last.
        let star = Mat::from_ints(&[
            &[1, 0, 0, -1],
            &[0, 1, 0, -1],
            &[0, 0, 1, -1],
            &[-1, -1, -1, 3],
        ]);
        let l = schur_complement(&star, &[3]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { q(2, 3) } else { q(-1, 3) };
                assert_eq!(l[(i, j)], want);
            }
        }

        // b1 -(2)- v -(2)- b2 with v in the middle row.
        let path = Mat::from_ints(&[&[2, -2, 0], &[-2, 4, -2], &[0, -2, 2]]);
        assert_eq!(
            schur_complement(&path, &[1]).unwrap(),
            Mat::from_ints(&[&[1, -1], &[-1, 1]])
        );
    }

    #[test]
    fn schur_singular_interior() {
        // An isolated interior vertex.
        let k = Mat::from_ints(&[&[1, -1, 0], &[-1, 1, 0], &[0, 0, 0]]);
        assert_eq!(schur_complement(&k, &[2]), Err(Error::SingularInterior));
    }

    #[test]
    fn exp_examples() {
        let a = q(7, 3);
        assert_eq!(
            exp_nilpotent(&e(2, 1, 2), &a).unwrap(),
            Mat::from_rows(vec![
                vec![Rat::one(), a.clone()],
                vec![Rat::zero(), Rat::one()]
            ])
            .unwrap()
        );
        assert!(exp_nilpotent(&Mat::zeros(3, 3), &a).unwrap().is_identity());
        // Strictly upper triangular 3x3 needs the quadratic term.
        let n = &e(3, 1, 2) + &e(3, 2, 3);
        let x = exp_nilpotent(&n, &Rat::int(2)).unwrap();
        assert_eq!(x[(0, 2)], Rat::int(2));
        assert!(matches!(
            exp_nilpotent(&Mat::identity(2), &Rat::one()),
            Err(Error::NotNilpotent(_))
        ));
        assert!(matches!(
            exp_nilpotent(&Mat::identity(2), &Rat::zero()),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn scaled_exp_examples() {
        let m = Mat::from_ints(&[&[1, 1], &[0, 1]]);
        let t = q(3, 5);
        let s = scaled_exp(&m, &t).unwrap();
        assert_eq!(s.exponent, t);
        assert_eq!(s.body, exp_nilpotent(&e(2, 1, 2), &t).unwrap());

        let upper = Mat::from_ints(&[&[0, 2], &[0, 0]]);
        let s = scaled_exp(&upper, &t).unwrap();
        assert!(s.exponent.is_zero());

        assert_eq!(
            scaled_exp(&Mat::from_ints(&[&[1, 0], &[0, 2]]), &t),
            Err(Error::UnsupportedMatrix)
        );
        assert_eq!(
            scaled_exp(&Mat::from_ints(&[&[1, 1], &[1, 1]]), &t),
            Err(Error::UnsupportedMatrix)
        );
    }

    #[test]
    fn span_examples() {
        let a = e(2, 1, 1);
        let b = e(2, 2, 2);
        assert_eq!(span_dim(&[a.clone(), b.clone(), &a + &b]).unwrap(), 2);
        assert_eq!(span_dim(&[]).unwrap(), 0);
        assert!(span_dim(&[a, Mat::zeros(3, 3)]).is_err());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-9i64..=9, 1i64..=5).prop_map(|(p, d)| Rat::new(p, d))
    }

    fn square(n: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(small_rat(), n * n).prop_map(move |xs| {
            Mat::from_rows(xs.chunks(n).map(<[Rat]>::to_vec).collect()).unwrap()
        })
    }

    fn strictly_upper(n: usize) -> impl Strategy<Value = Mat> {
        square(n).prop_map(move |mut m| {
            for i in 0..n {
                for j in 0..=i {
                    m[(i, j)] = Rat::zero();
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn jacobi(a in square(3), b in square(3), c in square(3)) {
            let t1 = lie_bracket(&a, &lie_bracket(&b, &c).unwrap()).unwrap();
            let t2 = lie_bracket(&b, &lie_bracket(&c, &a).unwrap()).unwrap();
            let t3 = lie_bracket(&c, &lie_bracket(&a, &b).unwrap()).unwrap();
            prop_assert!((&(&t1 + &t2) + &t3).is_zero());
        }

        #[test]
        fn exp_is_a_homomorphism(n in strictly_upper(4), s in small_rat(), t in small_rat()) {
            let lhs = &exp_nilpotent(&n, &s).unwrap() * &exp_nilpotent(&n, &t).unwrap();
            prop_assert_eq!(lhs, exp_nilpotent(&n, &(&s + &t)).unwrap());
        }

        #[test]
        fn scaled_exp_is_a_homomorphism(n in strictly_upper(3), c in small_rat(), s in small_rat(), t in small_rat()) {
            let m = &n + &Mat::identity(3).scale(&c);
            let lhs = &scaled_exp(&m, &s).unwrap() * &scaled_exp(&m, &t).unwrap();
            prop_assert_eq!(lhs, scaled_exp(&m, &(&s + &t)).unwrap());
        }

        #[test]
        fn scaled_mul_associative(a in square(2), b in square(2), c in square(2), x in small_rat(), y in small_rat(), z in small_rat()) {
            let (a, b, c) = (ScaledMat::new(x, a).unwrap(), ScaledMat::new(y, b).unwrap(), ScaledMat::new(z, c).unwrap());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn schur_keeps_symmetry_and_zero_row_sums(ws in proptest::collection::vec(1i64..6, 6)) {
            // Laplacian of K4 with positive weights; vertex 3 interior.
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let mut k = Mat::zeros(4, 4);
            for (&(i, j), &w) in pairs.iter().zip(&ws) {
                let w = Rat::int(w);
                k[(i, j)] -= &w;
                k[(j, i)] -= &w;
                k[(i, i)] += &w;
                k[(j, j)] += &w;
            }
            let l = schur_complement(&k, &[3]).unwrap();
            prop_assert!(l.is_symmetric());
            for i in 0..3 {
                prop_assert!(l.row(i).iter().sum::<Rat>().is_zero());
            }
        }
    }
}
