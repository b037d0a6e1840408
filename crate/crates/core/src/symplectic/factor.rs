//! Recovering the parameters of a top-cell element from its matrix.

use super::{el_generators, one_parameter, sp_of_word_with, ElGenerators, SpElement};
use crate::action::{GenWord, Letter};
use crate::error::{Error, Result};
use crate::exact::{Mat, Rat};

/// `[1] [2 1] [3 2 1] ⋯ [2n ⋯ 1]`, a reduced word of length `n(2n+1)`
/// for the longest element of `S_{2n+1}`.
pub fn staircase_word(n: usize) -> Vec<usize> {
    (1..=2 * n).flat_map(|k| (1..=k).rev()).collect()
}

/// Row and columns (0-based) whose entries determine block `k`'s
/// parameters, one per letter in order.
fn reading_plan(n: usize, k: usize) -> (usize, Vec<usize>) {
    let m = k.div_ceil(2);
    if k % 2 == 1 {
        let mut cols = vec![n + m];
        for r in (1..m).rev() {
            cols.push(r);
            cols.push(n + r);
        }
        (m - 1, cols.into_iter().map(|c| c - 1).collect())
    } else {
        let mut cols = Vec::new();
        for r in (1..=m).rev() {
            cols.push(r);
            cols.push(n + r);
        }
        (n + m - 1, cols.into_iter().map(|c| c - 1).collect())
    }
}

fn block_product(gens: &ElGenerators, k: usize, params: &[Rat]) -> Result<Mat> {
    let letters = (1..=k)
        .rev()
        .zip(params.iter().cloned())
        .map(|(i, t)| Letter::new(i, t))
        .collect();
    Ok(sp_of_word_with(gens, &GenWord::new(gens.n(), letters)?)?.into_mat())
}

/// Inverts `sp_of_word` on the staircase word with positive parameters.
/// Blocks are peeled off from the right; each parameter solves one
/// equation that is affine in it.
pub fn factorize_top_cell(m: &SpElement, n: usize) -> Result<Vec<Rat>> {
    if m.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "matrix for n = {} with -n {n}",
            m.n()
        )));
    }
    let gens = el_generators(n);
    let mut rest = m.mat().clone();
    let mut blocks: Vec<Vec<Rat>> = Vec::with_capacity(2 * n);
    for k in (1..=2 * n).rev() {
        let (row, cols) = reading_plan(n, k);
        let mut params: Vec<Rat> = Vec::with_capacity(k);
        for (j, &col) in cols.iter().enumerate() {
            let trial = |x: Rat| -> Result<Rat> {
                let mut p = params.clone();
                p.push(x);
                p.resize(k, Rat::zero());
                Ok(block_product(&gens, k, &p)?[(row, col)].clone())
            };
            let at0 = trial(Rat::zero())?;
            let slope = &trial(Rat::one())? - &at0;
            if slope.is_zero() {
                return Err(Error::NotInTopCell(format!(
                    "block {k}, letter {}: entry ({}, {}) does not depend on its parameter",
                    j + 1,
                    row + 1,
                    col + 1
                )));
            }
            let value = &(&rest[(row, col)] - &at0) / &slope;
            if !value.is_positive() {
                return Err(Error::NotInTopCell(format!(
                    "block {k}, letter {}: recovered parameter {value}",
                    j + 1
                )));
            }
            params.push(value);
        }
        // Strip the block: multiply by u₁(−p_k)⋯u_k(−p₁).
        for (i, p) in (1..=k).zip(params.iter().rev()) {
            rest = &rest * &one_parameter(&gens, i, &-p)?;
        }
        blocks.push(params);
    }
    if !rest.is_identity() {
        return Err(Error::ResidueNotIdentity);
    }
    Ok(blocks.into_iter().rev().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::perms::Permutation;
    use crate::sample;
    use crate::symplectic::sp_of_word;

    fn staircase(n: usize, params: &[Rat]) -> GenWord {
        GenWord::from_pairs(n, staircase_word(n).into_iter().zip(params.iter().cloned())).unwrap()
    }

    #[test]
    fn staircase_is_reduced_and_longest() {
        for n in 1..=4 {
            let word = staircase_word(n);
            assert_eq!(word.len(), n * (2 * n + 1));
            let m = 2 * n + 1;
            let w = Permutation::from_word(&word, m).unwrap();
            assert_eq!(
                w,
                Permutation::from_one_line((1..=m).rev().collect()).unwrap()
            );
        }
        assert_eq!(staircase_word(1), vec![1, 2, 1]);
    }

    #[test]
    fn n1_by_hand() {
        let params = [q(2, 1), q(1, 2), q(3, 1)];
        let m = sp_of_word(&staircase(1, &params)).unwrap();
        assert_eq!(
            m.mat(),
            &Mat::from_rows(vec![vec![q(2, 1), q(8, 1)], vec![q(1, 2), q(5, 2)]]).unwrap()
        );
        assert_eq!(factorize_top_cell(&m, 1).unwrap(), params.to_vec());
    }

    #[test]
    fn worked_rows_for_n2() {
        let mut r = sample::rng(12);
        for _ in 0..5 {
            let a = sample::positive_rats(&mut r, 10);
            let six = GenWord::from_pairs(
                2,
                staircase_word(2)[..6]
                    .iter()
                    .copied()
                    .zip(a[..6].iter().cloned()),
            )
            .unwrap();
            let m = sp_of_word(&six).unwrap();
            let (a4, a5, a6) = (&a[3], &a[4], &a[5]);
            let want = [a4 * a5, Rat::one(), a4 + &(&(a4 * a5) * a6), a4.clone()];
            assert_eq!(m.mat().row(1), &want[..]);

            let m = sp_of_word(&staircase(2, &a)).unwrap();
            let (a7, a8, a9, a10) = (&a[6], &a[7], &a[8], &a[9]);
            let a78 = a7 * a8;
            let want = [
                &a78 * a9,
                a7.clone(),
                &a78 + &(&(&a78 * a9) * a10),
                &Rat::one() + &a78,
            ];
            assert_eq!(m.mat().row(3), &want[..]);
        }
    }

    #[test]
    fn round_trip() {
        let mut r = sample::rng(13);
        for n in 1..=3 {
            for _ in 0..10 {
                let params = sample::positive_rats(&mut r, n * (2 * n + 1));
                let m = sp_of_word(&staircase(n, &params)).unwrap();
                assert_eq!(factorize_top_cell(&m, n).unwrap(), params);
            }
        }
    }

    #[test]
    fn one_zero_parameter_leaves_the_top_cell() {
        let mut r = sample::rng(14);
        let params = sample::positive_rats(&mut r, 10);
        for k in 0..10 {
            let mut p = params.clone();
            p[k] = Rat::zero();
            let m = sp_of_word(&staircase(2, &p)).unwrap();
            assert!(
                matches!(factorize_top_cell(&m, 2), Err(Error::NotInTopCell(_))),
                "zero at {k}"
            );
        }
    }

    #[test]
    fn other_failures() {
        assert!(matches!(
            factorize_top_cell(&SpElement::new(2, Mat::identity(4)).unwrap(), 2),
            Err(Error::NotInTopCell(_))
        ));
        assert!(factorize_top_cell(&SpElement::new(1, Mat::identity(2)).unwrap(), 2).is_err());
    }
}
