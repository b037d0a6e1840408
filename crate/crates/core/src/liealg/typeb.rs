//! The braid move for the two one-parameter subgroups of the `B₂`
//! representation `e ↦ [[1,1],[0,1]]`, `f ↦ E₂₁`.

use crate::error::{Error, Result};
use crate::exact::{exp_nilpotent, scaled_exp, Mat, Rat, ScaledMat};

/// `u(t) = exp(t·[[1,1],[0,1]]) = e^t·[[1,t],[0,1]]`.
pub fn b2_u(t: &Rat) -> ScaledMat {
    scaled_exp(&Mat::from_ints(&[&[1, 1], &[0, 1]]), t).expect("unipotent times scalar")
}

/// `v(t) = [[1,0],[t,1]]`.
pub fn b2_v(t: &Rat) -> ScaledMat {
    ScaledMat::plain(exp_nilpotent(&Mat::unit(2, 2, 1), t).expect("nilpotent")).expect("square")
}

/// `u(t₁)v(t₂)u(t₃)v(t₄)`.
pub fn b2_lhs(t: &[Rat; 4]) -> ScaledMat {
    [b2_u(&t[0]), b2_v(&t[1]), b2_u(&t[2]), b2_v(&t[3])]
        .iter()
        .fold(ScaledMat::identity(2), |acc, x| &acc * x)
}

/// `v(p₁)u(p₂)v(p₃)u(p₄)`.
pub fn b2_rhs(p: &[Rat; 4]) -> ScaledMat {
    [b2_v(&p[0]), b2_u(&p[1]), b2_v(&p[2]), b2_u(&p[3])]
        .iter()
        .fold(ScaledMat::identity(2), |acc, x| &acc * x)
}

/// The common value of both sides, written out.
pub fn b2_explicit(t: &[Rat; 4]) -> ScaledMat {
    let [t1, t2, t3, t4] = t;
    let one = Rat::one();
    let body = Mat::from_rows(vec![
        vec![
            &(&one + &(t3 * t4)) + &(t1 * &(&(t2 + t4) + &(&(t2 * t3) * t4))),
            &(t1 + t3) + &(&(t1 * t2) * t3),
        ],
        vec![&(t2 + t4) + &(&(t2 * t3) * t4), &one + &(t2 * t3)],
    ])
    .expect("2x2");
    ScaledMat::new(t1 + t3, body).expect("square")
}

/// `(p₁, p₂, p₃, p₄) = (t₂t₃²t₄/π₂, π₂/π₁, π₁²/π₂, t₁t₂t₃/π₁)` with
/// `π₁ = t₁t₂ + (t₁+t₃)t₄ + τt₁t₂t₃t₄` and
/// `π₂ = t₁²t₂ + (t₁+t₃)²t₄ + τt₁t₂t₃t₄(t₁+t₃)`.
pub fn b2_braid(t: &[Rat; 4], tau: &Rat) -> Result<[Rat; 4]> {
    let [t1, t2, t3, t4] = t;
    let s = t1 + t3;
    let all = &(&(t1 * t2) * t3) * t4;
    let deformed = tau * &all;
    let pi1 = &(&(t1 * t2) + &(&s * t4)) + &deformed;
    let pi2 = &(&(&(t1 * t1) * t2) + &(&(&s * &s) * t4)) + &(&deformed * &s);
    if pi1.is_zero() || pi2.is_zero() {
        return Err(Error::SingularDenominator(format!(
            "pi1 = {pi1}, pi2 = {pi2}"
        )));
    }
    Ok([
        &(&(&(t2 * t3) * t3) * t4) / &pi2,
        &pi2 / &pi1,
        &(&pi1 * &pi1) / &pi2,
        &(&(t1 * t2) * t3) / &pi1,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::sample;

    fn quad(r: &mut sample::SampleRng) -> [Rat; 4] {
        std::array::from_fn(|_| sample::positive_rat(r))
    }

    #[test]
    fn unit_input() {
        let ones = [Rat::one(), Rat::one(), Rat::one(), Rat::one()];
        assert_eq!(
            b2_braid(&ones, &Rat::one()).unwrap(),
            [q(1, 7), q(7, 4), q(16, 7), q(1, 4)]
        );
    }

    #[test]
    fn group_identity_at_tau_one() {
        let mut r = sample::rng(31);
        for _ in 0..100 {
            let t = quad(&mut r);
            let p = b2_braid(&t, &Rat::one()).unwrap();
            assert_eq!(b2_lhs(&t), b2_explicit(&t));
            assert_eq!(b2_rhs(&p), b2_explicit(&t));
        }
    }

    #[test]
    fn sum_and_positivity_for_any_tau() {
        let mut r = sample::rng(32);
        for tau in [q(0, 1), q(1, 1), q(2, 1), q(1, 3)] {
            for _ in 0..50 {
                let t = quad(&mut r);
                let p = b2_braid(&t, &tau).unwrap();
                assert_eq!(&p[1] + &p[3], &t[0] + &t[2]);
                assert!(p.iter().all(Rat::is_positive));
            }
        }
    }

    #[test]
    fn tau_zero_identity_fails_for_this_representation() {
        // The deformed formulas only match this representation at τ = 1.
        let t = [Rat::one(), Rat::one(), Rat::one(), Rat::one()];
        let p = b2_braid(&t, &Rat::zero()).unwrap();
        assert_ne!(b2_rhs(&p), b2_lhs(&t));
    }

    #[test]
    fn singular() {
        let t = [q(0, 1), q(1, 1), q(1, 1), q(0, 1)];
        assert!(matches!(
            b2_braid(&t, &Rat::one()),
            Err(Error::SingularDenominator(_))
        ));
    }
}
