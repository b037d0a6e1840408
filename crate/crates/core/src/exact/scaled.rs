use std::ops::Mul;

use super::{exp_nilpotent, Mat, Rat};
use crate::error::{Error, Result};

/// A group element `e^exponent · body`, kept as a formal scalar factor so
/// that products of non-unipotent one-parameter subgroups stay exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledMat {
    pub exponent: Rat,
    pub body: Mat,
}

impl ScaledMat {
    pub fn new(exponent: Rat, body: Mat) -> Result<Self> {
        if !body.is_square() {
            return Err(Error::DimensionMismatch(
                "ScaledMat body must be square".into(),
            ));
        }
        Ok(ScaledMat { exponent, body })
    }

    /// A plain matrix, scalar factor `e^0`.
    pub fn plain(body: Mat) -> Result<Self> {
        ScaledMat::new(Rat::zero(), body)
    }

    pub fn identity(n: usize) -> Self {
        ScaledMat {
            exponent: Rat::zero(),
            body: Mat::identity(n),
        }
    }

    pub fn try_mul(&self, other: &ScaledMat) -> Result<ScaledMat> {
        Ok(ScaledMat {
            exponent: &self.exponent + &other.exponent,
            body: self.body.try_mul(&other.body)?,
        })
    }
}

impl Mul for &ScaledMat {
    type Output = ScaledMat;
    fn mul(self, rhs: &ScaledMat) -> ScaledMat {
        self.try_mul(rhs).expect("matrix shapes agree")
    }
}

/// `exp(t·M)` for `M = cI + N` with `N` nilpotent: `e^{tc} · exp(tN)`.
pub fn scaled_exp(m: &Mat, t: &Rat) -> Result<ScaledMat> {
    if !m.is_square() {
        return Err(Error::UnsupportedMatrix);
    }
    let n = m.rows();
    let c = if n == 0 {
        Rat::zero()
    } else {
        m[(0, 0)].clone()
    };
    if (0..n).any(|i| m[(i, i)] != c) {
        return Err(Error::UnsupportedMatrix);
    }
    let nil = m - &Mat::identity(n).scale(&c);
    let body = match exp_nilpotent(&nil, t) {
        Ok(b) => b,
        Err(Error::NotNilpotent(_)) => return Err(Error::UnsupportedMatrix),
        Err(e) => return Err(e),
    };
    Ok(ScaledMat {
        exponent: t * &c,
        body,
    })
}
