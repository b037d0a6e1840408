//! The representation of the electrical Lie algebra on `2n`-space that
//! preserves the form `J = [[0, I], [−I, 0]]`, and the group elements
//! `uᵢ(a) = I + a·φ(eᵢ)`.

mod factor;
mod rewrite;

pub use factor::{factorize_top_cell, staircase_word};
pub use rewrite::{move_to_end, normalize_word, normalize_word_with, NormalForm, ReducedProduct};

use crate::action::GenWord;
use crate::error::{Error, Result};
use crate::exact::{Mat, Rat};

/// `φ(e₁), …, φ(e₂ₙ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElGenerators {
    n: usize,
    mats: Vec<Mat>,
}

impl ElGenerators {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    /// `φ(eᵢ)`, 1-based.
    pub fn get(&self, i: usize) -> Result<&Mat> {
        if i == 0 || i > self.mats.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.mats.len(),
            });
        }
        Ok(&self.mats[i - 1])
    }

    pub fn into_mats(self) -> Vec<Mat> {
        self.mats
    }
}

/// `a₁ = ε₁`, `aᵢ = ε_{i−1} + εᵢ`, `bᵢ = εᵢ`; `φ(e_{2i−1})` has upper-right
/// block `aᵢaᵢᵀ` and `φ(e_{2i})` has lower-left block `bᵢbᵢᵀ`.
pub fn el_generators(n: usize) -> ElGenerators {
    let mut mats = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let mut up = Mat::zeros(2 * n, 2 * n);
        let support: Vec<usize> = if i == 1 { vec![0] } else { vec![i - 2, i - 1] };
        for &r in &support {
            for &c in &support {
                up[(r, n + c)] = Rat::one();
            }
        }
        mats.push(up);
        let mut down = Mat::zeros(2 * n, 2 * n);
        down[(n + i - 1, i - 1)] = Rat::one();
        mats.push(down);
    }
    ElGenerators { n, mats }
}

/// `J = [[0, I], [−I, 0]]` of size `2n`.
pub fn symplectic_form(n: usize) -> Mat {
    let mut j = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = Rat::one();
        j[(n + i, i)] = Rat::int(-1);
    }
    j
}

/// A `2n × 2n` matrix, usually the image of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpElement {
    n: usize,
    mat: Mat,
}

impl SpElement {
    pub fn new(n: usize, mat: Mat) -> Result<Self> {
        if mat.rows() != 2 * n || mat.cols() != 2 * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {0}x{0}, got {1}x{2}",
                2 * n,
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(SpElement { n, mat })
    }

    /// Like [`SpElement::new`], also requiring `MᵀJM = J`.
    pub fn new_checked(n: usize, mat: Mat) -> Result<Self> {
        let el = SpElement::new(n, mat)?;
        if !el.is_symplectic() {
            return Err(Error::Validation(
                "matrix does not preserve the symplectic form".into(),
            ));
        }
        Ok(el)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn into_mat(self) -> Mat {
        self.mat
    }

    pub fn is_symplectic(&self) -> bool {
        let j = symplectic_form(self.n);
        &(&self.mat.transpose() * &j) * &self.mat == j
    }
}

/// `uᵢ(a) = I + a·φ(eᵢ)`.
pub fn one_parameter(gens: &ElGenerators, i: usize, a: &Rat) -> Result<Mat> {
    Ok(&Mat::identity(2 * gens.n()) + &gens.get(i)?.scale(a))
}

/// `u_{i₁}(a₁)⋯u_{iₗ}(aₗ)` for a word in the generators `1..=2n`.
pub fn sp_of_word(word: &GenWord) -> Result<SpElement> {
    sp_of_word_with(&el_generators(word.n()), word)
}

/// [`sp_of_word`] with prebuilt generators.
pub fn sp_of_word_with(gens: &ElGenerators, word: &GenWord) -> Result<SpElement> {
    let n = gens.n();
    if word.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "word for n = {} with generators for n = {n}",
            word.n()
        )));
    }
    let mut m = Mat::identity(2 * n);
    for l in word.letters() {
        let g = gens.get(l.index)?;
        // M·(I + aφ) = M + a·Mφ
        m = &m + &(&m * g).scale(&l.param);
    }
    SpElement::new(n, m)
}

/// `(a, b, c)` with deformation parameter `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidTriple {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub tau: Rat,
}

impl BraidTriple {
    pub fn new(a: Rat, b: Rat, c: Rat, tau: Rat) -> Self {
        BraidTriple { a, b, c, tau }
    }
}

/// `uᵢ(a)uⱼ(b)uᵢ(c) = uⱼ(b′)uᵢ(a′)uⱼ(c′)` with `S = a + c + τabc` and
/// `(b′, a′, c′) = (bc/S, S, ab/S)`.
pub fn braid_move(t: &BraidTriple) -> Result<(Rat, Rat, Rat)> {
    let s = &(&t.a + &t.c) + &(&(&(&t.tau * &t.a) * &t.b) * &t.c);
    if s.is_zero() {
        return Err(Error::SingularDenominator(format!(
            "a + c + τabc = 0 for ({}, {}, {}), τ = {}",
            t.a, t.b, t.c, t.tau
        )));
    }
    Ok((&(&t.b * &t.c) / &s, s.clone(), &(&t.a * &t.b) / &s))
}
