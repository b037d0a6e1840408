//! Rewriting positive words with the relations
//! `uᵢ(a)uᵢ(b) = uᵢ(a+b)`, `uᵢ(a)uⱼ(b) = uⱼ(b)uᵢ(a)` for `|i−j| > 1`, and
//! the braid move for `|i−j| = 1`.

use super::{braid_move, BraidTriple};
use crate::action::{GenWord, Letter};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::perms::Permutation;

/// Rewrites a reduced word whose permutation has right descent `s` into
/// one ending in `s`.
pub fn move_to_end(letters: &[Letter], s: usize, tau: &Rat) -> Result<Vec<Letter>> {
    let Some((last, prefix)) = letters.split_last() else {
        return Err(Error::Validation(format!(
            "s{s} is not a right descent of the empty word"
        )));
    };
    let t = last.index;
    if t == s {
        return Ok(letters.to_vec());
    }
    let mut out = move_to_end(prefix, s, tau)?;
    if s.abs_diff(t) > 1 {
        let moved = out.pop().expect("ends in s");
        out.push(last.clone());
        out.push(moved);
        return Ok(out);
    }
    // prefix = p·s, and p must end in t: p·t·s·t → p·s·t·s.
    let b = out.pop().expect("ends in s").param;
    let mut out = move_to_end(&out, t, tau)?;
    let a = out.pop().expect("ends in t").param;
    let (b2, a2, c2) = braid_move(&BraidTriple::new(a, b, last.param.clone(), tau.clone()))?;
    out.push(Letter::new(s, b2));
    out.push(Letter::new(t, a2));
    out.push(Letter::new(s, c2));
    Ok(out)
}

/// A reduced positive word kept together with its permutation in `S_m`.
#[derive(Clone, Debug)]
pub struct ReducedProduct {
    perm: Permutation,
    letters: Vec<Letter>,
    tau: Rat,
}

impl ReducedProduct {
    pub fn new(m: usize, tau: Rat) -> Self {
        ReducedProduct {
            perm: Permutation::identity(m),
            letters: Vec::new(),
            tau,
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Multiplies by `uₛ(a)` on the right, merging into an existing
    /// trailing `s` when `s` is already a right descent.
    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if self.perm.is_right_descent(letter.index) {
            self.move_to_end(letter.index)?;
            let last = self.letters.last_mut().expect("ends in s");
            last.param = &last.param + &letter.param;
        } else {
            self.perm = self.perm.times_simple(letter.index)?;
            self.letters.push(letter);
        }
        Ok(())
    }

    pub fn move_to_end(&mut self, s: usize) -> Result<()> {
        if !self.perm.is_right_descent(s) {
            return Err(Error::Validation(format!(
                "s{s} is not a right descent of {}",
                self.perm
            )));
        }
        self.letters = move_to_end(&self.letters, s, &self.tau)?;
        Ok(())
    }

    pub fn pop(&mut self) -> Option<Letter> {
        let l = self.letters.pop()?;
        self.perm = self.perm.times_simple(l.index).expect("letter in range");
        Some(l)
    }

    /// Rewrites the word into the lexicographically smallest reduced word
    /// of its permutation.
    pub fn canonicalize(&mut self) -> Result<()> {
        let target = self.perm.reduced_word();
        let mut prefix = std::mem::take(&mut self.letters);
        let mut tail = Vec::with_capacity(target.len());
        for &s in target.iter().rev() {
            prefix = move_to_end(&prefix, s, &self.tau)?;
            tail.push(prefix.pop().expect("ends in s"));
        }
        tail.reverse();
        self.letters = tail;
        Ok(())
    }
}

/// A reduced word with positive parameters and its permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub perm: Permutation,
    pub word: GenWord,
}

/// [`normalize_word_with`] at `τ = 1`.
pub fn normalize_word(word: &GenWord) -> Result<NormalForm> {
    normalize_word_with(word, &Rat::one())
}

/// Rewrites a positive word in the generators `1..=2n` into the
/// lexicographically smallest reduced word of its permutation in
/// `S_{2n+1}`, with the product unchanged.
pub fn normalize_word_with(word: &GenWord, tau: &Rat) -> Result<NormalForm> {
    let n = word.n();
    let max = 2 * n;
    let mut rp = ReducedProduct::new(2 * n + 1, tau.clone());
    for l in word.letters() {
        if l.index == 0 || l.index > max {
            return Err(Error::IndexOutOfRange {
                index: l.index,
                max,
            });
        }
        if !l.param.is_positive() {
            return Err(Error::NonPositiveParameter(format!(
                "{}:{}",
                l.index, l.param
            )));
        }
        rp.push(l.clone())?;
    }
    rp.canonicalize()?;
    Ok(NormalForm {
        perm: rp.perm().clone(),
        word: GenWord::new(n, rp.letters().to_vec())?,
    })
}
