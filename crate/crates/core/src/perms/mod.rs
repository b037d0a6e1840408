//! Permutations of `1..=m`, reduced words in the simple transpositions,
//! efficient permutations and boundary connectivity.
//!
//! `w·sᵢ` swaps the entries in positions `i` and `i+1`; `sᵢ·w` swaps the
//! values `i` and `i+1`. A word `i₁…iₗ` evaluates to `s_{i₁}⋯s_{iₗ}`.

mod connect;
mod efficient;

pub use connect::{connection_profile, is_ij_connected, minor_connected};
pub use efficient::{
    canonical_efficient, catalan, enumerate_efficient, is_efficient, max_efficient,
    network_of_word, reduce_on_zero,
};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation in one-line notation `w(1) … w(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v > m || seen[v] {
                return Err(Error::Validation(format!(
                    "{values:?} is not a permutation of 1..={m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    /// `s_{i₁}⋯s_{iₗ}` in `S_m`.
    pub fn from_word(word: &[usize], m: usize) -> Result<Self> {
        let mut w = Permutation::identity(m);
        for &i in word {
            w.check_letter(i)?;
            w.swap_positions(i);
        }
        Ok(w)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (p, &v) in self.0.iter().enumerate() {
            inv[v - 1] = p + 1;
        }
        Permutation(inv)
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.size() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.size().saturating_sub(1),
            });
        }
        Ok(())
    }

    fn swap_positions(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    /// `w·sᵢ`.
    pub fn times_simple(&self, i: usize) -> Result<Permutation> {
        self.check_letter(i)?;
        let mut w = self.clone();
        w.swap_positions(i);
        Ok(w)
    }

    /// `sᵢ·w`.
    pub fn simple_times(&self, i: usize) -> Result<Permutation> {
        self.check_letter(i)?;
        Ok(Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        ))
    }

    /// Position pairs `(p, r)`, `p < r`, with `w(p) > w(r)`.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let m = self.size();
        let mut out = BTreeSet::new();
        for p in 1..=m {
            for r in p + 1..=m {
                if self.at(p) > self.at(r) {
                    out.insert((p, r));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    /// `ℓ(w·sᵢ) < ℓ(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.size() && self.at(i) > self.at(i + 1)
    }

    /// `ℓ(sᵢ·w) < ℓ(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.size() && self.inverse().is_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.is_right_descent(i))
            .collect()
    }

    /// The lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.size()).find(|&i| w.is_left_descent(i)) {
            word.push(i);
            w = w.simple_times(i).expect("letter in range");
        }
        word
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        collect_reduced(self, &mut suffix, &mut out);
        out.sort();
        out
    }

    /// Left weak order: `self ⪯ other` iff the inversions of `self` are
    /// among those of `other`.
    pub fn left_weak_le(&self, other: &Permutation) -> bool {
        self.size() == other.size() && self.inversions().is_subset(&other.inversions())
    }
}

fn collect_reduced(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let descents = w.right_descents();
    if descents.is_empty() {
        out.push(suffix.iter().rev().copied().collect());
        return;
    }
    for i in descents {
        suffix.push(i);
        collect_reduced(&w.times_simple(i).expect("letter in range"), suffix, out);
        suffix.pop();
    }
}

/// `(s_{i₁}⋯s_{iₗ}, ℓ = number of inversions)`.
pub fn perm_of_word(word: &[usize], m: usize) -> Result<(Permutation, bool)> {
    let w = Permutation::from_word(word, m)?;
    let reduced = w.length() == word.len();
    Ok((w, reduced))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn all_perms(m: usize) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let m = used.len();
            if prefix.len() == m {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for v in 1..=m {
                if !used[v - 1] {
                    used[v - 1] = true;
                    prefix.push(v);
                    go(prefix, used, out);
                    prefix.pop();
                    used[v - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; m], &mut out);
        out
    }

    #[test]
    fn word_evaluation() {
        let (w, reduced) = perm_of_word(&[5, 3, 6, 4, 2], 7).unwrap();
        assert!(reduced);
        assert_eq!(w.one_line(), &[1, 4, 2, 6, 3, 7, 5]);
        // Written with values and positions exchanged, this is 1352746.
        assert_eq!(w.inverse().one_line(), &[1, 3, 5, 2, 7, 4, 6]);

        let (id, reduced) = perm_of_word(&[], 4).unwrap();
        assert_eq!(id, Permutation::identity(4));
        assert!(reduced);
        let (id, reduced) = perm_of_word(&[1, 1], 3).unwrap();
        assert_eq!(id, Permutation::identity(3));
        assert!(!reduced);
        assert!(matches!(
            perm_of_word(&[3], 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn one_line_validation_and_display() {
        assert!(Permutation::from_one_line(vec![2, 2, 1]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        let w = Permutation::from_one_line(vec![3, 1, 2]).unwrap();
        assert_eq!(w.to_string(), "312");
        assert_eq!(
            Permutation::identity(10).to_string(),
            "(1,2,3,4,5,6,7,8,9,10)"
        );
    }

    #[test]
    fn reduced_words_evaluate_back() {
        for m in 1..=5 {
            for w in all_perms(m) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(&word, m).unwrap(), w);
                let all = w.reduced_words();
                assert_eq!(all[0], word, "lexicographic minimum");
                for other in &all {
                    assert_eq!(perm_of_word(other, m).unwrap(), (w.clone(), true));
                }
            }
        }
        // The longest element of S₄ has 16 reduced words.
        let w0 = Permutation::from_one_line(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(w0.reduced_words().len(), 16);
    }

    #[test]
    fn descents_match_lengths() {
        for w in all_perms(5) {
            for i in 1..5 {
                assert_eq!(
                    w.is_right_descent(i),
                    w.times_simple(i).unwrap().length() < w.length()
                );
                assert_eq!(
                    w.is_left_descent(i),
                    w.simple_times(i).unwrap().length() < w.length()
                );
            }
        }
    }

    #[test]
    fn left_weak_order_is_inversion_inclusion() {
        // Oracle: v is above w iff v is reached from w by length-increasing
        // left multiplications.
        let m = 4;
        let perms = all_perms(m);
        for w in &perms {
            let mut above = HashSet::new();
            let mut queue = VecDeque::from([w.clone()]);
            while let Some(x) = queue.pop_front() {
                if !above.insert(x.clone()) {
                    continue;
                }
                for i in 1..m {
                    let y = x.simple_times(i).unwrap();
                    if y.length() == x.length() + 1 {
                        queue.push_back(y);
                    }
                }
            }
            for v in &perms {
                assert_eq!(w.left_weak_le(v), above.contains(v), "{w} vs {v}");
            }
        }
    }
}
