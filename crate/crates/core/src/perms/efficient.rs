use super::Permutation;
use crate::action::{act_network_word, GenWord, Letter};
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::network::Network;
use crate::symplectic::ReducedProduct;

/// `C_k = binom(2k, k)/(k+1)`.
pub fn catalan(k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

fn check_odd(m: usize) -> Result<()> {
    if m % 2 == 0 {
        return Err(Error::EvenSize(m));
    }
    Ok(())
}

/// Odd positions increase, even positions increase, and `w(2k−1) < w(2k)`.
pub fn is_efficient(w: &Permutation) -> Result<bool> {
    let m = w.size();
    check_odd(m)?;
    let odd_up = (3..=m).step_by(2).all(|p| w.at(p - 2) < w.at(p));
    let even_up = (4..=m).step_by(2).all(|p| w.at(p - 2) < w.at(p));
    let pairs = (2..=m).step_by(2).all(|p| w.at(p - 1) < w.at(p));
    Ok(odd_up && even_up && pairs)
}

/// All efficient permutations of `1..=2n+1`, in lexicographic order.
pub fn enumerate_efficient(n: usize) -> Vec<Permutation> {
    let m = 2 * n + 1;
    let mut out = Vec::new();
    let mut line = Vec::with_capacity(m);
    let mut used = vec![false; m + 1];
    fill(m, &mut line, &mut used, &mut out);
    out
}

fn fill(m: usize, line: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    let p = line.len() + 1;
    if p > m {
        out.push(Permutation(line.clone()));
        return;
    }
    for v in 1..=m {
        if used[v] {
            continue;
        }
        if p >= 3 && line[p - 3] > v {
            continue;
        }
        if p % 2 == 0 && line[p - 2] > v {
            continue;
        }
        used[v] = true;
        line.push(v);
        fill(m, line, used, out);
        line.pop();
        used[v] = false;
    }
}

/// `1 (n+2) 2 (n+3) ⋯ n (2n+1) (n+1)`.
pub fn max_efficient(n: usize) -> Permutation {
    Permutation(
        (1..=2 * n + 1)
            .map(|p| {
                if p % 2 == 1 {
                    p.div_ceil(2)
                } else {
                    n + 1 + p / 2
                }
            })
            .collect(),
    )
}

enum Step {
    DropOdd(usize),
    Contract { even: usize, adjacent: usize },
}

fn next_step(w: &Permutation) -> Option<Step> {
    let descents = w.right_descents();
    if let Some(&s) = descents.iter().find(|&&s| s % 2 == 1) {
        return Some(Step::DropOdd(s));
    }
    for &i in &descents {
        let v = w.times_simple(i).expect("descent in range");
        if let Some(j) = [i - 1, i + 1].into_iter().find(|&j| v.is_right_descent(j)) {
            return Some(Step::Contract {
                even: i,
                adjacent: j,
            });
        }
    }
    None
}

/// The efficient permutation whose cell has the same image on the empty
/// network as the cell of `w`.
pub fn canonical_efficient(w: &Permutation) -> Result<Permutation> {
    check_odd(w.size())?;
    let mut w = w.clone();
    while let Some(step) = next_step(&w) {
        w = match step {
            Step::DropOdd(s) => w.times_simple(s)?,
            Step::Contract { even, adjacent } => {
                let u = w.times_simple(even)?.times_simple(adjacent)?;
                if u.is_right_descent(even) {
                    u
                } else {
                    u.times_simple(even)?
                }
            }
        };
    }
    Ok(w)
}

/// Rewrites a positive word `u` into a reduced word for
/// `canonical_efficient` of its permutation, keeping `u·L₀` unchanged.
pub fn reduce_on_zero(word: &GenWord) -> Result<(Permutation, GenWord)> {
    let n = word.n();
    let mut rp = ReducedProduct::new(2 * n + 1, Rat::one());
    for l in word.letters() {
        rp.push(l.clone())?;
    }
    while let Some(step) = next_step(rp.perm()) {
        match step {
            Step::DropOdd(s) => {
                rp.move_to_end(s)?;
                rp.pop();
            }
            Step::Contract { even, adjacent } => {
                rp.move_to_end(even)?;
                let b = rp.pop().expect("non-empty").param;
                rp.move_to_end(adjacent)?;
                let a = rp.pop().expect("non-empty").param;
                let merged = &b / &(&Rat::one() + &(&a * &b));
                rp.push(Letter::new(even, merged))?;
            }
        }
    }
    rp.canonicalize()?;
    let perm = rp.perm().clone();
    Ok((perm, GenWord::new(n, rp.letters().to_vec())?))
}

/// The network `u·N₀` for a word in the generators `1..=2n`.
pub fn network_of_word(word: &GenWord) -> Result<Network> {
    let max = 2 * word.n();
    if let Some(l) = word.letters().iter().find(|l| l.index > max) {
        return Err(Error::IndexOutOfRange {
            index: l.index,
            max,
        });
    }
    act_network_word(&Network::empty(word.n() + 1), word)
}
