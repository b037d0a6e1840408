//! Boundary spikes and boundary edges acting on networks and on response
//! matrices.
//!
//! Generator `2k−1` adjoins a spike at boundary vertex `k`; generator `2k`
//! adjoins an edge from `k` to `k+1`, labels read modulo `n+1`. A word
//! `u_{i₁}(a₁)⋯u_{iₗ}(aₗ)` acts on the left, so its last letter acts first.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::network::{Edge, Network, Node, ResponseMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub index: usize,
    pub param: Rat,
}

impl Letter {
    pub fn new(index: usize, param: Rat) -> Self {
        Letter { index, param }
    }
}

/// A word in the generators for response matrices of size `n+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWord {
    n: usize,
    letters: Vec<Letter>,
}

impl GenWord {
    /// Indices must lie in `1..=2n+2`; parameters may have any sign here.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        let max = 2 * n + 2;
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index > max) {
            return Err(Error::IndexOutOfRange {
                index: l.index,
                max,
            });
        }
        Ok(GenWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        GenWord {
            n,
            letters: Vec::new(),
        }
    }

    /// From `(index, param)` pairs.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, Rat)>) -> Result<Self> {
        GenWord::new(
            n,
            pairs.into_iter().map(|(i, t)| Letter::new(i, t)).collect(),
        )
    }

    /// Parses `i:t,i:t,…`; the empty string is the empty word.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GenWord::empty(n));
        }
        let letters = s
            .split(',')
            .map(|tok| {
                let (i, t) = tok.trim().split_once(':').ok_or_else(|| {
                    Error::Parse(format!("word token {tok:?} is not of the form i:t"))
                })?;
                let index = i
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad generator index {i:?}")))?;
                Ok(Letter::new(index, t.trim().parse::<Rat>()?))
            })
            .collect::<Result<Vec<_>>>()?;
        GenWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l.index).collect()
    }

    pub fn params(&self) -> Vec<Rat> {
        self.letters.iter().map(|l| l.param.clone()).collect()
    }

    /// True if some letter is a wrap-around generator `2n+1` or `2n+2`.
    pub fn is_extended(&self) -> bool {
        self.letters.iter().any(|l| l.index > 2 * self.n)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", l.index, l.param)?;
        }
        Ok(())
    }
}

fn check_boundary(k: usize, size: usize) -> Result<()> {
    if k == 0 || k > size {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: size,
        });
    }
    Ok(())
}

fn check_param(t: &Rat) -> Result<()> {
    if t.is_negative() {
        return Err(Error::NegativeParameter(t.to_string()));
    }
    Ok(())
}

/// Adds a spike of conductance `1/t` at boundary vertex `k`: the old
/// vertex becomes interior and the spike's far end takes the label `k`.
pub fn adjoin_spike(net: &Network, k: usize, t: &Rat) -> Result<Network> {
    check_boundary(k, net.boundary_count())?;
    check_param(t)?;
    if t.is_zero() {
        return Ok(net.clone());
    }
    let mut out = net.clone();
    let id = out.fresh_id(&format!("s{k}_"));
    out.demote_boundary(k, &id);
    out.add_edge(Node::Boundary(k), Node::interior(&id), t.recip()?)?;
    Ok(out)
}

/// Adds an edge of conductance `t` between boundary vertices `k` and `k+1`
/// (`n+1` wraps to `1`).
pub fn adjoin_edge(net: &Network, k: usize, t: &Rat) -> Result<Network> {
    let size = net.boundary_count();
    check_boundary(k, size)?;
    check_param(t)?;
    if t.is_zero() {
        return Ok(net.clone());
    }
    let mut out = net.clone();
    let next = k % size + 1;
    out.edges_mut().push(Edge::new(
        Node::Boundary(k),
        Node::Boundary(next),
        t.clone(),
    ));
    Ok(out)
}

/// `v_i(t)` on a network.
pub fn act_network(net: &Network, i: usize, t: &Rat) -> Result<Network> {
    let max = 2 * net.boundary_count();
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    if i % 2 == 1 {
        adjoin_spike(net, i.div_ceil(2), t)
    } else {
        adjoin_edge(net, i / 2, t)
    }
}

/// `v_i(t)` on a response matrix, for `t ≥ 0`.
pub fn act_response(l: &ResponseMatrix, i: usize, t: &Rat) -> Result<ResponseMatrix> {
    check_param(t)?;
    act_response_unchecked(l, i, t)
}

/// `v_i(t)` for any rational `t`, failing only on a vanishing denominator.
pub fn act_response_unchecked(l: &ResponseMatrix, i: usize, t: &Rat) -> Result<ResponseMatrix> {
    let size = l.size();
    let max = 2 * size;
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    let mut m = l.mat().clone();
    if i % 2 == 1 {
        let k = (i - 1) / 2;
        let denom = &(t * &m[(k, k)]) + &Rat::one();
        if denom.is_zero() {
            return Err(Error::SingularDenominator(format!(
                "t·x_{0}{0} + 1 = 0 at t = {t}",
                k + 1
            )));
        }
        let col: Vec<Rat> = (0..size).map(|p| m[(p, k)].clone()).collect();
        let f = t / &denom;
        for p in 0..size {
            for r in 0..size {
                let d = &(&f * &col[p]) * &col[r];
                m[(p, r)] -= &d;
            }
        }
    } else {
        let k = i / 2 - 1;
        let next = (k + 1) % size;
        if next != k {
            m[(k, k)] += t;
            m[(next, next)] += t;
            m[(k, next)] -= t;
            m[(next, k)] -= t;
        }
    }
    Ok(ResponseMatrix::new_unchecked(m))
}

fn check_word_size(word: &GenWord, size: usize) -> Result<()> {
    if word.n() + 1 != size {
        return Err(Error::DimensionMismatch(format!(
            "word for n = {} applied to boundary size {size}",
            word.n()
        )));
    }
    Ok(())
}

/// `u·L` for a word `u`, applying its letters right to left.
pub fn act_word(l: &ResponseMatrix, word: &GenWord) -> Result<ResponseMatrix> {
    check_word_size(word, l.size())?;
    let mut out = l.clone();
    for letter in word.letters().iter().rev() {
        out = act_response(&out, letter.index, &letter.param)?;
    }
    Ok(out)
}

/// `u·N` for a word `u`, applying its letters right to left.
pub fn act_network_word(net: &Network, word: &GenWord) -> Result<Network> {
    check_word_size(word, net.boundary_count())?;
    let mut out = net.clone();
    for letter in word.letters().iter().rev() {
        out = act_network(&out, letter.index, &letter.param)?;
    }
    Ok(out)
}
