//! Electrical Lie algebras on Dynkin diagrams: relation checks, bracket
//! closure in faithful representations, the derivation action on
//! response-matrix coordinates, and the type-B braid move.

mod cartan;
mod derivation;
mod poly;
mod rep;
mod typeb;

pub use cartan::CartanSpec;
pub use derivation::{
    derivation_field, derivation_fields, printed_bracket_field, stabilizer_codim, StabilizerReport,
};
pub use poly::{vf_bracket, Monomial, Polynomial, Var, VectorField};
pub use rep::{builtin_rep, folding_check_b2, lie_closure_dim, Builtin, FoldingReport, LieRep};
pub use typeb::{b2_braid, b2_explicit, b2_lhs, b2_rhs, b2_u, b2_v};

use crate::error::{Error, Result};
use crate::exact::{lie_bracket, Mat, Rat, SpanBasis};

/// Anything with a bracket and exact coordinates.
pub trait LieElement: Clone + PartialEq {
    type Key: Ord + Clone;
    fn bracket(&self, other: &Self) -> Self;
    fn coords(&self) -> Vec<(Self::Key, Rat)>;
    fn scale(&self, s: &Rat) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl LieElement for Mat {
    type Key = usize;

    fn bracket(&self, other: &Self) -> Self {
        lie_bracket(self, other).expect("brackets of equally sized square matrices")
    }

    fn coords(&self) -> Vec<(usize, Rat)> {
        self.entries()
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    fn scale(&self, s: &Rat) -> Self {
        Mat::scale(self, s)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn is_zero(&self) -> bool {
        Mat::is_zero(self)
    }
}

/// `ad(x)^k (y)`.
pub fn ad_power<T: LieElement>(x: &T, k: usize, y: &T) -> T {
    (0..k).fold(y.clone(), |acc, _| x.bracket(&acc))
}

/// A basis of the smallest bracket-closed subspace containing `gens`.
///
/// New basis elements are bracketed against the generators only, in
/// insertion order, so the result is deterministic.
pub fn closure<T: LieElement>(gens: &[T], budget: usize) -> Result<Vec<T>> {
    let mut span: SpanBasis<T::Key> = SpanBasis::new();
    let mut basis: Vec<T> = Vec::new();
    for g in gens {
        if span.insert(g.coords()) {
            basis.push(g.clone());
        }
    }
    if basis.len() > budget {
        return Err(Error::ClosureBudgetExceeded(budget));
    }
    let mut next = 0;
    while next < basis.len() {
        let x = basis[next].clone();
        next += 1;
        for g in gens {
            let y = g.bracket(&x);
            if span.insert(y.coords()) {
                basis.push(y);
                if basis.len() > budget {
                    return Err(Error::ClosureBudgetExceeded(budget));
                }
            }
        }
    }
    Ok(basis)
}

/// One relation `ad(eᵢ)^k(eⱼ) = rhs` and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub i: usize,
    pub j: usize,
    pub a_ij: i64,
    pub relation: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SerreReport {
    pub checks: Vec<RelationCheck>,
}

impl SerreReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Checks, for every ordered pair `i ≠ j`, that `ad(eᵢ)²(eⱼ) = −2eᵢ`
/// when `aᵢⱼ = −1` and `ad(eᵢ)^{1−aᵢⱼ}(eⱼ) = 0` otherwise.
pub fn check_electrical_serre<T: LieElement>(
    gens: &[T],
    cartan: &CartanSpec,
) -> Result<SerreReport> {
    if gens.len() != cartan.size() {
        return Err(Error::DimensionMismatch(format!(
            "{} generators for a Cartan matrix of size {}",
            gens.len(),
            cartan.size()
        )));
    }
    let mut checks = Vec::new();
    for i in 1..=gens.len() {
        for j in 1..=gens.len() {
            if i == j {
                continue;
            }
            let a = cartan.a(i, j);
            let (ei, ej) = (&gens[i - 1], &gens[j - 1]);
            let check = if a == -1 {
                let lhs = ad_power(ei, 2, ej);
                RelationCheck {
                    i,
                    j,
                    a_ij: a,
                    relation: format!("[e{i},[e{i},e{j}]] = -2e{i}"),
                    pass: lhs.add(&ei.scale(&Rat::int(2))).is_zero(),
                }
            } else {
                let k = (1 - a) as usize;
                RelationCheck {
                    i,
                    j,
                    a_ij: a,
                    relation: format!("ad(e{i})^{k}(e{j}) = 0"),
                    pass: ad_power(ei, k, ej).is_zero(),
                }
            };
            checks.push(check);
        }
    }
    Ok(SerreReport { checks })
}
