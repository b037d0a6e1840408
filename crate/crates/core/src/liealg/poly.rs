//! Polynomials in the symmetric variables `x_pq = x_qp` and vector fields
//! with polynomial coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::LieElement;
use crate::exact::Rat;

/// The variable `x_pq`, stored with `p ≤ q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    p: usize,
    q: usize,
}

impl Var {
    pub fn new(p: usize, q: usize) -> Self {
        Var {
            p: p.min(q),
            q: p.max(q),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// All `x_pq` with `1 ≤ p ≤ q ≤ size`.
    pub fn all(size: usize) -> Vec<Var> {
        (1..=size)
            .flat_map(|p| (p..=size).map(move |q| Var { p, q }))
            .collect()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p < 10 && self.q < 10 {
            write!(f, "x{}{}", self.p, self.q)
        } else {
            write!(f, "x{},{}", self.p, self.q)
        }
    }
}

/// A monomial as sorted `(variable, exponent)` pairs, ordered by total
/// degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut m: BTreeMap<Var, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m.into_iter().collect())
    }

    /// `∂/∂v`, as a coefficient and the lowered monomial.
    fn derivative(&self, v: Var) -> Option<(u32, Monomial)> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let rest = self
            .0
            .iter()
            .filter_map(|&(w, k)| {
                if w != v {
                    Some((w, k))
                } else if k > 1 {
                    Some((w, k - 1))
                } else {
                    None
                }
            })
            .collect();
        Some((e, Monomial(rest)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A polynomial with rational coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial(BTreeMap<Monomial, Rat>);

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rat::one(), Monomial::var(v))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.0.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.0.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&Rat::int(-1)))
    }

    pub fn scale(&self, s: &Rat) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial(self.0.iter().map(|(m, c)| (m.clone(), c * s)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                out.add_term(m1.times(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.0 {
            if let Some((e, lower)) = m.derivative(v) {
                out.add_term(lower, &(c * &Rat::int(e as i64)));
            }
        }
        out
    }

    pub fn eval(&self, at: impl Fn(Var) -> Rat) -> Rat {
        self.0
            .iter()
            .map(|(m, c)| {
                m.factors()
                    .iter()
                    .fold(c.clone(), |acc, &(v, e)| &acc * &at(v).pow(e))
            })
            .sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.0.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            match (k, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if m.factors().is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// `Σ f_pq ∂_pq`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VectorField(BTreeMap<Var, Polynomial>);

impl VectorField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Var, Polynomial)>) -> Self {
        let mut out = VectorField::zero();
        for (v, p) in terms {
            out.add_coeff(v, &p);
        }
        out
    }

    fn add_coeff(&mut self, v: Var, p: &Polynomial) {
        let sum = self.0.get(&v).map_or_else(|| p.clone(), |old| old.add(p));
        if sum.is_zero() {
            self.0.remove(&v);
        } else {
            self.0.insert(v, sum);
        }
    }

    pub fn coeff(&self, v: Var) -> Polynomial {
        self.0.get(&v).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Var, &Polynomial)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The derivation applied to a polynomial.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        self.0.iter().fold(Polynomial::zero(), |acc, (v, f)| {
            acc.add(&f.mul(&g.derivative(*v)))
        })
    }

    /// Coefficients evaluated at a point.
    pub fn eval(&self, at: impl Fn(Var) -> Rat) -> BTreeMap<Var, Rat> {
        self.0
            .iter()
            .map(|(v, f)| (*v, f.eval(&at)))
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    /// The tangent vector at the origin.
    pub fn eval_at_zero(&self) -> BTreeMap<Var, Rat> {
        self.eval(|_| Rat::zero())
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, p)| format!("({p})*d{}{}", v.p, v.q))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[V, W] = Σ (V(W_pq) − W(V_pq)) ∂_pq`.
pub fn vf_bracket(v: &VectorField, w: &VectorField) -> VectorField {
    let vars: std::collections::BTreeSet<Var> = v.0.keys().chain(w.0.keys()).copied().collect();
    VectorField::from_terms(
        vars.into_iter()
            .map(|x| (x, v.apply(&w.coeff(x)).sub(&w.apply(&v.coeff(x))))),
    )
}

impl LieElement for VectorField {
    type Key = (Var, Monomial);

    fn bracket(&self, other: &Self) -> Self {
        vf_bracket(self, other)
    }

    fn coords(&self) -> Vec<((Var, Monomial), Rat)> {
        self.0
            .iter()
            .flat_map(|(v, p)| p.terms().map(move |(m, c)| ((*v, m.clone()), c.clone())))
            .collect()
    }

    fn scale(&self, s: &Rat) -> Self {
        VectorField::from_terms(self.0.iter().map(|(v, p)| (*v, p.scale(s))))
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, p) in &other.0 {
            out.add_coeff(*v, p);
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}
