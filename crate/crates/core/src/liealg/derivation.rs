//! The infinitesimal action of the generators on the response-matrix
//! coordinates `x_pq`, and the stabilizer of the zero matrix.

use super::closure;
use super::poly::{Polynomial, Var, VectorField};
use crate::error::{Error, Result};
use crate::exact::{Rat, SpanBasis};

fn x(p: usize, q: usize) -> Polynomial {
    Polynomial::var(Var::new(p, q))
}

fn one() -> Polynomial {
    Polynomial::constant(Rat::one())
}

/// Even `i = 2k`: `∂_kk + ∂_{k+1,k+1} − ∂_{k,k+1}`.
/// Odd `i = 2k−1`: `−Σ_{p≤q} x_kp x_kq ∂_pq`.
pub fn derivation_field(i: usize, n: usize) -> Result<VectorField> {
    if i == 0 || i > 2 * n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: 2 * n,
        });
    }
    let k = i.div_ceil(2);
    if i % 2 == 0 {
        return Ok(VectorField::from_terms([
            (Var::new(k, k), one()),
            (Var::new(k + 1, k + 1), one()),
            (Var::new(k, k + 1), one().scale(&Rat::int(-1))),
        ]));
    }
    Ok(VectorField::from_terms(Var::all(n + 1).into_iter().map(
        |v| (v, x(k, v.p()).mul(&x(k, v.q())).scale(&Rat::int(-1))),
    )))
}

/// The fields of `e₁, …, e₂ₙ`.
pub fn derivation_fields(n: usize) -> Vec<VectorField> {
    (1..=2 * n)
        .map(|i| derivation_field(i, n).expect("index in range"))
        .collect()
}

/// Closed form offered for `[e_{2i}-field, e_{2i−1}-field]`:
/// `−x_ii∂_ii + x_{i,i+1}∂_{i+1,i+1} + Σ_{p=1}^{n+1} (x_{i+1,p}∂_{i+1,p} − x_{ip}∂_{ip})`,
/// read literally with `x_pq = x_qp` and `∂_pq = ∂_qp`.
pub fn printed_bracket_field(i: usize, n: usize) -> Result<VectorField> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let mut terms = vec![
        (Var::new(i, i), x(i, i).scale(&Rat::int(-1))),
        (Var::new(i + 1, i + 1), x(i, i + 1)),
    ];
    for p in 1..=n + 1 {
        terms.push((Var::new(i + 1, p), x(i + 1, p)));
        terms.push((Var::new(i, p), x(i, p).scale(&Rat::int(-1))));
    }
    Ok(VectorField::from_terms(terms))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub n: usize,
    /// Dimension of the bracket closure of the derivation fields.
    pub closure_dim: usize,
    /// Dimension of the span of their values at `x = 0`.
    pub codim: usize,
}

impl StabilizerReport {
    pub fn expected(&self) -> usize {
        self.n * (self.n + 1) / 2
    }
}

/// Closes the derivation fields under brackets and measures the span of
/// their values at the zero matrix.
pub fn stabilizer_codim(n: usize) -> Result<StabilizerReport> {
    if n == 0 {
        return Err(Error::Validation("stabilizer needs n >= 1".into()));
    }
    let basis = closure(&derivation_fields(n), n * (2 * n + 1))?;
    let mut values: SpanBasis<Var> = SpanBasis::new();
    for f in &basis {
        values.insert(f.eval_at_zero());
    }
    Ok(StabilizerReport {
        n,
        closure_dim: basis.len(),
        codim: values.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::act_response;
    use crate::liealg::{check_electrical_serre, vf_bracket, CartanSpec, LieElement};
    use crate::network::{response, ResponseMatrix};
    use crate::sample;
    use std::collections::BTreeMap;

    fn c(k: i64) -> Polynomial {
        Polynomial::constant(Rat::int(k))
    }

    #[test]
    fn small_fields() {
        let f2 = derivation_field(2, 1).unwrap();
        assert_eq!(
            f2,
            VectorField::from_terms([
                (Var::new(1, 1), c(1)),
                (Var::new(2, 2), c(1)),
                (Var::new(1, 2), c(-1))
            ])
        );
        let f1 = derivation_field(1, 1).unwrap();
        let want = VectorField::from_terms([
            (Var::new(1, 1), x(1, 1).mul(&x(1, 1)).scale(&Rat::int(-1))),
            (Var::new(1, 2), x(1, 1).mul(&x(1, 2)).scale(&Rat::int(-1))),
            (Var::new(2, 2), x(1, 2).mul(&x(1, 2)).scale(&Rat::int(-1))),
        ]);
        assert_eq!(f1, want);
        for n in 1..=3 {
            for i in (1..=2 * n).step_by(2) {
                assert!(derivation_field(i, n).unwrap().eval_at_zero().is_empty());
            }
        }
        assert!(derivation_field(0, 1).is_err());
        assert!(derivation_field(3, 1).is_err());
    }

    #[test]
    fn fields_satisfy_the_relations() {
        for n in 1..=3 {
            let report =
                check_electrical_serre(&derivation_fields(n), &CartanSpec::type_a(2 * n)).unwrap();
            assert!(report.all_pass(), "n = {n}");
        }
        let (e1, e2) = (
            derivation_field(1, 2).unwrap(),
            derivation_field(2, 2).unwrap(),
        );
        let lhs = vf_bracket(&e1, &vf_bracket(&e1, &e2));
        assert_eq!(lhs, e1.scale(&Rat::int(-2)));
        assert!(vf_bracket(&e1, &e1).is_zero());
    }

    #[test]
    fn bracket_e2_e1_for_n2() {
        // Hand expansion of [∂11 + ∂22 − ∂12, −Σ x1p x1q ∂pq].
        let got = vf_bracket(
            &derivation_field(2, 2).unwrap(),
            &derivation_field(1, 2).unwrap(),
        );
        let want = VectorField::from_terms([
            (Var::new(1, 1), x(1, 1).scale(&Rat::int(-2))),
            (Var::new(1, 2), x(1, 1).sub(&x(1, 2))),
            (Var::new(1, 3), x(1, 3).scale(&Rat::int(-1))),
            (Var::new(2, 2), x(1, 2).scale(&Rat::int(2))),
            (Var::new(2, 3), x(1, 3)),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn literal_field_expansion() {
        let f = printed_bracket_field(1, 2).unwrap();
        let want = VectorField::from_terms([
            (Var::new(1, 1), x(1, 1).scale(&Rat::int(-2))),
            (Var::new(1, 3), x(1, 3).scale(&Rat::int(-1))),
            (Var::new(2, 2), x(1, 2).add(&x(2, 2))),
            (Var::new(2, 3), x(2, 3)),
        ]);
        assert_eq!(f, want);
        assert!(printed_bracket_field(3, 2).is_err());
    }

    #[test]
    fn stabilizer_small() {
        for n in 1..=2 {
            let r = stabilizer_codim(n).unwrap();
            assert_eq!(r.codim, r.expected(), "n = {n}");
            assert!(r.closure_dim <= n * (2 * n + 1));
        }
    }

    /// Slope at `t = 0` of `t ↦ act_response(L, i, t)`. Every entry has
    /// the form `(αt² + βt)/(γt + 1)`, so the difference quotient
    /// `q(t)` has affine reciprocal and `q(0) = 1/(2/q(1) − 1/q(2))`.
    fn slope(l: &ResponseMatrix, i: usize) -> BTreeMap<Var, Rat> {
        let f0 = l.mat();
        let f1 = act_response(l, i, &Rat::one()).unwrap().into_mat();
        let f2 = act_response(l, i, &Rat::int(2)).unwrap().into_mat();
        let mut out = BTreeMap::new();
        for v in Var::all(l.size()) {
            let (r, s) = (v.p() - 1, v.q() - 1);
            let q1 = &f1[(r, s)] - &f0[(r, s)];
            let q2 = &(&f2[(r, s)] - &f0[(r, s)]) / &Rat::int(2);
            if q1.is_zero() {
                continue;
            }
            let d = (&(&Rat::int(2) / &q1) - &q2.recip().unwrap())
                .recip()
                .unwrap();
            out.insert(v, d);
        }
        out
    }

    #[test]
    fn fields_match_the_action() {
        let mut r = sample::rng(21);
        for n in 1..=3 {
            for interior in 0..6 {
                let shape = sample::NetworkShape {
                    boundary: n + 1,
                    interior: interior % 3,
                    extra_edges: n + 2,
                    loops: 0,
                };
                let l = response(&sample::random_network(&mut r, shape)).unwrap();
                for i in 1..=2 * n {
                    let field = derivation_field(i, n).unwrap();
                    let at = |v: Var| l.x(v.p(), v.q()).clone();
                    assert_eq!(field.eval(at), slope(&l, i), "n = {n}, i = {i}");
                }
            }
        }
    }
}
