use std::fmt;
use std::str::FromStr;

use super::{ad_power, check_electrical_serre, closure, CartanSpec, SerreReport};
use crate::error::{Error, Result};
use crate::exact::{lie_bracket, Mat, Rat};
use crate::symplectic::el_generators;

/// Generator matrices satisfying the electrical Serre relations of a
/// Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieRep {
    name: String,
    gens: Vec<Mat>,
    cartan: CartanSpec,
}

impl LieRep {
    /// Validates shapes and every relation.
    pub fn new(name: &str, gens: Vec<Mat>, cartan: CartanSpec) -> Result<Self> {
        let rep = Self::unchecked(name, gens, cartan)?;
        let report = rep.check()?;
        if let Some(bad) = report.failures().next() {
            return Err(Error::Validation(format!(
                "{name}: relation {} fails",
                bad.relation
            )));
        }
        Ok(rep)
    }

    /// Checks shapes only; the relations may fail.
    pub fn unchecked(name: &str, gens: Vec<Mat>, cartan: CartanSpec) -> Result<Self> {
        if gens.len() != cartan.size() {
            return Err(Error::DimensionMismatch(format!(
                "{} generators for a rank {} Cartan matrix",
                gens.len(),
                cartan.size()
            )));
        }
        if let Some(first) = gens.first() {
            let d = first.rows();
            if gens.iter().any(|g| !g.is_square() || g.rows() != d) {
                return Err(Error::DimensionMismatch(format!(
                    "{name}: generators must be square of one size"
                )));
            }
        }
        Ok(LieRep {
            name: name.to_string(),
            gens,
            cartan,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gens(&self) -> &[Mat] {
        &self.gens
    }

    pub fn cartan(&self) -> &CartanSpec {
        &self.cartan
    }

    /// Matrix size.
    pub fn degree(&self) -> usize {
        self.gens.first().map_or(0, Mat::rows)
    }

    pub fn check(&self) -> Result<SerreReport> {
        check_electrical_serre(&self.gens, &self.cartan)
    }
}

/// The representations shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    El(usize),
    Eb2,
    Eg2,
    Ec3,
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::El(n) => write!(f, "el:{n}"),
            Builtin::Eb2 => write!(f, "eb2"),
            Builtin::Eg2 => write!(f, "eg2"),
            Builtin::Ec3 => write!(f, "ec3"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eb2" => Ok(Builtin::Eb2),
            "eg2" => Ok(Builtin::Eg2),
            "ec3" => Ok(Builtin::Ec3),
            _ => match s.strip_prefix("el:").map(str::parse::<usize>) {
                Some(Ok(n)) if n >= 1 => Ok(Builtin::El(n)),
                _ => Err(Error::UnknownName(s.to_string())),
            },
        }
    }
}

fn sparse(d: usize, terms: &[(i64, usize, usize)]) -> Mat {
    let mut m = Mat::zeros(d, d);
    for &(c, i, j) in terms {
        m[(i - 1, j - 1)] += &Rat::int(c);
    }
    m
}

fn ec3_adjoint() -> [Mat; 3] {
    let e = sparse(9, &[(1, 4, 2), (1, 5, 4), (1, 7, 6), (1, 8, 7), (1, 8, 9)]);
    let f = sparse(
        9,
        &[
            (2, 2, 4),
            (-2, 2, 6),
            (2, 4, 1),
            (2, 4, 5),
            (-1, 4, 7),
            (-2, 6, 3),
            (1, 6, 7),
            (1, 9, 8),
        ],
    );
    let g = sparse(
        9,
        &[(-1, 3, 6), (-1, 6, 2), (-1, 7, 4), (-1, 8, 5), (1, 8, 9)],
    );
    [e, f, g]
}

pub(crate) fn gl2_pair() -> (Mat, Mat) {
    (Mat::from_ints(&[&[1, 1], &[0, 1]]), Mat::unit(2, 2, 1))
}

pub fn builtin_rep(which: Builtin) -> Result<LieRep> {
    match which {
        Builtin::El(n) => LieRep::new(
            &which.to_string(),
            el_generators(n).into_mats(),
            CartanSpec::type_a(2 * n),
        ),
        Builtin::Eb2 => {
            let (e, f) = gl2_pair();
            LieRep::new("eb2", vec![e, f], CartanSpec::b2())
        }
        Builtin::Eg2 => {
            let e = Mat::from_ints(&[&[1, 1, 0, 1], &[0, 1, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
            LieRep::new("eg2", vec![e, Mat::unit(4, 4, 1)], CartanSpec::g2())
        }
        Builtin::Ec3 => {
            let [e9, f9, g9] = ec3_adjoint();
            let (e2, f2) = gl2_pair();
            let g2 = Mat::unit(2, 1, 2);
            let gens = vec![e9.direct_sum(&e2), f9.direct_sum(&f2), g9.direct_sum(&g2)];
            LieRep::new("ec3", gens, CartanSpec::c3())
        }
    }
}

/// Dimension of the bracket closure of the generators. The default
/// budget is the positive-root count of the Cartan matrix, falling back
/// to the dimension of the ambient matrix space.
pub fn lie_closure_dim(rep: &LieRep, budget: Option<usize>) -> Result<usize> {
    let d = rep.degree();
    let budget = match budget {
        Some(b) => b,
        None => rep.cartan.positive_root_count().unwrap_or(d * d),
    };
    Ok(closure(&rep.gens, budget)?.len())
}

/// The fold of `el₃ ⊂ el₄` onto `B₂` with `E = φ(e₂)`, `F = φ(e₁) + φ(e₃)`
/// in `sp(4)`. `F` takes the role of the generator with the cubic relation
/// and `E/2` the one with the electrical relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingReport {
    /// `[F,[F,[F,E]]] = 0`.
    pub cubic: bool,
    /// `[E,[E,F]] = −4E`, that is `[E/2,[E/2,F]] = −2·E/2`.
    pub quadratic: bool,
    /// `[F,[F,E]] ≠ 0` and `[E,[E,F]] ≠ −2E`.
    pub control: bool,
    /// With `F = φ(e₁)` alone, `[E,[E,F]] = −2E`.
    pub degenerate: bool,
    /// `[F,[F,E]] = −2F`, the relation with the roles of `E` and `F`
    /// exchanged. Not a `B₂` relation of this pair.
    pub exchanged: bool,
}

impl FoldingReport {
    pub fn all_pass(&self) -> bool {
        self.cubic && self.quadratic && self.control && self.degenerate
    }
}

pub fn folding_check_b2() -> FoldingReport {
    let g = el_generators(2);
    let phi = |i: usize| g.get(i).expect("index in range").clone();
    let big_e = phi(2);
    let big_f = &phi(1) + &phi(3);
    let ee_f = ad_power(&big_e, 2, &big_f);
    let ff_e = ad_power(&big_f, 2, &big_e);
    FoldingReport {
        cubic: lie_bracket(&big_f, &ff_e).expect("same size").is_zero(),
        quadratic: ee_f == big_e.scale(&Rat::int(-4)),
        control: !ff_e.is_zero() && ee_f != big_e.scale(&Rat::int(-2)),
        degenerate: ad_power(&big_e, 2, &phi(1)) == big_e.scale(&Rat::int(-2)),
        exchanged: ff_e == big_f.scale(&Rat::int(-2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, scaled_exp};

    #[test]
    fn names() {
        assert_eq!("el:3".parse::<Builtin>().unwrap(), Builtin::El(3));
        assert_eq!("ec3".parse::<Builtin>().unwrap(), Builtin::Ec3);
        for bad in ["el", "el:0", "el:x", "ed4", ""] {
            assert!(
                matches!(bad.parse::<Builtin>(), Err(Error::UnknownName(_))),
                "{bad}"
            );
        }
        assert_eq!(Builtin::El(2).to_string(), "el:2");
    }

    #[test]
    fn shapes() {
        let eb2 = builtin_rep(Builtin::Eb2).unwrap();
        assert_eq!((eb2.gens().len(), eb2.degree()), (2, 2));
        let eg2 = builtin_rep(Builtin::Eg2).unwrap();
        let e = &eg2.gens()[0];
        assert!((0..4).all(|i| e[(i, i)].is_one()));
        assert!([(0, 1), (1, 2), (0, 3)]
            .iter()
            .all(|&(i, j)| e[(i, j)].is_one()));
        assert_eq!(eg2.gens()[1], Mat::unit(4, 4, 1));
        let el2 = builtin_rep(Builtin::El(2)).unwrap();
        assert_eq!((el2.gens().len(), el2.degree()), (4, 4));
        assert_eq!(builtin_rep(Builtin::Ec3).unwrap().degree(), 11);
    }

    #[test]
    fn ec3_transcription_satisfies_the_five_relations() {
        let [e, f, g] = ec3_adjoint();
        let report = check_electrical_serre(&[e, f, g], &CartanSpec::c3()).unwrap();
        assert!(
            report.all_pass(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        let (e2, f2) = gl2_pair();
        let report =
            check_electrical_serre(&[e2, f2, Mat::unit(2, 1, 2)], &CartanSpec::c3()).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn dimensions() {
        for n in 1..=3 {
            assert_eq!(
                lie_closure_dim(&builtin_rep(Builtin::El(n)).unwrap(), None).unwrap(),
                n * (2 * n + 1)
            );
        }
        assert_eq!(
            lie_closure_dim(&builtin_rep(Builtin::Eb2).unwrap(), None).unwrap(),
            4
        );
        assert_eq!(
            lie_closure_dim(&builtin_rep(Builtin::Eg2).unwrap(), None).unwrap(),
            6
        );
        assert_eq!(
            lie_closure_dim(&builtin_rep(Builtin::Ec3).unwrap(), None).unwrap(),
            9
        );
        let eb2 = builtin_rep(Builtin::Eb2).unwrap();
        assert_eq!(
            lie_closure_dim(&eb2, Some(3)),
            Err(Error::ClosureBudgetExceeded(3))
        );
    }

    #[test]
    fn negative_control() {
        let (e, _) = gl2_pair();
        let bad = vec![e.clone(), Mat::unit(2, 1, 2)];
        assert!(LieRep::new("bad", bad.clone(), CartanSpec::b2()).is_err());
        let rep = LieRep::unchecked("bad", bad, CartanSpec::b2()).unwrap();
        assert!(!rep.check().unwrap().all_pass());
        assert!(
            LieRep::unchecked("bad", vec![e.clone(), Mat::identity(3)], CartanSpec::b2()).is_err()
        );
        assert!(LieRep::unchecked("bad", vec![e], CartanSpec::b2()).is_err());
    }

    #[test]
    fn folding() {
        let r = folding_check_b2();
        assert!(r.cubic && r.quadratic && r.control && r.degenerate);
        assert!(r.all_pass());
        assert!(!r.exchanged);
        // The folded pair is a B₂ representation in its own right.
        let g = el_generators(2);
        let e = (g.get(1).unwrap() + g.get(3).unwrap()).clone();
        let f = g.get(2).unwrap().scale(&q(1, 2));
        assert!(LieRep::new("fold", vec![e, f], CartanSpec::b2()).is_ok());
    }

    #[test]
    fn eg2_generator_exponentiates() {
        let e = builtin_rep(Builtin::Eg2).unwrap().gens()[0].clone();
        let s = scaled_exp(&e, &Rat::one()).unwrap();
        assert!(s.exponent.is_one());
        assert_eq!(
            s.body,
            crate::exact::exp_nilpotent(&(&e - &Mat::identity(4)), &Rat::one()).unwrap()
        );
    }
}
