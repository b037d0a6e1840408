//! Self-check suites. Each suite prints one line per check ending in
//! `PASS` or `FAIL`; output depends only on the options.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::action::{act_network, act_response, act_word, GenWord};
use crate::error::{Error, Result};
use crate::exact::{exp_nilpotent, Mat, Rat};
use crate::liealg::{
    b2_braid, b2_explicit, b2_lhs, b2_rhs, builtin_rep, check_electrical_serre, folding_check_b2,
    lie_closure_dim, stabilizer_codim, Builtin, CartanSpec,
};
use crate::network::response;
use crate::perms::{catalan, enumerate_efficient, network_of_word};
use crate::sample::{self, NetworkShape};
use crate::symplectic::{
    braid_move, el_generators, factorize_top_cell, one_parameter, sp_of_word, staircase_word,
    BraidTriple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Braid,
    Dims,
    Stabilizer,
    B2,
    Action,
    Cells,
    Efficient,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Relations,
        Suite::Braid,
        Suite::Dims,
        Suite::Stabilizer,
        Suite::B2,
        Suite::Action,
        Suite::Cells,
        Suite::Efficient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Braid => "braid",
            Suite::Dims => "dims",
            Suite::Stabilizer => "stabilizer",
            Suite::B2 => "b2",
            Suite::Action => "action",
            Suite::Cells => "cells",
            Suite::Efficient => "efficient",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Unset fields take per-suite defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub tau: Option<Rat>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub n: Option<usize>,
}

impl SuiteOptions {
    fn tau(&self) -> Rat {
        self.tau.clone().unwrap_or_else(Rat::one)
    }

    fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    fn rng(&self) -> sample::SampleRng {
        sample::rng(self.seed.unwrap_or(7))
    }

    fn n(&self, default: usize, max: usize) -> Result<usize> {
        let n = self.n.unwrap_or(default);
        if n == 0 || n > max {
            return Err(Error::Validation(format!(
                "-n must be in 1..={max}, got {n}"
            )));
        }
        Ok(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            self.label,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuiteReport {
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    fn push(&mut self, label: String, pass: bool) {
        self.lines.push(CheckLine { label, pass });
    }

    /// A line counting failures among `trials` attempts.
    fn tally(&mut self, label: &str, trials: usize, failures: usize) {
        self.push(
            format!("{label} trials={trials} failures={failures}"),
            failures == 0,
        );
    }

    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Runs a suite. Errors mean the options were unusable; failed checks
/// are reported as `FAIL` lines instead.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    match suite {
        Suite::Relations => relations(opts),
        Suite::Braid => braid(opts),
        Suite::Dims => dims(opts),
        Suite::Stabilizer => stabilizer(opts),
        Suite::B2 => b2(opts),
        Suite::Action => action(opts),
        Suite::Cells => cells(opts),
        Suite::Efficient => efficient(opts),
    }
}

fn relations(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for n in 1..=opts.n(4, 8)? {
        let r = check_electrical_serre(el_generators(n).mats(), &CartanSpec::type_a(2 * n))?;
        let failed = r.failures().count();
        report.push(
            format!("el:{n} relations={} failed={failed}", r.checks.len()),
            failed == 0,
        );
    }
    for which in [Builtin::Eb2, Builtin::Eg2, Builtin::Ec3] {
        let rep = builtin_rep(which)?;
        let r = rep.check()?;
        let failed = r.failures().count();
        report.push(
            format!("{which} relations={} failed={failed}", r.checks.len()),
            failed == 0,
        );
    }
    Ok(report)
}

fn braid(opts: &SuiteOptions) -> Result<SuiteReport> {
    let tau = opts.tau();
    let trials = opts.trials(100);
    let n = opts.n(1, 4)?;
    let mut rng = opts.rng();
    let mut report = SuiteReport::default();
    let gens = el_generators(n);
    let unipotent =
        |i: usize, t: &Rat| exp_nilpotent(&Mat::unit(3, i, i + 1), t).expect("nilpotent");
    let (mut group_failures, mut involution_failures) = (0, 0);
    for _ in 0..trials {
        let [a, b, c] = [(); 3].map(|_| sample::positive_rat(&mut rng));
        let k = rng.gen_range(1..2 * n);
        let (i, j) = if rng.gen_bool(0.5) {
            (k, k + 1)
        } else {
            (k + 1, k)
        };
        let triple = BraidTriple::new(a.clone(), b.clone(), c.clone(), tau.clone());
        let Ok((b2, a2, c2)) = braid_move(&triple) else {
            group_failures += 1;
            involution_failures += 1;
            continue;
        };
        if tau.is_one() || tau.is_zero() {
            let ok = if tau.is_one() {
                let u = |x: usize, t: &Rat| one_parameter(&gens, x, t).expect("index in range");
                &(&u(i, &a) * &u(j, &b)) * &u(i, &c) == &(&u(j, &b2) * &u(i, &a2)) * &u(j, &c2)
            } else {
                &(&unipotent(1, &a) * &unipotent(2, &b)) * &unipotent(1, &c)
                    == &(&unipotent(2, &b2) * &unipotent(1, &a2)) * &unipotent(2, &c2)
            };
            if !ok {
                group_failures += 1;
            }
        }
        let back = braid_move(&BraidTriple::new(b2, a2, c2, tau.clone()));
        if back != Ok((a, b, c)) {
            involution_failures += 1;
        }
    }
    if tau.is_one() {
        report.tally(
            &format!("sp{} braid identity tau=1", 2 * n),
            trials,
            group_failures,
        );
    } else if tau.is_zero() {
        report.tally("unipotent3 braid identity tau=0", trials, group_failures);
    }
    report.tally(
        &format!("braid move involution tau={tau}"),
        trials,
        involution_failures,
    );
    Ok(report)
}

fn dims(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let mut which: Vec<Builtin> = (1..=opts.n(2, 4)?).map(Builtin::El).collect();
    which.extend([Builtin::Eb2, Builtin::Eg2, Builtin::Ec3]);
    for b in which {
        let rep = builtin_rep(b)?;
        let roots = rep.cartan().positive_root_count()?;
        match lie_closure_dim(&rep, None) {
            Ok(dim) => report.push(format!("{b} dim={dim} roots={roots}"), dim == roots),
            Err(e) => report.push(format!("{b} dim=? roots={roots} ({e})"), false),
        }
    }
    Ok(report)
}

fn stabilizer(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    let r = stabilizer_codim(opts.n(2, 4)?)?;
    report.push(
        format!(
            "n={} closure={} codim={} expected={}",
            r.n,
            r.closure_dim,
            r.codim,
            r.expected()
        ),
        r.codim == r.expected(),
    );
    Ok(report)
}

fn b2(opts: &SuiteOptions) -> Result<SuiteReport> {
    let trials = opts.trials(100);
    let mut rng = opts.rng();
    let mut report = SuiteReport::default();
    let samples: Vec<[Rat; 4]> = (0..trials)
        .map(|_| std::array::from_fn(|_| sample::positive_rat(&mut rng)))
        .collect();
    let failures = samples
        .iter()
        .filter(|t| match b2_braid(t, &Rat::one()) {
            Ok(p) => {
                let explicit = b2_explicit(t);
                b2_lhs(t) != explicit || b2_rhs(&p) != explicit
            }
            Err(_) => true,
        })
        .count();
    report.tally("group identity tau=1", trials, failures);
    let mut taus = vec![Rat::zero(), Rat::one(), Rat::int(2)];
    if let Some(t) = &opts.tau {
        if !taus.contains(t) {
            taus.push(t.clone());
        }
    }
    for tau in taus {
        let failures = samples
            .iter()
            .filter(|t| match b2_braid(t, &tau) {
                Ok(p) => &p[1] + &p[3] != &t[0] + &t[2] || !p.iter().all(Rat::is_positive),
                Err(_) => true,
            })
            .count();
        report.tally(&format!("sum and positivity tau={tau}"), trials, failures);
    }
    let fold = folding_check_b2();
    report.push("folding el3 to B2".to_string(), fold.all_pass());
    Ok(report)
}

fn action(opts: &SuiteOptions) -> Result<SuiteReport> {
    let trials = opts.trials(50);
    let mut rng = opts.rng();
    let mut report = SuiteReport::default();
    let (mut checks, mut failures) = (0, 0);
    for _ in 0..trials {
        let shape = NetworkShape {
            boundary: rng.gen_range(2..=6),
            interior: rng.gen_range(0..=6),
            extra_edges: rng.gen_range(0..=6),
            loops: rng.gen_range(0..=1),
        };
        let net = sample::random_network(&mut rng, shape);
        let l = response(&net)?;
        for i in 1..=2 * net.boundary_count() {
            let t = sample::positive_rat(&mut rng);
            checks += 1;
            let ok = match (
                act_network(&net, i, &t).and_then(|m| response(&m)),
                act_response(&l, i, &t),
            ) {
                (Ok(x), Ok(y)) => x == y,
                _ => false,
            };
            if !ok {
                failures += 1;
            }
        }
    }
    report.push(
        format!("networks={trials} checks={checks} failures={failures}"),
        failures == 0,
    );

    let n = opts.n(2, 5)?;
    let mut word_failures = 0;
    for _ in 0..trials {
        let len = rng.gen_range(0..=3 * n);
        let pairs: Vec<(usize, Rat)> = (0..len)
            .map(|_| (rng.gen_range(1..=2 * n), sample::positive_rat(&mut rng)))
            .collect();
        let word = GenWord::from_pairs(n, pairs)?;
        let via_net = network_of_word(&word).and_then(|net| response(&net));
        let via_zero = act_word(&crate::network::ResponseMatrix::zero(n + 1), &word);
        if !matches!((via_net, via_zero), (Ok(a), Ok(b)) if a == b) {
            word_failures += 1;
        }
    }
    report.tally(&format!("words on L0 n={n}"), trials, word_failures);
    Ok(report)
}

fn cells(opts: &SuiteOptions) -> Result<SuiteReport> {
    let trials = opts.trials(20);
    let mut rng = opts.rng();
    let mut report = SuiteReport::default();
    for n in 1..=opts.n(3, 4)? {
        let mut failures = 0;
        for _ in 0..trials {
            let params = sample::positive_rats(&mut rng, n * (2 * n + 1));
            let word =
                GenWord::from_pairs(n, staircase_word(n).into_iter().zip(params.iter().cloned()))?;
            let m = sp_of_word(&word)?;
            if factorize_top_cell(&m, n).ok() != Some(params) {
                failures += 1;
            }
        }
        report.tally(&format!("round trip n={n}"), trials, failures);
    }
    let params = sample::positive_rats(&mut rng, 10);
    let mut rejected = 0;
    for k in 0..params.len() {
        let mut p = params.clone();
        p[k] = Rat::zero();
        let word = GenWord::from_pairs(2, staircase_word(2).into_iter().zip(p))?;
        if matches!(
            factorize_top_cell(&sp_of_word(&word)?, 2),
            Err(Error::NotInTopCell(_))
        ) {
            rejected += 1;
        }
    }
    report.push(
        format!("zeroed parameter n=2 rejected={rejected}/{}", params.len()),
        rejected == params.len(),
    );
    Ok(report)
}

fn efficient(opts: &SuiteOptions) -> Result<SuiteReport> {
    let n = opts.n(3, 7)?;
    let count = enumerate_efficient(n).len() as u128;
    let expected = catalan(n + 1);
    let mut report = SuiteReport::default();
    report.push(
        format!("count={count} expected={expected}"),
        count == expected,
    );
    Ok(report)
}
