//! Sweeps every identity the library implements and reports failures as
//! data rather than panics.
//!
//! Each check pits two independently computed routes against each other
//! (recurrence vs. closed form, direct sum vs. summation formula, series
//! coefficients vs. sequence terms) over a bounded index range, with exact
//! equality as the only acceptance. The Binet check is skipped, not failed,
//! when `ab = -4` leaves it undefined. Reports always come back in the
//! order of [`Identity::ALL`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::matrixseq::{cassini_from_window, closed_from_window, f_binet, f_iter, Mat2};
use crate::numerics::{Params, Rational};
use crate::sequence::q_iter;
use crate::series::{expand, gf_matrix, reciprocal_gf};
use crate::summation::{partial_closed_from_pair, quartic_at, weighted_closed_from_window};

/// The identities the driver knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Identity {
    /// Matrix terms from the recurrence equal the closed form over scalar
    /// sequence values.
    #[serde(rename = "closed_form")]
    ClosedForm,
    /// `det(F_n) = (-b/a)^eps(n)`.
    #[serde(rename = "determinant")]
    Determinant,
    /// The scalar Cassini identity.
    #[serde(rename = "cassini")]
    Cassini,
    /// The Binet formula over Q[sqrt(D)] equals the recurrence.
    #[serde(rename = "binet")]
    Binet,
    /// Generating-function coefficients equal the matrix terms.
    #[serde(rename = "gf")]
    GeneratingFunction,
    /// Plain partial sums equal their closed form.
    #[serde(rename = "sum_i")]
    PartialSum,
    /// Weighted partial sums equal their closed form at sample points.
    #[serde(rename = "sum_ii")]
    WeightedSum,
    /// The reciprocal-power series re-expansion reproduces the sequence.
    #[serde(rename = "cor2")]
    ReciprocalSeries,
    /// `a = b = 1` reproduces the classical Fibonacci numbers.
    #[serde(rename = "preset_fib")]
    PresetFibonacci,
    /// `a = b = 2` reproduces the classical Pell numbers.
    #[serde(rename = "preset_pell")]
    PresetPell,
    /// `a = b = k` reproduces the k-Fibonacci numbers.
    #[serde(rename = "preset_k")]
    PresetKFibonacci,
}

impl Identity {
    /// Every identity, in report order.
    pub const ALL: [Identity; 11] = [
        Identity::ClosedForm,
        Identity::Determinant,
        Identity::Cassini,
        Identity::Binet,
        Identity::GeneratingFunction,
        Identity::PartialSum,
        Identity::WeightedSum,
        Identity::ReciprocalSeries,
        Identity::PresetFibonacci,
        Identity::PresetPell,
        Identity::PresetKFibonacci,
    ];

    /// The identities checked for every parameter pair (everything except
    /// the presets).
    pub const CORE: [Identity; 8] = [
        Identity::ClosedForm,
        Identity::Determinant,
        Identity::Cassini,
        Identity::Binet,
        Identity::GeneratingFunction,
        Identity::PartialSum,
        Identity::WeightedSum,
        Identity::ReciprocalSeries,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            Identity::ClosedForm => "closed_form",
            Identity::Determinant => "determinant",
            Identity::Cassini => "cassini",
            Identity::Binet => "binet",
            Identity::GeneratingFunction => "gf",
            Identity::PartialSum => "sum_i",
            Identity::WeightedSum => "sum_ii",
            Identity::ReciprocalSeries => "cor2",
            Identity::PresetFibonacci => "preset_fib",
            Identity::PresetPell => "preset_pell",
            Identity::PresetKFibonacci => "preset_k",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Identity::ALL
            .into_iter()
            .find(|id| id.slug() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// One index where two routes disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub index: i64,
    pub expected: String,
    pub got: String,
}

impl Failure {
    fn new(index: i64, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Self {
            index,
            expected: expected.into(),
            got: got.into(),
        }
    }
}

/// Outcome of sweeping one identity over one parameter pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: Identity,
    pub a: Rational,
    pub b: Rational,
    pub n_max: i64,
    pub failures: Vec<Failure>,
    pub passed: bool,
    pub skipped: Option<String>,
}

impl VerifyReport {
    fn new(
        p: &Params,
        identity: Identity,
        n_max: i64,
        failures: Vec<Failure>,
        skipped: Option<String>,
    ) -> Self {
        Self {
            identity,
            a: p.a().clone(),
            b: p.b().clone(),
            n_max,
            passed: failures.is_empty(),
            failures,
            skipped,
        }
    }
}

/// Sweeps one identity for indices up to `n_max` and reports the outcome.
pub fn verify_identity(p: &Params, identity: Identity, n_max: i64) -> VerifyReport {
    let (failures, skipped) = match identity {
        Identity::ClosedForm => (check_closed_form(p, n_max), None),
        Identity::Determinant => (check_determinant(p, n_max), None),
        Identity::Cassini => (check_cassini(p, n_max), None),
        Identity::Binet => check_binet(p, n_max),
        Identity::GeneratingFunction => (check_series(p, n_max, &gf_matrix(p)), None),
        Identity::PartialSum => (check_partial_sum(p, n_max), None),
        Identity::WeightedSum => (check_weighted_sum(p, n_max), None),
        Identity::ReciprocalSeries => (check_series(p, n_max, &reciprocal_gf(p)), None),
        Identity::PresetFibonacci => check_preset(p, n_max, Some(1)),
        Identity::PresetPell => check_preset(p, n_max, Some(2)),
        Identity::PresetKFibonacci => check_preset(p, n_max, None),
    };
    VerifyReport::new(p, identity, n_max, failures, skipped)
}

/// Runs every applicable identity in [`Identity::ALL`] order: the eight core
/// checks always, plus the preset matching `(a, b)` when there is one.
///
/// Failures are data in the reports, never errors. `n_max` must be at least 4.
pub fn run_all_verifications(p: &Params, n_max: i64) -> Vec<VerifyReport> {
    assert!(n_max >= 4, "n_max must be at least 4");
    let mut identities: Vec<Identity> = Identity::CORE.to_vec();
    if let Some(preset) = preset_for(p) {
        identities.push(preset);
    }
    identities
        .into_iter()
        .map(|id| verify_identity(p, id, n_max))
        .collect()
}

/// The preset identity matching `(a, b)`, if the pair is `a = b = k` for a
/// nonzero integer `k`.
pub fn preset_for(p: &Params) -> Option<Identity> {
    if p.a() != p.b() || !p.a().is_integer() {
        return None;
    }
    if p.a().is_one() {
        Some(Identity::PresetFibonacci)
    } else if *p.a() == Rational::from(2) {
        Some(Identity::PresetPell)
    } else {
        Some(Identity::PresetKFibonacci)
    }
}

/// `x_0 = 0, x_1 = 1, x_{j+1} = k x_j + x_{j-1}` over plain big integers.
///
/// This is the independent oracle the presets are compared against; it
/// shares no code with the sequence module.
pub fn classical_two_term(k: &BigInt, count: usize) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(count);
    let mut curr = BigInt::zero();
    let mut next = BigInt::one();
    for _ in 0..count {
        values.push(curr.clone());
        let upcoming = k * &next + &curr;
        curr = std::mem::replace(&mut next, upcoming);
    }
    values
}

fn check_closed_form(p: &Params, n_max: i64) -> Vec<Failure> {
    let mut failures = Vec::new();
    let mut fs = f_iter(p);
    let mut qs = q_iter(p);
    let mut q_prev = Rational::one(); // q_{-1}
    let mut q_n = qs.next().expect("infinite");
    let mut q_next = qs.next().expect("infinite");
    for n in 0..=n_max {
        let by_recurrence = fs.next().expect("infinite");
        let by_closed = closed_from_window(p, n, &q_prev, &q_n, &q_next);
        if by_closed != by_recurrence {
            failures.push(Failure::new(
                n,
                by_recurrence.to_string(),
                by_closed.to_string(),
            ));
        }
        q_prev = std::mem::replace(
            &mut q_n,
            std::mem::replace(&mut q_next, qs.next().expect("infinite")),
        );
    }
    failures
}

fn check_determinant(p: &Params, n_max: i64) -> Vec<Failure> {
    let mut failures = Vec::new();
    let minus_ratio = -p.b_over_a();
    for (n, f) in f_iter(p).take(n_max as usize + 1).enumerate() {
        let expected = if n % 2 == 1 {
            minus_ratio.clone()
        } else {
            Rational::one()
        };
        let got = f.det();
        if got != expected {
            failures.push(Failure::new(
                n as i64,
                expected.to_string(),
                got.to_string(),
            ));
        }
    }
    failures
}

fn check_cassini(p: &Params, n_max: i64) -> Vec<Failure> {
    let mut failures = Vec::new();
    let mut qs = q_iter(p);
    let mut q_prev = qs.next().expect("infinite"); // q_0
    let mut q_n = qs.next().expect("infinite"); // q_1
    let mut q_next = qs.next().expect("infinite"); // q_2
    for n in 1..=n_max {
        let (lhs, rhs) = cassini_from_window(p, n, &q_prev, &q_n, &q_next);
        if lhs != rhs {
            failures.push(Failure::new(n, rhs.to_string(), lhs.to_string()));
        }
        q_prev = std::mem::replace(
            &mut q_n,
            std::mem::replace(&mut q_next, qs.next().expect("infinite")),
        );
    }
    failures
}

fn check_binet(p: &Params, n_max: i64) -> (Vec<Failure>, Option<String>) {
    if p.is_degenerate() {
        return (Vec::new(), Some("degenerate discriminant".into()));
    }
    let mut failures = Vec::new();
    for (n, by_recurrence) in f_iter(p).take(n_max as usize + 1).enumerate() {
        match f_binet(p, n as i64) {
            Ok(by_binet) if by_binet == by_recurrence => {}
            Ok(by_binet) => {
                failures.push(Failure::new(
                    n as i64,
                    by_recurrence.to_string(),
                    by_binet.to_string(),
                ));
            }
            Err(e) => failures.push(Failure::new(
                n as i64,
                by_recurrence.to_string(),
                e.to_string(),
            )),
        }
    }
    (failures, None)
}

fn check_series(p: &Params, n_max: i64, rf: &crate::series::MatRatFunc) -> Vec<Failure> {
    let mut failures = Vec::new();
    let order = n_max as usize + 1;
    let series = expand(rf, order).expect("quartic denominators have unit constant term");
    for (i, f) in f_iter(p).take(order).enumerate() {
        if series.coefficient(i) != &f {
            failures.push(Failure::new(
                i as i64,
                f.to_string(),
                series.coefficient(i).to_string(),
            ));
        }
    }
    failures
}

fn check_partial_sum(p: &Params, n_max: i64) -> Vec<Failure> {
    let mut failures = Vec::new();
    let mut fs = f_iter(p);
    let mut f_prev = fs.next().expect("infinite"); // F_0
    let mut f_n = fs.next().expect("infinite"); // F_1
    let mut direct = Mat2::zero();
    for n in 1..=n_max {
        direct = &direct + &f_prev; // sum of F_0 .. F_{n-1}
        let closed = partial_closed_from_pair(p, n, &f_prev, &f_n);
        if closed != direct {
            failures.push(Failure::new(n, direct.to_string(), closed.to_string()));
        }
        f_prev = std::mem::replace(&mut f_n, fs.next().expect("infinite"));
    }
    failures
}

/// Five nonzero rational sample points avoiding the roots of the quartic
/// for these parameters; deterministic for a given pair.
pub fn weighted_sample_points(p: &Params) -> Vec<Rational> {
    let candidates: [(i64, i64); 10] = [
        (2, 1),
        (-2, 1),
        (3, 1),
        (1, 2),
        (-5, 3),
        (5, 2),
        (-7, 2),
        (4, 1),
        (-1, 4),
        (7, 3),
    ];
    candidates
        .into_iter()
        .map(|(n, d)| Rational::frac(n, d))
        .filter(|x| !quartic_at(p, x).is_zero())
        .take(5)
        .collect()
}

fn check_weighted_sum(p: &Params, n_max: i64) -> Vec<Failure> {
    let mut failures = Vec::new();
    for x in weighted_sample_points(p) {
        let t = x.recip().expect("sample points are nonzero");
        let mut fs = f_iter(p);
        let f0 = fs.next().expect("infinite");
        let f1 = fs.next().expect("infinite");
        let f2 = fs.next().expect("infinite");
        let f3 = fs.next().expect("infinite");
        let f4 = fs.next().expect("infinite");
        let mut t_pow = &t * &t; // t^n at n = 2
        let mut direct = &(&f0 + &f1.scale(&t)) + &f2.scale(&t_pow);
        let mut window = [f1, f2, f3, f4]; // [F_{n-1}, F_n, F_{n+1}, F_{n+2}]
        for n in 2..=n_max {
            let closed = weighted_closed_from_window(p, &x, &t_pow, &window)
                .expect("sample points avoid the quartic roots");
            if closed != direct {
                failures.push(Failure::new(
                    n,
                    format!("x = {x}: {direct}"),
                    format!("x = {x}: {closed}"),
                ));
            }
            if n == n_max {
                break;
            }
            t_pow = &t_pow * &t;
            direct = &direct + &window[2].scale(&t_pow); // add F_{n+1} t^{n+1}
            let [_, w1, w2, w3] = window;
            window = [w1, w2, w3, fs.next().expect("infinite")];
        }
    }
    failures
}

fn check_preset(p: &Params, n_max: i64, required_k: Option<i64>) -> (Vec<Failure>, Option<String>) {
    if p.a() != p.b() || !p.a().is_integer() {
        return (
            Vec::new(),
            Some("parameters are not of the form a = b = integer k".into()),
        );
    }
    if let Some(k) = required_k {
        if *p.a() != Rational::from(k) {
            return (Vec::new(), Some(format!("preset requires a = b = {k}")));
        }
    }
    let k = p.a().numer().clone();
    let classical = classical_two_term(&k, n_max as usize + 1);
    let mut failures = Vec::new();
    for (n, (q, expected)) in q_iter(p).zip(classical).enumerate() {
        if q != Rational::from(expected.clone()) {
            failures.push(Failure::new(n as i64, expected.to_string(), q.to_string()));
        }
    }
    (failures, None)
}
