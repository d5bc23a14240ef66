//! Cycle contributions `deg υ_i` of an equigenerated ideal, by repeated general cuts.
//!
//! Starting from `T_0 = R`, each step saturates the zero ideal of `T_i` by `I`. The part of
//! `e(T_i)` lost by the saturation is the contribution of the components of dimension
//! `dim T_i` supported on `V(I)`; the saturated ring is then cut by the next general element
//! `x_{i+1}` of `I`. With generators of degree `δ`, a cut multiplies the multiplicity by `δ`,
//! which gives the balance identity
//!
//! ```text
//! Σ_i deg υ_i · δ^(d-1-i) = e(R) · δ^(d-1)
//! ```
//!
//! checked exactly on every run.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{IdealHandle, QuotientRing};
use crate::poly::Polynomial;

pub type Rational = Ratio<i128>;

/// `δ^k` for a possibly negative exponent.
pub fn delta_power(delta: u32, k: i64) -> Rational {
    let d = delta as i128;
    if k >= 0 {
        Rational::from_integer(d.pow(k as u32))
    } else {
        Rational::new(1, d.pow((-k) as u32))
    }
}

/// Seeded general elements `x_i = Σ_j λ_ij a_j` of an equigenerated ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralElementPlan {
    pub seed: u64,
    pub delta: u32,
    /// `λ_ij`, one row per element, entries in `[1, p)`.
    pub coefficients: Vec<Vec<u32>>,
    pub elements: Vec<Polynomial>,
}

/// Draws `count` general elements of `ideal` from a ChaCha8 stream seeded by `seed`.
pub fn general_elements(
    ideal: &IdealHandle,
    count: usize,
    seed: u64,
) -> Result<GeneralElementPlan> {
    if count == 0 {
        return Err(Error::InvalidInput("count must be at least 1".into()));
    }
    let delta = ideal.common_degree()?;
    let gens = ideal.nonzero_generators()?;
    let ambient = ideal.ring().ambient();
    let field = *ambient.field();
    let p = field.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coefficients = Vec::with_capacity(count);
    let mut elements = Vec::with_capacity(count);
    for _ in 0..count {
        let row: Vec<u32> = gens.iter().map(|_| rng.gen_range(1..p)).collect();
        let mut x = Polynomial::zero(ambient);
        for (a, &l) in gens.iter().zip(row.iter()) {
            x = &x + &a.scale(l);
        }
        coefficients.push(row);
        elements.push(x);
    }
    Ok(GeneralElementPlan {
        seed,
        delta,
        coefficients,
        elements,
    })
}

/// One step of the recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub i: usize,
    /// `dim T_i`.
    pub dim_before: usize,
    /// `e(T_i)`.
    pub degree_before: u64,
    /// `deg υ_i`.
    pub value: u64,
    pub terminal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Balance {
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultSeqReport {
    pub seed: u64,
    /// `d = dim R`.
    pub dim: usize,
    /// `e(R)`.
    pub e_r: u64,
    /// `g = ht I`.
    pub height: usize,
    pub delta: u32,
    pub steps: Vec<Step>,
    /// Index of the terminal step.
    pub s_observed: usize,
    pub balance: Balance,
}

impl MultSeqReport {
    /// `deg υ_0, ..., deg υ_s`.
    pub fn contributions(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.value).collect()
    }

    pub fn contribution(&self, i: usize) -> u64 {
        self.steps.get(i).map_or(0, |s| s.value)
    }

    /// Weight of step `i` in the balance identity, `δ^(d-1-i)`.
    pub fn weight(&self, i: usize) -> Rational {
        delta_power(self.delta, self.dim as i64 - 1 - i as i64)
    }

    /// Contributions on the Veronese scale, `deg υ_i · δ^(d-1-i)`; these are the
    /// multiplicity-sequence values `c_{d-i}` for the rescaled grading.
    pub fn c_scale(&self) -> Vec<Rational> {
        self.steps
            .iter()
            .map(|s| self.weight(s.i) * Rational::from_integer(s.value as i128))
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.balance.pass
    }
}

fn balance_of(steps: &[Step], dim: usize, delta: u32, e_r: u64) -> Balance {
    let lhs = steps.iter().fold(Rational::from_integer(0), |acc, s| {
        acc + delta_power(delta, dim as i64 - 1 - s.i as i64)
            * Rational::from_integer(s.value as i128)
    });
    let rhs = delta_power(delta, dim as i64 - 1) * Rational::from_integer(e_r as i128);
    Balance {
        pass: lhs == rhs,
        lhs,
        rhs,
    }
}

fn check_inputs(ring: &QuotientRing, ideal: &IdealHandle) -> Result<u32> {
    if !ideal.ring().same_ring(ring) {
        return Err(Error::RingMismatch);
    }
    if ring.is_zero_ring()? {
        return Err(Error::ZeroRing);
    }
    for k in ring.relations() {
        if !k.is_homogeneous() {
            return Err(Error::NotHomogeneous(k.to_string()));
        }
    }
    let delta = ideal.common_degree()?;
    if ideal.is_unit()? {
        return Err(Error::InvalidInput("ideal must be proper".into()));
    }
    Ok(delta)
}

/// Runs the recursion with the general elements drawn from `seed`.
pub fn multiplicity_sequence(
    ring: &QuotientRing,
    ideal: &IdealHandle,
    seed: u64,
) -> Result<MultSeqReport> {
    let delta = check_inputs(ring, ideal)?;
    let rdata = ring.hilbert()?;
    let (d, e_r) = (rdata.dimension, rdata.degree);
    let height = d - ideal.hilbert()?.dimension;
    let plan = general_elements(ideal, d.max(1), seed)?;

    let mut steps = Vec::new();
    let mut t = ring.zero_ideal();
    for i in 0..=d {
        let tdata = t.hilbert()?;
        let (dim_t, e_t) = (tdata.dimension, tdata.degree);
        if dim_t != d - i {
            return Err(Error::NonGeneric {
                seed,
                msg: format!("step {i}: expected dimension {}, found {dim_t}", d - i),
            });
        }
        let (j, _) = t.saturate(ideal)?;
        let jdata = j.hilbert()?;
        if jdata.is_zero_ring || jdata.dimension < dim_t {
            steps.push(Step {
                i,
                dim_before: dim_t,
                degree_before: e_t,
                value: e_t,
                terminal: true,
            });
            break;
        }
        if jdata.degree > e_t {
            return Err(Error::NonGeneric {
                seed,
                msg: format!("step {i}: saturation increased the multiplicity"),
            });
        }
        steps.push(Step {
            i,
            dim_before: dim_t,
            degree_before: e_t,
            value: e_t - jdata.degree,
            terminal: false,
        });
        if i == d {
            return Err(Error::StepOverflow { seed });
        }
        t = j.with_generators(std::slice::from_ref(&plan.elements[i]))?;
    }
    let s_observed = steps.len() - 1;
    let balance = balance_of(&steps, d, delta, e_r);
    Ok(MultSeqReport {
        seed,
        dim: d,
        e_r,
        height,
        delta,
        steps,
        s_observed,
        balance,
    })
}

/// Verdict of the δ-weighted balance identity.
pub fn check_balance(report: &MultSeqReport, ring: &QuotientRing) -> Result<Balance> {
    let e_r = ring.degree()?;
    Ok(balance_of(&report.steps, report.dim, report.delta, e_r))
}

/// Outcome of the cross-seed agreement protocol.
#[derive(Debug, Clone)]
pub struct Agreement {
    pub report: MultSeqReport,
    pub seeds: Vec<u64>,
    pub agreed: bool,
}

/// Rounds of fresh seeds tried before giving up on agreement.
pub const AGREEMENT_ROUNDS: u64 = 3;

/// Runs the recursion for `k` consecutive seeds starting at `seed` and requires identical
/// contribution lists and passing balances. On disagreement, fresh seed blocks are drawn;
/// persistent disagreement is an error.
pub fn multiplicity_sequence_agreed(
    ring: &QuotientRing,
    ideal: &IdealHandle,
    seed: u64,
    k: usize,
) -> Result<Agreement> {
    let k = k.max(1) as u64;
    let mut last_msg = String::new();
    for round in 0..AGREEMENT_ROUNDS {
        let seeds: Vec<u64> = (0..k).map(|j| seed.wrapping_add(round * k + j)).collect();
        let mut reports = Vec::with_capacity(seeds.len());
        let mut failed = false;
        for &s in &seeds {
            match multiplicity_sequence(ring, ideal, s) {
                Ok(r) if r.balance.pass => reports.push(r),
                Ok(r) => {
                    last_msg = format!("balance {} != {}", r.balance.lhs, r.balance.rhs);
                    failed = true;
                }
                Err(e @ (Error::NonGeneric { .. } | Error::StepOverflow { .. })) => {
                    last_msg = e.to_string();
                    failed = true;
                }
                Err(e) => return Err(e),
            }
        }
        if failed {
            continue;
        }
        let first = reports[0].contributions();
        if reports.iter().all(|r| r.contributions() == first) {
            return Ok(Agreement {
                report: reports.swap_remove(0),
                seeds,
                agreed: true,
            });
        }
        last_msg = format!("seeds {seeds:?} disagree on the contribution list");
    }
    Err(Error::NonGeneric {
        seed,
        msg: last_msg,
    })
}

/// `R / (0 :_R <I>)` together with the image of `I`.
pub fn remove_torsion(
    ring: &QuotientRing,
    ideal: &IdealHandle,
) -> Result<(QuotientRing, IdealHandle)> {
    let (torsion, _) = ring.zero_ideal().saturate(ideal)?;
    let bar = ring.quotient_by(&torsion)?;
    let ibar = bar.ideal(ideal.generators().to_vec())?;
    Ok((bar, ibar))
}

/// One rung `H_{i-1} = (x_1, ..., x_{i-1}) : I` of the residual ladder.
#[derive(Debug, Clone)]
pub struct ResidualStep {
    pub i: usize,
    pub residual: IdealHandle,
    /// Dimension of `R / (H_{i-1} + I)`.
    pub dim: usize,
    /// `e(R / (H_{i-1} + I))`, zero when that ring is zero.
    pub degree: u64,
    /// Whether the plain colon `H_{i-1}` equals the saturated colon `J_{i-1}`.
    pub equals_saturated: bool,
}

#[derive(Debug, Clone)]
pub struct ResidualChain {
    pub dim: usize,
    pub e_r: u64,
    pub height: usize,
    pub delta: u32,
    /// `e(R / I)`.
    pub e_r_mod_i: u64,
    pub steps: Vec<ResidualStep>,
}

impl ResidualChain {
    /// True when some `H_{i-1}` differs from `J_{i-1}`.
    pub fn diverges(&self) -> bool {
        self.steps.iter().any(|s| !s.equals_saturated)
    }

    /// Term of the residual formula at index `i`: `e(R/I)` at `i = g`, and
    /// `e(R / (H_{i-1} + I))` above it when that quotient has dimension `d - i`.
    pub fn term(&self, i: usize) -> u64 {
        if i == self.height {
            return self.e_r_mod_i;
        }
        self.steps
            .iter()
            .find(|s| s.i == i)
            .filter(|s| s.degree > 0 && s.dim + i == self.dim)
            .map_or(0, |s| s.degree)
    }

    /// Weighted right-hand side `Σ_{i=g}^{s} term(i) · δ^(d-1-i)` over the computed ladder.
    pub fn weighted_total(&self) -> Rational {
        let top = self
            .steps
            .iter()
            .map(|s| s.i)
            .max()
            .unwrap_or(self.height)
            .max(self.height);
        (self.height..=top).fold(Rational::from_integer(0), |acc, i| {
            acc + delta_power(self.delta, self.dim as i64 - 1 - i as i64)
                * Rational::from_integer(self.term(i) as i128)
        })
    }

    /// Whether the ladder reproduces `e(R) · δ^(d-1)`.
    pub fn balances(&self) -> bool {
        self.weighted_total()
            == delta_power(self.delta, self.dim as i64 - 1)
                * Rational::from_integer(self.e_r as i128)
    }

    /// Indices `i` in `g..=s` where the ladder term differs from `deg υ_i`.
    pub fn disagreements(&self, report: &MultSeqReport) -> Vec<usize> {
        (self.height..=report.s_observed)
            .filter(|&i| self.term(i) != report.contribution(i))
            .collect()
    }
}

/// Residual ladder `H_{i-1}` for `i = 1..=plan.elements.len()` built from `plan`.
pub fn residual_chain(
    ring: &QuotientRing,
    ideal: &IdealHandle,
    plan: &GeneralElementPlan,
) -> Result<ResidualChain> {
    let delta = check_inputs(ring, ideal)?;
    let rdata = ring.hilbert()?;
    let idata = ideal.hilbert()?;
    let mut steps = Vec::with_capacity(plan.elements.len());
    for i in 1..=plan.elements.len() {
        let cut = ring.ideal(plan.elements[..i - 1].to_vec())?;
        let h = cut.colon(ideal)?;
        let (j, _) = cut.saturate(ideal)?;
        let hi = h.sum(ideal)?.hilbert()?;
        steps.push(ResidualStep {
            i,
            equals_saturated: h.equals(&j)?,
            dim: hi.dimension,
            degree: if hi.is_zero_ring { 0 } else { hi.degree },
            residual: h,
        });
    }
    Ok(ResidualChain {
        dim: rdata.dimension,
        e_r: rdata.degree,
        height: rdata.dimension - idata.dimension,
        delta,
        e_r_mod_i: idata.degree,
        steps,
    })
}
