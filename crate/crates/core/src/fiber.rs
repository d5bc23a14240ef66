//! Special fiber rings, analytic spread, the rank `r` of the fiber map, and dual varieties
//! of hypersurfaces.
//!
//! The fiber ring `k[I_δ]` is presented as the kernel of `z_j ↦ a_j`, computed by
//! elimination. Its degree, compared with the cycle contributions from
//! [`multiplicity_sequence`](crate::multseq::multiplicity_sequence), determines `r`:
//!
//! ```text
//! r · e(k[I_δ]) = e(R)·δ^(d-1) − Σ_{i<s} deg υ_i · δ^(d-1-i) = deg υ_s · δ^(d-1-s)
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{IdealHandle, QuotientRing};
use crate::monomial::MonomialOrder;
use crate::multseq::{delta_power, multiplicity_sequence_agreed, MultSeqReport, Rational};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Note attached to every reduction-number bound.
pub const REDUCTION_BOUND_CAVEAT: &str =
    "upper bound for the reduction number with respect to any minimal reduction; \
     valid in characteristic zero when R is a domain";

/// Note attached to dual-variety reports.
pub const IRREDUCIBILITY_BANNER: &str =
    "f is assumed reduced and irreducible; this is not verified";

fn fresh_prefix(ring: &PolyRing, n: usize) -> String {
    for prefix in ["z", "w", "u", "zz", "fz"] {
        if (1..=n).all(|j| ring.var_index(&format!("{prefix}{j}")).is_none()) {
            return prefix.to_string();
        }
    }
    let mut k = 0;
    loop {
        let prefix = format!("z{k}_");
        if (1..=n).all(|j| ring.var_index(&format!("{prefix}{j}")).is_none()) {
            return prefix;
        }
        k += 1;
    }
}

/// Defining ideal of `k[I_δ]` in fresh variables `z1..zn`, one per nonzero generator of `I`.
pub fn fiber_ideal(ring: &QuotientRing, ideal: &IdealHandle) -> Result<IdealHandle> {
    if !ideal.ring().same_ring(ring) {
        return Err(Error::RingMismatch);
    }
    ideal.common_degree()?;
    let gens = ideal.nonzero_generators()?;
    let ambient = ring.ambient();
    let n = gens.len();
    let prefix = fresh_prefix(ambient, n);
    let znames: Vec<String> = (1..=n).map(|j| format!("{prefix}{j}")).collect();
    let mut names: Vec<String> = ambient.var_names().to_vec();
    names.extend(znames.iter().cloned());
    let ext = PolyRing::new(*ambient.field(), &names, MonomialOrder::DegRevLex)?;
    let embed: Vec<usize> = (0..ambient.nvars()).collect();
    let mut pres = Vec::with_capacity(n + ring.relations().len());
    for (j, a) in gens.iter().enumerate() {
        let z = Polynomial::var_by_index(&ext, ambient.nvars() + j);
        pres.push(&z - &a.map_variables(&ext, &embed));
    }
    for k in ring.relations() {
        pres.push(k.map_variables(&ext, &embed));
    }
    let presentation = QuotientRing::polynomial(&ext).ideal(pres)?;
    let keep: Vec<&str> = znames.iter().map(|s| s.as_str()).collect();
    presentation.eliminate(&keep)
}

/// `ℓ(I)`: the Krull dimension of the fiber ring.
pub fn analytic_spread(ring: &QuotientRing, ideal: &IdealHandle) -> Result<usize> {
    Ok(fiber_ideal(ring, ideal)?.hilbert()?.dimension)
}

/// Two-sided determination of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberVerdict {
    /// `(e(R)·δ^(d-1) − Σ_{i<s} deg υ_i·δ^(d-1-i)) / e(k[I_δ])`.
    pub r_from_balance: Rational,
    /// `deg υ_s · δ^(d-1-s) / e(k[I_δ])`.
    pub r_from_terminal: Rational,
    /// The recursion stopped at step `ℓ(I)`.
    pub spread_matches: bool,
    pub pass: bool,
}

impl FiberVerdict {
    /// `r` when the verdict passes.
    pub fn r(&self) -> Option<u64> {
        self.pass.then(|| *self.r_from_balance.numer() as u64)
    }
}

#[derive(Debug, Clone)]
pub struct FiberReport {
    pub fiber_ideal: IdealHandle,
    pub num_generators: usize,
    /// `s = ℓ(I)`.
    pub spread: usize,
    /// `e(k[I_δ])`.
    pub fiber_degree: u64,
    pub verdict: Option<FiberVerdict>,
}

impl FiberReport {
    pub fn r(&self) -> Option<u64> {
        self.verdict.as_ref().and_then(|v| v.r())
    }
}

/// Fiber ideal, spread and fiber degree of `I`.
pub fn fiber_report(ring: &QuotientRing, ideal: &IdealHandle) -> Result<FiberReport> {
    let fiber = fiber_ideal(ring, ideal)?;
    let h = fiber.hilbert()?;
    Ok(FiberReport {
        num_generators: fiber.ring().ambient().nvars(),
        spread: h.dimension,
        fiber_degree: if h.is_zero_ring { 0 } else { h.degree },
        fiber_ideal: fiber,
        verdict: None,
    })
}

/// Infers `r` from the recursion and the fiber degree; both routes must agree on a positive
/// integer, and the recursion must stop at `ℓ(I)`.
pub fn check_fiber_degree(report: &MultSeqReport, fiber: &FiberReport) -> Result<FiberVerdict> {
    if fiber.fiber_degree == 0 {
        return Err(Error::DegenerateFiber);
    }
    let s = fiber.spread;
    let fdeg = Rational::from_integer(fiber.fiber_degree as i128);
    let mut lower = Rational::from_integer(0);
    for i in 0..s {
        lower += report.weight(i) * Rational::from_integer(report.contribution(i) as i128);
    }
    let total = delta_power(report.delta, report.dim as i64 - 1)
        * Rational::from_integer(report.e_r as i128);
    let r_from_balance = (total - lower) / fdeg;
    let r_from_terminal =
        report.weight(s) * Rational::from_integer(report.contribution(s) as i128) / fdeg;
    let spread_matches = report.s_observed == s;
    let pass = spread_matches
        && report.balance.pass
        && r_from_balance == r_from_terminal
        && r_from_balance.is_integer()
        && *r_from_balance.numer() > 0;
    Ok(FiberVerdict {
        r_from_balance,
        r_from_terminal,
        spread_matches,
        pass,
    })
}

/// `e(k[I_δ])` as an upper bound for reduction numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionBound {
    pub bound: u64,
    pub caveat: &'static str,
}

pub fn reduction_number_bound(fiber: &FiberReport) -> ReductionBound {
    ReductionBound {
        bound: fiber.fiber_degree,
        caveat: REDUCTION_BOUND_CAVEAT,
    }
}

/// One singular correction `deg υ_i · (deg f − 1)^(n-1-i)` of the class formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Correction {
    /// Codimension index `i`.
    pub i: usize,
    pub value: u64,
    pub weight: u64,
    pub weighted: u64,
}

/// Everything computed for the dual variety of a hypersurface `V(f) ⊂ P^n`.
#[derive(Debug, Clone)]
pub struct DualReport {
    pub hypersurface_degree: u32,
    pub ring: QuotientRing,
    pub jacobian: IdealHandle,
    pub multseq: MultSeqReport,
    pub seeds: Vec<u64>,
    pub seeds_agreed: bool,
    pub fiber: FiberReport,
    /// `deg f · (deg f − 1)^(n-1)`.
    pub smooth_term: u64,
    pub corrections: Vec<Correction>,
    /// `δ'`, the degree of the dual variety (the fiber degree).
    pub dual_degree: u64,
    pub r: Option<u64>,
    /// `(smooth_term − Σ corrections) / r` equals `dual_degree`.
    pub plucker_consistent: bool,
    pub banner: &'static str,
}

impl DualReport {
    pub fn total_correction(&self) -> u64 {
        self.corrections.iter().map(|c| c.weighted).sum()
    }
}

/// Runs the full pipeline on the Jacobian ideal of `f` in `R = S/(f)`.
pub fn dual_variety_degree(f: &Polynomial, seed: u64, agree: usize) -> Result<DualReport> {
    let deg = f
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous(f.to_string()))?;
    if deg < 2 {
        return Err(Error::InvalidInput(
            "hypersurface must have degree at least 2".into(),
        ));
    }
    let p = f.ring().field().characteristic() as u64;
    if (deg as u64).is_multiple_of(p) || (deg as u64 - 1).is_multiple_of(p) {
        return Err(Error::InvalidInput(format!(
            "characteristic {p} divides deg f or deg f - 1"
        )));
    }
    let ambient = f.ring().with_order(MonomialOrder::DegRevLex)?;
    let f = f.to_ring(&ambient)?;
    let ring = QuotientRing::new(&ambient, vec![f.clone()])?;
    let partials: Vec<Polynomial> = (0..ambient.nvars())
        .map(|i| f.partial_derivative_index(i))
        .filter(|d| !d.is_zero())
        .collect();
    if partials.is_empty() {
        return Err(Error::InvalidInput("all partial derivatives vanish".into()));
    }
    let jacobian = ring.ideal(partials)?;
    if jacobian.nonzero_generators()?.is_empty() {
        return Err(Error::InvalidInput("Jacobian ideal is zero in R".into()));
    }
    let agreement = multiplicity_sequence_agreed(&ring, &jacobian, seed, agree)?;
    let report = agreement.report;
    let mut fiber = fiber_report(&ring, &jacobian)?;
    let verdict = check_fiber_degree(&report, &fiber)?;
    let r = verdict.r();
    fiber.verdict = Some(verdict);

    let s = fiber.spread;
    let smooth_term = report.e_r * (report.delta as u64).pow(report.dim.saturating_sub(1) as u32);
    let corrections: Vec<Correction> = (report.height.min(s)..s)
        .map(|i| {
            let weight = (report.delta as u64).pow((report.dim - 1 - i) as u32);
            let value = report.contribution(i);
            Correction {
                i,
                value,
                weight,
                weighted: value * weight,
            }
        })
        .collect();
    let total: u64 = corrections.iter().map(|c| c.weighted).sum();
    let plucker_consistent = match r {
        Some(r) => smooth_term >= total && (smooth_term - total) == r * fiber.fiber_degree,
        None => false,
    };
    Ok(DualReport {
        hypersurface_degree: deg,
        ring,
        jacobian,
        seeds: agreement.seeds,
        seeds_agreed: agreement.agreed,
        dual_degree: fiber.fiber_degree,
        multseq: report,
        fiber,
        smooth_term,
        corrections,
        r,
        plucker_consistent,
        banner: IRREDUCIBILITY_BANNER,
    })
}
