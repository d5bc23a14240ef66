//! Problem files and the command implementations behind the `jmult` binary.
//!
//! Every command returns an [`Outcome`] holding the exit code and the text to print, so
//! the same code paths are exercised by tests without spawning processes.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fiber::{self, DualReport, FiberReport, FiberVerdict};
use crate::field::{PrimeField, DEFAULT_CHARACTERISTIC};
use crate::hilbert;
use crate::ideal::{IdealHandle, QuotientRing};
use crate::monomial::MonomialOrder;
use crate::multseq::{multiplicity_sequence_agreed, Agreement, MultSeqReport, Rational};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERDICT: i32 = 2;

/// Degrees compared by `check` between the series and the standard-monomial count.
const CHECK_HF_DEGREE: usize = 8;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    Generators(Vec<String>),
    Jacobian { jacobian_of: String },
}

/// A problem file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    #[serde(rename = "char", default = "default_char")]
    pub characteristic: u64,
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    pub ideal: IdealSpec,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_agree")]
    pub seeds_for_agreement: usize,
}

fn default_char() -> u64 {
    DEFAULT_CHARACTERISTIC as u64
}

fn default_agree() -> usize {
    3
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::InvalidInput(format!(
                "problem file, line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Command-line overrides of the problem file.
#[derive(Debug, Clone, Default)]
pub struct Flags {
    pub seed: Option<u64>,
    pub agree: Option<usize>,
    pub characteristic: Option<u64>,
    pub json: bool,
    pub order: Option<MonomialOrder>,
}

/// A parsed problem: `R = S/K` and `I ⊂ R`.
#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: QuotientRing,
    pub ideal: IdealHandle,
    /// The polynomial named by `jacobian_of`, if any.
    pub hypersurface: Option<Polynomial>,
    pub seed: u64,
    pub agree: usize,
}

fn parse_list(
    texts: &[String],
    ring: &std::sync::Arc<PolyRing>,
    what: &str,
) -> Result<Vec<Polynomial>> {
    texts
        .iter()
        .enumerate()
        .map(|(k, t)| {
            parse_polynomial(t, ring)
                .map_err(|e| Error::InvalidInput(format!("{what}[{k}] `{t}`: {e}")))
        })
        .collect()
}

impl Problem {
    pub fn build(spec: &ProblemSpec, flags: &Flags) -> Result<Self> {
        let field = PrimeField::new(flags.characteristic.unwrap_or(spec.characteristic))?;
        let ambient = PolyRing::new(field, &spec.vars, MonomialOrder::DegRevLex)?;
        let relations = parse_list(&spec.relations, &ambient, "relations")?;
        let ring = QuotientRing::new(&ambient, relations)?;
        let (gens, hypersurface) = match &spec.ideal {
            IdealSpec::Generators(list) => (parse_list(list, &ambient, "ideal")?, None),
            IdealSpec::Jacobian { jacobian_of } => {
                let f = parse_polynomial(jacobian_of, &ambient).map_err(|e| {
                    Error::InvalidInput(format!("jacobian_of `{jacobian_of}`: {e}"))
                })?;
                let partials = (0..ambient.nvars())
                    .map(|i| f.partial_derivative_index(i))
                    .collect();
                (partials, Some(f))
            }
        };
        let ideal = ring.ideal(gens)?;
        Ok(Problem {
            ring,
            ideal,
            hypersurface,
            seed: flags.seed.unwrap_or(spec.seed),
            agree: flags.agree.unwrap_or(spec.seeds_for_agreement).max(1),
        })
    }
}

/// Exit code and output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(stdout: String, stderr: String) -> Self {
        Outcome {
            code: EXIT_VERDICT,
            stdout,
            stderr,
        }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::NonGeneric { .. } | Error::StepOverflow { .. } | Error::DegenerateFiber => {
                EXIT_VERDICT
            }
            _ => EXIT_INPUT,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Gb,
    Hilbert,
    Multseq,
    Fiber,
    Dual,
    Check,
}

/// Loads `path` and runs `command`.
pub fn run(command: Command, path: &Path, flags: &Flags) -> Outcome {
    let spec = match ProblemSpec::from_file(path) {
        Ok(s) => s,
        Err(e) => return Outcome::from_error(&e),
    };
    run_spec(command, &spec, flags)
}

pub fn run_spec(command: Command, spec: &ProblemSpec, flags: &Flags) -> Outcome {
    let result = Problem::build(spec, flags).and_then(|p| match command {
        Command::Gb => cmd_gb(&p, flags),
        Command::Hilbert => cmd_hilbert(&p, flags),
        Command::Multseq => cmd_multseq(&p, flags),
        Command::Fiber => cmd_fiber(&p, flags),
        Command::Dual => cmd_dual(&p, flags),
        Command::Check => cmd_check(&p, flags),
    });
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

/// Integers stay numbers; proper fractions become `"p/q"` strings.
pub fn rational_json(q: &Rational) -> Value {
    if q.is_integer() {
        match i64::try_from(*q.numer()) {
            Ok(n) => Value::from(n),
            Err(_) => Value::from(q.numer().to_string()),
        }
    } else {
        Value::from(format!("{}/{}", q.numer(), q.denom()))
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct GbJson {
    order: String,
    basis: Vec<String>,
    leading_monomials: Vec<String>,
}

pub fn cmd_gb(p: &Problem, flags: &Flags) -> Result<Outcome> {
    let order = flags.order.unwrap_or(MonomialOrder::DegRevLex);
    let gb = p.ideal.groebner(order)?;
    let ambient = gb.ring().clone();
    let basis: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
    let leading: Vec<String> = gb
        .leading_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(&ambient, m, 1).to_string())
        .collect();
    if flags.json {
        return Ok(Outcome::ok(to_json(&GbJson {
            order: order.name(),
            basis,
            leading_monomials: leading,
        })));
    }
    let mut out = format!(
        "reduced Groebner basis ({}), {} elements\n",
        order.name(),
        basis.len()
    );
    for g in &basis {
        let _ = writeln!(out, "  {g}");
    }
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct HilbertJson {
    dim: usize,
    degree: u64,
    is_zero_ring: bool,
    numerator: Vec<i64>,
    hilbert_function: Vec<u64>,
}

pub fn cmd_hilbert(p: &Problem, flags: &Flags) -> Result<Outcome> {
    let h = p.ideal.hilbert()?;
    let hf = h.hilbert_function(10);
    if flags.json {
        return Ok(Outcome::ok(to_json(&HilbertJson {
            dim: h.dimension,
            degree: h.degree,
            is_zero_ring: h.is_zero_ring,
            numerator: h.numerator,
            hilbert_function: hf,
        })));
    }
    let mut out = String::new();
    if h.is_zero_ring {
        out.push_str("zero ring\n");
    } else {
        let _ = writeln!(out, "dim {}, degree {}", h.dimension, h.degree);
    }
    let _ = writeln!(out, "numerator {}", series_string(&h.numerator));
    let _ = writeln!(out, "HF(0..10) {hf:?}");
    Ok(Outcome::ok(out))
}

fn series_string(c: &[i64]) -> String {
    let mut s = String::new();
    for (k, &a) in c.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let sign = if a < 0 {
            "-"
        } else if s.is_empty() {
            ""
        } else {
            "+"
        };
        if !s.is_empty() {
            s.push(' ');
        }
        let mag = a.unsigned_abs();
        let body = match (k, mag) {
            (0, m) => m.to_string(),
            (1, 1) => "t".into(),
            (1, m) => format!("{m}*t"),
            (k, 1) => format!("t^{k}"),
            (k, m) => format!("{m}*t^{k}"),
        };
        if s.is_empty() {
            let _ = write!(s, "{sign}{body}");
        } else {
            let _ = write!(s, "{sign} {body}");
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[derive(Serialize)]
struct ContributionJson {
    i: usize,
    dim_before: usize,
    value: u64,
}

#[derive(Serialize)]
struct BalanceJson {
    lhs: Value,
    rhs: Value,
    pass: bool,
}

#[derive(Serialize)]
struct VerdictJson {
    r_from_balance: Value,
    r_from_terminal: Value,
    spread_matches: bool,
    pass: bool,
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    pass: bool,
    detail: String,
}

/// Machine-readable report. Keys that do not apply to a command are `null`.
#[derive(Serialize)]
struct ReportJson {
    #[serde(rename = "e_R")]
    e_r: u64,
    dim: usize,
    #[serde(rename = "ht_I")]
    ht_i: usize,
    delta: u32,
    spread: Option<usize>,
    contributions: Vec<ContributionJson>,
    balance: BalanceJson,
    fiber_degree: Option<u64>,
    r: Option<Value>,
    dual_degree: Option<u64>,
    reduction_bound: Option<u64>,
    seeds_agreed: bool,
    seed: u64,
    seeds: Vec<u64>,
    c_scale: Vec<Value>,
    fiber_ideal: Option<Vec<String>>,
    fiber_check: Option<VerdictJson>,
    smooth_term: Option<u64>,
    corrections: Option<Vec<fiber::Correction>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<CheckJson>>,
}

impl ReportJson {
    fn new(report: &MultSeqReport, agreement_seeds: &[u64], agreed: bool) -> Self {
        ReportJson {
            e_r: report.e_r,
            dim: report.dim,
            ht_i: report.height,
            delta: report.delta,
            spread: None,
            contributions: report
                .steps
                .iter()
                .map(|s| ContributionJson {
                    i: s.i,
                    dim_before: s.dim_before,
                    value: s.value,
                })
                .collect(),
            balance: BalanceJson {
                lhs: rational_json(&report.balance.lhs),
                rhs: rational_json(&report.balance.rhs),
                pass: report.balance.pass,
            },
            fiber_degree: None,
            r: None,
            dual_degree: None,
            reduction_bound: None,
            seeds_agreed: agreed,
            seed: report.seed,
            seeds: agreement_seeds.to_vec(),
            c_scale: report.c_scale().iter().map(rational_json).collect(),
            fiber_ideal: None,
            fiber_check: None,
            smooth_term: None,
            corrections: None,
            notes: Vec::new(),
            checks: None,
        }
    }

    fn with_fiber(mut self, f: &FiberReport) -> Self {
        self.spread = Some(f.spread);
        self.fiber_degree = Some(f.fiber_degree);
        self.reduction_bound = Some(fiber::reduction_number_bound(f).bound);
        self.fiber_ideal = Some(
            f.fiber_ideal
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect(),
        );
        if let Some(v) = &f.verdict {
            self.r = Some(rational_json(&v.r_from_balance));
            self.fiber_check = Some(verdict_json(v));
        }
        self.notes.push(fiber::REDUCTION_BOUND_CAVEAT);
        self
    }
}

fn verdict_json(v: &FiberVerdict) -> VerdictJson {
    VerdictJson {
        r_from_balance: rational_json(&v.r_from_balance),
        r_from_terminal: rational_json(&v.r_from_terminal),
        spread_matches: v.spread_matches,
        pass: v.pass,
    }
}

fn agree(p: &Problem) -> Result<Agreement> {
    multiplicity_sequence_agreed(&p.ring, &p.ideal, p.seed, p.agree)
}

fn seeds_string(seeds: &[u64]) -> String {
    seeds
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn multseq_text(report: &MultSeqReport, seeds: &[u64]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "dim R = {}, e(R) = {}, ht I = {}, delta = {}",
        report.dim, report.e_r, report.height, report.delta
    );
    let _ = writeln!(out, "seeds {} agree", seeds_string(seeds));
    for s in &report.steps {
        let _ = write!(
            out,
            "υ_{} = {:<6} dim T_{} = {}",
            s.i, s.value, s.i, s.dim_before
        );
        if s.terminal {
            out.push_str("  (terminal)");
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "balance {} = {}{}",
        report.balance.lhs,
        report.balance.rhs,
        if report.balance.pass { "" } else { "  FAILED" }
    );
    out
}

fn balance_failure(report: &MultSeqReport) -> String {
    format!(
        "balance identity failed for seed {}: {} != {}\n",
        report.seed, report.balance.lhs, report.balance.rhs
    )
}

pub fn cmd_multseq(p: &Problem, flags: &Flags) -> Result<Outcome> {
    let a = agree(p)?;
    let report = &a.report;
    let stdout = if flags.json {
        to_json(&ReportJson::new(report, &a.seeds, a.agreed))
    } else {
        multseq_text(report, &a.seeds)
    };
    if !report.balance.pass {
        return Ok(Outcome::verdict(stdout, balance_failure(report)));
    }
    Ok(Outcome::ok(stdout))
}

fn fiber_with_verdict(p: &Problem, report: &MultSeqReport) -> Result<FiberReport> {
    let mut f = fiber::fiber_report(&p.ring, &p.ideal)?;
    if report.height >= 1 {
        f.verdict = Some(fiber::check_fiber_degree(report, &f)?);
    }
    Ok(f)
}

fn fiber_text(f: &FiberReport, seed: u64) -> (String, Option<String>) {
    let mut out = String::new();
    let _ = writeln!(out, "fiber ideal in {} variables:", f.num_generators);
    let gens = f.fiber_ideal.generators();
    if gens.iter().all(|g| g.is_zero()) {
        out.push_str("  0\n");
    }
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let _ = writeln!(out, "  {g}");
    }
    let _ = writeln!(out, "analytic spread {}", f.spread);
    let _ = writeln!(out, "fiber degree {}", f.fiber_degree);
    let mut failure = None;
    match &f.verdict {
        Some(v) => {
            let _ = writeln!(
                out,
                "r from balance {}, r from terminal step {}",
                v.r_from_balance, v.r_from_terminal
            );
            if v.pass {
                let _ = writeln!(out, "r = {}", v.r_from_balance);
            } else {
                out.push_str("r check FAILED\n");
                failure = Some(format!(
                    "fiber degree check failed for seed {seed}: r from balance {} vs r from terminal step {} (spread matches: {})\n",
                    v.r_from_balance, v.r_from_terminal, v.spread_matches
                ));
            }
        }
        None => out.push_str("r not determined (ht I = 0)\n"),
    }
    let b = fiber::reduction_number_bound(f);
    let _ = writeln!(out, "reduction number bound {} ({})", b.bound, b.caveat);
    (out, failure)
}

pub fn cmd_fiber(p: &Problem, flags: &Flags) -> Result<Outcome> {
    let a = agree(p)?;
    let f = fiber_with_verdict(p, &a.report)?;
    let failed = f.verdict.as_ref().is_some_and(|v| !v.pass);
    let (text, failure) = fiber_text(&f, a.report.seed);
    let stdout = if flags.json {
        to_json(&ReportJson::new(&a.report, &a.seeds, a.agreed).with_fiber(&f))
    } else {
        text
    };
    if failed {
        return Ok(Outcome::verdict(stdout, failure.unwrap_or_default()));
    }
    Ok(Outcome::ok(stdout))
}

fn dual_text(d: &DualReport) -> String {
    let m = &d.multseq;
    let n = m.dim;
    let deg = d.hypersurface_degree;
    let mut out = String::new();
    let _ = writeln!(out, "hypersurface of degree {deg} in P^{n} ({})", d.banner);
    let _ = writeln!(out, "seeds {} agree", seeds_string(&d.seeds));
    let _ = writeln!(
        out,
        "smooth term     {}·{}^{} = {}",
        deg,
        deg - 1,
        n - 1,
        d.smooth_term
    );
    for c in &d.corrections {
        let _ = writeln!(
            out,
            "codim {:<9} υ_{}·{}^{} = {}·{} = {}",
            c.i,
            c.i,
            deg - 1,
            n - 1 - c.i,
            c.value,
            c.weight,
            c.weighted
        );
    }
    if d.corrections.is_empty() {
        out.push_str("no corrections\n");
    }
    let _ = writeln!(
        out,
        "terminal        υ_{} = {}",
        d.fiber.spread,
        m.contribution(d.fiber.spread)
    );
    match d.r {
        Some(r) => {
            let mut line = format!("{}·{}^{}", deg, deg - 1, n - 1);
            for c in &d.corrections {
                let _ = write!(line, " - {}", c.weighted);
            }
            if r == 1 {
                let _ = writeln!(out, "r = 1\nδ' = {line} = {}", d.dual_degree);
            } else {
                let _ = writeln!(out, "r = {r}\nδ' = ({line}) / {r} = {}", d.dual_degree);
            }
        }
        None => {
            let _ = writeln!(out, "r not determined; fiber degree {}", d.dual_degree);
        }
    }
    out
}

pub fn cmd_dual(p: &Problem, flags: &Flags) -> Result<Outcome> {
    let f = p.hypersurface.as_ref().ok_or_else(|| {
        Error::InvalidInput("dual needs an ideal given as {\"jacobian_of\": ...}".into())
    })?;
    let d = fiber::dual_variety_degree(f, p.seed, p.agree)?;
    let stdout = if flags.json {
        let mut j = ReportJson::new(&d.multseq, &d.seeds, d.seeds_agreed).with_fiber(&d.fiber);
        j.dual_degree = Some(d.dual_degree);
        j.smooth_term = Some(d.smooth_term);
        j.corrections = Some(d.corrections.clone());
        j.notes.push(d.banner);
        to_json(&j)
    } else {
        dual_text(&d)
    };
    if !d.plucker_consistent {
        let v = d.fiber.verdict.as_ref();
        let stderr = format!(
            "class formula inconsistent for seed {}: smooth term {} - corrections {} vs r {} · δ' {}{}\n",
            d.multseq.seed,
            d.smooth_term,
            d.total_correction(),
            v.map_or("?".to_string(), |v| v.r_from_balance.to_string()),
            d.dual_degree,
            v.map_or(String::new(), |v| format!(" (r from terminal step {})", v.r_from_terminal)),
        );
        return Ok(Outcome::verdict(stdout, stderr));
    }
    Ok(Outcome::ok(stdout))
}

/// Runs every available consistency check on the problem.
pub fn cmd_check(p: &Problem, flags: &Flags) -> Result<Outcome> {
    let mut checks = Vec::new();
    let a = agree(p)?;
    let report = &a.report;
    checks.push(CheckJson {
        name: "seed agreement",
        pass: a.agreed,
        detail: format!("seeds {}", seeds_string(&a.seeds)),
    });
    checks.push(CheckJson {
        name: "balance",
        pass: report.balance.pass,
        detail: format!("{} = {}", report.balance.lhs, report.balance.rhs),
    });

    let gb = p.ideal.groebner_degrevlex()?;
    let nvars = p.ring.ambient().nvars();
    let series = p.ideal.hilbert()?.hilbert_function(CHECK_HF_DEGREE);
    let counted =
        hilbert::count_standard_monomials(nvars, &gb.leading_monomials(), CHECK_HF_DEGREE);
    checks.push(CheckJson {
        name: "hilbert series vs standard monomials",
        pass: series == counted,
        detail: format!("degrees 0..={CHECK_HF_DEGREE}"),
    });
    let gb_ok = gb.satisfies_buchberger_criterion();
    checks.push(CheckJson {
        name: "buchberger criterion",
        pass: gb_ok,
        detail: format!("{} basis elements", gb.len()),
    });

    let f = fiber_with_verdict(p, report)?;
    checks.push(CheckJson {
        name: "ht I <= spread <= dim R",
        pass: report.height <= f.spread && f.spread <= report.dim,
        detail: format!("{} <= {} <= {}", report.height, f.spread, report.dim),
    });
    checks.push(CheckJson {
        name: "spread = terminal index",
        pass: f.spread == report.s_observed,
        detail: format!("{} vs {}", f.spread, report.s_observed),
    });
    if let Some(v) = &f.verdict {
        checks.push(CheckJson {
            name: "r two-sided",
            pass: v.pass,
            detail: format!("{} vs {}", v.r_from_balance, v.r_from_terminal),
        });
    }

    let all = checks.iter().all(|c| c.pass);
    let stdout = if flags.json {
        let mut j = ReportJson::new(report, &a.seeds, a.agreed).with_fiber(&f);
        j.checks = Some(checks);
        to_json(&j)
    } else {
        let mut out = multseq_text(report, &a.seeds);
        for c in &checks {
            let _ = writeln!(
                out,
                "{} {}: {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        out
    };
    if !all {
        return Ok(Outcome::verdict(
            stdout,
            format!("checks failed for seed {}\n", report.seed),
        ));
    }
    Ok(Outcome::ok(stdout))
}
