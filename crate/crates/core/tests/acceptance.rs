//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use common::oracle::{self, Order};
use common::{Case, CORPUS, M_PRIMARY, P, TORSION_CORPUS};
use jmult::cli::{self, Flags};
use jmult::fiber::{check_fiber_degree, dual_variety_degree, fiber_report};
use jmult::groebner::GroebnerBasis;
use jmult::hilbert::hilbert_samuel_bruteforce;
use jmult::monomial::MonomialOrder;
use jmult::multseq::{multiplicity_sequence, remove_torsion};
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn problem(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("problems")
        .join(name)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let flags = Flags {
        json: true,
        ..Flags::default()
    };
    let out = cli::run(cli::Command::Dual, &problem("example_cubic.json"), &flags);
    ensure(out.code == 0, format!("exit {}: {}", out.code, out.stderr))?;
    let v: serde_json::Value = serde_json::from_str(&out.stdout).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(
        v["dual_degree"] == 3,
        format!("dual_degree {}", v["dual_degree"]),
    )?;
    ensure(v["r"] == 1, format!("r {}", v["r"]))?;
    let corr: Vec<(u64, u64, u64)> = v["corrections"]
        .as_array()
        .ok_or("no corrections")?
        .iter()
        .map(|c| {
            (
                c["i"].as_u64().unwrap(),
                c["value"].as_u64().unwrap(),
                c["weighted"].as_u64().unwrap(),
            )
        })
        .collect();
    ensure(
        corr == vec![(1, 2, 4), (2, 5, 5)],
        format!("corrections {corr:?}"),
    )?;
    let smooth = v["smooth_term"].as_u64().ok_or("no smooth term")?;
    ensure(smooth == 3 * 2 * 2, format!("smooth term {smooth}"))?;
    ensure(
        smooth - 2 * 2 - (2 + 2 + 1) == 3,
        "3·2^2 - 2·2 - (2+2+1) != 3",
    )?;
    ensure(
        elapsed < Duration::from_secs(30),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "δ' = 3·2^2 - 2·2 - 5 = 3, r = 1, {:.2}s",
        elapsed.as_secs_f64()
    ))
}

fn balance_suite() -> Outcome {
    let mut runs = 0;
    for case in CORPUS {
        let (r, i) = case.build();
        let e_r = r.degree().map_err(err)? as u128;
        for seed in 0..3 {
            let rep = multiplicity_sequence(&r, &i, seed).map_err(err)?;
            let (d, delta) = (rep.dim as u32, rep.delta as u128);
            let lhs: u128 = rep
                .steps
                .iter()
                .map(|s| s.value as u128 * delta.pow(d - s.i as u32))
                .sum();
            ensure(
                lhs == e_r * delta.pow(d),
                format!("{} seed {seed}: {lhs} != {}", case.name, e_r * delta.pow(d)),
            )?;
            runs += 1;
        }
    }
    ensure(CORPUS.len() >= 20, "corpus too small")?;
    Ok(format!(
        "{} ideals x 3 seeds = {runs} exact balances",
        CORPUS.len()
    ))
}

fn m_primary() -> Outcome {
    let mut linear = 0;
    for case in M_PRIMARY {
        let (r, i) = case.build();
        let rep = multiplicity_sequence(&r, &i, 0).map_err(err)?;
        let e = hilbert_samuel_bruteforce(&i, &r, rep.dim + 5).map_err(err)?;
        let terminal = rep.contribution(rep.dim);
        ensure(
            rep.s_observed == rep.dim && terminal == e,
            format!("{}: υ_d = {terminal}, e_I(R) = {e}", case.name),
        )?;
        if rep.delta == 1 {
            linear += 1;
        }
    }
    ensure(M_PRIMARY.len() >= 10, "too few ideals")?;
    Ok(format!(
        "{} ideals ({linear} with δ = 1), terminal contribution = e_I(R)",
        M_PRIMARY.len()
    ))
}

fn smooth_plucker() -> Outcome {
    let cases: [(&[&str], &str, u64); 4] = [
        (&["y0", "y1", "y2"], "y0*y2 - y1^2", 2),
        (&["y0", "y1", "y2", "y3"], "y0*y1 - y2*y3", 2),
        (&["y0", "y1", "y2"], "y0^3 + y1^3 + y2^3", 6),
        (&["y0", "y1", "y2", "y3"], "y0^3 + y1^3 + y2^3 + y3^3", 12),
    ];
    let mut seen = Vec::new();
    for (vars, f, expect) in cases {
        let s = PolyRing::with_vars(P, vars).map_err(err)?;
        let f = parse_polynomial(f, &s).map_err(err)?;
        let d = dual_variety_degree(&f, 0, 3).map_err(err)?;
        let deg = d.hypersurface_degree as u64;
        let n = vars.len() as u32 - 1;
        let formula = deg * (deg - 1).pow(n - 1);
        ensure(
            d.corrections.is_empty(),
            format!("{f}: corrections {:?}", d.corrections),
        )?;
        ensure(
            d.dual_degree == formula && formula == expect,
            format!("{f}: δ' = {}, expected {expect}", d.dual_degree),
        )?;
        seen.push(d.dual_degree.to_string());
    }
    Ok(format!("δ' = {} with no corrections", seen.join(", ")))
}

fn small(case: &Case) -> bool {
    let gens = case.all_generators();
    case.vars.len() <= 4
        && gens.len() <= 4
        && gens.iter().all(|g| g.total_degree().unwrap_or(0) <= 3)
}

fn groebner_oracle() -> Outcome {
    let mut n = 0;
    for case in CORPUS
        .iter()
        .chain(TORSION_CORPUS)
        .chain(M_PRIMARY)
        .filter(|c| small(c))
    {
        let gens = case.all_generators();
        let ring = case.ambient();
        let ogens: Vec<_> = gens.iter().map(oracle::from_poly).collect();
        for (order, oorder) in [
            (MonomialOrder::DegRevLex, Order::DegRevLex),
            (MonomialOrder::Lex, Order::Lex),
        ] {
            let gb = GroebnerBasis::compute(&ring, &gens, order).map_err(err)?;
            let mut leads: Vec<Vec<u32>> = gb
                .leading_monomials()
                .iter()
                .map(|m| m.exponents().to_vec())
                .collect();
            leads.sort();
            let naive = oracle::minimal_leading(oorder, &oracle::naive_groebner(oorder, &ogens, P));
            ensure(leads == naive, format!("{} under {order:?}", case.name))?;
            n += 1;
        }
    }
    Ok(format!(
        "{n} (ideal, order) pairs with identical leading ideals"
    ))
}

fn hilbert_oracle() -> Outcome {
    let mut n = 0;
    for case in CORPUS.iter().chain(TORSION_CORPUS).chain(M_PRIMARY) {
        let (_, i) = case.build();
        let series = i.hilbert().map_err(err)?.hilbert_function(8);
        let ogens: Vec<_> = case
            .all_generators()
            .iter()
            .map(oracle::from_poly)
            .collect();
        let leads = oracle::minimal_leading(
            Order::DegRevLex,
            &oracle::naive_groebner(Order::DegRevLex, &ogens, P),
        );
        let counted = oracle::standard_monomial_counts(case.vars.len(), &leads, 8);
        ensure(
            series == counted,
            format!("{}: {series:?} vs {counted:?}", case.name),
        )?;
        n += 1;
    }
    Ok(format!("{n} ideals agree in degrees 0..=8"))
}

fn two_sided_r() -> Outcome {
    let mut n = 0;
    for case in CORPUS.iter().chain(TORSION_CORPUS).filter(|c| c.reduced) {
        let (r, i) = case.build();
        let rep = multiplicity_sequence(&r, &i, 0).map_err(err)?;
        if rep.height == 0 {
            continue;
        }
        let fib = fiber_report(&r, &i).map_err(err)?;
        let v = check_fiber_degree(&rep, &fib).map_err(err)?;
        ensure(
            v.r_from_balance == v.r_from_terminal && v.pass,
            format!(
                "{}: r {} vs {}",
                case.name, v.r_from_balance, v.r_from_terminal
            ),
        )?;
        n += 1;
    }
    Ok(format!("{n} inputs with equal positive integral r"))
}

fn torsion_invariance() -> Outcome {
    for case in TORSION_CORPUS {
        let (r, i) = case.build();
        let (torsion, _) = r.zero_ideal().saturate(&i).map_err(err)?;
        ensure(
            !torsion.is_zero().map_err(err)?,
            format!("{}: no torsion", case.name),
        )?;
        let (rbar, ibar) = remove_torsion(&r, &i).map_err(err)?;
        for seed in 0..3 {
            let a = multiplicity_sequence(&r, &i, seed)
                .map_err(err)?
                .contributions();
            let b = multiplicity_sequence(&rbar, &ibar, seed)
                .map_err(err)?
                .contributions();
            ensure(
                a.get(1..) == b.get(1..),
                format!("{} seed {seed}: {a:?} vs {b:?}", case.name),
            )?;
        }
    }
    ensure(TORSION_CORPUS.len() >= 5, "too few ideals")?;
    Ok(format!(
        "{} ideals, contributions for i >= 1 unchanged",
        TORSION_CORPUS.len()
    ))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_jmult");
    let mut n = 0;
    for (cmd, file) in [
        ("dual", "example_cubic.json"),
        ("check", "example_cubic.json"),
        ("fiber", "cuspidal_cubic.json"),
        ("multseq", "twisted_cubic.json"),
        ("gb", "twisted_cubic.json"),
    ] {
        let path = problem(file);
        let run = || {
            Command::new(bin)
                .args([cmd, "--json", path.to_str().unwrap()])
                .output()
        };
        let (a, b) = (run().map_err(err)?, run().map_err(err)?);
        ensure(a.status.success(), format!("{cmd} {file} failed"))?;
        ensure(
            a.stdout == b.stdout,
            format!("{cmd} {file} differs between runs"),
        )?;
        n += 1;
    }
    Ok(format!("{n} commands byte-identical across two runs"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("cubic surface dual degree", worked_example),
        ("balance identity suite", balance_suite),
        ("m-primary equivalence", m_primary),
        ("smooth Plucker law", smooth_plucker),
        ("Groebner oracle equivalence", groebner_oracle),
        ("Hilbert oracle equivalence", hilbert_oracle),
        ("two-sided r", two_sided_r),
        ("torsion-free invariance", torsion_invariance),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
