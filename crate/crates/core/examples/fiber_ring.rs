//! Special fiber rings, analytic spread and the rank r.

use jmult::fiber::{check_fiber_degree, fiber_report, reduction_number_bound};
use jmult::ideal::QuotientRing;
use jmult::multseq::multiplicity_sequence;
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let s = PolyRing::with_vars(32003, &["x", "y", "z"])?;
    let r = QuotientRing::polynomial(&s);
    for gens in [
        &["x^2", "x*y", "y^2"][..],
        &["x*y", "x*z", "y*z"][..],
        &["x^2", "y^2", "z^2"][..],
    ] {
        let i = r.ideal(
            gens.iter()
                .map(|g| parse_polynomial(g, &s))
                .collect::<Result<_, _>>()?,
        )?;
        let fiber = fiber_report(&r, &i)?;
        let rep = multiplicity_sequence(&r, &i, 0)?;
        let verdict = check_fiber_degree(&rep, &fiber)?;
        println!("I = ({})", gens.join(", "));
        println!("  fiber ideal   {:?}", fiber.fiber_ideal.generators());
        println!(
            "  spread {}, fiber degree {}, r = {}",
            fiber.spread, fiber.fiber_degree, verdict.r_from_balance
        );
        println!(
            "  reduction number <= {}",
            reduction_number_bound(&fiber).bound
        );
    }
    Ok(())
}
