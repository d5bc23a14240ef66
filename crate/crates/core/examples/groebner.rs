//! Reduced Groebner bases, normal forms and ideal membership.

use jmult::groebner::{groebner_basis, ideal_membership, normal_form};
use jmult::monomial::MonomialOrder;
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let s = PolyRing::with_vars(32003, &["x", "y", "z"])?;
    let p = |t: &str| parse_polynomial(t, &s);
    let gens = vec![p("x^2 - y")?, p("x*y - z")?];

    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        let gb = groebner_basis(&s, &gens, order)?;
        println!("{} basis ({} elements):", order.name(), gb.len());
        for g in gb.elements() {
            println!("  {g}");
        }
        println!(
            "  Buchberger criterion holds: {}",
            gb.satisfies_buchberger_criterion()
        );
    }

    let gb = groebner_basis(&s, &gens, MonomialOrder::DegRevLex)?;
    let f = p("x^3 + y^2")?;
    println!("normal form of {f}: {}", normal_form(&f, &gb)?);
    println!(
        "y^2 - x*z in the ideal: {}",
        ideal_membership(&p("y^2 - x*z")?, &gens)?
    );
    Ok(())
}
