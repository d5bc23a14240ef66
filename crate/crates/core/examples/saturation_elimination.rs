//! Colon ideals, saturation and elimination.

use jmult::ideal::QuotientRing;
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let s = PolyRing::with_vars(32003, &["x", "y"])?;
    let r = QuotientRing::polynomial(&s);
    let ideal = |gens: &[&str]| {
        r.ideal(
            gens.iter()
                .map(|g| parse_polynomial(g, &s))
                .collect::<Result<_, _>>()?,
        )
    };

    let i = ideal(&["x^2", "x*y"])?;
    let x = ideal(&["x"])?;
    println!(
        "(x^2, xy) : (x)   = {:?}",
        i.colon(&x)?.groebner_degrevlex()?.elements()
    );
    let (sat, k) = ideal(&["x^2*y", "x*y^2"])?.saturate(&ideal(&["x", "y"])?)?;
    println!(
        "(x^2 y, x y^2) : <m> = {:?} after {k} steps",
        sat.groebner_degrevlex()?.elements()
    );

    // the image of P^1 under the degree-2 Veronese map
    let t = PolyRing::with_vars(32003, &["x", "y", "z1", "z2", "z3"])?;
    let graph = QuotientRing::polynomial(&t).ideal(
        ["z1 - x^2", "z2 - x*y", "z3 - y^2"]
            .iter()
            .map(|g| parse_polynomial(g, &t))
            .collect::<Result<_, _>>()?,
    )?;
    let image = graph.eliminate(&["z1", "z2", "z3"])?;
    println!(
        "eliminate x, y:      {:?}",
        image.groebner_degrevlex()?.elements()
    );
    Ok(())
}
