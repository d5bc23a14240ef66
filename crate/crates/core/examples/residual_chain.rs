//! The residual ladder H_{i-1} = (x_1, ..., x_{i-1}) : I next to the saturated recursion.

use jmult::ideal::QuotientRing;
use jmult::multseq::{general_elements, multiplicity_sequence, residual_chain};
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let s = PolyRing::with_vars(32003, &["x0", "x1", "x2", "x3"])?;
    let r = QuotientRing::polynomial(&s);
    let twisted = r.ideal(
        ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]
            .iter()
            .map(|g| parse_polynomial(g, &s))
            .collect::<Result<_, _>>()?,
    )?;
    let rep = multiplicity_sequence(&r, &twisted, 0)?;
    let plan = general_elements(&twisted, rep.s_observed, 0)?;
    let chain = residual_chain(&r, &twisted, &plan)?;
    for step in &chain.steps {
        println!(
            "H_{}: dim R/(H+I) = {}, e = {}, equals saturated colon: {}",
            step.i - 1,
            step.dim,
            step.degree,
            step.equals_saturated
        );
    }
    println!(
        "weighted total {} (balances: {})",
        chain.weighted_total(),
        chain.balances()
    );
    println!(
        "recursion contributions {:?}, disagreements {:?}",
        rep.contributions(),
        chain.disagreements(&rep)
    );

    // a ring where the plain colon keeps an embedded piece
    let t = PolyRing::with_vars(32003, &["x", "y", "z"])?;
    let q = QuotientRing::new(&t, vec![parse_polynomial("x^2*y", &t)?])?;
    let i = q.ideal(vec![parse_polynomial("x", &t)?])?;
    let chain = residual_chain(&q, &i, &general_elements(&i, 2, 0)?)?;
    println!(
        "k[x,y,z]/(x^2 y), I = (x): ladder diverges from saturation: {}",
        chain.diverges()
    );
    Ok(())
}
