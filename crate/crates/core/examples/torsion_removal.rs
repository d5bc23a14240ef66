//! Contributions are unchanged after dividing out the I-torsion 0 :_R <I>.

use jmult::ideal::QuotientRing;
use jmult::multseq::{multiplicity_sequence, remove_torsion};
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    // two planes x = 0 and y = 0 with an embedded line along x = z = 0
    let s = PolyRing::with_vars(32003, &["x", "y", "z"])?;
    let r = QuotientRing::new(
        &s,
        vec![
            parse_polynomial("x^2*y", &s)?,
            parse_polynomial("x*y*z", &s)?,
        ],
    )?;
    let i = r.ideal(vec![parse_polynomial("x", &s)?, parse_polynomial("z", &s)?])?;
    let (torsion, _) = r.zero_ideal().saturate(&i)?;
    println!("0 : <I> = {:?}", torsion.groebner_degrevlex()?.elements());

    let (rbar, ibar) = remove_torsion(&r, &i)?;
    let before = multiplicity_sequence(&r, &i, 0)?;
    let after = multiplicity_sequence(&rbar, &ibar, 0)?;
    println!(
        "R:           e = {}, contributions {:?}",
        before.e_r,
        before.contributions()
    );
    println!(
        "R/(0 : <I>): e = {}, contributions {:?}",
        after.e_r,
        after.contributions()
    );
    Ok(())
}
