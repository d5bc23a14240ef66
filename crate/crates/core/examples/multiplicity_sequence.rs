//! Cycle contributions of the Jacobian ideal of the cubic surface y1^2 y3 = y2^2 y0.

use jmult::ideal::QuotientRing;
use jmult::multseq::{multiplicity_sequence, multiplicity_sequence_agreed};
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let s = PolyRing::with_vars(32003, &["y0", "y1", "y2", "y3"])?;
    let f = parse_polynomial("y1^2*y3 - y2^2*y0", &s)?;
    let r = QuotientRing::new(&s, vec![f.clone()])?;
    let jac = r.ideal((0..4).map(|i| f.partial_derivative_index(i)).collect())?;

    let rep = multiplicity_sequence(&r, &jac, 0)?;
    println!(
        "d = {}, e(R) = {}, ht I = {}, delta = {}",
        rep.dim, rep.e_r, rep.height, rep.delta
    );
    for step in &rep.steps {
        println!(
            "  υ_{} = {}  (dim T_{} = {})",
            step.i, step.value, step.i, step.dim_before
        );
    }
    println!(
        "balance {} = {}: {}",
        rep.balance.lhs, rep.balance.rhs, rep.balance.pass
    );
    let c: Vec<String> = rep.c_scale().iter().map(|q| q.to_string()).collect();
    println!("Veronese scale: [{}]", c.join(", "));

    let agreed = multiplicity_sequence_agreed(&r, &jac, 100, 3)?;
    println!(
        "seeds {:?} agree: {:?}",
        agreed.seeds,
        agreed.report.contributions()
    );
    Ok(())
}
