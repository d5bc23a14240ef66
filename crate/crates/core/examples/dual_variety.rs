//! Degrees of dual varieties of hypersurfaces from the class formula.

use jmult::fiber::dual_variety_degree;
use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let surfaces = [
        (&["y0", "y1", "y2", "y3"][..], "y1^2*y3 - y2^2*y0"),
        (&["y0", "y1", "y2", "y3"][..], "y0^3 + y1^3 + y2^3 + y3^3"),
        (&["y0", "y1", "y2"][..], "y1^2*y2 - y0^3"),
        (&["y0", "y1", "y2"][..], "y1^2*y2 - y0^3 - y0^2*y2"),
    ];
    for (vars, f) in surfaces {
        let s = PolyRing::with_vars(32003, vars)?;
        let d = dual_variety_degree(&parse_polynomial(f, &s)?, 0, 3)?;
        let corrections: Vec<String> = d
            .corrections
            .iter()
            .map(|c| c.weighted.to_string())
            .collect();
        println!(
            "{f}: smooth term {}, corrections [{}], r = {:?}, dual degree {}",
            d.smooth_term,
            corrections.join(", "),
            d.r,
            d.dual_degree
        );
    }
    Ok(())
}
