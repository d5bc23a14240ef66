//! Hilbert series, dimension and degree; Hilbert-Samuel multiplicity of an m-primary ideal.

use jmult::hilbert::{hf_bruteforce, hilbert_samuel_bruteforce};
use jmult::ideal::{minors, QuotientRing};
use jmult::parse::parse_polynomial;
use jmult::poly::Polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let s = PolyRing::with_vars(32003, &["x0", "x1", "x2", "x3"])?;
    let r = QuotientRing::polynomial(&s);
    let v = |i| Polynomial::var_by_index(&s, i);
    let twisted = minors(&r, &[vec![v(0), v(1), v(2)], vec![v(1), v(2), v(3)]], 2)?;
    let h = twisted.hilbert()?;
    println!("twisted cubic: dim {}, degree {}", h.dimension, h.degree);
    println!("  numerator      {:?}", h.numerator);
    println!("  HF from series {:?}", h.hilbert_function(6));
    println!("  HF by counting {:?}", hf_bruteforce(&twisted, 6)?);

    // three concurrent lines x^3 + y^3 = 0 in the plane
    let t = PolyRing::with_vars(32003, &["x", "y"])?;
    let curve = QuotientRing::new(&t, vec![parse_polynomial("x^3 + y^3", &t)?])?;
    let i = curve.ideal(vec![
        parse_polynomial("x^2", &t)?,
        parse_polynomial("y^2", &t)?,
    ])?;
    println!(
        "e_I(R) for I = (x^2, y^2), R = k[x,y]/(x^3 + y^3): {}",
        hilbert_samuel_bruteforce(&i, &curve, 6)?
    );
    Ok(())
}
