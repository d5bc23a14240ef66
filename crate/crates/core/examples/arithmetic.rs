//! Parsing, arithmetic and derivatives in F_p[x, y, z].

use jmult::parse::parse_polynomial;
use jmult::ring::PolyRing;

fn main() -> jmult::error::Result<()> {
    let s = PolyRing::with_vars(32003, &["x", "y", "z"])?;
    let f = parse_polynomial("x^2*y - 3*x*z + 1", &s)?;
    let g = parse_polynomial("x - y", &s)?;

    println!("f         = {f}");
    println!("g         = {g}");
    println!("f + g     = {}", &f + &g);
    println!("f * g     = {}", &f * &g);
    println!("g^3       = {}", g.try_pow(3)?);
    println!("df/dx     = {}", f.partial_derivative("x")?);
    println!("(f*g)/g   = {}", (&f * &g).div_exact(&g).expect("exact"));
    println!("32002     = {} in F_32003", parse_polynomial("32002", &s)?);

    // Frobenius in characteristic 7
    let s7 = PolyRing::with_vars(7, &["x", "y"])?;
    let h = parse_polynomial("x + y", &s7)?;
    println!("(x + y)^7 = {} over F_7", h.try_pow(7)?);
    Ok(())
}
