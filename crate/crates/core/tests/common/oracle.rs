//! Naive Groebner bases: every S-polynomial of every pair is reduced until nothing new
//! appears. Slow and simple, sharing no code with the library engine.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use jmult::poly::Polynomial;

pub type Exps = Vec<u32>;
pub type OPoly = BTreeMap<Exps, u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    DegRevLex,
    Lex,
}

pub fn cmp(order: Order, a: &Exps, b: &Exps) -> Ordering {
    match order {
        Order::Lex => a.cmp(b),
        Order::DegRevLex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn from_poly(f: &Polynomial) -> OPoly {
    f.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), *c as u64))
        .collect()
}

pub fn lead(order: Order, f: &OPoly) -> Option<(Exps, u64)> {
    f.iter()
        .max_by(|a, b| cmp(order, a.0, b.0))
        .map(|(e, c)| (e.clone(), *c))
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `f - c * x^shift * g`.
fn sub_scaled(f: &mut OPoly, c: u64, shift: &Exps, g: &OPoly, p: u64) {
    for (e, gc) in g {
        let m: Exps = e.iter().zip(shift).map(|(a, b)| a + b).collect();
        let entry = f.entry(m.clone()).or_insert(0);
        *entry = (*entry + p - c * gc % p) % p;
        if *entry == 0 {
            f.remove(&m);
        }
    }
}

/// Full reduction of `f` by `basis`.
pub fn reduce(order: Order, f: &OPoly, basis: &[OPoly], p: u64) -> OPoly {
    let leads: Vec<(Exps, u64)> = basis.iter().map(|g| lead(order, g).unwrap()).collect();
    let mut f = f.clone();
    let mut rem = OPoly::new();
    while let Some((e, c)) = lead(order, &f) {
        match leads.iter().position(|(l, _)| divides(l, &e)) {
            Some(k) => {
                let (l, lc) = &leads[k];
                let shift: Exps = e.iter().zip(l).map(|(a, b)| a - b).collect();
                let q = c * inv(*lc, p) % p;
                sub_scaled(&mut f, q, &shift, &basis[k], p);
            }
            None => {
                f.remove(&e);
                rem.insert(e, c);
            }
        }
    }
    rem
}

fn spoly(order: Order, f: &OPoly, g: &OPoly, p: u64) -> OPoly {
    let (lf, cf) = lead(order, f).unwrap();
    let (lg, cg) = lead(order, g).unwrap();
    let l: Exps = lf.iter().zip(&lg).map(|(a, b)| *a.max(b)).collect();
    let sf: Exps = l.iter().zip(&lf).map(|(a, b)| a - b).collect();
    let sg: Exps = l.iter().zip(&lg).map(|(a, b)| a - b).collect();
    let mut out = OPoly::new();
    sub_scaled(&mut out, p - inv(cf, p), &sf, f, p);
    sub_scaled(&mut out, inv(cg, p), &sg, g, p);
    out
}

/// Some Groebner basis of `gens`, by exhaustive pair processing.
pub fn naive_groebner(order: Order, gens: &[OPoly], p: u64) -> Vec<OPoly> {
    let mut basis: Vec<OPoly> = gens.iter().filter(|g| !g.is_empty()).cloned().collect();
    loop {
        let mut added = false;
        let n = basis.len();
        for i in 0..n {
            for j in i + 1..n {
                let s = spoly(order, &basis[i], &basis[j], p);
                let r = reduce(order, &s, &basis, p);
                if !r.is_empty() {
                    basis.push(r);
                    added = true;
                }
            }
        }
        if !added {
            return basis;
        }
    }
}

/// Minimal generators of the leading-term ideal, sorted.
pub fn minimal_leading(order: Order, basis: &[OPoly]) -> Vec<Exps> {
    let mut leads: Vec<Exps> = basis.iter().map(|g| lead(order, g).unwrap().0).collect();
    leads.sort();
    leads.dedup();
    let mut out: Vec<Exps> = leads
        .iter()
        .filter(|a| !leads.iter().any(|b| b != *a && divides(b, a)))
        .cloned()
        .collect();
    out.sort();
    out
}

/// Number of monomials of each degree `0..=up_to` outside the monomial ideal.
pub fn standard_monomial_counts(nvars: usize, leads: &[Exps], up_to: u32) -> Vec<u64> {
    fn walk(nvars: usize, left: u32, prefix: &mut Exps, leads: &[Exps], count: &mut u64) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            if !leads.iter().any(|l| divides(l, prefix)) {
                *count += 1;
            }
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            walk(nvars, left - e, prefix, leads, count);
            prefix.pop();
        }
    }
    (0..=up_to)
        .map(|d| {
            let mut count = 0;
            walk(nvars, d, &mut Vec::new(), leads, &mut count);
            count
        })
        .collect()
}
