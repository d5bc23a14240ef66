mod common;

use std::sync::Arc;

use common::oracle::{self, Order};
use common::P;
use jmult::ideal::{colon, eliminate, ideal_sum, minors, saturate, IdealHandle, QuotientRing};
use jmult::monomial::Monomial;
use jmult::parse::parse_polynomial;
use jmult::poly::Polynomial;
use jmult::ring::PolyRing;

fn setup(vars: &[&str]) -> (Arc<PolyRing>, QuotientRing) {
    let s = PolyRing::with_vars(P, vars).unwrap();
    let r = QuotientRing::polynomial(&s);
    (s, r)
}

fn ideal(r: &QuotientRing, gens: &[&str]) -> IdealHandle {
    let gens = gens
        .iter()
        .map(|g| parse_polynomial(g, r.ambient()).unwrap())
        .collect();
    r.ideal(gens).unwrap()
}

/// Elimination ideal from the naive lex basis: the eliminated variables come first, so the
/// basis elements free of them generate the intersection.
fn naive_elimination(gens: &[&str], vars: &[&str], k: usize, target: &QuotientRing) -> IdealHandle {
    let s = PolyRing::with_vars(P, vars).unwrap();
    let ogens: Vec<_> = gens
        .iter()
        .map(|g| oracle::from_poly(&parse_polynomial(g, &s).unwrap()))
        .collect();
    let basis = oracle::naive_groebner(Order::Lex, &ogens, P);
    let kept = basis
        .iter()
        .filter(|g| g.keys().all(|e| e[..k].iter().all(|&x| x == 0)))
        .map(|g| {
            let terms = g
                .iter()
                .map(|(e, c)| (Monomial::new(e[k..].to_vec()).unwrap(), *c as u32))
                .collect();
            Polynomial::from_terms(target.ambient(), terms)
        })
        .collect();
    target.ideal(kept).unwrap()
}

#[test]
fn sums() {
    let (_, r) = setup(&["x", "y"]);
    let s = ideal_sum(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert!(s.equals(&ideal(&r, &["x", "y"])).unwrap());
    let i = ideal(&r, &["x^2 - y", "x*y"]);
    assert!(ideal_sum(&i, &r.zero_ideal()).unwrap().equals(&i).unwrap());
    let a = ideal_sum(&ideal(&r, &["x^2"]), &ideal(&r, &["x"])).unwrap();
    assert!(a.equals(&ideal(&r, &["x"])).unwrap());
    let (_, other) = setup(&["x", "z"]);
    assert!(ideal_sum(&i, &ideal(&other, &["x"])).is_err());
}

#[test]
fn colons() {
    let (_, r) = setup(&["x", "y"]);
    let c = |a: &[&str], b: &[&str]| colon(&ideal(&r, a), &ideal(&r, b)).unwrap();
    assert!(c(&["x^2"], &["x"]).equals(&ideal(&r, &["x"])).unwrap());
    assert!(c(&["x*y"], &["y"]).equals(&ideal(&r, &["x"])).unwrap());
    assert!(c(&["x^2", "x*y"], &["x"])
        .equals(&ideal(&r, &["x", "y"]))
        .unwrap());
    // colon by an ideal is the intersection of the colons by its generators
    let i = ideal(&r, &["x^3", "x^2*y^2", "y^4"]);
    let j = c(&["x^3", "x^2*y^2", "y^4"], &["x", "y"]);
    assert!(i.is_subset_of(&j).unwrap());
    assert!(j
        .equals(&ideal(&r, &["x^3", "x^2*y", "x*y^3", "y^4"]))
        .unwrap());
    assert!(colon(&i, &r.zero_ideal()).is_err());
}

#[test]
fn saturations() {
    let (_, r) = setup(&["x", "y"]);
    let (sat, k) = saturate(&ideal(&r, &["x^2*y", "x^3"]), &ideal(&r, &["x"])).unwrap();
    // (x^2 y, x^3) : x^2 = (x, y), and (x, y) : x is the whole ring
    assert!(sat.is_unit().unwrap());
    assert_eq!(k, 3);
    let (sat, k) = saturate(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert!(sat.equals(&ideal(&r, &["x"])).unwrap());
    assert_eq!(k, 0);
    let (sat, _) = saturate(&ideal(&r, &["x^2*y", "x*y^2"]), &ideal(&r, &["x", "y"])).unwrap();
    assert!(sat.equals(&ideal(&r, &["x*y"])).unwrap());

    let s = PolyRing::with_vars(P, &["x", "y"]).unwrap();
    let q = QuotientRing::new(&s, vec![parse_polynomial("x*y", &s).unwrap()]).unwrap();
    let (sat, _) = saturate(&q.zero_ideal(), &ideal(&q, &["x"])).unwrap();
    assert!(sat.equals(&ideal(&q, &["y"])).unwrap());
}

#[test]
fn eliminations_match_naive_lex() {
    let (_, r) = setup(&["x", "z1", "z2"]);
    let gens = ["x^2 - z1", "x^3 - z2"];
    let e = eliminate(&ideal(&r, &gens), &["z1", "z2"]).unwrap();
    let target = e.ring().clone();
    assert!(e
        .equals(&naive_elimination(&gens, &["x", "z1", "z2"], 1, &target))
        .unwrap());
    assert!(e.equals(&ideal(&target, &["z1^3 - z2^2"])).unwrap());

    let (_, r) = setup(&["x", "y", "z1", "z2", "z3"]);
    let gens = ["z1 - x^2", "z2 - x*y", "z3 - y^2"];
    let e = eliminate(&ideal(&r, &gens), &["z1", "z2", "z3"]).unwrap();
    let target = e.ring().clone();
    assert!(e
        .equals(&naive_elimination(
            &gens,
            &["x", "y", "z1", "z2", "z3"],
            2,
            &target
        ))
        .unwrap());
    assert!(e.equals(&ideal(&target, &["z1*z3 - z2^2"])).unwrap());

    let (_, r) = setup(&["x", "y"]);
    let i = ideal(&r, &["x^2 - y^3", "x*y"]);
    let same = eliminate(&i, &["x", "y"]).unwrap();
    assert_eq!(same.ring().ambient().var_names(), r.ambient().var_names());
    let back = same.ring().ideal(i.generators().to_vec()).unwrap();
    assert!(same.equals(&back).unwrap());
}

#[test]
fn determinantal_ideals() {
    let (s, r) = setup(&["x", "y", "z", "w"]);
    let v = |n: &str| Polynomial::var(&s, n).unwrap();
    let m = vec![vec![v("x"), v("y")], vec![v("y"), v("z")]];
    assert!(minors(&r, &m, 2)
        .unwrap()
        .equals(&ideal(&r, &["x*z - y^2"]))
        .unwrap());
    assert!(minors(&r, &m, 1)
        .unwrap()
        .equals(&ideal(&r, &["x", "y", "z"]))
        .unwrap());
    assert!(minors(&r, &m, 0).unwrap().is_unit().unwrap());
    assert!(minors(&r, &m, 3).is_err());
    let m = vec![vec![v("x"), v("y"), v("z")], vec![v("y"), v("z"), v("w")]];
    let i = minors(&r, &m, 2).unwrap();
    assert!(i
        .equals(&ideal(&r, &["x*z - y^2", "x*w - y*z", "y*w - z^2"]))
        .unwrap());
    let h = i.hilbert().unwrap();
    assert_eq!((h.dimension, h.degree), (2, 3));
}
