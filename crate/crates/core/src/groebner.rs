//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! Pairs are selected by smallest sugar degree (for homogeneous input this is plain
//! degree-by-degree selection) and discarded with the Gebauer–Möller installation of
//! the product and chain criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{sub_mul_terms, Polynomial, Term};
use crate::ring::PolyRing;

/// A reduced, monic Gröbner basis. Elements are sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
}

struct Entry {
    terms: Vec<Term>,
    lm: Monomial,
    mask: u64,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Divisor lookup over leading monomials.
pub(crate) struct Reducer<'a> {
    pub(crate) polys: Vec<(&'a Monomial, u64, &'a [Term])>,
}

impl<'a> Reducer<'a> {
    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.polys
            .iter()
            .position(|(lm, lmask, _)| lmask & !mask == 0 && lm.divides(m))
    }

    /// Full reduction of `p`; all reducers are assumed monic.
    pub(crate) fn reduce(
        &self,
        order: MonomialOrder,
        field: &PrimeField,
        mut p: Vec<Term>,
    ) -> Vec<Term> {
        let mut out = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (m, c) = (&p[start].0, p[start].1);
            match self.find(m) {
                Some(k) => {
                    let (lm, _, g) = self.polys[k];
                    let q = m.div(lm);
                    p = sub_mul_terms(order, field, &p[start..], c, &q, g);
                    start = 0;
                }
                None => {
                    out.push(p[start].clone());
                    start += 1;
                }
            }
        }
        out
    }
}

fn make_monic(field: &PrimeField, mut terms: Vec<Term>) -> Vec<Term> {
    if let Some(&(_, c)) = terms.first() {
        if c != 1 {
            let inv = field.inv(c);
            for t in terms.iter_mut() {
                t.1 = field.mul(t.1, inv);
            }
        }
    }
    terms
}

struct Buchberger<'r> {
    ring: &'r Arc<PolyRing>,
    entries: Vec<Entry>,
    pairs: Vec<Pair>,
}

impl<'r> Buchberger<'r> {
    fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    fn reduce(&self, p: Vec<Term>) -> Vec<Term> {
        let reducer = Reducer {
            polys: self
                .entries
                .iter()
                .filter(|e| e.active)
                .map(|e| (&e.lm, e.mask, e.terms.as_slice()))
                .collect(),
        };
        reducer.reduce(self.order(), self.ring.field(), p)
    }

    fn spoly(&self, pair: &Pair) -> Vec<Term> {
        let (f, g) = (&self.entries[pair.i], &self.entries[pair.j]);
        let mf = pair.lcm.div(&f.lm);
        let mg = pair.lcm.div(&g.lm);
        let fs: Vec<Term> = f.terms.iter().map(|(m, c)| (m.mul(&mf), *c)).collect();
        let mut s = sub_mul_terms(
            self.order(),
            self.ring.field(),
            &fs[1..],
            1,
            &mg,
            &g.terms[1..],
        );
        // leading terms cancel by construction
        s.shrink_to_fit();
        s
    }

    /// Inserts `h` (monic, reduced, nonzero) and updates the pair set (Gebauer–Möller).
    fn insert(&mut self, terms: Vec<Term>, sugar: u32) {
        let lm = terms[0].0.clone();
        let h = self.entries.len();
        let mut cands: Vec<(usize, Monomial)> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(i, e)| (i, e.lm.lcm(&lm)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, l)) = cands.pop() {
            let coprime = self.entries[g].lm.is_coprime(&lm);
            if coprime
                || !cands
                    .iter()
                    .chain(kept.iter())
                    .any(|(_, l2)| l2.divides(&l))
            {
                kept.push((g, l));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.entries[*g].lm.is_coprime(&lm))
            .map(|(g, l)| {
                let e = &self.entries[g];
                let sg = e.sugar + l.degree() - e.lm.degree();
                let sh = sugar + l.degree() - lm.degree();
                Pair {
                    i: g,
                    j: h,
                    sugar: sg.max(sh),
                    lcm: l,
                }
            })
            .collect();
        let entries = &self.entries;
        self.pairs.retain(|p| {
            if !lm.divides(&p.lcm) {
                return true;
            }
            let li = entries[p.i].lm.lcm(&lm);
            let lj = entries[p.j].lm.lcm(&lm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);
        for e in self.entries.iter_mut() {
            if e.active && lm.divides(&e.lm) {
                e.active = false;
            }
        }
        self.entries.push(Entry {
            mask: lm.support_mask(),
            lm,
            terms,
            sugar,
            active: true,
        });
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order();
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match order.compare(&a.lcm, &b.lcm) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => (a.j, a.i) < (b.j, b.i),
                },
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn add_reduced(&mut self, p: Vec<Term>, sugar: u32) -> bool {
        let h = self.reduce(p);
        if h.is_empty() {
            return false;
        }
        let unit = h[0].0.is_one();
        let h = make_monic(self.ring.field(), h);
        self.insert(h, sugar);
        unit
    }

    fn run(mut self, gens: Vec<Vec<Term>>) -> Vec<Polynomial> {
        let field = *self.ring.field();
        let mut gens: Vec<Vec<Term>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        let order = self.order();
        gens.sort_by(|a, b| order.compare(&a[0].0, &b[0].0));
        let one = Polynomial::one(self.ring);
        for g in gens {
            let sugar = g.iter().map(|t| t.0.degree()).max().unwrap_or(0);
            if self.add_reduced(make_monic(&field, g), sugar) {
                return vec![one];
            }
        }
        while let Some(pair) = self.next_pair() {
            let s = self.spoly(&pair);
            if self.add_reduced(s, pair.sugar) {
                return vec![one];
            }
        }
        self.finish()
    }

    fn finish(self) -> Vec<Polynomial> {
        let order = self.order();
        let field = *self.ring.field();
        let mut active: Vec<&Entry> = self.entries.iter().filter(|e| e.active).collect();
        active.sort_by(|a, b| order.compare(&a.lm, &b.lm));
        let mut minimal: Vec<&Entry> = Vec::new();
        for e in active {
            if !minimal.iter().any(|m| m.lm.divides(&e.lm)) {
                minimal.push(e);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for (k, e) in minimal.iter().enumerate() {
            let reducer = Reducer {
                polys: minimal
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, o)| (&o.lm, o.mask, o.terms.as_slice()))
                    .collect(),
            };
            let mut terms = vec![e.terms[0].clone()];
            terms.extend(reducer.reduce(order, &field, e.terms[1..].to_vec()));
            out.push(Polynomial::from_sorted_terms(self.ring, terms));
        }
        out
    }
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `gens` with respect to `order`.
    /// `ring` supplies the variables; generators must share its field and variables.
    pub fn compute(
        ring: &Arc<PolyRing>,
        gens: &[Polynomial],
        order: MonomialOrder,
    ) -> Result<Self> {
        let target = if ring.order() == order {
            ring.clone()
        } else {
            ring.with_order(order)?
        };
        let mut input = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same_variables(ring) {
                return Err(Error::RingMismatch);
            }
            input.push(g.to_ring(&target)?.into_terms());
        }
        let engine = Buchberger {
            ring: &target,
            entries: Vec::new(),
            pairs: Vec::new(),
        };
        let elements = engine.run(input);
        Ok(GroebnerBasis {
            ring: target,
            elements,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|e| e.leading_monomial().unwrap().clone())
            .collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub(crate) fn reducer(&self) -> Reducer<'_> {
        Reducer {
            polys: self
                .elements
                .iter()
                .map(|e| {
                    let lm = e.leading_monomial().unwrap();
                    (lm, lm.support_mask(), e.terms())
                })
                .collect(),
        }
    }

    /// Remainder of `f` modulo the basis. `f` must use the basis ring's variables and order.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_variables(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.ring().order() != self.order() {
            return Err(Error::OrderMismatch);
        }
        Ok(self.reduce_unchecked(f))
    }

    /// Normal form of a polynomial in any order over the same variables; the result is
    /// expressed in the basis ring.
    pub fn reduce_any(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_variables(&self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.reduce_unchecked(&f.to_ring(&self.ring)?))
    }

    fn reduce_unchecked(&self, f: &Polynomial) -> Polynomial {
        let terms = self
            .reducer()
            .reduce(self.order(), self.ring.field(), f.terms().to_vec());
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce_any(f)?.is_zero())
    }

    /// Checks that every S-polynomial of two basis elements reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let order = self.order();
        let field = self.ring.field();
        let reducer = self.reducer();
        for (i, f) in self.elements.iter().enumerate() {
            for g in &self.elements[i + 1..] {
                let (fl, gl) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
                let l = fl.lcm(gl);
                let fs: Vec<Term> = f
                    .terms()
                    .iter()
                    .map(|(m, c)| (m.mul(&l.div(fl)), *c))
                    .collect();
                let s = sub_mul_terms(order, field, &fs, 1, &l.div(gl), g.terms());
                if !reducer.reduce(order, field, s).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `gens` in `ring` under `order`.
pub fn groebner_basis(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(ring, gens, order)
}

/// Remainder of `f` against `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

/// Whether `f` lies in the ideal generated by `gens`.
pub fn ideal_membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    let gb = GroebnerBasis::compute(f.ring(), gens, f.ring().order())?;
    gb.contains(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn polys(ring: &Arc<PolyRing>, src: &[&str]) -> Vec<Polynomial> {
        src.iter()
            .map(|s| parse_polynomial(s, ring).unwrap())
            .collect()
    }

    #[test]
    fn variables_are_their_own_basis() {
        let r = PolyRing::with_vars(32003, &["x", "y"]).unwrap();
        let gb = groebner_basis(&r, &polys(&r, &["x", "y"]), MonomialOrder::DegRevLex).unwrap();
        let mut got: Vec<String> = gb.elements().iter().map(|e| e.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x", "y"]);
    }

    #[test]
    fn twisted_cubic_is_already_a_basis() {
        let r = PolyRing::with_vars(32003, &["x", "y", "z", "w"]).unwrap();
        let g = polys(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let gb = groebner_basis(&r, &g, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.len(), 3);
        for p in &g {
            assert!(gb.elements().contains(&p.monic()));
        }
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn unit_ideal() {
        let r = PolyRing::with_vars(32003, &["x", "y"]).unwrap();
        let gb =
            groebner_basis(&r, &polys(&r, &["x*y - 1", "x"]), MonomialOrder::DegRevLex).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn normal_forms() {
        let r = PolyRing::with_vars(32003, &["x", "y"]).unwrap();
        let gb = groebner_basis(&r, &polys(&r, &["x", "y"]), MonomialOrder::DegRevLex).unwrap();
        assert!(gb
            .normal_form(&parse_polynomial("x^2+y", &r).unwrap())
            .unwrap()
            .is_zero());
        let gbx = groebner_basis(&r, &polys(&r, &["x"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(
            gbx.normal_form(&parse_polynomial("x^2+1", &r).unwrap())
                .unwrap(),
            Polynomial::one(&r)
        );
        let lex = r.with_order(MonomialOrder::Lex).unwrap();
        let f = parse_polynomial("x", &lex).unwrap();
        assert_eq!(gbx.normal_form(&f), Err(Error::OrderMismatch));
    }

    #[test]
    fn membership() {
        let r = PolyRing::with_vars(32003, &["x", "y"]).unwrap();
        assert!(
            ideal_membership(&parse_polynomial("x^2*y", &r).unwrap(), &polys(&r, &["x"])).unwrap()
        );
        assert!(!ideal_membership(
            &parse_polynomial("x + y", &r).unwrap(),
            &polys(&r, &["x^2", "y^2"])
        )
        .unwrap());
    }

    #[test]
    fn idempotent() {
        let r = PolyRing::with_vars(32003, &["x", "y", "z"]).unwrap();
        let g = polys(&r, &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y + x"]);
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let gb = groebner_basis(&r, &g, order).unwrap();
            assert!(gb.satisfies_buchberger_criterion());
            let again = groebner_basis(&r, gb.elements(), order).unwrap();
            assert_eq!(gb, again);
        }
    }
}
