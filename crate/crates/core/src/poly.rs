//! Sparse multivariate polynomials.
//!
//! Terms are kept sorted in decreasing order with respect to the ring's monomial order,
//! so the leading term is always `terms[0]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::PolyRing;

pub type Term = (Monomial, u32);

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `f - c * m * g` for term lists sorted decreasingly under `order`.
pub(crate) fn sub_mul_terms(
    order: MonomialOrder,
    field: &PrimeField,
    f: &[Term],
    c: u32,
    m: &Monomial,
    g: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g
        .iter()
        .map(|(gm, gc)| (gm.mul(m), field.mul(*gc, c)))
        .peekable();
    while i < f.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match order.compare(&f[i].0, gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, field.neg(gc)));
            }
            Ordering::Equal => {
                let (gm, gc) = gi.next().unwrap();
                let v = field.sub(f[i].1, gc);
                if v != 0 {
                    out.push((gm, v));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    for (gm, gc) in gi {
        out.push((gm, field.neg(gc)));
    }
    out
}

fn normalize(order: MonomialOrder, field: &PrimeField, terms: Vec<Term>) -> Vec<Term> {
    let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(terms.len());
    for (m, c) in terms {
        let e = acc.entry(m).or_insert(0);
        *e = field.add(*e, c);
    }
    let mut out: Vec<Term> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    out.sort_by(|a, b| order.compare(&b.0, &a.0));
    out
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_by_index(ring, i))
    }

    pub fn var_by_index(ring: &Arc<PolyRing>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var_power(ring.nvars(), i, 1), 1)],
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: u32) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms; combines duplicates and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        let p = ring.field().characteristic();
        let terms = terms
            .into_iter()
            .map(|(m, c)| {
                assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
                (m, c % p)
            })
            .collect();
        Polynomial {
            ring: ring.clone(),
            terms: normalize(ring.order(), ring.field(), terms),
        }
    }

    /// Trusts that `terms` is already sorted, reduced and zero-free.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Maximum total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `Some(d)` when all terms have total degree `d`. The zero polynomial is not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let f = self.ring.field();
        let neg: Vec<Term> = other
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f.neg(*c)))
            .collect();
        let one = Monomial::one(self.ring.nvars());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: sub_mul_terms(self.ring.order(), f, &self.terms, 1, &one, &neg),
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let one = Monomial::one(self.ring.nvars());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: sub_mul_terms(
                self.ring.order(),
                self.ring.field(),
                &self.terms,
                1,
                &one,
                &other.terms,
            ),
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let f = self.ring.field();
        let mut acc: HashMap<Monomial, u32> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let e = acc.entry(m).or_insert(0);
                *e = f.add(*e, f.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_pow(&self, mut e: u32) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), f.mul(*a, c)))
                .collect(),
        }
    }

    /// Multiplies by the monomial `m` (order-preserving, so no re-sort).
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        let i = self
            .ring
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.partial_derivative_index(i))
    }

    pub fn partial_derivative_index(&self, i: usize) -> Polynomial {
        let f = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponents()[i];
                if e == 0 {
                    return None;
                }
                let c = f.mul(*c, f.from_u64(e as u64));
                if c == 0 {
                    return None;
                }
                let mut exps = m.exponents().to_vec();
                exps[i] -= 1;
                Some((Monomial::new(exps).unwrap(), c))
            })
            .collect();
        // every surviving term is divisible by x_i, and dividing by it preserves the order
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    /// Re-expresses the polynomial in `target`, which must have the same field and the
    /// same number of variables (typically the same ring under another order).
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if target.nvars() != self.ring.nvars() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        if target.order() == self.ring.order() {
            return Ok(Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut terms = self.terms.clone();
        let order = target.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Substitutes variable `i` of this ring by variable `map[i]` of `target`.
    pub fn map_variables(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; n];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[map[i]] += e;
                }
                (Monomial::new(exps).unwrap(), *c)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Exact division `self / g`; `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        if g.is_zero() {
            return None;
        }
        let f = self.ring.field();
        let order = self.ring.order();
        let (glm, glc) = g.terms[0].clone();
        let ginv = f.inv(glc);
        let mut rem = self.terms.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.first().cloned() {
            if !glm.divides(&m) {
                return None;
            }
            let qm = m.div(&glm);
            let qc = f.mul(c, ginv);
            rem = sub_mul_terms(order, f, &rem, qc, &qm, &g.terms);
            quot.push((qm, qc));
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(*c)))
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sc = field.to_signed(*c);
            let abs = sc.unsigned_abs();
            if k == 0 {
                if sc < 0 {
                    write!(f, "-")?;
                }
            } else if sc < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if abs != 1 || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.var_names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.var_names()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
