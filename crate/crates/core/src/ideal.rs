//! Ideals of quotient rings `S / K`, represented by pullback.
//!
//! An [`IdealHandle`] stores generators in the ambient polynomial ring `S`; it stands for
//! the ideal `(gens) + K`. All multiplicities of `R / (anything)` are therefore computed in
//! `S` directly. Gröbner bases are cached per monomial order on first use.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::hilbert::HilbertData;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Iterated colons stop with an error after this many non-trivial steps.
pub const SATURATION_CAP: usize = 64;

struct QuotientInner {
    ambient: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    relations_ideal: OnceLock<IdealHandle>,
}

/// `S / K` with `K` given by generators in the ambient ring `S`.
#[derive(Clone)]
pub struct QuotientRing {
    inner: Arc<QuotientInner>,
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}/{:?}",
            self.inner.ambient.var_names(),
            self.inner.relations
        )
    }
}

impl QuotientRing {
    pub fn new(ambient: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if !r.ring().same_variables(ambient) {
                return Err(Error::RingMismatch);
            }
            if !r.is_zero() {
                rels.push(r.to_ring(ambient)?);
            }
        }
        Ok(QuotientRing {
            inner: Arc::new(QuotientInner {
                ambient: ambient.clone(),
                relations: rels,
                relations_ideal: OnceLock::new(),
            }),
        })
    }

    /// The polynomial ring itself (`K = 0`).
    pub fn polynomial(ambient: &Arc<PolyRing>) -> Self {
        QuotientRing::new(ambient, Vec::new()).unwrap()
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.inner.ambient
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.inner.relations
    }

    /// `K` as an ideal of this ring, i.e. the zero ideal of `S / K`.
    pub fn zero_ideal(&self) -> IdealHandle {
        self.inner
            .relations_ideal
            .get_or_init(|| IdealHandle::from_parts(self.clone(), Vec::new()))
            .clone()
    }

    pub fn unit_ideal(&self) -> IdealHandle {
        IdealHandle::from_parts(self.clone(), vec![Polynomial::one(self.ambient())])
    }

    pub fn same_ring(&self, other: &QuotientRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.ambient().same_variables(other.ambient())
                && self.inner.relations == other.inner.relations)
    }

    pub fn hilbert(&self) -> Result<HilbertData> {
        self.zero_ideal().hilbert()
    }

    /// Krull dimension of `S / K`.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.hilbert()?.dimension)
    }

    /// Multiplicity `e(S / K)`.
    pub fn degree(&self) -> Result<u64> {
        Ok(self.hilbert()?.degree)
    }

    pub fn is_zero_ring(&self) -> Result<bool> {
        Ok(self.zero_ideal().groebner_degrevlex()?.is_unit())
    }

    /// `S / (I + K)` as a new quotient ring.
    pub fn quotient_by(&self, ideal: &IdealHandle) -> Result<QuotientRing> {
        let gb = ideal.groebner_degrevlex()?;
        let rels = gb
            .elements()
            .iter()
            .map(|p| p.to_ring(self.ambient()))
            .collect::<Result<Vec<_>>>()?;
        QuotientRing::new(self.ambient(), rels)
    }

    pub fn ideal(&self, gens: Vec<Polynomial>) -> Result<IdealHandle> {
        IdealHandle::new(self, gens)
    }
}

struct IdealInner {
    ring: QuotientRing,
    gens: Vec<Polynomial>,
    bases: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

/// The ideal `(gens) + K` of `S / K`.
#[derive(Clone)]
pub struct IdealHandle {
    inner: Arc<IdealInner>,
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.inner.gens)
    }
}

fn fresh_name(ring: &PolyRing, base: &str) -> String {
    let mut k = 0;
    loop {
        let name = format!("{base}{k}");
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// Eliminates the first `k` variables of `ring` from the ideal generated by `gens`,
/// returning the basis elements free of them (still as polynomials of `ring`).
fn eliminate_leading(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    k: usize,
) -> Result<Vec<Polynomial>> {
    let gb = GroebnerBasis::compute(ring, gens, MonomialOrder::Elimination(k))?;
    Ok(gb
        .elements()
        .iter()
        .filter(|p| {
            p.terms()
                .iter()
                .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
        })
        .cloned()
        .collect())
}

/// `A ∩ B` for ideals of the ambient ring, via `t A + (1 - t) B` with `t` eliminated.
fn intersect_ambient(
    ambient: &Arc<PolyRing>,
    a: &[Polynomial],
    b: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let n = ambient.nvars();
    let mut names = vec![fresh_name(ambient, "t")];
    names.extend(ambient.var_names().iter().cloned());
    let ext = PolyRing::new(*ambient.field(), &names, MonomialOrder::Elimination(1))?;
    let up: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var_by_index(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        gens.push(&t * &f.map_variables(&ext, &up));
    }
    for g in b {
        gens.push(&one_minus_t * &g.map_variables(&ext, &up));
    }
    let kept = eliminate_leading(&ext, &gens, 1)?;
    let mut down = vec![0usize; n + 1];
    for (i, d) in down.iter_mut().enumerate().skip(1) {
        *d = i - 1;
    }
    kept.iter()
        .map(|p| p.map_variables(ambient, &down[..]).to_ring(ambient))
        .collect::<Result<_>>()
}

impl IdealHandle {
    fn from_parts(ring: QuotientRing, gens: Vec<Polynomial>) -> Self {
        IdealHandle {
            inner: Arc::new(IdealInner {
                ring,
                gens,
                bases: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// The ideal generated by `gens` (plus `K`). Zero generators are dropped.
    pub fn new(ring: &QuotientRing, gens: Vec<Polynomial>) -> Result<Self> {
        let ambient = ring.ambient();
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same_variables(ambient) {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g.to_ring(ambient)?);
            }
        }
        Ok(Self::from_parts(ring.clone(), out))
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.inner.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.inner.gens
    }

    /// Generators together with the relations of the ring: the pullback of the ideal.
    pub fn pullback_generators(&self) -> Vec<Polynomial> {
        let mut v = self.inner.gens.clone();
        v.extend(self.inner.ring.relations().iter().cloned());
        v
    }

    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.inner.bases.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(GroebnerBasis::compute(
            self.ring().ambient(),
            &self.pullback_generators(),
            order,
        )?);
        // write-once: a concurrent computation of the same key yields the same basis
        let mut bases = self.inner.bases.lock().unwrap();
        Ok(bases.entry(order).or_insert(gb).clone())
    }

    pub fn groebner_degrevlex(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(MonomialOrder::DegRevLex)
    }

    pub fn hilbert(&self) -> Result<HilbertData> {
        let gb = self.groebner_degrevlex()?;
        Ok(HilbertData::from_leading_monomials(
            self.ring().ambient().nvars(),
            &gb.leading_monomials(),
        ))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_degrevlex()?.is_unit())
    }

    /// True when the ideal is zero in `S / K`.
    pub fn is_zero(&self) -> Result<bool> {
        let k = self.ring().zero_ideal().groebner_degrevlex()?;
        for g in self.generators() {
            if !k.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner_degrevlex()?.contains(f)
    }

    /// `self ⊆ other` (as ideals of the same quotient ring).
    pub fn is_subset_of(&self, other: &IdealHandle) -> Result<bool> {
        let gb = other.groebner_degrevlex()?;
        for g in self.pullback_generators() {
            if !gb.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality, decided by comparing reduced degrevlex bases.
    pub fn equals(&self, other: &IdealHandle) -> Result<bool> {
        if !self.ring().ambient().same_variables(other.ring().ambient()) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_degrevlex()?.elements() == other.groebner_degrevlex()?.elements())
    }

    fn check_same_ring(&self, other: &IdealHandle) -> Result<()> {
        if self.ring().same_ring(other.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `I + J`.
    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_same_ring(other)?;
        let mut gens = self.inner.gens.clone();
        gens.extend(other.inner.gens.iter().cloned());
        Ok(Self::from_parts(self.ring().clone(), gens))
    }

    /// `I + (extra)`.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<IdealHandle> {
        let mut gens = self.inner.gens.clone();
        gens.extend(extra.iter().cloned());
        IdealHandle::new(self.ring(), gens)
    }

    /// `I * J`.
    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_same_ring(other)?;
        // reduce against K first so powers stay small
        let a = self.reduced_generators()?;
        let b = other.reduced_generators()?;
        let mut gens = Vec::with_capacity(a.len() * b.len());
        for f in &a {
            for g in &b {
                gens.push(f.try_mul(g)?);
            }
        }
        Ok(Self::from_parts(self.ring().clone(), gens))
    }

    /// Generators of the ideal modulo `K`: the degrevlex basis of `I + K` with the
    /// elements of `K` removed.
    fn reduced_generators(&self) -> Result<Vec<Polynomial>> {
        let k = self.ring().zero_ideal().groebner_degrevlex()?;
        let gb = self.groebner_degrevlex()?;
        let ambient = self.ring().ambient();
        let mut out = Vec::new();
        for g in gb.elements() {
            if !k.contains(g)? {
                out.push(g.to_ring(ambient)?);
            }
        }
        Ok(out)
    }

    /// `I : g` for a single element.
    fn colon_element(&self, g: &Polynomial) -> Result<Vec<Polynomial>> {
        let ambient = self.ring().ambient();
        if self.contains(g)? {
            return Ok(vec![Polynomial::one(ambient)]);
        }
        let gb = self.groebner_degrevlex()?;
        let a: Vec<Polynomial> = gb
            .elements()
            .iter()
            .map(|p| p.to_ring(ambient))
            .collect::<Result<_>>()?;
        let inter = intersect_ambient(ambient, &a, std::slice::from_ref(g))?;
        inter
            .iter()
            .map(|h| {
                h.div_exact(g)
                    .ok_or_else(|| Error::InvalidInput("intersection element not divisible".into()))
            })
            .collect()
    }

    /// `I : J = { f : f J ⊆ I }`. Rejects `J = 0`.
    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_same_ring(other)?;
        let k = self.ring().zero_ideal().groebner_degrevlex()?;
        let mut divisors = Vec::new();
        for g in other.generators() {
            if !k.contains(g)? {
                divisors.push(g.clone());
            }
        }
        if divisors.is_empty() {
            return Err(Error::ColonByZero);
        }
        let ambient = self.ring().ambient().clone();
        let mut acc: Option<Vec<Polynomial>> = None;
        for g in &divisors {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => {
                    if prev.len() == 1 && prev[0].is_constant() {
                        c
                    } else if c.len() == 1 && c[0].is_constant() {
                        prev
                    } else {
                        intersect_ambient(&ambient, &prev, &c)?
                    }
                }
            });
        }
        IdealHandle::new(self.ring(), acc.unwrap())
    }

    /// `I : <J>`, the stable value of `I : J^k`, with the number of steps that changed it.
    pub fn saturate(&self, other: &IdealHandle) -> Result<(IdealHandle, usize)> {
        let mut cur = self.clone();
        for k in 0..=SATURATION_CAP {
            let next = cur.colon(other)?;
            if next.equals(&cur)? {
                return Ok((cur, k));
            }
            cur = next;
        }
        Err(Error::SaturationCap(SATURATION_CAP))
    }

    /// `(I + K) ∩ F_p[keep]`, returned as an ideal of the polynomial ring on `keep`.
    pub fn eliminate(&self, keep: &[&str]) -> Result<IdealHandle> {
        let ambient = self.ring().ambient();
        let mut keep_idx = Vec::with_capacity(keep.len());
        for name in keep {
            let i = ambient
                .var_index(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if !keep_idx.contains(&i) {
                keep_idx.push(i);
            }
        }
        keep_idx.sort_unstable();
        let elim: Vec<usize> = (0..ambient.nvars())
            .filter(|i| !keep_idx.contains(i))
            .collect();
        let k = elim.len();
        let mut names: Vec<String> = elim
            .iter()
            .map(|&i| ambient.var_names()[i].clone())
            .collect();
        names.extend(keep_idx.iter().map(|&i| ambient.var_names()[i].clone()));
        let ext = PolyRing::new(*ambient.field(), &names, MonomialOrder::Elimination(k))?;
        let mut map = vec![0usize; ambient.nvars()];
        for (pos, &i) in elim.iter().chain(keep_idx.iter()).enumerate() {
            map[i] = pos;
        }
        let gens: Vec<Polynomial> = self
            .pullback_generators()
            .iter()
            .map(|g| g.map_variables(&ext, &map))
            .collect();
        let kept = eliminate_leading(&ext, &gens, k)?;
        let keep_names: Vec<&str> = keep_idx
            .iter()
            .map(|&i| ambient.var_names()[i].as_str())
            .collect();
        let target = PolyRing::new(*ambient.field(), &keep_names, MonomialOrder::DegRevLex)?;
        let down: Vec<usize> = (0..ext.nvars()).map(|j| j.saturating_sub(k)).collect();
        let out = kept
            .iter()
            .map(|p| p.map_variables(&target, &down))
            .collect();
        IdealHandle::new(&QuotientRing::polynomial(&target), out)
    }

    /// Degree `δ` shared by all generators that are nonzero modulo `K`.
    pub fn common_degree(&self) -> Result<u32> {
        let k = self.ring().zero_ideal().groebner_degrevlex()?;
        let mut deg = None;
        for g in self.generators() {
            if k.contains(g)? {
                continue;
            }
            let d = g
                .homogeneous_degree()
                .ok_or_else(|| Error::NotHomogeneous(g.to_string()))?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::NotEquigenerated(format!("degrees {e} and {d}")))
                }
                _ => {}
            }
        }
        match deg {
            Some(0) => Err(Error::NotEquigenerated("generators of degree 0".into())),
            Some(d) => Ok(d),
            None => Err(Error::NotEquigenerated("zero ideal".into())),
        }
    }

    /// Generators that are nonzero modulo `K`.
    pub fn nonzero_generators(&self) -> Result<Vec<Polynomial>> {
        let k = self.ring().zero_ideal().groebner_degrevlex()?;
        let mut out = Vec::new();
        for g in self.generators() {
            if !k.contains(g)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }
}

/// `I + J`.
pub fn ideal_sum(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.sum(j)
}

/// `I : J`.
pub fn colon(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.colon(j)
}

/// `I : <J>` and the stabilization exponent.
pub fn saturate(i: &IdealHandle, j: &IdealHandle) -> Result<(IdealHandle, usize)> {
    i.saturate(j)
}

/// Elimination ideal keeping the named variables.
pub fn eliminate(i: &IdealHandle, keep: &[&str]) -> Result<IdealHandle> {
    i.eliminate(keep)
}

fn determinant(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let ring = m[0][0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    let sub_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &determinant(m, sub_rows, &sub_cols);
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn go(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, t, cur, out);
            cur.pop();
        }
    }
    go(0, n, t, &mut cur, &mut out);
    out
}

/// Ideal of all `t × t` minors of `matrix` (Laplace expansion). `t = 0` gives the unit ideal.
pub fn minors(ring: &QuotientRing, matrix: &[Vec<Polynomial>], t: usize) -> Result<IdealHandle> {
    if t == 0 {
        return Ok(ring.unit_ideal());
    }
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }
    if t > rows.min(cols) {
        return Err(Error::InvalidInput(format!(
            "minor size {t} exceeds a {rows}x{cols} matrix"
        )));
    }
    let mut gens = Vec::new();
    for rs in subsets(rows, t) {
        for cs in subsets(cols, t) {
            gens.push(determinant(matrix, &rs, &cs));
        }
    }
    IdealHandle::new(ring, gens)
}

/// Monomial helper used by tests and examples: the monomial ideal's leading monomials.
pub fn leading_monomials(ideal: &IdealHandle) -> Result<Vec<Monomial>> {
    Ok(ideal.groebner_degrevlex()?.leading_monomials())
}
