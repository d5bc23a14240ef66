//! Hilbert series, dimension, degree and length of standard-graded quotients.
//!
//! Everything is read off the leading-term ideal. The Hilbert-series numerator of a
//! monomial ideal is computed by the pivot recursion
//! `N(I) = N(I + (p)) + t^deg(p) * N(I : p)` with a memo table.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{IdealHandle, QuotientRing};
use crate::monomial::Monomial;

/// Hilbert data of `S / I` where `S` has `nvars` variables of degree one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Coefficients of `N(t)` in `HS(t) = N(t) / (1 - t)^nvars`, lowest degree first.
    pub numerator: Vec<i64>,
    pub nvars: usize,
    /// Krull dimension; 0 for the zero ring (see `is_zero_ring`).
    pub dimension: usize,
    /// Multiplicity `e` when `dimension >= 1`, length when `dimension == 0`.
    pub degree: u64,
    pub is_zero_ring: bool,
}

type Gens = Vec<Vec<u32>>;

fn minimalize(mut gens: Gens) -> Gens {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut out: Gens = Vec::with_capacity(gens.len());
    for g in gens {
        if !out
            .iter()
            .any(|h| h.iter().zip(g.iter()).all(|(a, b)| a <= b))
        {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn trim(mut a: Vec<i64>) -> Vec<i64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

struct NumeratorMemo {
    table: HashMap<Gens, Vec<i64>>,
}

impl NumeratorMemo {
    fn numerator(&mut self, gens: Gens) -> Vec<i64> {
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
            return vec![0];
        }
        if let Some(v) = self.table.get(&gens) {
            return v.clone();
        }
        let nvars = gens[0].len();
        let mut count = vec![0usize; nvars];
        for g in &gens {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    count[i] += 1;
                }
            }
        }
        let (var, &most) = count
            .iter()
            .enumerate()
            .max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i)))
            .unwrap();
        let result = if most <= 1 {
            // pairwise coprime generators
            gens.iter().fold(vec![1i64], |acc, g| {
                let d = g.iter().sum::<u32>() as usize;
                let mut f = vec![0i64; d + 1];
                f[0] = 1;
                f[d] = -1;
                poly_mul(&acc, &f)
            })
        } else {
            let mut exps: Vec<u32> = gens
                .iter()
                .filter(|g| g[var] > 0 && g.iter().filter(|&&e| e > 0).count() > 1)
                .map(|g| g[var])
                .collect();
            exps.sort_unstable();
            let e = exps[exps.len() / 2];
            let mut pivot = vec![0u32; nvars];
            pivot[var] = e;
            let mut plus = gens.clone();
            plus.push(pivot);
            let colon: Gens = gens
                .iter()
                .map(|g| {
                    let mut h = g.clone();
                    h[var] = h[var].saturating_sub(e);
                    h
                })
                .collect();
            let mut n = self.numerator(minimalize(plus));
            let c = self.numerator(minimalize(colon));
            poly_add_shifted(&mut n, &c, e as usize);
            trim(n)
        };
        self.table.insert(gens, result.clone());
        result
    }
}

/// Numerator `N(t)` of the Hilbert series of `S / (gens)` for a monomial ideal.
pub fn monomial_numerator(nvars: usize, gens: &[Monomial]) -> Vec<i64> {
    let gens: Gens = gens
        .iter()
        .map(|m| {
            assert_eq!(m.nvars(), nvars);
            m.exponents().to_vec()
        })
        .collect();
    let mut memo = NumeratorMemo {
        table: HashMap::new(),
    };
    trim(memo.numerator(minimalize(gens)))
}

impl HilbertData {
    pub fn from_numerator(nvars: usize, numerator: Vec<i64>) -> Self {
        let numerator = trim(numerator);
        if numerator.iter().all(|&c| c == 0) {
            return HilbertData {
                numerator: vec![0],
                nvars,
                dimension: 0,
                degree: 0,
                is_zero_ring: true,
            };
        }
        let mut q = numerator.clone();
        let mut k = 0usize;
        while q.iter().sum::<i64>() == 0 {
            // q = (1 - t) q', so q' holds prefix sums of q
            let mut acc = 0i64;
            let mut next = Vec::with_capacity(q.len());
            for &c in &q {
                acc += c;
                next.push(acc);
            }
            next.pop();
            q = next;
            k += 1;
        }
        let degree = q.iter().sum::<i64>();
        assert!(
            degree > 0,
            "Hilbert numerator has non-positive leading value"
        );
        HilbertData {
            numerator,
            nvars,
            dimension: nvars - k,
            degree: degree as u64,
            is_zero_ring: false,
        }
    }

    pub fn from_leading_monomials(nvars: usize, lms: &[Monomial]) -> Self {
        Self::from_numerator(nvars, monomial_numerator(nvars, lms))
    }

    /// Values of the Hilbert function for degrees `0..=up_to`, read from the series.
    pub fn hilbert_function(&self, up_to: usize) -> Vec<u64> {
        let n = self.nvars;
        (0..=up_to)
            .map(|d| {
                if n == 0 {
                    return self.numerator.get(d).copied().unwrap_or(0) as u64;
                }
                let mut v: i128 = 0;
                for (j, &c) in self.numerator.iter().enumerate().take(d + 1) {
                    v += c as i128 * binomial((d - j + n - 1) as u64, n as u64 - 1);
                }
                v as u64
            })
            .collect()
    }
}

fn binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Counts, for each degree `0..=up_to`, the monomials divisible by none of `lms`.
/// Independent of the series recursion; used as an oracle.
pub fn count_standard_monomials(nvars: usize, lms: &[Monomial], up_to: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(up_to + 1);
    for d in 0..=up_to {
        let mut count = 0u64;
        let mut exps = vec![0u32; nvars];
        enumerate_degree(nvars, d as u32, 0, &mut exps, &mut |e| {
            if !lms
                .iter()
                .any(|m| m.exponents().iter().zip(e.iter()).all(|(a, b)| a <= b))
            {
                count += 1;
            }
        });
        out.push(count);
    }
    out
}

fn enumerate_degree(
    nvars: usize,
    remaining: u32,
    i: usize,
    exps: &mut Vec<u32>,
    f: &mut dyn FnMut(&[u32]),
) {
    if nvars == 0 {
        if remaining == 0 {
            f(exps);
        }
        return;
    }
    if i == nvars - 1 {
        exps[i] = remaining;
        f(exps);
        exps[i] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[i] = e;
        enumerate_degree(nvars, remaining - e, i + 1, exps, f);
    }
    exps[i] = 0;
}

/// Dimension and degree of the ambient ring modulo `I + K`.
pub fn hilbert_data(ideal: &IdealHandle) -> Result<HilbertData> {
    ideal.hilbert()
}

/// Brute-force Hilbert function of the quotient by `I + K` from standard-monomial counts.
pub fn hf_bruteforce(ideal: &IdealHandle, up_to_degree: usize) -> Result<Vec<u64>> {
    let gb = ideal.groebner_degrevlex()?;
    let nvars = ideal.ring().ambient().nvars();
    Ok(count_standard_monomials(
        nvars,
        &gb.leading_monomials(),
        up_to_degree,
    ))
}

/// Hilbert–Samuel multiplicity `e_I(R)` for an m-primary `I`, extracted from the lengths
/// `λ(R / I^n)`, `n = 1..=n_max`, by repeated finite differencing.
pub fn hilbert_samuel_bruteforce(
    ideal: &IdealHandle,
    ring: &QuotientRing,
    n_max: usize,
) -> Result<u64> {
    if !ideal.ring().same_ring(ring) {
        return Err(Error::RingMismatch);
    }
    let rdata = ring.hilbert()?;
    if rdata.is_zero_ring {
        return Err(Error::ZeroRing);
    }
    let d = rdata.dimension;
    let quot = ideal.hilbert()?;
    if quot.is_zero_ring || quot.dimension != 0 {
        return Err(Error::NotMPrimary);
    }
    if n_max < d + 2 {
        return Err(Error::NotStable(n_max));
    }
    let mut lengths = Vec::with_capacity(n_max);
    let mut power = ideal.clone();
    for n in 1..=n_max {
        if n > 1 {
            power = power.product(ideal)?;
        }
        lengths.push(power.hilbert()?.degree as i64);
    }
    let mut diffs = lengths;
    for _ in 0..d {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let k = diffs.len();
    if k < 3 || diffs[k - 1] != diffs[k - 2] || diffs[k - 2] != diffs[k - 3] {
        return Err(Error::NotStable(n_max));
    }
    Ok(diffs[k - 1] as u64)
}
