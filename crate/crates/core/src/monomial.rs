//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial, stored as its exponent vector together with the cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let mut degree = 0u32;
        for &e in &exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        })
    }

    /// The monomial `x_var^exp` in `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: exp,
        }
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        })
    }

    /// Product of monomials. Exponent overflow is a hard error and panics.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree - other.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i % 64` is set when variable `i` occurs.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }
}

/// Monomial orders. All variables have weight one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Block order: the first `k` variables are compared first (degrevlex on the block),
    /// the remaining ones break ties (degrevlex). Eliminates the first `k` variables.
    Elimination(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => match u.degree.cmp(&v.degree) {
                Ordering::Equal => {
                    for (x, y) in u.exps.iter().rev().zip(v.exps.iter().rev()) {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::Lex => u.exps.cmp(&v.exps),
            MonomialOrder::Elimination(k) => {
                let k = k.min(u.exps.len());
                match degrevlex(&u.exps[..k], &v.exps[..k]) {
                    Ordering::Equal => degrevlex(&u.exps[k..], &v.exps[k..]),
                    o => o,
                }
            }
        }
    }

    /// Comparison with an arity check.
    pub fn try_compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.nvars() != v.nvars() {
            return Err(Error::ArityMismatch {
                expected: u.nvars(),
                got: v.nvars(),
            });
        }
        Ok(self.compare(u, v))
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" | "dp" => Ok(MonomialOrder::DegRevLex),
            "lex" | "lp" => Ok(MonomialOrder::Lex),
            other => Err(Error::InvalidInput(format!(
                "unknown monomial order `{other}`"
            ))),
        }
    }
}
