//! Standard-graded polynomial rings over a prime field.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::MonomialOrder;

/// `F_p[x_1, ..., x_n]` with named variables and an active monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub(crate) fn valid_var_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        field: PrimeField,
        vars: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_var_name(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidRing(format!(
                    "elimination block {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Ring on `vars` over `F_p` with degrevlex.
    pub fn with_vars<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Arc<Self>> {
        PolyRing::new(PrimeField::new(p)?, vars, MonomialOrder::DegRevLex)
    }

    /// Same variables and field under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        PolyRing::new(self.field, &self.vars, order)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same field and variables, ignoring the order.
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}
