//! Ring descriptors: variable names, monomial order and the reduction budget.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::polyarith::monomial::MonomialOrder;

/// The ambient polynomial ring `k[x_1, ..., x_n]`, regarded as local at the
/// ideal generated by all variables. The coefficient field is the type
/// parameter of the polynomials living in the ring.
#[derive(Clone, Debug)]
pub struct Ring {
    vars: Vec<String>,
    order: MonomialOrder,
    step_limit: Option<u64>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Arc<Ring>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.is_empty() {
            return Err(AlgebraError::InvalidRing("at least one variable is required".into()));
        }
        if vars.len() > 64 {
            return Err(AlgebraError::InvalidRing("at most 64 variables are supported".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(AlgebraError::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(AlgebraError::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Elimination { block } = order {
            if block > vars.len() {
                return Err(AlgebraError::InvalidRing(format!("block size {block} exceeds variable count")));
            }
        }
        Ok(Arc::new(Ring { vars, order, step_limit: None }))
    }

    /// Grevlex ring on the given variables.
    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> Result<Arc<Ring>> {
        Ring::new(vars, MonomialOrder::Grevlex)
    }

    /// Copy of this ring where every Gröbner computation may perform at most
    /// `limit` S-pair reductions.
    pub fn with_step_limit(&self, limit: Option<u64>) -> Arc<Ring> {
        Arc::new(Ring { step_limit: limit, ..self.clone() })
    }

    pub fn step_limit(&self) -> Option<u64> {
        self.step_limit
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Ambient dimension `d'`.
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        let mut r = Ring::new(&self.vars, order)?;
        Arc::make_mut(&mut r).step_limit = self.step_limit;
        Ok(r)
    }

    /// Derived ring on `vars` (typically a permutation of this ring's variables
    /// plus fresh ones) inheriting the step limit.
    pub(crate) fn derived(&self, vars: Vec<String>, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring { vars, order, step_limit: self.step_limit })
    }

    /// A variable name not used by this ring.
    pub(crate) fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.vars.contains(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }

    /// Human-readable descriptor such as `QQ[x,y,z] grevlex`.
    pub fn describe(&self, field_name: &str) -> String {
        format!("{}[{}] {}", field_name, self.vars.join(","), self.order.name())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.vars.join(","), self.order.name())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Whether two rings are the same (pointer equality short-circuits).
pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_same(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(AlgebraError::RingMismatch)
    }
}
