//! The ambient polynomial ring data shared by monomials and ideals.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Coefficient-field selector. Homological invariants (Betti numbers, depth)
/// can depend on the characteristic; everything else is characteristic-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldTag {
    /// The rational numbers.
    Rationals,
    /// The prime field with `p` elements.
    Prime(u64),
}

impl FieldTag {
    /// Builds the prime-field tag, validating that `p` is prime and small
    /// enough for overflow-free modular elimination (p < 2^31).
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::UnsupportedField(format!(
                "characteristic {p} is too large (must be below 2^31)"
            )));
        }
        if !is_prime(p) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        Ok(FieldTag::Prime(p))
    }

    /// Parses a field label: `QQ` or `F<p>` (e.g. `F2`, `F32003`).
    pub fn parse(label: &str) -> Result<Self> {
        if label == "QQ" {
            return Ok(FieldTag::Rationals);
        }
        if let Some(digits) = label.strip_prefix('F') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::UnsupportedField(label.to_string()))?;
                return Self::prime(p);
            }
        }
        Err(Error::UnsupportedField(label.to_string()))
    }

    pub fn label(&self) -> String {
        match self {
            FieldTag::Rationals => "QQ".to_string(),
            FieldTag::Prime(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The ambient ring: an ordered list of distinct variable names over a
/// coefficient field. Contexts are immutable and shared by `Arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialContext {
    variables: Vec<String>,
    field: FieldTag,
}

impl PolynomialContext {
    pub fn new(variables: Vec<String>, field: FieldTag) -> Result<Arc<Self>> {
        if variables.is_empty() {
            return Err(Error::InvalidVariables(
                "a polynomial context needs at least one variable".to_string(),
            ));
        }
        let mut seen = HashSet::new();
        for name in &variables {
            if name.is_empty() {
                return Err(Error::InvalidVariables(
                    "variable names must be nonempty".to_string(),
                ));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidVariables(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        Ok(Arc::new(PolynomialContext { variables, field }))
    }

    /// Context over the rationals, the default everywhere.
    pub fn rationals(variables: Vec<String>) -> Result<Arc<Self>> {
        Self::new(variables, FieldTag::Rationals)
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_name(&self, index: usize) -> &str {
        &self.variables[index]
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldTag {
        &self.field
    }

    /// The monomial with the given exponent vector.
    pub fn monomial(self: &Arc<Self>, exponents: Vec<BigUint>) -> Result<Monomial> {
        if exponents.len() != self.num_vars() {
            return Err(Error::LengthMismatch {
                expected: self.num_vars(),
                got: exponents.len(),
            });
        }
        Ok(Monomial::new_unchecked(Arc::clone(self), exponents))
    }

    /// The monomial `x^a` for a signed integer vector; negative entries are
    /// rejected.
    pub fn monomial_from_signed(self: &Arc<Self>, entries: &[BigInt]) -> Result<Monomial> {
        if entries.len() != self.num_vars() {
            return Err(Error::LengthMismatch {
                expected: self.num_vars(),
                got: entries.len(),
            });
        }
        let mut exponents = Vec::with_capacity(entries.len());
        for (index, e) in entries.iter().enumerate() {
            if e.is_negative() {
                return Err(Error::NegativeEntry { index });
            }
            exponents.push(e.magnitude().clone());
        }
        Ok(Monomial::new_unchecked(Arc::clone(self), exponents))
    }

    /// Convenience constructor from machine integers (negative entries are
    /// rejected, mirroring `monomial_from_signed`).
    pub fn monomial_from_ints(self: &Arc<Self>, entries: &[i64]) -> Result<Monomial> {
        let signed: Vec<BigInt> = entries.iter().map(|&e| BigInt::from(e)).collect();
        self.monomial_from_signed(&signed)
    }

    /// The unit monomial 1 (all exponents zero).
    pub fn unit_monomial(self: &Arc<Self>) -> Monomial {
        Monomial::new_unchecked(Arc::clone(self), vec![BigUint::zero(); self.num_vars()])
    }

    /// The monomial `x_i`.
    pub fn variable_monomial(self: &Arc<Self>, index: usize) -> Monomial {
        let mut exponents = vec![BigUint::zero(); self.num_vars()];
        exponents[index] = BigUint::from(1u32);
        Monomial::new_unchecked(Arc::clone(self), exponents)
    }
}

/// Value equality on shared contexts, with a pointer fast path.
pub(crate) fn same_context(a: &Arc<PolynomialContext>, b: &Arc<PolynomialContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
