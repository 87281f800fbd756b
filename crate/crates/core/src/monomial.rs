//! Exponent-vector arithmetic for monomials, including polarization.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::context::{same_context, PolynomialContext};
use crate::error::{Error, Result};

/// A monomial in a fixed context, stored as its multidegree (exponent
/// vector). Immutable; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    context: Arc<PolynomialContext>,
    exponents: Vec<BigUint>,
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Equal monomials share equal exponent vectors; the context is not
        // hashed so that hashing stays cheap in generator-set closures.
        self.exponents.hash(state);
    }
}

impl Monomial {
    pub(crate) fn new_unchecked(context: Arc<PolynomialContext>, exponents: Vec<BigUint>) -> Self {
        debug_assert_eq!(context.num_vars(), exponents.len());
        Monomial { context, exponents }
    }

    pub fn context(&self) -> &Arc<PolynomialContext> {
        &self.context
    }

    pub fn exponents(&self) -> &[BigUint] {
        &self.exponents
    }

    /// The multidegree of the monomial, i.e. a copy of its exponent vector.
    pub fn to_multidegree(&self) -> Vec<BigUint> {
        self.exponents.clone()
    }

    pub fn exponent(&self, index: usize) -> &BigUint {
        &self.exponents[index]
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> BigUint {
        self.exponents
            .iter()
            .fold(BigUint::zero(), |acc, e| acc + e)
    }

    /// Indices of the variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|e| e.is_zero())
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|e| *e <= BigUint::one())
    }

    pub fn same_context(&self, other: &Monomial) -> bool {
        same_context(&self.context, &other.context)
    }

    fn require_same_context(&self, other: &Monomial) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Componentwise sum of exponents.
    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        self.require_same_context(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Monomial::new_unchecked(Arc::clone(&self.context), exponents))
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.require_same_context(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.max(b).clone())
            .collect();
        Ok(Monomial::new_unchecked(Arc::clone(&self.context), exponents))
    }

    /// Componentwise `<=` test: does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.require_same_context(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Polarization `u^p`: the squarefree monomial in the derived context
    /// determined by `bound`, with exponent 1 on `x_{i,j}` exactly for
    /// `j <= deg_{x_i}(u)`. All polarizations sharing one `bound` land in
    /// equal contexts, so they can be combined into one ideal.
    pub fn polarize(&self, bound: &[BigUint]) -> Result<Monomial> {
        let derived = polarized_context(&self.context, bound)?;
        self.polarize_into(bound, &derived)
    }

    pub(crate) fn polarize_into(
        &self,
        bound: &[BigUint],
        derived: &Arc<PolynomialContext>,
    ) -> Result<Monomial> {
        if bound.len() != self.context.num_vars() {
            return Err(Error::LengthMismatch {
                expected: self.context.num_vars(),
                got: bound.len(),
            });
        }
        let mut exponents = Vec::with_capacity(derived.num_vars());
        for (i, limit) in bound.iter().enumerate() {
            let exp = &self.exponents[i];
            if exp > limit {
                return Err(Error::BoundViolated {
                    variable: self.context.variable_name(i).to_string(),
                    exponent: exp.to_string(),
                    bound: limit.to_string(),
                });
            }
            let limit = big_to_usize(limit)?;
            let exp = big_to_usize(exp)?;
            for j in 0..limit {
                exponents.push(if j < exp {
                    BigUint::one()
                } else {
                    BigUint::zero()
                });
            }
        }
        derived.monomial(exponents)
    }
}

/// The derived context of a polarization with the given bounding
/// multidegree: variables `x_{i,j}` named `<name>_<j>` for `1 <= j <=
/// bound_i`, grouped by original variable and ordered by `(i, j)`.
pub fn polarized_context(
    base: &Arc<PolynomialContext>,
    bound: &[BigUint],
) -> Result<Arc<PolynomialContext>> {
    if bound.len() != base.num_vars() {
        return Err(Error::LengthMismatch {
            expected: base.num_vars(),
            got: bound.len(),
        });
    }
    let mut variables = Vec::new();
    for (i, limit) in bound.iter().enumerate() {
        let limit = big_to_usize(limit)?;
        for j in 1..=limit {
            variables.push(format!("{}_{}", base.variable_name(i), j));
        }
    }
    if variables.is_empty() {
        return Err(Error::InvalidVariables(
            "polarization bound is identically zero; the derived ring would have no variables"
                .to_string(),
        ));
    }
    PolynomialContext::new(variables, base.field().clone())
}

fn big_to_usize(value: &BigUint) -> Result<usize> {
    value
        .to_usize()
        .ok_or_else(|| Error::Overflow(format!("exponent {value} does not fit in usize")))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.exponents.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.context.variable_name(i))?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(names: &[&str]) -> Arc<PolynomialContext> {
        PolynomialContext::rationals(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn xyz() -> Arc<PolynomialContext> {
        ctx(&["x", "y", "z"])
    }

    #[test]
    fn multidegree_round_trip() {
        let c = xyz();
        let m = c.monomial_from_ints(&[2, 0, 1]).unwrap();
        assert_eq!(
            m.to_multidegree(),
            vec![BigUint::from(2u32), BigUint::zero(), BigUint::from(1u32)]
        );
        assert_eq!(c.monomial(m.to_multidegree()).unwrap(), m);
        assert_eq!(c.unit_monomial().to_multidegree(), vec![BigUint::zero(); 3]);
    }

    #[test]
    fn support_and_degree() {
        let c = xyz();
        let m = c.monomial_from_ints(&[2, 0, 1]).unwrap();
        assert_eq!(m.support(), vec![0, 2]);
        assert_eq!(m.degree(), BigUint::from(3u32));
        assert!(c.unit_monomial().support().is_empty());
        let all = c.monomial_from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(all.support(), vec![0, 1, 2]);
    }

    #[test]
    fn lcm_divides_multiply() {
        let c = xyz();
        let a = c.monomial_from_ints(&[2, 1, 0]).unwrap();
        let b = c.monomial_from_ints(&[0, 3, 1]).unwrap();
        assert_eq!(a.lcm(&b).unwrap().to_string(), "x^2*y^3*z");
        let u = c.monomial_from_ints(&[1, 1, 0]).unwrap();
        let v = c.monomial_from_ints(&[2, 1, 1]).unwrap();
        assert!(u.divides(&v).unwrap());
        assert!(!v.divides(&u).unwrap());
        assert_eq!(
            a.multiply(&b).unwrap().to_string(),
            "x^2*y^4*z"
        );
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = xyz().monomial_from_ints(&[1, 0, 0]).unwrap();
        let b = ctx(&["u", "v", "w"]).monomial_from_ints(&[1, 0, 0]).unwrap();
        assert!(matches!(a.lcm(&b), Err(Error::ContextMismatch)));
        assert!(matches!(a.multiply(&b), Err(Error::ContextMismatch)));
        assert!(matches!(a.divides(&b), Err(Error::ContextMismatch)));
    }

    #[test]
    fn polarize_basic() {
        let c = ctx(&["x", "y"]);
        let u = c.monomial_from_ints(&[2, 1]).unwrap();
        let bound = vec![BigUint::from(2u32), BigUint::from(1u32)];
        let p = u.polarize(&bound).unwrap();
        assert_eq!(p.to_string(), "x_1*x_2*y_1");
        assert_eq!(
            p.context().variables(),
            &["x_1".to_string(), "x_2".to_string(), "y_1".to_string()]
        );
        assert!(p.is_squarefree());
        assert_eq!(p.degree(), u.degree());
    }

    #[test]
    fn polarize_power_splits_into_distinct_variables() {
        let c = ctx(&["a"]);
        let u = c.monomial_from_ints(&[3]).unwrap();
        let p = u.polarize(&[BigUint::from(3u32)]).unwrap();
        assert_eq!(p.to_string(), "a_1*a_2*a_3");
    }

    #[test]
    fn polarize_squarefree_is_renaming() {
        let c = xyz();
        let u = c.monomial_from_ints(&[1, 0, 1]).unwrap();
        let p = u.polarize(&u.to_multidegree()).unwrap();
        assert_eq!(p.to_string(), "x_1*z_1");
        assert_eq!(p.context().variables(), &["x_1".to_string(), "z_1".to_string()]);
    }

    #[test]
    fn polarize_bound_violations() {
        let c = ctx(&["x", "y"]);
        let u = c.monomial_from_ints(&[2, 1]).unwrap();
        let too_small = vec![BigUint::from(1u32), BigUint::from(1u32)];
        assert!(matches!(
            u.polarize(&too_small),
            Err(Error::BoundViolated { .. })
        ));
        let zero = vec![BigUint::zero(), BigUint::zero()];
        assert!(matches!(
            c.unit_monomial().polarize(&zero),
            Err(Error::InvalidVariables(_))
        ));
    }

    #[test]
    fn rendering_omits_unit_powers() {
        let c = xyz();
        assert_eq!(c.monomial_from_ints(&[1, 0, 1]).unwrap().to_string(), "x*z");
        assert_eq!(c.monomial_from_ints(&[0, 0, 0]).unwrap().to_string(), "1");
        assert_eq!(
            c.monomial_from_ints(&[0, 10, 0]).unwrap().to_string(),
            "y^10"
        );
    }

    fn arb_exps() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
        let v = prop::collection::vec(0i64..=4, 4);
        (v.clone(), v)
    }

    proptest! {
        #[test]
        fn degree_is_additive_and_support_is_union((a, b) in arb_exps()) {
            let c = ctx(&["x1", "x2", "x3", "x4"]);
            let u = c.monomial_from_ints(&a).unwrap();
            let v = c.monomial_from_ints(&b).unwrap();
            let uv = u.multiply(&v).unwrap();
            prop_assert_eq!(uv.degree(), u.degree() + v.degree());
            let mut union: Vec<usize> = u.support();
            for i in v.support() {
                if !union.contains(&i) {
                    union.push(i);
                }
            }
            union.sort_unstable();
            prop_assert_eq!(uv.support(), union);
        }

        #[test]
        fn lcm_laws((a, b) in arb_exps()) {
            let c = ctx(&["x1", "x2", "x3", "x4"]);
            let u = c.monomial_from_ints(&a).unwrap();
            let v = c.monomial_from_ints(&b).unwrap();
            let l = u.lcm(&v).unwrap();
            prop_assert!(u.divides(&l).unwrap());
            prop_assert!(v.divides(&l).unwrap());
            prop_assert_eq!(&l, &v.lcm(&u).unwrap());
            prop_assert_eq!(&l, &u.lcm(&l).unwrap());
            // disjoint supports exactly when lcm equals the product
            let disjoint = u.support().iter().all(|i| !v.support().contains(i));
            prop_assert_eq!(disjoint, l == u.multiply(&v).unwrap());
        }

        #[test]
        fn polarization_is_squarefree_and_degree_preserving((a, b) in arb_exps()) {
            let c = ctx(&["x1", "x2", "x3", "x4"]);
            let u = c.monomial_from_ints(&a).unwrap();
            let v = c.monomial_from_ints(&b).unwrap();
            let bound: Vec<BigUint> = u
                .exponents()
                .iter()
                .zip(v.exponents())
                .map(|(x, y)| x.max(y).clone())
                .collect();
            if bound.iter().all(|e| e.is_zero()) {
                return Ok(());
            }
            let p = u.polarize(&bound).unwrap();
            prop_assert!(p.is_squarefree());
            prop_assert_eq!(p.degree(), u.degree());
            // divisibility is preserved and reflected by polarization
            let q = v.polarize(&bound).unwrap();
            prop_assert_eq!(
                u.divides(&v).unwrap(),
                p.divides(&q).unwrap()
            );
        }
    }
}
