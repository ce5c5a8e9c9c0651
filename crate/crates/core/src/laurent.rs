//! Exact single-variable Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Polynomials carry a [`Var`] tag. The tag is metadata only, but binary
//! operations refuse to combine polynomials with different tags: the `try_*`
//! methods report [`LaurentError::VariableMismatch`], and the operator impls
//! panic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("cannot combine a polynomial in {0} with one in {1}")]
    VariableMismatch(Var, Var),
    #[error("malformed polynomial text: {0}")]
    Parse(String),
}

/// The variable a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Var {
    /// The Kauffman bracket variable.
    #[default]
    A,
    /// The Jones variable, `t = A^-4`.
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::A => "A",
            Var::T => "t",
        })
    }
}

/// A Laurent polynomial `sum c_e x^e` with integer coefficients.
///
/// Zero coefficients are never stored, so the empty map is the zero polynomial
/// and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    var: Var,
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, coeffs: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn monomial(var: Var, coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `delta = -A^2 - A^-2`, the value of a closed loop in the bracket.
    pub fn loop_value() -> Self {
        Self::from_terms(Var::A, [(2, -1), (-2, -1)])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Reinterprets the coefficients under another variable tag.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// `max_degree - min_degree`.
    pub fn span(&self) -> Result<u64, LaurentError> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => Ok((hi - lo) as u64),
            _ => Err(LaurentError::ZeroPolynomial),
        }
    }

    pub fn coefficient_at(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), LaurentError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(LaurentError::VariableMismatch(self.var, other.var))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.var, other.var, "mixed polynomial variables");
        for (e, c) in &other.coeffs {
            self.add_term(*e, c.clone());
        }
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Multiplies by the single monomial `coeff * x^exp`.
    pub fn scalar_shift(&self, coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(e, c)| (e + exp, c * &coeff)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.var);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// `x -> x^factor` for an integer factor; `factor = -1` is the mirror map.
    pub fn substitute_power(&self, factor: i64) -> Self {
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(e, c)| (e * factor, c.clone())).collect(),
        }
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`
    /// over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || self.var != divisor.var {
            return None;
        }
        let (d_hi, d_lead) = divisor.coeffs.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let d_span = divisor.span().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        while let Some((r_hi, r_lead)) = rem.coeffs.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if rem.span().ok()? < d_span || !(&r_lead % &d_lead).is_zero() {
                return None;
            }
            let q = r_lead / &d_lead;
            let shift = r_hi - d_hi;
            rem = rem.try_sub(&divisor.scalar_shift(q.clone(), shift)).ok()?;
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    /// True when every exponent lies in a single residue class mod `m`.
    pub fn exponents_congruent_mod(&self, m: i64) -> bool {
        let mut it = self.coeffs.keys();
        match it.next() {
            None => true,
            Some(&first) => it.all(|e| (e - first).rem_euclid(m) == 0),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("mixed polynomial variables")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("mixed polynomial variables")
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("mixed polynomial variables")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

/// Terms in descending exponent order, `c*x^e`, joined by ` + ` / ` - `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            if i == 0 {
                write!(f, "{}*{}^{}", c, self.var, e)?;
            } else if c.is_negative() {
                write!(f, " - {}*{}^{}", c.abs(), self.var, e)?;
            } else {
                write!(f, " + {}*{}^{}", c, self.var, e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Parses the [`Display`](fmt::Display) format back. The variable is taken
    /// from the first term; `0` parses as the zero polynomial in `A`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LaurentError::Parse(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "0" {
            return Ok(Self::zero(Var::A));
        }
        let mut var = None;
        let mut out = Self::zero(Var::A);
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);
        for term in terms {
            let term = term.strip_prefix('+').unwrap_or(term);
            let (coeff, rest) = term.split_once('*').ok_or_else(bad)?;
            let (name, exp) = rest.split_once('^').ok_or_else(bad)?;
            let v = match name {
                "A" => Var::A,
                "t" => Var::T,
                _ => return Err(bad()),
            };
            if *var.get_or_insert(v) != v {
                return Err(bad());
            }
            let coeff: BigInt = coeff.parse().map_err(|_| bad())?;
            let exp: i64 = exp.parse().map_err(|_| bad())?;
            out.add_term(exp, coeff);
        }
        Ok(out.with_var(var.unwrap_or(Var::A)))
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one(Var::A)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let p = a(&[(1, 1), (-1, 1)]);
        let q = a(&[(1, 1), (-1, -1)]);
        assert_eq!(&p * &q, a(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn additive_identity() {
        let p = a(&[(3, 2), (-5, -7)]);
        assert_eq!(&p + &LaurentPoly::zero(Var::A), p);
    }

    #[test]
    fn monomials_cancel_to_one() {
        let p = a(&[(3, -1)]);
        let q = a(&[(-3, -1)]);
        assert_eq!(&p * &q, LaurentPoly::one(Var::A));
    }

    #[test]
    fn spans() {
        assert_eq!(LaurentPoly::one(Var::A).span(), Ok(0));
        let p = LaurentPoly::from_terms(Var::T, [(4, 1), (3, -1), (1, 1)]);
        assert_eq!(p.span(), Ok(3));
        assert_eq!(LaurentPoly::zero(Var::T).span(), Err(LaurentError::ZeroPolynomial));
    }

    #[test]
    fn coefficients() {
        let p = a(&[(2, 1), (-2, -1)]);
        assert_eq!(p.coefficient_at(2), BigInt::from(1));
        assert_eq!(p.coefficient_at(0), BigInt::from(0));
        assert_eq!(LaurentPoly::zero(Var::A).coefficient_at(17), BigInt::from(0));
    }

    #[test]
    fn mixing_variables_is_an_error() {
        let p = LaurentPoly::one(Var::A);
        let q = LaurentPoly::one(Var::T);
        assert_eq!(p.try_add(&q), Err(LaurentError::VariableMismatch(Var::A, Var::T)));
        assert!(p.try_mul(&q).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed polynomial variables")]
    fn operator_mixing_panics() {
        let _ = LaurentPoly::one(Var::A) + LaurentPoly::one(Var::T);
    }

    #[test]
    fn display_and_parse() {
        let p = a(&[(2, 1), (-2, -1), (0, 12)]);
        assert_eq!(p.to_string(), "1*A^2 + 12*A^0 - 1*A^-2");
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        assert_eq!(LaurentPoly::zero(Var::A).to_string(), "0");
        let t: LaurentPoly = "-1*t^4 + 1*t^3 + 1*t^1".parse().unwrap();
        assert_eq!(t.var(), Var::T);
        assert_eq!(t.span(), Ok(3));
        assert!("1*A^2 + 1*t^1".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division_by_loop_value() {
        let d = LaurentPoly::loop_value();
        let p = a(&[(7, 3), (1, -2), (-4, 5)]);
        let prod = &p * &d;
        assert_eq!(prod.div_exact(&d), Some(p));
        assert_eq!(a(&[(0, 1)]).div_exact(&d), None);
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..5)
            .prop_map(|terms| LaurentPoly::from_terms(Var::A, terms))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn span_is_additive(p in small_poly(), q in small_poly()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            prop_assert_eq!((&p * &q).span().unwrap(), p.span().unwrap() + q.span().unwrap());
        }

        #[test]
        fn text_round_trip(p in small_poly()) {
            prop_assume!(!p.is_zero());
            prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        }
    }
}
