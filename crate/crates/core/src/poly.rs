//! Sparse univariate polynomials with arbitrary-precision integer
//! coefficients. One type serves both gradings: coefficients of Schur
//! expansions are polynomials in `x`, series coefficients are polynomials
//! in `y`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::Int;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    // exponent -> coefficient, no zero coefficients stored
    coeffs: BTreeMap<u32, Int>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::monomial(0, Int::one())
    }

    pub fn monomial(exp: u32, coeff: Int) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Int {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Int)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: u32, coeff: &Int) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Int::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add_assign(&mut self, other: &IntPoly) {
        for (e, c) in other.terms() {
            self.add_term(e, c);
        }
    }

    pub fn add_scaled(&mut self, other: &IntPoly, scale: &Int) {
        if scale.is_zero() {
            return;
        }
        for (e, c) in other.terms() {
            self.add_term(e, &(c * scale));
        }
    }

    pub fn sub_assign(&mut self, other: &IntPoly) {
        for (e, c) in other.terms() {
            self.add_term(e, &(-c));
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }

    /// Multiply by the monomial `t^shift`.
    pub fn shifted(&self, shift: u32) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// Drop all terms of exponent greater than `max_exp`.
    pub fn truncated(&self, max_exp: u32) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e <= max_exp)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Evaluate at 1, i.e. the sum of all coefficients.
    pub fn eval_one(&self) -> Int {
        let mut acc = Int::zero();
        for (_, c) in self.terms() {
            acc += c;
        }
        acc
    }

    /// Reverse the coefficient order relative to `top`: `t^e ↦ t^{top−e}`.
    /// Panics if a term exceeds `top`.
    pub fn reciprocal(&self, top: u32) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (top - e, c.clone()))
                .collect(),
        }
    }

    /// Render with the given variable name, e.g. `1 + 2*x^3`.
    pub fn display(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            match (e, c.is_one()) {
                (0, _) => write!(out, "{c}").unwrap(),
                (1, true) => write!(out, "{var}").unwrap(),
                (1, false) => write!(out, "{c}*{var}").unwrap(),
                (_, true) => write!(out, "{var}^{e}").unwrap(),
                (_, false) => write!(out, "{c}*{var}^{e}").unwrap(),
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn arithmetic_and_cancellation() {
        let mut p = IntPoly::monomial(2, int(3));
        p.add_term(0, &int(1));
        p.add_term(2, &int(-3));
        assert_eq!(p, IntPoly::one());
        assert_eq!(p.degree(), Some(0));
        assert!(IntPoly::zero().degree().is_none());
    }

    #[test]
    fn mul_and_eval() {
        // (1 + t)^2 = 1 + 2t + t^2
        let mut p = IntPoly::one();
        p.add_term(1, &int(1));
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(1), int(2));
        assert_eq!(sq.eval_one(), int(4));
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn reciprocal_reverses() {
        let mut p = IntPoly::monomial(0, int(5));
        p.add_term(2, &int(7));
        let r = p.reciprocal(2);
        assert_eq!(r.coeff(0), int(7));
        assert_eq!(r.coeff(2), int(5));
    }
}
