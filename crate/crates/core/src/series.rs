//! Truncated character series: weight-vector coefficients that are
//! polynomials in `y`, graded by powers of `x` up to a truncation depth.
//! Used on both sides of the limit-of-characters comparison.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::{int, Int};
use crate::combinatorics::WeightVector;
use crate::degeneration::BigradedCharacter;
use crate::poly::IntPoly;

/// `Σ_{η,i} c_{η,i}(y) e^η x^i` with `i ≤ truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    r: u32,
    truncation: u32,
    entries: BTreeMap<(WeightVector, u32), IntPoly>,
}

impl CharacterSeries {
    pub fn new(r: u32, truncation: u32) -> Self {
        CharacterSeries {
            r,
            truncation,
            entries: BTreeMap::new(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn add_term(&mut self, weight: WeightVector, x: u32, coeff: &IntPoly) {
        if x > self.truncation || coeff.is_zero() {
            return;
        }
        assert_eq!(weight.len(), self.r as usize);
        let entry = self.entries.entry((weight, x)).or_default();
        entry.add_assign(coeff);
        if entry.is_zero() {
            self.entries.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coeff(&self, weight: &WeightVector, x: u32) -> IntPoly {
        self.entries
            .get(&(weight.clone(), x))
            .cloned()
            .unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(WeightVector, u32), &IntPoly)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// All weights with a nonzero coefficient somewhere.
    pub fn weights(&self) -> Vec<WeightVector> {
        let mut out: Vec<WeightVector> = self.entries.keys().map(|(w, _)| w.clone()).collect();
        out.dedup();
        out
    }

    /// Shift every weight by `delta` (e.g. a Det twist by `−Nτ`).
    pub fn shift_weights(&self, delta: &WeightVector) -> CharacterSeries {
        let mut out = CharacterSeries::new(self.r, self.truncation);
        for ((w, x), c) in self.entries() {
            out.add_term(w.add(delta), *x, c);
        }
        out
    }

    /// Restrict to `x ≤ depth`.
    pub fn truncated(&self, depth: u32) -> CharacterSeries {
        let mut out = CharacterSeries::new(self.r, depth.min(self.truncation));
        for ((w, x), c) in self.entries() {
            out.add_term(w.clone(), *x, c);
        }
        out
    }

    /// The `e^η → 1` specialization: a `y`-polynomial per power of `x`.
    pub fn xy_counts(&self) -> BTreeMap<u32, IntPoly> {
        let mut out: BTreeMap<u32, IntPoly> = BTreeMap::new();
        for ((_, x), c) in self.entries() {
            out.entry(*x).or_default().add_assign(c);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// The `e^η → 1, y → 1` specialization: a count per power of `x`.
    pub fn dimension_counts(&self) -> BTreeMap<u32, Int> {
        self.xy_counts()
            .into_iter()
            .map(|(x, c)| (x, c.eval_one()))
            .collect()
    }

    /// Coefficient-wise equality up to `x ≤ depth`.
    pub fn agrees_with(&self, other: &CharacterSeries, depth: u32) -> bool {
        assert!(depth <= self.truncation && depth <= other.truncation);
        let keys: alloc::collections::BTreeSet<(WeightVector, u32)> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .filter(|(_, x)| *x <= depth)
            .cloned()
            .collect();
        keys.iter()
            .all(|(w, x)| self.coeff(w, *x) == other.coeff(w, *x))
    }

    /// First x-power (≤ depth) where the two series disagree.
    pub fn first_disagreement(&self, other: &CharacterSeries, depth: u32) -> Option<u32> {
        (0..=depth).find(|&x| {
            let keys: alloc::collections::BTreeSet<WeightVector> = self
                .entries
                .keys()
                .chain(other.entries.keys())
                .filter(|(_, xx)| *xx == x)
                .map(|(w, _)| w.clone())
                .collect();
            keys.iter().any(|w| self.coeff(w, x) != other.coeff(w, x))
        })
    }
}

/// `Rec_x` of a bigraded character: `x^i ↦ x^{top−i}` with
/// `top = deg_x ch`, keeping the `y`-grading, truncated at `x ≤ depth`.
pub fn reciprocal_series(ch: &BigradedCharacter, depth: u32) -> CharacterSeries {
    let top = ch.max_x();
    let mut out = CharacterSeries::new(ch.r(), depth);
    for ((w, x, y), d) in ch.entries() {
        out.add_term(w.clone(), top - x, &IntPoly::monomial(*y, int(*d as i64)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::degeneration::bigraded_character_at;

    #[test]
    fn reciprocal_of_catalan_five() {
        let ch = bigraded_character_at(&Partition::new([2, 0]), 2, 2);
        let rec = reciprocal_series(&ch, 2);
        // Rec_x flips the degree-0 bulk to x^1; the lone x^1 state lands at x^0.
        let shifted = rec.shift_weights(&WeightVector::new([-1, -1]));
        assert_eq!(shifted.coeff(&WeightVector::new([0, 0]), 0), IntPoly::one());
        let x1 = shifted.coeff(&WeightVector::new([0, 0]), 1);
        assert_eq!(x1.coeff(0), int(1));
        assert_eq!(x1.coeff(1), int(1));
        assert_eq!(
            shifted.coeff(&WeightVector::new([1, -1]), 1),
            IntPoly::one()
        );
        assert!(shifted.coeff(&WeightVector::new([0, 0]), 2).is_zero());
    }

    #[test]
    fn agreement_and_disagreement() {
        let mut a = CharacterSeries::new(2, 3);
        let mut b = CharacterSeries::new(2, 3);
        let w = WeightVector::new([0, 0]);
        a.add_term(w.clone(), 0, &IntPoly::one());
        b.add_term(w.clone(), 0, &IntPoly::one());
        a.add_term(w.clone(), 2, &IntPoly::one());
        assert!(a.agrees_with(&b, 1));
        assert!(!a.agrees_with(&b, 2));
        assert_eq!(a.first_disagreement(&b, 3), Some(2));
    }
}
