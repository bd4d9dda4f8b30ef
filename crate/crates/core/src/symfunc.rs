//! A symmetric-function engine over the Schur basis: products of
//! elementary symmetric functions expanded by the dual Pieri rule with row
//! restriction, Kostka numbers by strip peeling, and the graded character
//! built from `A_n(ρ)` through the Frobenius map.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{int, Int};
use crate::combinatorics::{enumerate_a, rho_of_xi, Partition, WeightVector};
use crate::poly::IntPoly;

/// A linear combination of Schur functions with coefficients that are
/// integer polynomials in the grading variable `x`. All partitions in one
/// expansion have the same size (homogeneity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: u32,
    terms: BTreeMap<Partition, IntPoly>,
}

impl SchurExpansion {
    pub fn zero(degree: u32) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single term `s_λ` with coefficient `x^0`.
    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = lambda.size();
        terms.insert(lambda, IntPoly::one());
        SchurExpansion { degree, terms }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &IntPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> IntPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &IntPoly) {
        if coeff.is_zero() {
            return;
        }
        assert_eq!(lambda.size(), self.degree, "inhomogeneous Schur expansion");
        let entry = self.terms.entry(lambda).or_default();
        entry.add_assign(coeff);
        if entry.is_zero() {
            let zeros: Vec<Partition> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(l, _)| l.clone())
                .collect();
            for l in zeros {
                self.terms.remove(&l);
            }
        }
    }

    pub fn add_assign(&mut self, other: &SchurExpansion) {
        assert_eq!(self.degree, other.degree, "inhomogeneous Schur expansion");
        for (l, c) in other.terms() {
            self.add_term(l.clone(), c);
        }
    }

    /// Multiply every coefficient by `x^shift`.
    pub fn shifted(&self, shift: u32) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.shifted(shift)))
                .collect(),
        }
    }

    /// Largest `x`-exponent appearing in any coefficient.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }
}

/// All `μ ⊇ λ` such that `μ/λ` is a vertical strip of size `m` with at
/// most `max_rows` rows (at most one new box per row).
fn vertical_strips(lambda: &Partition, m: u32, max_rows: u32) -> Vec<Partition> {
    let rows = max_rows as usize;
    let mut out = Vec::new();
    let mut mu: Vec<u32> = Vec::with_capacity(rows);
    fn go(
        lambda: &Partition,
        row: usize,
        rows: usize,
        left: u32,
        mu: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(mu.clone()));
            }
            return;
        }
        let base = lambda.part(row + 1);
        for add in 0..=left.min(1) {
            let val = base + add;
            // weakly decreasing rows
            if row > 0 && val > mu[row - 1] {
                continue;
            }
            mu.push(val);
            go(lambda, row + 1, rows, left - add, mu, out);
            mu.pop();
        }
    }
    if m > max_rows {
        return out;
    }
    go(lambda, 0, rows, m, &mut mu, &mut out);
    out
}

/// Schur expansion of `e_{a_1} ⋯ e_{a_n}` with all partitions of more than
/// `r` rows discarded at every step (the `gl_r` character of
/// `⊗_i ∧^{a_i} V_r`). An entry `a_i > r` makes the product zero.
pub fn e_product_to_schur(a: &[u32], r: u32) -> SchurExpansion {
    let degree: u32 = a.iter().sum();
    if a.iter().any(|&ai| ai > r) {
        return SchurExpansion::zero(degree);
    }
    let mut acc = SchurExpansion::schur(Partition::empty());
    for &ai in a {
        let mut next = SchurExpansion::zero(acc.degree() + ai);
        for (lambda, coeff) in acc.terms() {
            for mu in vertical_strips(lambda, ai, r) {
                next.add_term(mu, coeff);
            }
        }
        acc = next;
    }
    debug_assert_eq!(acc.degree(), degree);
    acc
}

/// The graded `gl_r` character of `V(ξ)` in the Schur basis:
/// `Σ_{a ∈ A_n(ρ(ξ))} x^{|ρ| − Σ_i i·a_i} · e_{a_1} ⋯ e_{a_n}` restricted
/// to at most `r` rows. The `x^0` part is exactly `s_ξ`.
pub fn frobenius_character(xi: &Partition, r: u32) -> SchurExpansion {
    assert!(xi.len() <= r as usize, "xi must have at most r parts");
    let n = xi.size();
    let rho = rho_of_xi(xi);
    let rho_size = rho.size() as u64;
    let mut acc = SchurExpansion::zero(n);
    for a in enumerate_a(n, &rho) {
        let weighted: u64 = a
            .iter()
            .enumerate()
            .map(|(i, &ai)| (i as u64 + 1) * ai as u64)
            .sum();
        let grade = rho_size
            .checked_sub(weighted)
            .expect("parking grade must be non-negative") as u32;
        acc.add_assign(&e_product_to_schur(&a, r).shifted(grade));
    }
    acc
}

/// Memoized Kostka numbers `K(λ, η)`: semistandard tableaux of shape λ and
/// content η, by peeling the horizontal strip of the largest letter.
/// Contents are sorted first, so the memo is shared across permutations.
#[derive(Default)]
pub struct KostkaTable {
    memo: BTreeMap<(Partition, Partition), Int>,
}

impl KostkaTable {
    pub fn new() -> Self {
        KostkaTable::default()
    }

    pub fn kostka(&mut self, lambda: &Partition, eta: &WeightVector) -> Int {
        if !eta.is_effective() {
            return Int::zero();
        }
        if eta.sum() != lambda.size() as i64 {
            return Int::zero();
        }
        let mut content: Vec<u32> = eta.coords().iter().map(|&c| c as u32).collect();
        content.sort_unstable_by(|a, b| b.cmp(a));
        self.sorted(lambda, &Partition::new(content))
    }

    fn sorted(&mut self, lambda: &Partition, content: &Partition) -> Int {
        if content.is_empty() {
            return if lambda.is_empty() {
                Int::one()
            } else {
                Int::zero()
            };
        }
        if let Some(v) = self.memo.get(&(lambda.clone(), content.clone())) {
            return v.clone();
        }
        let k = content.len();
        let last = content.part(k);
        let rest = Partition::new(content.parts()[..k - 1].to_vec());
        let mut acc = Int::zero();
        for mu in horizontal_substrips(lambda, last) {
            acc += self.sorted(&mu, &rest);
        }
        self.memo
            .insert((lambda.clone(), content.clone()), acc.clone());
        acc
    }
}

/// All `μ ⊆ λ` such that `λ/μ` is a horizontal strip of size `m`
/// (at most one removed box per column): `λ_{i+1} ≤ μ_i ≤ λ_i`.
fn horizontal_substrips(lambda: &Partition, m: u32) -> Vec<Partition> {
    let rows = lambda.len();
    let mut out = Vec::new();
    fn go(
        lambda: &Partition,
        row: usize,
        rows: usize,
        left: u32,
        mu: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(mu.clone()));
            }
            return;
        }
        let hi = lambda.part(row + 1);
        let lo = lambda.part(row + 2).max(hi.saturating_sub(left));
        for val in lo..=hi {
            let removed = hi - val;
            if removed > left {
                continue;
            }
            // horizontal strip: row below can't keep more than this row keeps
            if row > 0 && val > mu[row - 1] {
                continue;
            }
            mu.push(val);
            go(lambda, row + 1, rows, left - removed, mu, out);
            mu.pop();
        }
    }
    go(lambda, 0, rows, m, &mut Vec::new(), &mut out);
    out
}

/// Weight multiplicity of `η` in the expansion: `Σ_λ coeff_λ(x) · K(λ, η)`.
pub fn weight_multiplicity(
    exp: &SchurExpansion,
    eta: &WeightVector,
    table: &mut KostkaTable,
) -> IntPoly {
    let mut out = IntPoly::zero();
    if !eta.is_effective() || eta.sum() != exp.degree() as i64 {
        return out;
    }
    for (lambda, coeff) in exp.terms() {
        let k = table.kostka(lambda, eta);
        out.add_scaled(coeff, &k);
    }
    out
}

/// Dimension of the irreducible `gl_r` module `π^λ` by the Weyl dimension
/// formula `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
pub fn glr_dimension(lambda: &Partition, r: u32) -> Int {
    assert!(lambda.len() <= r as usize);
    let r = r as usize;
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 1..=r {
        for j in (i + 1)..=r {
            let li = lambda.part(i) as i64;
            let lj = lambda.part(j) as i64;
            num *= int(li - lj + j as i64 - i as i64);
            den *= int(j as i64 - i as i64);
        }
    }
    num / den
}

/// `Σ_λ coeff_λ(x) · dim π^λ_{gl_r}` as a polynomial in `x`.
pub fn total_dimension(exp: &SchurExpansion, r: u32) -> IntPoly {
    let mut out = IntPoly::zero();
    for (lambda, coeff) in exp.terms() {
        out.add_scaled(coeff, &glr_dimension(lambda, r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::higher_catalan;

    fn poly_const(c: i64) -> IntPoly {
        IntPoly::monomial(0, int(c))
    }

    #[test]
    fn e_products() {
        // e_1 · e_1 = s_(2) + s_(1,1)
        let exp = e_product_to_schur(&[1, 1], 2);
        assert_eq!(exp.coeff(&Partition::new([2])), poly_const(1));
        assert_eq!(exp.coeff(&Partition::new([1, 1])), poly_const(1));
        // e_2 = s_(1,1)
        let exp = e_product_to_schur(&[2], 2);
        assert_eq!(exp.coeff(&Partition::new([1, 1])), poly_const(1));
        assert_eq!(exp.terms().count(), 1);
        // ∧²(1-dimensional) = 0
        assert!(e_product_to_schur(&[2], 1).is_zero());
    }

    #[test]
    fn frobenius_small() {
        // ξ = (1): a one-box module, single term s_(1) at x^0
        let exp = frobenius_character(&Partition::new([1]), 2);
        assert_eq!(exp.coeff(&Partition::new([1])), poly_const(1));
        assert_eq!(exp.terms().count(), 1);

        // ξ = (2,0), r = 2: x^0·(s_2 + s_11) + x^1·s_11, total dimension 5
        let exp = frobenius_character(&Partition::new([2, 0]), 2);
        let mut expect_11 = poly_const(1);
        expect_11.add_term(1, &int(1));
        assert_eq!(exp.coeff(&Partition::new([1, 1])), expect_11);
        assert_eq!(exp.coeff(&Partition::new([2])), poly_const(1));
        assert_eq!(total_dimension(&exp, 2).eval_one(), int(5));

        // ξ = (1,1), r = 2: A_2((1,1)) = {(2,0)}, so the lone term is s_(1,1)
        let exp = frobenius_character(&Partition::new([1, 1]), 2);
        assert_eq!(exp.coeff(&Partition::new([1, 1])), poly_const(1));
        assert_eq!(exp.terms().count(), 1);
    }

    #[test]
    fn s_xi_appears_once_at_x_zero() {
        // The cyclic vector spans the ξ-highest-weight line in degree 0.
        // (Other Schur terms may share degree 0: for ξ=(2,2) the layer is
        // e_2·e_2 = s_22 + s_211.)
        for xi in [
            Partition::new([2, 0]),
            Partition::new([3, 1]),
            Partition::new([2, 2]),
            Partition::new([3]),
        ] {
            let exp = frobenius_character(&xi, 3);
            assert_eq!(exp.coeff(&xi).coeff(0), int(1), "xi = {xi}");
        }
        let exp = frobenius_character(&Partition::new([2, 2]), 3);
        assert_eq!(exp.coeff(&Partition::new([2, 1, 1])).coeff(0), int(1));
    }

    #[test]
    fn kostka_values() {
        let mut table = KostkaTable::new();
        assert_eq!(
            table.kostka(&Partition::new([2, 1]), &WeightVector::new([1, 1, 1])),
            int(2)
        );
        assert_eq!(
            table.kostka(&Partition::new([2, 1]), &WeightVector::new([2, 1])),
            int(1)
        );
        assert_eq!(
            table.kostka(&Partition::new([1, 1]), &WeightVector::new([2, 0])),
            int(0)
        );
        assert_eq!(
            table.kostka(&Partition::new([2, 1]), &WeightVector::new([1, 2])),
            int(1)
        );
        assert_eq!(
            table.kostka(&Partition::new([2, 1]), &WeightVector::new([-1, 2, 2])),
            int(0)
        );
    }

    #[test]
    fn kostka_matches_brute_force_ssyt() {
        // independent oracle: enumerate all fillings and filter SSYT
        fn ssyt_count(lambda: &Partition, content: &[u32]) -> u64 {
            let rows: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
            let cells: Vec<(usize, usize)> = rows
                .iter()
                .enumerate()
                .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
                .collect();
            let letters = content.len();
            let mut filling = alloc::vec![0usize; cells.len()];
            let mut count = 0u64;
            fn go(
                pos: usize,
                cells: &[(usize, usize)],
                filling: &mut [usize],
                letters: usize,
                content: &[u32],
                used: &mut [u32],
                count: &mut u64,
            ) {
                if pos == cells.len() {
                    if used.iter().zip(content).all(|(u, c)| u == c) {
                        *count += 1;
                    }
                    return;
                }
                let (i, j) = cells[pos];
                for letter in 0..letters {
                    if used[letter] >= content[letter] {
                        continue;
                    }
                    // weakly increasing along rows, strictly down columns
                    if j > 0 {
                        let left = filling[cells.iter().position(|&c| c == (i, j - 1)).unwrap()];
                        if letter < left {
                            continue;
                        }
                    }
                    if i > 0 {
                        let up = filling[cells.iter().position(|&c| c == (i - 1, j)).unwrap()];
                        if letter <= up {
                            continue;
                        }
                    }
                    filling[pos] = letter;
                    used[letter] += 1;
                    go(pos + 1, cells, filling, letters, content, used, count);
                    used[letter] -= 1;
                }
            }
            let mut used = alloc::vec![0u32; letters];
            go(
                0,
                &cells,
                &mut filling,
                letters,
                content,
                &mut used,
                &mut count,
            );
            count
        }

        let mut table = KostkaTable::new();
        for lambda in [
            Partition::new([2, 1]),
            Partition::new([3, 1]),
            Partition::new([2, 2]),
            Partition::new([2, 1, 1]),
        ] {
            let n = lambda.size();
            for eta in compositions(n, 3) {
                let brute = ssyt_count(&lambda, &eta);
                let got = table.kostka(
                    &lambda,
                    &WeightVector::new(eta.iter().map(|&c| c as i64).collect::<Vec<_>>()),
                );
                assert_eq!(got, int(brute as i64), "lambda = {lambda}, eta = {eta:?}");
            }
        }
    }

    fn compositions(n: u32, slots: u32) -> Vec<Vec<u32>> {
        fn go(n: u32, slots: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if slots == 0 {
                if n == 0 {
                    out.push(prefix.clone());
                }
                return;
            }
            for a in 0..=n {
                prefix.push(a);
                go(n - a, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, slots, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn weight_multiplicity_examples() {
        let mut table = KostkaTable::new();
        let exp = frobenius_character(&Partition::new([2, 0]), 2);
        let wm = weight_multiplicity(&exp, &WeightVector::new([1, 1]), &mut table);
        assert_eq!(wm.eval_one(), int(3));
        assert_eq!(wm.coeff(0), int(2));
        assert_eq!(wm.coeff(1), int(1));
        let neg = weight_multiplicity(&exp, &WeightVector::new([3, -1]), &mut table);
        assert!(neg.is_zero());
        let diag = weight_multiplicity(
            &SchurExpansion::schur(Partition::new([2, 0])),
            &WeightVector::new([2, 0]),
            &mut table,
        );
        assert_eq!(diag, IntPoly::one());
    }

    #[test]
    fn total_dimension_catalan() {
        assert_eq!(
            total_dimension(&SchurExpansion::schur(Partition::new([1])), 3).eval_one(),
            int(3)
        );
        let exp = frobenius_character(&Partition::single_row(3), 3);
        assert_eq!(total_dimension(&exp, 3).eval_one(), higher_catalan(3, 3));
        let exp = frobenius_character(&Partition::single_row(2), 2);
        assert_eq!(total_dimension(&exp, 2).eval_one(), higher_catalan(2, 2));
    }

    #[test]
    fn weight_multiplicities_sum_to_total_dimension() {
        let mut table = KostkaTable::new();
        for (xi, r) in [
            (Partition::new([2, 0]), 2u32),
            (Partition::new([2, 1]), 2),
            (Partition::new([2, 1]), 3),
            (Partition::new([1, 1, 1]), 3),
        ] {
            let exp = frobenius_character(&xi, r);
            let mut acc = IntPoly::zero();
            for eta in compositions(xi.size(), r) {
                let w = WeightVector::new(eta.iter().map(|&c| c as i64).collect::<Vec<_>>());
                acc.add_assign(&weight_multiplicity(&exp, &w, &mut table));
            }
            assert_eq!(acc, total_dimension(&exp, r), "xi = {xi}, r = {r}");
        }
    }
}
