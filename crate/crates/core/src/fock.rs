//! Truncated charge sectors of the semi-infinite wedge
//! `L = ∧^{∞/2}(V_r ⊗ C[x,x⁻¹])`: the regularized action of matrix
//! differential operators, cocycle verification, the annihilation
//! identity for the normal-ordered current square, Weyl translations,
//! the embedding of `V(ξ,N) ⊗ Det(−N)`, and both sides of the
//! limit-of-characters identity.
//!
//! Monomials are encoded by their finite symmetric difference from the
//! vacuum `{(s,j) : s ≥ 0}`. Under `u_j ⊗ x^s = u_{rs+j}` the vacuum is
//! `∧_{m>0} u_m` and basis monomials are oriented by ascending `gl_∞`
//! index. `K` always acts by the identity.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{
    factorial, falling, int, int_pow, permutation_sign, rat_from_int, stirling2, Int, Rat,
};
use crate::combinatorics::{Partition, WeightVector};
use crate::degeneration::{bigraded_character_at, degree_formula};
use crate::poly::IntPoly;
use crate::series::{reciprocal_series, CharacterSeries};
use crate::wedge::{Cell, CurrentElement, ModuleVector};

/// A semi-infinite wedge monomial: cells present below the vacuum and
/// cells absent from it. Rows are exponents of `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial {
    added: Vec<Cell>,
    removed: Vec<Cell>,
}

fn sorted_cells(cells: impl Into<Vec<Cell>>) -> Vec<Cell> {
    let mut cells = cells.into();
    cells.sort_unstable();
    assert!(cells.windows(2).all(|w| w[0] != w[1]), "repeated cell");
    cells
}

impl FockMonomial {
    pub fn new(added: impl Into<Vec<Cell>>, removed: impl Into<Vec<Cell>>) -> Self {
        let added = sorted_cells(added);
        let removed = sorted_cells(removed);
        assert!(
            added.iter().all(|c| c.row < 0),
            "added cells must lie below the vacuum"
        );
        assert!(
            removed.iter().all(|c| c.row >= 0),
            "removed cells must lie in the vacuum"
        );
        FockMonomial { added, removed }
    }

    pub fn vacuum() -> Self {
        FockMonomial::default()
    }

    /// `v^{∞/2}_ξ`: column `j` occupies rows `≥ −ξ_j`.
    pub fn from_weight(xi: &WeightVector) -> Self {
        let mut added = Vec::new();
        let mut removed = Vec::new();
        for (idx, &coord) in xi.coords().iter().enumerate() {
            let col = idx as u32 + 1;
            if coord > 0 {
                for s in -coord..0 {
                    added.push(Cell::new(s as i32, col));
                }
            } else {
                for s in 0..-coord {
                    removed.push(Cell::new(s as i32, col));
                }
            }
        }
        FockMonomial::new(added, removed)
    }

    pub fn added(&self) -> &[Cell] {
        &self.added
    }

    pub fn removed(&self) -> &[Cell] {
        &self.removed
    }

    pub fn contains(&self, cell: Cell) -> bool {
        if cell.row < 0 {
            self.added.binary_search(&cell).is_ok()
        } else {
            self.removed.binary_search(&cell).is_err()
        }
    }

    /// Eigenvalue of `Id ⊗ 1`.
    pub fn charge(&self) -> i64 {
        self.added.len() as i64 - self.removed.len() as i64
    }

    /// The `gl_r` weight: per-column regularized occupation count.
    pub fn weight(&self, r: u32) -> WeightVector {
        let mut coords = vec![0i64; r as usize];
        for c in &self.added {
            coords[(c.col - 1) as usize] += 1;
        }
        for c in &self.removed {
            coords[(c.col - 1) as usize] -= 1;
        }
        WeightVector::new(coords)
    }

    /// The global statistic `d(H) = Σ_{removed} s − Σ_{added} s ≥ 0`.
    pub fn degree(&self) -> i64 {
        let rem: i64 = self.removed.iter().map(|c| c.row as i64).sum();
        let add: i64 = self.added.iter().map(|c| c.row as i64).sum();
        rem - add
    }

    fn index(cell: Cell, r: u32) -> i64 {
        cell.row as i64 * r as i64 + cell.col as i64
    }

    /// Occupied cells of the monomial with `gl_∞` index strictly between
    /// those of `a` and `b`.
    fn count_between(&self, a: Cell, b: Cell, r: u32) -> i64 {
        let (lo, hi) = {
            let (x, y) = (Self::index(a, r), Self::index(b, r));
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        };
        let mut count = 0i64;
        for col in 1..=r as i64 {
            // rows t with lo < r·t + col < hi
            let tlo = (lo - col).div_euclid(r as i64) + 1;
            let thi = {
                let q = hi - col;
                // largest t with r·t + col < hi
                if q.rem_euclid(r as i64) == 0 {
                    q / r as i64 - 1
                } else {
                    q.div_euclid(r as i64)
                }
            };
            if thi < tlo {
                continue;
            }
            // vacuum occupation on [max(tlo,0), thi]
            if thi >= 0 {
                count += thi - tlo.max(0) + 1;
            }
            let col = col as u32;
            count -= self
                .removed
                .iter()
                .filter(|c| c.col == col && (c.row as i64) >= tlo && (c.row as i64) <= thi)
                .count() as i64;
            count += self
                .added
                .iter()
                .filter(|c| c.col == col && (c.row as i64) >= tlo && (c.row as i64) <= thi)
                .count() as i64;
        }
        count
    }

    /// Move the occupied cell `src` to the free cell `dst`, with the
    /// reordering sign.
    fn apply_move(&self, src: Cell, dst: Cell, r: u32) -> (FockMonomial, i32) {
        debug_assert!(self.contains(src) && !self.contains(dst) && src != dst);
        let sign = if self.count_between(src, dst, r) & 1 == 0 {
            1
        } else {
            -1
        };
        let mut added = self.added.clone();
        let mut removed = self.removed.clone();
        if src.row < 0 {
            added.retain(|&c| c != src);
        } else {
            removed.push(src);
        }
        if dst.row < 0 {
            added.push(dst);
        } else {
            removed.retain(|&c| c != dst);
        }
        added.sort_unstable();
        removed.sort_unstable();
        (FockMonomial { added, removed }, sign)
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vac")?;
        for c in &self.added {
            write!(f, "+{c}")?;
        }
        for c in &self.removed {
            write!(f, "-{c}")?;
        }
        Ok(())
    }
}

/// Sparse exact-rational combination of Fock monomials (charge
/// homogeneous in every computation here).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    r: u32,
    terms: BTreeMap<FockMonomial, Rat>,
}

impl FockVector {
    pub fn zero(r: u32) -> Self {
        FockVector {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: FockMonomial, r: u32) -> Self {
        let mut v = FockVector::zero(r);
        v.add_term(m, Rat::one());
        v
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &FockMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: FockMonomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &FockVector) {
        assert_eq!(self.r, other.r);
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &FockVector) {
        assert_eq!(self.r, other.r);
        for (m, c) in other.terms() {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, c: &Rat) -> FockVector {
        if c.is_zero() {
            return FockVector::zero(self.r);
        }
        FockVector {
            r: self.r,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }
}

/// An element `g ⊗ x^{x_pow} D^{d_pow} + central·K` of the centrally
/// extended matrix differential operators. `D = ∂/∂x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOpElement {
    matrix: Vec<Vec<Rat>>,
    pub x_pow: i64,
    pub d_pow: u32,
    pub central: Rat,
}

impl DiffOpElement {
    pub fn new(matrix: Vec<Vec<Rat>>, x_pow: i64, d_pow: u32) -> Self {
        let r = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == r));
        DiffOpElement {
            matrix,
            x_pow,
            d_pow,
            central: Rat::zero(),
        }
    }

    /// `E_{ij} ⊗ x^{x_pow} D^{d_pow}`.
    pub fn unit(i: u32, j: u32, r: u32, x_pow: i64, d_pow: u32) -> Self {
        let mut matrix = vec![vec![Rat::zero(); r as usize]; r as usize];
        matrix[(i - 1) as usize][(j - 1) as usize] = Rat::one();
        DiffOpElement::new(matrix, x_pow, d_pow)
    }

    /// `Id ⊗ x^{x_pow} D^{d_pow}`.
    pub fn identity(r: u32, x_pow: i64, d_pow: u32) -> Self {
        let mut matrix = vec![vec![Rat::zero(); r as usize]; r as usize];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = Rat::one();
        }
        DiffOpElement::new(matrix, x_pow, d_pow)
    }

    pub fn r(&self) -> u32 {
        self.matrix.len() as u32
    }

    pub fn entry(&self, i: u32, j: u32) -> &Rat {
        &self.matrix[(i - 1) as usize][(j - 1) as usize]
    }

    pub fn scaled(&self, c: &Rat) -> DiffOpElement {
        DiffOpElement {
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|v| v * c).collect())
                .collect(),
            x_pow: self.x_pow,
            d_pow: self.d_pow,
            central: &self.central * c,
        }
    }

    /// `Tr(g_1 g_2)` of the matrix parts.
    pub fn trace_product(&self, other: &DiffOpElement) -> Rat {
        assert_eq!(self.r(), other.r());
        let r = self.r() as usize;
        let mut acc = Rat::zero();
        for a in 0..r {
            for b in 0..r {
                acc += &self.matrix[a][b] * &other.matrix[b][a];
            }
        }
        acc
    }

    fn matrix_product(&self, other: &DiffOpElement) -> Vec<Vec<Rat>> {
        let r = self.r() as usize;
        let mut out = vec![vec![Rat::zero(); r]; r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    out[a][b] += &self.matrix[a][c] * &other.matrix[c][b];
                }
            }
        }
        out
    }
}

impl fmt::Display for DiffOpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g⊗x^{}D^{}", self.x_pow, self.d_pow)
    }
}

/// `ξ(n)`: the highest weight of the charge sector `L_n`, where
/// `n = sr + t` with `0 ≤ t < r` and `ξ(n) = sτ + Σ_{i≤t} ε_i`.
pub fn xi_of_charge(n: i64, r: u32) -> WeightVector {
    let s = n.div_euclid(r as i64);
    let t = n.rem_euclid(r as i64);
    let coords: Vec<i64> = (0..r as i64)
        .map(|i| if i < t { s + 1 } else { s })
        .collect();
    WeightVector::new(coords)
}

/// `v^{∞/2}_{ξ(n)}`, the highest weight monomial of `L_n`.
pub fn highest_weight_monomial(n: i64, r: u32) -> FockMonomial {
    FockMonomial::from_weight(&xi_of_charge(n, r))
}

/// Minimal global degree in the charge-`n` sector,
/// `d_n = Σ_j ξ(n)_j (ξ(n)_j + 1)/2`.
pub fn sector_min_degree(n: i64, r: u32) -> i64 {
    highest_weight_monomial(n, r).degree()
}

/// The regularized action: off-diagonal `gl_∞` entries act by wedge
/// moves, the diagonal acts by the vacuum-normalized eigenvalue
/// `Σ_{added} − Σ_{removed}`, and `K` acts by the identity.
pub fn act_fock(op: &DiffOpElement, v: &FockVector) -> FockVector {
    assert_eq!(op.r(), v.r());
    let r = v.r();
    let delta = op.x_pow - op.d_pow as i64;
    let mut out = FockVector::zero(r);
    for (m, coeff) in v.terms() {
        // central term
        if !op.central.is_zero() {
            out.add_term(m.clone(), coeff * &op.central);
        }
        // diagonal part: only a net-zero exponent shift has one
        if delta == 0 {
            let mut eig = Rat::zero();
            for j in 1..=r {
                let gjj = op.entry(j, j);
                if gjj.is_zero() {
                    continue;
                }
                let mut acc = Int::zero();
                for c in m.added.iter().filter(|c| c.col == j) {
                    acc += falling(c.row as i64, op.d_pow);
                }
                for c in m.removed.iter().filter(|c| c.col == j) {
                    acc -= falling(c.row as i64, op.d_pow);
                }
                eig += gjj * rat_from_int(acc);
            }
            if !eig.is_zero() {
                out.add_term(m.clone(), coeff * eig);
            }
        }
        // off-diagonal moves (s, j) → (s + δ, p)
        for j in 1..=r {
            for p in 1..=r {
                let gpj = op.entry(p, j);
                if gpj.is_zero() {
                    continue;
                }
                let mut sources: BTreeSet<i64> = BTreeSet::new();
                for c in m.removed.iter().filter(|c| c.col == p) {
                    sources.insert(c.row as i64 - delta);
                }
                for c in m.added.iter().filter(|c| c.col == j) {
                    if (c.row as i64) + delta < 0 {
                        sources.insert(c.row as i64);
                    }
                }
                if delta < 0 {
                    for s in 0..-delta {
                        sources.insert(s);
                    }
                }
                for s in sources {
                    let src = Cell::new(s as i32, j);
                    let dst = Cell::new((s + delta) as i32, p);
                    if src == dst || !m.contains(src) || m.contains(dst) {
                        continue;
                    }
                    let factor = falling(s, op.d_pow);
                    if factor.is_zero() {
                        continue;
                    }
                    let (moved, sign) = m.apply_move(src, dst, r);
                    out.add_term(moved, coeff * gpj * rat_from_int(factor * int(sign as i64)));
                }
            }
        }
    }
    out
}

/// Product expansion in `gl_r ⊗ C[x, x⁻¹, D]`:
/// `(g_1⊗x^i D^a)(g_2⊗x^j D^b) = Σ_t C(a,t)(j)_t (g_1g_2)⊗x^{i+j−t}D^{a+b−t}`.
fn diffop_product(a: &DiffOpElement, b: &DiffOpElement) -> Vec<DiffOpElement> {
    let gg = a.matrix_product(b);
    let mut out = Vec::new();
    for t in 0..=a.d_pow {
        let c = crate::arith::binomial(a.d_pow as u64, t as u64) * falling(b.x_pow, t);
        if c.is_zero() {
            continue;
        }
        let term = DiffOpElement::new(
            gg.clone(),
            a.x_pow + b.x_pow - t as i64,
            a.d_pow + b.d_pow - t,
        )
        .scaled(&rat_from_int(c));
        out.push(term);
    }
    out
}

/// Lie bracket `[a, b]` in the (non-extended) algebra, as a term list.
pub fn diffop_bracket(a: &DiffOpElement, b: &DiffOpElement) -> Vec<DiffOpElement> {
    let mut out = diffop_product(a, b);
    for term in diffop_product(b, a) {
        out.push(term.scaled(&-Rat::one()));
    }
    out
}

/// The closed-form two-cocycle
/// `ω(g_1⊗x^i D^a, g_2⊗x^j D^b) =
///   δ_{i+j−a−b} Tr(g_1g_2) (−1)^a a! b!/(a+b+1)! Π_{k=0}^{a+b} (i−k)`.
pub fn cocycle_formula(a: &DiffOpElement, b: &DiffOpElement) -> Rat {
    if a.x_pow + b.x_pow - a.d_pow as i64 - b.d_pow as i64 != 0 {
        return Rat::zero();
    }
    let trace = a.trace_product(b);
    if trace.is_zero() {
        return Rat::zero();
    }
    let asum = a.d_pow + b.d_pow;
    let num = factorial(a.d_pow as u64) * factorial(b.d_pow as u64);
    let den = factorial(asum as u64 + 1);
    let mut scalar = Rat::new(num, den);
    if a.d_pow % 2 == 1 {
        scalar = -scalar;
    }
    let prod = falling(a.x_pow, asum + 1);
    trace * scalar * rat_from_int(prod)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleError {
    /// The commutator defect was not a scalar multiple of the identity on
    /// some sample: an implementation bug, not a formula mismatch.
    NonScalarDefect { sample: FockMonomial },
    /// Two samples produced different scalars.
    InconsistentScalar { first: Rat, second: Rat },
}

impl fmt::Display for CocycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleError::NonScalarDefect { sample } => {
                write!(f, "commutator defect is not scalar on {sample}")
            }
            CocycleError::InconsistentScalar { first, second } => {
                write!(
                    f,
                    "defect scalar varies across samples: {first} vs {second}"
                )
            }
        }
    }
}

/// Measure the central defect `[act(a), act(b)] − act([a,b])` on each
/// sample monomial. The defect must be the same scalar multiple of the
/// identity on every sample; that scalar is returned (and should equal
/// `cocycle_formula(a, b)` times the `K`-eigenvalue 1).
pub fn verify_cocycle(
    a: &DiffOpElement,
    b: &DiffOpElement,
    samples: &[FockMonomial],
) -> Result<Rat, CocycleError> {
    assert!(!samples.is_empty());
    let r = a.r();
    let bracket = diffop_bracket(a, b);
    let mut scalar: Option<Rat> = None;
    for sample in samples {
        let v = FockVector::monomial(sample.clone(), r);
        let mut defect = act_fock(a, &act_fock(b, &v));
        defect.sub_assign(&act_fock(b, &act_fock(a, &v)));
        for term in &bracket {
            defect.sub_assign(&act_fock(term, &v));
        }
        let c = match defect.terms().count() {
            0 => Rat::zero(),
            1 => {
                let (m, c) = defect.terms().next().unwrap();
                if m != sample {
                    return Err(CocycleError::NonScalarDefect {
                        sample: sample.clone(),
                    });
                }
                c.clone()
            }
            _ => {
                return Err(CocycleError::NonScalarDefect {
                    sample: sample.clone(),
                })
            }
        };
        match &scalar {
            None => scalar = Some(c),
            Some(prev) if *prev != c => {
                return Err(CocycleError::InconsistentScalar {
                    first: prev.clone(),
                    second: c,
                })
            }
            _ => {}
        }
    }
    Ok(scalar.unwrap())
}

/// The mode-`m` coefficient of
/// `E_{jj}(D;z) + ½ :E_{jj}(1;z)²: − ½ ∂E_{jj}(1;z)` (the coefficient of
/// `z^{−m−2}`), applied to a monomial. Currents are
/// `g(Q;z) = Σ_i z^{−i−1} g⊗x^iQ` and the normal ordering splits
/// `Σ_{i<0} F_i G_{m−i} + Σ_{i≥0} G_{m−i} F_i`; on a fixed monomial only
/// finitely many terms survive.
fn annihilation_identity_apply(j: u32, m: i64, sample: &FockMonomial, r: u32) -> FockVector {
    let v = FockVector::monomial(sample.clone(), r);
    let depth_below: i64 = sample
        .added
        .iter()
        .map(|c| -(c.row as i64))
        .max()
        .unwrap_or(0);
    let depth_above: i64 = sample
        .removed
        .iter()
        .map(|c| c.row as i64 + 1)
        .max()
        .unwrap_or(0);
    let reach = depth_below + depth_above;

    let mut out = act_fock(&DiffOpElement::unit(j, j, r, m + 1, 1), &v);

    let half = Rat::new(Int::one(), int(2));
    // Σ_{i<0} (E⊗x^i)(E⊗x^{m−i}): the inner shift m−i dies beyond the reach.
    for i in (m - reach).min(-1)..=-1 {
        let inner = act_fock(&DiffOpElement::unit(j, j, r, m - i, 0), &v);
        let outer = act_fock(&DiffOpElement::unit(j, j, r, i, 0), &inner);
        out.add_assign(&outer.scaled(&half));
    }
    // Σ_{i≥0} (E⊗x^{m−i})(E⊗x^i): the inner shift i dies beyond the reach.
    for i in 0..=reach.max(0) {
        let inner = act_fock(&DiffOpElement::unit(j, j, r, i, 0), &v);
        if inner.is_zero() {
            continue;
        }
        let outer = act_fock(&DiffOpElement::unit(j, j, r, m - i, 0), &inner);
        out.add_assign(&outer.scaled(&half));
    }
    // −½ ∂E(1;z) contributes +½(m+1) E⊗x^m at this mode.
    let deriv = act_fock(&DiffOpElement::unit(j, j, r, m, 0), &v);
    out.add_assign(&deriv.scaled(&(half * rat_from_int(int(m + 1)))));
    out
}

/// True iff the mode-`m` annihilation identity holds on every sample.
pub fn annihilation_identity_check(j: u32, m: i64, samples: &[FockMonomial], r: u32) -> bool {
    samples
        .iter()
        .all(|s| annihilation_identity_apply(j, m, s, r).is_zero())
}

/// The Weyl translation `T_η`: `T_η H = {(i,j) : (i+η_j, j) ∈ H}`, i.e.
/// column `j` shifts down by `η_j`. It maps monomials to monomials, adds
/// `η` to the weight and `|η|` to the charge (so `η ∈ Q` preserves each
/// sector).
pub fn translate_monomial(eta: &WeightVector, m: &FockMonomial, r: u32) -> FockMonomial {
    assert_eq!(eta.len(), r as usize);
    let mut added = Vec::new();
    let mut removed = Vec::new();
    for (idx, &shift) in eta.coords().iter().enumerate() {
        let col = idx as u32 + 1;
        // occupied rows of column col, translated by −shift
        let col_added: Vec<i64> = m
            .added
            .iter()
            .filter(|c| c.col == col)
            .map(|c| c.row as i64 - shift)
            .collect();
        let col_removed: Vec<i64> = m
            .removed
            .iter()
            .filter(|c| c.col == col)
            .map(|c| c.row as i64 - shift)
            .collect();
        // re-normalize against the vacuum boundary at 0
        let contains = |row: i64| -> bool {
            if row + shift >= 0 {
                !col_removed.contains(&(row))
            } else {
                col_added.contains(&row)
            }
        };
        let lo = col_added
            .iter()
            .chain(col_removed.iter())
            .copied()
            .min()
            .unwrap_or(0)
            .min(-shift)
            .min(0);
        let hi = col_added
            .iter()
            .chain(col_removed.iter())
            .copied()
            .max()
            .unwrap_or(0)
            .max(-shift)
            .max(0);
        for row in lo..=hi {
            let occ = contains(row);
            if row < 0 && occ {
                added.push(Cell::new(row as i32, col));
            }
            if row >= 0 && !occ {
                removed.push(Cell::new(row as i32, col));
            }
        }
    }
    FockMonomial::new(added, removed)
}

pub fn translate(eta: &WeightVector, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.r());
    for (m, c) in v.terms() {
        out.add_term(translate_monomial(eta, m, v.r()), c.clone());
    }
    out
}

/// `X^k (xD)^l` expanded in the `x^i D^a` basis via Stirling numbers:
/// `(xD)^l = Σ_a S(l,a) x^a D^a`. This is the image of
/// `E_{ij} ⊗ X^k Y^l` under `X ↦ x`, `Y ↦ xD`.
pub fn current_op(g: &CurrentElement, r: u32) -> Vec<DiffOpElement> {
    let mut out = Vec::new();
    for a in 0..=g.l {
        let c = stirling2(g.l, a);
        if c.is_zero() {
            continue;
        }
        out.push(
            DiffOpElement::unit(g.i, g.j, r, g.k as i64 + a as i64, a).scaled(&rat_from_int(c)),
        );
    }
    out
}

/// Eigenvalue of `E_{jj} ⊗ X^0 Y^l` on the deformed determinant factor
/// `Det(−N)`: `−Σ_{s=0}^{N−1} s^l` up to the sign convention in
/// `embed`'s equivariance, `embed(act(g,v)) = act_fock(ĝ, embed(v)) +
/// twist · embed(v)` with `twist = δ_{ij} δ_{k0} Σ_{s<N} s^l`.
pub fn det_twist_scalar(g: &CurrentElement, level: i32) -> Int {
    if g.i != g.j || g.k != 0 {
        return Int::zero();
    }
    let mut acc = Int::zero();
    for s in 0..level as i64 {
        acc += int_pow(s, g.l);
    }
    acc
}

/// The inclusion `V(ξ,N) ⊗ Det(−N) ↪ L_{|ξ|−Nr}`: wedge each monomial
/// with the tail `∧_{j} ∧_{s≥N} u^s_j`. Cells `(i,j)` re-index to
/// exponents `s = N−i`; the coordinate sign relative to the ascending
/// basis orientation comes from sorting the finite factors.
pub fn embed(v: &ModuleVector) -> FockVector {
    let r = v.r();
    let level = v.level();
    let mut out = FockVector::zero(r);
    for (h, coeff) in v.terms() {
        let fock_cells: Vec<Cell> = h
            .cells()
            .iter()
            .map(|c| Cell::new(level - c.row, c.col))
            .collect();
        let indices: Vec<i64> = fock_cells
            .iter()
            .map(|&c| FockMonomial::index(c, r))
            .collect();
        let sign = permutation_sign(&indices);
        let occupied: BTreeSet<Cell> = fock_cells.iter().copied().collect();
        assert_eq!(occupied.len(), fock_cells.len());
        let added: Vec<Cell> = occupied.iter().copied().filter(|c| c.row < 0).collect();
        let mut removed = Vec::new();
        for s in 0..level {
            for col in 1..=r {
                let cell = Cell::new(s, col);
                if !occupied.contains(&cell) {
                    removed.push(cell);
                }
            }
        }
        out.add_term(
            FockMonomial::new(added, removed),
            coeff * rat_from_int(int(sign as i64)),
        );
    }
    out
}

/// All charge-`n` monomials with sector-relative degree
/// `d(H) − d_n ≤ depth`, ordered.
pub fn enumerate_sector(n: i64, r: u32, depth: u32) -> Vec<FockMonomial> {
    let budget = sector_min_degree(n, r) + depth as i64;
    // per-column states (charge, degree, added rows, removed rows)
    fn column_states(budget: i64) -> Vec<(i64, i64, Vec<i32>, Vec<i32>)> {
        fn added_sets(row: i64, budget: i64, acc: &mut Vec<i32>, out: &mut Vec<(i64, Vec<i32>)>) {
            out.push((acc.iter().map(|&x| -(x as i64)).sum(), acc.clone()));
            let mut row = row;
            while -row <= budget - acc.iter().map(|&x| -(x as i64)).sum::<i64>() {
                acc.push(row as i32);
                added_sets(row - 1, budget, acc, out);
                acc.pop();
                row -= 1;
            }
        }
        fn removed_sets(row: i64, budget: i64, acc: &mut Vec<i32>, out: &mut Vec<(i64, Vec<i32>)>) {
            out.push((acc.iter().map(|&x| x as i64).sum(), acc.clone()));
            let mut row = row;
            while row <= budget - acc.iter().map(|&x| x as i64).sum::<i64>() {
                acc.push(row as i32);
                removed_sets(row + 1, budget, acc, out);
                acc.pop();
                row += 1;
            }
        }
        let mut adds = Vec::new();
        added_sets(-1, budget, &mut Vec::new(), &mut adds);
        let mut rems = Vec::new();
        removed_sets(0, budget, &mut Vec::new(), &mut rems);
        let mut out = Vec::new();
        for (da, a) in &adds {
            for (dr, rm) in &rems {
                if da + dr <= budget {
                    out.push((
                        a.len() as i64 - rm.len() as i64,
                        da + dr,
                        a.clone(),
                        rm.clone(),
                    ));
                }
            }
        }
        out
    }

    if budget < 0 {
        return Vec::new();
    }
    let states = column_states(budget);
    let mut out = Vec::new();
    fn go(
        states: &[(i64, i64, Vec<i32>, Vec<i32>)],
        col: u32,
        r: u32,
        charge_left: i64,
        budget_left: i64,
        added: &mut Vec<Cell>,
        removed: &mut Vec<Cell>,
        out: &mut Vec<FockMonomial>,
    ) {
        if col > r {
            if charge_left == 0 {
                out.push(FockMonomial::new(added.clone(), removed.clone()));
            }
            return;
        }
        for (charge, d, a, rm) in states {
            if *d > budget_left {
                continue;
            }
            let before_a = added.len();
            let before_r = removed.len();
            added.extend(a.iter().map(|&row| Cell::new(row, col)));
            removed.extend(rm.iter().map(|&row| Cell::new(row, col)));
            go(
                states,
                col + 1,
                r,
                charge_left - charge,
                budget_left - d,
                added,
                removed,
                out,
            );
            added.truncate(before_a);
            removed.truncate(before_r);
        }
    }
    go(
        &states,
        1,
        r,
        n,
        budget,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    out.sort_unstable();
    debug_assert!(
        out.iter().map(|m| m.degree()).min() == Some(sector_min_degree(n, r)) || out.is_empty()
    );
    out
}

/// The closed-form limit series
/// `Σ_{|ξ|=n} e^ξ x^{((ξ,ξ)−(ξ(n),ξ(n)))/2} / Π_{i>0}(1−x^i y)(1−x^i)^{r−1}`
/// expanded to `x`-degree ≤ `depth`.
pub fn limit_character_rhs(n: i64, r: u32, depth: u32) -> CharacterSeries {
    // denominator inverse as a vector of y-polynomials by x-degree
    let mut denom: Vec<IntPoly> = vec![IntPoly::zero(); depth as usize + 1];
    denom[0] = IntPoly::one();
    // multiply by Σ_{t≥0} x^{step·t} y^{y_power·t}, i.e. divide by
    // (1 − x^step y^y_power): new[d] = old[d] + y^y_power · new[d − step]
    let mul_geometric = |series: &mut Vec<IntPoly>, step: u32, y_power: u32| {
        for d in step as usize..series.len() {
            let prev = series[d - step as usize].shifted(y_power);
            series[d].add_assign(&prev);
        }
    };
    for i in 1..=depth {
        mul_geometric(&mut denom, i, 1);
        for _ in 0..r.saturating_sub(1) {
            mul_geometric(&mut denom, i, 0);
        }
    }

    let base_norm: i64 = xi_of_charge(n, r).coords().iter().map(|c| c * c).sum();
    let mut out = CharacterSeries::new(r, depth);
    // numerator weights: |ξ| = n with ((ξ,ξ) − (ξ(n),ξ(n)))/2 ≤ depth
    let norm_cap = base_norm + 2 * depth as i64;
    let mut coords = vec![0i64; r as usize];
    fn enumerate_weights(
        pos: usize,
        r: usize,
        n: i64,
        norm_cap: i64,
        coords: &mut Vec<i64>,
        out: &mut Vec<WeightVector>,
    ) {
        let used_norm: i64 = coords[..pos].iter().map(|c| c * c).sum();
        if used_norm > norm_cap {
            return;
        }
        if pos == r {
            let sum: i64 = coords.iter().sum();
            if sum == n {
                out.push(WeightVector::new(coords.clone()));
            }
            return;
        }
        let bound = crate::arith::int(norm_cap).sqrt();
        let bound = i64::try_from(&bound).unwrap_or(norm_cap.max(0));
        for c in -bound..=bound {
            coords[pos] = c;
            enumerate_weights(pos + 1, r, n, norm_cap, coords, out);
        }
        coords[pos] = 0;
    }
    let mut weights = Vec::new();
    enumerate_weights(0, r as usize, n, norm_cap, &mut coords, &mut weights);
    for xi in weights {
        let norm: i64 = xi.coords().iter().map(|c| c * c).sum();
        let shift2 = norm - base_norm;
        debug_assert!(shift2 % 2 == 0);
        let shift = shift2 / 2;
        if !(0..=depth as i64).contains(&shift) {
            continue;
        }
        for d in shift as u32..=depth {
            out.add_term(xi.clone(), d, &denom[(d - shift as u32) as usize]);
        }
    }
    out
}

/// The finite side at inductive stage `N`: `Rec_x` of
/// `ch_{x,y} V((n+Nr)ε_1)` with all weights shifted by `−Nτ`, truncated
/// at `x`-degree ≤ `depth`.
pub fn limit_character_lhs(n: i64, r: u32, stage: u32, depth: u32) -> CharacterSeries {
    let top = n + (stage as i64) * r as i64;
    assert!(top >= 0, "n + Nr must be non-negative");
    let xi = Partition::single_row(top as u32);
    let ch = bigraded_character_at(&xi, r, xi.first().max(1) as i32);
    assert_eq!(ch.max_x() as i64, degree_formula(&xi, r));
    let rec = reciprocal_series(&ch, depth);
    rec.shift_weights(&WeightVector::tau(r).scaled(-(stage as i64)))
}

/// Generating count of charge-`n` monomials by sector-relative degree,
/// up to `depth`. Matches the `e^η→1, y→1` specialization of the limit
/// series (the Heisenberg decomposition as a counting identity).
pub fn sector_degree_counts(n: i64, r: u32, depth: u32) -> BTreeMap<u32, Int> {
    let d0 = sector_min_degree(n, r);
    let mut out = BTreeMap::new();
    for m in enumerate_sector(n, r, depth) {
        *out.entry((m.degree() - d0) as u32)
            .or_insert_with(Int::zero) += Int::one();
    }
    out
}
