//! The deformed module `V(ξ,N)` inside `∧^{|ξ|} V_r^{(N)}`: wedge
//! monomials indexed by cell sets, the action of `E_{ij} ⊗ X^k Y^l`
//! (where `X, Y` act on exponents by `x^s ↦ x^{s+k}` and `x^s ↦ s x^s`,
//! truncated at `x^N`), and the cyclic closure computed by exact
//! integer-pivot row reduction.
//!
//! A cell `(i, j)` stands for the wedge factor `u_j^{N−i}`. Monomials are
//! stored in canonical order (exponent descending, column ascending, i.e.
//! cells sorted by row then column) and `v_ξ^{(N)}` has sign `+1` in this
//! order. The action of `X^k` lowers the row by `k` and the term dies when
//! the row would leave the window at row 1 (the `x^N` truncation), so the
//! whole closure lives in rows `1..=ξ_1`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{binomial, int, int_pow, rat_from_int, Int, Rat};
use crate::combinatorics::{Partition, WeightVector};

/// One wedge factor: row `i` (exponent `N−i`) and column `j ∈ 1..=r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: i32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: i32, col: u32) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite set of cells indexing a wedge monomial `u_H^{(N)}`, kept in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CellSet {
    cells: Vec<Cell>,
}

impl CellSet {
    pub fn new(cells: impl Into<Vec<Cell>>) -> Self {
        let mut cells = cells.into();
        cells.sort_unstable();
        assert!(
            cells.windows(2).all(|w| w[0] != w[1]),
            "repeated cell in wedge monomial"
        );
        CellSet { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// Per-column cell counts `η(H)` as a `gl_r` weight.
    pub fn weight(&self, r: u32) -> WeightVector {
        let mut coords = vec![0i64; r as usize];
        for c in &self.cells {
            assert!(c.col >= 1 && c.col <= r, "column out of range");
            coords[(c.col - 1) as usize] += 1;
        }
        WeightVector::new(coords)
    }

    /// The statistic `d(H) = Σ_i i ξ^t_i − Σ_{(i,j) ∈ H} i`.
    pub fn x_degree(&self, xi: &Partition) -> i64 {
        let xit = xi.transpose();
        let base: i64 = (1..=xit.len() as i64)
            .map(|i| i * xit.part(i as usize) as i64)
            .sum();
        let used: i64 = self.cells.iter().map(|c| c.row as i64).sum();
        base - used
    }

    /// Number of cells strictly between `a` and `b` in canonical order.
    fn count_between(&self, a: Cell, b: Cell) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.cells.iter().filter(|&&c| lo < c && c < hi).count()
    }

    /// Replace the cell at position `pos` by `target`. Returns the
    /// re-sorted set and the reordering sign, or `None` if `target`
    /// collides with another cell.
    fn replace_cell(&self, pos: usize, target: Cell) -> Option<(CellSet, i32)> {
        let source = self.cells[pos];
        if target == source {
            return Some((self.clone(), 1));
        }
        if self.contains(target) {
            return None;
        }
        let sign = if self.count_between(source, target) & 1 == 0 {
            1
        } else {
            -1
        };
        let mut cells = self.cells.clone();
        cells[pos] = target;
        cells.sort_unstable();
        Some((CellSet { cells }, sign))
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// The cyclic monomial `H_ξ = {(i,j) : 1 ≤ i ≤ ξ_j}` indexing `v_ξ^{(N)}`.
pub fn cyclic_monomial(xi: &Partition) -> CellSet {
    let mut cells = Vec::with_capacity(xi.size() as usize);
    for (j, &parts) in xi.parts().iter().enumerate() {
        for i in 1..=parts as i32 {
            cells.push(Cell::new(i, j as u32 + 1));
        }
    }
    CellSet::new(cells)
}

/// The basis condition: `|H| = |ξ|` and
/// `|H ∩ {1..k}×{1..r}| ≥ ξ^t_1 + … + ξ^t_k` for all `k ≥ 1`.
/// Saturation at `k = ξ_1` forces every cell into rows `1..=ξ_1`.
pub fn is_admissible(h: &CellSet, xi: &Partition, r: u32) -> bool {
    if h.len() != xi.size() as usize {
        return false;
    }
    let top = xi.first() as i32;
    if h.cells()
        .iter()
        .any(|c| c.row < 1 || c.row > top || c.col < 1 || c.col > r)
    {
        return false;
    }
    let xit = xi.transpose();
    let mut need = 0u32;
    let mut have = 0u32;
    for k in 1..=xi.first() {
        need += xit.part(k as usize);
        have += h.cells().iter().filter(|c| c.row == k as i32).count() as u32;
        if have < need {
            return false;
        }
    }
    true
}

/// All admissible cell sets for ξ, in lexicographic order.
pub fn enumerate_admissible(xi: &Partition, r: u32) -> Vec<CellSet> {
    let n = xi.size() as usize;
    let grid: Vec<Cell> = (1..=xi.first() as i32)
        .flat_map(|i| (1..=r).map(move |j| Cell::new(i, j)))
        .collect();
    let mut out = Vec::new();
    let mut picked = Vec::with_capacity(n);
    fn go(
        grid: &[Cell],
        start: usize,
        n: usize,
        picked: &mut Vec<Cell>,
        xi: &Partition,
        r: u32,
        out: &mut Vec<CellSet>,
    ) {
        if picked.len() == n {
            let h = CellSet::new(picked.clone());
            if is_admissible(&h, xi, r) {
                out.push(h);
            }
            return;
        }
        if grid.len() - start < n - picked.len() {
            return;
        }
        for idx in start..grid.len() {
            picked.push(grid[idx]);
            go(grid, idx + 1, n, picked, xi, r, out);
            picked.pop();
        }
    }
    go(&grid, 0, n, &mut picked, xi, r, &mut out);
    out
}

/// `(η(H), d(H))` for a monomial of `V(ξ,N)`.
pub fn weight_and_degree(h: &CellSet, xi: &Partition, r: u32) -> (WeightVector, i64) {
    (h.weight(r), h.x_degree(xi))
}

/// A Lie algebra element `E_{ij} ⊗ X^k Y^l` of `gl_r ⊗ C<X,Y>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurrentElement {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl CurrentElement {
    pub fn new(i: u32, j: u32, k: u32, l: u32) -> Self {
        assert!(i >= 1 && j >= 1);
        CurrentElement { i, j, k, l }
    }
}

impl fmt::Display for CurrentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}{}⊗X^{}Y^{}", self.i, self.j, self.k, self.l)
    }
}

/// Commutator `[a, b]` expanded over the relation `YX − XY = X`
/// (so `Y^l X^k = X^k (Y+k)^l`), as a list of scaled basis elements.
pub fn bracket_terms(a: &CurrentElement, b: &CurrentElement) -> Vec<(Int, CurrentElement)> {
    fn product(
        p: &CurrentElement,
        q: &CurrentElement,
        out: &mut Vec<(Int, CurrentElement)>,
        sign: i64,
    ) {
        if p.j != q.i {
            return;
        }
        // X^{k1} Y^{l1} X^{k2} Y^{l2} = Σ_t C(l1,t) k2^{l1−t} X^{k1+k2} Y^{t+l2}
        for t in 0..=p.l {
            let c = binomial(p.l as u64, t as u64) * int_pow(q.k as i64, p.l - t);
            if c.is_zero() {
                continue;
            }
            out.push((
                c * int(sign),
                CurrentElement::new(p.i, q.j, p.k + q.k, t + q.l),
            ));
        }
    }
    let mut out = Vec::new();
    product(a, b, &mut out, 1);
    product(b, a, &mut out, -1);
    out
}

/// The one-particle action of `E_{ij} ⊗ X^k Y^l` extended to the wedge
/// monomial `u_H^{(N)}` as a derivation: each column-`j` factor
/// `u_j^{N−i}` maps to `(N−i)^l · u_{g.i}^{N−i+k}`, dying at the `x^N`
/// truncation (target row < 1) or on a repeated factor.
pub fn act_on_monomial(h: &CellSet, g: &CurrentElement, level: i32) -> Vec<(CellSet, Int)> {
    let mut out = Vec::new();
    for pos in 0..h.len() {
        let cell = h.cells()[pos];
        if cell.col != g.j {
            continue;
        }
        let target = Cell::new(cell.row - g.k as i32, g.i);
        if target.row < 1 {
            continue;
        }
        let coeff = int_pow(level as i64 - cell.row as i64, g.l);
        if coeff.is_zero() {
            continue;
        }
        if let Some((set, sign)) = h.replace_cell(pos, target) {
            out.push((set, coeff * int(sign as i64)));
        }
    }
    out
}

/// A sparse exact-rational combination of wedge monomials in
/// `∧^{|H|} V_r^{(N)}`. All monomials share the context `(N, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    r: u32,
    level: i32,
    terms: BTreeMap<CellSet, Rat>,
}

impl ModuleVector {
    pub fn zero(r: u32, level: i32) -> Self {
        ModuleVector {
            r,
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(h: CellSet, r: u32, level: i32) -> Self {
        let mut v = ModuleVector::zero(r, level);
        v.add_term(h, Rat::one());
        v
    }

    /// `v_ξ^{(N)}` with coefficient `+1`.
    pub fn cyclic_vector(xi: &Partition, r: u32, level: i32) -> Self {
        ModuleVector::monomial(cyclic_monomial(xi), r, level)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CellSet, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, h: &CellSet) -> Rat {
        self.terms.get(h).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, h: CellSet, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(h.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&h);
        }
    }

    pub fn add_assign(&mut self, other: &ModuleVector) {
        assert_eq!((self.r, self.level), (other.r, other.level));
        for (h, c) in other.terms() {
            self.add_term(h.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &ModuleVector) {
        assert_eq!((self.r, self.level), (other.r, other.level));
        for (h, c) in other.terms() {
            self.add_term(h.clone(), -c.clone());
        }
    }

    pub fn scaled(&self, c: &Rat) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero(self.r, self.level);
        }
        ModuleVector {
            r: self.r,
            level: self.level,
            terms: self.terms.iter().map(|(h, v)| (h.clone(), v * c)).collect(),
        }
    }

    /// Split into weight-homogeneous components, exactly.
    pub fn weight_components(&self) -> BTreeMap<WeightVector, ModuleVector> {
        let mut out: BTreeMap<WeightVector, ModuleVector> = BTreeMap::new();
        for (h, c) in self.terms() {
            out.entry(h.weight(self.r))
                .or_insert_with(|| ModuleVector::zero(self.r, self.level))
                .add_term(h.clone(), c.clone());
        }
        out
    }
}

/// The Leibniz action of `g` on a module vector.
pub fn act(g: &CurrentElement, v: &ModuleVector) -> ModuleVector {
    assert!(g.i <= v.r && g.j <= v.r, "matrix index out of range");
    let mut out = ModuleVector::zero(v.r, v.level);
    for (h, coeff) in v.terms() {
        for (set, c) in act_on_monomial(h, g, v.level) {
            out.add_term(set, coeff * rat_from_int(c));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Block layout and exact row reduction for closures and filtrations.
//
// V(ξ,N) is graded by (weight, x-degree) and every generator image of an
// admissible-supported vector is admissible-supported (moves only raise
// exponents), so all linear algebra happens in small dense blocks indexed
// by the admissible monomials of one (η, d) key. The engine asserts the
// support invariant on every application.
// ---------------------------------------------------------------------------

pub type BlockKey = (WeightVector, i64);

/// The admissible monomials of `V(ξ,N)` grouped by `(η(H), d(H))`.
#[derive(Clone, Debug)]
pub struct BlockLayout {
    xi: Partition,
    r: u32,
    keys: Vec<BlockKey>,
    monomials: Vec<Vec<CellSet>>,
    index: Vec<BTreeMap<CellSet, usize>>,
    by_key: BTreeMap<BlockKey, usize>,
}

impl BlockLayout {
    pub fn new(xi: &Partition, r: u32) -> Self {
        let mut grouped: BTreeMap<BlockKey, Vec<CellSet>> = BTreeMap::new();
        for h in enumerate_admissible(xi, r) {
            let key = (h.weight(r), h.x_degree(xi));
            assert!(key.1 >= 0, "admissible monomial with negative degree");
            grouped.entry(key).or_default().push(h);
        }
        let mut keys = Vec::new();
        let mut monomials = Vec::new();
        let mut index = Vec::new();
        let mut by_key = BTreeMap::new();
        for (key, mons) in grouped {
            by_key.insert(key.clone(), keys.len());
            index.push(mons.iter().cloned().zip(0..).collect());
            keys.push(key);
            monomials.push(mons);
        }
        BlockLayout {
            xi: xi.clone(),
            r,
            keys,
            monomials,
            index,
            by_key,
        }
    }

    pub fn xi(&self) -> &Partition {
        &self.xi
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn block_count(&self) -> usize {
        self.keys.len()
    }

    pub fn key(&self, block: usize) -> &BlockKey {
        &self.keys[block]
    }

    pub fn monomials(&self, block: usize) -> &[CellSet] {
        &self.monomials[block]
    }

    pub fn admissible_count(&self) -> usize {
        self.monomials.iter().map(|m| m.len()).sum()
    }

    fn block_of_key(&self, key: &BlockKey) -> Option<usize> {
        self.by_key.get(key).copied()
    }

    /// Locate the block and integer dense coordinates of a sparse vector
    /// (denominators cleared). Panics if the support is not admissible or
    /// not block-homogeneous.
    fn densify(&self, v: &ModuleVector) -> Option<(usize, Vec<Int>)> {
        let mut block: Option<usize> = None;
        let mut dense: Vec<Rat> = Vec::new();
        for (h, c) in v.terms() {
            let key = (h.weight(self.r), h.x_degree(&self.xi));
            let b = self
                .block_of_key(&key)
                .expect("vector support leaves the admissible span");
            match block {
                None => {
                    block = Some(b);
                    dense = vec![Rat::zero(); self.monomials[b].len()];
                }
                Some(prev) => assert_eq!(prev, b, "vector is not block-homogeneous"),
            }
            dense[self.index[b][h]] = c.clone();
        }
        let b = block?;
        let mut scale = Int::one();
        for c in &dense {
            scale = crate::arith::lcm(&scale, c.denom());
        }
        let ints = dense
            .iter()
            .map(|c| c.numer() * (&scale / c.denom()))
            .collect();
        Some((b, ints))
    }
}

#[derive(Clone, Debug)]
struct EchelonRow {
    coeffs: Vec<Int>,
    level: u32,
}

/// Forward-only Gaussian elimination over the block layout. Rows are
/// append-only and tagged with the filtration level that produced them.
struct Echelon {
    rows: Vec<Vec<EchelonRow>>,
    pivots: Vec<BTreeMap<usize, usize>>,
    caps: Vec<usize>,
    dim: usize,
}

impl Echelon {
    fn new(layout: &BlockLayout, caps: Option<Vec<usize>>) -> Self {
        let caps = caps.unwrap_or_else(|| layout.monomials.iter().map(|m| m.len()).collect());
        assert_eq!(caps.len(), layout.block_count());
        Echelon {
            rows: vec![Vec::new(); layout.block_count()],
            pivots: vec![BTreeMap::new(); layout.block_count()],
            caps,
            dim: 0,
        }
    }

    fn saturated(&self, block: usize) -> bool {
        self.rows[block].len() >= self.caps[block]
    }

    /// Reduce against the existing rows by integer cross-multiplication
    /// and insert the primitive remainder if independent.
    fn reduce_insert(&mut self, block: usize, mut cand: Vec<Int>, level: u32) -> Option<usize> {
        let mut col = 0;
        while col < cand.len() {
            if cand[col].is_zero() {
                col += 1;
                continue;
            }
            match self.pivots[block].get(&col) {
                Some(&row_idx) => {
                    let row = &self.rows[block][row_idx];
                    let g = crate::arith::gcd(&cand[col], &row.coeffs[col]);
                    let a = &row.coeffs[col] / &g;
                    let b = &cand[col] / &g;
                    for (k, v) in row.coeffs.iter().enumerate().skip(col) {
                        let scaled = &cand[k] * &a - v * &b;
                        cand[k] = scaled;
                    }
                    debug_assert!(cand[col].is_zero());
                    // keep entries small along deep reduction chains
                    make_primitive(&mut cand[col + 1..]);
                    col += 1;
                }
                None => {
                    make_primitive(&mut cand[col..]);
                    let row_idx = self.rows[block].len();
                    self.rows[block].push(EchelonRow {
                        coeffs: cand,
                        level,
                    });
                    self.pivots[block].insert(col, row_idx);
                    self.dim += 1;
                    return Some(row_idx);
                }
            }
        }
        None
    }
}

/// Divide a slice by its content gcd (no-op on the zero slice).
fn make_primitive(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = crate::arith::gcd(&g, x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

/// The worklist closure engine shared by `cyclic_closure`,
/// `submodule_closure` and the Y-filtration.
pub(crate) struct ClosureEngine<'a> {
    layout: &'a BlockLayout,
    level: i32,
    echelon: Echelon,
}

impl<'a> ClosureEngine<'a> {
    pub(crate) fn new(layout: &'a BlockLayout, level: i32, caps: Option<Vec<usize>>) -> Self {
        ClosureEngine {
            layout,
            level,
            echelon: Echelon::new(layout, caps),
        }
    }

    /// Target block of a generator applied to a block, if any admissible
    /// monomial lives there.
    pub(crate) fn target_block(&self, block: usize, g: &CurrentElement) -> Option<usize> {
        let layout = self.layout;
        let (weight, xdeg) = layout.key(block).clone();
        let tgt_key = (
            weight
                .add(&WeightVector::epsilon(g.i, layout.r))
                .sub(&WeightVector::epsilon(g.j, layout.r)),
            xdeg + g.k as i64,
        );
        layout.block_of_key(&tgt_key)
    }

    pub(crate) fn target_saturated(&self, block: usize, g: &CurrentElement) -> bool {
        self.target_block(block, g)
            .is_some_and(|tb| self.echelon.saturated(tb))
    }

    pub(crate) fn apply(
        &self,
        block: usize,
        row_idx: usize,
        g: &CurrentElement,
    ) -> Option<(usize, Vec<Int>)> {
        let layout = self.layout;
        let tgt = self.target_block(block, g);
        let mons = &layout.monomials[block];
        let row = &self.echelon.rows[block][row_idx];
        let mut out: Option<Vec<Int>> = None;
        for (idx, coeff) in row.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (set, c) in act_on_monomial(&mons[idx], g, self.level) {
                let tb = tgt.expect("generator image leaves the admissible span");
                let slot = layout.index[tb]
                    .get(&set)
                    .expect("generator image leaves the admissible span");
                let dense =
                    out.get_or_insert_with(|| vec![Int::zero(); layout.monomials[tb].len()]);
                dense[*slot] += coeff * c;
            }
        }
        let dense = out?;
        if dense.iter().all(|v| v.is_zero()) {
            None
        } else {
            Some((tgt.unwrap(), dense))
        }
    }

    /// Insert seeds and close under `gens`; new rows are tagged `level_tag`.
    /// Returns the indices of all rows added.
    pub(crate) fn close(
        &mut self,
        seeds: Vec<(usize, Vec<Int>)>,
        gens: &[CurrentElement],
        level_tag: u32,
    ) -> Vec<(usize, usize)> {
        let mut added = Vec::new();
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        for (block, dense) in seeds {
            if self.echelon.saturated(block) {
                continue;
            }
            if let Some(row) = self.echelon.reduce_insert(block, dense, level_tag) {
                queue.push_back((block, row));
                added.push((block, row));
            }
        }
        while let Some((block, row_idx)) = queue.pop_front() {
            for g in gens {
                if self.target_saturated(block, g) {
                    continue;
                }
                let Some((tb, dense)) = self.apply(block, row_idx, g) else {
                    continue;
                };
                if self.echelon.saturated(tb) {
                    continue;
                }
                if let Some(row) = self.echelon.reduce_insert(tb, dense, level_tag) {
                    queue.push_back((tb, row));
                    added.push((tb, row));
                }
            }
        }
        added
    }

    pub(crate) fn dim(&self) -> usize {
        self.echelon.dim
    }

    pub(crate) fn block_rank(&self, block: usize) -> usize {
        self.echelon.rows[block].len()
    }

    pub(crate) fn row_levels(&self, block: usize) -> impl Iterator<Item = u32> + '_ {
        self.echelon.rows[block].iter().map(|r| r.level)
    }

    pub(crate) fn densify(&self, v: &ModuleVector) -> Option<(usize, Vec<Int>)> {
        assert_eq!(v.level(), self.level);
        assert_eq!(v.r(), self.layout.r);
        self.layout.densify(v)
    }
}

/// The generator truncation for closures: `E_{ij} ⊗ X^k Y^l` with
/// `k, l ≤ ξ_1`. Wider shifts annihilate the exponent window and higher
/// `Y`-powers are linear combinations of these on the window.
pub fn closure_generators(xi: &Partition, r: u32) -> Vec<CurrentElement> {
    generators_with_y_degrees(xi, r, 0..=xi.first())
}

fn generators_with_y_degrees(
    xi: &Partition,
    r: u32,
    ls: impl IntoIterator<Item = u32> + Clone,
) -> Vec<CurrentElement> {
    let mut out = Vec::new();
    for i in 1..=r {
        for j in 1..=r {
            for k in 0..=xi.first() {
                for l in ls.clone() {
                    out.push(CurrentElement::new(i, j, k, l));
                }
            }
        }
    }
    out
}

/// Generators of `Y`-degree zero only, for the filtration.
pub fn degree_zero_generators(xi: &Partition, r: u32) -> Vec<CurrentElement> {
    generators_with_y_degrees(xi, r, 0..=0)
}

/// A computed basis of a submodule of `∧^{|ξ|} V_r^{(N)}`, organized by
/// `(weight, x-degree)` blocks over the admissible monomials.
pub struct ModuleBasis {
    layout: BlockLayout,
    level: i32,
    ranks: Vec<usize>,
    dim: usize,
}

impl ModuleBasis {
    pub fn xi(&self) -> &Partition {
        self.layout.xi()
    }

    pub fn r(&self) -> u32 {
        self.layout.r()
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn admissible_count(&self) -> usize {
        self.layout.admissible_count()
    }

    /// `(weight, x-degree, admissible monomials, rank)` per block.
    pub fn blocks(&self) -> impl Iterator<Item = (&BlockKey, &[CellSet], usize)> {
        (0..self.layout.block_count())
            .map(move |b| (self.layout.key(b), self.layout.monomials(b), self.ranks[b]))
    }

    /// Rank of the `(η, d)` block, zero when the block is absent.
    pub fn block_rank(&self, key: &BlockKey) -> usize {
        self.layout.block_of_key(key).map_or(0, |b| self.ranks[b])
    }

    /// Dimension per weight, summed over degrees.
    pub fn weight_dims(&self) -> BTreeMap<WeightVector, usize> {
        let mut out = BTreeMap::new();
        for (key, _, rank) in self.blocks() {
            if rank > 0 {
                *out.entry(key.0.clone()).or_insert(0) += rank;
            }
        }
        out
    }

    /// Dimension per (weight, x-degree).
    pub fn weight_x_dims(&self) -> BTreeMap<(WeightVector, u32), usize> {
        let mut out = BTreeMap::new();
        for (key, _, rank) in self.blocks() {
            if rank > 0 {
                *out.entry((key.0.clone(), key.1 as u32)).or_insert(0) += rank;
            }
        }
        out
    }

    /// Largest x-degree carrying a nonzero block.
    pub fn max_x_degree(&self) -> Option<i64> {
        self.blocks()
            .filter(|(_, _, rank)| *rank > 0)
            .map(|(key, _, _)| key.1)
            .max()
    }

    /// True when every admissible monomial is independent in the module,
    /// i.e. each block is saturated.
    pub fn basis_matches_admissible(&self) -> bool {
        self.blocks().all(|(_, mons, rank)| mons.len() == rank)
    }

    pub(crate) fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub(crate) fn layout(&self) -> &BlockLayout {
        &self.layout
    }
}

/// The submodule of `∧^{|ξ|} V_r^{(N)}` generated by `seeds` under
/// `gl_r ⊗ C<X,Y>`, computed by fixpoint row reduction. Every seed must be
/// supported on admissible monomials for ξ.
pub fn submodule_closure(
    xi: &Partition,
    r: u32,
    level: i32,
    seeds: &[ModuleVector],
) -> ModuleBasis {
    let layout = BlockLayout::new(xi, r);
    let gens = closure_generators(xi, r);
    let mut engine = ClosureEngine::new(&layout, level, None);
    let dense_seeds = seeds.iter().filter_map(|v| engine.densify(v)).collect();
    engine.close(dense_seeds, &gens, 0);
    let ranks: Vec<usize> = (0..layout.block_count())
        .map(|b| engine.block_rank(b))
        .collect();
    let dim = engine.dim();
    ModuleBasis {
        layout,
        level,
        ranks,
        dim,
    }
}

/// `V(ξ,N)`: the closure of the cyclic vector `v_ξ^{(N)}`.
pub fn cyclic_closure(xi: &Partition, r: u32, level: i32) -> ModuleBasis {
    assert!(xi.len() <= r as usize, "xi must have at most r parts");
    let seed = ModuleVector::cyclic_vector(xi, r, level);
    submodule_closure(xi, r, level, &[seed])
}
