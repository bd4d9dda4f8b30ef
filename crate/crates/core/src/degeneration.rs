//! The `Y`-degree filtration `F^j V(ξ,N) = U^{≤j} · v_ξ^{(N)}`, its
//! adjoint graded module `V(ξ)` and the bigraded character
//! `ch_{x,y} V(ξ) = Σ x^i y^j ch V^{ij}(ξ)`, together with the degree
//! formula and the α-map experiment.
//!
//! The filtration is computed level by level: `F^0` is the closure of the
//! cyclic vector under the `Y`-degree-zero generators, and `F^j` closes
//! `F^{j−1}` plus the images of `F^{j−l}` under degree-`l` generators
//! (`l ≤ ξ_1` suffices on the exponent window). Rows carry the level at
//! which they entered, so one growing echelon per `(weight, x-degree)`
//! block yields every layer at once.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::combinatorics::{Partition, WeightVector};
use crate::poly::IntPoly;
use crate::wedge::{
    act, cyclic_closure, degree_zero_generators, submodule_closure, ClosureEngine, CurrentElement,
    ModuleBasis, ModuleVector,
};

/// Dimensions of `V^{ij}(ξ)^η`, keyed by `(weight, x-degree, y-degree)`.
/// Weights come out in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedCharacter {
    r: u32,
    xi: Partition,
    entries: BTreeMap<(WeightVector, u32, u32), usize>,
}

impl BigradedCharacter {
    pub fn xi(&self) -> &Partition {
        &self.xi
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(WeightVector, u32, u32), &usize)> {
        self.entries.iter()
    }

    pub fn dim(&self, weight: &WeightVector, x: u32, y: u32) -> usize {
        self.entries
            .get(&(weight.clone(), x, y))
            .copied()
            .unwrap_or(0)
    }

    pub fn total_dimension(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn max_x(&self) -> u32 {
        self.entries.keys().map(|(_, x, _)| *x).max().unwrap_or(0)
    }

    pub fn max_y(&self) -> u32 {
        self.entries.keys().map(|(_, _, y)| *y).max().unwrap_or(0)
    }

    /// `dim F^j` for `j = 0..=max_y`.
    pub fn cumulative_dims(&self) -> Vec<usize> {
        let mut out = alloc::vec![0usize; self.max_y() as usize + 1];
        for ((_, _, y), d) in &self.entries {
            out[*y as usize] += d;
        }
        for j in 1..out.len() {
            out[j] += out[j - 1];
        }
        out
    }

    /// The `e^η → 1` specialization: counts per `(x, y)`.
    pub fn xy_table(&self) -> BTreeMap<(u32, u32), usize> {
        let mut out = BTreeMap::new();
        for ((_, x, y), d) in &self.entries {
            *out.entry((*x, *y)).or_insert(0) += d;
        }
        out
    }

    /// Whether the `e^η → 1` specialization is symmetric under `x ↔ y`.
    pub fn is_xy_symmetric(&self) -> bool {
        let table = self.xy_table();
        table
            .iter()
            .all(|(&(x, y), &d)| table.get(&(y, x)).copied().unwrap_or(0) == d)
    }

    /// The `y → 1` specialization at one weight, as a polynomial in `x`.
    pub fn weight_x_poly(&self, weight: &WeightVector) -> IntPoly {
        let mut out = IntPoly::zero();
        for ((w, x, _), d) in &self.entries {
            if w == weight {
                out.add_term(*x, &crate::arith::int(*d as i64));
            }
        }
        out
    }

    /// Dimension per weight, all gradings summed.
    pub fn weight_dims(&self) -> BTreeMap<WeightVector, usize> {
        let mut out = BTreeMap::new();
        for ((w, _, _), d) in &self.entries {
            *out.entry(w.clone()).or_insert(0) += d;
        }
        out
    }

    /// All weights appearing in the character.
    pub fn weights(&self) -> Vec<WeightVector> {
        self.weight_dims().into_keys().collect()
    }

    /// Equality of the graded data (ignores the ξ label, so characters at
    /// different truncation levels compare directly).
    pub fn same_entries(&self, other: &BigradedCharacter) -> bool {
        self.entries == other.entries
    }
}

/// The nested filtration `F^0 ⊆ F^1 ⊆ …` of `V(ξ,N)`.
pub struct Filtration {
    character: BigradedCharacter,
    level: i32,
    module_dim: usize,
}

impl Filtration {
    /// The bigraded character read off the filtration layers.
    pub fn character(&self) -> &BigradedCharacter {
        &self.character
    }

    pub fn into_character(self) -> BigradedCharacter {
        self.character
    }

    /// `dim F^j` for `j = 0..=max`.
    pub fn dims(&self) -> Vec<usize> {
        self.character.cumulative_dims()
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn module_dimension(&self) -> usize {
        self.module_dim
    }
}

/// Compute the `Y`-filtration of `V(ξ,N)` by graded fixpoint.
pub fn filtration_levels(xi: &Partition, r: u32, level: i32) -> Filtration {
    let closure = cyclic_closure(xi, r, level);
    let layout = closure.layout();
    let caps = closure.ranks().to_vec();
    let target = closure.dimension();
    let top_l = xi.first();

    let l0 = degree_zero_generators(xi, r);
    let mut engine = ClosureEngine::new(layout, level, Some(caps));

    // pending[j] = rows whose degree-l images seed level j
    let mut pending: BTreeMap<u32, Vec<(u32, usize, usize)>> = BTreeMap::new();
    let schedule = |pending: &mut BTreeMap<u32, Vec<(u32, usize, usize)>>,
                    rows: &[(usize, usize)],
                    at: u32| {
        for l in 1..=top_l {
            for &(block, row) in rows {
                pending.entry(at + l).or_default().push((l, block, row));
            }
        }
    };

    let seed = ModuleVector::cyclic_vector(xi, r, level);
    let dense = engine.densify(&seed).into_iter().collect();
    let added = engine.close(dense, &l0, 0);
    schedule(&mut pending, &added, 0);

    while engine.dim() < target {
        let Some((&j, _)) = pending.first_key_value() else {
            break;
        };
        let entries = pending.remove(&j).unwrap();
        let mut seeds = Vec::new();
        for (l, block, row) in entries {
            for i in 1..=r {
                for jj in 1..=r {
                    for k in 0..=top_l {
                        let g = CurrentElement::new(i, jj, k, l);
                        if engine.target_saturated(block, &g) {
                            continue;
                        }
                        if let Some(image) = engine.apply(block, row, &g) {
                            seeds.push(image);
                        }
                    }
                }
            }
        }
        let added = engine.close(seeds, &l0, j);
        schedule(&mut pending, &added, j);
    }
    assert_eq!(
        engine.dim(),
        target,
        "filtration exhausted its seeds before filling the module"
    );

    let mut entries = BTreeMap::new();
    for b in 0..layout.block_count() {
        let (weight, xdeg) = layout.key(b).clone();
        for row_level in engine.row_levels(b) {
            *entries
                .entry((weight.clone(), xdeg as u32, row_level))
                .or_insert(0) += 1;
        }
    }
    Filtration {
        character: BigradedCharacter {
            r,
            xi: xi.clone(),
            entries,
        },
        level,
        module_dim: target,
    }
}

/// Bigraded character of `V(ξ)` computed at one truncation level.
pub fn bigraded_character_at(xi: &Partition, r: u32, level: i32) -> BigradedCharacter {
    filtration_levels(xi, r, level).into_character()
}

/// Bigraded character of `V(ξ)`, computed at `N = max(ξ_1, 1)` and
/// asserted equal at `N + 1` (the character does not depend on `N`).
pub fn bigraded_character(xi: &Partition, r: u32) -> BigradedCharacter {
    let base = xi.first().max(1) as i32;
    let a = bigraded_character_at(xi, r, base);
    let b = bigraded_character_at(xi, r, base + 1);
    assert!(
        a.same_entries(&b),
        "bigraded character of {xi} depends on the truncation level"
    );
    a
}

/// The top x-degree `d(ξ) = Σ_i i ξ^t_i − Σ_{i=1}^{|ξ|} ⌊(i+r−1)/r⌋`.
pub fn degree_formula(xi: &Partition, r: u32) -> i64 {
    let xit = xi.transpose();
    let base: i64 = (1..=xit.len() as i64)
        .map(|i| i * xit.part(i as usize) as i64)
        .sum();
    let floor_sum: i64 = (1..=xi.size() as i64)
        .map(|i| (i + r as i64 - 1) / r as i64)
        .sum();
    base - floor_sum
}

/// The α-map image vector
/// `(E_{r1}⊗X^{n+1}) ⋯ (E_{31}⊗X^{n+r−2}) (E_{21}⊗X^{n+r−1}) · v_{(n+r)ε_1}`
/// inside `V((n+r)ε_1, N)`, the rightmost factor applied first. Twisting
/// by a power of Det normalizes `(n+r)ε_1 + (s−1)τ` to the partition
/// `(n+r)ε_1`, so the shift label `s` drops out.
pub fn alpha_image(n: u32, r: u32, level: i32) -> ModuleVector {
    let ambient = Partition::single_row(n + r);
    let mut v = ModuleVector::cyclic_vector(&ambient, r, level);
    for m in 2..=r {
        v = act(&CurrentElement::new(m, 1, n + r - m + 1, 0), &v);
    }
    v
}

/// Evidence log for the injectivity of `α_{n,s}`: the dimension of the
/// submodule generated by the image vector versus `dim V(nε_1 + sτ)`
/// (`= dim V(nε_1)` by the Det twist). Reported, never asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaReport {
    pub n: u32,
    pub r: u32,
    pub level: i32,
    pub generated_dim: usize,
    pub target_dim: usize,
}

impl AlphaReport {
    pub fn matches(&self) -> bool {
        self.generated_dim == self.target_dim
    }
}

pub fn alpha_experiment(n: u32, r: u32, level: i32) -> AlphaReport {
    let ambient = Partition::single_row(n + r);
    let image = alpha_image(n, r, level);
    let generated = submodule_closure(&ambient, r, level, &[image]);
    let target = cyclic_closure(&Partition::single_row(n), r, n.max(1) as i32);
    AlphaReport {
        n,
        r,
        level,
        generated_dim: generated.dimension(),
        target_dim: target.dimension(),
    }
}

/// Dimension data of `V(ξ,N)` needed by callers that do not care about
/// the filtration: the closure itself.
pub fn module_basis(xi: &Partition, r: u32, level: i32) -> ModuleBasis {
    cyclic_closure(xi, r, level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn degree_formula_examples() {
        assert_eq!(degree_formula(&p(&[2, 0]), 2), 1);
        assert_eq!(degree_formula(&p(&[3, 0]), 2), 2);
        for r in 1..=4u32 {
            let ones = Partition::new(alloc::vec![1; r as usize]);
            assert_eq!(degree_formula(&ones, r), 0);
        }
    }

    #[test]
    fn filtration_catalan_five() {
        // ξ = (2,0), r = 2: dim F^0 = 4, dim F^1 = 5.
        let filt = filtration_levels(&p(&[2, 0]), 2, 2);
        assert_eq!(filt.dims(), alloc::vec![4, 5]);
        let ch = filt.character();
        assert_eq!(ch.total_dimension(), 5);
        // specialization e^η→1: 3 + x + y
        let table = ch.xy_table();
        assert_eq!(table.get(&(0, 0)), Some(&3));
        assert_eq!(table.get(&(1, 0)), Some(&1));
        assert_eq!(table.get(&(0, 1)), Some(&1));
        assert_eq!(table.len(), 3);
        assert!(ch.is_xy_symmetric());
        assert_eq!(ch.max_x() as i64, degree_formula(&p(&[2, 0]), 2));
    }

    #[test]
    fn one_box_module_is_flat() {
        // ξ = (1): F^0 is already everything, all at (0,0).
        let filt = filtration_levels(&p(&[1]), 2, 1);
        assert_eq!(filt.dims(), alloc::vec![2]);
        for ((_, x, y), _) in filt.character().entries() {
            assert_eq!((*x, *y), (0, 0));
        }
    }

    #[test]
    fn n_independence_small() {
        for xi in [p(&[2, 0]), p(&[2, 1]), p(&[1, 1])] {
            let base = xi.first().max(1) as i32;
            let a = bigraded_character_at(&xi, 2, base);
            let b = bigraded_character_at(&xi, 2, base + 1);
            assert!(a.same_entries(&b), "xi = {xi}");
        }
    }

    #[test]
    fn y_specialization_matches_frobenius() {
        use crate::symfunc::{frobenius_character, weight_multiplicity, KostkaTable};
        let mut table = KostkaTable::new();
        for (xi, r) in [(p(&[2, 0]), 2u32), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 3)] {
            let ch = bigraded_character_at(&xi, r, xi.first().max(1) as i32);
            let exp = frobenius_character(&xi, r);
            for weight in ch.weights() {
                let got = ch.weight_x_poly(&weight);
                let want = weight_multiplicity(&exp, &weight, &mut table);
                assert_eq!(got, want, "xi = {xi}, weight = {weight}");
            }
        }
    }

    #[test]
    fn alpha_experiment_r2() {
        // dim V(0) = 1, dim V(ε_1) = 2: evidence for injectivity.
        let rep = alpha_experiment(0, 2, 3);
        assert_eq!(rep.target_dim, 1);
        assert_eq!(rep.generated_dim, 1);
        let rep = alpha_experiment(1, 2, 3);
        assert_eq!(rep.target_dim, 2);
        std::println!(
            "alpha(1,2): generated {} vs target {}",
            rep.generated_dim,
            rep.target_dim
        );
    }

    #[test]
    fn character_records_are_weight_sorted() {
        let ch = bigraded_character_at(&p(&[2, 0]), 2, 2);
        let keys: Vec<_> = ch.entries().map(|(k, _)| k.clone()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(
            ch.weight_x_poly(&WeightVector::new([1, 1])).eval_one(),
            int(3)
        );
    }
}
