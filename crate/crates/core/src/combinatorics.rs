//! Partitions, integer weight vectors, the root-lattice order, and
//! ρ-parking functions together with the sequence class `A_n(ρ)`.
//!
//! Enumerations are lexicographic and counts are exact big integers, so
//! all outputs are stable across runs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::arith::{multinomial, Int};

/// A partition: weakly decreasing non-negative parts, trailing zeros
/// stripped on construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `n ε_1` as a partition: the single row `(n)`.
    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part (1-indexed), zero beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    /// |ξ|: the number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transposed partition: `result_i = #{j : p_j ≥ i}`.
    pub fn transpose(&self) -> Partition {
        let mut out = Vec::new();
        for i in 1..=self.first() {
            out.push(self.parts.iter().filter(|&&p| p >= i).count() as u32);
        }
        Partition { parts: out }
    }

    /// Pad with zeros to an `r`-coordinate weight vector.
    /// Panics if the partition has more than `r` parts.
    pub fn to_weight(&self, r: u32) -> WeightVector {
        assert!(
            self.parts.len() <= r as usize,
            "partition has more parts than coordinates"
        );
        let mut coords = vec![0i64; r as usize];
        for (i, &p) in self.parts.iter().enumerate() {
            coords[i] = p as i64;
        }
        WeightVector { coords }
    }

    /// All partitions of `n` with at most `max_len` parts, lexicographically
    /// decreasing in the first part.
    pub fn enumerate(n: u32, max_len: u32) -> Vec<Partition> {
        fn go(
            n: u32,
            max_part: u32,
            max_len: u32,
            prefix: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            if max_len == 0 {
                return;
            }
            for p in (1..=max_part.min(n)).rev() {
                prefix.push(p);
                go(n - p, p, max_len - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n.max(1), max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An integer weight for `gl_r`: `r` coordinates, possibly negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        WeightVector {
            coords: coords.into(),
        }
    }

    pub fn zero(r: u32) -> Self {
        WeightVector {
            coords: vec![0; r as usize],
        }
    }

    /// Standard unit vector `ε_i` (1-indexed).
    pub fn epsilon(i: u32, r: u32) -> Self {
        assert!(i >= 1 && i <= r);
        let mut coords = vec![0; r as usize];
        coords[(i - 1) as usize] = 1;
        WeightVector { coords }
    }

    /// `τ = (1, …, 1)`, the trace weight.
    pub fn tau(r: u32) -> Self {
        WeightVector {
            coords: vec![1; r as usize],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// |η|: the coordinate sum.
    pub fn sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.len(), other.len());
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.len(), other.len());
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: i64) -> WeightVector {
        WeightVector {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// All coordinates non-negative.
    pub fn is_effective(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Weakly decreasing coordinates.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// Interpret a dominant non-negative weight as a partition.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_dominant() && self.is_effective() {
            Some(Partition::new(
                self.coords.iter().map(|&c| c as u32).collect::<Vec<_>>(),
            ))
        } else {
            None
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `a − b ∈ Q_+`: the difference is a non-negative integer combination of
/// the simple roots `ε_i − ε_{i+1}`. Equivalently all partial sums of
/// `a − b` are non-negative and the total sum is zero.
pub fn in_q_plus(a: &WeightVector, b: &WeightVector) -> bool {
    assert_eq!(a.len(), b.len(), "weights must have the same length");
    let mut partial = 0i64;
    for (x, y) in a.coords().iter().zip(b.coords()) {
        partial += x - y;
        if partial < 0 {
            return false;
        }
    }
    partial == 0
}

/// The partition `ρ = (1^{ξ^t_1} 2^{ξ^t_2} …)` attached to ξ: each `j`
/// appears `ξ^t_j` times. Its largest part is `ξ_1` and it has `|ξ|` parts.
pub fn rho_of_xi(xi: &Partition) -> Partition {
    let xit = xi.transpose();
    let mut parts = Vec::with_capacity(xi.size() as usize);
    for j in (1..=xit.len() as u32).rev() {
        for _ in 0..xit.part(j as usize) {
            parts.push(j);
        }
    }
    Partition::new(parts)
}

/// A ρ-parking function: `f: {1..n} → {1..n}` with
/// `|f⁻¹({1..ρ_{k−s+1}})| ≥ s` for `s = 1..k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParkingFunction {
    values: Vec<u32>,
    rho: Partition,
}

impl ParkingFunction {
    pub fn new(values: impl Into<Vec<u32>>, rho: Partition) -> Option<Self> {
        let values = values.into();
        if is_parking(&values, &rho) {
            Some(ParkingFunction { values, rho })
        } else {
            None
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }
}

/// The ρ-parking condition for a value table on `{1..n}`.
pub fn is_parking(values: &[u32], rho: &Partition) -> bool {
    let n = values.len() as u32;
    if values.iter().any(|&v| v < 1 || v > n) {
        return false;
    }
    let k = rho.len();
    for s in 1..=k {
        let bound = rho.part(k - s + 1);
        let count = values.iter().filter(|&&v| v <= bound).count();
        if count < s {
            return false;
        }
    }
    true
}

/// The grading statistic `|ρ| − Σ_i f(i)`.
pub fn parking_statistic(f: &ParkingFunction) -> u64 {
    let total: u64 = f.values.iter().map(|&v| v as u64).sum();
    let rho_size = f.rho.size() as u64;
    rho_size
        .checked_sub(total)
        .expect("parking statistic must be non-negative")
}

/// All ρ-parking functions on `{1..n}`, in lexicographic order of the
/// value tables.
pub fn enumerate_parking(n: u32, rho: &Partition) -> Vec<ParkingFunction> {
    let mut out = Vec::new();
    if n == 0 {
        if rho.is_empty() {
            out.push(ParkingFunction {
                values: Vec::new(),
                rho: rho.clone(),
            });
        }
        return out;
    }
    let mut values = vec![1u32; n as usize];
    loop {
        if is_parking(&values, rho) {
            out.push(ParkingFunction {
                values: values.clone(),
                rho: rho.clone(),
            });
        }
        // next tuple in lexicographic order over {1..n}^n
        let mut pos = n as usize;
        loop {
            if pos == 0 {
                return out;
            }
            if values[pos - 1] < n {
                values[pos - 1] += 1;
                for v in values[pos..].iter_mut() {
                    *v = 1;
                }
                break;
            }
            pos -= 1;
        }
    }
}

/// The class `A_n(ρ)`: sequences `(a_1, …, a_n)` of non-negative integers
/// with `Σ a_i = n` and `a_1 + … + a_{ρ_{k−s+1}} ≥ s` for `s = 1..k`, in
/// lexicographic order.
pub fn enumerate_a(n: u32, rho: &Partition) -> Vec<Vec<u32>> {
    fn satisfies(a: &[u32], rho: &Partition) -> bool {
        let k = rho.len();
        for s in 1..=k {
            let bound = rho.part(k - s + 1) as usize;
            let sum: u64 = a.iter().take(bound).map(|&x| x as u64).sum();
            if sum < s as u64 {
                return false;
            }
        }
        true
    }
    fn go(
        remaining: u32,
        slots: u32,
        prefix: &mut Vec<u32>,
        rho: &Partition,
        out: &mut Vec<Vec<u32>>,
    ) {
        if slots == 0 {
            if remaining == 0 && satisfies(prefix, rho) {
                out.push(prefix.clone());
            }
            return;
        }
        for a in 0..=remaining {
            prefix.push(a);
            go(remaining - a, slots - 1, prefix, rho, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if rho.is_empty() {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, n, &mut Vec::new(), rho, &mut out);
    out
}

/// Parking-function count through the orbit decomposition:
/// `Σ_{A_n(ρ)} n! / (a_1! ⋯ a_n!)`.
pub fn parking_count_by_orbits(n: u32, rho: &Partition) -> Int {
    let mut acc = Int::zero();
    for a in enumerate_a(n, rho) {
        acc += multinomial(&a);
    }
    acc
}

/// The classical parking partition `ρ = (n, n−1, …, 1)`.
pub fn staircase(n: u32) -> Partition {
    Partition::new((1..=n).rev().collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::new([2, 0]).transpose(), Partition::new([1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(
            Partition::new([3, 1]).transpose(),
            Partition::new([2, 1, 1])
        );
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_of_xi(&Partition::new([2, 0])), Partition::new([2, 1]));
        // ξ = n ε_1 gives the usual parking partition (n, n−1, …, 1)
        assert_eq!(rho_of_xi(&Partition::single_row(4)), staircase(4));
        assert_eq!(rho_of_xi(&Partition::new([1, 1])), Partition::new([1, 1]));
        let xi = Partition::new([3, 1]);
        let rho = rho_of_xi(&xi);
        assert_eq!(rho.first(), xi.first());
        assert_eq!(rho.len(), xi.size() as usize);
        let expected: u32 = (1..=xi.first())
            .map(|i| i * xi.transpose().part(i as usize))
            .sum();
        assert_eq!(rho.size(), expected);
    }

    #[test]
    fn enumerate_a_examples() {
        assert_eq!(
            enumerate_a(2, &Partition::new([2, 1])),
            alloc::vec![alloc::vec![1, 1], alloc::vec![2, 0]]
        );
        assert_eq!(
            enumerate_a(0, &Partition::empty()),
            alloc::vec![Vec::<u32>::new()]
        );
        let a3 = enumerate_a(3, &staircase(3));
        assert_eq!(a3.len(), 5);
        let total: Int = a3.iter().map(|a| multinomial(a)).sum();
        assert_eq!(total, int(16));
    }

    #[test]
    fn enumerate_parking_examples() {
        assert_eq!(enumerate_parking(3, &staircase(3)).len(), 16);
        assert_eq!(enumerate_parking(1, &Partition::new([1])).len(), 1);
        let pf2 = enumerate_parking(2, &Partition::new([2, 1]));
        let tables: Vec<&[u32]> = pf2.iter().map(|f| f.values()).collect();
        assert_eq!(tables, alloc::vec![&[1u32, 1][..], &[1, 2], &[2, 1]]);
    }

    #[test]
    fn parking_statistic_examples() {
        let rho = Partition::new([2, 1]);
        let f = ParkingFunction::new([1, 1], rho.clone()).unwrap();
        assert_eq!(parking_statistic(&f), 1);
        let g = ParkingFunction::new([2, 1], rho.clone()).unwrap();
        assert_eq!(parking_statistic(&g), 0);
        assert!(ParkingFunction::new([2, 2], rho).is_none());
    }

    #[test]
    fn classical_counts() {
        // |PF_n| = (n+1)^{n−1}
        for n in 0..=5u32 {
            let count = enumerate_parking(n, &staircase(n)).len() as u64;
            let expected = (n as u64 + 1).pow(n.saturating_sub(1));
            assert_eq!(count, expected, "n = {n}");
            assert_eq!(
                parking_count_by_orbits(n, &staircase(n)),
                int(expected as i64)
            );
        }
    }

    #[test]
    fn q_plus_examples() {
        let a = WeightVector::new([2, 0]);
        let b = WeightVector::new([1, 1]);
        assert!(in_q_plus(&a, &b));
        assert!(!in_q_plus(&b, &a));
        assert!(in_q_plus(
            &WeightVector::new([3, 0, 0]),
            &WeightVector::new([1, 1, 1])
        ));
        assert!(in_q_plus(&a, &a));
    }

    #[test]
    fn row_filling_has_maximal_bounded_statistic() {
        // f(i) = ⌈i/r⌉ has the largest statistic among parking functions
        // with all fibers of size ≤ r; only those contribute to the
        // character, so this value is the top x-degree.
        let r = 2u32;
        let n = 4u32;
        let rho = staircase(n);
        let values: Vec<u32> = (1..=n).map(|i| (i + r - 1) / r).collect();
        let f = ParkingFunction::new(values, rho.clone()).unwrap();
        let max_bounded = enumerate_parking(n, &rho)
            .into_iter()
            .filter(|f| {
                (1..=n).all(|v| f.values().iter().filter(|&&x| x == v).count() <= r as usize)
            })
            .map(|f| parking_statistic(&f))
            .max()
            .unwrap();
        assert_eq!(parking_statistic(&f), max_bounded);
    }
}
