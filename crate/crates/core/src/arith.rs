//! Exact integer and rational scalars plus the handful of closed-form
//! counting functions used across the crate.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= int(k as i64);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

/// Falling factorial `s (s−1) ⋯ (s−a+1)`, with the empty product for `a = 0`.
pub fn falling(s: i64, a: u32) -> Int {
    let mut acc = Int::one();
    for t in 0..a as i64 {
        acc *= int(s - t);
    }
    acc
}

/// Multinomial coefficient `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u32]) -> Int {
    let total: u64 = parts.iter().map(|&p| p as u64).sum();
    let mut acc = factorial(total);
    for &p in parts {
        acc /= factorial(p as u64);
    }
    acc
}

/// Stirling numbers of the second kind, `S(l, a)`.
///
/// These expand powers of the Euler operator: `(xD)^l = Σ_a S(l,a) x^a D^a`.
pub fn stirling2(l: u32, a: u32) -> Int {
    if a > l {
        return Int::zero();
    }
    if l == 0 {
        return Int::one(); // S(0,0) = 1
    }
    if a == 0 {
        return Int::zero();
    }
    // S(l,a) = a·S(l−1,a) + S(l−1,a−1), built row by row.
    let mut row: Vec<Int> = alloc::vec![Int::one()]; // S(0,0)
    for _ in 1..=l {
        let mut next = alloc::vec![Int::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += int(j as i64) * v;
            next[j + 1] += v;
        }
        row = next;
    }
    row[a as usize].clone()
}

/// The higher Catalan number `(r(n+1))! / ((n+1)! ((r−1)(n+1)+1)!)`.
pub fn higher_catalan(r: u64, n: u64) -> Int {
    let m = n + 1;
    factorial(r * m) / (factorial(m) * factorial((r - 1) * m + 1))
}

/// Integer power with exact arithmetic.
pub fn int_pow(s: i64, l: u32) -> Int {
    let mut acc = Int::one();
    for _ in 0..l {
        acc *= int(s);
    }
    acc
}

pub fn gcd(a: &Int, b: &Int) -> Int {
    num_integer::Integer::gcd(a, b)
}

pub fn lcm(a: &Int, b: &Int) -> Int {
    num_integer::Integer::lcm(a, b)
}

pub fn is_zero_rat(x: &Rat) -> bool {
    x.is_zero()
}

pub fn rat_from_int(n: Int) -> Rat {
    Rat::from_integer(n)
}

/// Sign of a permutation given by the list of distinct keys `xs`:
/// parity of the number of inversions.
pub fn permutation_sign<T: Ord>(xs: &[T]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                inversions += 1;
            }
        }
    }
    if inversions & 1 == 0 {
        1
    } else {
        -1
    }
}

/// True if `x` is a (possibly negative) integer rational.
pub fn rat_is_integer(x: &Rat) -> bool {
    x.denom().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(6, 3), int(20));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(multinomial(&[1, 2, 0]), int(3));
    }

    #[test]
    fn higher_catalan_values() {
        let expect_r2 = [1i64, 2, 5, 14, 42];
        for (n, &c) in expect_r2.iter().enumerate() {
            assert_eq!(higher_catalan(2, n as u64), int(c));
        }
        let expect_r3 = [1i64, 3, 12, 55];
        for (n, &c) in expect_r3.iter().enumerate() {
            assert_eq!(higher_catalan(3, n as u64), int(c));
        }
    }

    #[test]
    fn stirling_row() {
        // (xD)^3 = x D + 3 x^2 D^2 + x^3 D^3
        assert_eq!(stirling2(3, 0), int(0));
        assert_eq!(stirling2(3, 1), int(1));
        assert_eq!(stirling2(3, 2), int(3));
        assert_eq!(stirling2(3, 3), int(1));
        assert_eq!(stirling2(0, 0), int(1));
    }

    #[test]
    fn falling_factorial() {
        assert_eq!(falling(5, 0), int(1));
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(-1, 3), int(-6));
        assert_eq!(falling(1, 3), int(0));
    }

    #[test]
    fn inversion_sign() {
        assert_eq!(permutation_sign(&[1, 2, 3]), 1);
        assert_eq!(permutation_sign(&[2, 1, 3]), -1);
        assert_eq!(permutation_sign::<i32>(&[]), 1);
    }
}
