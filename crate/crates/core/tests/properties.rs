//! Property tests for the invariants that quantify over inputs.

use proptest::prelude::*;

use weylpark_core::arith::{multinomial, Int};
use weylpark_core::combinatorics::{
    enumerate_a, enumerate_parking, in_q_plus, parking_statistic, rho_of_xi, ParkingFunction,
    Partition, WeightVector,
};
use weylpark_core::symfunc::{e_product_to_schur, KostkaTable};
use weylpark_core::wedge::{act, cyclic_monomial, is_admissible, CurrentElement, ModuleVector};

fn partition_strategy(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    })
}

fn weight_strategy(r: usize, span: i64) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(-span..=span, r).prop_map(WeightVector::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn transpose_is_an_involution(p in partition_strategy(7, 6)) {
        let t = p.transpose();
        prop_assert_eq!(t.transpose(), p.clone());
        prop_assert_eq!(t.size(), p.size());
    }

    #[test]
    fn rho_shape(p in partition_strategy(6, 4)) {
        let rho = rho_of_xi(&p);
        prop_assert_eq!(rho.first(), p.first());
        prop_assert_eq!(rho.len() as u32, p.size());
        let expected: u32 = (1..=p.first())
            .map(|i| i * p.transpose().part(i as usize))
            .sum();
        prop_assert_eq!(rho.size(), expected);
    }

    #[test]
    fn q_plus_is_a_partial_order(
        a in weight_strategy(3, 4),
        b in weight_strategy(3, 4),
        c in weight_strategy(3, 4),
    ) {
        prop_assert!(in_q_plus(&a, &a));
        if in_q_plus(&a, &b) && in_q_plus(&b, &a) {
            prop_assert_eq!(a.clone(), b.clone());
        }
        if in_q_plus(&a, &b) && in_q_plus(&b, &c) {
            prop_assert!(in_q_plus(&a, &c));
        }
    }

    #[test]
    fn parking_statistic_is_permutation_invariant(
        xi in partition_strategy(3, 3),
        shuffle in prop::collection::vec(0usize..100, 6),
    ) {
        let n = xi.size();
        let rho = rho_of_xi(&xi);
        let functions = enumerate_parking(n, &rho);
        for f in functions.iter().take(8) {
            let mut values = f.values().to_vec();
            // a deterministic shuffle driven by the generated swaps
            for (i, &s) in shuffle.iter().enumerate() {
                if values.len() > 1 {
                    let a = i % values.len();
                    let b = s % values.len();
                    values.swap(a, b);
                }
            }
            let g = ParkingFunction::new(values, rho.clone());
            let g = g.expect("permuting the domain preserves the parking condition");
            prop_assert_eq!(parking_statistic(&g), parking_statistic(f));
        }
    }

    #[test]
    fn parking_count_matches_orbit_decomposition(xi in partition_strategy(3, 3)) {
        let n = xi.size();
        let rho = rho_of_xi(&xi);
        let count = Int::from(enumerate_parking(n, &rho).len() as i64);
        let orbit_sum: Int = enumerate_a(n, &rho).iter().map(|a| multinomial(a)).sum();
        prop_assert_eq!(count, orbit_sum);
    }

    #[test]
    fn e_products_commute(
        a in prop::collection::vec(0u32..=3, 1..=4),
        rot in 0usize..4,
        r in 1u32..=3,
    ) {
        let mut rotated = a.clone();
        rotated.rotate_left(rot % a.len().max(1));
        prop_assert_eq!(e_product_to_schur(&a, r), e_product_to_schur(&rotated, r));
    }

    #[test]
    fn kostka_is_content_symmetric(
        lambda in partition_strategy(3, 3),
        perm in 0usize..6,
    ) {
        let n = lambda.size() as i64;
        let mut table = KostkaTable::new();
        // split n into three parts, then permute
        let base = [n / 2, (n + 1) / 2 - n / 3, n / 3 + n - (n / 2 + (n + 1) / 2)];
        let mut content = vec![base[0], base[1], base[2]];
        if content.iter().any(|&c| c < 0) || content.iter().sum::<i64>() != n {
            content = vec![n, 0, 0];
        }
        let orig = table.kostka(&lambda, &WeightVector::new(content.clone()));
        for _ in 0..perm {
            content.rotate_left(1);
        }
        let rotated = table.kostka(&lambda, &WeightVector::new(content));
        prop_assert_eq!(orig, rotated);
    }

    #[test]
    fn action_is_graded(
        xi in partition_strategy(3, 2).prop_filter("nonempty", |p| !p.is_empty()),
        i in 1u32..=2,
        j in 1u32..=2,
        k in 0u32..=2,
        l in 0u32..=2,
        extra in 0i32..=1,
    ) {
        let r = 2u32;
        let level = xi.first() as i32 + extra;
        let g = CurrentElement::new(i, j, k, l);
        let v = ModuleVector::cyclic_vector(&xi, r, level);
        let out = act(&g, &v);
        let h0 = cyclic_monomial(&xi);
        let base_weight = h0.weight(r);
        let base_degree = h0.x_degree(&xi);
        for (h, _) in out.terms() {
            prop_assert!(is_admissible(h, &xi, r));
            let shift = WeightVector::epsilon(i, r).sub(&WeightVector::epsilon(j, r));
            prop_assert_eq!(h.weight(r), base_weight.add(&shift));
            prop_assert_eq!(h.x_degree(&xi), base_degree + k as i64);
        }
    }
}
