//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Everything here is exact arithmetic; no tolerances anywhere.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylpark_core::arith::{higher_catalan, rat_from_int, Int, Rat};
use weylpark_core::combinatorics::{enumerate_parking, staircase, Partition, WeightVector};
use weylpark_core::degeneration::{
    alpha_experiment, bigraded_character_at, degree_formula, BigradedCharacter,
};
use weylpark_core::fock::{
    act_fock, annihilation_identity_check, cocycle_formula, current_op, det_twist_scalar, embed,
    enumerate_sector, highest_weight_monomial, limit_character_lhs, limit_character_rhs,
    verify_cocycle, DiffOpElement, FockMonomial, FockVector,
};
use weylpark_core::symfunc::{
    e_product_to_schur, frobenius_character, weight_multiplicity, KostkaTable,
};
use weylpark_core::wedge::{
    act, bracket_terms, cyclic_closure, enumerate_admissible, CurrentElement, ModuleVector,
};

fn partitions_up_to(max_size: u32, max_parts: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        out.extend(Partition::enumerate(n, max_parts));
    }
    out
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
fn criterion_01_catalan_dimensions() {
    let cases: Vec<(u32, u32)> = (0..=4)
        .map(|n| (2u32, n))
        .chain((0..=3).map(|n| (3, n)))
        .collect();
    let expect_r2 = [1usize, 2, 5, 14, 42];
    let expect_r3 = [1usize, 3, 12, 55];
    for (r, n) in cases {
        let xi = Partition::single_row(n);
        let dim = cyclic_closure(&xi, r, n.max(1) as i32).dimension();
        assert_eq!(
            Int::from(dim as i64),
            higher_catalan(r as u64, n as u64),
            "r={r}, n={n}"
        );
        let table = if r == 2 {
            &expect_r2[..]
        } else {
            &expect_r3[..]
        };
        assert_eq!(dim, table[n as usize], "r={r}, n={n}");
    }
    println!("criterion 1 (Catalan dimensions, exact): PASS");
}

#[test]
fn criterion_02_basis_theorem() {
    for r in 1..=3u32 {
        for xi in partitions_up_to(5, r) {
            for level in [xi.first() as i32, xi.first() as i32 + 1] {
                let basis = cyclic_closure(&xi, r, level);
                assert_eq!(
                    basis.dimension(),
                    basis.admissible_count(),
                    "xi={xi}, r={r}, N={level}"
                );
                assert!(
                    basis.basis_matches_admissible(),
                    "admissible monomials dependent for xi={xi}, r={r}, N={level}"
                );
                assert_eq!(
                    basis.admissible_count(),
                    enumerate_admissible(&xi, r).len(),
                    "xi={xi}, r={r}"
                );
            }
        }
    }
    println!("criterion 2 (basis theorem, |xi| <= 5, r <= 3, N in {{xi_1, xi_1+1}}): PASS");
}

#[test]
fn criterion_03_three_way_weight_multiplicities() {
    let mut kostka = KostkaTable::new();
    for r in 2..=3u32 {
        for xi in partitions_up_to(4, r) {
            let n = xi.size();
            let level = xi.first().max(1) as i32;
            let admissible = enumerate_admissible(&xi, r);
            let schur = frobenius_character(&xi, r);
            let character = bigraded_character_at(&xi, r, level);
            for eta in compositions(n, r) {
                let eta = WeightVector::new(eta.iter().map(|&c| c as i64).collect::<Vec<_>>());
                let h_poly = {
                    let mut p = weylpark_core::poly::IntPoly::zero();
                    for h in admissible.iter().filter(|h| h.weight(r) == eta) {
                        p.add_term(h.x_degree(&xi) as u32, &Int::from(1));
                    }
                    p
                };
                let kostka_poly = weight_multiplicity(&schur, &eta, &mut kostka);
                let filtration_poly = character.weight_x_poly(&eta);
                assert_eq!(h_poly, kostka_poly, "xi={xi}, r={r}, eta={eta}");
                assert_eq!(h_poly, filtration_poly, "xi={xi}, r={r}, eta={eta}");
            }
            // weights with a negative coordinate vanish on all three routes
            if n > 0 {
                let mut bad = vec![0i64; r as usize];
                bad[0] = n as i64 + 1;
                bad[1] = -1;
                let bad = WeightVector::new(bad);
                assert!(weight_multiplicity(&schur, &bad, &mut kostka).is_zero());
                assert!(!admissible.iter().any(|h| h.weight(r) == bad));
            }
        }
    }
    println!("criterion 3 (three-way weight multiplicity oracle, |xi| <= 4, r = 2,3): PASS");
}

#[test]
fn criterion_04_parking_counts() {
    for n in 0..=6u32 {
        let count = enumerate_parking(n, &staircase(n)).len() as u64;
        assert_eq!(count, (n as u64 + 1).pow(n.saturating_sub(1)), "n={n}");
    }
    let expected = [1usize, 3, 16, 125];
    for r in 1..=4u32 {
        let xi = Partition::single_row(r);
        let tau = WeightVector::tau(r);
        let dim = enumerate_admissible(&xi, r)
            .iter()
            .filter(|h| h.weight(r) == tau)
            .count();
        assert_eq!(dim, expected[(r - 1) as usize], "r={r}");
    }
    println!("criterion 4 (parking counts and tau-weight spaces, exact): PASS");
}

#[test]
fn criterion_05_character_symmetry() {
    for n in 0..=3u32 {
        for s in 0..=1u32 {
            let xi = if n + s == 0 {
                Partition::empty()
            } else {
                Partition::new([n + s, s])
            };
            let level = xi.first().max(1) as i32;
            let ch = bigraded_character_at(&xi, 2, level);
            assert!(ch.is_xy_symmetric(), "xi={xi} (n={n}, s={s})");
        }
    }
    println!("criterion 5 (x-y symmetry of ch V(n e1 + s tau), r = 2, n <= 3): PASS");
}

fn criterion_2_characters() -> Vec<(Partition, u32, BigradedCharacter, BigradedCharacter)> {
    let mut out = Vec::new();
    for r in 1..=3u32 {
        for xi in partitions_up_to(5, r) {
            let level = xi.first().max(1) as i32;
            let a = bigraded_character_at(&xi, r, level);
            let b = bigraded_character_at(&xi, r, level + 1);
            out.push((xi, r, a, b));
        }
    }
    out
}

#[test]
fn criterion_06_degree_formula() {
    for (xi, r, ch, _) in criterion_2_characters() {
        assert_eq!(
            ch.max_x() as i64,
            degree_formula(&xi, r),
            "max x-degree of ch V({xi}), r={r}"
        );
    }
    println!("criterion 6 (degree formula d(xi) = max x-degree): PASS");
}

#[test]
fn criterion_07_n_independence() {
    for (xi, r, a, b) in criterion_2_characters() {
        assert!(a.same_entries(&b), "character of {xi} (r={r}) depends on N");
    }
    println!("criterion 7 (bigraded characters independent of N): PASS");
}

#[test]
fn criterion_08_cocycle_suite() {
    let r = 2u32;
    let mut samples: Vec<FockMonomial> = vec![FockMonomial::vacuum()];
    for n in -1..=2i64 {
        samples.push(highest_weight_monomial(n, r));
        samples.extend(enumerate_sector(n, r, 2));
    }
    samples.sort_unstable();
    samples.dedup();
    let pairs = [
        ((1u32, 1u32), (1u32, 1u32)), // Tr = 1
        ((1, 2), (2, 1)),             // Tr = 1
        ((1, 1), (2, 2)),             // Tr = 0
        ((1, 2), (1, 2)),             // Tr = 0
    ];
    let mut checked = 0usize;
    for (a, b) in [(0u32, 0u32), (0, 1), (1, 0), (1, 1), (2, 0), (0, 2)] {
        for i in -3..=3i64 {
            for j in -3..=3i64 {
                for (g1, g2) in pairs {
                    let op_a = DiffOpElement::unit(g1.0, g1.1, r, i, a);
                    let op_b = DiffOpElement::unit(g2.0, g2.1, r, j, b);
                    let got = verify_cocycle(&op_a, &op_b, &samples).unwrap_or_else(|e| {
                        panic!("non-scalar defect: {e} at a={a} b={b} i={i} j={j}")
                    });
                    // K acts by 1, so the measured central scalar must be
                    // exactly the closed-form omega.
                    assert_eq!(
                        got,
                        cocycle_formula(&op_a, &op_b),
                        "a={a} b={b} i={i} j={j} g1={g1:?} g2={g2:?}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 6 * 7 * 7 * 4);
    println!("criterion 8 (cocycle closed form, {checked} commutator identities, exact): PASS");
}

#[test]
fn criterion_09_annihilation_identity() {
    let r = 2u32;
    let samples: Vec<FockMonomial> = (0..=3i64).flat_map(|n| enumerate_sector(n, r, 4)).collect();
    assert!(!samples.is_empty());
    for j in 1..=2u32 {
        for m in -2..=2i64 {
            assert!(
                annihilation_identity_check(j, m, &samples, r),
                "annihilation identity failed at j={j}, m={m}"
            );
        }
    }
    println!(
        "criterion 9 (annihilation identity on {} monomials, modes |m| <= 2): PASS",
        samples.len()
    );
}

#[test]
fn criterion_10_limit_character() {
    for n in [0i64, 1] {
        let r = 2u32;
        let depth = 2u32;
        let rhs = limit_character_rhs(n, r, depth);
        let lhs2 = limit_character_lhs(n, r, 2, depth);
        let lhs3 = limit_character_lhs(n, r, 3, depth);
        assert!(
            lhs2.agrees_with(&lhs3, depth),
            "x^0..x^2 coefficients not stabilized by N = 3 for n={n}"
        );
        assert!(
            lhs3.agrees_with(&rhs, depth),
            "stabilized coefficients differ from the closed form for n={n}"
        );
    }
    println!(
        "criterion 10 (limit character stabilizes by N <= 3 and matches closed form, x <= 2): PASS"
    );
}

fn random_partition(rng: &mut ChaCha8Rng, max_first: u32, max_parts: u32) -> Partition {
    let mut parts = Vec::new();
    let mut cap = rng.gen_range(1..=max_first);
    for _ in 0..rng.gen_range(1..=max_parts) {
        let p = rng.gen_range(0..=cap);
        if p == 0 {
            break;
        }
        parts.push(p);
        cap = p;
    }
    Partition::new(parts)
}

fn random_vector(rng: &mut ChaCha8Rng, xi: &Partition, r: u32, level: i32) -> ModuleVector {
    let admissible = enumerate_admissible(xi, r);
    let mut v = ModuleVector::zero(r, level);
    for _ in 0..rng.gen_range(1..=3usize) {
        let h = admissible[rng.gen_range(0..admissible.len())].clone();
        let c = rat_from_int(Int::from(rng.gen_range(-4i64..=4)));
        v.add_term(h, c);
    }
    v
}

#[test]
fn criterion_11_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260809);

    // bracket fidelity under YX − XY = X on 200 randomized triples
    for trial in 0..200 {
        let r = rng.gen_range(2..=3u32);
        let xi = random_partition(&mut rng, 3, r);
        let level = xi.first().max(1) as i32 + rng.gen_range(0..=1);
        let v = random_vector(&mut rng, &xi, r, level);
        let a = CurrentElement::new(
            rng.gen_range(1..=r),
            rng.gen_range(1..=r),
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
        );
        let b = CurrentElement::new(
            rng.gen_range(1..=r),
            rng.gen_range(1..=r),
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
        );
        let mut lhs = act(&a, &act(&b, &v));
        lhs.sub_assign(&act(&b, &act(&a, &v)));
        let mut rhs = ModuleVector::zero(r, level);
        for (c, term) in bracket_terms(&a, &b) {
            rhs.add_assign(&act(&term, &v).scaled(&rat_from_int(c)));
        }
        assert_eq!(lhs, rhs, "bracket fidelity, trial {trial}, a={a}, b={b}");
    }

    // embed equivariance (with the Det(−N) twist) on 100 randomized pairs
    for trial in 0..100 {
        let r = 2u32;
        let xi = random_partition(&mut rng, 3, r);
        let level = xi.first().max(1) as i32 + rng.gen_range(0..=1);
        let v = random_vector(&mut rng, &xi, r, level);
        let g = CurrentElement::new(
            rng.gen_range(1..=r),
            rng.gen_range(1..=r),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
        );
        let lhs = embed(&act(&g, &v));
        let mut rhs = FockVector::zero(r);
        for op in current_op(&g, r) {
            rhs.add_assign(&act_fock(&op, &embed(&v)));
        }
        rhs.add_assign(&embed(&v).scaled(&rat_from_int(det_twist_scalar(&g, level))));
        assert_eq!(lhs, rhs, "embed equivariance, trial {trial}, g={g}");
    }

    // permutation invariance of e-products on 50 shuffles
    for trial in 0..50 {
        let r = rng.gen_range(1..=3u32);
        let len = rng.gen_range(1..=4usize);
        let a: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=r)).collect();
        let mut shuffled = a.clone();
        for i in (1..shuffled.len()).rev() {
            let j = rng.gen_range(0..=i);
            shuffled.swap(i, j);
        }
        assert_eq!(
            e_product_to_schur(&a, r),
            e_product_to_schur(&shuffled, r),
            "e-product commutativity, trial {trial}, a={a:?}"
        );
    }

    println!("criterion 11 (property suite: 200 brackets, 100 embeddings, 50 shuffles, zero failures): PASS");
}

#[test]
fn criterion_12_alpha_experiment_report() {
    // Non-gating: evidence for the injectivity conjecture is logged,
    // never asserted.
    for n in 0..=2u32 {
        let rep = alpha_experiment(n, 2, (n + 2).max(3) as i32);
        println!(
            "criterion 12 (alpha experiment, reported only): n={n} r=2 generated={} target={} {}",
            rep.generated_dim,
            rep.target_dim,
            if rep.matches() {
                "(matches)"
            } else {
                "(differs)"
            }
        );
    }
}

// Also non-gating: the x-y symmetry of the character is proven only for
// highest weights of the form n e_1 + s tau (criterion 5); for other
// shapes it is conjectural, so the observation is logged, never asserted.
#[test]
fn experiment_symmetry_beyond_proven_weights() {
    for (parts, r) in [
        (vec![2u32, 1], 2u32),
        (vec![3, 1], 2),
        (vec![2, 2], 2),
        (vec![3, 2], 2),
        (vec![2, 1, 0], 3),
        (vec![2, 2, 1], 3),
        (vec![2, 1, 1], 3),
    ] {
        let xi = Partition::new(parts);
        let ch = bigraded_character_at(&xi, r, xi.first().max(1) as i32);
        println!(
            "experiment (x-y symmetry beyond the proven family, reported only): xi={xi} r={r} {}",
            if ch.is_xy_symmetric() {
                "symmetric"
            } else {
                "NOT symmetric"
            }
        );
    }
}

// The closed-form series itself is cross-checked against an independent
// count of sector monomials; this guards the rhs of criterion 10.
#[test]
fn limit_series_counting_oracle() {
    for n in 0..=3i64 {
        let counts = weylpark_core::fock::sector_degree_counts(n, 2, 4);
        let dims = limit_character_rhs(n, 2, 4).dimension_counts();
        for d in 0..=4u32 {
            assert_eq!(
                counts.get(&d).cloned().unwrap_or_else(Int::zero),
                dims.get(&d).cloned().unwrap_or_else(Int::zero),
                "n={n}, depth={d}"
            );
        }
    }
}

// Spot-check that verify_cocycle would actually flag a wrong formula:
// the scalar for a genuinely non-trivial pair is nonzero.
#[test]
fn cocycle_scalar_is_nontrivial() {
    let a = DiffOpElement::unit(1, 2, 2, 2, 0);
    let b = DiffOpElement::unit(2, 1, 2, -2, 0);
    let samples = [FockMonomial::vacuum()];
    let got = verify_cocycle(&a, &b, &samples).unwrap();
    assert_eq!(got, Rat::new(Int::from(2), Int::from(1)));
}
