//! Acceptance suite: every release criterion runs here at its stated
//! tolerance and prints one pass/fail line (visible with `--nocapture`).
//!
//! The order-6 semisimplicity census is the one long-running piece; it is
//! `#[ignore]`d by default and runs with `cargo test -p sexpand-core --test
//! acceptance -- --ignored`.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::prelude::*;
use rand::rngs::StdRng;

use sexpand_core::*;

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn pass(line: &str) {
    println!("acceptance: {line}: PASS");
}

#[test]
fn criterion_1_enumeration_counts() {
    let t0 = Instant::now();
    let mut counts = Vec::new();
    for order in 1..=5 {
        counts.push(enumerate(order, Equivalence::IsoAndAnti).unwrap().len());
    }
    let elapsed = t0.elapsed();
    assert_eq!(counts, vec![1, 4, 18, 126, 1160]);
    assert!(
        elapsed.as_secs() <= 60,
        "orders 1-5 took {elapsed:?}, budget is 60 s"
    );

    let t6 = Instant::now();
    let c6 = common::catalog(6);
    let elapsed6 = t6.elapsed();
    assert_eq!(c6.len(), 15_973);
    assert!(
        elapsed6.as_secs() <= 30 * 60,
        "order 6 took {elapsed6:?}, budget is 30 min"
    );
    pass(&format!(
        "criterion 1 (enumeration counts 1,4,18,126,1160,15973; 1-5 in {elapsed:?}, 6 in {elapsed6:?})"
    ));
}

#[test]
fn criterion_2_commutative_counts() {
    let counts: Vec<usize> = (2..=6).map(|o| common::commutative(o).len()).collect();
    assert_eq!(counts, vec![3, 12, 58, 325, 2143]);
    let ids: Vec<u32> = common::commutative(2)
        .iter()
        .map(|t| t.id.unwrap())
        .collect();
    assert_eq!(ids, vec![1, 2, 4]);
    pass("criterion 2 (commutative counts 3,12,58,325,2143; order-2 ids {1,2,4})");
}

#[test]
fn criterion_3_zero_counts() {
    let counts: Vec<usize> = (2..=6)
        .map(|o| scan_zero(common::commutative(o)).len())
        .collect();
    assert_eq!(counts, vec![2, 8, 39, 226, 1538]);
    pass("criterion 3 (zero-element counts 2,8,39,226,1538)");
}

#[test]
fn criterion_4_resonance_census() {
    let mut with = Vec::new();
    let mut total = Vec::new();
    for order in 2..=6 {
        let lists = scan_resonances(common::commutative(order));
        with.push(lists.len());
        total.push(lists.iter().map(|(_, rs)| rs.len()).sum::<usize>());
    }
    assert_eq!(with, vec![1, 8, 48, 299, 2059]);
    assert_eq!(total, vec![1, 9, 124, 1653, 25_512]);
    // the printed order-4 sentence: 48 semigroups, 124 resonances
    assert_eq!((with[2], total[2]), (48, 124));
    pass(
        "criterion 4 (resonance census 1/8/48/299/2059 semigroups, 1/9/124/1653/25512 resonances)",
    );
}

#[test]
fn criterion_5_sl2_baseline() {
    let m = StructureConstants::sl2().killing_metric().unwrap();
    assert_eq!(m, MetricMatrix::diagonal(&[-8, 8, 8]));
    assert_eq!(m.determinant(), rat(-512));
    pass("criterion 5 (sl2 Killing metric diag(-8,8,8), det -512)");
}

#[test]
fn criterion_6_s770_worked_example() {
    let sl2 = StructureConstants::sl2();
    let full = expand(&sl2, &common::s770()).unwrap();
    assert_eq!(
        full.kc_metric().unwrap().determinant(),
        rat(-144_115_188_075_855_872)
    );

    let p = ResonantPair::new(
        Subset::new(5, &[1, 2, 3]).unwrap(),
        Subset::new(5, &[1, 4, 5]).unwrap(),
    )
    .unwrap();
    let resred = full
        .resonant_subalgebra(&p, &SubspaceDecomposition::sl2_default())
        .unwrap()
        .zero_reduce()
        .unwrap();

    // exactly the six published independent brackets
    let eff = resred.effective_constants();
    let got: BTreeSet<(usize, usize, usize, String)> = eff
        .nonzero_brackets()
        .into_iter()
        .map(|(i, j, k, v)| (i, j, k, v.to_string()))
        .collect();
    // generators 1..6 are (1,2),(1,3),(2,4),(2,5),(3,4),(3,5)
    let expected: BTreeSet<(usize, usize, usize, String)> = [
        (1, 4, 6, "-2"), // [X_{1,2}, X_{2,5}] = -2 X_{3,5}
        (1, 6, 4, "2"),  // [X_{1,2}, X_{3,5}] =  2 X_{2,5}
        (2, 3, 5, "-2"), // [X_{1,3}, X_{2,4}] = -2 X_{3,4}
        (2, 5, 3, "2"),  // [X_{1,3}, X_{3,4}] =  2 X_{2,4}
        (3, 5, 2, "2"),  // [X_{2,4}, X_{3,4}] =  2 X_{1,3}
        (4, 6, 1, "2"),  // [X_{2,5}, X_{3,5}] =  2 X_{1,2}
    ]
    .into_iter()
    .map(|(i, j, k, v)| (i, j, k, v.to_string()))
    .collect();
    assert_eq!(got, expected);
    assert_eq!(
        resred.retained(),
        &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)]
    );

    let m = resred.kc_metric().unwrap();
    assert_eq!(m, MetricMatrix::diagonal(&[-8, -8, 8, 8, 8, 8]));
    assert_eq!(m.determinant(), rat(262_144));
    pass("criterion 6 (s770: full det -144115188075855872; resonant-reduced diag(-8,-8,8,8,8,8), det 262144)");
}

#[test]
fn criterion_7_sn3_example() {
    // the five published resonances, as sets
    let got: BTreeSet<ResonantPair> = find_all_resonances(&common::s_n3()).into_iter().collect();
    let mk = |s0: &[usize], s1: &[usize]| {
        ResonantPair::new(Subset::new(4, s0).unwrap(), Subset::new(4, s1).unwrap()).unwrap()
    };
    let expected: BTreeSet<ResonantPair> = [
        mk(&[2, 4], &[1, 3, 4]),
        mk(&[2, 3, 4], &[1, 4]),
        mk(&[1, 2, 4], &[3, 4]),
        mk(&[2, 3, 4], &[1, 3, 4]),
        mk(&[1, 2, 4], &[1, 3, 4]),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expected);

    // catalog lookup lands on the printed table with the printed witness
    let cat = common::catalog(4);
    let hit = cat.lookup(&common::s_n3()).unwrap().unwrap();
    assert_eq!(*cat.get_by_id(hit.id).unwrap(), common::table42());
    assert_eq!(hit.id, 42); // empirical: ids match the reference numbering
    assert!(!hit.anti);
    assert_eq!(hit.witness.image(), vec![4, 1, 3, 2]);
    let all: Vec<Vec<usize>> = find_isomorphisms(&common::table42(), &common::s_n3())
        .iter()
        .map(Permutation::image)
        .collect();
    assert_eq!(all, vec![vec![4, 1, 3, 2], vec![4, 3, 1, 2]]);
    pass(
        "criterion 7 (s_n3: 5 resonances; lookup -> #42 table, witnesses (4 1 3 2) and (4 3 1 2))",
    );
}

fn pss_row(order: usize) -> (usize, usize, usize, usize) {
    let report = census(
        &StructureConstants::sl2(),
        "sl2",
        Some(&SubspaceDecomposition::sl2_default()),
        common::commutative(order),
        &Mode::ALL,
    )
    .unwrap();
    assert!(
        report.failures.is_empty(),
        "census rows failed at order {order}"
    );
    (
        report.pss(Mode::Full),
        report.pss(Mode::Reduced),
        report.pss(Mode::Resonant),
        report.pss(Mode::ResonantReduced),
    )
}

#[test]
fn criterion_8_semisimplicity_census_orders_2_to_5() {
    let t0 = Instant::now();
    assert_eq!(pss_row(2), (2, 1, 1, 0));
    assert_eq!(pss_row(3), (5, 3, 1, 1));
    assert_eq!(pss_row(4), (16, 9, 4, 1));
    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs() <= 300,
        "orders 2-4 took {elapsed:?}, budget 5 min"
    );
    assert_eq!(pss_row(5), (51, 34, 7, 6));

    // the six order-5 semigroups preserving semisimplicity through the
    // reduced resonant subalgebra are exactly the published ones, with the
    // printed S770 table landing on id 770 by catalog lookup
    let report5 = census(
        &StructureConstants::sl2(),
        "sl2",
        Some(&SubspaceDecomposition::sl2_default()),
        common::commutative(5),
        &[Mode::ResonantReduced],
    )
    .unwrap();
    let mut resred_ids: Vec<u32> = report5
        .rows
        .iter()
        .filter(|r| r.semisimple && r.resonance_index == Some(1))
        .map(|r| r.id)
        .collect();
    resred_ids.dedup();
    assert_eq!(resred_ids, vec![770, 779, 922, 968, 990, 991]);
    let hit770 = common::catalog(5).lookup(&common::s770()).unwrap().unwrap();
    assert_eq!(hit770.id, 770);
    assert!(hit770.witness.is_identity());

    // the order-3 full-mode scan reproduces the printed semisimple hit.
    // In the worked sl2 basis the #16 expansion has det (g^S)^3 (-512)^3 =
    // -2^33; the printed -1.34217728E8 = -2^27 comes from the Cartan-Weyl
    // basis of sl(2), whose Killing determinant is -128. Both are checked
    // exactly.
    let report = census(
        &StructureConstants::sl2(),
        "sl2",
        None,
        common::commutative(3),
        &[Mode::Full],
    )
    .unwrap();
    let hit = report.rows.iter().find(|r| r.id == 16).unwrap();
    assert!(hit.semisimple);
    assert_eq!(hit.det, rat(-8_589_934_592));
    assert_eq!(
        *common::commutative(3).get_by_id(16).unwrap(),
        common::table16()
    );
    let cw = expand(&StructureConstants::sl2_cartan_weyl(), &common::table16()).unwrap();
    assert_eq!(cw.kc_metric().unwrap().determinant(), rat(-134_217_728));
    pass("criterion 8 (pss orders 2-5: full 2,5,16,51; red 1,3,9,34; res 1,1,4,7; resred 0,1,1,6; #16 hit det -2^27 in CW basis)");
}

#[test]
#[ignore = "long-run: order-6 semisimplicity census (a few minutes)"]
fn criterion_8_semisimplicity_census_order_6() {
    let t0 = Instant::now();
    assert_eq!(pss_row(6), (201, 135, 23, 12));
    pass(&format!(
        "criterion 8 long-run (order-6 pss 201,135,23,12 in {:?})",
        t0.elapsed()
    ));
}

#[test]
fn criterion_9a_jacobi_exactness_sweep() {
    let sources = [
        (
            "sl2",
            StructureConstants::sl2(),
            SubspaceDecomposition::sl2_default(),
        ),
        (
            "solv2",
            StructureConstants::solv2(),
            SubspaceDecomposition::solv2_default(),
        ),
        (
            "abelian3",
            StructureConstants::abelian(3),
            SubspaceDecomposition::from_members(3, &[1], &[2, 3]).unwrap(),
        ),
    ];
    for order in 2..=3 {
        for t in common::commutative(order).iter() {
            for (_, g, d) in &sources {
                for e in all_mode_expansions(g, d, t) {
                    assert!(e.effective_constants().jacobi_defect().is_zero());
                }
            }
        }
    }
    pass("criterion 9a (jacobi defect 0 for every expansion over orders 2-3 x {sl2, solv2, abelian3})");
}

/// Every expansion of `g` by `t` in every applicable mode.
fn all_mode_expansions(
    g: &StructureConstants,
    d: &SubspaceDecomposition,
    t: &CayleyTable,
) -> Vec<ExpandedAlgebra> {
    let mut out = Vec::new();
    let full = expand(g, t).unwrap();
    if t.find_zero().is_some() && t.order() > 1 {
        out.push(full.zero_reduce().unwrap());
    }
    for p in find_all_resonances(t) {
        let r = full.resonant_subalgebra(&p, d).unwrap();
        if t.find_zero().is_some() {
            if let Ok(rr) = r.zero_reduce() {
                out.push(rr);
            }
        }
        out.push(r);
    }
    out.push(full);
    out
}

#[test]
fn criterion_9b_kronecker_and_determinant_identities() {
    let sources = [
        StructureConstants::sl2(),
        StructureConstants::solv2(),
        StructureConstants::abelian(3),
    ];
    for order in 2..=3 {
        for t in common::commutative(order).iter() {
            let gs = t.semigroup_metric().unwrap();
            let det_gs = gs.determinant();
            for g in &sources {
                let e = expand(g, t).unwrap();
                let kg = g.killing_metric().unwrap();
                let kc = e.kc_metric().unwrap();

                // generator order is p = (i-1)m + a, so the Kronecker
                // factorization reads kc = kg (x) gs ...
                assert_eq!(kc, kg.kronecker(&gs));
                // ... and reindexing pairs (i,a) -> (a,i) turns it into
                // gs (x) kg, the semigroup-major form of the identity
                let n = g.dim();
                let m = t.order();
                let swapped = MetricMatrix::from_fn(n * m, |p, q| {
                    let (a1, i1) = ((p - 1) / n + 1, (p - 1) % n + 1);
                    let (a2, i2) = ((q - 1) / n + 1, (q - 1) % n + 1);
                    kc.get((i1 - 1) * m + a1, (i2 - 1) * m + a2).clone()
                })
                .unwrap();
                assert_eq!(swapped, gs.kronecker(&kg));

                // det(gE) = det(gS)^dim * det(g)^order, exactly
                let mut expected = BigRational::one();
                for _ in 0..n {
                    expected *= &det_gs;
                }
                let det_g = kg.determinant();
                for _ in 0..m {
                    expected *= &det_g;
                }
                assert_eq!(kc.determinant(), expected);
            }
        }
    }
    pass("criterion 9b (kronecker identity and determinant identity, exact, orders 2-3 sweep)");
}

#[test]
fn criterion_9c_preservation_sweep() {
    let sources = [
        (
            "abelian2",
            StructureConstants::abelian(2),
            SubspaceDecomposition::from_members(2, &[1], &[2]).unwrap(),
        ),
        (
            "abelian3",
            StructureConstants::abelian(3),
            SubspaceDecomposition::from_members(3, &[1], &[2, 3]).unwrap(),
        ),
        (
            "solv2",
            StructureConstants::solv2(),
            SubspaceDecomposition::solv2_default(),
        ),
    ];
    for order in 2..=3 {
        for t in common::commutative(order).iter() {
            for (name, g, d) in &sources {
                let abelian = g.is_abelian();
                let solvable = g.is_solvable().unwrap();
                let nilpotent = g.is_nilpotent().unwrap();
                for e in all_mode_expansions(g, d, t) {
                    let eff = e.effective_constants();
                    if abelian {
                        assert!(eff.is_abelian(), "{name} x {:?} {}", t.id, e.mode());
                    }
                    if solvable {
                        assert!(
                            eff.is_solvable().unwrap(),
                            "{name} x {:?} {}",
                            t.id,
                            e.mode()
                        );
                    }
                    if nilpotent {
                        assert!(
                            eff.is_nilpotent().unwrap(),
                            "{name} x {:?} {}",
                            t.id,
                            e.mode()
                        );
                    }
                }
            }
        }
    }
    pass("criterion 9c (abelian/solvable/nilpotent preserved in every mode, orders 2-3 sweep)");
}

#[test]
fn criterion_9d_isomorphism_invariance_randomized() {
    let mut rng = StdRng::seed_from_u64(0x5EED_CAFE);
    let mut trials = 0;
    while trials < 1000 {
        let order = rng.random_range(3..=5);
        // half the trials use arbitrary tables (usually non-associative),
        // half use semigroups from the catalog so the resonance and zero
        // invariances get exercised on meaningful inputs
        let from_catalog = trials % 2 == 0;
        let t = if from_catalog {
            let cat = common::catalog(order);
            cat.tables()[rng.random_range(0..cat.len())].clone()
        } else {
            let rows: Vec<Vec<usize>> = (0..order)
                .map(|_| (0..order).map(|_| rng.random_range(1..=order)).collect())
                .collect();
            CayleyTable::from_rows(&rows).unwrap()
        };
        let perms = all_permutations(order).unwrap();
        let s = &perms[rng.random_range(0..perms.len())];
        let moved = permute_table(&t, s).unwrap();

        assert_eq!(t.is_associative(), moved.is_associative());
        assert_eq!(t.is_commutative(), moved.is_commutative());
        assert_eq!(moved.find_zero(), t.find_zero().map(|z| s.apply(z)));
        if t.is_associative() {
            let mapped: BTreeSet<ResonantPair> = find_all_resonances(&t)
                .into_iter()
                .map(|p| {
                    ResonantPair::new(
                        p.s0.map(|v| s.apply(v)).unwrap(),
                        p.s1.map(|v| s.apply(v)).unwrap(),
                    )
                    .unwrap()
                })
                .collect();
            let direct: BTreeSet<ResonantPair> = find_all_resonances(&moved).into_iter().collect();
            assert_eq!(mapped, direct);
        }
        trials += 1;
    }
    pass("criterion 9d (predicates and resonance sets invariant under 1000 random relabelings, orders 3-5)");
}

#[test]
fn criterion_9e_catalog_exhaustiveness_small_orders() {
    for order in 2..=3 {
        // brute-force oracle: every table over 1..=order, keep the
        // associative ones, bucket by canonical form
        let mut classes: BTreeSet<Vec<u8>> = BTreeSet::new();
        let ncells = order * order;
        let mut total = 0usize;
        for code in 0..(order as u64).pow(ncells as u32) {
            let mut c = code;
            let rows: Vec<Vec<usize>> = (0..order)
                .map(|_| {
                    (0..order)
                        .map(|_| {
                            let v = (c % order as u64) as usize + 1;
                            c /= order as u64;
                            v
                        })
                        .collect()
                })
                .collect();
            let t = CayleyTable::from_rows(&rows).unwrap();
            if t.is_associative() {
                total += 1;
                classes.insert(canonical_form(&t, true).unwrap().flat().to_vec());
            }
        }
        // labeled semigroup counts: 8 of order 2, 113 of order 3
        assert_eq!(total, [8, 113][order - 2]);
        let catalog_set: BTreeSet<Vec<u8>> = common::catalog(order)
            .iter()
            .map(|t| t.flat().to_vec())
            .collect();
        assert_eq!(classes, catalog_set);
    }
    // soundness: entries pairwise non-equivalent (exhaustive through order 4)
    for order in 2..=4 {
        let tables = common::catalog(order).tables();
        for i in 0..tables.len() {
            for j in (i + 1)..tables.len() {
                assert!(find_isomorphism(&tables[i], &tables[j]).is_none());
                assert!(find_anti_isomorphism(&tables[i], &tables[j]).is_none());
            }
        }
    }
    pass("criterion 9e (catalog matches the brute-force all-tables oracle at orders 2-3; pairwise soundness through order 4)");
}
