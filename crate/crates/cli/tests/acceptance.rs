//! Acceptance suite: one test per shipping criterion, each printing a
//! `[PASS]` line with the measured facts. Run them in order with
//!
//! ```text
//! cargo test -p cubedom-cli --test acceptance -- --test-threads=1 --nocapture
//! ```

use std::time::Duration;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cubedom::{
    build, certify, classify, expand_odd, extend_by_one, lower_bound, min_ids, plan, seed_set,
    upper_bound, Dimension, DimensionCase, Domination, SolveOutcome, VertexSet,
};

fn dim(n: u32) -> Dimension {
    Dimension::new(n).unwrap()
}

fn certified_ids(set: &VertexSet, context: &str) -> cubedom::VerifyReport {
    let report = certify(set);
    assert!(report.independent, "{context}: not independent");
    assert!(
        report.domination.confirmed(),
        "{context}: not dominating ({:?})",
        report.domination
    );
    report
}

#[test]
fn criterion_1_exact_solver_values() {
    let expected = [1u32, 2, 2, 4, 8, 12];
    let budget = Duration::from_secs(600);
    for (n, want) in (1..=6u32).zip(expected) {
        let result = min_ids(dim(n), budget).unwrap();
        let (alpha, witness) = match result.outcome {
            SolveOutcome::Optimal { alpha, witness } => (alpha, witness),
            SolveOutcome::TimedOut { .. } => panic!("solver timed out on n={n}"),
        };
        assert_eq!(alpha, want, "alpha_{n}");
        certified_ids(&witness, &format!("solver witness n={n}"));
        let limit = if n <= 5 { 10 } else { 600 };
        assert!(
            result.elapsed < Duration::from_secs(limit),
            "n={n} took {:?}",
            result.elapsed
        );
        if n == 6 {
            // regeneration check for the frozen dimension-6 seed
            assert_eq!(witness, seed_set(dim(6)).unwrap());
        }
    }
    println!("[PASS] criterion 1: exact solver gives alpha = 1,2,2,4,8,12 for n = 1..6 within the time limits");
}

#[test]
fn criterion_2_expansion_of_antipodal_seed_is_byte_exact() {
    let expected = [
        "0000000", "0000111", "1001001", "1001110", "1010010", "1010101", "0011011", "0011100",
        "1100100", "1100011", "0101101", "0101010", "0110110", "0110001", "1111111", "1111000",
    ];
    let seed = seed_set(dim(3)).unwrap();
    let out = expand_odd(&seed).unwrap();
    let rendered: Vec<String> = out.iter().map(|v| v.to_bit_string(dim(7))).collect();
    assert_eq!(rendered, expected, "zero tolerance, index order");
    println!("[PASS] criterion 2: expanding {{000,111}} reproduces all 16 dimension-7 vectors byte-for-byte");
}

#[test]
fn criterion_3_expansion_component_spot_check() {
    let seed: VertexSet = "n=3\n010\n101\n".parse().unwrap();
    let out = expand_odd(&seed).unwrap();
    // component (N, k) = (6, 1) sits at index N * |seed| + k - 1 = 12
    assert_eq!(out.members()[12].to_bit_string(dim(7)), "0110100");
    println!("[PASS] criterion 3: component (N=6, k=1) of the {{010,101}} expansion equals 0110100");
}

#[test]
fn criterion_4_perfect_code_chain() {
    for n in [3u32, 7, 15] {
        let set = build(&plan(dim(n))).unwrap();
        let report = certified_ids(&set, &format!("perfect chain n={n}"));
        let k = classify(dim(n)).k;
        assert_eq!(set.len() as u64, 1u64 << (n - k), "n={n}: |S| = 2^(n-k)");
        assert_eq!(set.len() as u64, lower_bound(dim(n)), "n={n}: counting bound met");
        match report.domination {
            Domination::Confirmed { marks_issued, overlaps } => {
                assert_eq!(overlaps, 0, "n={n}: perfect partition has no overlaps");
                assert_eq!(marks_issued, 1u64 << n, "n={n}: marks cover Q_n exactly once");
            }
            other => panic!("n={n}: {other:?}"),
        }
    }
    println!("[PASS] criterion 4: chain sets for n = 3, 7, 15 are certified and partition Q_n with zero overlaps");
}

#[test]
fn criterion_5_improved_bound_chain() {
    let s13 = build(&plan(dim(13))).unwrap();
    assert_eq!(s13.len(), 768, "|S_13| = 3 * 2^8");
    certified_ids(&s13, "improved chain n=13");

    let s27 = build(&plan(dim(27))).unwrap();
    assert_eq!(s27.len(), 6_291_456, "|S_27| = 3 * 2^21");
    let report = certified_ids(&s27, "improved chain n=27");
    assert!(
        report.elapsed < Duration::from_secs(60),
        "full sweep took {:?}",
        report.elapsed
    );
    assert_eq!(
        report.peak_coverage_bytes,
        1u64 << 24,
        "coverage map is exactly 16 MiB"
    );
    println!(
        "[PASS] criterion 5: 768-member dimension-13 and 6,291,456-member dimension-27 sets certified; full 2^27 sweep in {:?} with a 16 MiB map",
        report.elapsed
    );
}

/// A random maximal independent set: greedy completion over a shuffled
/// vertex order. Maximality makes it dominating.
fn random_ids(n: u32, rng: &mut ChaCha8Rng) -> VertexSet {
    let d = dim(n);
    let mut order: Vec<u64> = (0..1u64 << n).collect();
    order.shuffle(rng);
    let mut chosen: Vec<u64> = Vec::new();
    for v in order {
        if chosen.iter().all(|&c| (c ^ v).count_ones() != 1) {
            chosen.push(v);
        }
    }
    VertexSet::new(
        d,
        chosen
            .into_iter()
            .map(|b| cubedom::Vertex::new(b, d).unwrap())
            .collect(),
    )
    .unwrap()
}

#[test]
fn criterion_6_extension_closure_on_random_certified_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1D5);
    let mut checked = 0usize;
    for n in 2..=9u32 {
        for _ in 0..25 {
            let input = random_ids(n, &mut rng);
            certified_ids(&input, &format!("random input n={n}"));
            let output = extend_by_one(&input).unwrap();
            assert_eq!(output.len(), 2 * input.len(), "cardinality doubles");
            certified_ids(&output, &format!("extended output n={}", n + 1));
            checked += 1;
        }
    }
    assert_eq!(checked, 200);
    println!("[PASS] criterion 6: 200 random certified sets of dimensions 2..=9 stay certified under extension with doubled cardinality");
}

#[test]
fn criterion_7_bound_formula_cross_check() {
    for n in 1..=62u32 {
        let d = dim(n);
        let ub = upper_bound(d);
        assert_eq!(plan(d).predicted_size(), ub.value, "n={n}: plan matches bound");
        assert!(lower_bound(d) <= ub.value, "n={n}: bounds ordered");
        let k = classify(d).k;
        if ub.case == DimensionCase::Case2 {
            assert_eq!(ub.value, 3u64 << (n - k - 2), "n={n}: case-2 formula");
            assert!(ub.value < 1u64 << (n - k), "n={n}: improvement over 2^(n-k)");
        }
    }

    let output = assert_cmd::Command::cargo_bin("cubedom")
        .unwrap()
        .args(["table", "--from", "1", "--to", "14", "--format", "markdown"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        include_str!("golden/table_1_14.md"),
        "table 1..14 must match the committed golden file"
    );
    // dimension 60 is pinned to the case-2 formula value
    assert_eq!(upper_bound(dim(60)).value, 3u64 << 53);
    println!("[PASS] criterion 7: planner sizes equal the bound formulas for all n <= 62 and the 1..14 table matches the golden file");
}

#[test]
fn criterion_8_minimality_flags() {
    for n in 1..=15u32 {
        let set = build(&plan(dim(n))).unwrap();
        let report = certify(&set);
        let expect = matches!(n, 1 | 3 | 7 | 15);
        assert_eq!(
            report.provably_minimum, expect,
            "n={n}: provably_minimum flag"
        );
        if expect {
            assert_eq!(set.len() as u64, lower_bound(dim(n)));
        }
    }
    println!("[PASS] criterion 8: provably-minimum flag set exactly for built sets of dimensions 1, 3, 7, 15");
}

#[test]
fn criterion_9_stated_desk_scale_substitutions() {
    // Dimensions >= 31 (and 55 in particular) cannot be built or swept at
    // desk scale; their size laws are checked arithmetically instead.
    for n in 31..=62u32 {
        let d = dim(n);
        assert_eq!(plan(d).predicted_size(), upper_bound(d).value, "n={n}");
    }
    let d55 = dim(55);
    assert_eq!(plan(d55).predicted_size(), 3u64 << 48);
    assert_eq!(upper_bound(d55).value, 3u64 << 48);
    assert_eq!(plan(d55).to_string(), "seed=S6 steps=ExpandOdd,ExpandOdd,ExpandOdd target=55 size=844424930131968");

    // Every chain dimension that fits in memory is fully certified.
    for n in [3u32, 7, 15, 6, 13, 27] {
        let set = build(&plan(dim(n))).unwrap();
        assert_eq!(set.len() as u64, upper_bound(dim(n)).value);
        certified_ids(&set, &format!("chain n={n}"));
    }
    println!("[PASS] criterion 9: dimensions >= 31 are not verifiable at desk scale (stated); size laws checked arithmetically, chains fully certified up to dimension 27");
}
