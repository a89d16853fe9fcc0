//! Acceptance gate for the library: nine criteria, one test each, every
//! test printing a single PASS line with its headline numbers. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use loopbraid::{
    check_certificate, closure_invariants, conjugate, destabilize, is_closable, random_word,
    refute, relation_suite, search_witness, stabilize, BraidWord, GenLetter, SearchConfig,
    StabKind, Verdict,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn criterion_1_presentation_certification() {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=6 {
        let report = relation_suite(n);
        assert!(
            report.all_pass(),
            "defining relations fail on {n} strands:\n{report}"
        );
        total += report.checks.len();
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "relation suite took {elapsed:?}, expected under a second"
    );
    println!("criterion 1 (presentation certification): PASS, {total} checks across n=1..6 in {elapsed:?}");
}

#[test]
fn criterion_2_word_problem_soundness() {
    let mut r = rng(0xA2);
    for _ in 0..1000 {
        let n = r.random_range(1..=6);
        let len = r.random_range(0..=30);
        let w = random_word(n, len, &mut r);
        assert!(
            w.concat(&w.inverse()).automorphism().is_identity(),
            "w times its inverse must act trivially, failed on {w}"
        );
    }
    let mut distinct_pairs = 0;
    while distinct_pairs < 1000 {
        let n = r.random_range(1..=6);
        let u = random_word(n, r.random_range(0..=30), &mut r);
        let v = random_word(n, r.random_range(0..=30), &mut r);
        if u.automorphism() == v.automorphism() {
            continue;
        }
        distinct_pairs += 1;
        assert!(
            !u.equivalent(&v),
            "words with distinct images reported equal: {u} vs {v}"
        );
    }
    println!(
        "criterion 2 (word problem soundness): PASS, 1000 cancellations and 1000 distinct pairs"
    );
}

#[test]
fn criterion_3_pc_form_round_trip() {
    let mut r = rng(0xA3);
    for _ in 0..1000 {
        let n = r.random_range(1..=6);
        let w = random_word(n, r.random_range(0..=30), &mut r);
        let aut = w.automorphism();
        let pc = aut
            .pc_form()
            .unwrap_or_else(|e| panic!("image of {w} must be permutation-conjugacy shaped: {e}"));
        assert_eq!(
            pc.to_aut(),
            aut,
            "round trip must reconstruct the action of {w}"
        );
    }
    println!("criterion 3 (permutation-conjugator round trip): PASS, 1000 words");
}

#[test]
fn criterion_4_conjugation_invariance() {
    let mut r = rng(0xA4);
    for _ in 0..500 {
        let n = r.random_range(1..=5);
        let beta = random_word(n, r.random_range(0..=15), &mut r);
        let gamma = random_word(n, r.random_range(0..=15), &mut r);
        let moved = conjugate(&beta, &gamma);
        assert_eq!(beta.sigma_parity(), moved.sigma_parity());
        assert_eq!(
            beta.signed_perm().cycle_type(),
            moved.signed_perm().cycle_type()
        );
        assert_eq!(is_closable(&beta), is_closable(&moved));
        if let Ok(inv) = closure_invariants(&beta) {
            assert_eq!(Ok(inv), closure_invariants(&moved));
        }
        assert_eq!(
            refute(&beta, &moved),
            None,
            "no class function may separate {beta} from its conjugate {moved}"
        );
    }
    println!("criterion 4 (conjugation invariance): PASS, 500 planted pairs, zero refutations");
}

#[test]
fn criterion_5_bounded_witness_recovery() {
    let start = Instant::now();
    let mut r = rng(0xA5);
    let cfg = SearchConfig::with_radius(3);
    for round in 0..200 {
        let n = r.random_range(1..=4);
        let beta = random_word(n, r.random_range(0..=10), &mut r);
        let gamma = random_word(n, r.random_range(0..=3), &mut r);
        let moved = conjugate(&beta, &gamma);
        match search_witness(&beta, &moved, &cfg) {
            Verdict::Conjugate { witness } => {
                assert!(
                    check_certificate(&beta, &moved, &witness),
                    "witness {witness} failed re-verification in round {round}"
                );
            }
            other => panic!(
                "planted pair must be recovered at radius 3, round {round}: {beta} vs {moved} gave {other:?}"
            ),
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "witness recovery took {elapsed:?}, expected under a minute"
    );
    println!("criterion 5 (bounded witness recovery): PASS, 200/200 recovered in {elapsed:?}");
}

#[test]
fn criterion_6_wen_prefix_normal_form() {
    let mut r = rng(0xA6);
    for _ in 0..500 {
        let n = r.random_range(1..=6);
        let w = random_word(n, r.random_range(0..=14), &mut r);
        let (prefix, alpha) = w.tau_normal_form();
        let mut last = 0;
        for l in prefix.letters() {
            match *l {
                GenLetter::Tau { index } => {
                    assert!(index > last, "wen prefix of {w} is not strictly ascending");
                    last = index;
                }
                other => panic!("wen prefix of {w} holds {other:?}"),
            }
        }
        assert!(
            alpha
                .letters()
                .iter()
                .all(|l| !matches!(l, GenLetter::Tau { .. })),
            "tail of {w} still holds a wen"
        );
        assert!(
            prefix.concat(&alpha).equivalent(&w),
            "normal form of {w} is not equivalent to it"
        );
    }
    println!("criterion 6 (wen prefix normal form): PASS, 500 words");
}

/// Closure components and their wen counts read straight off the diagram:
/// walk the word once tracking which strand occupies each position, count
/// wens on whichever strand is under each mark, then close up positions and
/// add counts along each cycle. No signed permutations involved.
fn closable_by_diagram_walk(b: &BraidWord) -> bool {
    let n = b.n();
    let mut occupant: Vec<usize> = (0..n).collect();
    let mut wens = vec![0usize; n];
    for l in b.letters() {
        match *l {
            GenLetter::Sigma { index, .. } | GenLetter::Rho { index } => {
                occupant.swap(index - 1, index);
            }
            GenLetter::Tau { index } => {
                wens[occupant[index - 1]] += 1;
            }
        }
    }
    let mut end_pos = vec![0usize; n];
    for (pos, &s) in occupant.iter().enumerate() {
        end_pos[s] = pos;
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut strand = start;
        let mut cycle_wens = 0;
        while !seen[strand] {
            seen[strand] = true;
            cycle_wens += wens[strand];
            strand = end_pos[strand];
        }
        if cycle_wens % 2 != 0 {
            return false;
        }
    }
    true
}

fn alphabet(n: usize) -> Vec<GenLetter> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(GenLetter::sigma(i));
        out.push(GenLetter::sigma_inv(i));
        out.push(GenLetter::rho(i));
    }
    for i in 1..=n {
        out.push(GenLetter::tau(i));
    }
    out
}

#[test]
fn criterion_7_closability_semantics() {
    let mut words = 0usize;
    for n in 1..=3 {
        let letters = alphabet(n);
        let k = letters.len();
        for len in 0..=6usize {
            let mut digits = vec![0usize; len];
            loop {
                let word = BraidWord::new(n, digits.iter().map(|&d| letters[d]).collect()).unwrap();
                assert_eq!(
                    is_closable(&word),
                    closable_by_diagram_walk(&word),
                    "closability mismatch on {word} with {n} strands"
                );
                words += 1;
                let mut pos = 0;
                while pos < len && digits[pos] + 1 == k {
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
                digits[pos] += 1;
            }
        }
    }
    println!(
        "criterion 7 (closability semantics): PASS, {words} words checked against the diagram walk"
    );
}

#[test]
fn criterion_8_parity_well_definedness() {
    let mut sides = 0;
    for n in 1..=6 {
        for check in &relation_suite(n).checks {
            assert_eq!(
                check.lhs.sigma_parity(),
                check.rhs.sigma_parity(),
                "relation family {} at {:?} changes crossing parity",
                check.family,
                check.indices
            );
            sides += 1;
        }
    }
    let mut r = rng(0xA8);
    for _ in 0..500 {
        let n = r.random_range(1..=6);
        let beta = random_word(n, r.random_range(0..=20), &mut r);
        let gamma = random_word(n, r.random_range(0..=20), &mut r);
        assert_eq!(beta.sigma_parity(), conjugate(&beta, &gamma).sigma_parity());
    }
    println!("criterion 8 (parity well-definedness): PASS, {sides} relation instances and 500 conjugations");
}

#[test]
fn criterion_9_stabilization_round_trip() {
    let mut r = rng(0xA9);
    let mut found = 0;
    let mut attempts = 0;
    while found < 200 {
        attempts += 1;
        assert!(attempts < 100_000, "closable words should not be this rare");
        let n = r.random_range(2..=5);
        let beta = random_word(n, r.random_range(0..=12), &mut r);
        if !is_closable(&beta) {
            continue;
        }
        found += 1;
        let components = closure_invariants(&beta).unwrap().components;
        for kind in [StabKind::SigmaPlus, StabKind::SigmaMinus, StabKind::RhoType] {
            let up = stabilize(&beta, kind);
            assert_eq!(
                closure_invariants(&up).unwrap().components,
                components,
                "stabilization of {beta} changed the component count"
            );
            let down = destabilize(&up).unwrap();
            assert!(
                down.equivalent(&beta),
                "destabilization went back to a different element for {beta}"
            );
        }
    }
    println!("criterion 9 (stabilization round trip): PASS, 200 closable words, 3 kinds each");
}
