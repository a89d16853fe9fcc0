//! Bounded conjugacy search with checkable certificates.
//!
//! Two words with conjugate group elements have closures that are the same
//! up to the moves that conjugation realizes, so deciding conjugacy up to a
//! radius is the computational heart of comparing closures. The cheap class
//! functions in [`refute`] settle many pairs without any search; when they
//! agree, [`search_witness`] runs a breadth-first sweep over conjugators and
//! either produces a witness, which [`check_certificate`] can re-verify
//! independently, or reports the radius it exhausted.

use crate::braid::{BraidWord, GenLetter};
use crate::freegroup::FreeAut;
use crate::markov::{closure_invariants, conjugate, is_closable, ClosureInvariant};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};

/// A class function on which two words disagree, with both values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Distinction {
    SigmaParity(u8, u8),
    SignedCycleType(Vec<(usize, i8)>, Vec<(usize, i8)>),
    ClosureInvariants(ClosureInvariant, ClosureInvariant),
    Closability(bool, bool),
}

impl Distinction {
    pub fn invariant_name(&self) -> &'static str {
        match self {
            Distinction::SigmaParity(..) => "sigma_parity",
            Distinction::SignedCycleType(..) => "signed_cycle_type",
            Distinction::ClosureInvariants(..) => "closure_invariants",
            Distinction::Closability(..) => "closability",
        }
    }

    fn values(&self) -> (serde_json::Value, serde_json::Value) {
        match self {
            Distinction::SigmaParity(a, b) => (serde_json::json!(a), serde_json::json!(b)),
            Distinction::SignedCycleType(a, b) => (serde_json::json!(a), serde_json::json!(b)),
            Distinction::ClosureInvariants(a, b) => (
                serde_json::to_value(a).expect("invariant serializes"),
                serde_json::to_value(b).expect("invariant serializes"),
            ),
            Distinction::Closability(a, b) => (serde_json::json!(a), serde_json::json!(b)),
        }
    }
}

/// Outcome of a bounded conjugacy search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// γ with γ · b1 · γ^-1 equivalent to b2.
    Conjugate { witness: BraidWord },
    /// A class function separates the words; they are not conjugate at any
    /// radius.
    Distinguished(Distinction),
    /// Search exhausted the radius (or the node budget) without deciding.
    Unknown { radius: usize },
}

impl Verdict {
    pub fn export(&self) -> VerdictDoc {
        match self {
            Verdict::Conjugate { witness } => VerdictDoc {
                verdict: "conjugate",
                witness: Some(witness.to_string()),
                invariant: None,
                values: None,
                radius: witness.len(),
            },
            Verdict::Distinguished(d) => VerdictDoc {
                verdict: "distinguished",
                witness: None,
                invariant: Some(d.invariant_name()),
                values: Some(d.values()),
                radius: 0,
            },
            Verdict::Unknown { radius } => VerdictDoc {
                verdict: "unknown",
                witness: None,
                invariant: None,
                values: None,
                radius: *radius,
            },
        }
    }
}

/// Serializable view of a [`Verdict`].
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct VerdictDoc {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<(serde_json::Value, serde_json::Value)>,
    pub radius: usize,
}

/// Search bounds. The radius caps conjugator letter length; the node budget
/// caps how many distinct automorphism states the sweep may visit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchConfig {
    pub radius: usize,
    pub node_budget: usize,
}

impl SearchConfig {
    pub fn with_radius(radius: usize) -> SearchConfig {
        SearchConfig {
            radius,
            node_budget: 1_000_000,
        }
    }
}

/// Tries the class functions in a fixed order: σ-parity, signed cycle type,
/// closure invariants (when both words close), closability. Returns the
/// first disagreement.
///
/// Panics if the strand counts differ.
pub fn refute(b1: &BraidWord, b2: &BraidWord) -> Option<Distinction> {
    assert_eq!(b1.n(), b2.n(), "strand count mismatch in refute");
    let p1 = b1.sigma_parity();
    let p2 = b2.sigma_parity();
    if p1 != p2 {
        return Some(Distinction::SigmaParity(p1, p2));
    }
    let c1 = b1.signed_perm().cycle_type();
    let c2 = b2.signed_perm().cycle_type();
    if c1 != c2 {
        return Some(Distinction::SignedCycleType(c1, c2));
    }
    if let (Ok(i1), Ok(i2)) = (closure_invariants(b1), closure_invariants(b2)) {
        if i1 != i2 {
            return Some(Distinction::ClosureInvariants(i1, i2));
        }
    }
    let cl1 = is_closable(b1);
    let cl2 = is_closable(b2);
    if cl1 != cl2 {
        return Some(Distinction::Closability(cl1, cl2));
    }
    None
}

/// The conjugating alphabet in search order: σ_1, σ_1^-1, ..., σ_{n-1}^-1,
/// then ρ_1..ρ_{n-1}, then τ_1..τ_n.
fn conjugating_letters(n: usize) -> Vec<GenLetter> {
    let mut out = Vec::with_capacity(4 * n - 3);
    for i in 1..n {
        out.push(GenLetter::sigma(i));
        out.push(GenLetter::sigma_inv(i));
    }
    for i in 1..n {
        out.push(GenLetter::rho(i));
    }
    for i in 1..=n {
        out.push(GenLetter::tau(i));
    }
    out
}

/// Breadth-first search for γ of letter length at most `cfg.radius` with
/// γ · b1 · γ^-1 equivalent to b2. Runs [`refute`] first and short-circuits
/// on any distinction.
///
/// States are the automorphism images ν(γ b1 γ^-1), grown by prepending one
/// letter g to γ, which updates the state with two compositions
/// (ν(g) ∘ state ∘ ν(g)^-1) and never re-evaluates the whole word. States
/// already seen are skipped: a repeated image has the same onward orbit.
/// The frontier is a FIFO queue and letters are tried in a fixed order, so
/// the verdict and witness are deterministic.
pub fn search_witness(b1: &BraidWord, b2: &BraidWord, cfg: &SearchConfig) -> Verdict {
    assert_eq!(b1.n(), b2.n(), "strand count mismatch in search");
    if let Some(d) = refute(b1, b2) {
        return Verdict::Distinguished(d);
    }
    let n = b1.n();
    let start = b1.automorphism();
    let target = b2.automorphism();
    if start == target {
        return Verdict::Conjugate {
            witness: BraidWord::empty(n).expect("n is at least 1"),
        };
    }

    let steps: Vec<(GenLetter, FreeAut, FreeAut)> = conjugating_letters(n)
        .into_iter()
        .map(|g| {
            let forward = BraidWord::new(n, vec![g])
                .expect("letter fits")
                .automorphism();
            let backward = BraidWord::new(n, vec![g.inverse()])
                .expect("letter fits")
                .automorphism();
            (g, forward, backward)
        })
        .collect();

    let mut seen: HashSet<FreeAut> = HashSet::new();
    seen.insert(start.clone());
    let mut visited = 1usize;
    let mut frontier: VecDeque<(FreeAut, Vec<GenLetter>)> = VecDeque::new();
    frontier.push_back((start, Vec::new()));
    let mut completed_radius = 0;

    for depth in 1..=cfg.radius {
        let mut next_frontier = VecDeque::new();
        while let Some((state, path)) = frontier.pop_front() {
            for (g, forward, backward) in &steps {
                let next = forward.compose(&state).compose(backward);
                if !seen.insert(next.clone()) {
                    continue;
                }
                let mut witness_letters = Vec::with_capacity(path.len() + 1);
                witness_letters.push(*g);
                witness_letters.extend_from_slice(&path);
                if next == target {
                    let witness =
                        BraidWord::new(n, witness_letters).expect("letters fit on n strands");
                    return Verdict::Conjugate { witness };
                }
                visited += 1;
                if visited > cfg.node_budget {
                    return Verdict::Unknown {
                        radius: completed_radius,
                    };
                }
                next_frontier.push_back((next, witness_letters));
            }
        }
        completed_radius = depth;
        frontier = next_frontier;
    }
    Verdict::Unknown {
        radius: completed_radius,
    }
}

/// Re-verifies a claimed conjugator from scratch: builds γ · b1 · γ^-1 as a
/// word and compares representations with b2.
pub fn check_certificate(b1: &BraidWord, b2: &BraidWord, gamma: &BraidWord) -> bool {
    conjugate(b1, gamma).equivalent(b2)
}

/// The wen-prefix normal form of a conjugator; see
/// [`BraidWord::tau_normal_form`]. Conjugating by γ is conjugating by its
/// wen-free part and then by the wen prefix, which this factors out.
pub fn normal_form_conjugator(gamma: &BraidWord) -> (BraidWord, BraidWord) {
    gamma.tau_normal_form()
}
