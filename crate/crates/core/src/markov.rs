//! Tube closure of a braid word: which words close up at all, the invariants
//! the closure carries, and the Markov moves that connect words with the
//! same closure.
//!
//! Closing a word glues each strand's top end to its own bottom end, so the
//! closure's components are the cycles of the strand permutation. A
//! component only closes to an untwisted tube when the wens met along its
//! cycle cancel in pairs; that is the sign condition checked here.

use crate::braid::{BraidWord, GenLetter};
use serde::Serialize;

/// The three right stabilizations: append σ_n, σ_n^-1 or ρ_n on a word
/// widened to n+1 strands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StabKind {
    SigmaPlus,
    SigmaMinus,
    RhoType,
}

/// What the closure of a word remembers about it under conjugation.
///
/// `cycles` holds one (length, wen-sign product) pair per closure component,
/// sorted descending; for a closable word every sign is +1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClosureInvariant {
    pub n: usize,
    pub components: usize,
    pub cycles: Vec<(usize, i8)>,
    pub sigma_parity: u8,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("closure has a component with an odd number of wens")]
pub struct NotClosable;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum DestabilizeError {
    #[error("last letter is not sigma or rho on the top strand pair")]
    NoTrailingStabilizer,
    #[error("a letter before the stabilizer uses the top strand")]
    BodyUsesTopStrand,
}

/// True when every closure component sees an even number of wens, i.e.
/// every cycle of the signed permutation has sign product +1.
pub fn is_closable(b: &BraidWord) -> bool {
    b.signed_perm().cycle_type().iter().all(|&(_, s)| s == 1)
}

/// The conjugation-invariant data of the closure. Errs on words whose
/// closure is obstructed by an odd wen count on some component.
pub fn closure_invariants(b: &BraidWord) -> Result<ClosureInvariant, NotClosable> {
    let cycles = b.signed_perm().cycle_type();
    if cycles.iter().any(|&(_, s)| s != 1) {
        return Err(NotClosable);
    }
    Ok(ClosureInvariant {
        n: b.n(),
        components: cycles.len(),
        cycles,
        sigma_parity: b.sigma_parity(),
    })
}

/// The conjugate g · b · g^-1, as a plain word.
///
/// Panics if the strand counts differ.
pub fn conjugate(b: &BraidWord, g: &BraidWord) -> BraidWord {
    g.concat(b).concat(&g.inverse())
}

/// Right stabilization: reinterprets the word on n+1 strands and appends
/// the chosen stabilizer on the new top pair. The new strand joins the
/// closure component passing through strand n, so the component count is
/// unchanged, and so is closability.
pub fn stabilize(b: &BraidWord, kind: StabKind) -> BraidWord {
    let n = b.n() + 1;
    let mut letters = b.letters().to_vec();
    letters.push(match kind {
        StabKind::SigmaPlus => GenLetter::sigma(n - 1),
        StabKind::SigmaMinus => GenLetter::sigma_inv(n - 1),
        StabKind::RhoType => GenLetter::rho(n - 1),
    });
    BraidWord::new(n, letters).expect("letters stay in range on n+1 strands")
}

/// Removes a trailing stabilizer, dropping to n-1 strands.
///
/// Eligibility is syntactic: the last letter must be σ_{n-1}^±1 or ρ_{n-1},
/// and no other letter may involve the top strand (σ or ρ at index n-1, or
/// τ_n). Words equivalent to a stabilized word but not literally of that
/// shape are rejected; conjugate first if needed.
pub fn destabilize(b: &BraidWord) -> Result<BraidWord, DestabilizeError> {
    let n = b.n();
    let (last, body) = b
        .letters()
        .split_last()
        .ok_or(DestabilizeError::NoTrailingStabilizer)?;
    let is_stabilizer = matches!(
        *last,
        GenLetter::Sigma { index, .. } | GenLetter::Rho { index } if index + 1 == n
    );
    if !is_stabilizer {
        return Err(DestabilizeError::NoTrailingStabilizer);
    }
    let body_clear = body.iter().all(|&l| match l {
        GenLetter::Sigma { index, .. } | GenLetter::Rho { index } => index + 1 < n,
        GenLetter::Tau { index } => index < n,
    });
    if !body_clear {
        return Err(DestabilizeError::BodyUsesTopStrand);
    }
    Ok(BraidWord::new(n - 1, body.to_vec()).expect("body letters fit on n-1 strands"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, text: &str) -> BraidWord {
        BraidWord::parse(n, text).unwrap()
    }

    #[test]
    fn wen_pair_on_one_strand_closes() {
        assert!(is_closable(&word(1, "t1 t1")));
    }

    #[test]
    fn single_wen_on_one_strand_does_not_close() {
        assert!(!is_closable(&word(1, "t1")));
    }

    #[test]
    fn wen_then_crossing_leaves_an_odd_component() {
        // Both strands join into one closure component carrying one wen.
        assert!(!is_closable(&word(2, "t1 s1")));
    }

    #[test]
    fn empty_words_close() {
        for n in 1..=4 {
            assert!(is_closable(&BraidWord::empty(n).unwrap()));
        }
    }

    #[test]
    fn closure_of_single_crossing_is_one_component() {
        let inv = closure_invariants(&word(2, "s1")).unwrap();
        assert_eq!(inv.n, 2);
        assert_eq!(inv.components, 1);
        assert_eq!(inv.cycles, vec![(2, 1)]);
        assert_eq!(inv.sigma_parity, 1);
    }

    #[test]
    fn closure_of_double_crossing_splits_into_two_components() {
        let inv = closure_invariants(&word(2, "s1 s1")).unwrap();
        assert_eq!(inv.components, 2);
        assert_eq!(inv.cycles, vec![(1, 1), (1, 1)]);
        assert_eq!(inv.sigma_parity, 0);
    }

    #[test]
    fn closure_invariants_reject_unclosable_words() {
        assert_eq!(closure_invariants(&word(1, "t1")).unwrap_err(), NotClosable);
    }

    #[test]
    fn closure_invariant_serializes_in_field_order() {
        let inv = closure_invariants(&word(2, "s1")).unwrap();
        assert_eq!(
            serde_json::to_string(&inv).unwrap(),
            r#"{"n":2,"components":1,"cycles":[[2,1]],"sigma_parity":1}"#
        );
    }

    #[test]
    fn conjugate_builds_the_sandwich_word() {
        let b = conjugate(&word(2, "s1"), &word(2, "r1"));
        assert_eq!(b.to_string(), "r1 s1 r1");
    }

    #[test]
    fn conjugation_preserves_closure_invariants() {
        let b = word(3, "s1 s2 t3 t1");
        let g = word(3, "r2 s1^-1 t2");
        assert_eq!(is_closable(&b), is_closable(&conjugate(&b, &g)));
        let b = word(2, "s1");
        let g = word(2, "r1");
        assert_eq!(
            closure_invariants(&b).unwrap(),
            closure_invariants(&conjugate(&b, &g)).unwrap()
        );
    }

    #[test]
    fn stabilization_appends_on_a_new_strand() {
        let b = stabilize(&BraidWord::empty(1).unwrap(), StabKind::SigmaPlus);
        assert_eq!(b.n(), 2);
        assert_eq!(b.to_string(), "s1");

        let b = stabilize(&word(2, "s1"), StabKind::RhoType);
        assert_eq!(b.n(), 3);
        assert_eq!(b.to_string(), "s1 r2");

        let b = stabilize(&word(2, "s1"), StabKind::SigmaMinus);
        assert_eq!(b.to_string(), "s1 s2^-1");
    }

    #[test]
    fn stabilization_preserves_component_count() {
        let b = word(2, "s1");
        let before = closure_invariants(&b).unwrap().components;
        for kind in [StabKind::SigmaPlus, StabKind::SigmaMinus, StabKind::RhoType] {
            let after = closure_invariants(&stabilize(&b, kind)).unwrap().components;
            assert_eq!(before, after);
        }
    }

    #[test]
    fn destabilize_removes_a_trailing_swap() {
        let b = destabilize(&word(3, "s1 r2")).unwrap();
        assert_eq!(b.n(), 2);
        assert_eq!(b.to_string(), "s1");
    }

    #[test]
    fn destabilize_can_empty_a_word() {
        let b = destabilize(&word(2, "s1")).unwrap();
        assert_eq!(b.n(), 1);
        assert!(b.is_empty());
    }

    #[test]
    fn destabilize_requires_the_stabilizer_last() {
        assert_eq!(
            destabilize(&word(3, "r2 s1")).unwrap_err(),
            DestabilizeError::NoTrailingStabilizer
        );
    }

    #[test]
    fn destabilize_rejects_words_reusing_the_top_strand() {
        assert_eq!(
            destabilize(&word(3, "s2 s2 r2")).unwrap_err(),
            DestabilizeError::BodyUsesTopStrand
        );
        assert_eq!(
            destabilize(&word(3, "t3 r2")).unwrap_err(),
            DestabilizeError::BodyUsesTopStrand
        );
    }

    #[test]
    fn destabilize_inverts_stabilize() {
        let b = word(3, "s1 s2^-1 t3 r1");
        for kind in [StabKind::SigmaPlus, StabKind::SigmaMinus, StabKind::RhoType] {
            assert_eq!(destabilize(&stabilize(&b, kind)).unwrap(), b);
        }
    }
}
