//! Words in the extended loop braid group on n strands and the faithful
//! representation ν into automorphisms of the free group F_n.
//!
//! Generators: crossings σ_i (invertible), circle swaps ρ_i and wens τ_i
//! (both involutions). A word is a raw letter sequence: nothing simplifies
//! it behind your back, and two words denote the same group element exactly
//! when their ν images agree, which [`BraidWord::equivalent`] decides.
//!
//! ν sends σ_i to (x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^-1 x_i x_{i+1}), ρ_i to
//! the swap of x_i and x_{i+1}, and τ_i to (x_i ↦ x_i^-1). Words map
//! letterwise through [`FreeAut::compose`], left letter outermost.

use crate::freegroup::{FreeAut, FreeWord, Letter, SignedPerm};
use std::fmt;

/// A single generator occurrence in a braid word.
///
/// ρ and τ are involutions, so only σ carries an exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GenLetter {
    /// Crossing σ_index^exp with exp ∈ {+1, -1}.
    Sigma { index: usize, exp: i8 },
    /// Circle swap ρ_index.
    Rho { index: usize },
    /// Wen τ_index.
    Tau { index: usize },
}

impl GenLetter {
    pub fn sigma(index: usize) -> GenLetter {
        GenLetter::Sigma { index, exp: 1 }
    }

    pub fn sigma_inv(index: usize) -> GenLetter {
        GenLetter::Sigma { index, exp: -1 }
    }

    pub fn rho(index: usize) -> GenLetter {
        GenLetter::Rho { index }
    }

    pub fn tau(index: usize) -> GenLetter {
        GenLetter::Tau { index }
    }

    /// Inverse letter: flips a σ exponent, fixes the involutions.
    pub fn inverse(self) -> GenLetter {
        match self {
            GenLetter::Sigma { index, exp } => GenLetter::Sigma { index, exp: -exp },
            other => other,
        }
    }

    fn token(&self) -> String {
        match *self {
            GenLetter::Sigma { index, exp: 1 } => format!("s{index}"),
            GenLetter::Sigma { index, .. } => format!("s{index}^-1"),
            GenLetter::Rho { index } => format!("r{index}"),
            GenLetter::Tau { index } => format!("t{index}"),
        }
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown token `{token}`")]
    Syntax { token: String },
    #[error("index in `{token}` out of range for {n} strands")]
    Index { token: String, n: usize },
    #[error("strand count must be at least 1")]
    ZeroStrands,
}

/// A word in the extended loop braid group on `n` strands.
///
/// The letter sequence is kept verbatim. Derived equality and hashing are
/// syntactic; group equality is [`BraidWord::equivalent`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<GenLetter>,
}

impl BraidWord {
    /// Validates letter indices against the strand count.
    /// σ_i and ρ_i need 1 ≤ i ≤ n-1, τ_i needs 1 ≤ i ≤ n.
    pub fn new(n: usize, letters: Vec<GenLetter>) -> Result<BraidWord, WordError> {
        if n == 0 {
            return Err(WordError::ZeroStrands);
        }
        for &l in &letters {
            let ok = match l {
                GenLetter::Sigma { index, exp } => {
                    (exp == 1 || exp == -1) && index >= 1 && index < n
                }
                GenLetter::Rho { index } => index >= 1 && index < n,
                GenLetter::Tau { index } => index >= 1 && index <= n,
            };
            if !ok {
                return Err(WordError::Index {
                    token: l.token(),
                    n,
                });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<BraidWord, WordError> {
        BraidWord::new(n, Vec::new())
    }

    /// Parses the whitespace-separated token form.
    ///
    /// Tokens are `s<i>`, `s<i>^-1`, `r<i>`, `t<i>`; the single token `1`
    /// denotes the empty word. Inverse markers on `r` and `t` are rejected:
    /// those letters are their own inverses and have exactly one spelling.
    pub fn parse(n: usize, text: &str) -> Result<BraidWord, WordError> {
        if n == 0 {
            return Err(WordError::ZeroStrands);
        }
        let trimmed = text.trim();
        if trimmed == "1" || trimmed.is_empty() {
            return BraidWord::empty(n);
        }
        let mut letters = Vec::new();
        for token in trimmed.split_whitespace() {
            letters.push(parse_token(token, n)?);
        }
        BraidWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[GenLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Plain juxtaposition `self · other`; no simplification.
    ///
    /// Panics if the strand counts differ.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "strand count mismatch in concat");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    /// The group inverse: letters reversed, σ exponents flipped.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { n: self.n, letters }
    }

    /// The representation ν: the image of the word in Aut(F_n).
    ///
    /// ν is injective, so this is a complete invariant of the group element.
    pub fn automorphism(&self) -> FreeAut {
        let mut acc = FreeAut::identity(self.n);
        for &l in &self.letters {
            acc = acc.compose(&generator_aut(self.n, l));
        }
        acc
    }

    /// Decides equality in the group by comparing ν images.
    ///
    /// Panics if the strand counts differ.
    pub fn equivalent(&self, other: &BraidWord) -> bool {
        assert_eq!(self.n, other.n, "strand count mismatch in equivalent");
        self.automorphism() == other.automorphism()
    }

    /// The signed permutation underlying the word: where each strand ends up
    /// and, per strand, the parity of wens it passes through. Folded letter
    /// by letter; agrees with `automorphism().signed_perm()`.
    pub fn signed_perm(&self) -> SignedPerm {
        let mut acc = SignedPerm::identity(self.n);
        for &l in &self.letters {
            acc = acc.compose(&generator_signed_perm(self.n, l));
        }
        acc
    }

    /// True when the word permutes no strands.
    pub fn is_pure(&self) -> bool {
        self.signed_perm().is_trivial_perm()
    }

    /// σ-exponent sum mod 2. The defining relations only ever trade σ
    /// letters in pairs, so this is invariant under equivalence and under
    /// conjugation.
    pub fn sigma_parity(&self) -> u8 {
        let count = self
            .letters
            .iter()
            .filter(|l| matches!(l, GenLetter::Sigma { .. }))
            .count();
        (count % 2) as u8
    }

    /// Rewrites the word as `prefix · rest` where the prefix contains all
    /// the wens (at most one τ per index, indices ascending) and the rest is
    /// wen-free. Both parts multiply back to an equivalent word.
    ///
    /// Each τ is pushed to the front through the wen-free letters collected
    /// so far, using [`push_wen_left`] one neighbour at a time; τ letters
    /// commute with each other and square away, so the prefix reduces to an
    /// index-parity vector.
    pub fn tau_normal_form(&self) -> (BraidWord, BraidWord) {
        let mut parity = vec![false; self.n];
        let mut rest: Vec<GenLetter> = Vec::new();
        for &l in &self.letters {
            if let GenLetter::Tau { index } = l {
                let (arrived, rewritten) = bubble_wen_to_front(&rest, index);
                rest = rewritten;
                parity[arrived - 1] ^= true;
            } else {
                rest.push(l);
            }
        }
        let prefix_letters = parity
            .iter()
            .enumerate()
            .filter(|&(_, &on)| on)
            .map(|(k, _)| GenLetter::tau(k + 1))
            .collect();
        (
            BraidWord {
                n: self.n,
                letters: prefix_letters,
            },
            BraidWord {
                n: self.n,
                letters: rest,
            },
        )
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l.token())?;
        }
        Ok(())
    }
}

fn parse_token(token: &str, n: usize) -> Result<GenLetter, WordError> {
    let syntax = || WordError::Syntax {
        token: token.to_string(),
    };
    let mut chars = token.chars();
    let kind = chars.next().ok_or_else(syntax)?;
    let rest = chars.as_str();
    let (digits, inverted) = match rest.strip_suffix("^-1") {
        Some(head) => (head, true),
        None => (rest, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax());
    }
    let index: usize = digits.parse().map_err(|_| syntax())?;
    let letter = match (kind, inverted) {
        ('s', false) => GenLetter::sigma(index),
        ('s', true) => GenLetter::sigma_inv(index),
        ('r', false) => GenLetter::rho(index),
        ('t', false) => GenLetter::tau(index),
        _ => return Err(syntax()),
    };
    let in_range = match letter {
        GenLetter::Sigma { index, .. } | GenLetter::Rho { index } => index >= 1 && index < n,
        GenLetter::Tau { index } => index >= 1 && index <= n,
    };
    if !in_range {
        return Err(WordError::Index {
            token: token.to_string(),
            n,
        });
    }
    Ok(letter)
}

/// ν on a single letter.
fn generator_aut(n: usize, l: GenLetter) -> FreeAut {
    let gen = |i: usize, e: i8| Letter::new(i, e);
    let mut images: Vec<Vec<Letter>> = (1..=n).map(|i| vec![gen(i, 1)]).collect();
    match l {
        GenLetter::Sigma { index: i, exp: 1 } => {
            images[i - 1] = vec![gen(i + 1, 1)];
            images[i] = vec![gen(i + 1, -1), gen(i, 1), gen(i + 1, 1)];
        }
        GenLetter::Sigma { index: i, .. } => {
            images[i - 1] = vec![gen(i, 1), gen(i + 1, 1), gen(i, -1)];
            images[i] = vec![gen(i, 1)];
        }
        GenLetter::Rho { index: i } => {
            images[i - 1] = vec![gen(i + 1, 1)];
            images[i] = vec![gen(i, 1)];
        }
        GenLetter::Tau { index: i } => {
            images[i - 1] = vec![gen(i, -1)];
        }
    }
    let images = images
        .into_iter()
        .map(|ls| FreeWord::new(n, ls).expect("generator images are in range"))
        .collect();
    FreeAut::new(n, images).expect("one image per generator")
}

/// The signed permutation of a single letter: σ and ρ transpose two strands,
/// τ flips one sign.
fn generator_signed_perm(n: usize, l: GenLetter) -> SignedPerm {
    let mut pi: Vec<usize> = (1..=n).collect();
    let mut signs = vec![1i8; n];
    match l {
        GenLetter::Sigma { index: i, .. } | GenLetter::Rho { index: i } => {
            pi.swap(i - 1, i);
        }
        GenLetter::Tau { index: i } => {
            signs[i - 1] = -1;
        }
    }
    SignedPerm::new(n, pi, signs).expect("letter data is a valid signed permutation")
}

/// Swap rule: for a wen-free letter g, expresses `g · τ_j` as
/// `τ_k · tail` with a wen-free tail. Returns `(k, tail)`.
///
/// The rules are consequences of the defining relations:
/// moving past ρ_i or a crossing aligned with the wen relabels the index
/// between i and i+1; moving τ_i head-on through σ_i (or τ_{i+1} through
/// σ_i^-1) also flips the crossing and wraps it in ρ_i on both sides; in
/// every other position the letters commute. Each rule is checked against
/// ν by the unit tests below before anything relies on it.
pub fn push_wen_left(g: GenLetter, j: usize) -> (usize, Vec<GenLetter>) {
    match g {
        GenLetter::Rho { index: i } => {
            if j == i {
                (i + 1, vec![g])
            } else if j == i + 1 {
                (i, vec![g])
            } else {
                (j, vec![g])
            }
        }
        GenLetter::Sigma { index: i, exp: 1 } => {
            if j == i + 1 {
                (i, vec![g])
            } else if j == i {
                (
                    i + 1,
                    vec![
                        GenLetter::rho(i),
                        GenLetter::sigma_inv(i),
                        GenLetter::rho(i),
                    ],
                )
            } else {
                (j, vec![g])
            }
        }
        GenLetter::Sigma { index: i, .. } => {
            if j == i {
                (i + 1, vec![g])
            } else if j == i + 1 {
                (
                    i,
                    vec![GenLetter::rho(i), GenLetter::sigma(i), GenLetter::rho(i)],
                )
            } else {
                (j, vec![g])
            }
        }
        GenLetter::Tau { .. } => unreachable!("wen-free segment contains no τ"),
    }
}

/// Moves a single τ_j from the right end of a wen-free segment to its front.
/// Returns the index the wen arrives with and the rewritten segment.
fn bubble_wen_to_front(segment: &[GenLetter], j0: usize) -> (usize, Vec<GenLetter>) {
    let mut j = j0;
    let mut tail_rev: Vec<GenLetter> = Vec::new();
    for &g in segment.iter().rev() {
        let (next, replacement) = push_wen_left(g, j);
        j = next;
        for &r in replacement.iter().rev() {
            tail_rev.push(r);
        }
    }
    tail_rev.reverse();
    (j, tail_rev)
}

/// One checked instance of a defining relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    /// Relation family, 1 through 16.
    pub family: usize,
    /// The indices the family was instantiated at.
    pub indices: Vec<usize>,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
    pub pass: bool,
}

/// Every defining relation of the group on n strands, instantiated at every
/// valid index and checked through ν.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl fmt::Display for RelationReport {
    /// Table form: family id, indices, the relation as word text, status.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={}: {} relation checks, {} failing",
            self.n,
            self.checks.len(),
            self.checks.iter().filter(|c| !c.pass).count()
        )?;
        writeln!(
            f,
            "{:>6}  {:<10}  {:<42}  status",
            "family", "indices", "relation"
        )?;
        for c in &self.checks {
            let indices = format!(
                "({})",
                c.indices
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let relation = format!("{} = {}", c.lhs, c.rhs);
            let status = if c.pass { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{:>6}  {:<10}  {:<42}  {}",
                c.family, indices, relation, status
            )?;
        }
        Ok(())
    }
}

/// Family id, instantiated indices, and the two sides as letter sequences.
type RelationInstance = (usize, Vec<usize>, Vec<GenLetter>, Vec<GenLetter>);

/// The sixteen relation families, in presentation order. Commutation
/// families quantify over ordered index pairs, so each instance appears in
/// both orders; families 9 and 10 split τ-commutation into adjacent and
/// distant indices.
///
/// 1  σi σj = σj σi            |i-j| > 1
/// 2  σi σi+1 σi = σi+1 σi σi+1
/// 3  ρi ρj = ρj ρi            |i-j| > 1
/// 4  ρi ρi+1 ρi = ρi+1 ρi ρi+1
/// 5  ρi ρi = 1
/// 6  ρi σj = σj ρi            |i-j| > 1
/// 7  ρi+1 ρi σi+1 = σi ρi+1 ρi
/// 8  σi+1 σi ρi+1 = ρi σi+1 σi
/// 9  τi τj = τj τi            |i-j| = 1
/// 10 τi τj = τj τi            |i-j| > 1
/// 11 τi τi = 1
/// 12 σi τj = τj σi            |i-j| > 1
/// 13 ρi τj = τj ρi            |i-j| > 1
/// 14 τi ρi = ρi τi+1
/// 15 τi σi = σi τi+1
/// 16 τi+1 σi = ρi σi^-1 ρi τi
fn relation_instances(n: usize) -> Vec<RelationInstance> {
    let s = GenLetter::sigma;
    let si = GenLetter::sigma_inv;
    let r = GenLetter::rho;
    let t = GenLetter::tau;
    let far = |i: usize, j: usize| i.abs_diff(j) > 1;
    let mut out = Vec::new();

    for i in 1..n {
        for j in 1..n {
            if far(i, j) {
                out.push((1, vec![i, j], vec![s(i), s(j)], vec![s(j), s(i)]));
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push((
            2,
            vec![i],
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        ));
    }
    for i in 1..n {
        for j in 1..n {
            if far(i, j) {
                out.push((3, vec![i, j], vec![r(i), r(j)], vec![r(j), r(i)]));
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push((
            4,
            vec![i],
            vec![r(i), r(i + 1), r(i)],
            vec![r(i + 1), r(i), r(i + 1)],
        ));
    }
    for i in 1..n {
        out.push((5, vec![i], vec![r(i), r(i)], vec![]));
    }
    for i in 1..n {
        for j in 1..n {
            if far(i, j) {
                out.push((6, vec![i, j], vec![r(i), s(j)], vec![s(j), r(i)]));
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push((
            7,
            vec![i],
            vec![r(i + 1), r(i), s(i + 1)],
            vec![s(i), r(i + 1), r(i)],
        ));
    }
    for i in 1..n.saturating_sub(1) {
        out.push((
            8,
            vec![i],
            vec![s(i + 1), s(i), r(i + 1)],
            vec![r(i), s(i + 1), s(i)],
        ));
    }
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) == 1 {
                out.push((9, vec![i, j], vec![t(i), t(j)], vec![t(j), t(i)]));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if far(i, j) {
                out.push((10, vec![i, j], vec![t(i), t(j)], vec![t(j), t(i)]));
            }
        }
    }
    for i in 1..=n {
        out.push((11, vec![i], vec![t(i), t(i)], vec![]));
    }
    for i in 1..n {
        for j in 1..=n {
            if far(i, j) {
                out.push((12, vec![i, j], vec![s(i), t(j)], vec![t(j), s(i)]));
            }
        }
    }
    for i in 1..n {
        for j in 1..=n {
            if far(i, j) {
                out.push((13, vec![i, j], vec![r(i), t(j)], vec![t(j), r(i)]));
            }
        }
    }
    for i in 1..n {
        out.push((14, vec![i], vec![t(i), r(i)], vec![r(i), t(i + 1)]));
    }
    for i in 1..n {
        out.push((15, vec![i], vec![t(i), s(i)], vec![s(i), t(i + 1)]));
    }
    for i in 1..n {
        out.push((
            16,
            vec![i],
            vec![t(i + 1), s(i)],
            vec![r(i), si(i), r(i), t(i)],
        ));
    }
    out
}

/// Checks every defining relation instance on n strands through ν.
///
/// The report lists checks by family id and then lexicographic indices.
pub fn relation_suite(n: usize) -> RelationReport {
    assert!(n >= 1, "strand count must be at least 1");
    let checks = relation_instances(n)
        .into_iter()
        .map(|(family, indices, lhs, rhs)| {
            let lhs = BraidWord::new(n, lhs).expect("relation indices are in range");
            let rhs = BraidWord::new(n, rhs).expect("relation indices are in range");
            let pass = lhs.equivalent(&rhs);
            RelationCheck {
                family,
                indices,
                lhs,
                rhs,
                pass,
            }
        })
        .collect();
    RelationReport { n, checks }
}

/// A uniformly random word of exactly `len` letters over the generator
/// alphabet σ_i^±1, ρ_i (i < n) and τ_i (i ≤ n). On one strand the alphabet
/// is just τ_1.
pub fn random_word<R: rand::Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> BraidWord {
    assert!(n >= 1, "strand count must be at least 1");
    let mut alphabet = Vec::with_capacity(4 * n - 3);
    for i in 1..n {
        alphabet.push(GenLetter::sigma(i));
        alphabet.push(GenLetter::sigma_inv(i));
        alphabet.push(GenLetter::rho(i));
    }
    for i in 1..=n {
        alphabet.push(GenLetter::tau(i));
    }
    let letters = (0..len)
        .map(|_| alphabet[rng.random_range(0..alphabet.len())])
        .collect();
    BraidWord { n, letters }
}
