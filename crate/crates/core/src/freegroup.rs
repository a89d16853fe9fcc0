//! Arithmetic in the free group F_n and in the subgroup of its automorphisms
//! that send each generator to a conjugate of a (possibly inverted) generator.
//!
//! Words are stored freely reduced at all times, so structural equality *is*
//! group equality, and comparing automorphisms by their generator images
//! decides equality in the automorphism group. This is the engine behind the
//! word problem for the braid layer: everything else in the crate bottoms out
//! in the substitution arithmetic defined here.

use serde::Serialize;
use std::fmt;

/// One letter of a word in F_n: the generator `x_index` or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    /// 1-based generator index.
    pub index: usize,
    /// Exponent, +1 or -1.
    pub exp: i8,
}

impl Letter {
    pub fn new(index: usize, exp: i8) -> Letter {
        Letter { index, exp }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            exp: -self.exp,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.exp == -other.exp
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("generator index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("letter exponent must be +1 or -1, got {exp}")]
    BadExponent { exp: i8 },
    #[error("expected {n} generator images, got {got}")]
    WrongImageCount { got: usize, n: usize },
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PcFormError {
    /// The image of some generator is not of the shape w^-1 x^±1 w.
    #[error("image of x{position} is not a conjugate of a generator")]
    ImageNotConjugateOfGenerator { position: usize },
    /// The core letters of the images do not hit each generator exactly once.
    #[error("core generator indices do not form a permutation")]
    NotAPermutation,
}

/// Appends a letter to a reduced letter stack, cancelling against the top.
///
/// Feeding a raw sequence through this one letter at a time is a single
/// left-to-right pass and yields the unique freely reduced form.
fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    match stack.last() {
        Some(&top) if top.cancels(l) => {
            stack.pop();
        }
        _ => stack.push(l),
    }
}

/// A freely reduced word in the free group F_n.
///
/// The letter vector never contains an adjacent cancelling pair, so derived
/// equality and hashing agree with equality in the group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeWord {
    n: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    /// Reduces a raw letter sequence into a word of F_n.
    pub fn new(
        n: usize,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<FreeWord, FreeGroupError> {
        if n == 0 {
            return Err(FreeGroupError::ZeroRank);
        }
        let mut stack = Vec::new();
        for l in letters {
            if l.index == 0 || l.index > n {
                return Err(FreeGroupError::IndexOutOfRange { index: l.index, n });
            }
            if l.exp != 1 && l.exp != -1 {
                return Err(FreeGroupError::BadExponent { exp: l.exp });
            }
            push_reduced(&mut stack, l);
        }
        Ok(FreeWord { n, letters: stack })
    }

    /// The empty word of F_n.
    pub fn empty(n: usize) -> FreeWord {
        assert!(n >= 1, "rank must be at least 1");
        FreeWord {
            n,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `x_i`.
    pub fn generator(n: usize, i: usize) -> Result<FreeWord, FreeGroupError> {
        FreeWord::new(n, [Letter::new(i, 1)])
    }

    /// Wraps letters that are already reduced and in range.
    fn from_reduced(n: usize, letters: Vec<Letter>) -> FreeWord {
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        FreeWord { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The reduced product `self · other`.
    ///
    /// Panics if the ranks differ.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.n, other.n, "rank mismatch in concat");
        let mut stack = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut stack, l);
        }
        FreeWord::from_reduced(self.n, stack)
    }

    /// The group inverse: letters reversed, exponents flipped.
    pub fn inverse(&self) -> FreeWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        FreeWord::from_reduced(self.n, letters)
    }
}

impl fmt::Display for FreeWord {
    /// Text form: `x1 x2^-1`, or `1` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l.exp == 1 {
                write!(f, "x{}", l.index)?;
            } else {
                write!(f, "x{}^-1", l.index)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of F_n recorded by its generator images.
///
/// The braid layer only ever constructs automorphisms whose images are
/// conjugates of (possibly inverted) generators; nothing here enforces that,
/// and [`FreeAut::pc_form`] is the membership check.
///
/// Derived equality compares reduced images, which is equality of the maps.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeAut {
    n: usize,
    images: Vec<FreeWord>,
}

impl FreeAut {
    pub fn new(n: usize, images: Vec<FreeWord>) -> Result<FreeAut, FreeGroupError> {
        if n == 0 {
            return Err(FreeGroupError::ZeroRank);
        }
        if images.len() != n {
            return Err(FreeGroupError::WrongImageCount {
                got: images.len(),
                n,
            });
        }
        for img in &images {
            if img.n != n {
                return Err(FreeGroupError::WrongImageCount { got: img.n, n });
            }
        }
        Ok(FreeAut { n, images })
    }

    /// The identity map on F_n.
    pub fn identity(n: usize) -> FreeAut {
        assert!(n >= 1, "rank must be at least 1");
        let images = (1..=n)
            .map(|i| FreeWord::from_reduced(n, vec![Letter::new(i, 1)]))
            .collect();
        FreeAut { n, images }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, img)| img.letters.len() == 1 && img.letters[0] == Letter::new(k + 1, 1))
    }

    /// Applies the map to a word by substituting generator images.
    ///
    /// Panics if the ranks differ.
    pub fn apply(&self, u: &FreeWord) -> FreeWord {
        assert_eq!(self.n, u.n, "rank mismatch in apply");
        let mut stack = Vec::new();
        for &l in &u.letters {
            let img = &self.images[l.index - 1];
            if l.exp == 1 {
                for &m in &img.letters {
                    push_reduced(&mut stack, m);
                }
            } else {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut stack, m.inverse());
                }
            }
        }
        FreeWord::from_reduced(self.n, stack)
    }

    /// Functional composition `self ∘ other`: the map `u ↦ self(other(u))`.
    ///
    /// The argument on the *right* acts on elements first. This is the
    /// orientation under which the braid representation is a homomorphism on
    /// words read left to right: ν(u·v) = ν(u).compose(&ν(v)). The defining
    /// relation suite in the braid layer pins this down; the mixed wen and
    /// crossing relations fail under the reversed convention.
    ///
    /// Panics if the ranks differ.
    pub fn compose(&self, other: &FreeAut) -> FreeAut {
        assert_eq!(self.n, other.n, "rank mismatch in compose");
        let images = other.images.iter().map(|w| self.apply(w)).collect();
        FreeAut { n: self.n, images }
    }

    /// Decomposes the map as x_i ↦ w_i^-1 x_{π(i)}^{ε_i} w_i.
    ///
    /// A reduced word is a conjugate of a generator exactly when it has odd
    /// length and its left half mirrors its right half, because cancellation
    /// in w^-1 x^±1 w can only eat symmetrically at the two junctions. The
    /// middle letter is the core and the right half is the unique shortest
    /// conjugator.
    pub fn pc_form(&self) -> Result<PcForm, PcFormError> {
        let n = self.n;
        let mut pi = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        let mut conjugators = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for (k, img) in self.images.iter().enumerate() {
            let position = k + 1;
            let len = img.letters.len();
            if len % 2 == 0 {
                return Err(PcFormError::ImageNotConjugateOfGenerator { position });
            }
            let half = len / 2;
            for t in 0..half {
                if img.letters[t] != img.letters[len - 1 - t].inverse() {
                    return Err(PcFormError::ImageNotConjugateOfGenerator { position });
                }
            }
            let core = img.letters[half];
            if seen[core.index - 1] {
                return Err(PcFormError::NotAPermutation);
            }
            seen[core.index - 1] = true;
            pi.push(core.index);
            signs.push(core.exp);
            // A contiguous slice of a reduced word is reduced.
            conjugators.push(FreeWord::from_reduced(n, img.letters[half + 1..].to_vec()));
        }
        Ok(PcForm {
            n,
            pi,
            signs,
            conjugators,
        })
    }

    /// Forgets the conjugators, keeping the permutation and the signs.
    pub fn signed_perm(&self) -> Result<SignedPerm, PcFormError> {
        Ok(self.pc_form()?.into_signed_perm())
    }

    pub fn export(&self) -> FreeAutDoc {
        FreeAutDoc {
            n: self.n,
            images: self.images.iter().map(|w| w.to_string()).collect(),
        }
    }
}

/// Serializable view of an automorphism: images in the `x1 x2^-1` text form.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct FreeAutDoc {
    pub n: usize,
    pub images: Vec<String>,
}

/// The data of a map x_i ↦ w_i^-1 x_{π(i)}^{ε_i} w_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PcForm {
    n: usize,
    pi: Vec<usize>,
    signs: Vec<i8>,
    conjugators: Vec<FreeWord>,
}

impl PcForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based permutation images: `pi()[i-1]` is π(i).
    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn conjugators(&self) -> &[FreeWord] {
        &self.conjugators
    }

    /// Rebuilds the automorphism the form was extracted from.
    pub fn to_aut(&self) -> FreeAut {
        let images = (0..self.n)
            .map(|k| {
                let core =
                    FreeWord::from_reduced(self.n, vec![Letter::new(self.pi[k], self.signs[k])]);
                let w = &self.conjugators[k];
                w.inverse().concat(&core).concat(w)
            })
            .collect();
        FreeAut { n: self.n, images }
    }

    pub fn into_signed_perm(self) -> SignedPerm {
        SignedPerm {
            n: self.n,
            pi: self.pi,
            signs: self.signs,
        }
    }

    pub fn export(&self) -> PcFormDoc {
        PcFormDoc {
            n: self.n,
            pi: self.pi.clone(),
            signs: self.signs.clone(),
            conjugators: self.conjugators.iter().map(|w| w.to_string()).collect(),
        }
    }
}

/// Serializable view of a [`PcForm`].
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct PcFormDoc {
    pub n: usize,
    pub pi: Vec<usize>,
    pub signs: Vec<i8>,
    pub conjugators: Vec<String>,
}

/// A permutation of 1..=n with a sign at every point.
///
/// This is what remains of an automorphism in PC shape after dropping the
/// conjugators. The group law mirrors [`FreeAut::compose`], so the
/// forgetful map is a homomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm {
    n: usize,
    pi: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(n: usize, pi: Vec<usize>, signs: Vec<i8>) -> Result<SignedPerm, FreeGroupError> {
        if n == 0 {
            return Err(FreeGroupError::ZeroRank);
        }
        if pi.len() != n || signs.len() != n {
            return Err(FreeGroupError::WrongImageCount {
                got: pi.len().max(signs.len()),
                n,
            });
        }
        let mut seen = vec![false; n];
        for &image in &pi {
            if image == 0 || image > n {
                return Err(FreeGroupError::IndexOutOfRange { index: image, n });
            }
            if seen[image - 1] {
                return Err(FreeGroupError::IndexOutOfRange { index: image, n });
            }
            seen[image - 1] = true;
        }
        for &s in &signs {
            if s != 1 && s != -1 {
                return Err(FreeGroupError::BadExponent { exp: s });
            }
        }
        Ok(SignedPerm { n, pi, signs })
    }

    pub fn identity(n: usize) -> SignedPerm {
        assert!(n >= 1, "rank must be at least 1");
        SignedPerm {
            n,
            pi: (1..=n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// True when the underlying permutation (signs ignored) is trivial.
    pub fn is_trivial_perm(&self) -> bool {
        self.pi.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Composition in the same orientation as [`FreeAut::compose`]:
    /// `self.compose(&other)` is `self ∘ other` with `other` acting first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.n, other.n, "rank mismatch in compose");
        let mut pi = Vec::with_capacity(self.n);
        let mut signs = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let mid = other.pi[k];
            pi.push(self.pi[mid - 1]);
            signs.push(other.signs[k] * self.signs[mid - 1]);
        }
        SignedPerm {
            n: self.n,
            pi,
            signs,
        }
    }

    /// Cycles of the permutation, each listed from its smallest element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut visited = vec![false; self.n];
        for start in 1..=self.n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            while !visited[at - 1] {
                visited[at - 1] = true;
                cycle.push(at);
                at = self.pi[at - 1];
            }
            out.push(cycle);
        }
        out
    }

    /// The multiset of (cycle length, product of signs over the cycle),
    /// sorted descending. Two signed permutations are conjugate exactly when
    /// these multisets agree, so this doubles as a conjugacy-class label.
    pub fn cycle_type(&self) -> Vec<(usize, i8)> {
        let mut out: Vec<(usize, i8)> = self
            .cycles()
            .into_iter()
            .map(|cycle| {
                let sign = cycle.iter().map(|&i| self.signs[i - 1]).product();
                (cycle.len(), sign)
            })
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}
