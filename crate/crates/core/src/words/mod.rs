//! Free Γ-products of a finite family of pairwise disjoint Γ-semigroups.
//!
//! Elements are reduced alternating words `x₁ γ₁ x₂ … x_m` with `m ≥ 1`.
//! Multiplication concatenates and merges at most once at the junction.
//!
//! Two modes are supported:
//!
//! * [`Mode::SameGamma`]: every member shares one gamma list. A factor
//!   `(x, γ, y)` merges whenever `x` and `y` come from the same member.
//! * [`Mode::DisjointFamilies`]: each member brings its own gammas, and a factor
//!   merges only when `x`, `γ` and `y` all come from the same member. A factor
//!   with `ζ(x) = ζ(y) ≠ ζ(γ)` cannot merge and stays in the word.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Elem, Gam, GammaHomomorphism, GammaSemigroup};


#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    SameGamma,
    DisjointFamilies,
}

impl Mode {
    pub fn keyword(self) -> &'static str {
        match self {
            Mode::SameGamma => "same-gamma",
            Mode::DisjointFamilies => "disjoint",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "same-gamma" => Some(Mode::SameGamma),
            "disjoint" => Some(Mode::DisjointFamilies),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// An element letter: owning member (its pointer `ζ`) and element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub pointer: usize,
    pub element: Elem,
}

impl Letter {
    pub fn new(pointer: usize, element: Elem) -> Self {
        Self { pointer, element }
    }
}

/// A gamma letter. The pointer is present exactly in disjoint mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaLetter {
    pub pointer: Option<usize>,
    pub gamma: Gam,
}

impl GammaLetter {
    pub fn shared(gamma: Gam) -> Self {
        Self {
            pointer: None,
            gamma,
        }
    }

    pub fn owned(pointer: usize, gamma: Gam) -> Self {
        Self {
            pointer: Some(pointer),
            gamma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Element(Letter),
    Gamma(GammaLetter),
}

/// An alternating sequence `x₁ γ₁ … x_m`, not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    letters: Vec<Letter>,
    gammas: Vec<GammaLetter>,
}

impl Sequence {
    /// `None` unless `letters` is nonempty and one longer than `gammas`.
    pub fn new(letters: Vec<Letter>, gammas: Vec<GammaLetter>) -> Option<Self> {
        (!letters.is_empty() && letters.len() == gammas.len() + 1)
            .then_some(Self { letters, gammas })
    }

    pub fn single(letter: Letter) -> Self {
        Self {
            letters: vec![letter],
            gammas: Vec::new(),
        }
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        let mut gammas = Vec::new();
        for (i, sym) in symbols.iter().enumerate() {
            match (i % 2, sym) {
                (0, Symbol::Element(l)) => letters.push(*l),
                (1, Symbol::Gamma(g)) => gammas.push(*g),
                (0, _) => {
                    return Err(WordError::MalformedSequence(format!(
                        "expected an element letter at position {}",
                        i + 1
                    )))
                }
                _ => {
                    return Err(WordError::MalformedSequence(format!(
                        "expected a gamma letter at position {}",
                        i + 1
                    )))
                }
            }
        }
        if letters.is_empty() {
            return Err(WordError::MalformedSequence("empty sequence".into()));
        }
        if letters.len() != gammas.len() + 1 {
            return Err(WordError::MalformedSequence(
                "sequence must end with an element letter".into(),
            ));
        }
        Ok(Self { letters, gammas })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn gammas(&self) -> &[GammaLetter] {
        &self.gammas
    }

    /// Number of element letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.letters.len() * 2 - 1);
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push(Symbol::Gamma(self.gammas[i - 1]));
            }
            out.push(Symbol::Element(*l));
        }
        out
    }

    /// Replaces the letter at `position`.
    pub fn with_letter(&self, position: usize, letter: Letter) -> Self {
        let mut out = self.clone();
        out.letters[position] = letter;
        out
    }

    /// Replaces the letter at `position` by the factor `left gamma right`.
    pub fn split_at(
        &self,
        position: usize,
        left: Letter,
        gamma: GammaLetter,
        right: Letter,
    ) -> Self {
        let mut out = self.clone();
        out.letters[position] = left;
        out.letters.insert(position + 1, right);
        out.gammas.insert(position, gamma);
        out
    }

    /// Replaces the factor starting at letter `position` by `merged`.
    pub fn join_at(&self, position: usize, merged: Letter) -> Self {
        let mut out = self.clone();
        out.letters[position] = merged;
        out.letters.remove(position + 1);
        out.gammas.remove(position);
        out
    }
}

/// A reduced word: an element of a free Γ-product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    mode: Mode,
    seq: Sequence,
}

impl Word {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn letters(&self) -> &[Letter] {
        &self.seq.letters
    }

    pub fn gammas(&self) -> &[GammaLetter] {
        &self.seq.gammas
    }

    /// Number of element letters `m`.
    pub fn len(&self) -> usize {
        self.seq.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_sequence(&self) -> &Sequence {
        &self.seq
    }

    pub fn first(&self) -> Letter {
        self.seq.letters[0]
    }

    pub fn last(&self) -> Letter {
        *self.seq.letters.last().expect("words are nonempty")
    }
}

/// Canonical order: element count, then letters `(pointer, element)`, then gammas.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.seq.letters.cmp(&other.seq.letters))
            .then_with(|| self.seq.gammas.cmp(&other.seq.gammas))
            .then_with(|| self.mode.cmp(&other.mode))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error(
        "factor at gamma position {position} joins letters of one member through a foreign gamma"
    )]
    CrossFamilyGamma { position: usize },
    #[error("mode mismatch")]
    ModeMismatch,
    #[error("letter is not part of this free product")]
    InvalidLetter,
    #[error("gamma letter is not valid in {0} mode")]
    InvalidGamma(Mode),
    #[error("element name `{0}` occurs in more than one member")]
    NameClash(String),
    #[error("gamma sets disagree: {0}")]
    GammaMismatch(String),
    #[error("gamma name `{0}` occurs in more than one member")]
    GammaClash(String),
    #[error("a free product needs at least one member")]
    EmptyFamily,
    #[error("no homomorphism given for member {0}")]
    MissingHomomorphism(usize),
    #[error("homomorphism for member {0} does not land in the fold target")]
    TargetMismatch(usize),
    #[error("map for member {0} is not a homomorphism")]
    NotAHomomorphism(usize),
}

/// The free Γ-product of an ordered family of Γ-semigroups.
#[derive(Debug, Clone)]
pub struct FreeProduct {
    members: Vec<Arc<GammaSemigroup>>,
    mode: Mode,
    letters_by_name: HashMap<String, Letter>,
    gammas_by_name: HashMap<String, GammaLetter>,
}

impl FreeProduct {
    pub fn new(members: Vec<Arc<GammaSemigroup>>, mode: Mode) -> Result<Self, WordError> {
        let first = members.first().ok_or(WordError::EmptyFamily)?;
        let mut letters_by_name = HashMap::new();
        for (p, s) in members.iter().enumerate() {
            for e in s.elements() {
                let name = s.element_name(e);
                if letters_by_name
                    .insert(name.to_owned(), Letter::new(p, e))
                    .is_some()
                {
                    return Err(WordError::NameClash(name.to_owned()));
                }
            }
        }
        let mut gammas_by_name = HashMap::new();
        match mode {
            Mode::SameGamma => {
                for s in &members {
                    if s.gamma_names() != first.gamma_names() {
                        return Err(WordError::GammaMismatch(format!(
                            "`{}` and `{}` have different gamma lists",
                            first.name(),
                            s.name()
                        )));
                    }
                }
                for g in first.gammas() {
                    gammas_by_name.insert(first.gamma_name(g).to_owned(), GammaLetter::shared(g));
                }
            }
            Mode::DisjointFamilies => {
                for (p, s) in members.iter().enumerate() {
                    for g in s.gammas() {
                        let name = s.gamma_name(g);
                        if gammas_by_name
                            .insert(name.to_owned(), GammaLetter::owned(p, g))
                            .is_some()
                        {
                            return Err(WordError::GammaClash(name.to_owned()));
                        }
                    }
                }
            }
        }
        Ok(Self {
            members,
            mode,
            letters_by_name,
            gammas_by_name,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn members(&self) -> &[Arc<GammaSemigroup>] {
        &self.members
    }

    pub fn member(&self, pointer: usize) -> &GammaSemigroup {
        &self.members[pointer]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.letters_by_name.get(name).copied()
    }

    pub fn gamma_letter(&self, name: &str) -> Option<GammaLetter> {
        self.gammas_by_name.get(name).copied()
    }

    pub fn letter_name(&self, l: Letter) -> &str {
        self.members[l.pointer].element_name(l.element)
    }

    pub fn gamma_letter_name(&self, g: GammaLetter) -> &str {
        let owner = g.pointer.unwrap_or(0);
        self.members[owner].gamma_name(g.gamma)
    }

    pub fn is_valid_letter(&self, l: Letter) -> bool {
        l.pointer < self.members.len() && self.members[l.pointer].contains(l.element)
    }

    pub fn is_valid_gamma(&self, g: GammaLetter) -> bool {
        match (self.mode, g.pointer) {
            (Mode::SameGamma, None) => g.gamma.0 < self.members[0].gamma_count(),
            (Mode::DisjointFamilies, Some(p)) => {
                p < self.members.len() && g.gamma.0 < self.members[p].gamma_count()
            }
            _ => false,
        }
    }

    /// Every element letter, in canonical order.
    pub fn all_letters(&self) -> Vec<Letter> {
        self.members
            .iter()
            .enumerate()
            .flat_map(|(p, s)| s.elements().map(move |e| Letter::new(p, e)))
            .collect()
    }

    /// Every gamma letter, in canonical order.
    pub fn all_gammas(&self) -> Vec<GammaLetter> {
        match self.mode {
            Mode::SameGamma => self.members[0].gammas().map(GammaLetter::shared).collect(),
            Mode::DisjointFamilies => self
                .members
                .iter()
                .enumerate()
                .flat_map(|(p, s)| s.gammas().map(move |g| GammaLetter::owned(p, g)))
                .collect(),
        }
    }

    /// The merge condition for the factor `(x, γ, y)`.
    #[inline]
    pub fn mergeable(&self, x: Letter, gamma: GammaLetter, y: Letter) -> bool {
        x.pointer == y.pointer
            && match self.mode {
                Mode::SameGamma => true,
                Mode::DisjointFamilies => gamma.pointer == Some(x.pointer),
            }
    }

    /// `xγy` computed in the owning member. Caller ensures [`Self::mergeable`].
    #[inline]
    pub fn merge(&self, x: Letter, gamma: GammaLetter, y: Letter) -> Letter {
        Letter::new(
            x.pointer,
            self.members[x.pointer].op(x.element, gamma.gamma, y.element),
        )
    }

    /// No factor of `seq` satisfies the merge condition.
    pub fn is_reduced(&self, seq: &Sequence) -> bool {
        seq.gammas
            .iter()
            .enumerate()
            .all(|(i, &g)| !self.mergeable(seq.letters[i], g, seq.letters[i + 1]))
    }

    fn reduce(&self, seq: &Sequence, strict: bool) -> Result<Sequence, WordError> {
        let mut letters = Vec::with_capacity(seq.letters.len());
        let mut gammas = Vec::with_capacity(seq.gammas.len());
        letters.push(seq.letters[0]);
        for (i, &g) in seq.gammas.iter().enumerate() {
            let y = seq.letters[i + 1];
            let top = letters.last_mut().expect("stack is nonempty");
            if self.mergeable(*top, g, y) {
                *top = self.merge(*top, g, y);
            } else {
                if strict && top.pointer == y.pointer {
                    return Err(WordError::CrossFamilyGamma { position: i + 1 });
                }
                gammas.push(g);
                letters.push(y);
            }
        }
        Ok(Sequence { letters, gammas })
    }

    fn check_sequence(&self, seq: &Sequence) -> Result<(), WordError> {
        if !seq.letters.iter().all(|&l| self.is_valid_letter(l)) {
            return Err(WordError::InvalidLetter);
        }
        if !seq.gammas.iter().all(|&g| self.is_valid_gamma(g)) {
            return Err(WordError::InvalidGamma(self.mode));
        }
        Ok(())
    }

    /// Merges factors left to right until the sequence is reduced.
    ///
    /// In disjoint mode a remaining factor `(x, γ, y)` with `ζ(x) = ζ(y) ≠ ζ(γ)`
    /// is rejected with [`WordError::CrossFamilyGamma`].
    pub fn normalize(&self, symbols: &[Symbol]) -> Result<Word, WordError> {
        let seq = Sequence::from_symbols(symbols)?;
        self.check_sequence(&seq)?;
        let seq = self.reduce(&seq, true)?;
        Ok(Word {
            mode: self.mode,
            seq,
        })
    }

    /// The word denoted by `seq`: its left-to-right product.
    ///
    /// Unlike [`Self::normalize`] this never rejects cross-family factors;
    /// they are left in place. Panics if `seq` uses letters foreign to `self`.
    pub fn evaluate(&self, seq: &Sequence) -> Word {
        self.check_sequence(seq)
            .expect("sequence belongs to this free product");
        Word {
            mode: self.mode,
            seq: self
                .reduce(seq, false)
                .expect("relaxed reduction cannot fail"),
        }
    }

    /// `θ_i`: the one-letter word `(a)` over member `pointer`.
    pub fn embed(&self, pointer: usize, name: &str) -> Result<Word, WordError> {
        let s = self
            .members
            .get(pointer)
            .ok_or_else(|| WordError::UnknownIdentifier(pointer.to_string()))?;
        let e = s
            .element(name)
            .ok_or_else(|| WordError::UnknownIdentifier(name.to_owned()))?;
        Ok(self.embed_letter(Letter::new(pointer, e)))
    }

    pub fn embed_letter(&self, letter: Letter) -> Word {
        assert!(self.is_valid_letter(letter));
        Word {
            mode: self.mode,
            seq: Sequence::single(letter),
        }
    }

    /// `a γ b`: concatenate, merging once at the junction when the merge
    /// condition holds there.
    pub fn multiply(&self, a: &Word, gamma: GammaLetter, b: &Word) -> Result<Word, WordError> {
        if a.mode != self.mode || b.mode != self.mode {
            return Err(WordError::ModeMismatch);
        }
        if !self.is_valid_gamma(gamma) {
            return Err(WordError::InvalidGamma(self.mode));
        }
        let mut letters = Vec::with_capacity(a.len() + b.len());
        let mut gammas = Vec::with_capacity(a.len() + b.len());
        letters.extend_from_slice(&a.seq.letters);
        gammas.extend_from_slice(&a.seq.gammas);
        let (x, y) = (a.last(), b.first());
        if self.mergeable(x, gamma, y) {
            *letters.last_mut().expect("nonempty") = self.merge(x, gamma, y);
        } else {
            gammas.push(gamma);
            letters.push(y);
        }
        letters.extend_from_slice(&b.seq.letters[1..]);
        gammas.extend_from_slice(&b.seq.gammas);
        Ok(Word {
            mode: self.mode,
            seq: Sequence { letters, gammas },
        })
    }

    fn check_fold_maps(
        &self,
        target: &GammaSemigroup,
        homs: &[GammaHomomorphism],
    ) -> Result<(), WordError> {
        for (i, s) in self.members.iter().enumerate() {
            let h = homs.get(i).ok_or(WordError::MissingHomomorphism(i))?;
            // Pointer checks first: comparing whole tables is costly.
            if !Arc::ptr_eq(h.source(), s) && **h.source() != **s {
                return Err(WordError::MissingHomomorphism(i));
            }
            if !std::ptr::eq(&**h.target(), target) && **h.target() != *target {
                return Err(WordError::TargetMismatch(i));
            }
            h.verify().map_err(|_| WordError::NotAHomomorphism(i))?;
        }
        Ok(())
    }

    /// The induced map `λ`: `ψ_{ζ(x₁)}(x₁) γ₁ ψ_{ζ(x₂)}(x₂) …` evaluated in
    /// `target`, left to right.
    ///
    /// Same-gamma mode only; `target` must carry the shared gamma list and
    /// gamma letters are used as they are.
    pub fn fold(
        &self,
        word: &Word,
        target: &GammaSemigroup,
        homs: &[GammaHomomorphism],
    ) -> Result<Elem, WordError> {
        if self.mode != Mode::SameGamma || word.mode != Mode::SameGamma {
            return Err(WordError::ModeMismatch);
        }
        if target.gamma_names() != self.members[0].gamma_names() {
            return Err(WordError::GammaMismatch(format!(
                "fold target `{}` does not carry the shared gamma list",
                target.name()
            )));
        }
        self.check_fold_maps(target, homs)?;
        Ok(self.fold_unchecked(word, target, homs, |g| g.gamma))
    }

    /// Disjoint-mode fold: a gamma letter owned by member `p` is sent through
    /// `ψ_p″`.
    pub fn fold_with_gamma_maps(
        &self,
        word: &Word,
        target: &GammaSemigroup,
        homs: &[GammaHomomorphism],
    ) -> Result<Elem, WordError> {
        if self.mode != Mode::DisjointFamilies || word.mode != Mode::DisjointFamilies {
            return Err(WordError::ModeMismatch);
        }
        self.check_fold_maps(target, homs)?;
        Ok(self.fold_unchecked(word, target, homs, |g| {
            homs[g.pointer.expect("disjoint gammas carry a pointer")].apply_gamma(g.gamma)
        }))
    }

    fn fold_unchecked(
        &self,
        word: &Word,
        target: &GammaSemigroup,
        homs: &[GammaHomomorphism],
        gamma_image: impl Fn(GammaLetter) -> Gam,
    ) -> Elem {
        let image = |l: Letter| homs[l.pointer].apply(l.element);
        let mut acc = image(word.first());
        for (g, &x) in word.gammas().iter().zip(&word.letters()[1..]) {
            acc = target.op(acc, gamma_image(*g), image(x));
        }
        acc
    }

    /// Parses space-separated element and gamma names, then normalizes.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let symbols = text
            .split_whitespace()
            .enumerate()
            .map(|(i, tok)| {
                if i % 2 == 0 {
                    self.letter(tok).map(Symbol::Element)
                } else {
                    self.gamma_letter(tok).map(Symbol::Gamma)
                }
                .ok_or_else(|| WordError::UnknownIdentifier(tok.to_owned()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.normalize(&symbols)
    }

    pub fn parse_gamma(&self, text: &str) -> Result<GammaLetter, WordError> {
        self.gamma_letter(text.trim())
            .ok_or_else(|| WordError::UnknownIdentifier(text.trim().to_owned()))
    }

    pub fn render_sequence(&self, seq: &Sequence) -> String {
        let mut out = String::new();
        for (i, &l) in seq.letters.iter().enumerate() {
            if i > 0 {
                out.push(' ');
                out.push_str(self.gamma_letter_name(seq.gammas[i - 1]));
                out.push(' ');
            }
            out.push_str(self.letter_name(l));
        }
        out
    }

    pub fn render(&self, word: &Word) -> String {
        self.render_sequence(&word.seq)
    }

    /// Every word with at most `max_letters` element letters, canonical order.
    pub fn enumerate_words(&self, max_letters: usize) -> Vec<Word> {
        let letters = self.all_letters();
        let gammas = self.all_gammas();
        let mut layer: Vec<Sequence> = letters.iter().map(|&l| Sequence::single(l)).collect();
        let mut out: Vec<Word> = Vec::new();
        let mut seen = HashSet::new();
        for m in 1..=max_letters {
            for seq in &layer {
                if seen.insert(seq.clone()) {
                    out.push(Word {
                        mode: self.mode,
                        seq: seq.clone(),
                    });
                }
            }
            if m == max_letters {
                break;
            }
            let mut next = Vec::new();
            for seq in &layer {
                let last = *seq.letters.last().expect("nonempty");
                for &g in &gammas {
                    for &y in &letters {
                        if !self.mergeable(last, g, y) {
                            let mut s = seq.clone();
                            s.gammas.push(g);
                            s.letters.push(y);
                            next.push(s);
                        }
                    }
                }
            }
            layer = next;
        }
        out.sort();
        out
    }
}
