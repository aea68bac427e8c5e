//! Bounded breadth-first search over letter sequences of `S₁ * S₂`.
//!
//! A state is a raw alternating sequence with at most `bound` letters; its
//! value is its left-to-right product in the free product. Every move keeps
//! the value's class under `ρ`:
//!
//! * substituting one side of an `R` pair for the other (`ρ` is compatible);
//! * un-merging a letter `z` into a factor `x γ y` with `xγy = z`;
//! * merging a factor that satisfies the merge condition.
//!
//! The start word's class is reached as soon as some state evaluates to it.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::rc::Rc;

use thiserror::Error;

use super::{AmalgamError, GammaAmalgam, Part, RelationSet};
use crate::words::{FreeProduct, GammaLetter, Letter, Sequence, Word, WordError};
use crate::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of element letters in any visited sequence.
    pub bound: usize,
    /// Maximum number of visited sequences per exploration.
    pub budget: usize,
    /// Also identify `f₁′(u)` with `f₂′(u)` for every core element.
    pub identify_elements: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            bound: 6,
            budget: 200_000,
            identify_elements: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Replace the letter at `position` using an `R` pair, in either direction.
    Substitute {
        position: usize,
        from: Letter,
        to: Letter,
    },
    /// Replace the letter at `position` by `left gamma right`.
    Unmerge {
        position: usize,
        left: Letter,
        gamma: GammaLetter,
        right: Letter,
    },
    /// Multiply out the factor starting at letter `position`.
    Merge { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub mv: Move,
    pub after: Sequence,
}

/// A rewrite chain from `start`. The last sequence (or `start`, if there are
/// no steps) normalizes to the target word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub start: Sequence,
    pub steps: Vec<Step>,
}

impl Chain {
    pub fn end(&self) -> &Sequence {
        self.steps.last().map_or(&self.start, |s| &s.after)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityVerdict {
    Equal(Chain),
    InconclusiveWithinBound {
        bound: usize,
        visited: usize,
        truncated: bool,
    },
}

impl EqualityVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqualityVerdict::Equal(_))
    }

    pub fn chain(&self) -> Option<&Chain> {
        match self {
            EqualityVerdict::Equal(c) => Some(c),
            EqualityVerdict::InconclusiveWithinBound { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("chain does not start at the first word")]
    StartMismatch,
    #[error("step {index} is not a legal move: {reason}")]
    IllegalStep { index: usize, reason: &'static str },
    #[error("step {index} does not produce the recorded sequence")]
    WrongResult { index: usize },
    #[error("chain does not end at the second word")]
    EndMismatch,
}

/// `s ≠ s′` in one part, proven equal in `Δ_U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub part: Part,
    pub s: Elem,
    pub s_prime: Elem,
    pub chain: Chain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    /// `(f₁′(u))` is proven equal to `(s₁)`; the chain starts at `(f₁′(u))`.
    Resolved {
        u: Elem,
        chain: Chain,
    },
    Unresolved {
        bound: usize,
    },
}

/// `(s₁) = (s₂)` proven in `Δ_U`, with an attempt to place it in `μ(U)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intersection {
    pub s1: Elem,
    pub s2: Elem,
    pub chain: Chain,
    pub resolution: Resolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingVerdict {
    ViolationFound,
    ConsistentWithinBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub bound: usize,
    pub budget: usize,
    pub collisions: Vec<Collision>,
    pub intersections: Vec<Intersection>,
    /// Some exploration hit the budget before exhausting its bound.
    pub truncated: bool,
    pub verdict: EmbeddingVerdict,
}

impl EmbeddingReport {
    /// No collision was found in part `p` within the bound.
    pub fn injective_within_bound(&self, p: Part) -> bool {
        self.collisions.iter().all(|c| c.part != p)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &Intersection> {
        self.intersections
            .iter()
            .filter(|i| matches!(i.resolution, Resolution::Unresolved { .. }))
    }
}

struct Node {
    seq: Sequence,
    parent: Option<(usize, Move)>,
}

/// Everything reachable from one start sequence.
struct Exploration {
    nodes: Vec<Node>,
    /// First node reaching each normal form.
    reached: HashMap<Word, usize>,
    truncated: bool,
}

/// Bounded word search for one amalgam.
///
/// Explorations are cached per start sequence, so repeated queries from the
/// same word cost one search.
pub struct WordSearch {
    amalgam: GammaAmalgam,
    product: FreeProduct,
    relations: RelationSet,
    options: SearchOptions,
    substitutes: HashMap<Letter, Vec<Letter>>,
    factorizations: HashMap<Letter, Vec<(Letter, GammaLetter, Letter)>>,
    cache: RefCell<HashMap<Sequence, Rc<Exploration>>>,
}

impl fmt::Debug for WordSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WordSearch")
            .field("amalgam", &self.amalgam.name())
            .field("options", &self.options)
            .finish_non_exhaustive()
    }
}

impl WordSearch {
    /// Validates the amalgam and checks all three tables for associativity,
    /// which the soundness of every move relies on.
    pub fn new(amalgam: &GammaAmalgam, options: SearchOptions) -> Result<Self, AmalgamError> {
        amalgam.validate().map_err(AmalgamError::Invalid)?;
        amalgam.check_tables()?;
        let product = amalgam.free_product()?;
        let relations = amalgam.relation_generators(options.identify_elements);

        let mut substitutes: HashMap<Letter, Vec<Letter>> = HashMap::new();
        for &(a, b) in &relations.pairs {
            substitutes.entry(a).or_default().push(b);
            substitutes.entry(b).or_default().push(a);
        }

        let gammas = product.all_gammas();
        let mut factorizations: HashMap<Letter, Vec<_>> = HashMap::new();
        for p in Part::BOTH {
            let s = amalgam.part(p);
            for x in s.elements() {
                for &g in &gammas {
                    for y in s.elements() {
                        let (x, y) = (Letter::new(p.index(), x), Letter::new(p.index(), y));
                        if product.mergeable(x, g, y) {
                            let z = product.merge(x, g, y);
                            factorizations.entry(z).or_default().push((x, g, y));
                        }
                    }
                }
            }
        }

        Ok(Self {
            amalgam: amalgam.clone(),
            product,
            relations,
            options,
            substitutes,
            factorizations,
            cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn amalgam(&self) -> &GammaAmalgam {
        &self.amalgam
    }

    pub fn product(&self) -> &FreeProduct {
        &self.product
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn options(&self) -> SearchOptions {
        self.options
    }

    /// The one-letter word `(s)` for `s ∈ S_p`.
    pub fn letter_word(&self, p: Part, s: Elem) -> Word {
        self.product.embed_letter(Letter::new(p.index(), s))
    }

    fn check_word(&self, w: &Word) -> Result<(), AmalgamError> {
        if w.mode() != self.product.mode() {
            return Err(WordError::ModeMismatch.into());
        }
        if !w.letters().iter().all(|&l| self.product.is_valid_letter(l)) {
            return Err(WordError::InvalidLetter.into());
        }
        if !w.gammas().iter().all(|&g| self.product.is_valid_gamma(g)) {
            return Err(WordError::InvalidGamma(self.product.mode()).into());
        }
        Ok(())
    }

    fn successors(&self, seq: &Sequence, mut visit: impl FnMut(Move, Sequence)) {
        let letters = seq.letters();
        for (i, &x) in letters.iter().enumerate() {
            if let Some(alts) = self.substitutes.get(&x) {
                for &to in alts {
                    let mv = Move::Substitute {
                        position: i,
                        from: x,
                        to,
                    };
                    visit(mv, seq.with_letter(i, to));
                }
            }
        }
        if letters.len() < self.options.bound {
            for (i, &z) in letters.iter().enumerate() {
                for &(left, gamma, right) in self.factorizations.get(&z).into_iter().flatten() {
                    let mv = Move::Unmerge {
                        position: i,
                        left,
                        gamma,
                        right,
                    };
                    visit(mv, seq.split_at(i, left, gamma, right));
                }
            }
        }
        for (i, &g) in seq.gammas().iter().enumerate() {
            let (x, y) = (letters[i], letters[i + 1]);
            if self.product.mergeable(x, g, y) {
                let merged = self.product.merge(x, g, y);
                visit(Move::Merge { position: i }, seq.join_at(i, merged));
            }
        }
    }

    fn explore(&self, start: &Sequence) -> Rc<Exploration> {
        if let Some(e) = self.cache.borrow().get(start) {
            return Rc::clone(e);
        }
        let mut nodes = vec![Node {
            seq: start.clone(),
            parent: None,
        }];
        let mut reached = HashMap::new();
        reached.insert(self.product.evaluate(start), 0);
        let mut seen: HashSet<Sequence> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([0usize]);
        let mut truncated = false;
        while let Some(ix) = queue.pop_front() {
            let current = nodes[ix].seq.clone();
            let mut fresh = Vec::new();
            self.successors(&current, |mv, next| {
                if !seen.contains(&next) {
                    fresh.push((mv, next));
                }
            });
            for (mv, next) in fresh {
                if seen.contains(&next) {
                    continue;
                }
                if nodes.len() >= self.options.budget {
                    truncated = true;
                    break;
                }
                seen.insert(next.clone());
                let id = nodes.len();
                reached.entry(self.product.evaluate(&next)).or_insert(id);
                nodes.push(Node {
                    seq: next,
                    parent: Some((ix, mv)),
                });
                queue.push_back(id);
            }
            if truncated {
                break;
            }
        }
        let e = Rc::new(Exploration {
            nodes,
            reached,
            truncated,
        });
        self.cache.borrow_mut().insert(start.clone(), Rc::clone(&e));
        e
    }

    fn chain_to(exploration: &Exploration, mut ix: usize) -> Chain {
        let mut steps = Vec::new();
        while let Some((parent, mv)) = exploration.nodes[ix].parent {
            steps.push(Step {
                mv,
                after: exploration.nodes[ix].seq.clone(),
            });
            ix = parent;
        }
        steps.reverse();
        Chain {
            start: exploration.nodes[0].seq.clone(),
            steps,
        }
    }

    /// Searches for a proof that `w1` and `w2` are equal in `Δ_U`.
    pub fn words_equal(&self, w1: &Word, w2: &Word) -> Result<EqualityVerdict, AmalgamError> {
        self.check_word(w1)?;
        self.check_word(w2)?;
        let e = self.explore(w1.as_sequence());
        Ok(match e.reached.get(w2) {
            Some(&ix) => EqualityVerdict::Equal(Self::chain_to(&e, ix)),
            None => EqualityVerdict::InconclusiveWithinBound {
                bound: self.options.bound,
                visited: e.nodes.len(),
                truncated: e.truncated,
            },
        })
    }

    /// Every normal form proven equal to `w`, in canonical order.
    pub fn class_within_bound(&self, w: &Word) -> Result<Vec<Word>, AmalgamError> {
        self.check_word(w)?;
        let mut out: Vec<Word> = self
            .explore(w.as_sequence())
            .reached
            .keys()
            .cloned()
            .collect();
        out.sort();
        Ok(out)
    }

    /// `μ_p(s)`: the least word proven equal to `(s)`.
    pub fn mu(&self, p: Part, s: Elem) -> Word {
        let e = self.explore(self.letter_word(p, s).as_sequence());
        e.reached
            .keys()
            .min()
            .cloned()
            .expect("start is always reached")
    }

    /// Checks `chain` move by move, then that it ends at `w2`.
    pub fn replay(&self, chain: &Chain, w1: &Word, w2: &Word) -> Result<(), ReplayError> {
        if &chain.start != w1.as_sequence() {
            return Err(ReplayError::StartMismatch);
        }
        let mut current = chain.start.clone();
        for (index, step) in chain.steps.iter().enumerate() {
            let next = self
                .apply(&current, step.mv)
                .map_err(|reason| ReplayError::IllegalStep { index, reason })?;
            if next != step.after {
                return Err(ReplayError::WrongResult { index });
            }
            current = next;
        }
        if self.product.evaluate(&current) != *w2 {
            return Err(ReplayError::EndMismatch);
        }
        Ok(())
    }

    fn apply(&self, seq: &Sequence, mv: Move) -> Result<Sequence, &'static str> {
        let letters = seq.letters();
        let letter_at = |i: usize| letters.get(i).copied().ok_or("position out of range");
        match mv {
            Move::Substitute { position, from, to } => {
                if letter_at(position)? != from {
                    return Err("substituted letter is not at that position");
                }
                let r = &self.relations.pairs;
                if !r.contains(&(from, to)) && !r.contains(&(to, from)) {
                    return Err("substitution is not an R pair");
                }
                Ok(seq.with_letter(position, to))
            }
            Move::Unmerge {
                position,
                left,
                gamma,
                right,
            } => {
                let z = letter_at(position)?;
                if !self.product.is_valid_letter(left)
                    || !self.product.is_valid_letter(right)
                    || !self.product.is_valid_gamma(gamma)
                {
                    return Err("unknown letter in factor");
                }
                if !self.product.mergeable(left, gamma, right)
                    || self.product.merge(left, gamma, right) != z
                {
                    return Err("factor does not multiply to the letter");
                }
                Ok(seq.split_at(position, left, gamma, right))
            }
            Move::Merge { position } => {
                let g = *seq.gammas().get(position).ok_or("position out of range")?;
                let (x, y) = (letters[position], letters[position + 1]);
                if !self.product.mergeable(x, g, y) {
                    return Err("factor cannot be merged");
                }
                Ok(seq.join_at(position, self.product.merge(x, g, y)))
            }
        }
    }

    /// Looks for proven failures of the natural embedding conditions.
    ///
    /// Collisions inside one part are violations. A proven cross-part
    /// equality that no core element explains within the bound is reported
    /// as unresolved, which is not a violation.
    pub fn check_natural_embedding(&self) -> EmbeddingReport {
        let mut collisions = Vec::new();
        let mut intersections = Vec::new();
        let mut truncated = false;

        for p in Part::BOTH {
            let s = self.amalgam.part(p);
            for a in s.elements() {
                let e = self.explore(self.letter_word(p, a).as_sequence());
                truncated |= e.truncated;
                for b in s.elements().filter(|b| *b > a) {
                    if let Some(&ix) = e.reached.get(&self.letter_word(p, b)) {
                        collisions.push(Collision {
                            part: p,
                            s: a,
                            s_prime: b,
                            chain: Self::chain_to(&e, ix),
                        });
                    }
                }
            }
        }

        let core = self.amalgam.core();
        let f1 = self.amalgam.map(Part::First);
        for s1 in self.amalgam.part(Part::First).elements() {
            let w1 = self.letter_word(Part::First, s1);
            let e = self.explore(w1.as_sequence());
            for s2 in self.amalgam.part(Part::Second).elements() {
                let Some(&ix) = e.reached.get(&self.letter_word(Part::Second, s2)) else {
                    continue;
                };
                let resolution = core
                    .elements()
                    .find_map(|u| {
                        let from = self.letter_word(Part::First, f1.apply(u));
                        let eu = self.explore(from.as_sequence());
                        eu.reached.get(&w1).map(|&k| Resolution::Resolved {
                            u,
                            chain: Self::chain_to(&eu, k),
                        })
                    })
                    .unwrap_or(Resolution::Unresolved {
                        bound: self.options.bound,
                    });
                intersections.push(Intersection {
                    s1,
                    s2,
                    chain: Self::chain_to(&e, ix),
                    resolution,
                });
            }
        }

        let verdict = if collisions.is_empty() {
            EmbeddingVerdict::ConsistentWithinBound
        } else {
            EmbeddingVerdict::ViolationFound
        };
        EmbeddingReport {
            bound: self.options.bound,
            budget: self.options.budget,
            collisions,
            intersections,
            truncated,
            verdict,
        }
    }

    pub fn render_move(&self, mv: &Move) -> String {
        let p = &self.product;
        match *mv {
            Move::Substitute { position, from, to } => format!(
                "substitute {} -> {} at {position}",
                p.letter_name(from),
                p.letter_name(to)
            ),
            Move::Unmerge {
                position,
                left,
                gamma,
                right,
            } => format!(
                "unmerge {} = {} {} {} at {position}",
                p.letter_name(p.merge(left, gamma, right)),
                p.letter_name(left),
                p.gamma_letter_name(gamma),
                p.letter_name(right)
            ),
            Move::Merge { position } => format!("merge at {position}"),
        }
    }

    /// One line per step: the move, then the sequence it produces.
    pub fn render_chain(&self, chain: &Chain) -> String {
        let mut out = format!(
            "  start: ({})\n",
            self.product.render_sequence(&chain.start)
        );
        for step in &chain.steps {
            out.push_str(&format!(
                "  {}: ({})\n",
                self.render_move(&step.mv),
                self.product.render_sequence(&step.after)
            ));
        }
        out
    }

    pub fn render_report(&self, report: &EmbeddingReport) -> String {
        let a = &self.amalgam;
        let name = |p: Part, e: Elem| a.part(p).element_name(e).to_owned();
        let mut out = String::new();
        out.push_str(&format!(
            "natural embedding (bound {}, budget {}):\n",
            report.bound, report.budget
        ));
        for p in Part::BOTH {
            let found: Vec<_> = report.collisions.iter().filter(|c| c.part == p).collect();
            if found.is_empty() {
                out.push_str(&format!("{p} injective: no collision within bound\n"));
            }
            for c in found {
                out.push_str(&format!(
                    "{p} collision: ({}) = ({})\n",
                    name(p, c.s),
                    name(p, c.s_prime)
                ));
                out.push_str(&self.render_chain(&c.chain));
            }
        }
        if report.intersections.is_empty() {
            out.push_str("intersection: no cross pair proven equal\n");
        }
        for i in &report.intersections {
            let (s1, s2) = (name(Part::First, i.s1), name(Part::Second, i.s2));
            match &i.resolution {
                Resolution::Resolved { u, .. } => out.push_str(&format!(
                    "pair ({s1},{s2}) resolved by {}\n",
                    a.core().element_name(*u)
                )),
                Resolution::Unresolved { bound } => out.push_str(&format!(
                    "pair ({s1},{s2}) unresolved within bound {bound}\n"
                )),
            }
        }
        if report.truncated {
            out.push_str("budget exhausted before the bound\n");
        }
        out.push_str(&format!(
            "verdict: {}\n",
            match report.verdict {
                EmbeddingVerdict::ViolationFound => "violation found (not embeddable)",
                EmbeddingVerdict::ConsistentWithinBound => "consistent within bound",
            }
        ));
        out
    }
}
