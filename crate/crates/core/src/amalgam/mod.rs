//! Γ-semigroup amalgams `[U; S₁, S₂; f₁, f₂]` and their amalgamated free
//! product, explored by bounded search.
//!
//! The free product `Δ_U` is never built. Instead [`WordSearch`] explores, up
//! to a length bound and a state budget, the words reachable from a start
//! word by moves that preserve the class under the congruence generated by
//! the relation set `R`. Equalities it finds are proofs; failures to find one
//! prove nothing.

mod necessary;
mod pushout;
mod search;

pub mod examples;


use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AssociativityViolation, HomViolation};
use crate::words::{FreeProduct, GammaLetter, Letter, WordError};
use crate::{Elem, Gam, GammaHomomorphism, GammaSemigroup, Mode};

pub use necessary::{decide, NecessaryVerdict, NotApplicableReason};
pub use pushout::MediatorReport;
pub use search::{
    Chain, Collision, EmbeddingReport, EmbeddingVerdict, EqualityVerdict, Intersection, Move,
    ReplayError, Resolution, SearchOptions, Step, WordSearch,
};

/// One of the two parts of an amalgam. Its word-letter pointer is
/// [`Part::index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    First,
    Second,
}

impl Part {
    pub const BOTH: [Part; 2] = [Part::First, Part::Second];

    pub fn index(self) -> usize {
        match self {
            Part::First => 0,
            Part::Second => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Part> {
        match i {
            0 => Some(Part::First),
            1 => Some(Part::Second),
            _ => None,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.index() + 1)
    }
}

/// A broken amalgam invariant. [`GammaAmalgam::validate`] lists all of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmalgamViolation {
    #[error("element name `{0}` is used by more than one of the core and parts")]
    NameClash(String),
    #[error("map for {0} does not go from the core to that part")]
    WrongEndpoints(Part),
    #[error("map into {0} is not a homomorphism at {1}")]
    NotAHomomorphism(Part, HomViolation),
    #[error("map into {0} is not a monomorphism")]
    NotMonomorphism(Part),
    #[error("{0}")]
    GammaMismatch(String),
    #[error("gamma name `{0}` is used by both parts")]
    GammaClash(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmalgamError {
    #[error("invalid amalgam: {}", join(.0))]
    Invalid(Vec<AmalgamViolation>),
    #[error("`{table}` is not associative at {violation}")]
    NotAssociative {
        table: String,
        violation: AssociativityViolation,
    },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("g1∘f1 and g2∘f2 differ on core elements {}", join(.failing))]
    CommutingSquareFails { failing: Vec<Elem> },
    #[error("g1″∘f1″ and g2″∘f2″ differ on core gammas {}", join(.failing))]
    CommutingGammaFails { failing: Vec<Gam> },
    #[error("mediating map for {part} is not a homomorphism at {violation}")]
    NotAHomomorphism { part: Part, violation: HomViolation },
    #[error("mediating map for {0} must go from that part into the mediator target")]
    MediatorEndpoints(Part),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// A core `U`, two parts and the maps `f_i: U → S_i`.
///
/// Construction checks nothing; call [`GammaAmalgam::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaAmalgam {
    name: String,
    core: Arc<GammaSemigroup>,
    parts: [Arc<GammaSemigroup>; 2],
    maps: [GammaHomomorphism; 2],
    mode: Mode,
}

/// The generating pairs of `R`, as letters of `S₁` and `S₂`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationSet {
    pub pairs: BTreeSet<(Letter, Letter)>,
    /// `(f₁″(γ₀), f₂″(γ₀))` in disjoint mode; empty otherwise. Recorded for
    /// reporting only: the search never rewrites gamma letters.
    pub gamma_pairs: BTreeSet<(GammaLetter, GammaLetter)>,
}

impl GammaAmalgam {
    pub fn new(
        name: &str,
        core: Arc<GammaSemigroup>,
        parts: [Arc<GammaSemigroup>; 2],
        maps: [GammaHomomorphism; 2],
        mode: Mode,
    ) -> Self {
        Self {
            name: name.to_owned(),
            core,
            parts,
            maps,
            mode,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn core(&self) -> &Arc<GammaSemigroup> {
        &self.core
    }

    pub fn part(&self, p: Part) -> &Arc<GammaSemigroup> {
        &self.parts[p.index()]
    }

    pub fn map(&self, p: Part) -> &GammaHomomorphism {
        &self.maps[p.index()]
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The free product `S₁ * S₂` in the amalgam's mode.
    pub fn free_product(&self) -> Result<FreeProduct, WordError> {
        FreeProduct::new(self.parts.to_vec(), self.mode)
    }

    pub fn validate(&self) -> Result<(), Vec<AmalgamViolation>> {
        let mut out = Vec::new();

        let mut owners: BTreeMap<&str, usize> = BTreeMap::new();
        for s in [&self.core, &self.parts[0], &self.parts[1]] {
            for name in s.element_names() {
                *owners.entry(name.as_str()).or_default() += 1;
            }
        }
        out.extend(
            owners
                .into_iter()
                .filter(|(_, n)| *n > 1)
                .map(|(name, _)| AmalgamViolation::NameClash(name.to_owned())),
        );

        for p in Part::BOTH {
            let f = self.map(p);
            if **f.source() != *self.core || **f.target() != **self.part(p) {
                out.push(AmalgamViolation::WrongEndpoints(p));
                continue;
            }
            match f.verify() {
                Err(v) => out.push(AmalgamViolation::NotAHomomorphism(p, v)),
                Ok(()) => {
                    if !f.is_monomorphism().unwrap_or(false) {
                        out.push(AmalgamViolation::NotMonomorphism(p));
                    }
                }
            }
        }

        match self.mode {
            Mode::SameGamma => {
                for p in Part::BOTH {
                    if self.part(p).gamma_names() != self.core.gamma_names() {
                        out.push(AmalgamViolation::GammaMismatch(format!(
                            "{p} `{}` does not share the gamma list of the core `{}`",
                            self.part(p).name(),
                            self.core.name()
                        )));
                    } else if !self.map(p).gamma_map_is_identity() {
                        out.push(AmalgamViolation::GammaMismatch(format!(
                            "gamma map into {p} is not the identity"
                        )));
                    }
                }
            }
            Mode::DisjointFamilies => {
                let first: BTreeSet<&String> = self.parts[0].gamma_names().iter().collect();
                out.extend(
                    self.parts[1]
                        .gamma_names()
                        .iter()
                        .filter(|g| first.contains(g))
                        .map(|g| AmalgamViolation::GammaClash(g.clone())),
                );
            }
        }

        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// `R = {(f₁′(uγ₀u′), f₂′(uγ₀u′))}`, plus `(f₁′(u), f₂′(u))` for every
    /// `u` when `identify_elements` is set.
    pub fn relation_generators(&self, identify_elements: bool) -> RelationSet {
        let u = &self.core;
        let pair = |p: Elem| {
            (
                Letter::new(0, self.maps[0].apply(p)),
                Letter::new(1, self.maps[1].apply(p)),
            )
        };
        let mut pairs = BTreeSet::new();
        for a in u.elements() {
            for g in u.gammas() {
                for b in u.elements() {
                    pairs.insert(pair(u.op(a, g, b)));
                }
            }
        }
        if identify_elements {
            pairs.extend(u.elements().map(pair));
        }
        let gamma_pairs = match self.mode {
            Mode::SameGamma => BTreeSet::new(),
            Mode::DisjointFamilies => u
                .gammas()
                .map(|g| {
                    (
                        GammaLetter::owned(0, self.maps[0].apply_gamma(g)),
                        GammaLetter::owned(1, self.maps[1].apply_gamma(g)),
                    )
                })
                .collect(),
        };
        RelationSet { pairs, gamma_pairs }
    }

    pub(crate) fn check_tables(&self) -> Result<(), AmalgamError> {
        for s in [&self.core, &self.parts[0], &self.parts[1]] {
            s.check_associativity()
                .map_err(|violation| AmalgamError::NotAssociative {
                    table: s.name().to_owned(),
                    violation,
                })?;
        }
        Ok(())
    }
}
