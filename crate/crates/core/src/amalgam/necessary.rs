//! The necessary condition for completely α-regular amalgams: if both parts
//! are completely α-regular and the amalgam embeds, the core is too.

use std::fmt;

use super::{AmalgamError, GammaAmalgam, Part};
use crate::{Elem, GammaSemigroup, Mode, RegularityReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotApplicableReason {
    PartsNotCompletelyRegular(Vec<Part>),
    /// The condition is stated for one shared gamma set.
    DistinctGammaSets,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NecessaryVerdict {
    /// Met. Says nothing about sufficiency.
    Satisfied,
    NotApplicable(NotApplicableReason),
    /// Both parts are completely α-regular and `u` has no witness in the core.
    NotEmbeddable {
        u: Elem,
    },
}

impl NecessaryVerdict {
    pub fn render(&self, core: &GammaSemigroup) -> String {
        match self {
            NecessaryVerdict::Satisfied => "satisfied".to_owned(),
            NecessaryVerdict::NotApplicable(NotApplicableReason::DistinctGammaSets) => {
                "not applicable: parts use distinct gamma sets".to_owned()
            }
            NecessaryVerdict::NotApplicable(NotApplicableReason::PartsNotCompletelyRegular(ps)) => {
                let ps: Vec<_> = ps.iter().map(Part::to_string).collect();
                format!(
                    "not applicable: {} not completely alpha-regular",
                    ps.join(", ")
                )
            }
            NecessaryVerdict::NotEmbeddable { u } => format!(
                "not embeddable: core element {} is not completely alpha-regular",
                core.element_name(*u)
            ),
        }
    }
}

impl fmt::Display for NotApplicableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotApplicableReason::DistinctGammaSets => f.write_str("distinct gamma sets"),
            NotApplicableReason::PartsNotCompletelyRegular(ps) => {
                let ps: Vec<_> = ps.iter().map(Part::to_string).collect();
                write!(f, "{} not completely alpha-regular", ps.join(", "))
            }
        }
    }
}

/// The branch table, on classification results alone.
pub fn decide(
    mode: Mode,
    core: &RegularityReport,
    parts: [&RegularityReport; 2],
) -> NecessaryVerdict {
    if mode == Mode::DisjointFamilies {
        return NecessaryVerdict::NotApplicable(NotApplicableReason::DistinctGammaSets);
    }
    let failing: Vec<Part> = Part::BOTH
        .into_iter()
        .filter(|p| !parts[p.index()].is_completely_alpha_regular)
        .collect();
    if !failing.is_empty() {
        return NecessaryVerdict::NotApplicable(NotApplicableReason::PartsNotCompletelyRegular(
            failing,
        ));
    }
    match core.first_not_completely_regular() {
        None => NecessaryVerdict::Satisfied,
        Some(u) => NecessaryVerdict::NotEmbeddable { u },
    }
}

impl GammaAmalgam {
    /// Classifies the core and both parts, then applies [`decide`].
    pub fn necessary_condition(&self) -> Result<NecessaryVerdict, AmalgamError> {
        self.check_tables()?;
        let classify = |s: &GammaSemigroup| s.classify().expect("associativity checked");
        let core = classify(self.core());
        let first = classify(self.part(Part::First));
        let second = classify(self.part(Part::Second));
        Ok(decide(self.mode(), &core, [&first, &second]))
    }
}
