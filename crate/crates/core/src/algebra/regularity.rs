//! α-regularity, α-inverses and complete α-regularity.
//!
//! Every search uses a single gamma `α` in both positions of `a = aαxαa`.
//! Candidates are scanned element-first, then gamma, in declaration order, so
//! the reported witness is the first one in that order.

use std::collections::BTreeSet;

use super::{AlgebraError, Elem, Gam, GammaSemigroup};

/// Per-element outcome of [`GammaSemigroup::classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementRegularity {
    pub alpha_regular_witness: Option<(Elem, Gam)>,
    pub completely_regular_witness: Option<(Elem, Gam)>,
    pub alpha_inverses: BTreeSet<(Elem, Gam)>,
}

impl ElementRegularity {
    /// Distinct `b` over all `(b, α)` α-inverse pairs.
    pub fn inverse_elements(&self) -> BTreeSet<Elem> {
        self.alpha_inverses.iter().map(|&(b, _)| b).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub elements: Vec<ElementRegularity>,
    pub is_alpha_regular: bool,
    pub is_gamma_inverse: bool,
    pub is_completely_alpha_regular: bool,
}

impl RegularityReport {
    /// First element without an α-regularity witness.
    pub fn first_non_regular(&self) -> Option<Elem> {
        self.elements
            .iter()
            .position(|r| r.alpha_regular_witness.is_none())
            .map(Elem)
    }

    /// First element without a complete α-regularity witness.
    pub fn first_not_completely_regular(&self) -> Option<Elem> {
        self.elements
            .iter()
            .position(|r| r.completely_regular_witness.is_none())
            .map(Elem)
    }

    /// First element whose α-inverse element set is not a singleton.
    pub fn first_without_unique_inverse(&self) -> Option<Elem> {
        self.elements
            .iter()
            .position(|r| r.inverse_elements().len() != 1)
            .map(Elem)
    }

    pub fn render(&self, s: &GammaSemigroup) -> String {
        let mut out = String::new();
        let flag = |b: bool| if b { "yes" } else { "no" };
        out.push_str(&format!("semigroup {}\n", s.name()));
        out.push_str(&format!("alpha-regular: {}\n", flag(self.is_alpha_regular)));
        out.push_str(&format!("gamma-inverse: {}\n", flag(self.is_gamma_inverse)));
        out.push_str(&format!(
            "completely alpha-regular: {}\n",
            flag(self.is_completely_alpha_regular)
        ));
        let pair = |w: Option<(Elem, Gam)>| match w {
            Some((x, g)) => format!("x={} alpha={}", s.element_name(x), s.gamma_name(g)),
            None => "none".to_owned(),
        };
        for (a, rec) in s.elements().zip(&self.elements) {
            let inverses: Vec<String> = rec
                .alpha_inverses
                .iter()
                .map(|&(b, g)| format!("({},{})", s.element_name(b), s.gamma_name(g)))
                .collect();
            out.push_str(&format!(
                "element {}: regular [{}] complete [{}] inverses {{{}}}\n",
                s.element_name(a),
                pair(rec.alpha_regular_witness),
                pair(rec.completely_regular_witness),
                inverses.join(" ")
            ));
        }
        out
    }
}

impl GammaSemigroup {
    fn candidates(&self) -> impl Iterator<Item = (Elem, Gam)> + '_ {
        self.elements()
            .flat_map(move |x| self.gammas().map(move |g| (x, g)))
    }

    #[inline]
    fn sandwich(&self, a: Elem, alpha: Gam, x: Elem) -> Elem {
        self.op(self.op(a, alpha, x), alpha, a)
    }

    /// First `(x, α)` with `a = aαxαa`.
    pub fn alpha_regular_witness(&self, a: Elem) -> Option<(Elem, Gam)> {
        self.candidates()
            .find(|&(x, alpha)| self.sandwich(a, alpha, x) == a)
    }

    /// All `(b, α)` with `a = aαbαa` and `b = bαaαb`.
    pub fn alpha_inverses(&self, a: Elem) -> BTreeSet<(Elem, Gam)> {
        self.candidates()
            .filter(|&(b, alpha)| {
                self.sandwich(a, alpha, b) == a && self.sandwich(b, alpha, a) == b
            })
            .collect()
    }

    /// First `(x, α)` with `a = aαxαa` and `aαx = xαa`.
    pub fn completely_alpha_regular_witness(&self, a: Elem) -> Option<(Elem, Gam)> {
        self.candidates().find(|&(x, alpha)| {
            self.sandwich(a, alpha, x) == a && self.op(a, alpha, x) == self.op(x, alpha, a)
        })
    }

    pub fn classify(&self) -> Result<RegularityReport, AlgebraError> {
        self.check_associativity()
            .map_err(AlgebraError::NotAssociative)?;
        let elements: Vec<ElementRegularity> = self
            .elements()
            .map(|a| ElementRegularity {
                alpha_regular_witness: self.alpha_regular_witness(a),
                completely_regular_witness: self.completely_alpha_regular_witness(a),
                alpha_inverses: self.alpha_inverses(a),
            })
            .collect();
        let is_alpha_regular = elements.iter().all(|r| r.alpha_regular_witness.is_some());
        let is_completely_alpha_regular = elements
            .iter()
            .all(|r| r.completely_regular_witness.is_some());
        let is_gamma_inverse =
            is_alpha_regular && elements.iter().all(|r| r.inverse_elements().len() == 1);
        Ok(RegularityReport {
            elements,
            is_alpha_regular,
            is_gamma_inverse,
            is_completely_alpha_regular,
        })
    }
}
