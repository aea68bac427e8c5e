//! The mediating map out of `Δ_U` induced by a commuting square
//! `g₁∘f₁ = g₂∘f₂` into a Γ-semigroup `V`.

use std::sync::Arc;

use super::{AmalgamError, Part, WordSearch};
use crate::words::{GammaLetter, Letter, Word, WordError};
use crate::{Elem, Gam, GammaHomomorphism, GammaSemigroup, Mode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MediatorReport {
    /// First `R` pair whose sides have different images, if any.
    pub bad_relation: Option<(Letter, Letter)>,
    /// First `(p, s)` with `δ(μ_p(s)) ≠ g_p′(s)`.
    pub bad_element: Option<(Part, Elem)>,
    /// First sampled `(a, γ, b)` with `δ(aγb) ≠ δ(a) γ δ(b)`.
    pub bad_product: Option<(Word, GammaLetter, Word)>,
    /// Number of products sampled for the last check.
    pub products_checked: usize,
}

impl MediatorReport {
    pub fn relations_respected(&self) -> bool {
        self.bad_relation.is_none()
    }

    pub fn diagram_commutes(&self) -> bool {
        self.bad_element.is_none()
    }

    pub fn products_respected(&self) -> bool {
        self.bad_product.is_none()
    }

    pub fn all_pass(&self) -> bool {
        self.relations_respected() && self.diagram_commutes() && self.products_respected()
    }
}

/// `δ` for fixed `V` and `g₁, g₂`, after the preconditions have been checked.
pub(crate) struct Mediator<'a> {
    search: &'a WordSearch,
    target: Arc<GammaSemigroup>,
    maps: [GammaHomomorphism; 2],
}

impl Mediator<'_> {
    fn gamma_image(&self, g: GammaLetter) -> Gam {
        match g.pointer {
            None => g.gamma,
            Some(p) => self.maps[p].apply_gamma(g.gamma),
        }
    }

    pub(crate) fn delta(&self, w: &Word) -> Result<Elem, WordError> {
        let product = self.search.product();
        match product.mode() {
            Mode::SameGamma => product.fold(w, &self.target, &self.maps),
            Mode::DisjointFamilies => product.fold_with_gamma_maps(w, &self.target, &self.maps),
        }
    }
}

impl WordSearch {
    fn mediator(
        &self,
        target: Arc<GammaSemigroup>,
        maps: [GammaHomomorphism; 2],
    ) -> Result<Mediator<'_>, AmalgamError> {
        let a = self.amalgam();
        for p in Part::BOTH {
            let g = &maps[p.index()];
            if **g.source() != **a.part(p) || **g.target() != *target {
                return Err(AmalgamError::MediatorEndpoints(p));
            }
        }
        let core = a.core();
        let [f1, f2] = [a.map(Part::First), a.map(Part::Second)];
        let failing: Vec<Elem> = core
            .elements()
            .filter(|&u| maps[0].apply(f1.apply(u)) != maps[1].apply(f2.apply(u)))
            .collect();
        if !failing.is_empty() {
            return Err(AmalgamError::CommutingSquareFails { failing });
        }
        let failing: Vec<Gam> = core
            .gammas()
            .filter(|&g| {
                maps[0].apply_gamma(f1.apply_gamma(g)) != maps[1].apply_gamma(f2.apply_gamma(g))
            })
            .collect();
        if !failing.is_empty() {
            return Err(AmalgamError::CommutingGammaFails { failing });
        }
        for p in Part::BOTH {
            maps[p.index()]
                .verify()
                .map_err(|violation| AmalgamError::NotAHomomorphism { part: p, violation })?;
        }
        if a.mode() == Mode::SameGamma {
            if let Some(p) = Part::BOTH
                .into_iter()
                .find(|p| !maps[p.index()].gamma_map_is_identity())
            {
                return Err(WordError::GammaMismatch(format!(
                    "mediating map for {p} must fix the shared gammas"
                ))
                .into());
            }
        }
        Ok(Mediator {
            search: self,
            target,
            maps,
        })
    }

    /// `δ(w)` for the mediator determined by `target` and `maps`.
    pub fn mediate(
        &self,
        target: Arc<GammaSemigroup>,
        maps: [GammaHomomorphism; 2],
        w: &Word,
    ) -> Result<Elem, AmalgamError> {
        Ok(self.mediator(target, maps)?.delta(w)?)
    }

    /// Checks that `δ = fold(·, V, {g₁, g₂})` is well defined on `R`, satisfies
    /// `δ∘μ_p = g_p′`, and respects products of words with at most two
    /// letters.
    pub fn pushout_mediator(
        &self,
        target: Arc<GammaSemigroup>,
        maps: [GammaHomomorphism; 2],
    ) -> Result<MediatorReport, AmalgamError> {
        let m = self.mediator(target, maps)?;
        let product = self.product();

        let bad_relation = self
            .relations()
            .pairs
            .iter()
            .copied()
            .find(|&(a, b)| m.maps[0].apply(a.element) != m.maps[1].apply(b.element));

        let mut bad_element = None;
        'outer: for p in Part::BOTH {
            for s in self.amalgam().part(p).elements() {
                if m.delta(&self.mu(p, s))? != m.maps[p.index()].apply(s) {
                    bad_element = Some((p, s));
                    break 'outer;
                }
            }
        }

        let words = product.enumerate_words(2);
        let gammas = product.all_gammas();
        let values = words
            .iter()
            .map(|w| m.delta(w))
            .collect::<Result<Vec<_>, _>>()?;
        let mut bad_product = None;
        let mut products_checked = 0;
        'products: for (a, &da) in words.iter().zip(&values) {
            for &g in &gammas {
                for (b, &db) in words.iter().zip(&values) {
                    products_checked += 1;
                    let lhs = m.delta(&product.multiply(a, g, b)?)?;
                    if lhs != m.target.op(da, m.gamma_image(g), db) {
                        bad_product = Some((a.clone(), g, b.clone()));
                        break 'products;
                    }
                }
            }
        }

        Ok(MediatorReport {
            bad_relation,
            bad_element,
            bad_product,
            products_checked,
        })
    }
}
