use std::fmt;
use std::sync::Arc;

use super::{AlgebraError, Elem, Gam, GammaSemigroup};

/// A pair of maps `(f′, f″)` from one Γ-semigroup into another.
///
/// Only totality is enforced at construction. The compatibility law
/// `f′(aγb) = f′(a) f″(γ) f′(b)` is checked by [`GammaHomomorphism::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaHomomorphism {
    name: String,
    source: Arc<GammaSemigroup>,
    target: Arc<GammaSemigroup>,
    carrier: Vec<Elem>,
    gamma: Vec<Gam>,
}

/// First source triple `(a, γ, b)` breaking compatibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomViolation {
    pub a: Elem,
    pub gamma: Gam,
    pub b: Elem,
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.gamma, self.b)
    }
}

impl HomViolation {
    pub fn render(&self, hom: &GammaHomomorphism) -> String {
        let s = hom.source();
        let t = hom.target();
        let lhs = hom.apply(s.op(self.a, self.gamma, self.b));
        let rhs = t.op(
            hom.apply(self.a),
            hom.apply_gamma(self.gamma),
            hom.apply(self.b),
        );
        format!(
            "f({a} {g} {b}) = {l} but f({a}) {h} f({b}) = {r}",
            a = s.element_name(self.a),
            g = s.gamma_name(self.gamma),
            b = s.element_name(self.b),
            h = t.gamma_name(hom.apply_gamma(self.gamma)),
            l = t.element_name(lhs),
            r = t.element_name(rhs),
        )
    }
}

impl GammaHomomorphism {
    pub fn new(
        name: &str,
        source: Arc<GammaSemigroup>,
        target: Arc<GammaSemigroup>,
        carrier: Vec<Elem>,
        gamma: Vec<Gam>,
    ) -> Result<Self, AlgebraError> {
        if carrier.len() != source.size() {
            return Err(AlgebraError::MapNotTotal {
                map: name.to_owned(),
                what: "carrier",
            });
        }
        if gamma.len() != source.gamma_count() {
            return Err(AlgebraError::MapNotTotal {
                map: name.to_owned(),
                what: "gamma",
            });
        }
        if let Some(e) = carrier.iter().find(|e| !target.contains(**e)) {
            return Err(AlgebraError::UnknownIdentifier(e.to_string()));
        }
        if let Some(g) = gamma.iter().find(|g| g.0 >= target.gamma_count()) {
            return Err(AlgebraError::UnknownIdentifier(g.to_string()));
        }
        Ok(Self {
            name: name.to_owned(),
            source,
            target,
            carrier,
            gamma,
        })
    }

    /// Builds from name pairs. Gammas missing from `gamma_pairs` map to the
    /// target gamma with the same name, when there is one.
    pub fn from_names(
        name: &str,
        source: Arc<GammaSemigroup>,
        target: Arc<GammaSemigroup>,
        carrier_pairs: &[(&str, &str)],
        gamma_pairs: &[(&str, &str)],
    ) -> Result<Self, AlgebraError> {
        let mut carrier = vec![None; source.size()];
        for (x, y) in carrier_pairs {
            let x = source
                .element(x)
                .ok_or_else(|| AlgebraError::UnknownIdentifier((*x).to_owned()))?;
            let y = target
                .element(y)
                .ok_or_else(|| AlgebraError::UnknownIdentifier((*y).to_owned()))?;
            carrier[x.0] = Some(y);
        }
        let mut gamma: Vec<Option<Gam>> = source
            .gamma_names()
            .iter()
            .map(|g| target.gamma(g))
            .collect();
        for (x, y) in gamma_pairs {
            let x = source
                .gamma(x)
                .ok_or_else(|| AlgebraError::UnknownIdentifier((*x).to_owned()))?;
            let y = target
                .gamma(y)
                .ok_or_else(|| AlgebraError::UnknownIdentifier((*y).to_owned()))?;
            gamma[x.0] = Some(y);
        }
        let carrier = collect_total(name, "carrier", carrier)?;
        let gamma = collect_total(name, "gamma", gamma)?;
        Self::new(name, source, target, carrier, gamma)
    }

    pub fn identity(s: Arc<GammaSemigroup>) -> Self {
        let carrier = s.elements().collect();
        let gamma = s.gammas().collect();
        Self {
            name: format!("id_{}", s.name()),
            source: s.clone(),
            target: s,
            carrier,
            gamma,
        }
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &GammaHomomorphism) -> Result<Self, AlgebraError> {
        if *self.target != *then.source {
            return Err(AlgebraError::NotComposable {
                first: self.name.clone(),
                second: then.name.clone(),
            });
        }
        Ok(Self {
            name: format!("{}.{}", then.name, self.name),
            source: self.source.clone(),
            target: then.target.clone(),
            carrier: self.carrier.iter().map(|&e| then.apply(e)).collect(),
            gamma: self.gamma.iter().map(|&g| then.apply_gamma(g)).collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<GammaSemigroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GammaSemigroup> {
        &self.target
    }

    pub fn carrier_map(&self) -> &[Elem] {
        &self.carrier
    }

    pub fn gamma_map(&self) -> &[Gam] {
        &self.gamma
    }

    #[inline]
    pub fn apply(&self, e: Elem) -> Elem {
        self.carrier[e.0]
    }

    #[inline]
    pub fn apply_gamma(&self, g: Gam) -> Gam {
        self.gamma[g.0]
    }

    /// Whether `f″` sends every gamma to the target gamma of the same name.
    pub fn gamma_map_is_identity(&self) -> bool {
        self.source
            .gammas()
            .all(|g| self.target.gamma_name(self.apply_gamma(g)) == self.source.gamma_name(g))
    }

    /// Exhaustive check of `f′(aγb) = f′(a) f″(γ) f′(b)`.
    pub fn verify(&self) -> Result<(), HomViolation> {
        let s = &self.source;
        let t = &self.target;
        for a in s.elements() {
            for gamma in s.gammas() {
                for b in s.elements() {
                    let lhs = self.apply(s.op(a, gamma, b));
                    let rhs = t.op(self.apply(a), self.apply_gamma(gamma), self.apply(b));
                    if lhs != rhs {
                        return Err(HomViolation { a, gamma, b });
                    }
                }
            }
        }
        Ok(())
    }

    /// Both maps injective. Requires a verified homomorphism.
    pub fn is_monomorphism(&self) -> Result<bool, AlgebraError> {
        self.verify().map_err(AlgebraError::NotAHomomorphism)?;
        Ok(is_injective(&self.carrier, self.target.size())
            && is_injective(&self.gamma, self.target.gamma_count()))
    }

    /// Every left identity of the source lands on a left identity of the target.
    /// Not part of [`GammaHomomorphism::verify`].
    pub fn preserves_left_identity(&self) -> bool {
        let target_ids = self.target.left_identities();
        self.source
            .left_identities()
            .into_iter()
            .all(|e| target_ids.contains(&self.apply(e)))
    }

    /// Sorted, deduplicated `f′(S)`.
    pub fn image(&self) -> Vec<Elem> {
        let mut img = self.carrier.clone();
        img.sort_unstable();
        img.dedup();
        img
    }
}

trait Index {
    fn index(&self) -> usize;
}

impl Index for Elem {
    fn index(&self) -> usize {
        self.0
    }
}

impl Index for Gam {
    fn index(&self) -> usize {
        self.0
    }
}

fn is_injective<T: Index>(map: &[T], codomain: usize) -> bool {
    let mut seen = vec![false; codomain];
    map.iter()
        .all(|x| !std::mem::replace(&mut seen[x.index()], true))
}

fn collect_total<T>(
    name: &str,
    what: &'static str,
    items: Vec<Option<T>>,
) -> Result<Vec<T>, AlgebraError> {
    items
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| AlgebraError::MapNotTotal {
            map: name.to_owned(),
            what,
        })
}
