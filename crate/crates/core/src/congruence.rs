//! Congruences on finite Γ-semigroups: closure from generating pairs,
//! quotients, kernels and the first isomorphism theorem.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, AssociativityViolation, HomViolation};
use crate::union_find::UnionFind;
use crate::{Elem, Gam, GammaHomomorphism, GammaSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("malformed pair list: {0}")]
    MalformedPairList(String),
    #[error("subject is not associative at {0}")]
    NotAssociative(AssociativityViolation),
    #[error("not compatible: {0}")]
    NotCompatible(CompatibilityViolation),
    #[error("not a homomorphism at {0}")]
    NotAHomomorphism(HomViolation),
    #[error("congruence belongs to `{found}`, expected `{expected}`")]
    SubjectMismatch { expected: String, found: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which translation a compatibility failure was found under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `xγz` against `yγz`.
    Right,
    /// `zγx` against `zγy`.
    Left,
}

/// `x ρ y` holds but the translates by `γ` and `z` land in different classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompatibilityViolation {
    pub x: Elem,
    pub y: Elem,
    pub gamma: Gam,
    pub z: Elem,
    pub side: Side,
}

impl fmt::Display for CompatibilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Right => "right",
            Side::Left => "left",
        };
        write!(
            f,
            "x={} y={} gamma={} z={} ({side})",
            self.x, self.y, self.gamma, self.z
        )
    }
}

impl CompatibilityViolation {
    pub fn render(&self, s: &GammaSemigroup) -> String {
        let (x, y, g, z) = (
            s.element_name(self.x),
            s.element_name(self.y),
            s.gamma_name(self.gamma),
            s.element_name(self.z),
        );
        match self.side {
            Side::Right => format!("{x} ~ {y} but {x} {g} {z} !~ {y} {g} {z}"),
            Side::Left => format!("{x} ~ {y} but {z} {g} {x} !~ {z} {g} {y}"),
        }
    }
}

/// An equivalence on the carrier of `subject`, stored as the minimum-index
/// representative of each element's class.
///
/// Only equivalence is guaranteed by construction. Values built by
/// [`generate_congruence`] and [`kernel_congruence`] are also compatible;
/// [`Congruence::from_partition`] leaves that to
/// [`Congruence::compatibility_violation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    subject: Arc<GammaSemigroup>,
    rep: Vec<Elem>,
}

impl Congruence {
    pub fn identity(subject: Arc<GammaSemigroup>) -> Self {
        let rep = subject.elements().collect();
        Self { subject, rep }
    }

    pub fn universal(subject: Arc<GammaSemigroup>) -> Self {
        let rep = vec![Elem(0); subject.size()];
        Self { subject, rep }
    }

    /// Elements left out of `classes` become singletons; overlapping classes
    /// are joined.
    pub fn from_partition(
        subject: Arc<GammaSemigroup>,
        classes: &[Vec<Elem>],
    ) -> Result<Self, CongruenceError> {
        let mut uf = UnionFind::new(subject.size());
        for class in classes {
            for e in class {
                if !subject.contains(*e) {
                    return Err(CongruenceError::UnknownIdentifier(e.to_string()));
                }
                uf.union(class[0].0, e.0);
            }
        }
        Ok(Self::from_union_find(subject, &mut uf))
    }

    fn from_union_find(subject: Arc<GammaSemigroup>, uf: &mut UnionFind) -> Self {
        let rep = uf.min_representatives().into_iter().map(Elem).collect();
        Self { subject, rep }
    }

    pub fn subject(&self) -> &Arc<GammaSemigroup> {
        &self.subject
    }

    /// Minimum-index member of the class of `e`.
    pub fn representative(&self, e: Elem) -> Elem {
        self.rep[e.0]
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.rep[x.0] == self.rep[y.0]
    }

    pub fn class_of(&self, e: Elem) -> Vec<Elem> {
        let r = self.rep[e.0];
        self.subject
            .elements()
            .filter(|x| self.rep[x.0] == r)
            .collect()
    }

    /// Classes ordered by representative, members in index order.
    pub fn classes(&self) -> Vec<Vec<Elem>> {
        self.representatives()
            .into_iter()
            .map(|r| self.class_of(r))
            .collect()
    }

    pub fn representatives(&self) -> Vec<Elem> {
        self.subject
            .elements()
            .filter(|e| self.rep[e.0] == *e)
            .collect()
    }

    pub fn class_count(&self) -> usize {
        self.representatives().len()
    }

    pub fn is_identity(&self) -> bool {
        self.class_count() == self.subject.size()
    }

    pub fn is_universal(&self) -> bool {
        self.class_count() == 1
    }

    /// Every pair related by `self` is related by `other`.
    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        self.subject
            .elements()
            .all(|e| other.related(e, self.rep[e.0]))
    }

    /// First failure of compatibility, scanning related pairs in index order.
    pub fn compatibility_violation(&self) -> Option<CompatibilityViolation> {
        let s = &self.subject;
        for x in s.elements() {
            for y in s.elements().filter(|y| *y > x && self.related(x, *y)) {
                for gamma in s.gammas() {
                    for z in s.elements() {
                        if !self.related(s.op(x, gamma, z), s.op(y, gamma, z)) {
                            let side = Side::Right;
                            return Some(CompatibilityViolation {
                                x,
                                y,
                                gamma,
                                z,
                                side,
                            });
                        }
                        if !self.related(s.op(z, gamma, x), s.op(z, gamma, y)) {
                            let side = Side::Left;
                            return Some(CompatibilityViolation {
                                x,
                                y,
                                gamma,
                                z,
                                side,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    /// Lists classes as `{a,b} {c}` using element names.
    pub fn render(&self) -> String {
        self.classes()
            .iter()
            .map(|class| {
                let names: Vec<_> = class
                    .iter()
                    .map(|e| self.subject.element_name(*e))
                    .collect();
                format!("{{{}}}", names.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The least congruence on `s` containing every pair.
///
/// Worklist closure: each time two classes merge, the right and left
/// translates of the merged pair are queued.
pub fn generate_congruence(
    s: Arc<GammaSemigroup>,
    pairs: &[(Elem, Elem)],
) -> Result<Congruence, CongruenceError> {
    s.check_associativity()
        .map_err(CongruenceError::NotAssociative)?;
    if let Some(e) = pairs
        .iter()
        .flat_map(|(x, y)| [x, y])
        .find(|e| !s.contains(**e))
    {
        return Err(CongruenceError::UnknownIdentifier(e.to_string()));
    }
    let mut uf = UnionFind::new(s.size());
    let mut work: Vec<(Elem, Elem)> = pairs.to_vec();
    while let Some((x, y)) = work.pop() {
        if !uf.union(x.0, y.0) {
            continue;
        }
        for gamma in s.gammas() {
            for z in s.elements() {
                work.push((s.op(x, gamma, z), s.op(y, gamma, z)));
                work.push((s.op(z, gamma, x), s.op(z, gamma, y)));
            }
        }
    }
    Ok(Congruence::from_union_find(s, &mut uf))
}

/// Parses `a~b,c~d` against the element names of `s`. Blank input is the
/// empty list; whitespace around names is ignored.
pub fn parse_pair_list(
    s: &GammaSemigroup,
    text: &str,
) -> Result<Vec<(Elem, Elem)>, CongruenceError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let (a, b) = item
                .split_once('~')
                .ok_or_else(|| CongruenceError::MalformedPairList(item.trim().to_owned()))?;
            let lookup = |name: &str| {
                let name = name.trim();
                if name.is_empty() || name.contains('~') {
                    return Err(CongruenceError::MalformedPairList(item.trim().to_owned()));
                }
                s.element(name)
                    .ok_or_else(|| CongruenceError::UnknownIdentifier(name.to_owned()))
            };
            Ok((lookup(a)?, lookup(b)?))
        })
        .collect()
}

/// `S/ρ` with its projection `ρ#`.
///
/// Classes are named after their representatives and the quotient keeps the
/// gamma set of `S`. The projection fixes gammas.
pub fn quotient(
    s: &Arc<GammaSemigroup>,
    rho: &Congruence,
) -> Result<(Arc<GammaSemigroup>, GammaHomomorphism), CongruenceError> {
    if rho.subject.as_ref() != s.as_ref() {
        return Err(CongruenceError::SubjectMismatch {
            expected: s.name().to_owned(),
            found: rho.subject.name().to_owned(),
        });
    }
    if let Some(v) = rho.compatibility_violation() {
        return Err(CongruenceError::NotCompatible(v));
    }
    let reps = rho.representatives();
    let mut position = vec![0; s.size()];
    for (i, r) in reps.iter().enumerate() {
        position[r.0] = i;
    }
    let names: Vec<String> = reps.iter().map(|r| s.element_name(*r).to_owned()).collect();
    let q = GammaSemigroup::from_fn(
        &format!("{}/rho", s.name()),
        names,
        s.gamma_names().to_vec(),
        |a, g, b| Elem(position[rho.representative(s.op(reps[a.0], g, reps[b.0])).0]),
    );
    let q = Arc::new(q);
    let carrier = s
        .elements()
        .map(|e| Elem(position[rho.representative(e).0]))
        .collect();
    let projection = GammaHomomorphism::new(
        "rho#",
        Arc::clone(s),
        Arc::clone(&q),
        carrier,
        s.gammas().collect(),
    )?;
    Ok((q, projection))
}

/// `x ρ y ⟺ f′(x) = f′(y)`. The gamma map plays no part.
pub fn kernel_congruence(f: &GammaHomomorphism) -> Result<Congruence, CongruenceError> {
    f.verify().map_err(CongruenceError::NotAHomomorphism)?;
    let s = Arc::clone(f.source());
    let rep = s
        .elements()
        .map(|x| s.elements().find(|y| f.apply(*y) == f.apply(x)).unwrap())
        .collect();
    let rho = Congruence { subject: s, rep };
    debug_assert!(rho.compatibility_violation().is_none());
    Ok(rho)
}

/// Outcome of checking the first isomorphism theorem on one homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub kernel: Congruence,
    pub quotient: Arc<GammaSemigroup>,
    /// `ψ([x]) = f′(x)`, indexed by quotient element.
    pub psi: Vec<Elem>,
    pub image: Vec<Elem>,
    pub well_defined: bool,
    pub homomorphism_onto_image: bool,
    pub injective: bool,
    pub commutes: bool,
}

impl IsoReport {
    pub fn all_pass(&self) -> bool {
        self.well_defined && self.homomorphism_onto_image && self.injective && self.commutes
    }

    pub fn render(&self, f: &GammaHomomorphism) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let t = f.target();
        let mut out = String::new();
        out.push_str(&format!("kernel classes: {}\n", self.kernel.render()));
        out.push_str(&format!(
            "quotient size: {}, image size: {}\n",
            self.quotient.size(),
            self.image.len()
        ));
        for (i, y) in self.psi.iter().enumerate() {
            out.push_str(&format!(
                "psi([{}]) = {}\n",
                self.quotient.element_name(Elem(i)),
                t.element_name(*y)
            ));
        }
        out.push_str(&format!("well-defined: {}\n", yn(self.well_defined)));
        out.push_str(&format!(
            "homomorphism onto image: {}\n",
            yn(self.homomorphism_onto_image)
        ));
        out.push_str(&format!("injective: {}\n", yn(self.injective)));
        out.push_str(&format!("diagram commutes: {}\n", yn(self.commutes)));
        out
    }
}

pub fn first_isomorphism_check(f: &GammaHomomorphism) -> Result<IsoReport, CongruenceError> {
    let kernel = kernel_congruence(f)?;
    let s = f.source();
    let t = f.target();
    let (quotient, projection) = quotient(s, &kernel)?;
    let reps = kernel.representatives();
    let psi: Vec<Elem> = reps.iter().map(|r| f.apply(*r)).collect();

    let well_defined = s
        .elements()
        .all(|x| f.apply(x) == psi[projection.apply(x).0]);

    let mut homomorphism = true;
    for a in quotient.elements() {
        for g in quotient.gammas() {
            for b in quotient.elements() {
                let lhs = psi[quotient.op(a, g, b).0];
                let rhs = t.op(psi[a.0], f.apply_gamma(g), psi[b.0]);
                homomorphism &= lhs == rhs;
            }
        }
    }
    let image = f.image();
    let mut psi_image = psi.clone();
    psi_image.sort_unstable();
    psi_image.dedup();
    let homomorphism_onto_image = homomorphism && psi_image == image;

    let injective = psi_image.len() == psi.len();
    let commutes = s
        .elements()
        .all(|x| psi[projection.apply(x).0] == f.apply(x));

    Ok(IsoReport {
        kernel,
        quotient,
        psi,
        image,
        well_defined,
        homomorphism_onto_image,
        injective,
        commutes,
    })
}
