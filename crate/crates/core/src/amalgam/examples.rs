//! Small amalgams used by tests, fixtures and the acceptance suite.

use std::sync::Arc;

use super::GammaAmalgam;
use crate::algebra::families::{cyclic, left_zero, trivial as one_point};
use crate::{Elem, Gam, GammaHomomorphism, GammaSemigroup, Mode};

fn inclusion(
    name: &str,
    core: &Arc<GammaSemigroup>,
    part: &Arc<GammaSemigroup>,
    carrier: Vec<Elem>,
) -> GammaHomomorphism {
    let gamma = core.gammas().collect();
    GammaHomomorphism::new(name, core.clone(), part.clone(), carrier, gamma)
        .expect("example maps are total")
}

/// `U = {u}`, `S₁ = {u1}`, `S₂ = {u2}`, all one-point tables with gamma `g`.
pub fn trivial() -> GammaAmalgam {
    let u = Arc::new(one_point("U", "u", &["g"]));
    let s1 = Arc::new(one_point("S1", "u1", &["g"]));
    let s2 = Arc::new(one_point("S2", "u2", &["g"]));
    let f1 = inclusion("f1", &u, &s1, vec![Elem(0)]);
    let f2 = inclusion("f2", &u, &s2, vec![Elem(0)]);
    GammaAmalgam::new("A", u, [s1, s2], [f1, f2], Mode::SameGamma)
}

/// `U = Z2` on `{0u, 1u}` with copies `{0a, 1a}` and `{0b, 1b}` and the
/// identity-like inclusions.
pub fn two_copies_of_z2() -> GammaAmalgam {
    let z2 = cyclic(2);
    let u = Arc::new(z2.with_element_suffix("U", "u"));
    let s1 = Arc::new(z2.with_element_suffix("S1", "a"));
    let s2 = Arc::new(z2.with_element_suffix("S2", "b"));
    let id = vec![Elem(0), Elem(1)];
    let f1 = inclusion("f1", &u, &s1, id.clone());
    let f2 = inclusion("f2", &u, &s2, id);
    GammaAmalgam::new("Z2Z2", u, [s1, s2], [f1, f2], Mode::SameGamma)
}

/// `S₁` left-zero on `{a, b}`, `S₂ = {c}`, `U = {u}` with `u ↦ a` and `u ↦ c`.
pub fn left_zero_over_point() -> GammaAmalgam {
    let u = Arc::new(one_point("U", "u", &["g"]));
    let s1 = Arc::new(left_zero("L", &["a", "b"]));
    let s2 = Arc::new(one_point("C", "c", &["g"]));
    let f1 = inclusion("f1", &u, &s1, vec![Elem(0)]);
    let f2 = inclusion("f2", &u, &s2, vec![Elem(0)]);
    GammaAmalgam::new("LZ", u, [s1, s2], [f1, f2], Mode::SameGamma)
}

/// `S₁ = Z2` on `{0, 1}`, `S₂ = {c}`, `U = {u}` with `u ↦ 0` and `u ↦ c`.
pub fn z2_over_point() -> GammaAmalgam {
    let u = Arc::new(one_point("U", "u", &["g"]));
    let s1 = Arc::new(cyclic(2));
    let s2 = Arc::new(one_point("C", "c", &["g"]));
    let f1 = inclusion("f1", &u, &s1, vec![Elem(0)]);
    let f2 = inclusion("f2", &u, &s2, vec![Elem(0)]);
    GammaAmalgam::new("Z2C", u, [s1, s2], [f1, f2], Mode::SameGamma)
}

/// Two copies of `Z2` with their own gammas `g1` and `g2` over a core `Z2`
/// with gamma `g0`.
pub fn two_copies_of_z2_disjoint() -> GammaAmalgam {
    let z2 = cyclic(2);
    let rename = |name: &str, suffix: &str, gamma: &str| {
        let s = z2.with_element_suffix(name, suffix);
        Arc::new(
            s.relabel(name, s.element_names().to_vec(), vec![gamma.to_owned()])
                .unwrap(),
        )
    };
    let u = rename("U", "u", "g0");
    let s1 = rename("S1", "a", "g1");
    let s2 = rename("S2", "b", "g2");
    let id = vec![Elem(0), Elem(1)];
    let f1 = GammaHomomorphism::new("f1", u.clone(), s1.clone(), id.clone(), vec![Gam(0)]).unwrap();
    let f2 = GammaHomomorphism::new("f2", u.clone(), s2.clone(), id, vec![Gam(0)]).unwrap();
    GammaAmalgam::new("Z2Z2d", u, [s1, s2], [f1, f2], Mode::DisjointFamilies)
}
