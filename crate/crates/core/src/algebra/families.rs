//! Standard constructions used throughout tests, fixtures and examples.

use super::{Elem, GammaSemigroup};

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `Z_n^{(k)}`: elements `0..n`, gammas `g0..g{k-1}`, `x g_j y = (x + y + j) mod n`.
pub fn cyclic_offsets(n: usize, k: usize) -> GammaSemigroup {
    let gammas = (0..k).map(|j| format!("g{j}")).collect::<Vec<_>>();
    GammaSemigroup::from_fn(&format!("Z{n}_{k}"), numbered(n), gammas, |x, g, y| {
        Elem((x.0 + y.0 + g.0) % n)
    })
}

/// `Z_n` with the single gamma `g`.
pub fn cyclic(n: usize) -> GammaSemigroup {
    GammaSemigroup::from_fn(
        &format!("Z{n}"),
        numbered(n),
        vec!["g".to_owned()],
        |x, _, y| Elem((x.0 + y.0) % n),
    )
}

/// `x γ y = x` on the given names, with one gamma `g`.
pub fn left_zero(name: &str, elements: &[&str]) -> GammaSemigroup {
    GammaSemigroup::from_fn(name, elements.to_vec(), vec!["g"], |x, _, _| x)
}

/// `x γ y = y` on the given names, with one gamma `g`.
pub fn right_zero(name: &str, elements: &[&str]) -> GammaSemigroup {
    GammaSemigroup::from_fn(name, elements.to_vec(), vec!["g"], |_, _, y| y)
}

/// `x γ y = value` for all `x, γ, y`, with one gamma `g`.
pub fn constant(name: &str, elements: &[&str], value: &str) -> GammaSemigroup {
    let v = elements
        .iter()
        .position(|e| *e == value)
        .expect("constant value must be an element");
    GammaSemigroup::from_fn(name, elements.to_vec(), vec!["g"], move |_, _, _| Elem(v))
}

/// One element `u` with `u γ u = u` for every gamma.
pub fn trivial(name: &str, element: &str, gammas: &[&str]) -> GammaSemigroup {
    GammaSemigroup::from_fn(name, vec![element], gammas.to_vec(), |x, _, _| x)
}

/// `x γ y = max(x, y)` by index, one gamma `g`.
pub fn max_semilattice(name: &str, elements: &[&str]) -> GammaSemigroup {
    GammaSemigroup::from_fn(name, elements.to_vec(), vec!["g"], |x, _, y| x.max(y))
}

/// Γ-semigroup induced by an ordinary semigroup `mul` on `0..n` with Γ a
/// subset of the carrier: `x γ y = x·γ·y`.
pub fn from_semigroup(
    name: &str,
    n: usize,
    mul: impl Fn(usize, usize) -> usize,
    gammas: &[usize],
) -> GammaSemigroup {
    let names = gammas.iter().map(|g| format!("g{g}")).collect::<Vec<_>>();
    GammaSemigroup::from_fn(name, numbered(n), names, |x, g, y| {
        Elem(mul(mul(x.0, gammas[g.0]), y.0))
    })
}
