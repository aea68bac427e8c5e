use std::sync::Arc;

use gsg_core::words::GammaLetter;
use gsg_core::{Elem, FreeProduct, Gam, GammaHomomorphism, GammaSemigroup, Mode};

use crate::oracle::all_tables;
use crate::{Ctx, Outcome};

/// `Z2` with offsets and the max-semilattice `x γ_j y = max(x, y, j)`.
fn members(gammas: [&str; 2]) -> [Arc<GammaSemigroup>; 2] {
    let a = GammaSemigroup::from_fn(
        "A",
        ["0a".to_owned(), "1a".to_owned()],
        [format!("{}0", gammas[0]), format!("{}1", gammas[0])],
        |x, g, y| Elem((x.0 + y.0 + g.0) % 2),
    );
    let b = GammaSemigroup::from_fn(
        "B",
        ["0b".to_owned(), "1b".to_owned()],
        [format!("{}0", gammas[1]), format!("{}1", gammas[1])],
        |x, g, y| Elem(x.0.max(y.0).max(g.0)),
    );
    [Arc::new(a), Arc::new(b)]
}

fn product(mode: Mode) -> FreeProduct {
    let gammas = match mode {
        Mode::SameGamma => ["g", "g"],
        Mode::DisjointFamilies => ["ga", "gb"],
    };
    FreeProduct::new(members(gammas).to_vec(), mode).expect("members form a family")
}

pub fn c2_associativity(_: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for mode in [Mode::SameGamma, Mode::DisjointFamilies] {
        let d = product(mode);
        let words = d.enumerate_words(2);
        let gammas = d.all_gammas();
        for a in &words {
            for &al in &gammas {
                for b in &words {
                    let ab = d.multiply(a, al, b).map_err(|e| e.to_string())?;
                    for &be in &gammas {
                        for c in &words {
                            let left = d.multiply(&ab, be, c).map_err(|e| e.to_string())?;
                            let bc = d.multiply(b, be, c).map_err(|e| e.to_string())?;
                            let right = d.multiply(a, al, &bc).map_err(|e| e.to_string())?;
                            ensure!(
                                left == right,
                                "({}) {} ({}) {} ({}) differs by bracketing",
                                d.render(a),
                                d.gamma_letter_name(al),
                                d.render(b),
                                d.gamma_letter_name(be),
                                d.render(c)
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} triples, both modes, zero failures"))
}

/// Every carrier and gamma map `src → dst` that verifies. In same-gamma mode
/// only the identity gamma map is allowed.
fn homs(
    src: &Arc<GammaSemigroup>,
    dst: &Arc<GammaSemigroup>,
    same_gamma: bool,
) -> Vec<GammaHomomorphism> {
    let carriers = maps(src.size(), dst.size());
    let gamma_maps = if same_gamma {
        vec![src.gammas().collect::<Vec<Gam>>()]
    } else {
        maps(src.gamma_count(), dst.gamma_count())
            .into_iter()
            .map(|m| m.into_iter().map(|e| Gam(e.0)).collect())
            .collect()
    };
    let mut out = Vec::new();
    for c in &carriers {
        for g in &gamma_maps {
            let h = GammaHomomorphism::new("psi", src.clone(), dst.clone(), c.clone(), g.clone())
                .unwrap();
            if h.verify().is_ok() {
                out.push(h);
            }
        }
    }
    out
}

/// All functions `0..n → 0..m` as index vectors.
pub fn maps(n: usize, m: usize) -> Vec<Vec<Elem>> {
    (0..m.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let v = code % m;
                    code /= m;
                    Elem(v)
                })
                .collect()
        })
        .collect()
}

pub fn c3_universal_property(_: &mut Ctx) -> Outcome {
    let mut pairs = 0;
    let mut products = 0;
    for mode in [Mode::SameGamma, Mode::DisjointFamilies] {
        let d = product(mode);
        let [a, b] = [d.members()[0].clone(), d.members()[1].clone()];
        let words = d.enumerate_words(2);
        let gammas = d.all_gammas();
        for v in all_tables(2, 2) {
            let v = Arc::new(v);
            // Same-gamma members are built with the target's gamma names.
            let same = mode == Mode::SameGamma;
            let (ha, hb) = (homs(&a, &v, same), homs(&b, &v, same));
            for psi_a in &ha {
                for psi_b in &hb {
                    let psis = [psi_a.clone(), psi_b.clone()];
                    let fold = |w: &gsg_core::Word| match mode {
                        Mode::SameGamma => d.fold(w, &v, &psis),
                        Mode::DisjointFamilies => d.fold_with_gamma_maps(w, &v, &psis),
                    };
                    pairs += 1;
                    for l in d.all_letters() {
                        let got = fold(&d.embed_letter(l)).map_err(|e| e.to_string())?;
                        ensure!(
                            got == psis[l.pointer].apply(l.element),
                            "fold∘embed ≠ ψ at {}",
                            d.letter_name(l)
                        );
                    }
                    let values = words
                        .iter()
                        .map(&fold)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| e.to_string())?;
                    for (x, &fx) in words.iter().zip(&values) {
                        for &g in &gammas {
                            let image = gamma_image(g, &psis);
                            for (y, &fy) in words.iter().zip(&values) {
                                let xy = d.multiply(x, g, y).map_err(|e| e.to_string())?;
                                let lhs = fold(&xy).map_err(|e| e.to_string())?;
                                ensure!(
                                    lhs == v.op(fx, image, fy),
                                    "fold not multiplicative at ({}) {} ({}) into {}",
                                    d.render(x),
                                    d.gamma_letter_name(g),
                                    d.render(y),
                                    v.name()
                                );
                                products += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    ensure!(pairs > 0, "no homomorphism pairs to test");
    Ok(format!(
        "{pairs} (ψ₁, ψ₂) pairs, {products} products, zero failures"
    ))
}

fn gamma_image(g: GammaLetter, psis: &[GammaHomomorphism; 2]) -> Gam {
    match g.pointer {
        None => g.gamma,
        Some(p) => psis[p].apply_gamma(g.gamma),
    }
}
