use std::sync::Arc;

use gsg_core::congruence::{first_isomorphism_check, generate_congruence, quotient};
use gsg_core::{Elem, Gam, GammaHomomorphism, GammaSemigroup};

use crate::oracle::{all_tables, compatible, finer, partitions, small_families, Flat};
use crate::words::maps;
use crate::{Ctx, Outcome};

/// Fixture tables: every associative table up to the given sizes plus the
/// named families, all with at most `max_n` elements.
fn fixtures(max_n: usize) -> Vec<Arc<GammaSemigroup>> {
    let mut out = Vec::new();
    for (n, g) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
        out.extend(all_tables(n, g));
    }
    out.extend(small_families().into_iter().filter(|s| s.size() <= max_n));
    out.into_iter().map(Arc::new).collect()
}

pub fn c4_minimality(ctx: &mut Ctx) -> Outcome {
    let fixtures = fixtures(4);
    let rgs: Vec<Vec<Vec<usize>>> = (0..=4).map(partitions).collect();
    let mut seeds = 0;
    for s in &fixtures {
        let flat = Flat::of(s);
        let congruences: Vec<&Vec<usize>> = rgs[s.size()]
            .iter()
            .filter(|p| compatible(&flat, p))
            .collect();
        for x in 0..s.size() {
            for y in x + 1..s.size() {
                let containing: Vec<&Vec<usize>> = congruences
                    .iter()
                    .copied()
                    .filter(|p| p[x] == p[y])
                    .collect();
                let least = containing
                    .iter()
                    .find(|p| containing.iter().all(|q| finer(p, q)))
                    .ok_or_else(|| {
                        format!("{}: no least congruence containing ({x},{y})", s.name())
                    })?;
                let rho = generate_congruence(s.clone(), &[(Elem(x), Elem(y))])
                    .map_err(|e| e.to_string())?;
                for a in 0..s.size() {
                    for b in 0..s.size() {
                        ensure!(
                            rho.related(Elem(a), Elem(b)) == (least[a] == least[b]),
                            "{}: seed ({x},{y}) gives {} but the least congruence is {least:?}",
                            s.name(),
                            rho.render()
                        );
                    }
                }
                let (q, _) = quotient(s, &rho).map_err(|e| e.to_string())?;
                ctx.quotients.push(q);
                seeds += 1;
            }
        }
    }
    Ok(format!(
        "{} tables, {seeds} seed pairs, exact agreement",
        fixtures.len()
    ))
}

pub fn c5_first_isomorphism(ctx: &mut Ctx) -> Outcome {
    let fixtures = fixtures(3);
    let mut homs = 0;
    for s in &fixtures {
        for t in &fixtures {
            let carriers = maps(s.size(), t.size());
            let gamma_maps: Vec<Vec<Gam>> = maps(s.gamma_count(), t.gamma_count())
                .into_iter()
                .map(|m| m.into_iter().map(|e| Gam(e.0)).collect())
                .collect();
            for c in &carriers {
                for g in &gamma_maps {
                    let f = GammaHomomorphism::new("f", s.clone(), t.clone(), c.clone(), g.clone())
                        .map_err(|e| e.to_string())?;
                    if f.verify().is_err() {
                        continue;
                    }
                    let report = first_isomorphism_check(&f).map_err(|e| e.to_string())?;
                    ensure!(
                        report.all_pass(),
                        "{} -> {}: {}",
                        s.name(),
                        t.name(),
                        report.render(&f)
                    );
                    ctx.quotients.push(report.quotient);
                    homs += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} tables, {homs} homomorphisms, all four assertions hold",
        fixtures.len()
    ))
}

pub fn c6_quotients(ctx: &mut Ctx) -> Outcome {
    ensure!(!ctx.quotients.is_empty(), "no quotients were produced");
    for q in &ctx.quotients {
        ensure!(
            Flat::of(q).first_violation().is_none(),
            "{} is not associative (oracle)",
            q.name()
        );
        if let Err(v) = q.check_associativity() {
            return Err(format!("{}: {}", q.name(), v.render(q)));
        }
    }
    Ok(format!("{} quotients associative", ctx.quotients.len()))
}
