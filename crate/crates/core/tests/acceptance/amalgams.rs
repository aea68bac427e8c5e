use std::collections::BTreeSet;
use std::sync::Arc;

use gsg_core::algebra::families::{constant, cyclic, trivial};
use gsg_core::amalgam::examples::{
    left_zero_over_point, trivial as trivial_amalgam, two_copies_of_z2, two_copies_of_z2_disjoint,
    z2_over_point,
};
use gsg_core::amalgam::{
    decide, EmbeddingVerdict, NecessaryVerdict, NotApplicableReason, Resolution, SearchOptions,
    WordSearch,
};
use gsg_core::{Elem, GammaAmalgam, GammaHomomorphism, GammaSemigroup, Mode, Part};

use crate::oracle::{all_tables, regularity, small_families, Flat};
use crate::{Ctx, Outcome};

fn search(a: &GammaAmalgam, bound: usize) -> Result<WordSearch, String> {
    let options = SearchOptions {
        bound,
        ..SearchOptions::default()
    };
    WordSearch::new(a, options).map_err(|e| e.to_string())
}

fn hom(
    name: &str,
    src: &Arc<GammaSemigroup>,
    dst: &Arc<GammaSemigroup>,
    carrier: Vec<usize>,
) -> GammaHomomorphism {
    let gammas = src.gammas().collect();
    let carrier = carrier.into_iter().map(Elem).collect();
    GammaHomomorphism::new(name, src.clone(), dst.clone(), carrier, gammas).unwrap()
}

pub fn c7_sanity(ctx: &mut Ctx) -> Outcome {
    let z2 = Arc::new(cyclic(2));
    let mut resolved = 0;
    for (a, into_z2) in [
        (trivial_amalgam(), vec![0]),
        (two_copies_of_z2(), vec![0, 1]),
    ] {
        let s = search(&a, 4)?;
        let (f1, f2) = (a.map(Part::First), a.map(Part::Second));
        for u in a.core().elements() {
            let w1 = s.letter_word(Part::First, f1.apply(u));
            let w2 = s.letter_word(Part::Second, f2.apply(u));
            ensure!(
                ctx.prove(&s, &w1, &w2),
                "{}: f1(u) ~ f2(u) not proven for u = {u}",
                a.name()
            );
        }

        let report = s.check_natural_embedding();
        ensure!(
            report.verdict == EmbeddingVerdict::ConsistentWithinBound && !report.truncated,
            "{}: {}",
            a.name(),
            s.render_report(&report)
        );
        ensure!(
            report.intersections.len() == a.core().size() && report.unresolved().count() == 0,
            "{}: cross pairs not all resolved",
            a.name()
        );
        for i in &report.intersections {
            let w1 = s.letter_word(Part::First, i.s1);
            ctx.replay(&s, &i.chain, &w1, &s.letter_word(Part::Second, i.s2));
            if let Resolution::Resolved { u, chain } = &i.resolution {
                ctx.replay(&s, chain, &s.letter_word(Part::First, f1.apply(*u)), &w1);
                resolved += 1;
            }
        }

        let maps = Part::BOTH.map(|p| hom("g", a.part(p), &z2, into_z2.clone()));
        let m = s
            .pushout_mediator(z2.clone(), maps)
            .map_err(|e| e.to_string())?;
        ensure!(m.all_pass(), "{}: mediator into Z2 failed: {m:?}", a.name());
    }
    Ok(format!(
        "2 amalgams, {resolved} cross pairs resolved, mediators into Z2 pass"
    ))
}

pub fn c8_replay(ctx: &mut Ctx) -> Outcome {
    let mut proofs = 0;
    for a in [
        trivial_amalgam(),
        two_copies_of_z2(),
        left_zero_over_point(),
        z2_over_point(),
        two_copies_of_z2_disjoint(),
    ] {
        let s = search(&a, 3)?;
        let words = s.product().enumerate_words(2);
        for w1 in &words {
            for w2 in &words {
                if ctx.prove(&s, w1, w2) {
                    proofs += 1;
                }
            }
        }
    }

    // A tampered chain must be rejected, or replay proves nothing.
    let a = two_copies_of_z2();
    let s = search(&a, 3)?;
    let (w1, w2) = (
        s.letter_word(Part::First, Elem(0)),
        s.letter_word(Part::Second, Elem(0)),
    );
    let mut chain = s
        .words_equal(&w1, &w2)
        .unwrap()
        .chain()
        .cloned()
        .ok_or("no chain to tamper")?;
    ensure!(!chain.is_empty(), "expected a nonempty chain");
    chain.steps[0].after = w1.as_sequence().clone();
    ensure!(
        s.replay(&chain, &w1, &w2).is_err(),
        "tampered chain replayed"
    );

    ensure!(
        ctx.replay_failures.is_empty(),
        "{} replay failures, first: {}",
        ctx.replay_failures.len(),
        ctx.replay_failures[0]
    );
    ensure!(ctx.replays > 0, "no proofs were produced");
    Ok(format!(
        "{} chains replayed ({proofs} from the sweep), zero failures",
        ctx.replays
    ))
}

fn fixture_tables() -> Vec<GammaSemigroup> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    let mut out = Vec::new();
    for (n, g) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
        out.extend(all_tables(n, g));
    }
    out.extend(small_families());
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let w = gsg_core::textio::parse(&text).unwrap();
        out.extend(w.semigroups().iter().map(|s| (**s).clone()));
    }
    out
}

pub fn c9_necessary_condition(_: &mut Ctx) -> Outcome {
    // Classifier against the brute-force scanner.
    let tables = fixture_tables();
    let mut first_non_complete = Vec::new();
    for s in &tables {
        let r = s.classify().map_err(|e| e.to_string())?;
        let flat = Flat::of(s);
        let scan = regularity(&flat);
        for (a, &(regular, complete)) in scan.iter().enumerate() {
            let e = &r.elements[a];
            ensure!(
                e.alpha_regular_witness.is_some() == regular
                    && e.completely_regular_witness.is_some() == complete,
                "{}: element {a} classified differently from the scanner",
                s.name()
            );
            if let Some((x, al)) = e.completely_regular_witness {
                let (x, al) = (x.0, al.0);
                ensure!(
                    flat.op(flat.op(a, al, x), al, a) == a
                        && flat.op(a, al, x) == flat.op(x, al, a),
                    "{}: bad witness for {a}",
                    s.name()
                );
            }
        }
        ensure!(
            r.is_alpha_regular == scan.iter().all(|e| e.0),
            "{}: α-regular flag",
            s.name()
        );
        ensure!(
            r.is_completely_alpha_regular == scan.iter().all(|e| e.1),
            "{}: completely α-regular flag",
            s.name()
        );
        first_non_complete.push(scan.iter().position(|e| !e.1).map(Elem));
    }

    // Branch table by injection over every (U, S1, S2) drawn from a sample.
    let reports: Vec<_> = tables.iter().map(|s| s.classify().unwrap()).collect();
    let sample: Vec<usize> = (0..tables.len()).step_by(tables.len() / 40 + 1).collect();
    let mut branches = BTreeSet::new();
    for &u in &sample {
        for &p in &sample {
            for &q in &sample {
                let verdict = decide(Mode::SameGamma, &reports[u], [&reports[p], &reports[q]]);
                let parts_ok = [p, q].map(|i| reports[i].is_completely_alpha_regular);
                let expected = if parts_ok != [true, true] {
                    let failing = Part::BOTH
                        .into_iter()
                        .filter(|x| !parts_ok[x.index()])
                        .collect();
                    NecessaryVerdict::NotApplicable(NotApplicableReason::PartsNotCompletelyRegular(
                        failing,
                    ))
                } else {
                    match first_non_complete[u] {
                        None => NecessaryVerdict::Satisfied,
                        Some(u) => NecessaryVerdict::NotEmbeddable { u },
                    }
                };
                ensure!(
                    verdict == expected,
                    "decide gave {verdict:?}, expected {expected:?}"
                );
                branches.insert(match verdict {
                    NecessaryVerdict::Satisfied => 0,
                    NecessaryVerdict::NotApplicable(_) => 1,
                    NecessaryVerdict::NotEmbeddable { .. } => 2,
                });
            }
        }
    }
    ensure!(
        branches.len() == 3,
        "sample did not reach all three branches"
    );

    // Named cases through real amalgams.
    let two = two_copies_of_z2()
        .necessary_condition()
        .map_err(|e| e.to_string())?;
    ensure!(
        two == NecessaryVerdict::Satisfied,
        "two copies of Z2: {two:?}"
    );
    let u = Arc::new(trivial("U", "u", &["g"]));
    let k2 = Arc::new(constant("K2", &["a", "b"], "b"));
    let c = Arc::new(trivial("C", "c", &["g"]));
    let a = GammaAmalgam::new(
        "KC",
        u.clone(),
        [k2.clone(), c.clone()],
        [hom("f1", &u, &k2, vec![1]), hom("f2", &u, &c, vec![0])],
        Mode::SameGamma,
    );
    let v = a.necessary_condition().map_err(|e| e.to_string())?;
    ensure!(
        v == NecessaryVerdict::NotApplicable(NotApplicableReason::PartsNotCompletelyRegular(vec![
            Part::First
        ])),
        "K2 part: {v:?}"
    );
    let d = two_copies_of_z2_disjoint()
        .necessary_condition()
        .map_err(|e| e.to_string())?;
    ensure!(
        d == NecessaryVerdict::NotApplicable(NotApplicableReason::DistinctGammaSets),
        "disjoint: {d:?}"
    );
    let z2 = cyclic(2).classify().unwrap();
    let injected = decide(Mode::SameGamma, &k2.classify().unwrap(), [&z2, &z2]);
    ensure!(
        injected == NecessaryVerdict::NotEmbeddable { u: Elem(0) },
        "injected K2 core: {injected:?}"
    );

    Ok(format!(
        "{} tables cross-checked, {} injected triples, all branches reached",
        tables.len(),
        sample.len().pow(3)
    ))
}

/// The equalities from the proof that an embeddable amalgam of completely
/// α-regular parts has a completely α-regular core. Each line is a product
/// in `T` of factors `p:w`, meaning `ψ_p` applied to the product of `w` in
/// `S_p`, where `s` stands for `s_p` and `i` for its inverse.
const CHAIN: [&str; 36] = [
    "2:i",
    "2:isi",
    "2:i . 2:s . 2:i",
    "2:i . 1:s . 2:i",
    "2:i . 1:sis . 2:i",
    "2:i . 1:s . 1:i . 1:s . 2:i",
    "2:i . 2:s . 1:i . 1:s . 2:i",
    "2:is . 1:i . 1:s . 2:i",
    "2:is . 1:is . 2:i",
    "2:is . 1:si . 2:i",
    "2:is . 1:s . 1:i . 2:i",
    "2:is . 2:s . 1:i . 2:i",
    "2:si . 2:s . 1:i . 2:i",
    "2:sis . 1:i . 2:i",
    "2:s . 1:i . 2:i",
    "1:s . 1:i . 2:i",
    "1:si . 2:i",
    "1:is . 2:i",
    "1:i . 1:s . 2:i",
    "1:i . 2:s . 2:i",
    "1:i . 2:si",
    "1:i . 2:is",
    "1:i . 2:i . 2:s",
    "1:i . 2:i . 1:s",
    "1:i . 2:i . 1:sis",
    "1:i . 2:i . 1:s . 1:i . 1:s",
    "1:i . 2:i . 2:s . 1:i . 1:s",
    "1:i . 2:is . 1:is",
    "1:i . 2:si . 1:si",
    "1:i . 2:si . 1:s . 1:i",
    "1:i . 2:si . 2:s . 1:i",
    "1:i . 2:sis . 1:i",
    "1:i . 2:s . 1:i",
    "1:i . 1:s . 1:i",
    "1:isi",
    "1:i",
];

fn group(name: &str, prefix: &str, dims: &[usize]) -> Arc<GammaSemigroup> {
    let size: usize = dims.iter().product();
    let digits = |mut i: usize| {
        let mut d = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            d[k] = i % dims[k];
            i /= dims[k];
        }
        d
    };
    let index = |d: &[usize]| d.iter().zip(dims).fold(0, |acc, (x, m)| acc * m + x);
    let names = (0..size).map(|i| {
        let d = digits(i);
        format!(
            "{prefix}{}",
            d.iter().map(ToString::to_string).collect::<String>()
        )
    });
    Arc::new(GammaSemigroup::from_fn(
        name,
        names,
        ["g".to_owned()],
        |a, _, b| {
            let (x, y) = (digits(a.0), digits(b.0));
            let sum: Vec<usize> = x
                .iter()
                .zip(&y)
                .zip(dims)
                .map(|((p, q), m)| (p + q) % m)
                .collect();
            Elem(index(&sum))
        },
    ))
}

pub fn c10_chain_in_t(_: &mut Ctx) -> Outcome {
    // U = Z3 inside S_i = Z3 × Z2 as Z3 × {0}; T = Z3 × Z2 × Z2 with
    // ψ₁(a, b) = (a, b, 0) and ψ₂(a, b) = (a, 0, b).
    let u = group("U", "u", &[3]);
    let s1 = group("S1", "p", &[3, 2]);
    let s2 = group("S2", "q", &[3, 2]);
    let t = group("T", "t", &[3, 2, 2]);
    let f1 = hom("f1", &u, &s1, (0..3).map(|a| a * 2).collect());
    let f2 = hom("f2", &u, &s2, (0..3).map(|a| a * 2).collect());
    let psi = [
        hom(
            "psi1",
            &s1,
            &t,
            (0..6).map(|i| (i / 2) * 4 + (i % 2) * 2).collect(),
        ),
        hom(
            "psi2",
            &s2,
            &t,
            (0..6).map(|i| (i / 2) * 4 + i % 2).collect(),
        ),
    ];
    let a = GammaAmalgam::new(
        "Z3Z6",
        u.clone(),
        [s1.clone(), s2.clone()],
        [f1.clone(), f2.clone()],
        Mode::SameGamma,
    );
    a.validate().map_err(|v| format!("{v:?}"))?;

    // `T` embeds the amalgam.
    for p in &psi {
        ensure!(
            p.verify().is_ok() && p.is_monomorphism().unwrap(),
            "{} is not a monomorphism",
            p.name()
        );
    }
    for x in u.elements() {
        ensure!(
            psi[0].apply(f1.apply(x)) == psi[1].apply(f2.apply(x)),
            "square fails at {x}"
        );
    }
    let image = |h: &GammaHomomorphism| h.image().into_iter().collect::<BTreeSet<_>>();
    let meet: BTreeSet<Elem> = image(&psi[0])
        .intersection(&image(&psi[1]))
        .copied()
        .collect();
    let core: BTreeSet<Elem> = u.elements().map(|x| psi[0].apply(f1.apply(x))).collect();
    ensure!(meet == core, "images meet outside the core");

    let parts = [s1.clone(), s2.clone()];
    let reports = [s1.classify().unwrap(), s2.classify().unwrap()];
    let mut steps = 0;
    for x in u.elements() {
        let s = [f1.apply(x), f2.apply(x)];
        let w = [0, 1].map(|p| {
            reports[p].elements[s[p].0]
                .completely_regular_witness
                .unwrap()
        });
        ensure!(w[0].1 == w[1].1, "witnesses use different gammas");
        let al = w[0].1;
        let inv = w.map(|(i, _)| i);
        for p in 0..2 {
            let (sp, ip, sg) = (s[p], inv[p], &parts[p]);
            ensure!(
                sg.op(sg.op(sp, al, ip), al, sp) == sp && sg.op(sg.op(ip, al, sp), al, ip) == ip,
                "witness in S{} is not an α-inverse",
                p + 1
            );
        }

        let eval = |line: &str| -> Elem {
            let factor = |f: &str| {
                let (p, letters) = f.split_once(':').unwrap();
                let p: usize = p.parse::<usize>().unwrap() - 1;
                let pick = |c: char| if c == 's' { s[p] } else { inv[p] };
                let mut chars = letters.chars();
                let first = pick(chars.next().unwrap());
                let v = chars.fold(first, |acc, c| parts[p].op(acc, al, pick(c)));
                psi[p].apply(v)
            };
            let mut fs = line.split(" . ").map(factor);
            let first = fs.next().unwrap();
            fs.fold(first, |acc, y| t.op(acc, al, y))
        };
        let values: Vec<Elem> = CHAIN.iter().map(|l| eval(l)).collect();
        for (k, pair) in values.windows(2).enumerate() {
            ensure!(
                pair[0] == pair[1],
                "u = {}: line {} ({}) ≠ line {} ({})",
                u.element_name(x),
                k + 1,
                t.element_name(pair[0]),
                k + 2,
                t.element_name(pair[1])
            );
            steps += 1;
        }
        ensure!(
            values[0] == psi[1].apply(inv[1]) && values[35] == psi[0].apply(inv[0]),
            "chain endpoints"
        );

        // The conclusion: a common preimage of the inverses is an inverse of x in U.
        let y = u
            .elements()
            .find(|&y| f1.apply(y) == inv[0] && f2.apply(y) == inv[1])
            .ok_or("inverses have no common preimage in U")?;
        ensure!(
            u.op(u.op(x, al, y), al, x) == x
                && u.op(u.op(y, al, x), al, y) == y
                && u.op(x, al, y) == u.op(y, al, x),
            "preimage is not a commuting α-inverse"
        );
    }
    ensure!(
        a.necessary_condition().unwrap() == NecessaryVerdict::Satisfied,
        "verdict not Satisfied"
    );
    Ok(format!(
        "{steps} equalities checked in T across {} core elements",
        u.size()
    ))
}
