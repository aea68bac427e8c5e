use std::path::PathBuf;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use gsg_core::textio::{parse, serialize};

use crate::{Ctx, Outcome};

fn fixture_files() -> Vec<(PathBuf, String)> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "gsg"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect()
}

/// Line-level edits of a fixture: delete, duplicate, replace a token,
/// insert a junk line, or cut the text short.
fn mutate(text: &str, edits: &[(u8, usize, String)]) -> String {
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    for (kind, pos, tok) in edits {
        if lines.is_empty() {
            lines.push(tok.clone());
            continue;
        }
        let i = pos % lines.len();
        match kind % 5 {
            0 => {
                lines.remove(i);
            }
            1 => {
                let l = lines[i].clone();
                lines.insert(i, l);
            }
            2 => {
                let mut words: Vec<String> = lines[i].split(' ').map(str::to_owned).collect();
                let j = pos % words.len();
                words[j] = tok.clone();
                lines[i] = words.join(" ");
            }
            3 => lines.insert(i, tok.clone()),
            _ => {
                let joined = lines.join("\n");
                let cut = joined
                    .char_indices()
                    .nth(pos % (joined.len() + 1))
                    .map_or(joined.len(), |(k, _)| k);
                lines = joined[..cut].lines().map(str::to_owned).collect();
            }
        }
    }
    lines.join("\n")
}

pub fn c11_round_trip(_: &mut Ctx) -> Outcome {
    let files = fixture_files();
    for (path, text) in &files {
        let name = path.file_name().unwrap().to_string_lossy();
        let w = parse(text).map_err(|e| format!("{name}: {e}"))?;
        let once = serialize(&w);
        let w2 = parse(&once).map_err(|e| format!("{name} reparse: {e}"))?;
        ensure!(
            serialize(&w2) == once,
            "{name}: serialize is not a fixpoint"
        );
        ensure!(
            w.semigroups() == w2.semigroups()
                && w.homomorphisms() == w2.homomorphisms()
                && w.amalgams() == w2.amalgams(),
            "{name}: round trip changed the workspace"
        );
    }

    let texts: Vec<String> = files.into_iter().map(|(_, t)| t).collect();
    let n = texts.len();
    let token = prop_oneof![
        "[a-z0-9]{1,3}",
        Just("=".to_owned()),
        Just("->".to_owned()),
        Just("#".to_owned()),
        Just("end".to_owned()),
        Just("semigroup".to_owned()),
        Just("op".to_owned()),
        "\\PC{0,6}",
    ];
    let mutated = (
        0..n,
        prop::collection::vec((any::<u8>(), any::<usize>(), token), 1..6),
    )
        .prop_map(move |(i, edits)| mutate(&texts[i], &edits));
    let random = "[a-z0-9 #=>\\-\n]{0,200}";
    let input = prop_oneof![mutated, random.prop_map(|s: String| s), "\\PC{0,200}"];

    let mut runner = TestRunner::new(Config {
        cases: 10_000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&input, |text| {
            if let Err(e) = parse(&text) {
                let lines = text.lines().count().max(1);
                prop_assert!(
                    e.line >= 1 && e.line <= lines + 1,
                    "line {} of {}",
                    e.line,
                    lines
                );
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!(
        "{n} fixture files are fixpoints; 10000 fuzz cases, zero crashes"
    ))
}
