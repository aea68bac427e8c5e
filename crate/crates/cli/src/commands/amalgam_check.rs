use clap::{Arg, ArgAction, ArgMatches};

use gsg_core::amalgam::{
    AmalgamError, EmbeddingVerdict, NecessaryVerdict, SearchOptions, WordSearch,
};

use super::{amalgam, file_arg, named, string, workspace};
use crate::{CliError, Command, Exit, Outcome};

/// Runs the necessary condition, lists `R`, then searches for proven
/// failures of the natural embedding.
pub struct AmalgamCheck;

impl Command for AmalgamCheck {
    fn name(&self) -> &'static str {
        "amalgam-check"
    }

    fn about(&self) -> &'static str {
        "Check an amalgam: necessary condition, relations, natural embedding"
    }

    fn args(&self) -> Vec<Arg> {
        let defaults = SearchOptions::default();
        vec![
            file_arg(),
            named("amalgam", "amalgam to check"),
            Arg::new("bound")
                .long("bound")
                .value_name("N")
                .value_parser(clap::value_parser!(usize))
                .help(format!("maximum word length (default {})", defaults.bound)),
            Arg::new("budget")
                .long("budget")
                .value_name("M")
                .value_parser(clap::value_parser!(usize))
                .help(format!(
                    "maximum visited sequences per search (default {})",
                    defaults.budget
                )),
            Arg::new("identify-elements")
                .long("identify-elements")
                .action(ArgAction::SetTrue)
                .help("also identify f1(u) with f2(u) for every core element"),
        ]
    }

    fn execute(&self, m: &ArgMatches) -> Result<Outcome, CliError> {
        let w = workspace(m)?;
        let a = amalgam(&w, string(m, "amalgam"))?;
        let defaults = SearchOptions::default();
        let options = SearchOptions {
            bound: m
                .get_one::<usize>("bound")
                .copied()
                .unwrap_or(defaults.bound),
            budget: m
                .get_one::<usize>("budget")
                .copied()
                .unwrap_or(defaults.budget),
            identify_elements: m.get_flag("identify-elements"),
        };
        let mut report = format!("amalgam {} ({})\n", a.name(), a.mode());

        let verdict = match a.necessary_condition() {
            Ok(v) => v,
            Err(AmalgamError::NotAssociative { table, violation }) => {
                let s = w
                    .semigroup(&table)
                    .expect("amalgam tables live in the workspace");
                report.push_str(&format!(
                    "{table} is not associative: {}\n",
                    violation.render(s)
                ));
                return Ok(Outcome::new(report, Exit::Failed));
            }
            Err(e) => return Err(CliError::Input(e.to_string())),
        };
        report.push_str(&format!(
            "necessary condition: {}\n",
            verdict.render(a.core())
        ));
        let mut exit = match verdict {
            NecessaryVerdict::NotEmbeddable { .. } => Exit::Failed,
            _ => Exit::Pass,
        };

        let search = WordSearch::new(&a, options).map_err(|e| CliError::Input(e.to_string()))?;
        let product = search.product();
        report.push_str("relations:\n");
        for &(x, y) in &search.relations().pairs {
            report.push_str(&format!(
                "  ({}) ~ ({})\n",
                product.letter_name(x),
                product.letter_name(y)
            ));
        }
        for &(g, h) in &search.relations().gamma_pairs {
            report.push_str(&format!(
                "  gamma {} ~ {} (not used by the search)\n",
                product.gamma_letter_name(g),
                product.gamma_letter_name(h)
            ));
        }

        let embedding = search.check_natural_embedding();
        report.push_str(&search.render_report(&embedding));
        exit = exit.worst(match embedding.verdict {
            EmbeddingVerdict::ViolationFound => Exit::Failed,
            EmbeddingVerdict::ConsistentWithinBound
                if embedding.truncated || embedding.unresolved().next().is_some() =>
            {
                Exit::Inconclusive
            }
            EmbeddingVerdict::ConsistentWithinBound => Exit::Pass,
        });
        Ok(Outcome::new(report, exit))
    }
}
