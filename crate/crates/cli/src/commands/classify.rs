use clap::{Arg, ArgMatches};

use super::{file_arg, named, semigroup, string, workspace};
use crate::{CliError, Command, Exit, Outcome};

/// Regularity report for one table. Passes exactly when it is α-regular.
pub struct Classify;

impl Command for Classify {
    fn name(&self) -> &'static str {
        "classify"
    }

    fn about(&self) -> &'static str {
        "Classify α-regularity, Γ-inverses and complete α-regularity"
    }

    fn args(&self) -> Vec<Arg> {
        vec![file_arg(), named("semigroup", "table to classify")]
    }

    fn execute(&self, m: &ArgMatches) -> Result<Outcome, CliError> {
        let w = workspace(m)?;
        let s = semigroup(&w, string(m, "semigroup"))?;
        let report = match s.check_associativity() {
            Err(v) => {
                return Ok(Outcome::new(
                    format!(
                        "semigroup {}: not associative: {}\n",
                        s.name(),
                        v.render(&s)
                    ),
                    Exit::Failed,
                ))
            }
            Ok(()) => s.classify().expect("associativity checked"),
        };
        let mut text = report.render(&s);
        let exit = match report.first_non_regular() {
            None => {
                text.push_str("verdict: α-regular\n");
                Exit::Pass
            }
            Some(a) => {
                text.push_str(&format!(
                    "verdict: not α-regular, witness {}\n",
                    s.element_name(a)
                ));
                Exit::Failed
            }
        };
        Ok(Outcome::new(text, exit))
    }
}
