use clap::{Arg, ArgMatches};

use super::{file_arg, workspace};
use crate::{CliError, Command, Exit, Outcome};

/// Parses a workspace, then checks every table for associativity and every
/// homomorphism for compatibility.
pub struct Validate;

impl Command for Validate {
    fn name(&self) -> &'static str {
        "validate"
    }

    fn about(&self) -> &'static str {
        "Parse a workspace and check associativity and homomorphisms"
    }

    fn args(&self) -> Vec<Arg> {
        vec![file_arg()]
    }

    fn execute(&self, m: &ArgMatches) -> Result<Outcome, CliError> {
        let w = workspace(m)?;
        let mut report = String::new();
        let mut exit = Exit::Pass;
        for s in w.semigroups() {
            match s.check_associativity() {
                Ok(()) => report.push_str(&format!("semigroup {}: associative\n", s.name())),
                Err(v) => {
                    exit = Exit::Failed;
                    report.push_str(&format!(
                        "semigroup {}: not associative: {}\n",
                        s.name(),
                        v.render(s)
                    ));
                }
            }
        }
        for h in w.homomorphisms() {
            match h.verify() {
                Ok(()) => report.push_str(&format!("hom {}: homomorphism\n", h.name())),
                Err(v) => {
                    exit = Exit::Failed;
                    report.push_str(&format!(
                        "hom {}: not a homomorphism: {}\n",
                        h.name(),
                        v.render(h)
                    ));
                }
            }
        }
        for a in w.amalgams() {
            report.push_str(&format!("amalgam {}: valid\n", a.name()));
        }
        report.push_str(if exit == Exit::Pass {
            "ok\n"
        } else {
            "failed\n"
        });
        Ok(Outcome::new(report, exit))
    }
}
