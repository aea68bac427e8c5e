use std::sync::Arc;

use clap::{Arg, ArgMatches};

use gsg_core::congruence::{generate_congruence, parse_pair_list, quotient, CongruenceError};
use gsg_core::textio::{serialize, Workspace};

use super::{file_arg, named, semigroup, string, workspace};
use crate::{CliError, Command, Exit, Outcome};

/// Emits `S/ρ` for the congruence generated by `--pairs`, as a workspace
/// block preceded by a comment listing the classes.
pub struct Quotient;

impl Command for Quotient {
    fn name(&self) -> &'static str {
        "quotient"
    }

    fn about(&self) -> &'static str {
        "Quotient by the congruence generated by a pair list"
    }

    fn args(&self) -> Vec<Arg> {
        vec![
            file_arg(),
            named("semigroup", "table to divide"),
            Arg::new("pairs")
                .long("pairs")
                .required(true)
                .value_name("a~b,c~d")
                .help("generating pairs"),
        ]
    }

    fn execute(&self, m: &ArgMatches) -> Result<Outcome, CliError> {
        let w = workspace(m)?;
        let s = semigroup(&w, string(m, "semigroup"))?;
        let pairs =
            parse_pair_list(&s, string(m, "pairs")).map_err(|e| CliError::Input(e.to_string()))?;
        let rho = match generate_congruence(Arc::clone(&s), &pairs) {
            Ok(rho) => rho,
            Err(CongruenceError::NotAssociative(v)) => {
                return Ok(Outcome::new(
                    format!("# {} is not associative: {}\n", s.name(), v.render(&s)),
                    Exit::Failed,
                ))
            }
            Err(e) => return Err(CliError::Input(e.to_string())),
        };
        let (q, _) = quotient(&s, &rho).map_err(|e| CliError::Input(e.to_string()))?;
        let mut out = Workspace::new();
        out.add_semigroup(q)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let report = format!("# classes: {}\n{}", rho.render(), serialize(&out));
        Ok(Outcome::new(report, Exit::Pass))
    }
}
