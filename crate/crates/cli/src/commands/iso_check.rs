use clap::{Arg, ArgMatches};

use gsg_core::congruence::{first_isomorphism_check, CongruenceError};

use super::{file_arg, homomorphism, named, string, workspace};
use crate::{CliError, Command, Exit, Outcome};

pub struct IsoCheck;

impl Command for IsoCheck {
    fn name(&self) -> &'static str {
        "iso-check"
    }

    fn about(&self) -> &'static str {
        "Check S/ker f against the image of f"
    }

    fn args(&self) -> Vec<Arg> {
        vec![file_arg(), named("hom", "homomorphism to check")]
    }

    fn execute(&self, m: &ArgMatches) -> Result<Outcome, CliError> {
        let w = workspace(m)?;
        let h = homomorphism(&w, string(m, "hom"))?;
        match first_isomorphism_check(&h) {
            Ok(report) => {
                let exit = if report.all_pass() {
                    Exit::Pass
                } else {
                    Exit::Failed
                };
                Ok(Outcome::new(report.render(&h), exit))
            }
            Err(CongruenceError::NotAHomomorphism(v)) => Ok(Outcome::new(
                format!("hom {}: not a homomorphism: {}\n", h.name(), v.render(&h)),
                Exit::Failed,
            )),
            Err(e) => Err(CliError::Input(e.to_string())),
        }
    }
}
