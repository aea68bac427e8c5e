use clap::{Arg, ArgMatches};

use super::{file_arg, homomorphism, named, string, workspace, yes_no};
use crate::{CliError, Command, Exit, Outcome};

pub struct HomCheck;

impl Command for HomCheck {
    fn name(&self) -> &'static str {
        "hom-check"
    }

    fn about(&self) -> &'static str {
        "Check a homomorphism and report monomorphism flags"
    }

    fn args(&self) -> Vec<Arg> {
        vec![file_arg(), named("hom", "homomorphism to check")]
    }

    fn execute(&self, m: &ArgMatches) -> Result<Outcome, CliError> {
        let w = workspace(m)?;
        let h = homomorphism(&w, string(m, "hom"))?;
        let mut report = format!(
            "hom {} : {} -> {}\n",
            h.name(),
            h.source().name(),
            h.target().name()
        );
        if let Err(v) = h.verify() {
            report.push_str(&format!("homomorphism: no: {}\n", v.render(&h)));
            return Ok(Outcome::new(report, Exit::Failed));
        }
        let mono = h.is_monomorphism().expect("verified");
        report.push_str("homomorphism: yes\n");
        report.push_str(&format!("monomorphism: {}\n", yes_no(mono)));
        report.push_str(&format!(
            "gamma map is identity: {}\n",
            yes_no(h.gamma_map_is_identity())
        ));
        report.push_str(&format!(
            "preserves left identities: {}\n",
            yes_no(h.preserves_left_identity())
        ));
        Ok(Outcome::new(report, Exit::Pass))
    }
}
