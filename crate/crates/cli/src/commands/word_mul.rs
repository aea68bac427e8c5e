use clap::{Arg, ArgMatches};

use gsg_core::{FreeProduct, Mode};

use super::{file_arg, semigroup, string, workspace};
use crate::{CliError, Command, Exit, Outcome};

/// Multiplies two words of the free product of a family of tables.
pub struct WordMul;

impl Command for WordMul {
    fn name(&self) -> &'static str {
        "word-mul"
    }

    fn about(&self) -> &'static str {
        "Multiply two words in a free Γ-product"
    }

    fn args(&self) -> Vec<Arg> {
        vec![
            file_arg(),
            Arg::new("mode")
                .long("mode")
                .default_value("same-gamma")
                .value_parser(["same-gamma", "disjoint"]),
            Arg::new("gamma")
                .long("gamma")
                .required(true)
                .value_name("G"),
            Arg::new("left")
                .long("left")
                .required(true)
                .value_name("WORD"),
            Arg::new("right")
                .long("right")
                .required(true)
                .value_name("WORD"),
            Arg::new("family")
                .long("family")
                .value_name("S1,S2,...")
                .help("member tables, in order (default: every table in the file)"),
        ]
    }

    fn execute(&self, m: &ArgMatches) -> Result<Outcome, CliError> {
        let w = workspace(m)?;
        let mode = Mode::from_keyword(string(m, "mode")).expect("checked by clap");
        let members = match m.get_one::<String>("family") {
            Some(list) => list
                .split(',')
                .map(|n| semigroup(&w, n.trim()))
                .collect::<Result<Vec<_>, _>>()?,
            None => w.semigroups().to_vec(),
        };
        let input = |e: gsg_core::words::WordError| CliError::Input(e.to_string());
        let product = FreeProduct::new(members, mode).map_err(input)?;
        let left = product.parse_word(string(m, "left")).map_err(input)?;
        let right = product.parse_word(string(m, "right")).map_err(input)?;
        let gamma = product.parse_gamma(string(m, "gamma")).map_err(input)?;
        let result = product.multiply(&left, gamma, &right).map_err(input)?;
        Ok(Outcome::new(
            format!("{}\n", product.render(&result)),
            Exit::Pass,
        ))
    }
}
