//! The built-in subcommands.

mod amalgam_check;
mod classify;
mod hom_check;
mod iso_check;
mod quotient;
mod validate;
mod word_mul;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Arg, ArgMatches};
use gsg_core::textio::Workspace;
use gsg_core::{GammaAmalgam, GammaHomomorphism, GammaSemigroup};

use crate::{load, CliError, Registry};

pub use amalgam_check::AmalgamCheck;
pub use classify::Classify;
pub use hom_check::HomCheck;
pub use iso_check::IsoCheck;
pub use quotient::Quotient;
pub use validate::Validate;
pub use word_mul::WordMul;

pub fn register_all(r: &mut Registry) {
    r.register(Validate);
    r.register(Classify);
    r.register(HomCheck);
    r.register(Quotient);
    r.register(WordMul);
    r.register(AmalgamCheck);
    r.register(IsoCheck);
}

fn file_arg() -> Arg {
    Arg::new("file")
        .required(true)
        .value_parser(clap::value_parser!(PathBuf))
        .help("workspace file")
}

fn named(id: &'static str, help: &'static str) -> Arg {
    Arg::new(id)
        .long(id)
        .required(true)
        .value_name("NAME")
        .help(help)
}

fn workspace(m: &ArgMatches) -> Result<Workspace, CliError> {
    load(m.get_one::<PathBuf>("file").expect("required"))
}

fn string<'a>(m: &'a ArgMatches, id: &str) -> &'a str {
    m.get_one::<String>(id)
        .map(String::as_str)
        .expect("required")
}

fn semigroup(w: &Workspace, name: &str) -> Result<Arc<GammaSemigroup>, CliError> {
    w.semigroup(name)
        .cloned()
        .ok_or_else(|| CliError::NotFound {
            kind: "semigroup",
            name: name.to_owned(),
        })
}

fn homomorphism(w: &Workspace, name: &str) -> Result<GammaHomomorphism, CliError> {
    w.homomorphism(name)
        .cloned()
        .ok_or_else(|| CliError::NotFound {
            kind: "hom",
            name: name.to_owned(),
        })
}

fn amalgam(w: &Workspace, name: &str) -> Result<GammaAmalgam, CliError> {
    w.amalgam(name).cloned().ok_or_else(|| CliError::NotFound {
        kind: "amalgam",
        name: name.to_owned(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
