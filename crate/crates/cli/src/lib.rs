//! The `gsg` command line. Each subcommand is a [`Command`] registered by name
//! in a [`Registry`]; `run` dispatches argv to it and returns a [`Verdict`].

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Arg, ArgMatches};
use thiserror::Error;

use gsg_core::textio::{self, ParseError, Workspace};

pub mod commands;

/// Process exit status, by meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Pass = 0,
    /// A check failed and the report carries a certificate.
    Failed = 1,
    /// Bad input: unreadable file, parse or validation error, bad usage.
    InputError = 2,
    /// A bounded search could not decide.
    Inconclusive = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// The more severe of two outcomes: failure over inconclusive over pass.
    pub fn worst(self, other: Exit) -> Exit {
        let rank = |e: Exit| match e {
            Exit::Pass => 0,
            Exit::Inconclusive => 1,
            Exit::Failed => 2,
            Exit::InputError => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

/// What one invocation produced. `report` goes to stdout, `error` to stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub echo: String,
    pub report: String,
    pub error: Option<String>,
    pub exit: Exit,
}

impl Verdict {
    /// Everything written to stdout: the echo as a comment line, then the report.
    pub fn stdout(&self) -> String {
        format!("# {}\n{}", self.echo, self.report)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("no {kind} named `{name}`")]
    NotFound { kind: &'static str, name: String },
    #[error("{0}")]
    Input(String),
}

/// Output of a command that ran to completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub exit: Exit,
}

impl Outcome {
    pub fn new(report: String, exit: Exit) -> Self {
        Self { report, exit }
    }
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn args(&self) -> Vec<Arg>;
    fn execute(&self, matches: &ArgMatches) -> Result<Outcome, CliError>;
}

#[derive(Default)]
pub struct Registry {
    commands: BTreeMap<&'static str, Box<dyn Command>>,
}

impl fmt::Debug for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.commands.keys()).finish()
    }
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `command`, replacing any command of the same name.
    pub fn register(&mut self, command: impl Command + 'static) {
        self.commands.insert(command.name(), Box::new(command));
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.commands.keys().copied()
    }

    /// Every subcommand shipped with `gsg`.
    pub fn builtin() -> Self {
        let mut r = Self::new();
        commands::register_all(&mut r);
        r
    }

    fn cli(&self) -> clap::Command {
        let mut cli = clap::Command::new("gsg")
            .about("Finite Γ-semigroups: tables, congruences, free products and amalgams")
            .subcommand_required(true)
            .arg_required_else_help(true);
        for c in self.commands.values() {
            cli = cli.subcommand(clap::Command::new(c.name()).about(c.about()).args(c.args()));
        }
        cli
    }

    /// Runs one invocation. `argv[0]` is the program name.
    pub fn run<I, T>(&self, argv: I) -> Verdict
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
        let echo = echo(&argv);
        let fail = |error: String, exit: Exit| Verdict {
            echo: echo.clone(),
            report: String::new(),
            error: Some(error),
            exit,
        };
        let matches = match self.cli().try_get_matches_from(&argv) {
            Ok(m) => m,
            Err(e) => {
                use clap::error::ErrorKind;
                let text = e.render().to_string();
                return match e.kind() {
                    ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Verdict {
                        echo,
                        report: text,
                        error: None,
                        exit: Exit::Pass,
                    },
                    _ => fail(text, Exit::InputError),
                };
            }
        };
        let (name, sub) = matches.subcommand().expect("a subcommand is required");
        let command = self.get(name).expect("clap only accepts registered names");
        match command.execute(sub) {
            Ok(out) => Verdict {
                echo,
                report: out.report,
                error: None,
                exit: out.exit,
            },
            Err(e) => fail(format!("error: {e}\n"), Exit::InputError),
        }
    }
}

fn echo(argv: &[String]) -> String {
    let mut parts = vec!["gsg".to_owned()];
    parts.extend(argv.iter().skip(1).map(|a| {
        if a.is_empty() || a.chars().any(char::is_whitespace) {
            format!("\"{a}\"")
        } else {
            a.clone()
        }
    }));
    parts.join(" ")
}

/// Reads and parses a workspace file.
pub fn load(path: &Path) -> Result<Workspace, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    textio::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}
