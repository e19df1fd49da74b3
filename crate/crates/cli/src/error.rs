use std::fmt;
use std::process::ExitCode;

use seqrec::code::CodeError;
use seqrec::construct::ConstructError;
use seqrec::graph::GraphError;
use seqrec::group::GroupError;
use seqrec::lift::LiftError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Io,
    Invariant,
    Parse,
    Infeasible,
}

impl Category {
    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Category::Io => 1,
            Category::Invariant => 2,
            Category::Parse => 3,
            Category::Infeasible => 4,
        })
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Io => "io",
            Category::Invariant => "invariant",
            Category::Parse => "parse",
            Category::Infeasible => "infeasible",
        })
    }
}

#[derive(Debug)]
pub struct CliError {
    pub category: Category,
    pub message: String,
}

impl CliError {
    pub fn new(category: Category, message: impl Into<String>) -> Self {
        CliError {
            category,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(Category::Io, e.to_string())
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        CliError::new(Category::Parse, e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::new(Category::Parse, e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let category = match e {
            GroupError::Parse(_) | GroupError::InvalidPermutation(_) => Category::Parse,
            _ => Category::Infeasible,
        };
        CliError::new(category, e.to_string())
    }
}

impl From<LiftError> for CliError {
    fn from(e: LiftError) -> Self {
        let category = match e {
            LiftError::Exhausted(..) | LiftError::NoProgress(_) => Category::Invariant,
            LiftError::Group(g) => return g.into(),
            _ => Category::Infeasible,
        };
        CliError::new(category, e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Lift(l) => l.into(),
            ConstructError::Invariant(_) => CliError::new(Category::Invariant, e.to_string()),
            ConstructError::Graph(_) => CliError::new(Category::Invariant, e.to_string()),
            _ => CliError::new(Category::Infeasible, e.to_string()),
        }
    }
}
