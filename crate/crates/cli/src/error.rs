use std::fmt;

/// Failures surfaced to the command line, each with its own exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Malformed input text.
    Parse { line: usize, col: usize, msg: String },
    /// Well-formed but ill-typed expression.
    Type { msg: String, subterm: String },
    /// Error raised by the kernel.
    Kernel(polystar::Error),
}

impl CliError {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse { line, col, msg: msg.into() }
    }

    pub fn ty(msg: impl Into<String>, subterm: impl ToString) -> CliError {
        CliError::Type { msg: msg.into(), subterm: subterm.to_string() }
    }

    /// 2 parse, 3 type, 4 non-convergence, 5 unsupported domain.
    pub fn exit_code(&self) -> i32 {
        use polystar::Error as E;
        match self {
            CliError::Parse { .. } => 2,
            CliError::Type { .. } => 3,
            CliError::Kernel(e) => match e {
                E::InvalidComposition(_) => 2,
                E::ZeroIndex(_) | E::StarUndefined | E::StarNotRepresentable | E::ConcOfStars => 3,
                E::NoConvergence(_) => 4,
                _ => 5,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, col, msg } => write!(f, "parse error at {line}:{col}: {msg}"),
            CliError::Type { msg, subterm } => write!(f, "type error: {msg} in `{subterm}`"),
            CliError::Kernel(e) => write!(f, "error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<polystar::Error> for CliError {
    fn from(e: polystar::Error) -> CliError {
        CliError::Kernel(e)
    }
}
