use std::fmt;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

#[derive(Debug)]
pub enum CliError {
    Lib(assprime::Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use assprime::Error as E;
        match self {
            CliError::Lib(E::Parse { .. }) => EXIT_PARSE,
            CliError::Lib(E::Size { .. } | E::Truncation { .. } | E::Overflow) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(s) => write!(f, "{s}"),
        }
    }
}

impl From<assprime::Error> for CliError {
    fn from(e: assprime::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("json: {e}"))
    }
}
