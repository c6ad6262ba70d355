use std::fmt;

use covercone::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Parse,
    Improper,
    InvalidCover,
    Internal,
}

impl Kind {
    pub fn exit_code(self) -> i32 {
        match self {
            Kind::Parse => 2,
            Kind::Improper => 3,
            Kind::InvalidCover => 4,
            Kind::Internal => 5,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub kind: Kind,
    pub message: String,
}

impl Failure {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        Failure { kind, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Parse { .. }
            | Error::InvalidVariables(_)
            | Error::InvalidModulus(_)
            | Error::VariableCount { .. }
            | Error::InvalidRange { .. } => Kind::Parse,
            Error::UnitIdeal | Error::EmptyIdeal | Error::ZeroPolynomial(_) => Kind::Improper,
            Error::InvalidCover(_) => Kind::InvalidCover,
            Error::RingMismatch | Error::FieldMismatch | Error::NotLocalOrdering | Error::NotHomogeneous => {
                Kind::Internal
            }
        };
        Failure::new(kind, e.to_string())
    }
}
