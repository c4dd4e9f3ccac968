use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("not a root: the polynomial does not vanish at {0}")]
    NotARoot(Rational),
    #[error("variable `{0}` has no assigned value")]
    Unassigned(String),
    #[error("cannot parse `{0}` as an exact rational")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}
