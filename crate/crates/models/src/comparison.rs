use std::fmt::Display;

use gjms_exact::Ring;

/// One exact equality test, kept in printable form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub name: String,
    pub order: Option<u32>,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub holds: bool,
}

impl Comparison {
    pub fn of<T: Ring + Display>(name: impl Into<String>, order: Option<u32>, lhs: &T, rhs: &T) -> Comparison {
        let residual = lhs.minus(rhs);
        Comparison {
            name: name.into(),
            order,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            residual: residual.to_string(),
            holds: residual.vanishes(),
        }
    }

    pub fn at<T: Ring + Display>(name: impl Into<String>, order: u32, lhs: &T, rhs: &T) -> Comparison {
        Comparison::of(name, Some(order), lhs, rhs)
    }
}
