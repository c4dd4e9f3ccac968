use std::fmt;

use gjms_exact::{Poly, Rational, Var};

/// The formal dimension.
pub fn dimension() -> Var {
    Var::new("n")
}

/// The Einstein constant `scal / (n(n-1))`.
pub fn lambda() -> Var {
    Var::new("lambda")
}

/// The formal Laplacian; an operator is a polynomial in it.
pub fn laplacian() -> Var {
    Var::new("Delta")
}

/// A model parameter that is either kept symbolic or fixed to a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    Formal,
    Value(Rational),
}

impl Param {
    /// Substitutes the value into `poly` when one is fixed.
    pub fn specialize(&self, var: Var, poly: &Poly) -> Poly {
        match self {
            Param::Formal => poly.clone(),
            Param::Value(v) => poly.substitute(var, &Poly::constant(v.clone())),
        }
    }

    pub fn as_poly(&self, var: Var) -> Poly {
        match self {
            Param::Formal => Poly::var(var),
            Param::Value(v) => Poly::constant(v.clone()),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Formal => f.write_str("formal"),
            Param::Value(v) => write!(f, "{v}"),
        }
    }
}
