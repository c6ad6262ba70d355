use std::fmt;
use std::sync::Arc;

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::monomial::MonomialOrdering;

/// Variables, monomial ordering and coefficient field of a polynomial ring.
///
/// Polynomials hold an `Arc` to their ring; two rings are the same ring when all
/// three components agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    variables: Vec<String>,
    ordering: MonomialOrdering,
    field: FieldSpec,
}

pub type Ring = Arc<RingContext>;

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(
        variables: &[S],
        ordering: MonomialOrdering,
        field: FieldSpec,
    ) -> Result<Ring> {
        if variables.is_empty() {
            return Err(Error::InvalidVariables("no variables".into()));
        }
        let mut names: Vec<String> = Vec::with_capacity(variables.len());
        for v in variables {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(Error::InvalidVariables(format!("`{v}` is not an identifier")));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::InvalidVariables(format!("`{v}` declared twice")));
            }
            names.push(v.to_string());
        }
        Ok(Arc::new(RingContext {
            variables: names,
            ordering,
            field,
        }))
    }

    /// `K[vars]` over the rationals with the local ordering `ds`.
    pub fn local<S: AsRef<str>>(variables: &[S]) -> Result<Ring> {
        RingContext::new(variables, MonomialOrdering::LocalDegRevLex, FieldSpec::Rationals)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn ordering(&self) -> MonomialOrdering {
        self.ordering
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// The same ring with `new_var` appended as the last variable.
    pub fn extend(&self, new_var: &str) -> Result<Ring> {
        if self.index_of(new_var).is_some() {
            return Err(Error::InvalidVariables(format!(
                "`{new_var}` already present"
            )));
        }
        let mut vars = self.variables.clone();
        vars.push(new_var.to_string());
        RingContext::new(&vars, self.ordering, self.field)
    }

    pub fn with_ordering(&self, ordering: MonomialOrdering) -> Ring {
        Arc::new(RingContext {
            ordering,
            ..self.clone()
        })
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = match self.field {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("F_{p}"),
        };
        write!(
            f,
            "{field}[{}] ordering {}",
            self.variables.join(", "),
            self.ordering.name()
        )
    }
}
