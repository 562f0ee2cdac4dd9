//! Quivers with relations.

use alloc::vec::Vec;

use crate::groebner::{buchberger, GroebnerBasis};
use crate::path::Element;
use crate::quiver::Quiver;
use crate::scalar::Field;
use crate::{Error, Result};

/// A quiver together with generators of an ideal of its path algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    quiver: Quiver,
    relations: Vec<Element>,
    field: Field,
}

impl Presentation {
    /// Checks that every relation is homogeneous in its endpoints and drops zero relations.
    pub fn new(quiver: Quiver, relations: Vec<Element>, field: Field) -> Result<Self> {
        let relations: Vec<Element> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        for (i, r) in relations.iter().enumerate() {
            if r.endpoints().is_none() {
                return Err(Error::MixedEndpoints(i));
            }
            for p in r.paths() {
                if p.arrows().iter().any(|a| a.0 >= quiver.arrow_count()) {
                    return Err(Error::NotComposable);
                }
            }
        }
        Ok(Presentation { quiver, relations, field })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Index of the first relation with a term of length below two.
    pub fn inadmissible_relation(&self) -> Option<usize> {
        self.relations.iter().position(|r| r.min_len() < 2)
    }

    pub fn groebner(&self, bound: usize) -> Result<GroebnerBasis> {
        buchberger(&self.quiver, &self.relations, bound)
    }
}
