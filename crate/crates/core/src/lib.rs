//! Exact computations with bound quiver algebras and their trivial extensions.
//!
//! The crate is `no_std` and only needs an allocator. Paths compose left to
//! right: `a.b` means "first `a`, then `b`".

#![no_std]

extern crate alloc;

pub mod cuts;
mod error;
pub mod fdalg;
pub mod groebner;
pub mod linalg;
pub mod path;
pub mod presentation;
pub mod quiver;
pub mod scalar;
pub mod trivext;

pub use error::{Error, Result};
pub use fdalg::{ExtendedBasis, FdAlgebra, SocleElement};
pub use groebner::GroebnerBasis;
pub use path::{CycleClass, Element, Path};
pub use presentation::Presentation;
pub use quiver::{Arrow, Quiver, Vertex};
pub use scalar::{Field, Scalar};
pub use trivext::TrivialExtension;

/// Default degree bound for Groebner completion.
pub const DEFAULT_BOUND: usize = 64;

#[cfg(test)]
pub(crate) mod testing {
    use crate::{Element, FdAlgebra, Field, Presentation, Quiver};

    pub fn build(vs: &[&str], arrows: &[(&str, &str, &str)], rels: &[&[(i64, &str)]]) -> FdAlgebra {
        let q = Quiver::from_parts(vs, arrows).unwrap();
        let f = Field::Rationals;
        let rels = rels
            .iter()
            .map(|terms| {
                let mut u = Element::zero();
                for (c, p) in terms.iter() {
                    u.add_term(q.parse_path(p).unwrap(), f.from_i64(*c));
                }
                u
            })
            .collect();
        FdAlgebra::build(Presentation::new(q, rels, f).unwrap(), 64).unwrap()
    }

    pub fn loop_algebra() -> FdAlgebra {
        build(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2")], &[&[(1, "a.a.a")]])
    }

    pub fn first_example() -> FdAlgebra {
        build(
            &["1", "2", "3", "4", "5"],
            &[
                ("g1", "1", "3"),
                ("g2", "3", "5"),
                ("e1", "1", "4"),
                ("e2", "4", "5"),
                ("a1", "1", "2"),
                ("a2", "2", "5"),
            ],
            &[&[(1, "a1.a2"), (2, "g1.g2"), (3, "e1.e2")]],
        )
    }

    pub fn point() -> FdAlgebra {
        build(&["1"], &[], &[])
    }

    /// Loop with two arrows out and back, symmetric of dimension 16.
    pub fn three_vertex() -> FdAlgebra {
        build(
            &["1", "2", "3"],
            &[("a1", "1", "1"), ("a2", "1", "2"), ("a3", "1", "3"), ("a4", "2", "1"), ("a5", "3", "1")],
            &[
                &[(1, "a1.a1")],
                &[(1, "a4.a2")],
                &[(1, "a5.a3")],
                &[(1, "a5.a2")],
                &[(1, "a4.a3")],
                &[(1, "a4.a1.a3")],
                &[(1, "a5.a1.a2")],
                &[(1, "a2.a4"), (-1, "a3.a5")],
                &[(1, "a1.a2.a4"), (-1, "a2.a4.a1")],
            ],
        )
    }
}
