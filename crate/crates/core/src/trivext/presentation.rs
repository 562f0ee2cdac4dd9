//! A presentation of `T(A)` computed as `ker Φ`, degree by degree.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::TrivialExtension;
use crate::fdalg::{ExtendedBasis, FdAlgebra, SocleElement};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::{self, Vector};
use crate::path::{Element, Path};
use crate::presentation::Presentation;
use crate::quiver::{Quiver, Vertex};
use crate::Result;

/// Normal paths of length at most `d`, grouped by endpoints.
fn normal_paths(quiver: &Quiver, g: &GroebnerBasis, d: usize) -> BTreeMap<(Vertex, Vertex), Vec<Path>> {
    let mut out: BTreeMap<(Vertex, Vertex), Vec<Path>> = BTreeMap::new();
    let mut layer: Vec<Path> = quiver.vertices().map(Path::stationary).filter(|p| g.is_normal(quiver, p)).collect();
    for len in 0..=d {
        for p in &layer {
            out.entry((p.source(), p.target())).or_default().push(p.clone());
        }
        if len == d {
            break;
        }
        let mut next = Vec::new();
        for p in &layer {
            for a in quiver.arrows_from(p.target()) {
                let q = p.extend(a, quiver.target(a));
                if g.is_normal(quiver, &q) {
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

impl TrivialExtension {
    /// Generators of `ker Φ`, each monic in its tip.
    pub fn kernel_relations(&self) -> Result<Vec<Element>> {
        let q = self.quiver();
        let field = self.field();
        let n_t = self.nilpotency.max(2);
        let mut gens: Vec<Element> = Vec::new();
        for d in 2..=n_t {
            let g = GroebnerBasis::truncated(q, &gens, d);
            for paths in normal_paths(q, &g, d).into_values() {
                let images: Vec<Vector> = paths.iter().map(|p| self.phi_path_vec(p)).collect();
                let ker = linalg::kernel(field, &images);
                for v in linalg::rref_from_right(field, paths.len(), &ker) {
                    let mut r = Element::zero();
                    for (p, c) in paths.iter().zip(v) {
                        r.add_term(p.clone(), c);
                    }
                    gens.push(r);
                }
            }
            if let Ok(g) = buchberger(q, &gens, n_t + 1) {
                if g.normal_monomials(q)?.len() == self.dim() {
                    break;
                }
            }
        }
        Ok(gens)
    }

    /// `KQ_{T(A)} / ker Φ` as a presentation.
    pub fn presentation(&self) -> Result<Presentation> {
        Presentation::new(self.quiver().clone(), self.kernel_relations()?, self.field())
    }

    /// Certified Groebner basis of `ker Φ`.
    pub fn kernel_groebner(&self) -> Result<GroebnerBasis> {
        buchberger(self.quiver(), &self.kernel_relations()?, self.nilpotency.max(2) + 1)
    }
}

/// A presentation of `T(A)` for the echelon socle basis.
pub fn trivext_presentation(a: &FdAlgebra) -> Result<Presentation> {
    TrivialExtension::new(a.clone()).presentation()
}

/// A presentation of `T(A)` for a chosen socle basis, completion and arrow names.
pub fn trivext_presentation_with(
    a: &FdAlgebra,
    socle: Vec<SocleElement>,
    basis: ExtendedBasis,
    names: Option<&[String]>,
) -> Result<Presentation> {
    TrivialExtension::with_basis(a.clone(), socle, basis, names)?.presentation()
}
