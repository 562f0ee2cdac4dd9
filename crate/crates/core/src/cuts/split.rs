//! The canonical section test and the correspondence between cut arrows and
//! the socle of the quotient.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Cut, CutQuotient, WeightedCycleSet};
use crate::fdalg::{ExtendedBasis, FdAlgebra, SocleElement};
use crate::linalg::{self, Vector};
use crate::path::{Element, Path};
use crate::quiver::{Arrow, Quiver};
use crate::scalar::Scalar;
use crate::{Error, Result, DEFAULT_BOUND};

#[derive(Clone, Debug)]
pub struct SplitReport {
    pub quotient: CutQuotient,
    pub base: FdAlgebra,
    /// Every relation of the quotient vanishes in the algebra.
    pub relations_hold: bool,
    /// The monomial basis of the quotient stays independent in the algebra.
    pub injective: bool,
    /// First Groebner generator of the quotient that is nonzero in the algebra.
    pub witness: Option<Element>,
}

impl SplitReport {
    pub fn split(&self) -> bool {
        self.relations_hold && self.injective
    }
}

/// Whether sending each arrow of `B = A/⟨D⟩` to itself defines an algebra
/// embedding `B → A`.
pub fn canonical_section_split(a: &FdAlgebra, cut: &Cut) -> Result<SplitReport> {
    let quotient = CutQuotient::new(a.presentation(), cut)?;
    let base = FdAlgebra::build(quotient.presentation.clone(), DEFAULT_BOUND)?;
    let aq = a.quiver();
    let mut witness = None;
    for g in base.groebner().generators() {
        let lifted = quotient.lift(g, aq);
        if !a.normal_form(&lifted).is_zero() {
            witness = Some(g.clone());
            break;
        }
    }
    let images: Vec<Vector> = base
        .basis()
        .iter()
        .map(|p| a.coords(&quotient.lift(&Element::monomial(p.clone(), a.field().one()), aq)))
        .collect();
    let injective = linalg::rank(a.field(), a.dim(), &images) == base.dim();
    Ok(SplitReport { relations_hold: witness.is_none(), injective, witness, quotient, base })
}

/// Cut arrows matched with a socle basis of the quotient, and the dual
/// functionals the weights prescribe.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub pairs: Vec<(Arrow, SocleElement)>,
    /// `f_γ` on the monomial basis of the quotient, one per cut arrow.
    pub functionals: Vec<Vector>,
    pub basis: ExtendedBasis,
}

impl Correspondence {
    pub fn socle(&self) -> Vec<SocleElement> {
        self.pairs.iter().map(|(_, s)| s.clone()).collect()
    }
}

fn fail(quiver: &Quiver, a: Arrow) -> Error {
    Error::NoCorrespondence(quiver.arrow_name(a).to_string())
}

/// For each cut arrow `γ`, the functional `f_γ` on `B` taking the weight of
/// `C` on each supplement of `γ` in a cycle `C` and zero on every other
/// nonzero path; then the socle basis dual to these functionals.
pub fn socle_supplement_correspondence(
    b: &FdAlgebra,
    quotient: &CutQuotient,
    original: &Quiver,
    cut: &Cut,
    e: &WeightedCycleSet,
) -> Result<Correspondence> {
    let field = b.field();
    let bq = b.quiver();
    let nonzero = b.nonzero_paths();
    let mut functionals = Vec::new();
    for &g in &cut.arrows {
        let gp = original.path_of(&[g])?;
        let mut values: Vec<(Path, Scalar)> = Vec::new();
        for (s, w) in e.supplements(original, &gp) {
            let mapped: Option<Vec<Arrow>> = s.arrows().iter().map(|a| quotient.forward[a.0]).collect();
            let Some(mapped) = mapped else { return Err(fail(original, g)) };
            let s = if mapped.is_empty() { s } else { bq.path_of(&mapped)? };
            match values.iter().find(|(p, _)| *p == s) {
                Some((_, v)) if *v != w => return Err(fail(original, g)),
                Some(_) => {}
                None => values.push((s, w)),
            }
        }
        if values.is_empty() {
            return Err(fail(original, g));
        }
        let (y, x) = (original.target(g), original.source(g));
        let value = |p: &Path| values.iter().find(|(q, _)| q == p).map_or(field.zero(), |(_, w)| w.clone());
        let mut f = linalg::zero_vector(field, b.dim());
        for i in b.block(y, x) {
            f[i] = value(&b.basis()[i]);
        }
        for p in nonzero.iter().filter(|p| p.source() == y && p.target() == x) {
            if linalg::dot(&f, &b.path_coords(p), field) != value(p) {
                return Err(fail(original, g));
            }
        }
        if values.iter().any(|(p, _)| !b.is_nonzero_path(p)) {
            return Err(fail(original, g));
        }
        functionals.push(f);
    }
    let socle = b.bimodule_socle();
    let first = || cut.arrows.first().map_or_else(|| Error::NoCorrespondence(String::new()), |&a| fail(original, a));
    if socle.len() != cut.arrows.len() {
        return Err(first());
    }
    let pairing: Vec<Vector> =
        functionals.iter().map(|f| socle.iter().map(|s| linalg::dot(f, &s.coords, field)).collect()).collect();
    let inv = linalg::invert(field, &pairing).ok_or_else(first)?;
    let mut pairs = Vec::new();
    for (d, &g) in cut.arrows.iter().enumerate() {
        let mut coords = linalg::zero_vector(field, b.dim());
        for (j, s) in socle.iter().enumerate() {
            linalg::axpy(&mut coords, &inv[j][d], &s.coords);
        }
        let (source, target) = (original.target(g), original.source(g));
        pairs.push((g, SocleElement { source, target, coords }));
    }
    let columns: Vec<Vector> = (0..b.dim()).map(|i| functionals.iter().map(|f| f[i].clone()).collect()).collect();
    let complement: Vec<Vector> = linalg::kernel(field, &columns);
    let new_socle: Vec<SocleElement> = pairs.iter().map(|(_, s)| s.clone()).collect();
    let basis = ExtendedBasis::new(b, &new_socle, complement)?;
    debug_assert!(basis.duals() == functionals.as_slice());
    Ok(Correspondence { pairs, functionals, basis })
}
