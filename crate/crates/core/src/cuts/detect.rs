//! Deciding whether a presentation is a trivial extension.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{allowable_cuts, canonical_section_split, socle_supplement_correspondence, substitute};
use super::{Correspondence, Cut, WeightedCycleSet};
use crate::fdalg::FdAlgebra;
use crate::groebner::{buchberger, ideal_equal};
use crate::linalg::Vector;
use crate::path::{CycleClass, Path};
use crate::presentation::Presentation;
use crate::quiver::{Arrow, Quiver};
use crate::scalar::Scalar;
use crate::trivext::{Containment, TrivialExtension};
use crate::{Error, Result, DEFAULT_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_cuts: usize,
    /// Candidate arrow bijections tried by `presentation_match`.
    pub max_matches: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_cuts: 10_000, max_matches: 100_000 }
    }
}

/// `P ≅ T(B)` with `B = P/⟨D⟩`.
#[derive(Clone, Debug)]
pub struct TrivExtWitness {
    pub base: Presentation,
    pub cut: Cut,
    pub cycles: WeightedCycleSet,
    pub correspondence: Correspondence,
    /// Cut arrow of `P` and the arrow of `Q_T(B)` standing for it.
    pub betas: Vec<(Arrow, Arrow)>,
    /// Presentation of `T(B)` with the new arrows named after the cut.
    pub reconstruction: Presentation,
}

fn in_socle(a: &FdAlgebra, p: &Path) -> bool {
    let q = a.quiver();
    let right = q.arrows_from(p.target()).all(|b| !a.is_nonzero_path(&p.extend(b, q.target(b))));
    let left = q.arrows().filter(|&b| q.target(b) == p.source()).all(|b| {
        let mut arrows = alloc::vec![b];
        arrows.extend_from_slice(p.arrows());
        !a.is_nonzero_path(&q.path_of(&arrows).expect("composable"))
    });
    right && left
}

/// Cycle classes all of whose rotations are nonzero and killed by every arrow.
fn socle_cycles(a: &FdAlgebra) -> Vec<CycleClass> {
    let q = a.quiver();
    let mut out = BTreeSet::new();
    for p in a.nonzero_paths() {
        if p.is_stationary() || !p.is_cycle() || !in_socle(a, &p) {
            continue;
        }
        let class = CycleClass::new(q, &p).expect("closed");
        if class.rotations(q).iter().all(|r| a.is_nonzero_path(r) && in_socle(a, r)) {
            out.insert(class);
        }
    }
    out.into_iter().collect()
}

/// `c` with `v = c·w`, if any.
fn ratio(v: &[Scalar], w: &[Scalar]) -> Option<Scalar> {
    let i = w.iter().position(|x| !x.is_zero())?;
    let c = &v[i] * &w[i].inverse()?;
    let cw: Vector = w.iter().map(|x| &c * x).collect();
    (cw.as_slice() == v).then_some(c)
}

/// Weights making the rotations at each vertex agree with the weights, that
/// is `r ↦ r/ω(C)` constant at each vertex. `None` if the rotations at some
/// vertex are not proportional.
fn weights(a: &FdAlgebra, classes: &[CycleClass]) -> Option<Vec<Scalar>> {
    let q = a.quiver();
    let mut at: Vec<Vec<(usize, Vector)>> = alloc::vec![Vec::new(); q.vertex_count()];
    for (i, c) in classes.iter().enumerate() {
        for r in c.rotations(q) {
            at[r.source().0].push((i, a.path_coords(&r)));
        }
    }
    let mut w: Vec<Option<Scalar>> = alloc::vec![None; classes.len()];
    while let Some(start) = w.iter().position(Option::is_none) {
        w[start] = Some(a.field().one());
        let mut changed = true;
        while changed {
            changed = false;
            for rots in &at {
                let Some((i0, v0)) = rots.iter().find(|(i, _)| w[*i].is_some()) else { continue };
                let w0 = w[*i0].clone().expect("assigned");
                for (i, v) in rots {
                    let expected = &ratio(v, v0)? * &w0;
                    match &w[*i] {
                        Some(x) if *x != expected => return None,
                        Some(_) => {}
                        None => {
                            w[*i] = Some(expected);
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    w.into_iter().collect()
}

/// The cycles whose rotations are nonzero paths in the socle, weighted so
/// that rotations at a common vertex are proportional by their weights.
/// `None` unless every nonzero path lies on one of them.
pub fn distinguished_candidate(a: &FdAlgebra) -> Option<WeightedCycleSet> {
    let classes = socle_cycles(a);
    if classes.is_empty() {
        return None;
    }
    let w = weights(a, &classes)?;
    let contained = Containment::new(a.quiver(), classes.iter());
    if !a.nonzero_paths().iter().all(|p| contained.contains(p)) {
        return None;
    }
    Some(WeightedCycleSet { cycles: classes.into_iter().zip(w).collect() })
}

fn by_name(from: &Quiver, to: &Quiver, a: Arrow) -> Option<Arrow> {
    to.arrow(from.arrow_name(a))
}

/// Searches allowable cuts of the candidate cycles for one whose quotient
/// `B` splits, pairs the cut arrows with a socle basis of `B`, and gives back
/// `P` as `T(B)`.
pub fn is_trivial_extension(p: &Presentation, limits: &SearchLimits) -> Result<Option<TrivExtWitness>> {
    let a = FdAlgebra::build(p.clone(), DEFAULT_BOUND)?;
    let Some(e) = distinguished_candidate(&a) else { return Ok(None) };
    let cuts = allowable_cuts(&e);
    if cuts.len() > limits.max_cuts {
        return Err(Error::SearchBoundExceeded("allowable cuts"));
    }
    let q = a.quiver();
    for cut in cuts {
        let split = canonical_section_split(&a, &cut)?;
        if !split.split() {
            continue;
        }
        let correspondence = match socle_supplement_correspondence(&split.base, &split.quotient, q, &cut, &e) {
            Ok(c) => c,
            Err(Error::NoCorrespondence(_)) | Err(Error::NotIndependent) => continue,
            Err(err) => return Err(err),
        };
        let names: Vec<String> = correspondence.pairs.iter().map(|(g, _)| q.arrow_name(*g).into()).collect();
        let t = TrivialExtension::with_basis(
            split.base.clone(),
            correspondence.socle(),
            correspondence.basis.clone(),
            Some(&names),
        )?;
        let tq = t.quiver();
        let Some(amap): Option<Vec<Arrow>> = q.arrows().map(|x| by_name(q, tq, x)).collect() else { continue };
        let one = a.field().one();
        let moved: Vec<_> =
            p.relations().iter().map(|r| substitute(r, tq, |v| v, |x| Some((amap[x.0], one.clone())))).collect();
        let g = buchberger(tq, &moved, DEFAULT_BOUND)?;
        if !ideal_equal(&g, &t.kernel_groebner()?)? {
            continue;
        }
        let betas = cut.arrows.iter().map(|&x| (x, amap[x.0])).collect();
        return Ok(Some(TrivExtWitness {
            base: split.base.presentation().clone(),
            reconstruction: t.presentation()?,
            cut,
            cycles: e,
            correspondence,
            betas,
        }));
    }
    Ok(None)
}
