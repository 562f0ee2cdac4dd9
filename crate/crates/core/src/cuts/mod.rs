//! Cuts and the decision procedures built on them.

mod detect;
mod matching;
mod partners;
mod split;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::path::{CycleClass, Element, Path};
use crate::presentation::Presentation;
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::scalar::Scalar;
use crate::Result;

pub use detect::{is_trivial_extension, SearchLimits, TrivExtWitness};
pub use matching::{presentation_match, PresentationMatch};
pub use partners::{wakamatsu_partners, PartnerReport};
pub use split::{canonical_section_split, socle_supplement_correspondence, Correspondence, SplitReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutKind {
    /// Relative to the elementary cycles of a trivial extension.
    Admissible,
    /// Relative to an arbitrary weighted cycle set.
    Allowable,
}

/// A set of arrows meeting every cycle of a set in exactly one arrow occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub arrows: Vec<Arrow>,
    pub kind: CutKind,
}

impl Cut {
    pub fn contains(&self, a: Arrow) -> bool {
        self.arrows.binary_search(&a).is_ok()
    }

    pub fn names<'q>(&self, quiver: &'q Quiver) -> Vec<&'q str> {
        self.arrows.iter().map(|&a| quiver.arrow_name(a)).collect()
    }
}

/// Cycles of `Q_A` with nonzero weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCycleSet {
    pub cycles: Vec<(CycleClass, Scalar)>,
}

impl WeightedCycleSet {
    pub fn classes(&self) -> impl Iterator<Item = &CycleClass> {
        self.cycles.iter().map(|(c, _)| c)
    }

    /// Supplements of `q` over all cycles, with the weight of the cycle.
    pub fn supplements(&self, quiver: &Quiver, q: &Path) -> Vec<(Path, Scalar)> {
        let mut out = Vec::new();
        for (c, w) in &self.cycles {
            for s in c.supplements(quiver, q) {
                out.push((s, w.clone()));
            }
        }
        out
    }
}

fn count(class: &CycleClass, chosen: &BTreeSet<Arrow>) -> usize {
    chosen.iter().map(|&a| class.multiplicity(a)).sum()
}

fn search(
    classes: &[&CycleClass],
    i: usize,
    chosen: &mut BTreeSet<Arrow>,
    banned: &mut BTreeSet<Arrow>,
    out: &mut Vec<Vec<Arrow>>,
) {
    if classes.iter().any(|c| count(c, chosen) > 1) {
        return;
    }
    let Some(c) = classes.get(i) else {
        out.push(chosen.iter().copied().collect());
        return;
    };
    if count(c, chosen) == 1 {
        search(classes, i + 1, chosen, banned, out);
        return;
    }
    let mut candidates: Vec<Arrow> = c.representative().arrows().to_vec();
    candidates.sort();
    candidates.dedup();
    candidates.retain(|&a| c.multiplicity(a) == 1);
    let mut newly_banned = Vec::new();
    for a in candidates {
        if banned.contains(&a) {
            continue;
        }
        chosen.insert(a);
        search(classes, i + 1, chosen, banned, out);
        chosen.remove(&a);
        banned.insert(a);
        newly_banned.push(a);
    }
    for a in newly_banned {
        banned.remove(&a);
    }
}

fn find_cuts<'a>(classes: impl IntoIterator<Item = &'a CycleClass>, kind: CutKind) -> Vec<Cut> {
    let mut classes: Vec<&CycleClass> = classes.into_iter().collect();
    classes.sort_by_key(|c| {
        let mut arrows = c.representative().arrows().to_vec();
        arrows.sort();
        arrows.dedup();
        (arrows.iter().filter(|&&a| c.multiplicity(a) == 1).count(), c.representative().clone())
    });
    let mut out = Vec::new();
    search(&classes, 0, &mut BTreeSet::new(), &mut BTreeSet::new(), &mut out);
    let key = |arrows: &Vec<Arrow>| {
        let mut k = arrows.clone();
        k.reverse();
        k
    };
    out.sort_by_key(|a| core::cmp::Reverse(key(a)));
    out.into_iter().map(|arrows| Cut { arrows, kind }).collect()
}

/// Arrow sets meeting each elementary cycle in exactly one occurrence.
/// The trivial cut comes first.
pub fn admissible_cuts<'a>(cycles: impl IntoIterator<Item = &'a CycleClass>) -> Vec<Cut> {
    find_cuts(cycles, CutKind::Admissible)
}

/// Arrow sets meeting each cycle of `e` in exactly one occurrence.
pub fn allowable_cuts(e: &WeightedCycleSet) -> Vec<Cut> {
    find_cuts(e.classes(), CutKind::Allowable)
}

/// `P` with the arrows of a cut removed, with the correspondence of arrows.
#[derive(Clone, Debug)]
pub struct CutQuotient {
    pub presentation: Presentation,
    /// Old arrow index to new arrow, `None` for cut arrows.
    pub forward: Vec<Option<Arrow>>,
    /// New arrow index to old arrow.
    pub back: Vec<Arrow>,
}

impl CutQuotient {
    pub fn new(p: &Presentation, cut: &Cut) -> Result<Self> {
        let old = p.quiver();
        let mut quiver = Quiver::new();
        for v in old.vertices() {
            quiver.add_vertex(old.vertex_name(v))?;
        }
        let mut forward = Vec::new();
        let mut back = Vec::new();
        for a in old.arrows() {
            if cut.contains(a) {
                forward.push(None);
            } else {
                let d = old.arrow_data(a);
                forward.push(Some(quiver.add_arrow(&d.name, d.source, d.target)?));
                back.push(a);
            }
        }
        let relations = p
            .relations()
            .iter()
            .map(|r| substitute(r, &quiver, |v| v, |a| forward[a.0].map(|b| (b, p.field().one()))))
            .collect();
        Ok(CutQuotient { presentation: Presentation::new(quiver, relations, p.field())?, forward, back })
    }

    /// An element of the quotient quiver as an element of the original quiver.
    pub fn lift(&self, u: &Element, original: &Quiver) -> Element {
        let one = self.presentation.field().one();
        substitute(u, original, |v| v, |a| Some((self.back[a.0], one.clone())))
    }
}

/// The presentation on the quiver without the cut arrows, with the cut
/// arrows set to zero in every relation.
pub fn cut_quotient(p: &Presentation, cut: &Cut) -> Result<Presentation> {
    Ok(CutQuotient::new(p, cut)?.presentation)
}

/// Replaces vertices and arrows; terms through an arrow mapped to `None` vanish.
pub(crate) fn substitute(
    u: &Element,
    target: &Quiver,
    vmap: impl Fn(Vertex) -> Vertex,
    amap: impl Fn(Arrow) -> Option<(Arrow, Scalar)>,
) -> Element {
    let mut out = Element::zero();
    'terms: for (p, c) in u.terms() {
        if p.is_stationary() {
            out.add_term(Path::stationary(vmap(p.source())), c.clone());
            continue;
        }
        let mut arrows = Vec::with_capacity(p.len());
        let mut coeff = c.clone();
        for &a in p.arrows() {
            let Some((b, s)) = amap(a) else { continue 'terms };
            coeff *= &s;
            arrows.push(b);
        }
        out.add_term(target.path_of(&arrows).expect("substitution respects endpoints"), coeff);
    }
    out
}
