//! Paths, cycles up to rotation, and elements of the path algebra.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::quiver::{Arrow, Quiver, Vertex};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// A path in a quiver: a stationary path `e_x` or a composable arrow sequence.
///
/// Paths are ordered by length, then lexicographically by arrow index;
/// stationary paths are ordered by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: Vertex,
    target: Vertex,
    arrows: Vec<Arrow>,
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Path {
    pub fn stationary(v: Vertex) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub(crate) fn from_raw(source: Vertex, target: Vertex, arrows: Vec<Arrow>) -> Self {
        Path { source, target, arrows }
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_stationary(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.source == self.target
    }

    /// `pq`: first `self`, then `q`.
    pub fn compose(&self, q: &Path) -> Result<Path> {
        if self.target != q.source {
            return Err(Error::NotComposable);
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Ok(Path { source: self.source, target: q.target, arrows })
    }

    pub(crate) fn extend(&self, a: Arrow, target: Vertex) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path { source: self.source, target, arrows }
    }

    /// The subpath covering arrows `i..j`; stationary at the right vertex when `i == j`.
    pub fn subpath(&self, quiver: &Quiver, i: usize, j: usize) -> Path {
        let at = |k: usize| {
            if k == 0 {
                self.source
            } else {
                quiver.target(self.arrows[k - 1])
            }
        };
        if i == j {
            return Path::stationary(at(i));
        }
        Path { source: at(i), target: at(j), arrows: self.arrows[i..j].to_vec() }
    }

    /// Whether `q` occurs as a contiguous subpath. A stationary path occurs
    /// when its vertex lies on `self`.
    pub fn contains(&self, quiver: &Quiver, q: &Path) -> bool {
        if q.is_stationary() {
            return self.source == q.source || self.arrows.iter().any(|&a| quiver.target(a) == q.source);
        }
        self.arrows.windows(q.len()).any(|w| w == q.arrows.as_slice())
    }

    /// All distinct rotations of a cycle, starting with the cycle itself.
    pub fn rotations(&self, quiver: &Quiver) -> Result<Vec<Path>> {
        if !self.is_cycle() {
            return Err(Error::NotACycle);
        }
        if self.is_stationary() {
            return Ok(alloc::vec![self.clone()]);
        }
        let n = self.len();
        let mut out: Vec<Path> = Vec::with_capacity(n);
        for i in 0..n {
            let mut arrows = self.arrows[i..].to_vec();
            arrows.extend_from_slice(&self.arrows[..i]);
            let v = quiver.source(arrows[0]);
            let r = Path { source: v, target: v, arrows };
            if !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(out)
    }
}

/// A cycle up to rotation, represented by its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleClass {
    rep: Path,
}

impl CycleClass {
    pub fn new(quiver: &Quiver, cycle: &Path) -> Result<Self> {
        let rep = cycle.rotations(quiver)?.into_iter().min().expect("nonempty");
        Ok(CycleClass { rep })
    }

    pub fn representative(&self) -> &Path {
        &self.rep
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn rotations(&self, quiver: &Quiver) -> Vec<Path> {
        self.rep.rotations(quiver).expect("representative is a cycle")
    }

    /// Number of occurrences of `a` in the cycle.
    pub fn multiplicity(&self, a: Arrow) -> usize {
        self.rep.arrows.iter().filter(|&&b| b == a).count()
    }

    /// Every `p` such that `qp` is a rotation of the cycle.
    pub fn supplements(&self, quiver: &Quiver, q: &Path) -> Vec<Path> {
        let mut out: Vec<Path> = Vec::new();
        if q.len() > self.rep.len() {
            return out;
        }
        let n = self.rep.len();
        let starts = if n == 0 { 1 } else { n };
        for i in 0..starts {
            let rot = if n == 0 {
                self.rep.clone()
            } else {
                let mut arrows = self.rep.arrows[i..].to_vec();
                arrows.extend_from_slice(&self.rep.arrows[..i]);
                let v = quiver.source(arrows[0]);
                Path { source: v, target: v, arrows }
            };
            if rot.source == q.source && rot.arrows[..q.len()] == q.arrows[..] {
                let p = rot.subpath(quiver, q.len(), n);
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    /// The least supplement of `q` in the cycle.
    pub fn supplement(&self, quiver: &Quiver, q: &Path) -> Result<Path> {
        self.supplements(quiver, q).into_iter().next().ok_or(Error::NotASubpath)
    }

    /// Whether `q` is a contiguous subpath of some rotation.
    pub fn contains(&self, quiver: &Quiver, q: &Path) -> bool {
        !self.supplements(quiver, q).is_empty()
    }
}

/// A finite linear combination of paths with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Path, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn monomial(p: Path, c: Scalar) -> Self {
        let mut u = Element::zero();
        u.add_term(p, c);
        u
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending path order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl DoubleEndedIterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The largest path with its coefficient.
    pub fn tip(&self) -> Option<(&Path, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, p: &Path) -> Option<&Scalar> {
        self.terms.get(p)
    }

    pub fn max_len(&self) -> usize {
        self.tip().map_or(0, |(p, _)| p.len())
    }

    pub fn min_len(&self) -> usize {
        self.terms.keys().next().map_or(0, |p| p.len())
    }

    /// The common endpoints of all terms, if they agree.
    pub fn endpoints(&self) -> Option<(Vertex, Vertex)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let ends = (first.source(), first.target());
        it.all(|p| (p.source(), p.target()) == ends).then_some(ends)
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn pop_tip(&mut self) -> Option<(Path, Scalar)> {
        self.terms.pop_last()
    }

    pub(crate) fn insert_raw(&mut self, p: Path, c: Scalar) {
        self.terms.insert(p, c);
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(p, d)| (p.clone(), d * c)).collect() }
    }

    /// Scales so that the tip coefficient is one.
    pub fn monic(&self) -> Element {
        match self.tip() {
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero")),
            None => Element::zero(),
        }
    }

    /// Product in the path algebra; non-composable products vanish.
    pub fn multiply(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (p, c) in self.terms() {
            for (q, d) in other.terms() {
                if let Ok(pq) = p.compose(q) {
                    out.add_term(pq, c * d);
                }
            }
        }
        out
    }

    /// Applies `f` to every path, dropping terms mapped to `None`.
    pub fn map_paths(&self, mut f: impl FnMut(&Path) -> Option<Path>) -> Element {
        let mut out = Element::zero();
        for (p, c) in self.terms() {
            if let Some(q) = f(p) {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    /// Keeps the terms shorter than `len`.
    pub fn truncate(&self, len: usize) -> Element {
        Element {
            terms: self.terms.iter().filter(|(p, _)| p.len() < len).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }
}
