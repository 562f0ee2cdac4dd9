//! Elementary cycles, containment, and the ideals `I'_x`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::TrivialExtension;
use crate::linalg::{self, Subspace, Vector};
use crate::path::{CycleClass, Element, Path};
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::scalar::Scalar;

/// A cycle `q·β_p` with `p*(q) ≠ 0`, stored once per rotation class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryCycle {
    /// The path `q` of `Q_A`, possibly stationary.
    pub a_part: Path,
    pub beta: Arrow,
    pub socle_index: usize,
    /// `ω = p*(q)`.
    pub weight: Scalar,
    pub class: CycleClass,
}

impl ElementaryCycle {
    /// The rotation ending with `β_p`.
    pub fn cycle(&self) -> Path {
        let q = &self.a_part;
        let mut arrows = q.arrows().to_vec();
        arrows.push(self.beta);
        Path::from_raw(q.source(), q.source(), arrows)
    }
}

/// Containment data for a list of weighted cycles.
#[derive(Clone, Debug, Default)]
pub(crate) struct Containment {
    subpaths: BTreeSet<Vec<Arrow>>,
    vertices: BTreeSet<Vertex>,
}

impl Containment {
    pub(crate) fn new<'a>(quiver: &Quiver, classes: impl IntoIterator<Item = &'a CycleClass>) -> Self {
        let mut c = Containment::default();
        for class in classes {
            for rot in class.rotations(quiver) {
                c.vertices.insert(rot.source());
                let arrows = rot.arrows();
                for i in 0..arrows.len() {
                    for j in i + 1..=arrows.len() {
                        c.subpaths.insert(arrows[i..j].to_vec());
                    }
                }
            }
        }
        c
    }

    /// Contained paths of positive length, in path order.
    pub(crate) fn paths(&self, quiver: &Quiver) -> Vec<Path> {
        let mut out: Vec<Path> = self.subpaths.iter().map(|a| quiver.path_of(a).expect("subpath of a cycle")).collect();
        out.sort();
        out
    }

    pub(crate) fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub(crate) fn contains(&self, p: &Path) -> bool {
        if p.is_stationary() {
            self.vertices.contains(&p.source())
        } else {
            self.subpaths.contains(p.arrows())
        }
    }
}

pub(super) fn find_cycles(t: &TrivialExtension) -> Vec<ElementaryCycle> {
    let a = &t.algebra;
    let q = t.quiver();
    let nonzero = a.nonzero_paths();
    let mut out: BTreeMap<CycleClass, ElementaryCycle> = BTreeMap::new();
    for (j, p) in t.socle.iter().enumerate() {
        let beta = t.quiver.betas[j];
        let dual = t.basis.dual(j);
        for path in nonzero.iter().filter(|r| r.source() == p.source && r.target() == p.target) {
            let weight = linalg::dot(dual, &a.path_coords(path), a.field());
            if weight.is_zero() {
                continue;
            }
            let mut arrows = path.arrows().to_vec();
            arrows.push(beta);
            let cycle = Path::from_raw(p.source, p.source, arrows);
            let class = CycleClass::new(q, &cycle).expect("closed by construction");
            out.entry(class.clone()).or_insert(ElementaryCycle {
                a_part: path.clone(),
                beta,
                socle_index: j,
                weight,
                class,
            });
        }
    }
    out.into_values().collect()
}

/// Contained cycles at one vertex and the image of `I'_x` among them.
#[derive(Clone, Debug)]
pub(crate) struct CycleSpace {
    coords: BTreeMap<Path, usize>,
    span: Subspace,
}

impl CycleSpace {
    /// Whether a combination of cycles at the vertex lies in `I'_x`.
    pub(crate) fn contains(&self, z: &Element) -> bool {
        let mut v = linalg::zero_vector(self.span.field(), self.coords.len());
        for (p, c) in z.terms() {
            if let Some(&i) = self.coords.get(p) {
                v[i] = c.clone();
            }
        }
        self.span.contains(&v)
    }
}

impl TrivialExtension {
    /// Elementary cycles, one per rotation class, in class order.
    pub fn elementary_cycles(&self) -> &[ElementaryCycle] {
        &self.cycles
    }

    /// Whether `p` is a contiguous subpath of a rotation of an elementary cycle.
    pub fn is_contained(&self, p: &Path) -> bool {
        self.containment.contains(p)
    }

    /// Contained paths, stationary ones first, then in path order.
    pub fn contained_paths(&self) -> Vec<Path> {
        let mut out: Vec<Path> = self.containment.vertices().map(Path::stationary).collect();
        out.extend(self.containment.paths(self.quiver()));
        out
    }

    /// Supplements of `q` across all elementary cycles, with the cycle index.
    pub fn supplements(&self, q: &Path) -> Vec<(usize, Path)> {
        let mut out = Vec::new();
        for (i, c) in self.cycles.iter().enumerate() {
            for s in c.class.supplements(self.quiver(), q) {
                out.push((i, s));
            }
        }
        out
    }

    /// Rotations of elementary cycles based at `x`, with their weights.
    pub fn rotations_at(&self, x: Vertex) -> Vec<(Path, Scalar)> {
        let mut out: Vec<(Path, Scalar)> = Vec::new();
        for c in &self.cycles {
            for r in c.class.rotations(self.quiver()) {
                if r.source() == x {
                    out.push((r, c.weight.clone()));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// All cycles at `x` of length between 1 and `max_len`.
    fn cycles_at(&self, x: Vertex, max_len: usize) -> Vec<Path> {
        self.quiver().enumerate_paths(x, x, max_len).into_iter().filter(|p| !p.is_stationary()).collect()
    }

    fn weight_differences(&self, x: Vertex) -> Vec<Element> {
        let rots = self.rotations_at(x);
        let mut out = Vec::new();
        if let Some((r0, w0)) = rots.first() {
            for (r, w) in &rots[1..] {
                let mut d = Element::monomial(r0.clone(), w.clone());
                d.add_term(r.clone(), -w0);
                out.push(d);
            }
        }
        out
    }

    /// Generators of `I'_x`: cycles at `x` up to length `N_T` that are not
    /// contained in an elementary cycle, then weighted differences
    /// `ω(C_k)C_0 − ω(C_0)C_k` of elementary-cycle rotations at `x`.
    pub fn i_prime_x(&self, x: Vertex) -> Vec<Element> {
        let one = self.field().one();
        let mut out: Vec<Element> = self
            .cycles_at(x, self.nilpotency)
            .into_iter()
            .filter(|p| !self.is_contained(p))
            .map(|p| Element::monomial(p, one.clone()))
            .collect();
        out.extend(self.weight_differences(x));
        out
    }

    pub(crate) fn cycle_space(&self, x: Vertex) -> CycleSpace {
        let max = self.cycles.iter().map(|c| c.class.len()).max().unwrap_or(0);
        let mut contained: Vec<Path> = alloc::vec![Path::stationary(x)];
        contained.extend(self.cycles_at(x, max).into_iter().filter(|p| self.is_contained(p)));
        let coords: BTreeMap<Path, usize> = contained.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let field = self.field();
        let mut span = Subspace::new(field, coords.len());
        'fill: for d in self.weight_differences(x) {
            let room = max.saturating_sub(d.min_len());
            for u in contained.iter().filter(|u| u.len() <= room) {
                for v in contained.iter().filter(|v| u.len() + v.len() <= room) {
                    let mut hits = Vec::new();
                    for (r, c) in d.terms() {
                        let urv = u.compose(r).and_then(|ur| ur.compose(v)).expect("cycles at x");
                        if let Some(&i) = coords.get(&urv) {
                            hits.push((i, c));
                        }
                    }
                    if hits.is_empty() {
                        continue;
                    }
                    let mut w: Vector = linalg::zero_vector(field, coords.len());
                    for (i, c) in hits {
                        w[i] += c;
                    }
                    span.insert(w);
                    if span.dim() == coords.len() {
                        break 'fill;
                    }
                }
            }
        }
        CycleSpace { coords, span }
    }
}
