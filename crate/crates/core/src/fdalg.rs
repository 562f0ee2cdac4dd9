//! Finite-dimensional algebras given by an admissible presentation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::groebner::GroebnerBasis;
use crate::linalg::{self, Subspace, Vector};
use crate::path::{Element, Path};
use crate::presentation::Presentation;
use crate::quiver::{Quiver, Vertex};
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

/// `KQ/I` with its normal-monomial basis and multiplication table.
#[derive(Clone, Debug)]
pub struct FdAlgebra {
    presentation: Presentation,
    groebner: GroebnerBasis,
    basis: Vec<Path>,
    index: BTreeMap<Path, usize>,
    table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    nilpotency: usize,
}

/// An element of the two-sided socle, homogeneous from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleElement {
    pub source: Vertex,
    pub target: Vertex,
    /// Coordinates over the monomial basis.
    pub coords: Vector,
}

/// A basis of `A` whose first members are a socle basis `M`, together with
/// the dual functionals `p*` of the members of `M`.
#[derive(Clone, Debug)]
pub struct ExtendedBasis {
    vectors: Vec<Vector>,
    socle_len: usize,
    duals: Vec<Vector>,
}

impl FdAlgebra {
    pub fn build(presentation: Presentation, bound: usize) -> Result<Self> {
        if let Some(i) = presentation.inadmissible_relation() {
            return Err(Error::NotAdmissible(i));
        }
        let groebner = presentation.groebner(bound).map_err(|e| match e {
            Error::BoundExceeded(b) => Error::NotFiniteDimensional(b),
            e => e,
        })?;
        let quiver = presentation.quiver();
        let basis = groebner.normal_monomials(quiver)?;
        let index: BTreeMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let one = presentation.field().one();
        let mut table = BTreeMap::new();
        for (i, p) in basis.iter().enumerate() {
            for (j, q) in basis.iter().enumerate() {
                let Ok(pq) = p.compose(q) else { continue };
                let entry: Vec<(usize, Scalar)> = if let Some(&k) = index.get(&pq) {
                    alloc::vec![(k, one.clone())]
                } else {
                    let nf = groebner.normal_form(quiver, &Element::monomial(pq, one.clone()));
                    nf.terms().map(|(r, c)| (index[r], c.clone())).collect()
                };
                table.insert((i, j), entry);
            }
        }
        let mut a = FdAlgebra { presentation, groebner, basis, index, table, nilpotency: 0 };
        a.nilpotency = a.compute_nilpotency();
        Ok(a)
    }

    fn compute_nilpotency(&self) -> usize {
        let field = self.field();
        let arrows: Vec<Vector> = self
            .quiver()
            .arrows()
            .map(|a| {
                self.path_coords(&Path::from_raw(self.quiver().source(a), self.quiver().target(a), alloc::vec![a]))
            })
            .collect();
        let mut power: Vec<Vector> =
            self.basis.iter().enumerate().filter(|(_, p)| !p.is_stationary()).map(|(i, _)| self.unit(i)).collect();
        let mut k = 1;
        while !power.is_empty() {
            let mut next = Subspace::new(field, self.dim());
            for v in &power {
                for a in &arrows {
                    next.insert(self.mul(v, a));
                }
            }
            power = next.rows().to_vec();
            k += 1;
        }
        k
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    pub fn field(&self) -> Field {
        self.presentation.field()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.groebner
    }

    /// Normal monomials in path order.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Least `N` such that every product of `N` arrows vanishes.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of basis monomials from `x` to `y`.
    pub fn block(&self, x: Vertex, y: Vertex) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source() == x && self.basis[i].target() == y).collect()
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = linalg::zero_vector(self.field(), self.dim());
        v[i] = self.field().one();
        v
    }

    pub fn normal_form(&self, u: &Element) -> Element {
        self.groebner.normal_form(self.quiver(), u)
    }

    /// Coordinates of the class of `u` in the monomial basis.
    pub fn coords(&self, u: &Element) -> Vector {
        let mut v = linalg::zero_vector(self.field(), self.dim());
        for (p, c) in self.normal_form(u).terms() {
            v[self.index[p]] = c.clone();
        }
        v
    }

    pub fn path_coords(&self, p: &Path) -> Vector {
        if let Some(&i) = self.index.get(p) {
            return self.unit(i);
        }
        self.coords(&Element::monomial(p.clone(), self.field().one()))
    }

    /// Whether a path is nonzero in the algebra.
    pub fn is_nonzero_path(&self, p: &Path) -> bool {
        self.index.contains_key(p) || !self.normal_form(&Element::monomial(p.clone(), self.field().one())).is_zero()
    }

    /// Every path whose class is nonzero, in path order.
    pub fn nonzero_paths(&self) -> Vec<Path> {
        let q = self.quiver();
        let mut out = Vec::new();
        let mut layer: Vec<Path> = q.vertices().map(Path::stationary).collect();
        while !layer.is_empty() {
            out.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for p in &layer {
                for a in q.arrows_from(p.target()) {
                    let pa = p.extend(a, q.target(a));
                    if self.is_nonzero_path(&pa) {
                        next.push(pa);
                    }
                }
            }
            next.sort();
            layer = next;
        }
        out
    }

    /// The element with the given coordinates.
    pub fn element(&self, v: &[Scalar]) -> Element {
        let mut u = Element::zero();
        for (i, c) in v.iter().enumerate() {
            u.add_term(self.basis[i].clone(), c.clone());
        }
        u
    }

    /// Structure constants of `b_i * b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = linalg::zero_vector(self.field(), self.dim());
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.product(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    /// A basis of the elements killed by every arrow on both sides, in
    /// reduced row echelon form per block `(x, y)`.
    pub fn bimodule_socle(&self) -> Vec<SocleElement> {
        let q = self.quiver();
        let field = self.field();
        let arrows: Vec<(crate::quiver::Arrow, Vector)> = q
            .arrows()
            .map(|a| (a, self.path_coords(&Path::from_raw(q.source(a), q.target(a), alloc::vec![a]))))
            .collect();
        let mut out = Vec::new();
        for x in q.vertices() {
            for y in q.vertices() {
                let block = self.block(x, y);
                if block.is_empty() {
                    continue;
                }
                let images: Vec<Vector> = block
                    .iter()
                    .map(|&i| {
                        let b = self.unit(i);
                        let mut img = Vec::new();
                        for (a, av) in &arrows {
                            if q.target(*a) == x {
                                img.extend(self.mul(av, &b));
                            }
                            if q.source(*a) == y {
                                img.extend(self.mul(&b, av));
                            }
                        }
                        img
                    })
                    .collect();
                let kernel: Vec<Vector> = linalg::kernel(field, &images)
                    .into_iter()
                    .map(|c| {
                        let mut v = linalg::zero_vector(field, self.dim());
                        for (k, &i) in block.iter().enumerate() {
                            v[i] = c[k].clone();
                        }
                        v
                    })
                    .collect();
                for coords in linalg::rref(field, self.dim(), &kernel) {
                    out.push(SocleElement { source: x, target: y, coords });
                }
            }
        }
        out
    }

    /// Completes `socle` to a basis with monomials, in basis order.
    pub fn extend_basis(&self, socle: &[SocleElement]) -> Result<ExtendedBasis> {
        let mut span = Subspace::new(self.field(), self.dim());
        for s in socle {
            if !span.insert(s.coords.clone()) {
                return Err(Error::NotIndependent);
            }
        }
        let mut complement = Vec::new();
        for i in 0..self.dim() {
            let e = self.unit(i);
            if span.insert(e.clone()) {
                complement.push(e);
            }
        }
        ExtendedBasis::new(self, socle, complement)
    }

    /// `p*(a)` for the `j`-th member of the extended basis.
    pub fn dual_eval(&self, eb: &ExtendedBasis, j: usize, a: &Element) -> Scalar {
        linalg::dot(&eb.duals[j], &self.coords(a), self.field())
    }
}

impl SocleElement {
    pub fn element(&self, a: &FdAlgebra) -> Element {
        a.element(&self.coords)
    }
}

impl ExtendedBasis {
    /// The basis `socle ++ complement`; fails unless it is a basis of `A`.
    pub fn new(a: &FdAlgebra, socle: &[SocleElement], complement: Vec<Vector>) -> Result<Self> {
        let mut vectors: Vec<Vector> = socle.iter().map(|s| s.coords.clone()).collect();
        vectors.extend(complement);
        if vectors.len() != a.dim() {
            return Err(Error::NotIndependent);
        }
        let inv = linalg::invert(a.field(), &vectors).ok_or(Error::NotIndependent)?;
        let duals = (0..socle.len()).map(|j| inv.iter().map(|row| row[j].clone()).collect()).collect();
        Ok(ExtendedBasis { vectors, socle_len: socle.len(), duals })
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn socle_len(&self) -> usize {
        self.socle_len
    }

    /// Values `p_j*(m_k)` of the `j`-th dual functional on the monomial basis.
    pub fn dual(&self, j: usize) -> &Vector {
        &self.duals[j]
    }

    pub fn duals(&self) -> &[Vector] {
        &self.duals
    }
}
