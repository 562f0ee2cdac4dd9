//! The trivial extension `T(A) = A ⋉ D(A)`: as a structure-constant algebra,
//! through the quiver `Q_T(A)`, and by a presentation computed as `ker Φ`.

mod cycles;
mod form;
mod presentation;
mod verify;

use alloc::string::String;
use alloc::vec::Vec;

use crate::fdalg::{ExtendedBasis, FdAlgebra, SocleElement};
use crate::linalg::{self, Subspace, Vector};
use crate::path::{Element, Path};
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::scalar::{Field, Scalar};
use crate::Result;

pub(crate) use cycles::Containment;
pub use cycles::ElementaryCycle;
pub use form::{symmetric_form, FormReport};
pub use presentation::{trivext_presentation, trivext_presentation_with};
pub use verify::{CheckResult, RelationReport};

/// Basis labels of `T(A)`: monomials of `A` followed by their dual functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScLabel {
    Monomial(Path),
    Dual(Path),
}

/// `A ⊕ D(A)` with multiplication `(a, f)(b, g) = (ab, a·g + f·b)`.
#[derive(Clone, Debug)]
pub struct ScAlgebra {
    field: Field,
    n: usize,
    labels: Vec<ScLabel>,
    table: Vec<Vec<(usize, Scalar)>>,
    idempotents: Vec<usize>,
}

impl ScAlgebra {
    pub fn new(a: &FdAlgebra) -> Self {
        let n = a.dim();
        let m = 2 * n;
        let mut table: Vec<Vec<(usize, Scalar)>> = alloc::vec![Vec::new(); m * m];
        let mut push = |i: usize, j: usize, k: usize, c: &Scalar| {
            let entry = &mut table[i * m + j];
            match entry.iter_mut().find(|(l, _)| *l == k) {
                Some((_, d)) => *d += c,
                None => entry.push((k, c.clone())),
            }
        };
        for i in 0..n {
            for k in 0..n {
                for (l, c) in a.product(i, k) {
                    // m_i m_k = Σ c^l_ik m_l
                    push(i, k, *l, c);
                    // (f_l m_i)(m_k) = f_l(m_i m_k)
                    push(n + l, i, n + k, c);
                    // (m_k f_l)(m_i) = f_l(m_i m_k)
                    push(k, n + l, n + i, c);
                }
            }
        }
        for entry in table.iter_mut() {
            entry.retain(|(_, c)| !c.is_zero());
            entry.sort_by_key(|(k, _)| *k);
        }
        let mut labels: Vec<ScLabel> = a.basis().iter().cloned().map(ScLabel::Monomial).collect();
        labels.extend(a.basis().iter().cloned().map(ScLabel::Dual));
        let idempotents =
            a.quiver().vertices().map(|v| a.index_of(&Path::stationary(v)).expect("e_x is normal")).collect();
        ScAlgebra { field: a.field(), n, labels, table, idempotents }
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// Dimension of the algebra part.
    pub fn half(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[ScLabel] {
        &self.labels
    }

    pub fn idempotent(&self, v: Vertex) -> usize {
        self.idempotents[v.0]
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = linalg::zero_vector(self.field, self.dim());
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let m = self.dim();
        let mut out = linalg::zero_vector(self.field, m);
        let vs: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, y)| !y.is_zero()).collect();
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(j, y) in &vs {
                let entry = &self.table[i * m + j];
                if entry.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in entry {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }
}

/// `Q_T(A)`: the quiver of `A` with one new arrow `β_p: t(p) → s(p)` per socle element.
#[derive(Clone, Debug)]
pub struct TrivExtQuiver {
    pub quiver: Quiver,
    /// Number of arrows inherited from `Q_A`; they keep their indices.
    pub inherited: usize,
    pub betas: Vec<Arrow>,
}

impl TrivExtQuiver {
    pub fn new(a: &FdAlgebra, socle: &[SocleElement], names: Option<&[String]>) -> Result<Self> {
        let mut quiver = a.quiver().clone();
        let mut betas = Vec::new();
        for (j, p) in socle.iter().enumerate() {
            let name = match names {
                Some(ns) => ns[j].clone(),
                None => {
                    let mut name = alloc::format!("beta{}", j + 1);
                    while quiver.arrow(&name).is_some() {
                        name.push('_');
                    }
                    name
                }
            };
            betas.push(quiver.add_arrow(&name, p.target, p.source)?);
        }
        Ok(TrivExtQuiver { quiver, inherited: a.quiver().arrow_count(), betas })
    }

    pub fn is_beta(&self, a: Arrow) -> bool {
        a.0 >= self.inherited
    }

    /// Index into the socle basis of a new arrow.
    pub fn beta_index(&self, a: Arrow) -> Option<usize> {
        self.is_beta(a).then(|| a.0 - self.inherited)
    }
}

/// `Φ(u) = (φ₁(u), φ₂(u))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImage {
    /// Coordinates over the monomial basis of `A`.
    pub algebra_part: Vector,
    /// Values of the functional on the monomial basis of `A`.
    pub dual_part: Vector,
}

/// `T(A)` together with the data used to build it.
#[derive(Clone, Debug)]
pub struct TrivialExtension {
    algebra: FdAlgebra,
    socle: Vec<SocleElement>,
    basis: ExtendedBasis,
    sc: ScAlgebra,
    quiver: TrivExtQuiver,
    images: Vec<Vector>,
    nilpotency: usize,
    cycles: Vec<ElementaryCycle>,
    containment: cycles::Containment,
}

impl TrivialExtension {
    /// Uses the echelon socle basis and the greedy monomial completion.
    pub fn new(algebra: FdAlgebra) -> Self {
        let socle = algebra.bimodule_socle();
        let basis = algebra.extend_basis(&socle).expect("socle basis is independent");
        Self::with_basis(algebra, socle, basis, None).expect("canonical data is consistent")
    }

    /// Uses a given socle basis, extended basis and optional names for the new arrows.
    pub fn with_basis(
        algebra: FdAlgebra,
        socle: Vec<SocleElement>,
        basis: ExtendedBasis,
        names: Option<&[String]>,
    ) -> Result<Self> {
        let sc = ScAlgebra::new(&algebra);
        let quiver = TrivExtQuiver::new(&algebra, &socle, names)?;
        let n = algebra.dim();
        let field = algebra.field();
        let images: Vec<Vector> = quiver
            .quiver
            .arrows()
            .map(|a| match quiver.beta_index(a) {
                None => {
                    let p = Path::from_raw(quiver.quiver.source(a), quiver.quiver.target(a), alloc::vec![a]);
                    let mut v = algebra.path_coords(&p);
                    v.resize(2 * n, field.zero());
                    v
                }
                Some(j) => {
                    let mut v = linalg::zero_vector(field, n);
                    v.extend(basis.dual(j).iter().cloned());
                    v
                }
            })
            .collect();
        let mut t = TrivialExtension {
            algebra,
            socle,
            basis,
            sc,
            quiver,
            images,
            nilpotency: 0,
            cycles: Vec::new(),
            containment: Default::default(),
        };
        t.nilpotency = t.compute_nilpotency();
        t.cycles = cycles::find_cycles(&t);
        t.containment = cycles::Containment::new(t.quiver(), t.cycles.iter().map(|c| &c.class));
        Ok(t)
    }

    fn compute_nilpotency(&self) -> usize {
        let mut power: Vec<Vector> = Subspace::spanned_by(self.field(), self.sc.dim(), &self.images).rows().to_vec();
        let mut k = 1;
        while !power.is_empty() {
            let mut next = Subspace::new(self.field(), self.sc.dim());
            for v in &power {
                for g in &self.images {
                    next.insert(self.sc.mul(v, g));
                }
            }
            power = next.rows().to_vec();
            k += 1;
        }
        k
    }

    pub fn algebra(&self) -> &FdAlgebra {
        &self.algebra
    }

    pub fn socle(&self) -> &[SocleElement] {
        &self.socle
    }

    pub fn extended_basis(&self) -> &ExtendedBasis {
        &self.basis
    }

    pub fn sc(&self) -> &ScAlgebra {
        &self.sc
    }

    pub fn trivext_quiver(&self) -> &TrivExtQuiver {
        &self.quiver
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver.quiver
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    /// Least `N` such that every path of length `N` in `Q_T(A)` maps to zero.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    /// `Φ` of an arrow of `Q_T(A)` as a vector of `T(A)`.
    pub fn arrow_image(&self, a: Arrow) -> &Vector {
        &self.images[a.0]
    }

    pub fn phi_path_vec(&self, p: &Path) -> Vector {
        let mut v = self.sc.unit(self.sc.idempotent(p.source()));
        for &a in p.arrows() {
            v = self.sc.mul(&v, &self.images[a.0]);
        }
        v
    }

    pub fn phi_vec(&self, u: &Element) -> Vector {
        let mut out = linalg::zero_vector(self.field(), self.sc.dim());
        for (p, c) in u.terms() {
            linalg::axpy(&mut out, c, &self.phi_path_vec(p));
        }
        out
    }

    pub fn split(&self, v: &[Scalar]) -> PhiImage {
        let n = self.sc.half();
        PhiImage { algebra_part: v[..n].to_vec(), dual_part: v[n..].to_vec() }
    }

    pub fn phi(&self, u: &Element) -> PhiImage {
        self.split(&self.phi_vec(u))
    }

    pub fn phi_path(&self, p: &Path) -> PhiImage {
        self.split(&self.phi_path_vec(p))
    }
}

/// `T(A)` as a structure-constant algebra.
pub fn trivext_algebra(a: &FdAlgebra) -> ScAlgebra {
    ScAlgebra::new(a)
}

/// `Q_T(A)` for the socle basis `m`.
pub fn trivext_quiver(a: &FdAlgebra, m: &[SocleElement]) -> Result<TrivExtQuiver> {
    TrivExtQuiver::new(a, m, None)
}
