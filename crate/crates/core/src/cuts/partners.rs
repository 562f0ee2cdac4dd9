//! Algebras sharing a trivial extension, from the admissible cuts of `T(A)`.

use alloc::vec::Vec;

use super::{admissible_cuts, canonical_section_split, socle_supplement_correspondence};
use super::{Cut, WeightedCycleSet};
use crate::fdalg::FdAlgebra;
use crate::linalg::{self, Subspace, Vector};
use crate::presentation::Presentation;
use crate::quiver::Arrow;
use crate::trivext::{ScAlgebra, TrivialExtension};
use crate::{Error, Result, DEFAULT_BOUND};

/// `A ≅ S ⋉ M` and `A' ≅ S ⋉ N` inside `T(A)`, with `N ≅ D(M)`.
///
/// Subspaces are given by bases of vectors in the monomial-and-dual basis of `T(A)`.
#[derive(Clone, Debug)]
pub struct PartnerReport {
    pub partner: Presentation,
    /// Arrows of `Q_T(A)`.
    pub cut: Cut,
    /// Arrows of `Q_A` generating `S` together with the idempotents.
    pub s_generators: Vec<Arrow>,
    pub s_basis: Vec<Vector>,
    pub m_basis: Vec<Vector>,
    pub n_basis: Vec<Vector>,
    /// `w(m)` for `w` in the basis of `N` and `m` in the basis of `M`.
    pub pairing: Vec<Vector>,
    pub a_dim: usize,
    pub partner_dim: usize,
    /// `S ∩ (M + N) = 0`.
    pub disjoint: bool,
    /// `S + M` is the copy of `A`.
    pub spans_a: bool,
    pub nondegenerate: bool,
}

impl PartnerReport {
    pub fn holds(&self) -> bool {
        self.disjoint
            && self.spans_a
            && self.nondegenerate
            && self.s_basis.len() + self.m_basis.len() == self.a_dim
            && self.s_basis.len() + self.n_basis.len() == self.partner_dim
            && self.m_basis.len() == self.n_basis.len()
    }
}

/// Span of the products of generators, starting from `seeds`.
fn closure(sc: &ScAlgebra, seeds: &[Vector], gens: &[Vector]) -> Subspace {
    let mut space = Subspace::new(sc.field(), sc.dim());
    let mut queue: Vec<Vector> = Vec::new();
    for v in seeds {
        if space.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = sc.mul(&v, g);
            if space.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    space
}

/// `S·X·S` for `S` spanned by `s`.
fn bimodule(sc: &ScAlgebra, s: &[Vector], x: &[Vector]) -> Subspace {
    let mut space = Subspace::new(sc.field(), sc.dim());
    for u in s {
        for g in x {
            let ug = sc.mul(u, g);
            for v in s {
                space.insert(sc.mul(&ug, v));
            }
        }
    }
    space
}

fn report(t: &TrivialExtension, cut: Cut, partner: &FdAlgebra) -> PartnerReport {
    let sc = t.sc();
    let tq = t.trivext_quiver();
    let field = t.field();
    let n = sc.half();
    let (mut s_generators, mut cut_a, mut free_betas) = (Vec::new(), Vec::new(), Vec::new());
    for x in tq.quiver.arrows() {
        match (tq.is_beta(x), cut.contains(x)) {
            (false, false) => s_generators.push(x),
            (false, true) => cut_a.push(t.arrow_image(x).clone()),
            (true, false) => free_betas.push(t.arrow_image(x).clone()),
            (true, true) => {}
        }
    }
    let idempotents: Vec<Vector> = tq.quiver.vertices().map(|v| sc.unit(sc.idempotent(v))).collect();
    let gens: Vec<Vector> = s_generators.iter().map(|&x| t.arrow_image(x).clone()).collect();
    let s = closure(sc, &idempotents, &gens);
    let m = bimodule(sc, s.rows(), &cut_a);
    let nn = bimodule(sc, s.rows(), &free_betas);
    let mut sum = m.clone();
    for v in nn.rows() {
        sum.insert(v.clone());
    }
    let disjoint = s.intersection(&sum).is_empty();
    let mut s_plus_m = s.clone();
    for v in m.rows() {
        s_plus_m.insert(v.clone());
    }
    let spans_a = s_plus_m.dim() == n && s_plus_m.rows().iter().all(|v| linalg::is_zero(&v[n..]));
    let pairing: Vec<Vector> =
        nn.rows().iter().map(|w| m.rows().iter().map(|v| linalg::dot(&w[n..], &v[..n], field)).collect()).collect();
    let nondegenerate = m.dim() == nn.dim() && linalg::rank(field, m.dim(), &pairing) == m.dim();
    PartnerReport {
        partner: partner.presentation().clone(),
        cut,
        s_generators,
        s_basis: s.rows().to_vec(),
        m_basis: m.rows().to_vec(),
        n_basis: nn.rows().to_vec(),
        pairing,
        a_dim: n,
        partner_dim: partner.dim(),
        disjoint,
        spans_a,
        nondegenerate,
    }
}

/// One report per admissible cut of `T(A)` whose quotient splits and pairs
/// the cut arrows with a socle basis.
pub fn wakamatsu_partners(a: &FdAlgebra) -> Result<Vec<PartnerReport>> {
    let t = TrivialExtension::new(a.clone());
    let t_fd = FdAlgebra::build(t.presentation()?, DEFAULT_BOUND)?;
    let e = WeightedCycleSet {
        cycles: t.elementary_cycles().iter().map(|c| (c.class.clone(), c.weight.clone())).collect(),
    };
    let mut out = Vec::new();
    for mut cut in admissible_cuts(e.classes()) {
        let split = canonical_section_split(&t_fd, &cut)?;
        if !split.split() {
            continue;
        }
        match socle_supplement_correspondence(&split.base, &split.quotient, t.quiver(), &cut, &e) {
            Ok(_) => {}
            Err(Error::NoCorrespondence(_)) | Err(Error::NotIndependent) => continue,
            Err(err) => return Err(err),
        }
        cut.kind = super::CutKind::Admissible;
        out.push(report(&t, cut, &split.base));
    }
    Ok(out)
}
