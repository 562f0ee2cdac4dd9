//! Checks of the generator description of `ker Φ` and of the basic
//! properties of `Φ` on elementary cycles.

use alloc::string::String;
use alloc::vec::Vec;

use super::TrivialExtension;
use crate::groebner::buchberger;
use crate::linalg::{self, Vector};
use crate::path::{Element, Path};
use crate::quiver::Vertex;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances examined.
    pub checked: usize,
    pub witness: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult { name, passed: true, checked: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(witness());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    /// Relations of `A`, non-contained paths, supplement condition,
    /// `I'_x ⊆ ker Φ`, and generation of `ker Φ`, in that order.
    pub items: [CheckResult; 5],
    pub quotient_dim: Option<usize>,
    pub expected_dim: usize,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }
}

impl TrivialExtension {
    fn fmt(&self, u: &Element) -> String {
        self.quiver().format_element(u)
    }

    fn fmt_path(&self, p: &Path) -> String {
        self.quiver().format_path(p)
    }

    /// Paths `p·a` with `p` contained and `p·a` not contained.
    pub fn minimal_uncontained_paths(&self) -> Vec<Path> {
        let q = self.quiver();
        let mut starts: Vec<Path> = self.contained_paths();
        starts.extend(q.vertices().filter(|v| !self.is_contained(&Path::stationary(*v))).map(Path::stationary));
        let mut out = Vec::new();
        for p in &starts {
            if !p.is_stationary() && !self.is_contained(p) {
                continue;
            }
            for a in q.arrows_from(p.target()) {
                let pa = p.extend(a, q.target(a));
                if !self.is_contained(&pa) {
                    out.push(pa);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Basis of the elements of `ker Φ` spanned by contained paths from `x` to `y`.
    pub fn contained_kernel(&self, x: Vertex, y: Vertex) -> Vec<Element> {
        let paths: Vec<Path> = self
            .contained_paths()
            .into_iter()
            .filter(|p| p.source() == x && p.target() == y && !p.is_stationary())
            .collect();
        let images: Vec<Vector> = paths.iter().map(|p| self.phi_path_vec(p)).collect();
        let ker = linalg::kernel(self.field(), &images);
        linalg::rref_from_right(self.field(), paths.len(), &ker)
            .into_iter()
            .map(|v| {
                let mut r = Element::zero();
                for (p, c) in paths.iter().zip(v) {
                    r.add_term(p.clone(), c);
                }
                r
            })
            .collect()
    }

    fn embed_relations(&self) -> Vec<Element> {
        // arrows of Q_A keep their indices in Q_T(A)
        self.algebra.presentation().relations().to_vec()
    }

    pub fn verify_relation_theorem(&self) -> Result<RelationReport> {
        let q = self.quiver();
        let mut item1 = CheckResult::new("relations of A lie in ker Phi");
        let relations = self.embed_relations();
        for r in &relations {
            item1.record(linalg::is_zero(&self.phi_vec(r)), || self.fmt(r));
        }

        let mut item2 = CheckResult::new("uncontained paths lie in ker Phi");
        let uncontained = self.minimal_uncontained_paths();
        for p in &uncontained {
            item2.record(linalg::is_zero(&self.phi_path_vec(p)), || self.fmt_path(p));
        }

        let mut item3 = CheckResult::new("supplement condition on contained kernel");
        let spaces: Vec<_> = q.vertices().map(|x| self.cycle_space(x)).collect();
        let mut kernel3 = Vec::new();
        for x in q.vertices() {
            for y in q.vertices() {
                for rho in self.contained_kernel(x, y) {
                    let mut supplements: Vec<Path> = Vec::new();
                    for p in rho.paths() {
                        supplements.extend(self.supplements(p).into_iter().map(|(_, s)| s));
                    }
                    supplements.sort();
                    supplements.dedup();
                    for s in &supplements {
                        let sm = Element::monomial(s.clone(), self.field().one());
                        let right = rho.multiply(&sm);
                        let left = sm.multiply(&rho);
                        let ok = spaces[x.0].contains(&right) || spaces[y.0].contains(&left);
                        item3.record(ok, || alloc::format!("{} with {}", self.fmt(&rho), self.fmt_path(s)));
                    }
                    kernel3.push(rho);
                }
            }
        }

        let mut item4 = CheckResult::new("I'_x lies in ker Phi");
        for x in q.vertices() {
            for g in self.i_prime_x(x) {
                item4.record(linalg::is_zero(&self.phi_vec(&g)), || self.fmt(&g));
            }
        }

        let mut item5 = CheckResult::new("generated ideal equals ker Phi");
        let one = self.field().one();
        let mut gens = relations;
        gens.extend(uncontained.iter().map(|p| Element::monomial(p.clone(), one.clone())));
        gens.extend(kernel3);
        let quotient_dim = match buchberger(q, &gens, self.nilpotency.max(2) + 1) {
            Ok(g) => Some(g.normal_monomials(q)?.len()),
            Err(_) => None,
        };
        item5.record(quotient_dim == Some(self.dim()), || match quotient_dim {
            Some(d) => alloc::format!("quotient dimension {d}"),
            None => String::from("completion not certified"),
        });

        Ok(RelationReport { items: [item1, item2, item3, item4, item5], quotient_dim, expected_dim: self.dim() })
    }

    /// Properties of `Φ` on paths and elementary cycles.
    pub fn cycle_properties(&self) -> [CheckResult; 5] {
        let q = self.quiver();
        let n = self.sc.half();
        let a = &self.algebra;

        let mut covered = CheckResult::new("nonzero paths of A are contained");
        for p in a.nonzero_paths() {
            covered.record(self.is_contained(&p), || self.fmt_path(&p));
        }

        let mut weight = CheckResult::new("phi2(C)(e) equals the weight");
        for c in &self.cycles {
            for r in c.class.rotations(q) {
                let e = a.index_of(&Path::stationary(r.source())).expect("e_x is normal");
                let img = self.phi_path_vec(&r);
                weight.record(img[n + e] == c.weight, || self.fmt_path(&r));
            }
        }

        let mut supp = CheckResult::new("phi2(q)(u) nonzero implies u supplements q");
        let mut nonzero = CheckResult::new("contained paths have nonzero image");
        for p in self.contained_paths() {
            let img = self.phi_path_vec(&p);
            nonzero.record(!linalg::is_zero(&img), || self.fmt_path(&p));
            let sups = self.supplements(&p);
            for (i, u) in a.basis().iter().enumerate() {
                if !img[n + i].is_zero() {
                    let ok = sups.iter().any(|(_, s)| s == u);
                    supp.record(ok, || alloc::format!("{} at {}", self.fmt_path(&p), self.fmt_path(u)));
                }
            }
        }

        let mut ends = CheckResult::new("C a1 and a_n C vanish");
        for c in &self.cycles {
            for r in c.class.rotations(q) {
                let arrows = r.arrows();
                let first = q.path_of(&arrows[..1]).expect("arrow");
                let last = q.path_of(&arrows[arrows.len() - 1..]).expect("arrow");
                for w in [r.compose(&first), last.compose(&r)] {
                    let w = w.expect("cycle composes");
                    ends.record(linalg::is_zero(&self.phi_path_vec(&w)), || self.fmt_path(&w));
                }
            }
        }
        [covered, weight, supp, nonzero, ends]
    }
}
