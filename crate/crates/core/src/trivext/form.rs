//! The bilinear form `⟨(a,f),(b,g)⟩ = f(b) + g(a)` on `T(A)`.

use alloc::vec::Vec;

use super::ScAlgebra;
use crate::linalg::{self, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub symmetric: bool,
    pub associative: bool,
    pub nondegenerate: bool,
    pub rank: usize,
    pub dim: usize,
}

impl FormReport {
    pub fn passed(&self) -> bool {
        self.symmetric && self.associative && self.nondegenerate
    }
}

impl ScAlgebra {
    fn pairing(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let n = self.half();
        let f = self.field();
        let mut s = linalg::dot(&u[n..], &v[..n], f);
        s += &linalg::dot(&v[n..], &u[..n], f);
        s
    }

    /// Gram matrix of the form on the basis of labels.
    pub fn gram(&self) -> Vec<Vector> {
        let m = self.dim();
        let units: Vec<Vector> = (0..m).map(|i| self.unit(i)).collect();
        units.iter().map(|u| units.iter().map(|v| self.pairing(u, v)).collect()).collect()
    }

    pub fn symmetric_form(&self) -> FormReport {
        let m = self.dim();
        let g = self.gram();
        let symmetric = (0..m).all(|i| (0..m).all(|j| g[i][j] == g[j][i]));
        let f = self.field();
        let apply = |entry: &[(usize, Scalar)], col: usize| -> Scalar {
            let mut s = f.zero();
            for (k, c) in entry {
                s += &(c * &g[*k][col]);
            }
            s
        };
        let mut associative = true;
        'outer: for (i, gi) in g.iter().enumerate() {
            for j in 0..m {
                let ij = self.product(i, j);
                for k in 0..m {
                    let lhs = apply(ij, k);
                    let jk = self.product(j, k);
                    let mut rhs = f.zero();
                    for (l, c) in jk {
                        rhs += &(c * &gi[*l]);
                    }
                    if lhs != rhs {
                        associative = false;
                        break 'outer;
                    }
                }
            }
        }
        let rank = linalg::rank(f, m, &g);
        FormReport { symmetric, associative, nondegenerate: rank == m, rank, dim: m }
    }
}

/// The form report for `T`.
pub fn symmetric_form(t: &ScAlgebra) -> FormReport {
    t.symmetric_form()
}
