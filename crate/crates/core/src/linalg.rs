//! Dense exact linear algebra over a [`Field`].

use alloc::vec::Vec;

use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    alloc::vec![field.zero(); n]
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `v += c * w`.
pub fn axpy(v: &mut [Scalar], c: &Scalar, w: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x += &(c * y);
        }
    }
}

pub fn scale(v: &mut [Scalar], c: &Scalar) {
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x *= c;
        }
    }
}

pub fn dot(v: &[Scalar], w: &[Scalar], field: Field) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in v.iter().zip(w) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

fn first_nonzero(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// A subspace kept as a reduced row echelon basis; the pivot of each row is
/// its first nonzero entry and equals one.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<'a>(field: Field, ambient: usize, vs: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut s = Subspace::new(field, ambient);
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Rows ordered by pivot column.
    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result is zero at every pivot.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -&v[p];
                axpy(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        self.reduce(&mut v);
        let Some(p) = first_nonzero(&v) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        scale(&mut v, &inv);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// A basis of `self ∩ other`.
    pub fn intersection(&self, other: &Subspace) -> Vec<Vector> {
        let mut images: Vec<Vector> = self.rows.clone();
        images.extend(other.rows.iter().cloned());
        kernel(self.field, &images)
            .into_iter()
            .map(|c| {
                let mut v = zero_vector(self.field, self.ambient);
                for (k, row) in self.rows.iter().enumerate() {
                    axpy(&mut v, &c[k], row);
                }
                v
            })
            .collect()
    }
}

/// Incremental elimination that remembers how each reduced row was built
/// from the input vectors.
#[derive(Clone, Debug)]
pub struct Eliminator {
    field: Field,
    count: usize,
    rows: Vec<(usize, Vector, Vector)>,
}

impl Eliminator {
    pub fn new(field: Field) -> Self {
        Eliminator { field, count: 0, rows: Vec::new() }
    }

    fn reduce_with_combination(&self, v: &mut Vector, comb: &mut Vector) {
        for (p, row, rc) in &self.rows {
            if !v[*p].is_zero() {
                let c = -&v[*p];
                axpy(v, &c, row);
                for (i, x) in rc.iter().enumerate() {
                    if !x.is_zero() {
                        comb[i] += &(&c * x);
                    }
                }
            }
        }
    }

    /// Adds the next input vector. Returns a kernel vector when it depends
    /// on the previous ones.
    pub fn push(&mut self, v: Vector) -> Option<Vector> {
        let idx = self.count;
        self.count += 1;
        for (_, _, rc) in self.rows.iter_mut() {
            rc.push(self.field.zero());
        }
        let mut v = v;
        let mut comb = zero_vector(self.field, self.count);
        comb[idx] = self.field.one();
        self.reduce_with_combination(&mut v, &mut comb);
        match first_nonzero(&v) {
            None => Some(comb),
            Some(p) => {
                let inv = v[p].inverse().expect("nonzero pivot");
                scale(&mut v, &inv);
                scale(&mut comb, &inv);
                self.rows.push((p, v, comb));
                None
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coefficients `c` with `Σ c_i input_i = b`, if `b` is in the span.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        let mut v = b.to_vec();
        let mut comb = zero_vector(self.field, self.count);
        self.reduce_with_combination(&mut v, &mut comb);
        if !is_zero(&v) {
            return None;
        }
        comb.iter_mut().for_each(|x| *x = -&*x);
        Some(comb)
    }
}

/// A basis of `{c : Σ c_i v_i = 0}`.
pub fn kernel(field: Field, vs: &[Vector]) -> Vec<Vector> {
    let mut e = Eliminator::new(field);
    let mut out = Vec::new();
    for v in vs {
        if let Some(mut k) = e.push(v.clone()) {
            k.resize(vs.len(), field.zero());
            out.push(k);
        }
    }
    out
}

pub fn rank(field: Field, ambient: usize, vs: &[Vector]) -> usize {
    Subspace::spanned_by(field, ambient, vs).dim()
}

/// Reduced row echelon basis of the span of `vs`.
pub fn rref(field: Field, ambient: usize, vs: &[Vector]) -> Vec<Vector> {
    Subspace::spanned_by(field, ambient, vs).rows
}

/// Reduced row echelon basis where the pivot is the last nonzero entry.
pub fn rref_from_right(field: Field, ambient: usize, vs: &[Vector]) -> Vec<Vector> {
    let rev: Vec<Vector> = vs.iter().map(|v| v.iter().rev().cloned().collect()).collect();
    rref(field, ambient, &rev).into_iter().map(|v| v.into_iter().rev().collect()).collect()
}

/// Inverse of a square matrix given by rows, if it exists.
pub fn invert(field: Field, rows: &[Vector]) -> Option<Vec<Vector>> {
    let n = rows.len();
    let mut e = Eliminator::new(field);
    // columns of the inverse: solve Σ c_i row_i = unit_j over the rows.
    for r in rows {
        if e.push(r.clone()).is_some() {
            return None;
        }
    }
    let mut inv_t = Vec::with_capacity(n);
    for j in 0..n {
        let mut unit = zero_vector(field, n);
        unit[j] = field.one();
        inv_t.push(e.solve(&unit)?);
    }
    // inv_t[j] = c with c·rows = unit_j, i.e. row j of the inverse.
    Some(inv_t)
}
