//! Matching presentations up to renaming vertices and arrows and rescaling arrows.

use alloc::vec::Vec;

use super::{substitute, SearchLimits};
use crate::fdalg::FdAlgebra;
use crate::groebner::{buchberger, ideal_equal, GroebnerBasis};
use crate::path::Element;
use crate::presentation::Presentation;
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::scalar::{Field, Scalar};
use crate::{Error, Result, DEFAULT_BOUND};

/// `vertices[x]` and `arrows[a]` are the images of the vertices and arrows
/// of the first presentation; arrow `a` is sent to `scales[a]·arrows[a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatch {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    pub scales: Vec<Scalar>,
}

struct Shape {
    arrows: Vec<Vec<usize>>,
    cartan: Vec<Vec<usize>>,
}

impl Shape {
    fn new(a: &FdAlgebra) -> Self {
        let q = a.quiver();
        let n = q.vertex_count();
        let mut arrows = alloc::vec![alloc::vec![0; n]; n];
        for x in q.arrows() {
            arrows[q.source(x).0][q.target(x).0] += 1;
        }
        let cartan = (0..n).map(|x| (0..n).map(|y| a.block(Vertex(x), Vertex(y)).len()).collect()).collect();
        Shape { arrows, cartan }
    }

    fn agrees(&self, other: &Shape, i: usize, j: usize, k: usize, l: usize) -> bool {
        self.arrows[i][k] == other.arrows[j][l]
            && self.arrows[k][i] == other.arrows[l][j]
            && self.cartan[i][k] == other.cartan[j][l]
            && self.cartan[k][i] == other.cartan[l][j]
    }
}

fn vertex_maps(
    s1: &Shape,
    s2: &Shape,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) {
    let i = map.len();
    let n = used.len();
    if out.len() > cap {
        return;
    }
    if i == n {
        out.push(map.clone());
        return;
    }
    // identity first
    let order = core::iter::once(i).chain((0..n).filter(|&j| j != i));
    for j in order {
        if used[j] || !s1.agrees(s2, i, j, i, j) {
            continue;
        }
        if !(0..i).all(|k| s1.agrees(s2, i, j, k, map[k])) {
            continue;
        }
        map.push(j);
        used[j] = true;
        vertex_maps(s1, s2, map, used, out, cap);
        used[j] = false;
        map.pop();
    }
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Multiplicative equations `Π c_a^{e_a} = r`, solved by integer row reduction.
fn solve_scales(field: Field, arrows: usize, mut rows: Vec<(Vec<i64>, Scalar)>) -> Option<Vec<Scalar>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut done = alloc::vec![false; rows.len()];
    for col in 0..arrows {
        loop {
            let live: Vec<usize> = (0..rows.len()).filter(|&r| !done[r] && rows[r].0[col] != 0).collect();
            let Some(&p) = live.iter().min_by_key(|&&r| rows[r].0[col].abs()) else { break };
            if live.len() == 1 {
                done[p] = true;
                pivots.push((col, p));
                break;
            }
            for &r in &live {
                if r == p {
                    continue;
                }
                let q = rows[r].0[col] / rows[p].0[col];
                let (pe, pv) = rows[p].clone();
                for (x, y) in rows[r].0.iter_mut().zip(&pe) {
                    *x -= q * y;
                }
                let f = pv.pow(q)?.inverse()?;
                rows[r].1 = &rows[r].1 * &f;
            }
        }
    }
    for (r, row) in rows.iter().enumerate() {
        if !done[r] && row.0.iter().all(|&e| e == 0) && !row.1.is_one() {
            return None;
        }
    }
    let mut c = alloc::vec![field.one(); arrows];
    for &(col, r) in pivots.iter().rev() {
        let (e, v) = &rows[r];
        let mut rhs = v.clone();
        for (j, &ej) in e.iter().enumerate().skip(col + 1) {
            if ej != 0 {
                rhs = &rhs * &c[j].pow(-ej)?;
            }
        }
        let d = e[col];
        let rhs = if d < 0 { rhs.inverse()? } else { rhs };
        c[col] = rhs.root(d.unsigned_abs() as u32)?;
    }
    Some(c)
}

fn multiplicities(arrows: usize, p: &crate::path::Path) -> Vec<i64> {
    let mut m = alloc::vec![0i64; arrows];
    for a in p.arrows() {
        m[a.0] += 1;
    }
    m
}

/// Scalings making `g1` equal to `g2`, if the supports agree.
fn scales_between(field: Field, arrows: usize, g1: &GroebnerBasis, g2: &GroebnerBasis) -> Option<Vec<Scalar>> {
    if g1.generators().len() != g2.generators().len() {
        return None;
    }
    let mut rows = Vec::new();
    for (a, b) in g1.generators().iter().zip(g2.generators()) {
        if a.term_count() != b.term_count() {
            return None;
        }
        let (tip, _) = a.tip()?;
        if b.tip()?.0 != tip {
            return None;
        }
        let mt = multiplicities(arrows, tip);
        for (u, c) in a.terms() {
            let d = b.coefficient(u)?;
            if u == tip {
                continue;
            }
            let e: Vec<i64> = multiplicities(arrows, u).iter().zip(&mt).map(|(x, y)| x - y).collect();
            rows.push((e, d * &c.inverse()?));
        }
    }
    solve_scales(field, arrows, rows)
}

fn transport(p: &Presentation, target: &Quiver, vmap: &[usize], amap: &[usize], scales: &[Scalar]) -> Vec<Element> {
    p.relations()
        .iter()
        .map(|r| substitute(r, target, |v| Vertex(vmap[v.0]), |a| Some((Arrow(amap[a.0]), scales[a.0].clone()))))
        .collect()
}

/// Searches for vertex and arrow bijections, respecting endpoints, and
/// arrow scalings under which the two ideals coincide.
pub fn presentation_match(
    p1: &Presentation,
    p2: &Presentation,
    limits: &SearchLimits,
) -> Result<Option<PresentationMatch>> {
    let (q1, q2) = (p1.quiver(), p2.quiver());
    if q1.vertex_count() != q2.vertex_count() || q1.arrow_count() != q2.arrow_count() || p1.field() != p2.field() {
        return Ok(None);
    }
    let a1 = FdAlgebra::build(p1.clone(), DEFAULT_BOUND)?;
    let a2 = FdAlgebra::build(p2.clone(), DEFAULT_BOUND)?;
    if a1.dim() != a2.dim() {
        return Ok(None);
    }
    let (s1, s2) = (Shape::new(&a1), Shape::new(&a2));
    let mut vmaps = Vec::new();
    let n = q1.vertex_count();
    vertex_maps(&s1, &s2, &mut Vec::new(), &mut alloc::vec![false; n], &mut vmaps, limits.max_matches);
    let field = p1.field();
    let m = q1.arrow_count();
    let ones = alloc::vec![field.one(); m];
    let g2 = a2.groebner();
    let mut attempts = 0usize;
    for vmap in vmaps {
        // arrows of q1 grouped by endpoints, with the matching arrows of q2
        let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let from: Vec<usize> = q1.arrows_between(Vertex(x), Vertex(y)).map(|a| a.0).collect();
                if from.is_empty() {
                    continue;
                }
                let to: Vec<usize> = q2.arrows_between(Vertex(vmap[x]), Vertex(vmap[y])).map(|a| a.0).collect();
                groups.push((from, to));
            }
        }
        let mut perms: Vec<Vec<usize>> = groups.iter().map(|(f, _)| (0..f.len()).collect()).collect();
        loop {
            attempts += 1;
            if attempts > limits.max_matches {
                return Err(Error::SearchBoundExceeded("presentation matches"));
            }
            let mut amap = alloc::vec![0usize; m];
            for ((from, to), perm) in groups.iter().zip(&perms) {
                for (k, &a) in from.iter().enumerate() {
                    amap[a] = to[perm[k]];
                }
            }
            let moved = transport(p1, q2, &vmap, &amap, &ones);
            if let Ok(g1) = buchberger(q2, &moved, DEFAULT_BOUND) {
                if let Some(scales) = scales_between(field, m, &g1, g2) {
                    // scales are indexed by arrows of q2; pull back to q1
                    let pulled: Vec<Scalar> = (0..m).map(|a| scales[amap[a]].clone()).collect();
                    let scaled = transport(p1, q2, &vmap, &amap, &pulled);
                    let g = buchberger(q2, &scaled, DEFAULT_BOUND)?;
                    if ideal_equal(&g, g2)? {
                        return Ok(Some(PresentationMatch {
                            vertices: vmap.iter().map(|&v| Vertex(v)).collect(),
                            arrows: amap.into_iter().map(Arrow).collect(),
                            scales: pulled,
                        }));
                    }
                }
            }
            // advance the mixed-radix counter of permutations
            let mut i = 0;
            while i < perms.len() {
                if next_permutation(&mut perms[i]) {
                    break;
                }
                perms[i].sort();
                i += 1;
            }
            if i == perms.len() {
                break;
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_multiplicative_systems() {
        let q = Field::Rationals;
        // c0 * c1 = 6, c1 = 3
        let rows = alloc::vec![(alloc::vec![1, 1], q.from_i64(6)), (alloc::vec![0, 1], q.from_i64(3))];
        assert_eq!(solve_scales(q, 2, rows).unwrap(), [q.from_i64(2), q.from_i64(3)]);
        // c0^2 = 4 and c0 = 3 conflict
        let rows = alloc::vec![(alloc::vec![2], q.from_i64(4)), (alloc::vec![1], q.from_i64(3))];
        assert!(solve_scales(q, 1, rows).is_none());
        let rows = alloc::vec![(alloc::vec![2, -2], q.from_i64(4))];
        let c = solve_scales(q, 2, rows).unwrap();
        assert_eq!(&(&c[0] * &c[0]) * &c[1].pow(-2).unwrap(), q.from_i64(4));
    }

    #[test]
    fn permutations_in_order() {
        let mut p = [0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
