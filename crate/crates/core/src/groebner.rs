//! Two-sided Groebner bases in path algebras under the length-then-lex order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::path::{Element, Path};
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::{Error, Result};

/// A reduced, degree-truncated Groebner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    generators: Vec<Element>,
    index: TipIndex,
    bound: usize,
    certified: bool,
}

#[derive(Clone, Debug, Default)]
struct TipIndex {
    tips: BTreeMap<Vec<Arrow>, usize>,
    lengths: BTreeMap<usize, usize>,
    units: BTreeMap<Vertex, usize>,
}

impl TipIndex {
    fn insert(&mut self, tip: &Path, id: usize) {
        if tip.is_stationary() {
            self.units.insert(tip.source(), id);
        } else {
            self.tips.insert(tip.arrows().to_vec(), id);
            *self.lengths.entry(tip.len()).or_default() += 1;
        }
    }

    fn remove(&mut self, tip: &Path) {
        if tip.is_stationary() {
            self.units.remove(&tip.source());
        } else {
            self.tips.remove(tip.arrows());
            let n = self.lengths.get_mut(&tip.len()).expect("indexed");
            *n -= 1;
            if *n == 0 {
                self.lengths.remove(&tip.len());
            }
        }
    }

    fn max_len(&self) -> usize {
        self.lengths.keys().next_back().copied().unwrap_or(0)
    }

    fn passes_unit(&self, p: &Path, targets: impl Iterator<Item = Vertex>) -> Option<usize> {
        if self.units.is_empty() {
            return None;
        }
        if let Some(&id) = self.units.get(&p.source()) {
            return Some(id);
        }
        for v in targets {
            if let Some(&id) = self.units.get(&v) {
                return Some(id);
            }
        }
        None
    }

    /// A generator whose tip divides `p`, with the start position of the match.
    fn divisor(&self, p: &Path, vertices: &[Vertex]) -> Option<(usize, usize, usize)> {
        if let Some(id) = self.passes_unit(p, vertices.iter().copied()) {
            return Some((id, 0, 0));
        }
        let arrows = p.arrows();
        for &len in self.lengths.keys() {
            if len > arrows.len() {
                break;
            }
            for start in 0..=arrows.len() - len {
                if let Some(&id) = self.tips.get(&arrows[start..start + len]) {
                    return Some((id, start, len));
                }
            }
        }
        None
    }

    /// Whether some tip is a suffix of `p` (or `p` ends at a unit vertex).
    fn has_tip_suffix(&self, p: &Path) -> bool {
        if self.units.contains_key(&p.target()) {
            return true;
        }
        let arrows = p.arrows();
        for &len in self.lengths.keys() {
            if len > arrows.len() {
                break;
            }
            if self.tips.contains_key(&arrows[arrows.len() - len..]) {
                return true;
            }
        }
        false
    }
}

fn targets<'a>(quiver: Option<&'a Quiver>, p: &'a Path) -> Vec<Vertex> {
    match quiver {
        Some(q) => p.arrows().iter().map(|&a| q.target(a)).collect(),
        None => Vec::new(),
    }
}

/// Replaces the occurrence of a tip at `start..start+len` in `p` by `-c * tail`.
fn rewrite(out: &mut Element, p: &Path, c: &crate::Scalar, g: &Element, start: usize, len: usize) {
    let arrows = p.arrows();
    let (left, right) = (&arrows[..start], &arrows[start + len..]);
    let mut terms = g.terms().rev();
    terms.next();
    for (t, d) in terms {
        let mut new = Vec::with_capacity(left.len() + t.len() + right.len());
        new.extend_from_slice(left);
        new.extend_from_slice(t.arrows());
        new.extend_from_slice(right);
        out.add_term(Path::from_raw(p.source(), p.target(), new), -(c * d));
    }
}

fn reduce_with(index: &TipIndex, gens: &[Option<Element>], quiver: Option<&Quiver>, u: &Element) -> Element {
    let mut work = u.clone();
    let mut result = Element::zero();
    while let Some((p, c)) = work.pop_tip() {
        let verts = if index.units.is_empty() { Vec::new() } else { targets(quiver, &p) };
        match index.divisor(&p, &verts) {
            Some((id, start, len)) => {
                let g = gens[id].as_ref().expect("indexed generator is alive");
                if len == 0 {
                    // e_x lies in the ideal, so every path through x does too
                    continue;
                }
                rewrite(&mut work, &p, &c, g, start, len);
            }
            None => result.insert_raw(p, c),
        }
    }
    result
}

struct Completion<'q> {
    quiver: &'q Quiver,
    gens: Vec<Option<Element>>,
    index: TipIndex,
    pairs: BTreeSet<(usize, usize, usize, usize)>,
    pending: Vec<Element>,
}

impl<'q> Completion<'q> {
    fn reduce(&self, u: &Element) -> Element {
        reduce_with(&self.index, &self.gens, Some(self.quiver), u)
    }

    fn tip(&self, id: usize) -> &Path {
        self.gens[id].as_ref().expect("alive").tip().expect("nonzero").0
    }

    fn add_pairs(&mut self, i: usize, j: usize) {
        let (t1, t2) = (self.tip(i).arrows().to_vec(), self.tip(j).arrows().to_vec());
        let (a, b) = (t1.len(), t2.len());
        for k in 1..a.min(b) {
            if t1[a - k..] == t2[..k] {
                self.pairs.insert((a + b - k, i, j, k));
            }
        }
    }

    fn add(&mut self, r: Element) {
        let r = r.monic();
        let id = self.gens.len();
        let tip = r.tip().expect("nonzero").0.clone();
        self.gens.push(Some(r));
        for h in 0..id {
            let Some(g) = &self.gens[h] else { continue };
            let ht = g.tip().expect("nonzero").0;
            if ht.contains(self.quiver, &tip) {
                let g = self.gens[h].take().expect("alive");
                self.index.remove(g.tip().expect("nonzero").0);
                self.pending.push(g);
            }
        }
        self.index.insert(&tip, id);
        for h in 0..=id {
            if self.gens[h].is_some() {
                self.add_pairs(h, id);
                if h != id {
                    self.add_pairs(id, h);
                }
            }
        }
    }

    fn drain_pending(&mut self) {
        while let Some(p) = self.pending.pop() {
            let r = self.reduce(&p);
            if !r.is_zero() {
                self.add(r);
            }
        }
    }

    fn spoly(&self, i: usize, j: usize, k: usize) -> Option<Element> {
        let (g1, g2) = (self.gens[i].as_ref()?, self.gens[j].as_ref()?);
        let t1 = g1.tip().expect("nonzero").0;
        let t2 = g2.tip().expect("nonzero").0;
        let u = t1.subpath(self.quiver, 0, t1.len() - k);
        let v = t2.subpath(self.quiver, k, t2.len());
        let mut s = Element::zero();
        for (p, c) in g1.terms() {
            s.add_term(p.compose(&v).expect("overlap composes"), c.clone());
        }
        for (p, c) in g2.terms() {
            s.add_term(u.compose(p).expect("overlap composes"), -c);
        }
        Some(s)
    }

    /// Processes overlap pairs of degree at most `limit`.
    fn run(&mut self, limit: usize) {
        self.drain_pending();
        loop {
            let next = self.pairs.iter().next().copied();
            let Some(pair) = next else { break };
            if pair.0 > limit {
                break;
            }
            self.pairs.remove(&pair);
            let (_, i, j, k) = pair;
            if let Some(s) = self.spoly(i, j, k) {
                self.pending.push(s);
                self.drain_pending();
            }
        }
    }

    /// Longest normal path if the set of normal paths is finite.
    fn finite_normal_length(&self) -> Option<usize> {
        max_normal_length(self.quiver, &self.index)
    }

    fn finish(self, bound: usize, certified: bool) -> GroebnerBasis {
        let Completion { quiver, gens, index, .. } = self;
        let mut alive: Vec<Element> = gens.iter().flatten().cloned().collect();
        alive.sort_by(|a, b| a.tip().expect("nonzero").0.cmp(b.tip().expect("nonzero").0));
        let mut reduced = Vec::with_capacity(alive.len());
        for g in &alive {
            let (tip, _) = g.tip().expect("nonzero");
            let tail = g.sub(&Element::monomial(tip.clone(), g.tip().unwrap().1.clone()));
            let mut r = reduce_with(&index, &gens, Some(quiver), &tail);
            r.add_term(tip.clone(), g.tip().unwrap().1.clone());
            reduced.push(r);
        }
        let mut new_index = TipIndex::default();
        for (i, g) in reduced.iter().enumerate() {
            new_index.insert(g.tip().expect("nonzero").0, i);
        }
        GroebnerBasis { generators: reduced, index: new_index, bound, certified }
    }
}

/// Longest path containing no tip, if there are finitely many such paths.
fn max_normal_length(quiver: &Quiver, index: &TipIndex) -> Option<usize> {
    let m = index.max_len().max(1);
    let w = m - 1;
    // normal paths of length <= w, grouped by length
    let mut layer: Vec<Path> =
        quiver.vertices().filter(|v| !index.units.contains_key(v)).map(Path::stationary).collect();
    if layer.is_empty() {
        return Some(0);
    }
    for len in 0..w {
        let mut next = Vec::new();
        for p in &layer {
            for a in quiver.arrows_from(p.target()) {
                let q = p.extend(a, quiver.target(a));
                if !index.has_tip_suffix(&q) {
                    next.push(q);
                }
            }
        }
        if next.is_empty() {
            return Some(len);
        }
        layer = next;
    }
    // Ufnarovskii graph on normal words of length w
    let nodes: BTreeMap<(Vec<Arrow>, Vertex), usize> =
        layer.iter().enumerate().map(|(i, p)| ((p.arrows().to_vec(), p.target()), i)).collect();
    let mut edges: Vec<Vec<usize>> = alloc::vec![Vec::new(); layer.len()];
    for (i, p) in layer.iter().enumerate() {
        for a in quiver.arrows_from(p.target()) {
            let q = p.extend(a, quiver.target(a));
            if index.has_tip_suffix(&q) {
                continue;
            }
            let key = (q.arrows()[1..].to_vec(), q.target());
            edges[i].push(nodes[&key]);
        }
    }
    // longest path by iterative DFS with cycle detection
    let n = layer.len();
    let mut depth: Vec<Option<usize>> = alloc::vec![None; n];
    let mut state = alloc::vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = alloc::vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&(v, k)) = stack.last() {
            if k < edges[v].len() {
                stack.last_mut().unwrap().1 += 1;
                let u = edges[v][k];
                match state[u] {
                    0 => {
                        state[u] = 1;
                        stack.push((u, 0));
                    }
                    1 => return None,
                    _ => {}
                }
            } else {
                let d = edges[v].iter().map(|&u| depth[u].expect("finished") + 1).max().unwrap_or(0);
                depth[v] = Some(d);
                state[v] = 2;
                stack.pop();
            }
        }
    }
    let extra = depth.iter().map(|d| d.unwrap_or(0)).max().unwrap_or(0);
    Some(w + extra)
}

/// Computes a reduced Groebner basis of the ideal generated by `gens`,
/// failing when completion cannot be certified below `bound`.
pub fn buchberger(quiver: &Quiver, gens: &[Element], bound: usize) -> Result<GroebnerBasis> {
    let g = GroebnerBasis::truncated(quiver, gens, bound);
    if g.certified {
        Ok(g)
    } else {
        Err(Error::BoundExceeded(bound))
    }
}

impl GroebnerBasis {
    /// Completion processing overlaps of degree at most `bound`. The result
    /// is certified when the normal paths are finite and shorter than `bound`;
    /// all remaining overlaps are then resolved as well.
    pub fn truncated(quiver: &Quiver, gens: &[Element], bound: usize) -> GroebnerBasis {
        let mut c = Completion {
            quiver,
            gens: Vec::new(),
            index: TipIndex::default(),
            pairs: BTreeSet::new(),
            pending: gens.iter().filter(|g| !g.is_zero()).cloned().collect(),
        };
        c.pending.reverse();
        c.run(bound);
        let certified = match c.finite_normal_length() {
            Some(l) if l < bound => {
                c.run(usize::MAX);
                true
            }
            _ => false,
        };
        c.finish(bound, certified)
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn tips(&self) -> impl Iterator<Item = &Path> {
        self.generators.iter().map(|g| g.tip().expect("nonzero").0)
    }

    fn alive(&self) -> Vec<Option<Element>> {
        self.generators.iter().cloned().map(Some).collect()
    }

    /// The unique normal form of `u`.
    pub fn normal_form(&self, quiver: &Quiver, u: &Element) -> Element {
        reduce_with(&self.index, &self.alive(), Some(quiver), u)
    }

    /// Whether `p` contains no tip.
    pub fn is_normal(&self, quiver: &Quiver, p: &Path) -> bool {
        let verts = targets(Some(quiver), p);
        self.index.divisor(p, &verts).is_none()
    }

    pub fn ideal_member(&self, quiver: &Quiver, u: &Element) -> Result<bool> {
        if !self.certified && u.max_len() >= self.bound {
            return Err(Error::Inconclusive);
        }
        Ok(self.normal_form(quiver, u).is_zero())
    }

    /// All normal paths, in path order. Requires a certified basis.
    pub fn normal_monomials(&self, quiver: &Quiver) -> Result<Vec<Path>> {
        if !self.certified {
            return Err(Error::Inconclusive);
        }
        let mut out = Vec::new();
        let mut layer: Vec<Path> =
            quiver.vertices().filter(|v| !self.index.units.contains_key(v)).map(Path::stationary).collect();
        while !layer.is_empty() {
            out.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for p in &layer {
                for a in quiver.arrows_from(p.target()) {
                    let q = p.extend(a, quiver.target(a));
                    if !self.index.has_tip_suffix(&q) {
                        next.push(q);
                    }
                }
            }
            next.sort();
            layer = next;
        }
        out.sort();
        Ok(out)
    }
}

/// Whether two certified bases generate the same ideal.
pub fn ideal_equal(g1: &GroebnerBasis, g2: &GroebnerBasis) -> Result<bool> {
    if !g1.certified || !g2.certified {
        return Err(Error::Inconclusive);
    }
    Ok(g1.generators == g2.generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn loop_quiver() -> Quiver {
        Quiver::from_parts(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2")]).unwrap()
    }

    fn first_example() -> Quiver {
        Quiver::from_parts(
            &["1", "2", "3", "4", "5"],
            &[
                ("g1", "1", "3"),
                ("g2", "3", "5"),
                ("e1", "1", "4"),
                ("e2", "4", "5"),
                ("a1", "1", "2"),
                ("a2", "2", "5"),
            ],
        )
        .unwrap()
    }

    fn el(q: &Quiver, terms: &[(i64, &str)]) -> Element {
        let mut u = Element::zero();
        for (c, p) in terms {
            u.add_term(q.parse_path(p).unwrap(), Field::Rationals.from_i64(*c));
        }
        u
    }

    #[test]
    fn monomial_ideal_is_certified() {
        let q = loop_quiver();
        let g = buchberger(&q, &[el(&q, &[(1, "a.a.a")])], 8).unwrap();
        assert!(g.is_certified());
        assert_eq!(g.generators(), [el(&q, &[(1, "a.a.a")])]);
        assert_eq!(g.normal_monomials(&q).unwrap().len(), 7);
    }

    #[test]
    fn free_loop_exceeds_bound() {
        let q = loop_quiver();
        assert_eq!(buchberger(&q, &[], 8).unwrap_err(), Error::BoundExceeded(8));
    }

    #[test]
    fn commutativity_relation_is_its_own_basis() {
        let q = first_example();
        let r = el(&q, &[(1, "a1.a2"), (2, "g1.g2"), (3, "e1.e2")]);
        let g = buchberger(&q, core::slice::from_ref(&r), 8).unwrap();
        assert_eq!(g.generators(), [r]);
        let nf = g.normal_form(&q, &el(&q, &[(1, "a1.a2")]));
        assert_eq!(nf, el(&q, &[(-2, "g1.g2"), (-3, "e1.e2")]));
        let e = Element::monomial(Path::stationary(Vertex(0)), Field::Rationals.one());
        assert_eq!(g.normal_form(&q, &e), e);
    }

    #[test]
    fn membership_and_equality() {
        let q = loop_quiver();
        let a3 = buchberger(&q, &[el(&q, &[(1, "a.a.a")])], 8).unwrap();
        assert!(a3.ideal_member(&q, &el(&q, &[(1, "a.a.a")])).unwrap());
        assert!(!a3.ideal_member(&q, &el(&q, &[(1, "a.a")])).unwrap());
        let both = buchberger(&q, &[el(&q, &[(1, "a.a.a")]), el(&q, &[(1, "a.a.a.a")])], 8).unwrap();
        assert!(ideal_equal(&a3, &both).unwrap());
        let a2 = buchberger(&q, &[el(&q, &[(1, "a.a")])], 8).unwrap();
        assert!(!ideal_equal(&a3, &a2).unwrap());

        let q = first_example();
        let f = Field::Rationals;
        let r1 = el(&q, &[(1, "a1.a2"), (2, "g1.g2"), (3, "e1.e2")]);
        let mut r2 = Element::zero();
        r2.add_term(q.parse_path("g1.g2").unwrap(), f.one());
        r2.add_term(q.parse_path("a1.a2").unwrap(), f.from_i64(2).inverse().unwrap());
        r2.add_term(q.parse_path("e1.e2").unwrap(), (&f.from_i64(3) * &f.from_i64(2).inverse().unwrap()).clone());
        let g1 = buchberger(&q, &[r1], 8).unwrap();
        let g2 = buchberger(&q, &[r2], 8).unwrap();
        assert!(ideal_equal(&g1, &g2).unwrap());
    }

    #[test]
    fn overlaps_are_resolved() {
        // a.a - b.c style rewriting with a genuine overlap
        let q = Quiver::from_parts(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let gens = [el(&q, &[(1, "y.x"), (-1, "x.y")]), el(&q, &[(1, "x.x")]), el(&q, &[(1, "y.y")])];
        let g = buchberger(&q, &gens, 16).unwrap();
        // K<x,y>/(yx - xy, x^2, y^2) has basis 1, x, y, xy
        assert_eq!(g.normal_monomials(&q).unwrap().len(), 4);
    }

    #[test]
    fn uncertified_membership_is_inconclusive() {
        let q = loop_quiver();
        let g = GroebnerBasis::truncated(&q, &[], 4);
        assert!(!g.is_certified());
        assert_eq!(g.ideal_member(&q, &el(&q, &[(1, "a.a.a.a")])), Err(Error::Inconclusive));
        assert_eq!(g.ideal_member(&q, &el(&q, &[(1, "a.a")])), Ok(false));
    }
}
