//! Finite quivers with named vertices and arrows.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::path::{Element, Path};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowData {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// A finite quiver. Vertices and arrows are ordered by declaration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<ArrowData>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn from_parts(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (name, s, t) in arrows {
            let s = q.vertex(s).ok_or_else(|| Error::UnknownVertex(s.to_string()))?;
            let t = q.vertex(t).ok_or_else(|| Error::UnknownVertex(t.to_string()))?;
            q.add_arrow(name, s, t)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<Vertex> {
        if self.vertex(name).is_some() {
            return Err(Error::DuplicateVertex(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(Vertex(self.vertices.len() - 1))
    }

    pub fn add_arrow(&mut self, name: &str, source: Vertex, target: Vertex) -> Result<Arrow> {
        if self.arrow(name).is_some() {
            return Err(Error::DuplicateArrow(name.to_string()));
        }
        for v in [source, target] {
            if v.0 >= self.vertices.len() {
                return Err(Error::UnknownVertex(alloc::format!("#{}", v.0)));
            }
        }
        self.arrows.push(ArrowData { name: name.to_string(), source, target });
        Ok(Arrow(self.arrows.len() - 1))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertices.len()).map(Vertex)
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        (0..self.arrows.len()).map(Arrow)
    }

    pub fn arrow_data(&self, a: Arrow) -> &ArrowData {
        &self.arrows[a.0]
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.vertices[v.0]
    }

    pub fn arrow_name(&self, a: Arrow) -> &str {
        &self.arrows[a.0].name
    }

    pub fn source(&self, a: Arrow) -> Vertex {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: Arrow) -> Vertex {
        self.arrows[a.0].target
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.vertices.iter().position(|v| v == name).map(Vertex)
    }

    pub fn arrow(&self, name: &str) -> Option<Arrow> {
        self.arrows.iter().position(|a| a.name == name).map(Arrow)
    }

    pub fn arrows_from(&self, v: Vertex) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&a| self.source(a) == v)
    }

    pub fn arrows_between(&self, x: Vertex, y: Vertex) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows().filter(move |&a| self.source(a) == x && self.target(a) == y)
    }

    pub fn stationary(&self, v: Vertex) -> Path {
        Path::stationary(v)
    }

    /// The path through the given arrows, first arrow first.
    pub fn path_of(&self, arrows: &[Arrow]) -> Result<Path> {
        let first = arrows.first().ok_or(Error::NotComposable)?;
        for w in arrows.windows(2) {
            if self.target(w[0]) != self.source(w[1]) {
                return Err(Error::NotComposable);
            }
        }
        let last = arrows[arrows.len() - 1];
        Ok(Path::from_raw(self.source(*first), self.target(last), arrows.to_vec()))
    }

    /// The path through the named arrows.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let arrows = names
            .iter()
            .map(|n| self.arrow(n).ok_or_else(|| Error::UnknownArrow(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        self.path_of(&arrows)
    }

    /// Parses a dotted path such as `a.b.c`.
    pub fn parse_path(&self, dotted: &str) -> Result<Path> {
        let names: Vec<&str> = dotted.split('.').collect();
        self.path(&names)
    }

    /// All paths from `x` to `y` of length at most `max_len`, ordered by
    /// length and then by arrow sequence.
    pub fn enumerate_paths(&self, x: Vertex, y: Vertex, max_len: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut layer = alloc::vec![Path::stationary(x)];
        for len in 0..=max_len {
            out.extend(layer.iter().filter(|p| p.target() == y).cloned());
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for p in &layer {
                for a in self.arrows_from(p.target()) {
                    next.push(p.extend(a, self.target(a)));
                }
            }
            next.sort();
            layer = next;
        }
        out
    }

    /// `a.b.c` for arrow paths and `e_x` for stationary paths.
    pub fn format_path(&self, p: &Path) -> String {
        if p.is_stationary() {
            return alloc::format!("e_{}", self.vertex_name(p.source()));
        }
        let names: Vec<&str> = p.arrows().iter().map(|&a| self.arrow_name(a)).collect();
        names.join(".")
    }

    /// Terms in descending order, e.g. `a.b - 2*c.d`.
    pub fn format_element(&self, u: &Element) -> String {
        if u.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (p, c)) in u.terms().rev().enumerate() {
            let neg = c.to_fraction().0.sign() == num_bigint::Sign::Minus;
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !abs.is_one() {
                let _ = write!(s, "{abs}*");
            }
            s.push_str(&self.format_path(p));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_quiver() -> Quiver {
        Quiver::from_parts(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2")]).unwrap()
    }

    #[test]
    fn enumerate_paths_in_loop_quiver() {
        let q = loop_quiver();
        let got: Vec<String> = q.enumerate_paths(Vertex(0), Vertex(1), 3).iter().map(|p| q.format_path(p)).collect();
        assert_eq!(got, ["b", "a.b", "a.a.b"]);
        let got = q.enumerate_paths(Vertex(0), Vertex(0), 0);
        assert_eq!(got, [Path::stationary(Vertex(0))]);
    }

    #[test]
    fn enumerate_paths_in_first_example() {
        let q = Quiver::from_parts(
            &["1", "2", "3", "4", "5"],
            &[
                ("a1", "1", "2"),
                ("g1", "1", "3"),
                ("e1", "1", "4"),
                ("a2", "2", "5"),
                ("g2", "3", "5"),
                ("e2", "4", "5"),
            ],
        )
        .unwrap();
        let got: Vec<String> = q.enumerate_paths(Vertex(0), Vertex(4), 2).iter().map(|p| q.format_path(p)).collect();
        assert_eq!(got, ["a1.a2", "g1.g2", "e1.e2"]);
    }

    #[test]
    fn rejects_duplicates_and_unknown_vertices() {
        assert!(matches!(Quiver::from_parts(&["1", "1"], &[]), Err(Error::DuplicateVertex(_))));
        assert!(matches!(Quiver::from_parts(&["1"], &[("a", "1", "2")]), Err(Error::UnknownVertex(_))));
        assert!(matches!(
            Quiver::from_parts(&["1"], &[("a", "1", "1"), ("a", "1", "1")]),
            Err(Error::DuplicateArrow(_))
        ));
    }

    #[test]
    fn parse_path_checks_composability() {
        let q = loop_quiver();
        assert_eq!(q.parse_path("a.a.b").unwrap().len(), 3);
        assert_eq!(q.parse_path("b.a"), Err(Error::NotComposable));
    }
}
