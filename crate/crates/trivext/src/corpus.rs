//! Seeded random admissible presentations for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trivext_core::{Element, FdAlgebra, Field, Path, Presentation, Quiver, Vertex};

#[derive(Clone, Copy, Debug)]
pub struct CorpusConfig {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_dim: usize,
    /// Upper bound on the number of paths of the nilpotency length.
    pub max_monomials: usize,
    pub field: Field,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { max_vertices: 4, max_arrows: 6, max_dim: 25, max_monomials: 40, field: Field::Rationals }
    }
}

fn paths_of_length(q: &Quiver, len: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for x in q.vertices() {
        for y in q.vertices() {
            out.extend(q.enumerate_paths(x, y, len).into_iter().filter(|p| p.len() == len));
        }
    }
    out
}

fn random_quiver(rng: &mut ChaCha8Rng, cfg: &CorpusConfig) -> Quiver {
    let n = rng.gen_range(1..=cfg.max_vertices);
    let m = rng.gen_range(n.saturating_sub(1).max(1)..=cfg.max_arrows);
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(&i.to_string()).expect("fresh name");
    }
    for k in 1..=m {
        let s = Vertex(rng.gen_range(0..n));
        let t = Vertex(rng.gen_range(0..n));
        q.add_arrow(&format!("x{k}"), s, t).expect("fresh name");
    }
    q
}

/// One attempt; `None` when the draw is too large or not admissible.
pub fn random_presentation(rng: &mut ChaCha8Rng, cfg: &CorpusConfig) -> Option<Presentation> {
    let q = random_quiver(rng, cfg);
    let f = cfg.field;
    let len = rng.gen_range(2..=4);
    let top = paths_of_length(&q, len);
    if top.len() > cfg.max_monomials {
        return None;
    }
    let mut rels: Vec<Element> = top.into_iter().map(|p| Element::monomial(p, f.one())).collect();
    let short: Vec<Path> = (2..len).flat_map(|l| paths_of_length(&q, l)).collect();
    for _ in 0..rng.gen_range(0..=3) {
        let Some(p) = short.choose(rng) else { break };
        let parallel: Vec<&Path> =
            short.iter().filter(|r| *r != p && r.source() == p.source() && r.target() == p.target()).collect();
        let mut u = Element::monomial(p.clone(), f.one());
        if let (true, Some(r)) = (rng.gen_bool(0.6), parallel.choose(rng)) {
            let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            u.add_term((*r).clone(), f.from_i64(c));
        }
        rels.push(u);
    }
    let p = Presentation::new(q, rels, f).ok()?;
    let a = FdAlgebra::build(p.clone(), 16).ok()?;
    (a.dim() <= cfg.max_dim).then_some(p)
}

/// `count` presentations drawn from `seed`, with repeats of the same algebra allowed.
pub fn corpus(seed: u64, count: usize, cfg: &CorpusConfig) -> Vec<Presentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Some(p) = random_presentation(&mut rng, cfg) {
            out.push(p);
        }
    }
    out
}
