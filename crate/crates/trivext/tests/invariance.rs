//! Decisions must not depend on the socle basis or on how it is completed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trivext::corpus::{corpus, CorpusConfig};
use trivext::parse_presentation;
use trivext_core::cuts::{is_trivial_extension, presentation_match, SearchLimits};
use trivext_core::linalg::{rank, Vector};
use trivext_core::trivext::symmetric_form;
use trivext_core::{ExtendedBasis, FdAlgebra, SocleElement, TrivialExtension, DEFAULT_BOUND};

fn small(a: &FdAlgebra, rng: &mut ChaCha8Rng) -> trivext_core::Scalar {
    a.field().from_i64(rng.gen_range(-3..=3))
}

fn axpy(y: &mut Vector, c: &trivext_core::Scalar, x: &[trivext_core::Scalar]) {
    for (u, v) in y.iter_mut().zip(x) {
        *u = &*u + &(c * v);
    }
}

/// A unitriangular change of the socle basis inside each block.
fn rebase_socle(a: &FdAlgebra, rng: &mut ChaCha8Rng) -> Vec<SocleElement> {
    let mut socle = a.bimodule_socle();
    for i in 0..socle.len() {
        for j in i + 1..socle.len() {
            if (socle[i].source, socle[i].target) == (socle[j].source, socle[j].target) {
                let c = small(a, rng);
                let x = socle[j].coords.clone();
                axpy(&mut socle[i].coords, &c, &x);
            }
        }
    }
    socle
}

/// Completes with monomials taken in a random order.
fn random_monomials(a: &FdAlgebra, socle: &[SocleElement], rng: &mut ChaCha8Rng) -> ExtendedBasis {
    let mut order: Vec<usize> = (0..a.dim()).collect();
    order.shuffle(rng);
    let mut rows: Vec<Vector> = socle.iter().map(|s| s.coords.clone()).collect();
    let mut complement = Vec::new();
    for i in order {
        rows.push(a.unit(i));
        if rank(a.field(), a.dim(), &rows) == rows.len() {
            complement.push(a.unit(i));
        } else {
            rows.pop();
        }
    }
    ExtendedBasis::new(a, socle, complement).unwrap()
}

fn algebras() -> Vec<(String, FdAlgebra)> {
    let mut out: Vec<(String, FdAlgebra)> = ["loop", "three_paths", "four_paths", "two_arms"]
        .iter()
        .map(|n| {
            let text = std::fs::read_to_string(format!("{}/fixtures/{n}.txt", env!("CARGO_MANIFEST_DIR"))).unwrap();
            (n.to_string(), FdAlgebra::build(parse_presentation(&text).unwrap(), DEFAULT_BOUND).unwrap())
        })
        .collect();
    for (i, p) in corpus(7, 20, &CorpusConfig::default()).into_iter().enumerate() {
        out.push((format!("random{i}"), FdAlgebra::build(p, DEFAULT_BOUND).unwrap()));
    }
    out
}

#[test]
fn decisions_survive_other_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let limits = SearchLimits::default();
    for (name, a) in algebras() {
        let socle = rebase_socle(&a, &mut rng);
        let basis = random_monomials(&a, &socle, &mut rng);
        let t = TrivialExtension::with_basis(a.clone(), socle, basis, None).unwrap();
        assert_eq!(t.dim(), 2 * a.dim(), "{name}");
        let r = t.verify_relation_theorem().unwrap();
        assert!(r.passed(), "{name}: {:?}", r.items.iter().find(|c| !c.passed));
        assert!(t.cycle_properties().iter().all(|c| c.passed), "{name}");
        assert!(symmetric_form(t.sc()).passed(), "{name}");
        let p = t.presentation().unwrap();
        assert_eq!(FdAlgebra::build(p.clone(), DEFAULT_BOUND).unwrap().dim(), 2 * a.dim(), "{name}");
        let w = is_trivial_extension(&p, &limits).unwrap();
        let w = w.unwrap_or_else(|| panic!("{name}: no witness"));
        assert!(presentation_match(&w.base, a.presentation(), &limits).unwrap().is_some(), "{name}");
    }
}

/// With `b + aab` in the complement, `p*(b) = -1` for the dual of `aab`,
/// and the relations no longer hold.
#[test]
fn non_monomial_complement_breaks_the_relations() {
    let text = std::fs::read_to_string(format!("{}/fixtures/loop.txt", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let a = FdAlgebra::build(parse_presentation(&text).unwrap(), DEFAULT_BOUND).unwrap();
    let socle = a.bimodule_socle();
    let q = a.quiver();
    let top = a.path_coords(&q.parse_path("a.a.b").unwrap());
    let complement: Vec<Vector> = a
        .basis()
        .iter()
        .filter(|p| q.format_path(p) != "a.a.b")
        .map(|p| {
            let mut v = a.path_coords(p);
            if q.format_path(p) == "b" {
                axpy(&mut v, &a.field().one(), &top);
            }
            v
        })
        .collect();
    let basis = ExtendedBasis::new(&a, &socle, complement).unwrap();
    let t = TrivialExtension::with_basis(a.clone(), socle, basis, None).unwrap();
    let r = t.verify_relation_theorem().unwrap();
    assert!(!r.passed());
    assert!(symmetric_form(t.sc()).passed());
}
