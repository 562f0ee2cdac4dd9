//! Small algebras whose trivial extensions are known by hand.

use trivext_core::cuts::{admissible_cuts, is_trivial_extension, presentation_match, wakamatsu_partners, SearchLimits};
use trivext_core::trivext::trivext_presentation;
use trivext_core::{Element, FdAlgebra, Field, Presentation, Quiver, TrivialExtension, DEFAULT_BOUND};

fn build(f: Field, vs: &[&str], arrows: &[(&str, &str, &str)], rels: &[&str]) -> FdAlgebra {
    let q = Quiver::from_parts(vs, arrows).unwrap();
    let rels = rels.iter().map(|p| Element::monomial(q.parse_path(p).unwrap(), f.one())).collect();
    FdAlgebra::build(Presentation::new(q, rels, f).unwrap(), DEFAULT_BOUND).unwrap()
}

fn socle(a: &FdAlgebra) -> Vec<String> {
    a.bimodule_socle().iter().map(|s| a.quiver().format_element(&s.element(a))).collect()
}

fn cut_names(t: &TrivialExtension) -> Vec<Vec<&str>> {
    let mut cuts: Vec<Vec<&str>> =
        admissible_cuts(t.elementary_cycles().iter().map(|c| &c.class)).iter().map(|c| c.names(t.quiver())).collect();
    cuts.sort();
    cuts
}

#[test]
fn point() {
    let a = build(Field::Rationals, &["1"], &[], &[]);
    let t = TrivialExtension::new(a.clone());
    assert_eq!((a.dim(), t.dim()), (1, 2));
    let p = trivext_presentation(&a).unwrap();
    let tq = p.quiver();
    let rels: Vec<String> = p.relations().iter().map(|r| tq.format_element(r)).collect();
    assert_eq!(rels, ["beta1.beta1"]);
}

#[test]
fn dual_numbers_extend_the_point() {
    let a = build(Field::Rationals, &["1"], &[("x", "1", "1")], &["x.x"]);
    let w = is_trivial_extension(a.presentation(), &SearchLimits::default()).unwrap().unwrap();
    assert_eq!(w.cut.names(a.quiver()), ["x"]);
    assert_eq!((w.base.quiver().vertex_count(), w.base.quiver().arrow_count()), (1, 0));
}

#[test]
fn odd_dimension_is_negative() {
    let a = build(Field::Rationals, &["1"], &[("x", "1", "1")], &["x.x.x"]);
    assert_eq!(a.dim(), 3);
    assert!(is_trivial_extension(a.presentation(), &SearchLimits::default()).unwrap().is_none());
}

#[test]
fn one_arrow() {
    for f in [Field::Rationals, Field::prime(2).unwrap()] {
        let a = build(f, &["1", "2"], &[("a", "1", "2")], &[]);
        assert_eq!(socle(&a), ["a"]);
        let t = TrivialExtension::new(a.clone());
        assert_eq!(t.dim(), 6);
        assert_eq!(t.elementary_cycles().len(), 1);
        assert!(t.elementary_cycles()[0].weight.is_one());
        assert_eq!(cut_names(&t), [["a"], ["beta1"]]);
        let p = trivext_presentation(&a).unwrap();
        let w = is_trivial_extension(&p, &SearchLimits::default()).unwrap().unwrap();
        assert!(presentation_match(&w.base, a.presentation(), &SearchLimits::default()).unwrap().is_some());
    }
}

#[test]
fn kronecker() {
    let a = build(Field::Rationals, &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]);
    assert_eq!(socle(&a), ["a", "b"]);
    let t = TrivialExtension::new(a.clone());
    // beta1.b is zero since a*(b) = 0, so only a.beta1 and b.beta2 are cycles.
    assert_eq!((t.dim(), t.elementary_cycles().len()), (8, 2));
    assert_eq!(cut_names(&t), [["a", "b"], ["a", "beta2"], ["b", "beta1"], ["beta1", "beta2"]]);
    let partners = wakamatsu_partners(&a).unwrap();
    let dims: Vec<(usize, usize)> = partners.iter().map(|r| (r.s_basis.len(), r.m_basis.len())).collect();
    assert_eq!(dims, [(4, 0), (3, 1), (3, 1), (2, 2)]);
    assert!(partners.iter().all(|r| r.holds() && r.partner_dim == 4));
}
