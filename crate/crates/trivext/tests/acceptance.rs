//! One line per acceptance criterion. Criteria known to be out of reach
//! are listed in `KNOWN_FAILING`; every other criterion must pass.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use trivext::cli::{run_on_text, Options, COMMANDS};
use trivext::corpus::{corpus, CorpusConfig};
use trivext::parse_presentation;
use trivext_core::cuts::{
    admissible_cuts, canonical_section_split, cut_quotient, is_trivial_extension, presentation_match,
    wakamatsu_partners, Cut, CutKind, SearchLimits,
};
use trivext_core::trivext::{symmetric_form, trivext_presentation};
use trivext_core::{FdAlgebra, SocleElement, TrivialExtension, DEFAULT_BOUND};

const KNOWN_FAILING: &[usize] = &[4];
const RANDOM: usize = 50;

fn fixture_text(name: &str) -> String {
    let path = format!("{}/fixtures/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn fixture(name: &str) -> FdAlgebra {
    FdAlgebra::build(parse_presentation(&fixture_text(name)).unwrap(), DEFAULT_BOUND).unwrap()
}

fn names(q: &trivext_core::Quiver, cuts: &[Cut]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = cuts.iter().map(|c| c.names(q).into_iter().map(String::from).collect()).collect();
    out.sort();
    out
}

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn criterion_1() -> Verdict {
    let a = fixture("loop");
    let t = TrivialExtension::new(a.clone());
    let q = a.quiver();
    let socle: Vec<String> = a.bimodule_socle().iter().map(|s| q.format_element(&s.element(&a))).collect();
    let tq = t.quiver();
    let cycles: Vec<String> = t.elementary_cycles().iter().map(|c| tq.format_path(&c.cycle())).collect();
    let cuts = names(tq, &admissible_cuts(t.elementary_cycles().iter().map(|c| &c.class)));
    let ok = a.dim() == 7
        && t.dim() == 14
        && socle == ["a.a.b"]
        && cycles == ["a.a.b.beta1"]
        && cuts == [vec!["b".to_string()], vec!["beta1".to_string()]];
    verdict(ok, format!("dim A {}, dim T {}, socle {socle:?}, cycles {cycles:?}, cuts {cuts:?}", a.dim(), t.dim()))
}

fn criterion_2() -> Verdict {
    let a = fixture("loop");
    let p = trivext_presentation(&a).unwrap();
    let alpha = p.quiver().arrow("a").unwrap();
    let cut = Cut { arrows: vec![alpha], kind: CutKind::Allowable };
    let b = FdAlgebra::build(cut_quotient(&p, &cut).unwrap(), DEFAULT_BOUND).unwrap();
    let bq = b.quiver();
    let rels: Vec<String> = b.groebner().generators().iter().map(|g| bq.format_element(g)).collect();
    verdict(2 * b.dim() != 14, format!("dim B = {}, relations {rels:?}, dim T(B) = {} != 14", b.dim(), 2 * b.dim()))
}

fn monomial_socle(a: &FdAlgebra, s: &str) -> SocleElement {
    let p = a.quiver().parse_path(s).unwrap();
    SocleElement { source: p.source(), target: p.target(), coords: a.path_coords(&p) }
}

fn sorted_weights(t: &TrivialExtension) -> Vec<String> {
    let mut w: Vec<String> = t.elementary_cycles().iter().map(|c| c.weight.to_string()).collect();
    w.sort();
    w
}

/// Weights in the socle basis `{g1.g2, e1.e2}`, and in the default basis.
fn criterion_3() -> Verdict {
    let a = fixture("three_paths");
    let socle = vec![monomial_socle(&a, "g1.g2"), monomial_socle(&a, "e1.e2")];
    let basis = a.extend_basis(&socle).unwrap();
    let t = TrivialExtension::with_basis(a.clone(), socle, basis, None).unwrap();
    let w = sorted_weights(&t);
    let default = sorted_weights(&TrivialExtension::new(a.clone()));
    let ok = a.bimodule_socle().len() == 2 && w == ["-2", "-3", "1", "1"];
    verdict(ok, format!("socle dim {}, weights {w:?} (default basis gives {default:?})", a.bimodule_socle().len()))
}

/// The socle basis named `delta1`..`delta14` with `delta6` left out. There
/// is one socle element in the block from 5 to 10, not two; it is `delta5`.
fn four_paths_named(a: &FdAlgebra) -> TrivialExtension {
    let q = a.quiver();
    let mono = |s: &str| monomial_socle(a, s);
    let mut d5 = mono("a1.a2");
    for (x, y) in d5.coords.iter_mut().zip(a.path_coords(&q.parse_path("b1.b2").unwrap())) {
        *x = &*x + &y;
    }
    let socle = vec![
        mono("e1.a1.a2"),
        mono("e2.a1.a2"),
        mono("e3.g1.g2"),
        mono("e4.g1.g2"),
        d5,
        mono("e1.g1"),
        mono("e2.g1"),
        mono("e1.h1"),
        mono("e2.h1"),
        mono("e3.a1"),
        mono("e3.b1"),
        mono("e4.a1"),
        mono("e4.b1"),
    ];
    let names: Vec<String> = [1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14].iter().map(|k| format!("delta{k}")).collect();
    let basis = a.extend_basis(&socle).unwrap();
    TrivialExtension::with_basis(a.clone(), socle, basis, Some(&names)).unwrap()
}

fn criterion_4() -> Verdict {
    let a = fixture("four_paths");
    let canonical = TrivialExtension::new(a.clone()).elementary_cycles().len();
    let t = four_paths_named(&a);
    let tq = t.quiver();
    let target = ["a1", "b1", "delta3", "delta4", "delta6", "delta7", "delta8", "delta9", "delta10"];
    let missing: Vec<&str> = target.iter().copied().filter(|n| tq.arrow(n).is_none()).collect();
    let mut present: Vec<_> = target.iter().filter_map(|n| tq.arrow(n)).collect();
    present.sort();
    let cuts = admissible_cuts(t.elementary_cycles().iter().map(|c| &c.class));
    let returned = missing.is_empty() && cuts.iter().any(|c| c.arrows == present);
    let extends = cuts.iter().filter(|c| present.iter().all(|x| c.contains(*x))).count();
    let (mut missed, mut twice) = (Vec::new(), Vec::new());
    for c in t.elementary_cycles() {
        let hits: usize = present.iter().map(|&x| c.class.multiplicity(x)).sum();
        let name = tq.format_path(&c.cycle());
        match hits {
            0 => missed.push(name),
            1 => {}
            _ => twice.push(name),
        }
    }
    let p = t.presentation().unwrap();
    let tfd = FdAlgebra::build(p, DEFAULT_BOUND).unwrap();
    let split = canonical_section_split(&tfd, &Cut { arrows: present, kind: CutKind::Admissible }).unwrap();
    let witness = split.witness.as_ref().map(|w| split.base.quiver().format_element(w));
    let split_ok = !split.split() && witness.as_deref() == Some("h1.h2 + g1.g2");
    verdict(
        canonical == 18 && t.elementary_cycles().len() == 18 && returned && split_ok,
        format!(
            "{canonical} cycles; target cut names missing arrows {missing:?}; the rest misses {missed:?}, \
             hits {twice:?} more than once, and lies in {extends} admissible cuts, returned: {returned}; \
             without delta6 the split check fails with witness {witness:?}"
        ),
    )
}

fn criterion_5() -> Verdict {
    let a = fixture("two_arms");
    let q = a.quiver();
    let w = is_trivial_extension(a.presentation(), &SearchLimits::default()).unwrap();
    let Some(w) = w else { return verdict(false, "no witness") };
    let b = FdAlgebra::build(w.base.clone(), DEFAULT_BOUND).unwrap();
    let bq = b.quiver();
    let rels: Vec<String> = b.groebner().generators().iter().map(|g| bq.format_element(g)).collect();
    let pairs: Vec<String> = w
        .correspondence
        .pairs
        .iter()
        .map(|(g, s)| format!("{}->{}", q.arrow_name(*g), bq.format_element(&s.element(&b))))
        .collect();
    let base_negative = {
        let b = fixture("two_arms_base");
        is_trivial_extension(b.presentation(), &SearchLimits::default()).unwrap().is_none()
    };
    let unrotated = fixture("two_arms_unrotated");
    let unrotated_witness = is_trivial_extension(unrotated.presentation(), &SearchLimits::default()).unwrap().is_some();
    let ok = w.cut.names(q) == ["a4", "a5"]
        && bq.arrow_count() == 3
        && rels == ["a1.a1"]
        && pairs == ["a4->a1.a2", "a5->a1.a3"]
        && base_negative;
    verdict(
        ok,
        format!(
            "cut {:?}, I_B {rels:?}, correspondence {pairs:?}, B negative: {base_negative}; \
             without the rotation relation: dim {}, witness {unrotated_witness}",
            w.cut.names(q),
            unrotated.dim()
        ),
    )
}

struct Corpus {
    items: Vec<(String, FdAlgebra)>,
}

fn build_corpus() -> Corpus {
    let mut items: Vec<(String, FdAlgebra)> =
        ["loop", "three_paths", "four_paths", "two_arms"].iter().map(|n| (n.to_string(), fixture(n))).collect();
    for (i, p) in corpus(2024, RANDOM, &CorpusConfig::default()).into_iter().enumerate() {
        items.push((format!("random{i}"), FdAlgebra::build(p, DEFAULT_BOUND).unwrap()));
    }
    Corpus { items }
}

fn criteria_6_7_9(c: &Corpus) -> (Verdict, Verdict, Verdict) {
    let (mut f6, mut f7, mut f9) = (Vec::new(), Vec::new(), Vec::new());
    let mut max_dim = 0;
    for (name, a) in &c.items {
        max_dim = max_dim.max(a.dim());
        let t = TrivialExtension::new(a.clone());
        let r = t.verify_relation_theorem().unwrap();
        if !r.passed() || r.quotient_dim != Some(2 * a.dim()) {
            f6.push(format!("{name}: {:?}", r.items.iter().find(|i| !i.passed).map(|i| (i.name, &i.witness))));
        }
        if let Some(bad) = t.cycle_properties().iter().find(|c| !c.passed) {
            f7.push(format!("{name}: {} {:?}", bad.name, bad.witness));
        }
        if !symmetric_form(t.sc()).passed() {
            f9.push(name.clone());
        }
    }
    let n = c.items.len();
    let line = |f: Vec<String>| verdict(f.is_empty(), format!("{n} algebras (max dim {max_dim}), failures {f:?}"));
    (line(f6), line(f7), line(f9))
}

fn criterion_8(c: &Corpus) -> Verdict {
    let limits = SearchLimits::default();
    let mut failures = Vec::new();
    let (mut round_trips, mut partners) = (0, 0);
    for (name, a) in &c.items {
        let p = trivext_presentation(a).unwrap();
        match is_trivial_extension(&p, &limits).unwrap() {
            Some(w) if presentation_match(&w.base, a.presentation(), &limits).unwrap().is_some() => round_trips += 1,
            Some(_) => failures.push(format!("{name}: recovered base does not match")),
            None => failures.push(format!("{name}: no witness")),
        }
        for r in wakamatsu_partners(a).unwrap() {
            partners += 1;
            if !r.holds() {
                failures.push(format!("{name}: certificates fail for cut {:?}", r.cut.arrows));
                continue;
            }
            let b = FdAlgebra::build(r.partner.clone(), DEFAULT_BOUND).unwrap();
            let tb = trivext_presentation(&b).unwrap();
            if presentation_match(&tb, &p, &limits).unwrap().is_none() {
                failures.push(format!("{name}: T(A') does not match T(A) for cut {:?}", r.cut.arrows));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!("{round_trips} round trips, {partners} partner reports, failures {failures:?}"),
    )
}

fn criterion_10() -> Verdict {
    let mut differing = Vec::new();
    let opts = Options { json: true, ..Options::default() };
    for name in ["loop", "three_paths", "four_paths", "two_arms", "two_arms_base"] {
        let text = fixture_text(name);
        for cmd in COMMANDS {
            let first = run_on_text(cmd, &opts, &text);
            let second = run_on_text(cmd, &opts, &text);
            if first != second || first.0.is_empty() {
                differing.push(format!("{name} {}", cmd.name()));
            }
        }
    }
    verdict(differing.is_empty(), format!("differing or empty reports: {differing:?}"))
}

#[test]
fn acceptance() {
    let mut results: BTreeMap<usize, Verdict> = BTreeMap::new();
    results.insert(1, criterion_1());
    results.insert(2, criterion_2());
    results.insert(3, criterion_3());
    results.insert(4, criterion_4());
    results.insert(5, criterion_5());
    let c = build_corpus();
    let (v6, v7, v9) = criteria_6_7_9(&c);
    results.insert(6, v6);
    results.insert(7, v7);
    results.insert(8, criterion_8(&c));
    results.insert(9, v9);
    results.insert(10, criterion_10());
    let mut out = String::from("\n");
    for (k, v) in &results {
        let _ = writeln!(out, "criterion {k}: {} ({})", if v.passed { "PASS" } else { "FAIL" }, v.detail);
    }
    // Written to the handle directly so the lines show without --nocapture.
    let _ = std::io::Write::write_all(&mut std::io::stderr(), out.as_bytes());
    let unexpected: Vec<usize> =
        results.iter().filter(|(k, v)| !v.passed && !KNOWN_FAILING.contains(k)).map(|(k, _)| *k).collect();
    assert!(unexpected.is_empty(), "failing criteria {unexpected:?}");
}
