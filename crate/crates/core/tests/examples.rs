//! Worked examples, checked through the public API.

mod common;

use b1a::algebra::{b1, example_6_2, trivial};
use b1a::congruence::Congruence;
use b1a::format::{parse_algebra, write_algebra};
use b1a::*;
use common::{ideal, isomorphic, set_of};

fn sets(alg: &FiniteB1Algebra, family: &[Ideal]) -> Vec<String> {
    family.iter().map(|i| i.format(alg)).collect()
}

fn e(alg: &FiniteB1Algebra, label: &str) -> ElementId {
    alg.element(label).unwrap()
}

#[test]
fn b1_from_boolean_tables() {
    let alg = build_algebra(
        &["0", "1"],
        &[vec!["0", "1"], vec!["1", "1"]],
        &[vec!["0", "0"], vec!["0", "1"]],
        "0",
        "1",
    )
    .unwrap();
    assert_eq!(alg.order(), 2);
    assert!(isomorphic(&alg, &b1()));
}

#[test]
fn symmetric_mutation_of_xy_is_rejected_with_witness() {
    let alg = example_6_2();
    let names: Vec<&str> = alg.names().iter().map(String::as_str).collect();
    let table = |f: &dyn Fn(ElementId, ElementId) -> ElementId| -> Vec<Vec<String>> {
        alg.elements()
            .map(|a| {
                alg.elements()
                    .map(|b| alg.name(f(a, b)).to_string())
                    .collect()
            })
            .collect()
    };
    let add = table(&|a, b| alg.add(a, b));
    let (x, y) = (e(&alg, "x"), e(&alg, "y"));
    let mut mul = table(&|a, b| alg.mul(a, b));
    mul[x.index()][y.index()] = "u".into();
    mul[y.index()][x.index()] = "u".into();
    match build_algebra(&names, &add, &mul, "0", "1") {
        Err(Error::Axioms(report)) => {
            assert!(!report.valid);
            let failed = report.failed_axioms();
            assert!(
                failed.contains(&Axiom::Distributive) || failed.contains(&Axiom::MulAssociative),
                "{failed:?}"
            );
            assert!(report.violations.iter().all(|v| !v.witness.is_empty()));
        }
        other => panic!("expected an axiom report, got {other:?}"),
    }
}

#[test]
fn natural_order() {
    let alg = example_6_2();
    assert!(leq(&alg, e(&alg, "z"), e(&alg, "x")));
    assert!(!leq(&alg, e(&alg, "x"), e(&alg, "y")));
    assert!(alg.elements().all(|a| leq(&alg, alg.zero(), a)));
}

#[test]
fn products_and_chains() {
    let p = direct_product(&b1(), &b1()).unwrap();
    assert_eq!(p.algebra.order(), 4);
    assert_eq!(p.algebra.name(p.algebra.zero()), "(0;0)");
    assert_eq!(p.algebra.name(p.algebra.one()), "(1;1)");
    assert!(!p.exceeds_bound);

    let p = direct_product(&b1(), &example_6_2()).unwrap();
    assert_eq!(p.algebra.order(), 12);

    let a = example_6_2();
    assert!(isomorphic(
        &direct_product(&a, &trivial()).unwrap().algebra,
        &a
    ));

    let big = direct_product(&p.algebra, &b1()).unwrap();
    assert_eq!(big.algebra.order(), 24);
    assert!(big.exceeds_bound);

    assert!(isomorphic(&chain_algebra(2).unwrap(), &b1()));
    assert!(matches!(chain_algebra(1), Err(Error::ChainTooShort(1))));

    let c3 = chain_algebra(3).unwrap();
    let ideals = enumerate_ideals(&c3, 20).unwrap();
    assert_eq!(ideals.len(), 3);
    for i in ideals.iter().filter(|i| i.is_proper(&c3)) {
        assert!(is_prime(&c3, i) && is_saturated(&c3, i));
    }
    let c5 = chain_algebra(5).unwrap();
    let ideals = enumerate_ideals(&c5, 20).unwrap();
    assert_eq!(ideals.len(), 5);
    assert!(ideals.windows(2).all(|w| w[0].is_subset(&w[1])));
}

#[test]
fn builtins() {
    assert_eq!(builtin("b1").unwrap().order(), 2);
    assert_eq!(builtin("example-6-2").unwrap().order(), 6);
    assert_eq!(builtin("chain-4").unwrap().order(), 4);
    assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
}

#[test]
fn generation_saturation_radical() {
    let a = example_6_2();
    assert_eq!(generated_ideal(&a, set_of(&a, "x")).format(&a), "0,x");
    assert_eq!(generated_ideal(&a, ElementSet::EMPTY).format(&a), "0");
    assert_eq!(generated_ideal(&a, set_of(&a, "u")).format(&a), "0,x,y,u");

    assert_eq!(saturation(&a, &ideal(&a, "0,x")).format(&a), "0,z,x");
    assert_eq!(saturation(&a, &ideal(&a, "0")).format(&a), "0");
    assert_eq!(
        saturation(&a, &ideal(&a, "0,x,y,u")).format(&a),
        "0,z,x,y,u"
    );
    assert!(is_saturated(&a, &ideal(&a, "0,z,x")));
    assert!(!is_saturated(&a, &ideal(&a, "0,x")));

    assert_eq!(radical(&a, &ideal(&a, "0")).format(&a), "0,z");
    assert_eq!(radical(&a, &Ideal::whole(&a)), Ideal::whole(&a));
    assert_eq!(radical(&a, &ideal(&a, "0,x,y,u")).format(&a), "0,z,x,y,u");
}

#[test]
fn ideal_arithmetic_and_annihilators() {
    let a = example_6_2();
    let (p, q) = (ideal(&a, "0,z,x"), ideal(&a, "0,z,y"));
    assert_eq!(ideal_intersect(&p, &q).format(&a), "0,z");
    assert_eq!(ideal_product(&a, &p, &q).format(&a), "0");
    assert_eq!(ideal_sum(&a, &p, &Ideal::zero(&a)), p);
    assert_eq!(ideal_sum(&a, &p, &q).format(&a), "0,z,x,y,u");

    assert_eq!(annihilator(&a, e(&a, "x")).format(&a), "0,z,y");
    assert_eq!(annihilator(&a, a.zero()), Ideal::whole(&a));
    assert_eq!(annihilator(&a, e(&a, "z")).format(&a), "0,z,x,y,u");
    assert_eq!(annihilator_set(&a, ElementSet::EMPTY), Ideal::whole(&a));

    assert_eq!(
        conductor(&a, e(&a, "x"), &Ideal::zero(&a)).format(&a),
        "0,z,y"
    );
    assert_eq!(conductor(&a, a.zero(), &p), Ideal::whole(&a));
    assert_eq!(conductor(&a, e(&a, "u"), &p).format(&a), "0,z,x");
}

#[test]
fn enumeration() {
    let a = example_6_2();
    assert_eq!(enumerate_ideals(&a, 20).unwrap().len(), 9);
    let sat = enumerate_saturated_ideals(&a, 20).unwrap();
    assert_eq!(
        sets(&a, &sat),
        ["0", "0,z", "0,z,x", "0,z,y", "0,z,x,y,u", "0,z,x,y,u,1"]
    );
    let b = b1();
    assert_eq!(sets(&b, &enumerate_ideals(&b, 20).unwrap()), ["0", "0,1"]);
    assert!(matches!(
        enumerate_ideals(&a, 5),
        Err(Error::BoundExceeded { order: 6, bound: 5 })
    ));
}

#[test]
fn bourne_congruences_and_quotients() {
    let a = example_6_2();
    let c = bourne_congruence(&a, &ideal(&a, "0,z"));
    let classes: Vec<String> = c.classes().iter().map(|s| a.format_set(*s)).collect();
    assert_eq!(classes, ["0,z", "x", "y", "u", "1"]);
    assert_eq!(bourne_congruence(&a, &Ideal::zero(&a)).classes().len(), 6);
    let top = bourne_congruence(&a, &ideal(&a, "0,z,x,y,u"));
    let classes: Vec<String> = top.classes().iter().map(|s| a.format_set(*s)).collect();
    assert_eq!(classes, ["0,z,x,y,u", "1"]);

    let q = quotient(&a, &top).unwrap();
    assert!(isomorphic(&q.target, &b1()));
    assert_eq!(
        preimage_ideal(&q, &Ideal::zero(&q.target)).format(&a),
        "0,z,x,y,u"
    );
    assert_eq!(
        preimage_ideal(&q, &Ideal::whole(&q.target)),
        Ideal::whole(&a)
    );

    let d = quotient(&a, &Congruence::discrete(&a)).unwrap();
    assert!(isomorphic(&d.target, &a));

    let q = quotient(&a, &c).unwrap();
    assert_eq!(q.target.order(), 5);
    let img = q.image_ideal(&ideal(&a, "0,z,x"));
    assert_eq!(preimage_ideal(&q, &img).format(&a), "0,z,x");
}

#[test]
fn prime_and_primary() {
    let a = example_6_2();
    assert!(is_prime(&a, &ideal(&a, "0,z,x")));
    assert!(!is_prime(&a, &ideal(&a, "0,z")));
    assert!(!is_prime(&a, &Ideal::whole(&a)));
    assert!(is_primary(&a, &ideal(&a, "0,x,y,u")));
    assert!(!is_primary(&a, &ideal(&a, "0,z")));
    for i in enumerate_ideals(&a, 20).unwrap() {
        if is_prime(&a, &i) {
            assert!(is_primary(&a, &i));
        }
    }
}

#[test]
fn spectrum_of_the_example() {
    let a = example_6_2();
    let l = IdealLattice::new(&a, 20).unwrap();
    let s = l.spectrum().unwrap();
    assert_eq!(sets(&a, &s.primes), ["0,z,x", "0,z,y", "0,z,x,y,u"]);
    assert_eq!(s.primes, s.saturated_primes);
    assert_eq!(sets(&a, &s.min_primes), ["0,z,x", "0,z,y"]);
    assert_eq!(s.min_primes, s.min_saturated_primes);
    assert_eq!(sets(&a, &s.max_saturated), ["0,z,x,y,u"]);
    assert!(is_prime(&a, &s.max_saturated[0]));
    assert_eq!(a.format_set(s.zero_divisors), "z,x,y,u");
    assert_eq!(a.format_set(divisor_set(&a, &Ideal::zero(&a))), "0,z,x,y,u");
    assert_eq!(nilradical(&a).format(&a), "0,z");
    assert!(s.standard.standard);
    assert_eq!(sets(&a, &s.standard.cover), ["0,z,x,y,u"]);

    let z_assoc = s
        .associated
        .iter()
        .find(|ap| ap.prime.format(&a) == "0,z,x,y,u")
        .unwrap();
    assert_eq!(a.name(z_assoc.witness), "z");
}

#[test]
fn small_spectra() {
    let b = b1();
    assert!(zero_divisors(&b).is_empty());
    assert_eq!(nilradical(&b).format(&b), "0");
    let l = IdealLattice::new(&b, 20).unwrap();
    let ass = l.associated_primes().unwrap();
    assert_eq!(ass.len(), 1);
    assert_eq!(
        (b.name(ass[0].witness), ass[0].prime.format(&b)),
        ("1", "0".to_string())
    );
    assert!(l.standardness().standard);

    for n in 2..=6 {
        let c = chain_algebra(n).unwrap();
        assert_eq!(nilradical(&c), Ideal::zero(&c));
        assert!(IdealLattice::new(&c, 20).unwrap().standardness().standard);
    }
}

#[test]
fn decompositions() {
    let a = example_6_2();
    let d = weak_decompose(&a, &ideal(&a, "0,z")).unwrap();
    assert_eq!(sets(&a, &d.components), ["0,z,x", "0,z,y"]);
    assert_eq!(d.intersection(&a).format(&a), "0,z");
    let top = ideal(&a, "0,z,x,y,u");
    assert_eq!(weak_decompose(&a, &top).unwrap().components, [top]);

    let c4 = chain_algebra(4).unwrap();
    for j in enumerate_ideals(&c4, 20)
        .unwrap()
        .iter()
        .filter(|j| j.is_proper(&c4))
    {
        assert_eq!(weak_decompose(&c4, j).unwrap().components, [*j]);
    }

    let r = radical_decomposition(&a, &Ideal::zero(&a)).unwrap();
    assert_eq!(sets(&a, &r.components), ["0,z,x", "0,z,y"]);
    assert_eq!(r.intersection(&a), nilradical(&a));
    let b = b1();
    assert_eq!(
        sets(
            &b,
            &radical_decomposition(&b, &Ideal::zero(&b))
                .unwrap()
                .components
        ),
        ["0"]
    );
    let p = ideal(&a, "0,z,x");
    assert_eq!(radical_decomposition(&a, &p).unwrap().components, [p]);

    assert!(matches!(
        weak_decompose(&a, &ideal(&a, "0")),
        Err(Error::NotRadical(..))
    ));
    assert!(matches!(
        weak_decompose(&a, &ideal(&a, "0,x")),
        Err(Error::NotSaturated(..))
    ));
    assert!(matches!(
        weak_decompose(&a, &Ideal::whole(&a)),
        Err(Error::WholeAlgebra)
    ));
}

#[test]
fn minimalize_drops_redundant_components() {
    let a = example_6_2();
    let redundant = DecompositionResult {
        input: ideal(&a, "0,z"),
        components: vec![
            ideal(&a, "0,z,x"),
            ideal(&a, "0,z,y"),
            ideal(&a, "0,z,x,y,u"),
        ],
        irredundant: false,
        split_trace: Vec::new(),
    };
    let m = minimalize(&a, &redundant);
    assert_eq!(sets(&a, &m.components), ["0,z,x", "0,z,y"]);
    assert!(m.irredundant);
    assert_eq!(m.intersection(&a), redundant.intersection(&a));

    let single = weak_decompose(&a, &ideal(&a, "0,z,x")).unwrap();
    assert_eq!(minimalize(&a, &single).components, single.components);
    let pair = weak_decompose(&a, &ideal(&a, "0,z")).unwrap();
    assert_eq!(minimalize(&a, &pair).components, pair.components);
}

#[test]
fn laskerian_verdicts() {
    let a = example_6_2();
    let r = laskerian_check(&IdealLattice::new(&a, 20).unwrap());
    assert!(!r.laskerian);
    assert_eq!(r.witness, Some(Ideal::zero(&a)));
    let b = b1();
    assert!(laskerian_check(&IdealLattice::new(&b, 20).unwrap()).laskerian);
    let c = chain_algebra(4).unwrap();
    assert!(laskerian_check(&IdealLattice::new(&c, 20).unwrap()).laskerian);
}

#[test]
fn evans_reports() {
    let a = example_6_2();
    let r = evans_report(&a, &Ideal::zero(&a)).unwrap();
    let maximal: Vec<(String, String)> = r
        .maximal_conductors
        .iter()
        .map(|(y, c)| (a.name(*y).to_string(), c.format(&a)))
        .collect();
    assert_eq!(maximal, [("z".to_string(), "0,z,x,y,u".to_string())]);
    assert!(r.all_prime && r.union_equals_divisor_set && r.passed);

    let top = ideal(&a, "0,z,x,y,u");
    let r = evans_report(&a, &top).unwrap();
    assert_eq!(r.maximal_conductors, [(a.one(), top)]);
    assert_eq!(r.divisor_set, top.members());
    assert!(r.passed);

    let b = b1();
    let r = evans_report(&b, &Ideal::zero(&b)).unwrap();
    assert_eq!(b.format_set(r.divisor_set), "0");
    assert!(r.passed);

    assert!(matches!(
        evans_report(&a, &Ideal::whole(&a)),
        Err(Error::WholeAlgebra)
    ));
    assert!(matches!(
        evans_report(&a, &ideal(&a, "0,x")),
        Err(Error::NotSaturated(..))
    ));
}

#[test]
fn audits_pass() {
    for alg in [
        example_6_2(),
        b1(),
        direct_product(&example_6_2(), &b1()).unwrap().algebra,
    ] {
        let l = IdealLattice::new(&alg, 20).unwrap();
        let report = audit::audit(&l);
        assert!(
            report.passed,
            "{:?}",
            report.checks.iter().find(|c| !c.passed)
        );
    }
    let a = example_6_2();
    assert!(!audit::audit(&IdealLattice::new(&a, 20).unwrap()).laskerian);
}

#[test]
fn file_format() {
    let a = example_6_2();
    let text = write_algebra(&a);
    let back = parse_algebra(&text).unwrap();
    assert_eq!(write_algebra(&back), text);

    let missing_one: String = text
        .lines()
        .filter(|l| !l.starts_with("one"))
        .collect::<Vec<_>>()
        .join("\n");
    let err = parse_algebra(&missing_one).unwrap_err();
    assert_eq!(err.to_string(), "missing directive: one");

    let short_row = text.replacen("x x x u u 1", "x x x u u", 1);
    let err = parse_algebra(&short_row).unwrap_err();
    assert!(matches!(err, Error::Dimension { .. }));
    assert!(err.to_string().contains("row `x`"), "{err}");
}
