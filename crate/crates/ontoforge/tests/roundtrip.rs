//! Round-trip and determinism properties of the functional syntax.

use ontoforge::corpus::{build_mutants, build_teaching_ontology};
use ontoforge::testkit::{random_instance_ontology, random_ontology, Rng};
use ontoforge::{parse_functional, serialize_functional, Ontology};

fn assert_roundtrips(o: &Ontology, label: &str) {
    let text = serialize_functional(o);
    let back = parse_functional(&text)
        .unwrap_or_else(|e| panic!("{label}: canonical text failed to reparse: {e}\n{text}"));
    assert_eq!(&back, o, "{label}: round-trip changed the ontology");
    // Canonical text is a fixpoint: serializing the reparse is byte-identical.
    assert_eq!(serialize_functional(&back), text, "{label}: unstable serialization");
}

#[test]
fn corpus_and_mutants_roundtrip() {
    assert_roundtrips(&build_teaching_ontology(), "teaching");
    for fixture in build_mutants() {
        assert_roundtrips(&fixture.ontology, fixture.id);
    }
}

#[test]
fn random_ontologies_roundtrip() {
    let mut rng = Rng::new(0x0f6e_70a9);
    for case in 0..100 {
        let o = random_ontology(&mut rng);
        assert_roundtrips(&o, &format!("random #{case}"));
    }
}

#[test]
fn instance_heavy_ontologies_roundtrip() {
    let mut rng = Rng::new(0x51ab);
    for case in 0..50 {
        let o = random_instance_ontology(&mut rng);
        assert_roundtrips(&o, &format!("instance #{case}"));
    }
}

#[test]
fn equal_ontologies_serialize_byte_identically() {
    // Build the same ontology through two different routes: direct
    // construction and reparse-of-serialization.
    let mut rng = Rng::new(7);
    for _ in 0..20 {
        let a = random_ontology(&mut rng);
        let b = parse_functional(&serialize_functional(&a)).unwrap();
        assert_eq!(a, b);
        assert_eq!(serialize_functional(&a), serialize_functional(&b));
    }
}

#[test]
fn axiom_insertion_order_does_not_show() {
    // The same axioms added in reverse order must serialize identically.
    let base = build_teaching_ontology();
    let mut reversed = Ontology::new(base.iri().clone());
    for (prefix, ns) in base.prefixes().bindings() {
        reversed.prefixes_mut().bind(prefix, ns.clone()).unwrap();
    }
    let axioms: Vec<_> = base.axioms().cloned().collect();
    for axiom in axioms.into_iter().rev() {
        reversed.add_axiom(axiom).unwrap();
    }
    assert_eq!(serialize_functional(&base), serialize_functional(&reversed));
}

mod error_honesty {
    use ontoforge::parse_functional;
    use proptest::prelude::*;

    fn in_bounds(src: &str, line: usize, column: usize) -> bool {
        if line == 0 || column == 0 {
            return false;
        }
        // A position may point one past the end of a line (end-of-input or
        // end-of-line), hence the +1 slack.
        let lines: Vec<&str> = src.split('\n').collect();
        if line > lines.len() {
            return false;
        }
        column <= lines[line - 1].chars().count() + 1
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        // Arbitrary garbage: the parser must reject it with a positioned
        // error (or, vanishingly rarely, parse it) — never panic.
        #[test]
        fn arbitrary_text_never_panics(src in ".{0,200}") {
            match parse_functional(&src) {
                Ok(_) => {}
                Err(e) => prop_assert!(
                    in_bounds(&src, e.line, e.column),
                    "out-of-bounds error position {}:{} for {:?}",
                    e.line, e.column, src
                ),
            }
        }

        // Near-valid documents: mutate the canonical corpus text.
        #[test]
        fn mutated_corpus_text_never_panics(
            cut in 0usize..2000,
            insert in 0usize..2000,
            junk in "[\\PC\n\"\\\\()<>#^]{1,4}",
        ) {
            let base = ontoforge::serialize_functional(
                &ontoforge::corpus::build_teaching_ontology(),
            );
            let cut = cut.min(base.len());
            let mut src: String = base.chars().take(cut).collect();
            let insert = insert.min(src.len());
            // Insert at a char boundary.
            let at = src
                .char_indices()
                .map(|(i, _)| i)
                .take_while(|&i| i <= insert)
                .last()
                .unwrap_or(0);
            src.insert_str(at, &junk);
            match parse_functional(&src) {
                Ok(_) => {}
                Err(e) => prop_assert!(
                    in_bounds(&src, e.line, e.column),
                    "out-of-bounds error position {}:{} in mutated doc",
                    e.line, e.column
                ),
            }
        }
    }
}

#[test]
fn multiline_literals_survive() {
    let source = "Prefix(g:=<http://x/>)\nOntology(<http://x/o>\nAnnotationAssertion(g:note g:s \"first\nsecond \\\"quoted\\\"\nthird\")\n)\n";
    let o = parse_functional(source).unwrap();
    let text = serialize_functional(&o);
    let back = parse_functional(&text).unwrap();
    assert_eq!(back, o);
}
