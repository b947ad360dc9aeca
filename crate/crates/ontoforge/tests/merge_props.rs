//! Merge algebra: commutativity, associativity, idempotence, union
//! semantics, and clash reporting across inputs.

use std::collections::BTreeSet;

use ontoforge::corpus::build_teaching_ontology;
use ontoforge::model::{Axiom, EntityKind};
use ontoforge::testkit::{random_instance_ontology, random_ontology, Rng};
use ontoforge::{check_consistency, merge, ClashCode, Iri, Ontology};

fn iri(s: &str) -> Iri {
    Iri::new(s).unwrap()
}

/// Random ontologies drawn for merging share the generator namespaces, so
/// their prefix maps agree and their entities overlap — the interesting
/// case.
#[test]
fn merge_commutes_on_100_random_pairs() {
    let mut rng = Rng::new(0x6e72);
    let target = iri("http://gen.example/merged");
    for case in 0..100 {
        let a = random_instance_ontology(&mut rng);
        let b = random_instance_ontology(&mut rng);
        let (ab, report_ab) = merge(&[a.clone(), b.clone()], target.clone()).unwrap();
        let (ba, report_ba) = merge(&[b.clone(), a.clone()], target.clone()).unwrap();
        assert_eq!(ab, ba, "case #{case}: merged ontologies differ by order");
        assert_eq!(report_ab, report_ba, "case #{case}: reports differ by order");

        // Union semantics, both directions.
        for axiom in a.axioms().chain(b.axioms()) {
            assert!(ab.contains(axiom), "case #{case}: dropped an input axiom");
        }
        for axiom in ab.axioms() {
            assert!(
                a.contains(axiom) || b.contains(axiom),
                "case #{case}: invented axiom {axiom:?}"
            );
        }

        // Every input clash survives the merge.
        let merged_ids: BTreeSet<(ClashCode, Vec<Iri>)> = check_consistency(&ab)
            .clashes
            .into_iter()
            .map(|c| (c.code, c.subjects))
            .collect();
        for input in [&a, &b] {
            for clash in check_consistency(input).clashes {
                assert!(
                    merged_ids.contains(&(clash.code, clash.subjects.clone())),
                    "case #{case}: input clash lost in merge"
                );
            }
        }
    }
}

#[test]
fn merge_associates_on_100_random_triples() {
    let mut rng = Rng::new(0xa550);
    let target = iri("http://gen.example/merged");
    let step = iri("http://gen.example/step");
    for case in 0..100 {
        let a = random_instance_ontology(&mut rng);
        let b = random_instance_ontology(&mut rng);
        let c = random_instance_ontology(&mut rng);
        let (flat, _) = merge(&[a.clone(), b.clone(), c.clone()], target.clone()).unwrap();
        let (ab, _) = merge(&[a.clone(), b.clone()], step.clone()).unwrap();
        let (left, _) = merge(&[ab, c.clone()], target.clone()).unwrap();
        let (bc, _) = merge(&[b, c], step.clone()).unwrap();
        let (right, _) = merge(&[a, bc], target.clone()).unwrap();
        assert_eq!(flat, left, "case #{case}: (ab)c differs from flat merge");
        assert_eq!(flat, right, "case #{case}: a(bc) differs from flat merge");
    }
}

#[test]
fn merging_with_itself_is_identity_modulo_iri() {
    let mut rng = Rng::new(0x1d);
    for _ in 0..20 {
        let o = random_ontology(&mut rng);
        let (merged, report) = merge(
            &[o.clone(), o.clone()],
            iri("http://gen.example/self-merged"),
        )
        .unwrap();
        assert_eq!(report.duplicate_axioms, o.axiom_count());
        assert!(report.prefix_conflicts.is_empty());
        let mut expected = o.clone();
        expected.set_iri(iri("http://gen.example/self-merged"));
        expected.clear_imports();
        assert_eq!(merged, expected);
    }
}

/// The corpus is consistent; an extension putting one individual into both
/// disjoint classes is consistent on its own (it carries no disjointness);
/// their merge clashes — and the report pins the clash as introduced.
#[test]
fn corpus_plus_disjoint_extension_introduces_a_clash() {
    let corpus = build_teaching_ontology();
    let shared = iri("http://example.org/testing#shared");
    let mut extension = Ontology::new(iri("http://example.org/testing/extension"));
    extension
        .prefixes_mut()
        .bind("test", iri("http://example.org/testing#"))
        .unwrap();
    for axiom in [
        Axiom::Declaration(EntityKind::NamedIndividual, shared.clone()),
        Axiom::ClassAssertion(iri("http://example.org/testing#TestingPhases"), shared.clone()),
        Axiom::ClassAssertion(
            iri("http://example.org/testing#TestingTechniques"),
            shared.clone(),
        ),
    ] {
        extension.add_axiom(axiom).unwrap();
    }

    assert!(check_consistency(&corpus).is_consistent());
    assert!(check_consistency(&extension).is_consistent());

    let (merged, report) = merge(
        &[corpus, extension],
        iri("http://example.org/testing-merged"),
    )
    .unwrap();
    assert!(!check_consistency(&merged).is_consistent());
    assert_eq!(report.introduced_clashes.len(), 1);
    let clash = &report.introduced_clashes[0];
    assert_eq!(clash.code, ClashCode::DisjointViolation);
    assert_eq!(
        clash.subjects,
        vec![
            shared,
            iri("http://example.org/testing#TestingPhases"),
            iri("http://example.org/testing#TestingTechniques"),
        ]
    );
}
