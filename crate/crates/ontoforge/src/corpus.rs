//! The reference corpus: a teaching ontology about software testing, plus
//! six mutants that exercise every clash code the reasoner knows.
//!
//! The same values are shipped as `.ofn` files under `corpus/` (regenerate
//! with `cargo run --example gen_corpus`); the test suite pins the files to
//! the built values byte-for-byte.

use crate::model::{
    vocab, AnnotationValue, Axiom, Characteristic, EntityKind, Iri, Literal, Ontology,
};
use crate::reasoner::ClashCode;

/// IRI of the teaching ontology document.
pub const ONTOLOGY_IRI: &str = "http://example.org/testing";

/// Namespace of every corpus entity, bound to the `test` prefix.
pub const NS: &str = "http://example.org/testing#";

fn entity(local: &str) -> Iri {
    Iri::new(format!("{NS}{local}")).expect("corpus entity IRIs are valid")
}

fn dc(local: &str) -> Iri {
    Iri::new(format!("{}{local}", vocab::DC_NS)).expect("dc IRIs are valid")
}

const CLASSES: [&str; 16] = [
    "TestingTerminology",
    "TestingPhases",
    "UnitTesting",
    "IntegrationTesting",
    "TestingTechniques",
    "ErrorBasedTechnique",
    "ErrorSeeding",
    "ErrorGuessing",
    "MutationAnalysis",
    "FunctionalTechnique",
    "StructuralTechnique",
    "OOPParadigm",
    "Encapsulation",
    "ControlFlowStatements",
    "ProgrammingLanguage",
    "AdvancedConcepts",
];

const SUBCLASS_EDGES: [(&str, &str); 9] = [
    ("UnitTesting", "TestingPhases"),
    ("IntegrationTesting", "TestingPhases"),
    ("ErrorBasedTechnique", "TestingTechniques"),
    ("FunctionalTechnique", "TestingTechniques"),
    ("StructuralTechnique", "TestingTechniques"),
    ("ErrorSeeding", "ErrorBasedTechnique"),
    ("ErrorGuessing", "ErrorBasedTechnique"),
    ("MutationAnalysis", "ErrorBasedTechnique"),
    ("Encapsulation", "OOPParadigm"),
];

/// (property, domain, range); every property is asymmetric and irreflexive.
const PROPERTIES: [(&str, &str, &str); 3] = [
    ("areAutomatedBy", "TestingTechniques", "AdvancedConcepts"),
    ("isAppliedIn", "TestingTerminology", "OOPParadigm"),
    ("utilizes", "OOPParadigm", "ProgrammingLanguage"),
];

/// Builds the teaching ontology: a class hierarchy of testing terminology,
/// three object properties tying testing concepts to the object-oriented
/// programming world, one disjointness (testing phases vs. techniques), and
/// Dublin Core annotations on the ontology itself. Consistent by
/// construction: it holds no individuals and no conflicting characteristics.
pub fn build_teaching_ontology() -> Ontology {
    let mut o = Ontology::new(Iri::new(ONTOLOGY_IRI).unwrap());
    o.prefixes_mut()
        .bind("test", Iri::new(NS).unwrap())
        .unwrap();
    o.prefixes_mut()
        .bind("dc", Iri::new(vocab::DC_NS).unwrap())
        .unwrap();

    let add = |o: &mut Ontology, axiom: Axiom| {
        o.add_axiom(axiom).expect("corpus axioms are well-formed");
    };

    for class in CLASSES {
        add(&mut o, Axiom::Declaration(EntityKind::Class, entity(class)));
    }
    for (sub, sup) in SUBCLASS_EDGES {
        add(&mut o, Axiom::SubClassOf(entity(sub), entity(sup)));
    }
    for (property, domain, range) in PROPERTIES {
        let p = entity(property);
        add(&mut o, Axiom::Declaration(EntityKind::ObjectProperty, p.clone()));
        add(&mut o, Axiom::ObjectPropertyDomain(p.clone(), entity(domain)));
        add(&mut o, Axiom::ObjectPropertyRange(p.clone(), entity(range)));
        add(
            &mut o,
            Axiom::PropertyCharacteristic(p.clone(), Characteristic::Asymmetric),
        );
        add(
            &mut o,
            Axiom::PropertyCharacteristic(p, Characteristic::Irreflexive),
        );
    }
    add(
        &mut o,
        Axiom::DisjointClasses(vec![entity("TestingPhases"), entity("TestingTechniques")]),
    );

    for prop in ["creator", "description"] {
        add(
            &mut o,
            Axiom::Declaration(EntityKind::AnnotationProperty, dc(prop)),
        );
    }
    let subject = o.iri().clone();
    add(
        &mut o,
        Axiom::AnnotationAssertion(
            dc("creator"),
            subject.clone(),
            AnnotationValue::Literal(Literal::string("ontoforge corpus")),
        ),
    );
    add(
        &mut o,
        Axiom::AnnotationAssertion(
            dc("description"),
            subject,
            AnnotationValue::Literal(Literal::string(
                "A teaching ontology of software testing: testing phases, testing \
                 techniques, and their connection to object-oriented programming.",
            )),
        ),
    );

    o
}

/// What the reasoner is expected to say about a fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    /// The exact multiset of clash codes, sorted.
    Inconsistent(Vec<ClashCode>),
}

/// One corpus fixture: an ontology with its pinned reasoner verdict.
#[derive(Debug, Clone)]
pub struct CorpusFixture {
    /// Short stable id, also the `.ofn` file stem (`m1` … `m6`).
    pub id: &'static str,
    /// Human-readable scenario name.
    pub name: &'static str,
    pub ontology: Ontology,
    pub expected: Verdict,
    /// Expected number of unsatisfiability warnings.
    pub expected_warnings: usize,
}

fn mutant(id: &str, base: &Ontology, extra: Vec<Axiom>) -> Ontology {
    let mut o = base.clone();
    o.set_iri(Iri::new(format!("http://example.org/testing/mutants/{id}")).unwrap());
    for axiom in extra {
        o.add_axiom(axiom).expect("mutant axioms are well-formed");
    }
    o
}

/// Builds the six mutants. Each is the teaching ontology plus a small,
/// deliberate fault (or, for the two control fixtures, a change that looks
/// like a fault but is not one):
///
/// * `m1` — `isAppliedIn` additionally declared Reflexive, contradicting its
///   Asymmetric and Irreflexive declarations
/// * `m2` — individual `i1` asserted into both halves of the disjoint pair
/// * `m3` — `m2` with the disjointness removed: open-world control, the
///   shared individual is fine without the disjointness
/// * `m4` — `utilizes` links two individuals in both directions
/// * `m5` — `isAppliedIn` self-loop, violating irreflexivity and asymmetry
///   at once
/// * `m6` — a class squeezed under both disjoint classes but never
///   instantiated: satisfiability warning, not a clash
pub fn build_mutants() -> Vec<CorpusFixture> {
    let base = build_teaching_ontology();
    let i1 = entity("i1");
    let oop1 = entity("oop1");
    let java1 = entity("java1");
    let term1 = entity("term1");

    let m1 = mutant(
        "m1",
        &base,
        vec![Axiom::PropertyCharacteristic(
            entity("isAppliedIn"),
            Characteristic::Reflexive,
        )],
    );

    let m2 = mutant(
        "m2",
        &base,
        vec![
            Axiom::Declaration(EntityKind::NamedIndividual, i1.clone()),
            Axiom::ClassAssertion(entity("TestingPhases"), i1.clone()),
            Axiom::ClassAssertion(entity("TestingTechniques"), i1.clone()),
        ],
    );

    let mut m3 = m2.clone();
    m3.set_iri(Iri::new("http://example.org/testing/mutants/m3").unwrap());
    assert!(m3.remove_axiom(&Axiom::DisjointClasses(vec![
        entity("TestingPhases"),
        entity("TestingTechniques"),
    ])));

    let m4 = mutant(
        "m4",
        &base,
        vec![
            Axiom::Declaration(EntityKind::NamedIndividual, oop1.clone()),
            Axiom::Declaration(EntityKind::NamedIndividual, java1.clone()),
            Axiom::ObjectPropertyAssertion(entity("utilizes"), oop1.clone(), java1.clone()),
            Axiom::ObjectPropertyAssertion(entity("utilizes"), java1, oop1),
        ],
    );

    let m5 = mutant(
        "m5",
        &base,
        vec![
            Axiom::Declaration(EntityKind::NamedIndividual, term1.clone()),
            Axiom::ObjectPropertyAssertion(entity("isAppliedIn"), term1.clone(), term1),
        ],
    );

    let m6 = mutant(
        "m6",
        &base,
        vec![
            Axiom::Declaration(EntityKind::Class, entity("PhaseTechnique")),
            Axiom::SubClassOf(entity("PhaseTechnique"), entity("TestingPhases")),
            Axiom::SubClassOf(entity("PhaseTechnique"), entity("TestingTechniques")),
        ],
    );

    vec![
        CorpusFixture {
            id: "m1",
            name: "reflexive-asymmetric",
            ontology: m1,
            expected: Verdict::Inconsistent(vec![ClashCode::CharConflict]),
            expected_warnings: 0,
        },
        CorpusFixture {
            id: "m2",
            name: "disjoint-instance",
            ontology: m2,
            expected: Verdict::Inconsistent(vec![ClashCode::DisjointViolation]),
            expected_warnings: 0,
        },
        CorpusFixture {
            id: "m3",
            name: "open-world-control",
            ontology: m3,
            expected: Verdict::Consistent,
            expected_warnings: 0,
        },
        CorpusFixture {
            id: "m4",
            name: "asym-pair",
            ontology: m4,
            expected: Verdict::Inconsistent(vec![ClashCode::AsymViolation]),
            expected_warnings: 0,
        },
        CorpusFixture {
            id: "m5",
            name: "irreflexive-loop",
            ontology: m5,
            expected: Verdict::Inconsistent(vec![
                ClashCode::AsymViolation,
                ClashCode::IrreflexViolation,
            ]),
            expected_warnings: 0,
        },
        CorpusFixture {
            id: "m6",
            name: "unsat-class",
            ontology: m6,
            expected: Verdict::Consistent,
            expected_warnings: 1,
        },
    ]
}
