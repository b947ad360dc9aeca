//! ontoforge: a small, self-contained ontology engineering toolkit.
//!
//! The library covers the full life of an OWL-style ontology document in a
//! deliberately compact dialect:
//!
//! * [`model`] — IRIs, prefix maps, axioms, and the [`Ontology`] container
//!   with set semantics and a canonical axiom order
//! * [`syntax`] — a functional-style text syntax (parse + canonical
//!   serialize) and an RDF/XML emitter
//! * [`reasoner`] — forward-chaining materialization with provenance,
//!   taxonomy classification, and consistency checking with typed clashes
//! * [`merge`] — catalog-driven import resolution, flattening, and n-way
//!   merging with conflict reports
//! * [`corpus`] — the built-in teaching ontology about software testing and
//!   its six deliberately faulty mutants
//! * [`testkit`] — seeded random fixture generators for tests and benches
//!
//! Everything is deterministic: parsing, serialization, reasoning, and
//! merging are pure functions of their inputs, and equal ontologies produce
//! byte-identical output.
//!
//! ```
//! use ontoforge::{check_consistency, parse_functional, serialize_functional};
//!
//! let source = r#"
//! Prefix(t:=<http://example.org/t#>)
//! Ontology(<http://example.org/t>
//!   Declaration(Class(t:Phase))
//!   Declaration(Class(t:Technique))
//!   DisjointClasses(t:Phase t:Technique)
//!   ClassAssertion(t:Phase t:x)
//!   ClassAssertion(t:Technique t:x)
//! )
//! "#;
//! let ontology = parse_functional(source)?;
//! let report = check_consistency(&ontology);
//! assert!(!report.is_consistent());
//! assert_eq!(report.clashes[0].code.as_str(), "DISJOINT-VIOLATION");
//!
//! // Round-trips canonically.
//! let text = serialize_functional(&ontology);
//! assert_eq!(parse_functional(&text)?, ontology);
//! # Ok::<(), ontoforge::ParseError>(())
//! ```

pub mod corpus;
pub mod merge;
pub mod model;
pub mod reasoner;
pub mod syntax;
pub mod testkit;

pub use model::{
    AnnotationValue, Axiom, Characteristic, EntityKind, Iri, Literal, ModelError, Ontology,
    PrefixMap, UndeclaredReference,
};
pub use reasoner::{
    check_consistency, classify, instances_of, materialize, subclasses_of, superclasses_of,
    unsatisfiable_classes, Clash, ClashCode, ConsistencyReport, Fact, InferredStore, Premise,
    Provenance, RuleId, Taxonomy, UnsatisfiableWarning,
};
pub use syntax::{parse_functional, serialize_functional, serialize_rdfxml, ParseError};
pub use merge::{
    flatten, merge, resolve_imports, Catalog, CatalogError, ImportClosure, ImportError,
    ImportWarning, MergeError, MergeReport, PrefixConflict,
};
