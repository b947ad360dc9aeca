//! In-memory ontology model: IRIs, prefix tables, entities, axioms, and the
//! ontology container itself.
//!
//! Everything downstream (syntax, reasoning, merging) operates on these types.
//! Axioms are kept in canonical form inside an ordered set, so structural
//! equality and deterministic serialization fall out of the representation
//! instead of needing normalization passes later.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Well-known namespace and term IRIs used across the toolkit.
pub mod vocab {
    pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";
    pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";
    pub const DC_NS: &str = "http://purl.org/dc/elements/1.1/";

    pub const OWL_THING: &str = "http://www.w3.org/2002/07/owl#Thing";
    pub const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
}

/// Errors raised by the model layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid IRI `{value}`: {reason}")]
    InvalidIri { value: String, reason: &'static str },
    #[error("invalid prefix name `{0}`: must match [A-Za-z][A-Za-z0-9_-]* or be empty")]
    InvalidPrefixName(String),
    #[error("prefix `{0}` is not bound")]
    UnboundPrefix(String),
    #[error("malformed CURIE `{0}`: expected the form prefix:local")]
    InvalidCurie(String),
    #[error("invalid axiom: {0}")]
    InvalidAxiom(String),
    #[error("entity `{iri}` is declared as {existing} and cannot be redeclared as {requested}")]
    Punning {
        iri: Iri,
        existing: EntityKind,
        requested: EntityKind,
    },
}

/// An absolute IRI. The atom of the whole system.
///
/// The value is guaranteed non-empty and free of whitespace, angle brackets,
/// and double quotes, which is exactly the character set that would break the
/// concrete syntaxes. Equality is exact text comparison; ordering is
/// lexicographic byte order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, ModelError> {
        let value = value.into();
        if let Some(reason) = Self::violation(&value) {
            return Err(ModelError::InvalidIri { value, reason });
        }
        Ok(Iri(value))
    }

    fn violation(value: &str) -> Option<&'static str> {
        if value.is_empty() {
            return Some("must be non-empty");
        }
        for ch in value.chars() {
            match ch {
                ' ' | '\t' | '\n' | '\r' => return Some("must not contain whitespace"),
                '<' | '>' => return Some("must not contain angle brackets"),
                '"' => return Some("must not contain double quotes"),
                _ => {}
            }
        }
        None
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `owl:Thing`, the implicit root of every class hierarchy.
    pub fn thing() -> Self {
        Iri(vocab::OWL_THING.to_owned())
    }

    /// `xsd:string`, the default literal datatype.
    pub fn xsd_string() -> Self {
        Iri(vocab::XSD_STRING.to_owned())
    }

    pub fn is_thing(&self) -> bool {
        self.0 == vocab::OWL_THING
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Mapping from prefix names to namespace IRIs.
///
/// Prefix names match `[A-Za-z][A-Za-z0-9_-]*` or are empty (the default
/// prefix). Stored ordered so every consumer iterates bindings in sorted
/// prefix order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixMap {
    bindings: BTreeMap<String, Iri>,
}

impl PrefixMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid_prefix_name(name: &str) -> bool {
        if name.is_empty() {
            return true;
        }
        let mut chars = name.chars();
        let first = chars.next().unwrap();
        first.is_ascii_alphabetic()
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
    }

    /// Binds `prefix` to `namespace`, returning the previous binding if the
    /// prefix was already in use.
    pub fn bind(
        &mut self,
        prefix: impl Into<String>,
        namespace: Iri,
    ) -> Result<Option<Iri>, ModelError> {
        let prefix = prefix.into();
        if !Self::is_valid_prefix_name(&prefix) {
            return Err(ModelError::InvalidPrefixName(prefix));
        }
        Ok(self.bindings.insert(prefix, namespace))
    }

    pub fn namespace(&self, prefix: &str) -> Option<&Iri> {
        self.bindings.get(prefix)
    }

    pub fn bindings(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.bindings.iter().map(|(p, ns)| (p.as_str(), ns))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Expands `prefix:local` against the bound namespaces.
    pub fn expand(&self, curie: &str) -> Result<Iri, ModelError> {
        let (prefix, local) = curie
            .split_once(':')
            .ok_or_else(|| ModelError::InvalidCurie(curie.to_owned()))?;
        let ns = self
            .namespace(prefix)
            .ok_or_else(|| ModelError::UnboundPrefix(prefix.to_owned()))?;
        Iri::new(format!("{}{}", ns.as_str(), local))
    }

    /// Finds the longest bound namespace that prefixes `iri`, returning the
    /// prefix name and the remaining local part. Used by serializers for
    /// CURIE abbreviation; `None` when no namespace matches.
    pub fn abbreviate<'a>(&self, iri: &'a Iri) -> Option<(&str, &'a str)> {
        let text = iri.as_str();
        self.bindings
            .iter()
            .filter_map(|(p, ns)| {
                text.strip_prefix(ns.as_str())
                    .map(|local| (p.as_str(), local, ns.as_str().len()))
            })
            .max_by(|a, b| a.2.cmp(&b.2).then_with(|| b.0.cmp(a.0)))
            .map(|(p, local, _)| (p, local))
    }
}

/// The six kinds of declarable entity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    DataProperty,
    AnnotationProperty,
    NamedIndividual,
    Datatype,
}

impl EntityKind {
    pub const ALL: [EntityKind; 6] = [
        EntityKind::Class,
        EntityKind::ObjectProperty,
        EntityKind::DataProperty,
        EntityKind::AnnotationProperty,
        EntityKind::NamedIndividual,
        EntityKind::Datatype,
    ];

    /// Keyword used in the functional concrete syntax.
    pub fn keyword(self) -> &'static str {
        match self {
            EntityKind::Class => "Class",
            EntityKind::ObjectProperty => "ObjectProperty",
            EntityKind::DataProperty => "DataProperty",
            EntityKind::AnnotationProperty => "AnnotationProperty",
            EntityKind::NamedIndividual => "NamedIndividual",
            EntityKind::Datatype => "Datatype",
        }
    }
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A typed literal value. `datatype` defaults to `xsd:string`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub lexical: String,
    pub datatype: Iri,
}

impl Literal {
    /// A plain string literal (`xsd:string`).
    pub fn string(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype: Iri::xsd_string(),
        }
    }

    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Self {
        Literal {
            lexical: lexical.into(),
            datatype,
        }
    }

    pub fn is_string(&self) -> bool {
        self.datatype.as_str() == vocab::XSD_STRING
    }
}

/// Object-property characteristics supported by the dialect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Characteristic {
    Asymmetric,
    Irreflexive,
    Reflexive,
    Symmetric,
    Transitive,
}

impl Characteristic {
    pub const ALL: [Characteristic; 5] = [
        Characteristic::Asymmetric,
        Characteristic::Irreflexive,
        Characteristic::Reflexive,
        Characteristic::Symmetric,
        Characteristic::Transitive,
    ];

    /// Axiom keyword in the functional concrete syntax.
    pub fn keyword(self) -> &'static str {
        match self {
            Characteristic::Asymmetric => "AsymmetricObjectProperty",
            Characteristic::Irreflexive => "IrreflexiveObjectProperty",
            Characteristic::Reflexive => "ReflexiveObjectProperty",
            Characteristic::Symmetric => "SymmetricObjectProperty",
            Characteristic::Transitive => "TransitiveObjectProperty",
        }
    }
}

/// Value of an annotation: either an IRI or a literal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnnotationValue {
    Iri(Iri),
    Literal(Literal),
}

impl From<Iri> for AnnotationValue {
    fn from(iri: Iri) -> Self {
        AnnotationValue::Iri(iri)
    }
}

impl From<Literal> for AnnotationValue {
    fn from(lit: Literal) -> Self {
        AnnotationValue::Literal(lit)
    }
}

/// Every statement kind the toolkit supports.
///
/// The variant order here is load-bearing: the derived `Ord` is the canonical
/// axiom order used for serialization (kind rank first, then field-wise
/// lexicographic comparison).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Declaration(EntityKind, Iri),
    SubClassOf(Iri, Iri),
    /// Pairwise disjointness over two or more classes. Canonical form keeps
    /// the member list sorted and deduplicated.
    DisjointClasses(Vec<Iri>),
    /// Symmetric complement pair; canonical form orders the pair.
    ComplementClasses(Iri, Iri),
    ObjectPropertyDomain(Iri, Iri),
    ObjectPropertyRange(Iri, Iri),
    DataPropertyDomain(Iri, Iri),
    DataPropertyRange(Iri, Iri),
    PropertyCharacteristic(Iri, Characteristic),
    ClassAssertion(Iri, Iri),
    ObjectPropertyAssertion(Iri, Iri, Iri),
    DataPropertyAssertion(Iri, Iri, Literal),
    AnnotationAssertion(Iri, Iri, AnnotationValue),
}

impl Axiom {
    /// Rewrites the axiom into canonical form, validating it on the way.
    ///
    /// `DisjointClasses` members are sorted and deduplicated (two distinct
    /// members minimum); `ComplementClasses` pairs are ordered and must name
    /// two different classes. All other variants are already canonical.
    pub fn canonicalize(self) -> Result<Axiom, ModelError> {
        match self {
            Axiom::DisjointClasses(members) => {
                let set: BTreeSet<Iri> = members.into_iter().collect();
                if set.len() < 2 {
                    return Err(ModelError::InvalidAxiom(
                        "DisjointClasses needs at least two distinct classes".to_owned(),
                    ));
                }
                Ok(Axiom::DisjointClasses(set.into_iter().collect()))
            }
            Axiom::ComplementClasses(a, b) => {
                if a == b {
                    return Err(ModelError::InvalidAxiom(format!(
                        "ComplementClasses needs two distinct classes, got `{a}` twice"
                    )));
                }
                if a <= b {
                    Ok(Axiom::ComplementClasses(a, b))
                } else {
                    Ok(Axiom::ComplementClasses(b, a))
                }
            }
            other => Ok(other),
        }
    }

    /// Short kind label, stable across releases; used by `stats` output.
    pub fn kind_label(&self) -> &'static str {
        match self {
            Axiom::Declaration(..) => "declaration",
            Axiom::SubClassOf(..) => "subclass-of",
            Axiom::DisjointClasses(..) => "disjoint-classes",
            Axiom::ComplementClasses(..) => "complement-classes",
            Axiom::ObjectPropertyDomain(..) => "object-property-domain",
            Axiom::ObjectPropertyRange(..) => "object-property-range",
            Axiom::DataPropertyDomain(..) => "data-property-domain",
            Axiom::DataPropertyRange(..) => "data-property-range",
            Axiom::PropertyCharacteristic(..) => "property-characteristic",
            Axiom::ClassAssertion(..) => "class-assertion",
            Axiom::ObjectPropertyAssertion(..) => "object-property-assertion",
            Axiom::DataPropertyAssertion(..) => "data-property-assertion",
            Axiom::AnnotationAssertion(..) => "annotation-assertion",
        }
    }

    pub const KIND_LABELS: [&'static str; 13] = [
        "declaration",
        "subclass-of",
        "disjoint-classes",
        "complement-classes",
        "object-property-domain",
        "object-property-range",
        "data-property-domain",
        "data-property-range",
        "property-characteristic",
        "class-assertion",
        "object-property-assertion",
        "data-property-assertion",
        "annotation-assertion",
    ];
}

/// Warning produced by [`Ontology::undeclared_references`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct UndeclaredReference {
    pub iri: Iri,
    pub axiom: Axiom,
}

/// An ontology: identity IRI, prefix table, import list, and axiom set.
///
/// Axioms live in an ordered set under canonical form, so iteration order is
/// the canonical serialization order and duplicates collapse on insert.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ontology {
    iri: Iri,
    prefixes: PrefixMap,
    imports: Vec<Iri>,
    axioms: BTreeSet<Axiom>,
    // Derived index: declared kind per entity, kept in sync by
    // add_axiom/remove_axiom. Powers the punning check and `signature`
    // without a scan.
    declarations: BTreeMap<Iri, EntityKind>,
}

impl Ontology {
    pub fn new(iri: Iri) -> Self {
        Ontology {
            iri,
            prefixes: PrefixMap::new(),
            imports: Vec::new(),
            axioms: BTreeSet::new(),
            declarations: BTreeMap::new(),
        }
    }

    pub fn iri(&self) -> &Iri {
        &self.iri
    }

    pub fn set_iri(&mut self, iri: Iri) {
        self.iri = iri;
    }

    pub fn prefixes(&self) -> &PrefixMap {
        &self.prefixes
    }

    pub fn prefixes_mut(&mut self) -> &mut PrefixMap {
        &mut self.prefixes
    }

    pub fn imports(&self) -> &[Iri] {
        &self.imports
    }

    /// Appends an import, ignoring duplicates. Returns true when new.
    pub fn add_import(&mut self, iri: Iri) -> bool {
        if self.imports.contains(&iri) {
            return false;
        }
        self.imports.push(iri);
        true
    }

    pub fn clear_imports(&mut self) {
        self.imports.clear();
    }

    /// Adds an axiom in canonical form. Returns `true` iff it was absent
    /// before. The only rejection is a punning declaration: redeclaring an
    /// entity with a different kind than an existing declaration.
    pub fn add_axiom(&mut self, axiom: Axiom) -> Result<bool, ModelError> {
        let axiom = axiom.canonicalize()?;
        if let Axiom::Declaration(kind, entity) = &axiom {
            match self.declarations.get(entity) {
                Some(existing) if existing != kind => {
                    return Err(ModelError::Punning {
                        iri: entity.clone(),
                        existing: *existing,
                        requested: *kind,
                    });
                }
                Some(_) => {}
                None => {
                    self.declarations.insert(entity.clone(), *kind);
                }
            }
        }
        Ok(self.axioms.insert(axiom))
    }

    /// Removes an axiom (canonical-form comparison). Returns true when it
    /// was present.
    pub fn remove_axiom(&mut self, axiom: &Axiom) -> bool {
        let Ok(canonical) = axiom.clone().canonicalize() else {
            return false;
        };
        let removed = self.axioms.remove(&canonical);
        if removed {
            if let Axiom::Declaration(_, entity) = &canonical {
                self.declarations.remove(entity);
            }
        }
        removed
    }

    pub fn contains(&self, axiom: &Axiom) -> bool {
        axiom
            .clone()
            .canonicalize()
            .map(|ax| self.axioms.contains(&ax))
            .unwrap_or(false)
    }

    /// Axioms in canonical order.
    pub fn axioms(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms.iter()
    }

    pub fn axiom_count(&self) -> usize {
        self.axioms.len()
    }

    /// The declared entities as sorted (kind, IRI) pairs.
    pub fn signature(&self) -> BTreeSet<(EntityKind, Iri)> {
        self.declarations
            .iter()
            .map(|(iri, kind)| (*kind, iri.clone()))
            .collect()
    }

    /// Kind under which `iri` is declared, if any.
    pub fn declared_kind(&self, iri: &Iri) -> Option<EntityKind> {
        self.declarations.get(iri).copied()
    }

    /// Declared entities of one kind, in IRI order.
    pub fn declared(&self, kind: EntityKind) -> impl Iterator<Item = &Iri> {
        self.declarations
            .iter()
            .filter(move |(_, k)| **k == kind)
            .map(|(iri, _)| iri)
    }

    /// Lints for IRIs used in non-declaration axioms but never declared.
    ///
    /// Annotation assertions are fully exempt (reused vocabularies like
    /// Dublin Core need no local declarations), literal datatypes are exempt,
    /// and `owl:Thing` counts as implicitly declared. Warnings come out
    /// sorted and deduplicated by (IRI, axiom).
    pub fn undeclared_references(&self) -> Vec<UndeclaredReference> {
        let mut warnings = BTreeSet::new();
        for axiom in &self.axioms {
            let referenced: Vec<&Iri> = match axiom {
                Axiom::Declaration(..) | Axiom::AnnotationAssertion(..) => continue,
                Axiom::SubClassOf(sub, sup) => vec![sub, sup],
                Axiom::DisjointClasses(members) => members.iter().collect(),
                Axiom::ComplementClasses(a, b) => vec![a, b],
                Axiom::ObjectPropertyDomain(p, c)
                | Axiom::ObjectPropertyRange(p, c)
                | Axiom::DataPropertyDomain(p, c)
                | Axiom::DataPropertyRange(p, c) => vec![p, c],
                Axiom::PropertyCharacteristic(p, _) => vec![p],
                Axiom::ClassAssertion(c, ind) => vec![c, ind],
                Axiom::ObjectPropertyAssertion(p, s, o) => vec![p, s, o],
                Axiom::DataPropertyAssertion(p, s, _) => vec![p, s],
            };
            for iri in referenced {
                if iri.is_thing() || self.declarations.contains_key(iri) {
                    continue;
                }
                warnings.insert(UndeclaredReference {
                    iri: iri.clone(),
                    axiom: axiom.clone(),
                });
            }
        }
        warnings.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn iri_rejects_unusable_characters() {
        assert!(Iri::new("").is_err());
        assert!(Iri::new("http://x.org/a b").is_err());
        assert!(Iri::new("http://x.org/a\tb").is_err());
        assert!(Iri::new("http://x.org/a\nb").is_err());
        assert!(Iri::new("http://x.org/<a>").is_err());
        assert!(Iri::new("http://x.org/\"a\"").is_err());
        assert!(Iri::new("http://x.org/ok#Frag").is_ok());
    }

    #[test]
    fn iri_ordering_is_byte_order() {
        let mut v = vec![iri("http://b"), iri("http://A"), iri("http://a")];
        v.sort();
        assert_eq!(
            v,
            vec![iri("http://A"), iri("http://a"), iri("http://b")]
        );
    }

    #[test]
    fn prefix_map_expands_curies() {
        let mut pm = PrefixMap::new();
        pm.bind("test", iri("http://example.org/testing#")).unwrap();
        assert_eq!(
            pm.expand("test:ErrorSeeding").unwrap(),
            iri("http://example.org/testing#ErrorSeeding")
        );

        let mut dc = PrefixMap::new();
        dc.bind("dc", iri(vocab::DC_NS)).unwrap();
        assert_eq!(
            dc.expand("dc:creator").unwrap(),
            iri("http://purl.org/dc/elements/1.1/creator")
        );
    }

    #[test]
    fn expand_on_empty_map_is_unbound() {
        let pm = PrefixMap::new();
        assert_eq!(
            pm.expand("test:X"),
            Err(ModelError::UnboundPrefix("test".to_owned()))
        );
        assert!(matches!(pm.expand("nocolon"), Err(ModelError::InvalidCurie(_))));
    }

    #[test]
    fn prefix_names_are_validated() {
        let mut pm = PrefixMap::new();
        assert!(pm.bind("", iri("http://x/")).is_ok());
        assert!(pm.bind("a-b_2", iri("http://x/")).is_ok());
        assert!(pm.bind("9x", iri("http://x/")).is_err());
        assert!(pm.bind("a:b", iri("http://x/")).is_err());
        assert!(pm.bind("a b", iri("http://x/")).is_err());
    }

    #[test]
    fn abbreviate_prefers_longest_namespace() {
        let mut pm = PrefixMap::new();
        pm.bind("ex", iri("http://example.org/")).unwrap();
        pm.bind("test", iri("http://example.org/testing#")).unwrap();
        let target = iri("http://example.org/testing#Foo");
        assert_eq!(pm.abbreviate(&target), Some(("test", "Foo")));
        let other = iri("http://example.org/other");
        assert_eq!(pm.abbreviate(&other), Some(("ex", "other")));
        let miss = iri("http://elsewhere.net/x");
        assert_eq!(pm.abbreviate(&miss), None);
    }

    #[test]
    fn add_axiom_reports_newly_added() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        let ax = Axiom::SubClassOf(
            iri("http://example.org/testing#ErrorSeeding"),
            iri("http://example.org/testing#ErrorBasedTechnique"),
        );
        assert!(o.add_axiom(ax.clone()).unwrap());
        assert!(!o.add_axiom(ax).unwrap());
        assert_eq!(o.axiom_count(), 1);
    }

    #[test]
    fn disjoint_members_are_sorted_and_deduped() {
        let a = iri("http://x/A");
        let b = iri("http://x/B");
        let c = iri("http://x/C");
        let mut o = Ontology::new(iri("http://x.org/o"));
        assert!(o
            .add_axiom(Axiom::DisjointClasses(vec![b.clone(), a.clone()]))
            .unwrap());
        assert!(!o
            .add_axiom(Axiom::DisjointClasses(vec![a.clone(), b.clone(), b.clone()]))
            .unwrap());
        // Triples are a different axiom than pairs.
        assert!(o
            .add_axiom(Axiom::DisjointClasses(vec![c.clone(), b.clone(), a.clone()]))
            .unwrap());
        let stored: Vec<_> = o.axioms().cloned().collect();
        assert_eq!(
            stored,
            vec![
                Axiom::DisjointClasses(vec![a.clone(), b.clone()]),
                Axiom::DisjointClasses(vec![a, b, c]),
            ]
        );
    }

    #[test]
    fn degenerate_disjoint_and_complement_are_rejected() {
        let a = iri("http://x/A");
        let mut o = Ontology::new(iri("http://x.org/o"));
        assert!(matches!(
            o.add_axiom(Axiom::DisjointClasses(vec![a.clone(), a.clone()])),
            Err(ModelError::InvalidAxiom(_))
        ));
        assert!(matches!(
            o.add_axiom(Axiom::ComplementClasses(a.clone(), a.clone())),
            Err(ModelError::InvalidAxiom(_))
        ));
        assert_eq!(o.axiom_count(), 0);
    }

    #[test]
    fn complement_pair_is_ordered() {
        let a = iri("http://x/A");
        let b = iri("http://x/B");
        let ax = Axiom::ComplementClasses(b.clone(), a.clone())
            .canonicalize()
            .unwrap();
        assert_eq!(ax, Axiom::ComplementClasses(a, b));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let axioms = vec![
            Axiom::DisjointClasses(vec![iri("http://x/C"), iri("http://x/A"), iri("http://x/B")]),
            Axiom::ComplementClasses(iri("http://x/B"), iri("http://x/A")),
            Axiom::SubClassOf(iri("http://x/A"), iri("http://x/B")),
        ];
        for ax in axioms {
            let once = ax.canonicalize().unwrap();
            let twice = once.clone().canonicalize().unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn punning_is_rejected() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        let e = iri("http://x/E");
        o.add_axiom(Axiom::Declaration(EntityKind::Class, e.clone()))
            .unwrap();
        // Same kind again: no-op.
        assert!(!o
            .add_axiom(Axiom::Declaration(EntityKind::Class, e.clone()))
            .unwrap());
        let err = o
            .add_axiom(Axiom::Declaration(EntityKind::NamedIndividual, e.clone()))
            .unwrap_err();
        assert_eq!(
            err,
            ModelError::Punning {
                iri: e,
                existing: EntityKind::Class,
                requested: EntityKind::NamedIndividual,
            }
        );
    }

    #[test]
    fn remove_axiom_clears_declaration_index() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        let e = iri("http://x/E");
        let decl = Axiom::Declaration(EntityKind::Class, e.clone());
        o.add_axiom(decl.clone()).unwrap();
        assert!(o.remove_axiom(&decl));
        assert!(!o.remove_axiom(&decl));
        assert_eq!(o.declared_kind(&e), None);
        // After removal the entity can be declared as something else.
        o.add_axiom(Axiom::Declaration(EntityKind::NamedIndividual, e.clone()))
            .unwrap();
        assert_eq!(o.declared_kind(&e), Some(EntityKind::NamedIndividual));
    }

    #[test]
    fn signature_lists_declared_entities_sorted() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        o.add_axiom(Axiom::Declaration(
            EntityKind::ObjectProperty,
            iri("http://x/p"),
        ))
        .unwrap();
        o.add_axiom(Axiom::Declaration(EntityKind::Class, iri("http://x/B")))
            .unwrap();
        o.add_axiom(Axiom::Declaration(EntityKind::Class, iri("http://x/A")))
            .unwrap();
        let sig: Vec<_> = o.signature().into_iter().collect();
        assert_eq!(
            sig,
            vec![
                (EntityKind::Class, iri("http://x/A")),
                (EntityKind::Class, iri("http://x/B")),
                (EntityKind::ObjectProperty, iri("http://x/p")),
            ]
        );
    }

    #[test]
    fn undeclared_references_flags_missing_entities() {
        let a = iri("http://x/A");
        let b = iri("http://x/B");
        let mut o = Ontology::new(iri("http://x.org/o"));
        o.add_axiom(Axiom::Declaration(EntityKind::Class, a.clone()))
            .unwrap();
        o.add_axiom(Axiom::SubClassOf(a.clone(), b.clone())).unwrap();
        let warnings = o.undeclared_references();
        assert_eq!(warnings.len(), 1);
        assert_eq!(warnings[0].iri, b);
        assert_eq!(warnings[0].axiom, Axiom::SubClassOf(a, b));
    }

    #[test]
    fn annotation_assertions_are_exempt_from_the_lint() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        o.add_axiom(Axiom::AnnotationAssertion(
            iri("http://purl.org/dc/elements/1.1/creator"),
            iri("http://x/X"),
            AnnotationValue::Literal(Literal::string("Anandaraj")),
        ))
        .unwrap();
        assert!(o.undeclared_references().is_empty());
    }

    #[test]
    fn owl_thing_is_implicitly_declared() {
        let a = iri("http://x/A");
        let mut o = Ontology::new(iri("http://x.org/o"));
        o.add_axiom(Axiom::Declaration(EntityKind::Class, a.clone()))
            .unwrap();
        o.add_axiom(Axiom::SubClassOf(a, Iri::thing())).unwrap();
        assert!(o.undeclared_references().is_empty());
    }

    #[test]
    fn imports_deduplicate() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        assert!(o.add_import(iri("http://x.org/a")));
        assert!(o.add_import(iri("http://x.org/b")));
        assert!(!o.add_import(iri("http://x.org/a")));
        assert_eq!(o.imports().len(), 2);
    }

    #[test]
    fn model_values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Ontology>();
        assert_send_sync::<Axiom>();
        assert_send_sync::<PrefixMap>();
    }
}
