//! RDF/XML emitter.
//!
//! Emit-only: the toolkit never reads this format back. Output groups axioms
//! under one element per declared entity (plus the ontology header and
//! `rdf:Description` elements for undeclared subjects), in the same total
//! order the functional serializer uses, so equal ontologies emit
//! byte-identical documents.
//!
//! Mapping: `Declaration(Class)`→`owl:Class`, `ObjectProperty`→
//! `owl:ObjectProperty`, `DataProperty`→`owl:DatatypeProperty`,
//! `AnnotationProperty`→`owl:AnnotationProperty`, `NamedIndividual`→
//! `owl:NamedIndividual`, `Datatype`→`rdfs:Datatype`; `SubClassOf`→
//! `rdfs:subClassOf`; domains/ranges→`rdfs:domain`/`rdfs:range`;
//! `DisjointClasses` pairs and `ComplementClasses`→`owl:disjointWith` (the
//! latter plus an `rdfs:comment` noting the complement origin);
//! characteristics→`rdf:type` of the matching `owl:*Property` class;
//! `ClassAssertion`→`rdf:type` on the individual; property and annotation
//! assertions→child elements named by the property's compact name.
//!
//! Property IRIs that no bound namespace abbreviates get a synthesized
//! `nsN` binding at the longest valid-NCName suffix. An IRI with no valid
//! NCName suffix at all cannot be an XML element name; such names are
//! approximated by sanitizing the last path segment (a lossy corner the
//! RDF/XML data model forces; it cannot occur for IRIs this toolkit's own
//! parsers accept as property positions in practice).

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::model::{vocab, AnnotationValue, Axiom, Characteristic, EntityKind, Iri, Ontology};

pub fn serialize_rdfxml(o: &Ontology) -> String {
    let names = XmlNames::build(o);

    // Bucket axiom-derived children by subject, in canonical axiom order.
    let mut ontology_children: Vec<Child> = o
        .imports()
        .iter()
        .map(|import| Child::resource("owl:imports", import.clone()))
        .collect();
    let mut buckets: BTreeMap<Iri, Vec<Child>> = BTreeMap::new();
    {
        let mut push = |subject: &Iri, child: Child| {
            if subject == o.iri() {
                ontology_children.push(child);
            } else {
                buckets.entry(subject.clone()).or_default().push(child);
            }
        };
        for axiom in o.axioms() {
            match axiom {
                Axiom::Declaration(..) => {}
                Axiom::SubClassOf(sub, sup) => {
                    push(sub, Child::resource("rdfs:subClassOf", sup.clone()));
                }
                Axiom::DisjointClasses(members) => {
                    for (i, a) in members.iter().enumerate() {
                        for b in &members[i + 1..] {
                            push(a, Child::resource("owl:disjointWith", b.clone()));
                        }
                    }
                }
                Axiom::ComplementClasses(a, b) => {
                    push(a, Child::resource("owl:disjointWith", b.clone()));
                    push(a, Child::text("rdfs:comment", format!("complement of {b}"), None));
                }
                Axiom::ObjectPropertyDomain(p, c) | Axiom::DataPropertyDomain(p, c) => {
                    push(p, Child::resource("rdfs:domain", c.clone()));
                }
                Axiom::ObjectPropertyRange(p, c) | Axiom::DataPropertyRange(p, c) => {
                    push(p, Child::resource("rdfs:range", c.clone()));
                }
                Axiom::PropertyCharacteristic(p, ch) => {
                    push(p, Child::resource("rdf:type", characteristic_class(*ch)));
                }
                Axiom::ClassAssertion(c, ind) => {
                    push(ind, Child::resource("rdf:type", c.clone()));
                }
                Axiom::ObjectPropertyAssertion(p, subj, obj) => {
                    push(subj, Child::resource(names.qname(p), obj.clone()));
                }
                Axiom::DataPropertyAssertion(p, subj, value) => {
                    let datatype = (!value.is_string()).then(|| value.datatype.clone());
                    push(
                        subj,
                        Child::text(names.qname(p), value.lexical.clone(), datatype),
                    );
                }
                Axiom::AnnotationAssertion(ap, subject, value) => {
                    let child = match value {
                        AnnotationValue::Iri(iri) => Child::resource(names.qname(ap), iri.clone()),
                        AnnotationValue::Literal(lit) => {
                            let datatype = (!lit.is_string()).then(|| lit.datatype.clone());
                            Child::text(names.qname(ap), lit.lexical.clone(), datatype)
                        }
                    };
                    push(subject, child);
                }
            }
        }
    }

    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rdf:RDF");
    for (prefix, ns) in &names.bindings {
        write!(out, "\n    xmlns:{prefix}=\"{}\"", esc_attr(ns)).unwrap();
    }
    out.push_str(">\n");

    write_element(&mut out, "owl:Ontology", o.iri(), &ontology_children);
    for (kind, entity) in o.signature() {
        let children = buckets.remove(&entity).unwrap_or_default();
        write_element(&mut out, entity_element(kind), &entity, &children);
    }
    for (subject, children) in &buckets {
        write_element(&mut out, "rdf:Description", subject, children);
    }

    out.push_str("</rdf:RDF>\n");
    out
}

fn entity_element(kind: EntityKind) -> &'static str {
    match kind {
        EntityKind::Class => "owl:Class",
        EntityKind::ObjectProperty => "owl:ObjectProperty",
        EntityKind::DataProperty => "owl:DatatypeProperty",
        EntityKind::AnnotationProperty => "owl:AnnotationProperty",
        EntityKind::NamedIndividual => "owl:NamedIndividual",
        EntityKind::Datatype => "rdfs:Datatype",
    }
}

fn characteristic_class(ch: Characteristic) -> Iri {
    let name = match ch {
        Characteristic::Asymmetric => "AsymmetricProperty",
        Characteristic::Irreflexive => "IrreflexiveProperty",
        Characteristic::Reflexive => "ReflexiveProperty",
        Characteristic::Symmetric => "SymmetricProperty",
        Characteristic::Transitive => "TransitiveProperty",
    };
    Iri::new(format!("{}{name}", vocab::OWL_NS)).expect("owl vocabulary IRIs are valid")
}

struct Child {
    qname: String,
    body: Body,
}

enum Body {
    Resource(Iri),
    Text { text: String, datatype: Option<Iri> },
}

impl Child {
    fn resource(qname: impl Into<String>, target: Iri) -> Self {
        Child {
            qname: qname.into(),
            body: Body::Resource(target),
        }
    }

    fn text(qname: impl Into<String>, text: String, datatype: Option<Iri>) -> Self {
        Child {
            qname: qname.into(),
            body: Body::Text { text, datatype },
        }
    }
}

fn write_element(out: &mut String, element: &str, about: &Iri, children: &[Child]) {
    if children.is_empty() {
        writeln!(out, "  <{element} rdf:about=\"{}\"/>", esc_attr(about.as_str())).unwrap();
        return;
    }
    writeln!(out, "  <{element} rdf:about=\"{}\">", esc_attr(about.as_str())).unwrap();
    for child in children {
        let q = &child.qname;
        match &child.body {
            Body::Resource(target) => {
                writeln!(out, "    <{q} rdf:resource=\"{}\"/>", esc_attr(target.as_str())).unwrap();
            }
            Body::Text { text, datatype } => {
                match datatype {
                    Some(dt) => writeln!(
                        out,
                        "    <{q} rdf:datatype=\"{}\">{}</{q}>",
                        esc_attr(dt.as_str()),
                        esc_text(text)
                    )
                    .unwrap(),
                    None => writeln!(out, "    <{q}>{}</{q}>", esc_text(text)).unwrap(),
                }
            }
        }
    }
    writeln!(out, "  </{element}>").unwrap();
}

fn esc_attr(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            other => out.push(other),
        }
    }
    out
}

fn esc_text(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            other => out.push(other),
        }
    }
    out
}

/// XML namespace table: the three reserved vocabularies, the document's own
/// usable prefixes, and synthesized `nsN` bindings for property IRIs nothing
/// else covers. Every property/annotation IRI resolves to a fixed QName.
struct XmlNames {
    /// (prefix, namespace) pairs for the `xmlns` attributes, sorted by prefix.
    bindings: Vec<(String, String)>,
    qnames: BTreeMap<Iri, String>,
}

const RESERVED: [(&str, &str); 3] = [
    ("owl", vocab::OWL_NS),
    ("rdf", vocab::RDF_NS),
    ("rdfs", vocab::RDFS_NS),
];

impl XmlNames {
    fn build(o: &Ontology) -> Self {
        let mut bindings: BTreeMap<String, String> = RESERVED
            .iter()
            .map(|(p, ns)| (p.to_string(), ns.to_string()))
            .collect();
        for (prefix, ns) in o.prefixes().bindings() {
            if prefix.is_empty()
                || bindings.contains_key(prefix)
                || prefix.to_ascii_lowercase().starts_with("xml")
            {
                continue;
            }
            bindings.insert(prefix.to_owned(), ns.as_str().to_owned());
        }

        // Property positions are the only places needing element names
        // beyond the fixed vocabulary.
        let property_iris: BTreeMap<Iri, ()> = o
            .axioms()
            .filter_map(|ax| match ax {
                Axiom::ObjectPropertyAssertion(p, _, _)
                | Axiom::DataPropertyAssertion(p, _, _)
                | Axiom::AnnotationAssertion(p, _, _) => Some((p.clone(), ())),
                _ => None,
            })
            .collect();

        let mut qnames = BTreeMap::new();
        let mut pending: BTreeMap<String, Vec<(Iri, String)>> = BTreeMap::new();
        for iri in property_iris.into_keys() {
            match abbreviate_ncname(iri.as_str(), &bindings) {
                Some(qname) => {
                    qnames.insert(iri, qname);
                }
                None => {
                    let (ns, local) = split_for_xml(iri.as_str());
                    pending.entry(ns).or_default().push((iri, local));
                }
            }
        }
        let mut counter = 1usize;
        for (ns, items) in pending {
            let prefix = loop {
                let candidate = format!("ns{counter}");
                counter += 1;
                if !bindings.contains_key(&candidate) {
                    break candidate;
                }
            };
            for (iri, local) in items {
                qnames.insert(iri, format!("{prefix}:{local}"));
            }
            bindings.insert(prefix, ns);
        }

        XmlNames {
            bindings: bindings.into_iter().collect(),
            qnames,
        }
    }

    fn qname(&self, property: &Iri) -> String {
        self.qnames
            .get(property)
            .cloned()
            .expect("every property IRI was named during the build pass")
    }
}

/// Longest bound namespace whose remainder is a usable NCName.
fn abbreviate_ncname(iri: &str, bindings: &BTreeMap<String, String>) -> Option<String> {
    bindings
        .iter()
        .filter_map(|(prefix, ns)| {
            iri.strip_prefix(ns.as_str())
                .filter(|local| is_ncname(local))
                .map(|local| (ns.len(), prefix, local))
        })
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)))
        .map(|(_, prefix, local)| format!("{prefix}:{local}"))
}

/// Splits an IRI into (namespace, NCName local) at the longest valid-NCName
/// suffix, falling back to a sanitized last segment when none exists.
fn split_for_xml(iri: &str) -> (String, String) {
    let mut start = None;
    for (i, c) in iri.char_indices().rev() {
        if !is_ncname_char(c) {
            break;
        }
        if is_ncname_start(c) {
            start = Some(i);
        }
    }
    if let Some(i) = start {
        if i > 0 {
            return (iri[..i].to_owned(), iri[i..].to_owned());
        }
    }
    // No usable suffix: approximate with the sanitized last segment.
    let cut = iri.rfind(['/', '#']).map(|i| i + 1).unwrap_or(0);
    let (ns, raw_local) = iri.split_at(cut);
    let mut local: String = raw_local
        .chars()
        .map(|c| if is_ncname_char(c) { c } else { '_' })
        .collect();
    if !local.chars().next().is_some_and(is_ncname_start) {
        local.insert(0, '_');
    }
    if ns.is_empty() {
        // A relative name with no separators at all; keep the document
        // well-formed by hanging the name off the full IRI.
        return (iri.to_owned(), local);
    }
    (ns.to_owned(), local)
}

fn is_ncname(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(first) if is_ncname_start(first) => chars.all(is_ncname_char),
        _ => false,
    }
}

// XML 1.0 Name character classes, minus the colon (NCName).
fn is_ncname_start(c: char) -> bool {
    matches!(c,
        'A'..='Z' | '_' | 'a'..='z'
        | '\u{C0}'..='\u{D6}' | '\u{D8}'..='\u{F6}' | '\u{F8}'..='\u{2FF}'
        | '\u{370}'..='\u{37D}' | '\u{37F}'..='\u{1FFF}' | '\u{200C}'..='\u{200D}'
        | '\u{2070}'..='\u{218F}' | '\u{2C00}'..='\u{2FEF}' | '\u{3001}'..='\u{D7FF}'
        | '\u{F900}'..='\u{FDCF}' | '\u{FDF0}'..='\u{FFFD}' | '\u{10000}'..='\u{EFFFF}')
}

fn is_ncname_char(c: char) -> bool {
    is_ncname_start(c)
        || matches!(c,
            '-' | '.' | '0'..='9' | '\u{B7}'
            | '\u{300}'..='\u{36F}' | '\u{203F}'..='\u{2040}')
}
