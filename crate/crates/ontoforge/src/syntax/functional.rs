//! Canonical functional-style serializer.
//!
//! Output is a pure function of the ontology value: prefix declarations
//! sorted by name, imports in declaration order, one axiom per line in
//! canonical axiom order (kind rank, then field-wise comparison). Together
//! with the canonical in-memory form this makes serialization byte-identical
//! for structurally equal ontologies, and `parse_functional` inverts it
//! exactly.

use std::fmt::Write;

use crate::model::{AnnotationValue, Axiom, Iri, Literal, Ontology, PrefixMap};

use super::lexer::is_local_char;

pub fn serialize_functional(o: &Ontology) -> String {
    let mut out = String::new();
    for (prefix, ns) in o.prefixes().bindings() {
        writeln!(out, "Prefix({prefix}:=<{ns}>)").unwrap();
    }
    writeln!(out, "Ontology(<{}>", o.iri()).unwrap();
    for import in o.imports() {
        writeln!(out, "Import(<{import}>)").unwrap();
    }
    for axiom in o.axioms() {
        out.push_str(&render_axiom(axiom, o.prefixes()));
        out.push('\n');
    }
    out.push_str(")\n");
    out
}

/// Renders one axiom exactly as `serialize_functional` would print it,
/// abbreviating IRIs against `prefixes`.
pub fn render_axiom(axiom: &Axiom, prefixes: &PrefixMap) -> String {
    let iri = |i: &Iri| render_iri(i, prefixes);
    match axiom {
        Axiom::Declaration(kind, entity) => {
            format!("Declaration({}({}))", kind.keyword(), iri(entity))
        }
        Axiom::SubClassOf(sub, sup) => format!("SubClassOf({} {})", iri(sub), iri(sup)),
        Axiom::DisjointClasses(members) => {
            let rendered: Vec<String> = members.iter().map(iri).collect();
            format!("DisjointClasses({})", rendered.join(" "))
        }
        Axiom::ComplementClasses(a, b) => format!("ComplementClasses({} {})", iri(a), iri(b)),
        Axiom::ObjectPropertyDomain(p, c) => {
            format!("ObjectPropertyDomain({} {})", iri(p), iri(c))
        }
        Axiom::ObjectPropertyRange(p, c) => format!("ObjectPropertyRange({} {})", iri(p), iri(c)),
        Axiom::DataPropertyDomain(p, c) => format!("DataPropertyDomain({} {})", iri(p), iri(c)),
        Axiom::DataPropertyRange(p, dt) => format!("DataPropertyRange({} {})", iri(p), iri(dt)),
        Axiom::PropertyCharacteristic(p, ch) => format!("{}({})", ch.keyword(), iri(p)),
        Axiom::ClassAssertion(c, ind) => format!("ClassAssertion({} {})", iri(c), iri(ind)),
        Axiom::ObjectPropertyAssertion(p, subj, obj) => format!(
            "ObjectPropertyAssertion({} {} {})",
            iri(p),
            iri(subj),
            iri(obj)
        ),
        Axiom::DataPropertyAssertion(p, subj, value) => format!(
            "DataPropertyAssertion({} {} {})",
            iri(p),
            iri(subj),
            render_literal(value, prefixes)
        ),
        Axiom::AnnotationAssertion(ap, subject, value) => {
            let value = match value {
                AnnotationValue::Iri(i) => iri(i),
                AnnotationValue::Literal(l) => render_literal(l, prefixes),
            };
            format!("AnnotationAssertion({} {} {})", iri(ap), iri(subject), value)
        }
    }
}

/// Abbreviates to a compact name when a bound namespace prefixes the IRI and
/// the remainder survives re-lexing; otherwise falls back to `<...>`.
fn render_iri(iri: &Iri, prefixes: &PrefixMap) -> String {
    if let Some((prefix, local)) = prefixes.abbreviate(iri) {
        if local.chars().all(is_local_char) {
            return format!("{prefix}:{local}");
        }
    }
    format!("<{iri}>")
}

fn render_literal(literal: &Literal, prefixes: &PrefixMap) -> String {
    let mut out = String::with_capacity(literal.lexical.len() + 2);
    out.push('"');
    for c in literal.lexical.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            other => out.push(other),
        }
    }
    out.push('"');
    if !literal.is_string() {
        out.push_str("^^");
        out.push_str(&render_iri(&literal.datatype, prefixes));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Characteristic, EntityKind};
    use crate::syntax::parse_functional;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn empty_ontology_layout_is_pinned() {
        let o = Ontology::new(iri("http://x.org/o"));
        assert_eq!(serialize_functional(&o), "Ontology(<http://x.org/o>\n)\n");
    }

    #[test]
    fn prefixes_sort_and_axioms_abbreviate() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        o.prefixes_mut()
            .bind("test", iri("http://example.org/testing#"))
            .unwrap();
        o.prefixes_mut()
            .bind("dc", iri("http://purl.org/dc/elements/1.1/"))
            .unwrap();
        o.add_axiom(Axiom::SubClassOf(
            iri("http://example.org/testing#ErrorSeeding"),
            iri("http://example.org/testing#ErrorBasedTechnique"),
        ))
        .unwrap();
        assert_eq!(
            serialize_functional(&o),
            "Prefix(dc:=<http://purl.org/dc/elements/1.1/>)\n\
             Prefix(test:=<http://example.org/testing#>)\n\
             Ontology(<http://x.org/o>\n\
             SubClassOf(test:ErrorSeeding test:ErrorBasedTechnique)\n\
             )\n"
        );
    }

    #[test]
    fn axioms_emit_in_kind_rank_then_lexicographic_order() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        // Insert out of order on purpose.
        o.add_axiom(Axiom::ClassAssertion(iri("http://x/C"), iri("http://x/i")))
            .unwrap();
        o.add_axiom(Axiom::SubClassOf(iri("http://x/B"), iri("http://x/C")))
            .unwrap();
        o.add_axiom(Axiom::SubClassOf(iri("http://x/A"), iri("http://x/C")))
            .unwrap();
        o.add_axiom(Axiom::Declaration(EntityKind::Class, iri("http://x/C")))
            .unwrap();
        let text = serialize_functional(&o);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines,
            vec![
                "Ontology(<http://x.org/o>",
                "Declaration(Class(<http://x/C>))",
                "SubClassOf(<http://x/A> <http://x/C>)",
                "SubClassOf(<http://x/B> <http://x/C>)",
                "ClassAssertion(<http://x/C> <http://x/i>)",
                ")",
            ]
        );
    }

    #[test]
    fn literal_escapes_round_trip() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        o.add_axiom(Axiom::DataPropertyAssertion(
            iri("http://x/p"),
            iri("http://x/i"),
            Literal::string("say \"hi\" \\ bye"),
        ))
        .unwrap();
        let text = serialize_functional(&o);
        assert!(text.contains(r#""say \"hi\" \\ bye""#));
        assert_eq!(parse_functional(&text).unwrap(), o);
    }

    #[test]
    fn string_datatype_is_implicit_other_datatypes_are_written() {
        let mut pm = PrefixMap::new();
        pm.bind("xsd", iri("http://www.w3.org/2001/XMLSchema#"))
            .unwrap();
        let plain = render_literal(&Literal::string("a"), &pm);
        assert_eq!(plain, "\"a\"");
        let typed = render_literal(
            &Literal::typed("3", iri("http://www.w3.org/2001/XMLSchema#integer")),
            &pm,
        );
        assert_eq!(typed, "\"3\"^^xsd:integer");
    }

    #[test]
    fn unabbreviatable_locals_fall_back_to_angle_brackets() {
        let mut pm = PrefixMap::new();
        pm.bind("x", iri("http://x/")).unwrap();
        // `a/b` is not a valid compact-name local part.
        assert_eq!(render_iri(&iri("http://x/a/b"), &pm), "<http://x/a/b>");
        assert_eq!(render_iri(&iri("http://x/a.b"), &pm), "x:a.b");
        // Empty local parts are legal compact names.
        assert_eq!(render_iri(&iri("http://x/"), &pm), "x:");
    }

    #[test]
    fn imports_serialize_after_the_header() {
        let mut o = Ontology::new(iri("http://x.org/o"));
        o.add_import(iri("http://x.org/b"));
        o.add_import(iri("http://x.org/a"));
        let text = serialize_functional(&o);
        assert_eq!(
            text,
            "Ontology(<http://x.org/o>\n\
             Import(<http://x.org/b>)\n\
             Import(<http://x.org/a>)\n\
             )\n"
        );
        let back = parse_functional(&text).unwrap();
        assert_eq!(back, o);
    }

    #[test]
    fn characteristic_keywords_render_as_owl_spellings() {
        let pm = PrefixMap::new();
        let ax = Axiom::PropertyCharacteristic(iri("http://x/p"), Characteristic::Irreflexive);
        assert_eq!(
            render_axiom(&ax, &pm),
            "IrreflexiveObjectProperty(<http://x/p>)"
        );
    }
}
