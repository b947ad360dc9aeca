//! Deterministic fixture generators for the test suites and benchmarks.
//!
//! Everything here is a pure function of an explicit [`Rng`] seed, so any
//! failing case can be reproduced by its seed alone. The generators only
//! build valid ontologies (entity pools are partitioned by kind, so punning
//! cannot occur), but they deliberately cover the awkward corners of the
//! serializers: unbound namespaces, locals that cannot be abbreviated,
//! leading-digit locals, and literals full of escapes.

use crate::model::{
    AnnotationValue, Axiom, Characteristic, EntityKind, Iri, Literal, Ontology,
};

/// A splitmix64 generator: tiny, fast, and plenty for fixture shuffling.
#[derive(Debug, Clone)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n`. `n` must be non-zero.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        // Multiply-shift; bias is negligible for fixture sizes.
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

/// Namespace bound to the `g` prefix in every generated ontology.
pub const GEN_NS: &str = "http://gen.example/ns#";
/// Namespace sometimes bound to `h`, sometimes left unbound, so serializers
/// must handle both CURIE and full-IRI forms for the same entities.
pub const ALT_NS: &str = "http://gen.example/alt#";

fn iri(text: String) -> Iri {
    Iri::new(text).expect("generated IRIs are valid")
}

fn entity(ns: &str, local: &str) -> Iri {
    iri(format!("{ns}{local}"))
}

/// A random subclass graph: `2..=max_classes` declared classes and each
/// ordered pair made an edge with probability `density_percent`/100. Cycles
/// and diamonds are all allowed — the closure must cope.
pub fn random_subclass_graph(rng: &mut Rng, max_classes: u64, density_percent: u64) -> Ontology {
    let n = 2 + rng.below(max_classes - 1);
    let classes: Vec<Iri> = (0..n).map(|i| entity(GEN_NS, &format!("C{i}"))).collect();
    let mut o = Ontology::new(iri(format!("http://gen.example/graph{}", rng.below(1 << 32))));
    o.prefixes_mut().bind("g", iri(GEN_NS.into())).unwrap();
    for class in &classes {
        o.add_axiom(Axiom::Declaration(EntityKind::Class, class.clone()))
            .unwrap();
    }
    for sub in &classes {
        for sup in &classes {
            if sub != sup && rng.chance(density_percent, 100) {
                o.add_axiom(Axiom::SubClassOf(sub.clone(), sup.clone()))
                    .unwrap();
            }
        }
    }
    o
}

/// Literal pool covering the escaping rules: quotes, backslashes, raw
/// newlines, non-ASCII, XML-hostile characters, and a typed value.
fn random_literal(rng: &mut Rng) -> Literal {
    match rng.below(7) {
        0 => Literal::string("plain text"),
        1 => Literal::string(""),
        2 => Literal::string("with \"quotes\" inside"),
        3 => Literal::string("back\\slash"),
        4 => Literal::string("two\nlines"),
        5 => Literal::string("<&> ümlaut"),
        _ => Literal::typed("42", iri("http://www.w3.org/2001/XMLSchema#integer".into())),
    }
}

/// Entity pools for one generated ontology, partitioned by kind.
struct Pools {
    classes: Vec<Iri>,
    object_props: Vec<Iri>,
    data_props: Vec<Iri>,
    annotation_props: Vec<Iri>,
    individuals: Vec<Iri>,
}

impl Pools {
    fn build(rng: &mut Rng, classes: u64, props: u64, individuals: u64) -> Pools {
        // Locals stress different serializer paths: plain names abbreviate,
        // `0`-led names defeat the NCName splitter's longest suffix, `~`
        // names cannot be CURIEs at all, and ALT_NS names may be unbound.
        let class_local = |rng: &mut Rng, i: u64| match rng.below(4) {
            0 => (ALT_NS, format!("A{i}")),
            1 => (GEN_NS, format!("0c{i}")),
            2 => (GEN_NS, format!("ugly~{i}")),
            _ => (GEN_NS, format!("C{i}")),
        };
        Pools {
            classes: (0..classes)
                .map(|i| {
                    let (ns, local) = class_local(rng, i);
                    entity(ns, &local)
                })
                .collect(),
            object_props: (0..props)
                .map(|i| entity(GEN_NS, &format!("op{i}")))
                .collect(),
            data_props: (0..1 + props / 2)
                .map(|i| entity(GEN_NS, &format!("dp{i}")))
                .collect(),
            annotation_props: (0..2).map(|i| entity(GEN_NS, &format!("ap{i}"))).collect(),
            individuals: (0..individuals)
                .map(|i| entity(GEN_NS, &format!("i{i}")))
                .collect(),
        }
    }
}

const CHARACTERISTICS: [Characteristic; 5] = [
    Characteristic::Asymmetric,
    Characteristic::Irreflexive,
    Characteristic::Reflexive,
    Characteristic::Symmetric,
    Characteristic::Transitive,
];

/// A random ontology touching every axiom kind and both serializer corner
/// cases. Suitable for round-trip, RDF/XML, and merge properties.
pub fn random_ontology(rng: &mut Rng) -> Ontology {
    let (classes, props, individuals) = (4 + rng.below(5), 2 + rng.below(3), 3 + rng.below(4));
    let pools = Pools::build(rng, classes, props, individuals);
    let mut o = Ontology::new(iri(format!("http://gen.example/o{}", rng.below(1 << 32))));
    o.prefixes_mut().bind("g", iri(GEN_NS.into())).unwrap();
    if rng.chance(1, 2) {
        o.prefixes_mut().bind("h", iri(ALT_NS.into())).unwrap();
    }
    if rng.chance(1, 4) {
        o.add_import(iri(format!("http://gen.example/dep{}", rng.below(16))));
    }

    declare_all(&mut o, &pools, rng, true);
    let axiom_count = 5 + rng.below(30);
    for _ in 0..axiom_count {
        let axiom = random_axiom(rng, &pools);
        o.add_axiom(axiom).unwrap();
    }
    o
}

/// A random ontology weighted toward assertions and property semantics: the
/// shape the materialization oracle and monotonicity properties need.
pub fn random_instance_ontology(rng: &mut Rng) -> Ontology {
    let (classes, props, individuals) = (2 + rng.below(5), 1 + rng.below(8), 2 + rng.below(15));
    let pools = Pools::build(rng, classes, props, individuals);
    let mut o = Ontology::new(iri(format!("http://gen.example/inst{}", rng.below(1 << 32))));
    o.prefixes_mut().bind("g", iri(GEN_NS.into())).unwrap();
    declare_all(&mut o, &pools, rng, false);

    // A sparse hierarchy so subclass propagation has something to do.
    for sub in &pools.classes {
        for sup in &pools.classes {
            if sub != sup && rng.chance(15, 100) {
                o.add_axiom(Axiom::SubClassOf(sub.clone(), sup.clone()))
                    .unwrap();
            }
        }
    }
    for p in &pools.object_props {
        for ch in CHARACTERISTICS {
            if rng.chance(1, 5) {
                o.add_axiom(Axiom::PropertyCharacteristic(p.clone(), ch))
                    .unwrap();
            }
        }
        if rng.chance(1, 2) {
            let c = rng.pick(&pools.classes).clone();
            o.add_axiom(Axiom::ObjectPropertyDomain(p.clone(), c)).unwrap();
        }
        if rng.chance(1, 2) {
            let c = rng.pick(&pools.classes).clone();
            o.add_axiom(Axiom::ObjectPropertyRange(p.clone(), c)).unwrap();
        }
    }
    if pools.classes.len() >= 2 && rng.chance(1, 3) {
        let mut members = pools.classes.clone();
        members.truncate(2 + rng.below(2) as usize);
        o.add_axiom(Axiom::DisjointClasses(members)).unwrap();
    }

    let assertions = 4 + rng.below(25);
    for _ in 0..assertions {
        if rng.chance(2, 5) {
            let c = rng.pick(&pools.classes).clone();
            let a = rng.pick(&pools.individuals).clone();
            o.add_axiom(Axiom::ClassAssertion(c, a)).unwrap();
        } else {
            let p = rng.pick(&pools.object_props).clone();
            let s = rng.pick(&pools.individuals).clone();
            let t = rng.pick(&pools.individuals).clone();
            o.add_axiom(Axiom::ObjectPropertyAssertion(p, s, t)).unwrap();
        }
    }
    o
}

fn declare_all(o: &mut Ontology, pools: &Pools, rng: &mut Rng, partially: bool) {
    let declare = |o: &mut Ontology, kind: EntityKind, iris: &[Iri], rng: &mut Rng| {
        for e in iris {
            // Leaving some entities undeclared keeps the lint and the
            // assertion-position individual rules honest.
            if !partially || rng.chance(4, 5) {
                o.add_axiom(Axiom::Declaration(kind, e.clone())).unwrap();
            }
        }
    };
    declare(o, EntityKind::Class, &pools.classes, rng);
    declare(o, EntityKind::ObjectProperty, &pools.object_props, rng);
    declare(o, EntityKind::DataProperty, &pools.data_props, rng);
    declare(o, EntityKind::AnnotationProperty, &pools.annotation_props, rng);
    declare(o, EntityKind::NamedIndividual, &pools.individuals, rng);
}

fn random_axiom(rng: &mut Rng, pools: &Pools) -> Axiom {
    loop {
        let axiom = match rng.below(11) {
            0 => Axiom::SubClassOf(
                rng.pick(&pools.classes).clone(),
                rng.pick(&pools.classes).clone(),
            ),
            1 => {
                let mut members: Vec<Iri> = pools.classes.clone();
                for i in (1..members.len()).rev() {
                    members.swap(i, rng.below(i as u64 + 1) as usize);
                }
                members.truncate(2 + rng.below(3) as usize);
                Axiom::DisjointClasses(members)
            }
            2 => Axiom::ComplementClasses(
                rng.pick(&pools.classes).clone(),
                rng.pick(&pools.classes).clone(),
            ),
            3 => Axiom::ObjectPropertyDomain(
                rng.pick(&pools.object_props).clone(),
                rng.pick(&pools.classes).clone(),
            ),
            4 => Axiom::ObjectPropertyRange(
                rng.pick(&pools.object_props).clone(),
                rng.pick(&pools.classes).clone(),
            ),
            5 => Axiom::DataPropertyDomain(
                rng.pick(&pools.data_props).clone(),
                rng.pick(&pools.classes).clone(),
            ),
            6 => Axiom::DataPropertyRange(
                rng.pick(&pools.data_props).clone(),
                iri("http://www.w3.org/2001/XMLSchema#string".into()),
            ),
            7 => Axiom::PropertyCharacteristic(
                rng.pick(&pools.object_props).clone(),
                *rng.pick(&CHARACTERISTICS),
            ),
            8 => Axiom::ClassAssertion(
                rng.pick(&pools.classes).clone(),
                rng.pick(&pools.individuals).clone(),
            ),
            9 => Axiom::ObjectPropertyAssertion(
                rng.pick(&pools.object_props).clone(),
                rng.pick(&pools.individuals).clone(),
                rng.pick(&pools.individuals).clone(),
            ),
            _ => {
                let value = if rng.chance(1, 3) {
                    AnnotationValue::Iri(rng.pick(&pools.individuals).clone())
                } else {
                    AnnotationValue::Literal(random_literal(rng))
                };
                Axiom::AnnotationAssertion(
                    rng.pick(&pools.annotation_props).clone(),
                    rng.pick(&pools.classes).clone(),
                    value,
                )
            }
        };
        // Degenerate complement pairs are invalid by design; redraw.
        if let Axiom::ComplementClasses(a, b) = &axiom {
            if a == b {
                continue;
            }
        }
        if rng.chance(1, 10) {
            // A data assertion now and then, for literal coverage.
            return Axiom::DataPropertyAssertion(
                rng.pick(&pools.data_props).clone(),
                rng.pick(&pools.individuals).clone(),
                random_literal(rng),
            );
        }
        return axiom;
    }
}

/// A random sub-ontology of `o`: same IRI and prefixes, each axiom kept with
/// probability `keep_num`/`keep_den`. Any axiom subset is itself valid.
pub fn random_subset(rng: &mut Rng, o: &Ontology, keep_num: u64, keep_den: u64) -> Ontology {
    let mut sub = Ontology::new(o.iri().clone());
    for (prefix, ns) in o.prefixes().bindings() {
        sub.prefixes_mut().bind(prefix, ns.clone()).unwrap();
    }
    for axiom in o.axioms() {
        if rng.chance(keep_num, keep_den) {
            sub.add_axiom(axiom.clone()).unwrap();
        }
    }
    sub
}

/// Naive reference implementations used to cross-check the optimized
/// engine. They share nothing with the reasoner's machinery: no worklist,
/// no indices, no precomputed closure — just global rule passes repeated
/// until nothing changes.
pub mod oracle {
    use std::collections::{BTreeMap, BTreeSet};

    use crate::model::{Axiom, Characteristic, EntityKind, Iri, Ontology};

    /// Reflexive-transitive subclass closure by iterate-until-stable pair
    /// composition over the declared classes plus `owl:Thing`.
    pub fn naive_closure(o: &Ontology) -> BTreeSet<(Iri, Iri)> {
        let thing = Iri::thing();
        let mut classes: BTreeSet<Iri> = o.declared(EntityKind::Class).cloned().collect();
        classes.insert(thing.clone());

        let mut pairs: BTreeSet<(Iri, Iri)> = BTreeSet::new();
        for c in &classes {
            pairs.insert((c.clone(), c.clone()));
            pairs.insert((c.clone(), thing.clone()));
        }
        for axiom in o.axioms() {
            if let Axiom::SubClassOf(sub, sup) = axiom {
                if classes.contains(sub) && classes.contains(sup) {
                    pairs.insert((sub.clone(), sup.clone()));
                }
            }
        }
        loop {
            // One full composition round, recomputed from scratch; the
            // middle-element index only speeds up the join, every pair is
            // still re-derived each round until nothing new appears.
            let mut successors: BTreeMap<&Iri, Vec<&Iri>> = BTreeMap::new();
            for (a, b) in &pairs {
                successors.entry(a).or_default().push(b);
            }
            let mut next = pairs.clone();
            for (a, b) in &pairs {
                if let Some(cs) = successors.get(b) {
                    for c in cs {
                        next.insert((a.clone(), (*c).clone()));
                    }
                }
            }
            if next.len() == pairs.len() {
                return pairs;
            }
            pairs = next;
        }
    }

    /// `(class, individual)` membership facts.
    pub type ClassFacts = BTreeSet<(Iri, Iri)>;
    /// `(property, subject, object)` link facts.
    pub type ObjectFacts = BTreeSet<(Iri, Iri, Iri)>;

    /// Fact sets of the brute-force materialization fixpoint.
    pub fn naive_materialize(o: &Ontology) -> (ClassFacts, ObjectFacts) {
        let mut classes: BTreeSet<(Iri, Iri)> = BTreeSet::new();
        let mut objects: BTreeSet<(Iri, Iri, Iri)> = BTreeSet::new();
        for axiom in o.axioms() {
            match axiom {
                Axiom::ClassAssertion(c, a) => {
                    classes.insert((c.clone(), a.clone()));
                }
                Axiom::ObjectPropertyAssertion(p, s, t) => {
                    objects.insert((p.clone(), s.clone(), t.clone()));
                }
                _ => {}
            }
        }
        while apply_rules_once(o, &mut classes, &mut objects) {}
        (classes, objects)
    }

    /// Applies every rule once, globally; returns whether anything was
    /// added. `naive_materialize` loops this; the fixpoint property check
    /// calls it once on the engine's own output.
    pub fn apply_rules_once(o: &Ontology, classes: &mut ClassFacts, objects: &mut ObjectFacts) -> bool {
        let thing = Iri::thing();
        let declared_classes: BTreeSet<&Iri> = o.declared(EntityKind::Class).collect();
        let mut new_classes: Vec<(Iri, Iri)> = Vec::new();
        let mut new_objects: Vec<(Iri, Iri, Iri)> = Vec::new();

        // Every individual is a Thing.
        for axiom in o.axioms() {
            let mentioned: Vec<&Iri> = match axiom {
                Axiom::Declaration(EntityKind::NamedIndividual, a) => vec![a],
                Axiom::ClassAssertion(_, a) => vec![a],
                Axiom::ObjectPropertyAssertion(_, s, t) => vec![s, t],
                Axiom::DataPropertyAssertion(_, s, _) => vec![s],
                _ => vec![],
            };
            for a in mentioned {
                new_classes.push((thing.clone(), a.clone()));
            }
        }
        // One propagation step along declared subclass edges.
        for axiom in o.axioms() {
            if let Axiom::SubClassOf(sub, sup) = axiom {
                if declared_classes.contains(sub) && declared_classes.contains(sup) {
                    for (c, a) in classes.iter() {
                        if c == sub {
                            new_classes.push((sup.clone(), a.clone()));
                        }
                    }
                }
            }
        }
        for axiom in o.axioms() {
            match axiom {
                Axiom::ObjectPropertyDomain(p, c) => {
                    for (p2, s, _) in objects.iter() {
                        if p2 == p {
                            new_classes.push((c.clone(), s.clone()));
                        }
                    }
                }
                Axiom::ObjectPropertyRange(p, c) => {
                    for (p2, _, t) in objects.iter() {
                        if p2 == p {
                            new_classes.push((c.clone(), t.clone()));
                        }
                    }
                }
                Axiom::DataPropertyDomain(p, c) => {
                    for other in o.axioms() {
                        if let Axiom::DataPropertyAssertion(p2, s, _) = other {
                            if p2 == p {
                                new_classes.push((c.clone(), s.clone()));
                            }
                        }
                    }
                }
                Axiom::PropertyCharacteristic(p, Characteristic::Symmetric) => {
                    for (p2, s, t) in objects.iter() {
                        if p2 == p {
                            new_objects.push((p.clone(), t.clone(), s.clone()));
                        }
                    }
                }
                Axiom::PropertyCharacteristic(p, Characteristic::Transitive) => {
                    for (p1, a, b) in objects.iter() {
                        for (p2, b2, c) in objects.iter() {
                            if p1 == p && p2 == p && b == b2 {
                                new_objects.push((p.clone(), a.clone(), c.clone()));
                            }
                        }
                    }
                }
                Axiom::PropertyCharacteristic(p, Characteristic::Reflexive) => {
                    for a in o.declared(EntityKind::NamedIndividual) {
                        new_objects.push((p.clone(), a.clone(), a.clone()));
                    }
                }
                _ => {}
            }
        }

        let mut changed = false;
        for fact in new_classes {
            changed |= classes.insert(fact);
        }
        for fact in new_objects {
            changed |= objects.insert(fact);
        }
        changed
    }
}
