//! Forward-chaining materialization and consistency checking.
//!
//! The reasoner works in two stages. [`materialize`] computes the least
//! fixpoint of the inference rules below over the asserted facts, tracking
//! provenance for every fact. [`check_consistency`] then scans the
//! materialized store for clashes.
//!
//! Inference rules:
//!
//! * subclass closure — the reflexive-transitive subsumption relation from
//!   [`classify`] (feeds membership propagation)
//! * Thing membership — every individual is an instance of `owl:Thing`
//! * membership propagation — `C(a)` and `C ⊑* D` give `D(a)`
//! * domain typing — `p(a,b)` and `Domain(p,C)` give `C(a)`; likewise for a
//!   data assertion's subject
//! * range typing — `p(a,b)` and `Range(p,C)` give `C(b)` (object properties
//!   only; a data range constrains the value space, not an individual)
//! * symmetry — `Symmetric(p)` and `p(a,b)` give `p(b,a)`
//! * transitivity — `Transitive(p)`, `p(a,b)`, `p(b,c)` give `p(a,c)`
//! * reflexivity — `Reflexive(p)` gives `p(a,a)` for every declared
//!   individual
//!
//! All rules are monotone, so the fixpoint is unique and insertion order
//! never shows in the result. The engine is semi-naive: a worklist of newly
//! derived facts drives rule firing.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::model::{Axiom, Characteristic, EntityKind, Iri, Ontology};

/// The reflexive-transitive subclass closure over the declared classes,
/// rooted at `owl:Thing` (which counts as implicitly declared).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Taxonomy {
    classes: BTreeSet<Iri>,
    pairs: BTreeSet<(Iri, Iri)>,
}

impl Taxonomy {
    /// The class universe: declared classes plus `owl:Thing`.
    pub fn classes(&self) -> &BTreeSet<Iri> {
        &self.classes
    }

    /// All (sub, sup) pairs of the closure.
    pub fn pairs(&self) -> &BTreeSet<(Iri, Iri)> {
        &self.pairs
    }

    pub fn is_subclass_of(&self, sub: &Iri, sup: &Iri) -> bool {
        self.pairs.contains(&(sub.clone(), sup.clone()))
    }

    /// Superclasses of `c` (including `c` itself and `owl:Thing`), sorted.
    pub fn superclasses(&self, c: &Iri) -> BTreeSet<Iri> {
        self.pairs
            .iter()
            .filter(|(sub, _)| sub == c)
            .map(|(_, sup)| sup.clone())
            .collect()
    }
}

/// Computes the taxonomy: reflexive-transitive closure of the declared
/// `SubClassOf` edges over declared classes, with every class additionally
/// below `owl:Thing`. Edges naming undeclared classes are ignored — the
/// taxonomy speaks only about the declared universe.
pub fn classify(o: &Ontology) -> Taxonomy {
    let thing = Iri::thing();
    let mut classes: BTreeSet<Iri> = o.declared(EntityKind::Class).cloned().collect();
    classes.insert(thing.clone());

    let mut edges: BTreeMap<&Iri, Vec<&Iri>> = BTreeMap::new();
    for axiom in o.axioms() {
        if let Axiom::SubClassOf(sub, sup) = axiom {
            if classes.contains(sub) && classes.contains(sup) {
                edges.entry(sub).or_default().push(sup);
            }
        }
    }

    let mut pairs = BTreeSet::new();
    for class in &classes {
        // Depth-first reachability from `class` over declared edges.
        let mut reached: BTreeSet<&Iri> = BTreeSet::new();
        let mut stack = vec![class];
        while let Some(current) = stack.pop() {
            if !reached.insert(current) {
                continue;
            }
            if let Some(nexts) = edges.get(current) {
                stack.extend(nexts.iter().copied());
            }
        }
        for sup in reached {
            pairs.insert((class.clone(), sup.clone()));
        }
        pairs.insert((class.clone(), thing.clone()));
    }

    Taxonomy { classes, pairs }
}

/// A materialized fact: class membership or an object-property link.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fact {
    Class { class: Iri, individual: Iri },
    Object { property: Iri, subject: Iri, object: Iri },
}

/// Which rule produced a fact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    /// Stated directly in the ontology.
    Asserted,
    ThingMembership,
    SubclassPropagation,
    DomainTyping,
    RangeTyping,
    Symmetry,
    Transitivity,
    Reflexivity,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Asserted => "asserted",
            RuleId::ThingMembership => "thing-membership",
            RuleId::SubclassPropagation => "subclass-propagation",
            RuleId::DomainTyping => "domain-typing",
            RuleId::RangeTyping => "range-typing",
            RuleId::Symmetry => "symmetry",
            RuleId::Transitivity => "transitivity",
            RuleId::Reflexivity => "reflexivity",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One premise of a derivation: a previously established fact, a source
/// axiom, or a subsumption pair from the taxonomy.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Premise {
    Fact(Fact),
    Axiom(Axiom),
    Subsumption { sub: Iri, sup: Iri },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub rule: RuleId,
    pub premises: Vec<Premise>,
}

/// The materialized closure: all asserted and derived facts, each with the
/// provenance of its first derivation.
#[derive(Debug, Clone, Default)]
pub struct InferredStore {
    class_facts: BTreeMap<Iri, BTreeSet<Iri>>,
    object_facts: BTreeSet<(Iri, Iri, Iri)>,
    // (property, subject) → objects and (property, object) → subjects,
    // mirroring object_facts for the transitivity joins.
    succ: BTreeMap<(Iri, Iri), BTreeSet<Iri>>,
    pred: BTreeMap<(Iri, Iri), BTreeSet<Iri>>,
    provenance: BTreeMap<Fact, Provenance>,
}

impl InferredStore {
    /// All (class, individual) memberships, sorted.
    pub fn class_assertions(&self) -> impl Iterator<Item = (&Iri, &Iri)> {
        self.class_facts
            .iter()
            .flat_map(|(class, inds)| inds.iter().map(move |a| (class, a)))
    }

    /// All (property, subject, object) links, sorted.
    pub fn object_assertions(&self) -> impl Iterator<Item = &(Iri, Iri, Iri)> {
        self.object_facts.iter()
    }

    /// Individuals materialized into `class`.
    pub fn instances(&self, class: &Iri) -> impl Iterator<Item = &Iri> {
        self.class_facts.get(class).into_iter().flatten()
    }

    pub fn contains_class(&self, class: &Iri, individual: &Iri) -> bool {
        self.class_facts
            .get(class)
            .is_some_and(|inds| inds.contains(individual))
    }

    pub fn contains_object(&self, property: &Iri, subject: &Iri, object: &Iri) -> bool {
        self.object_facts
            .contains(&(property.clone(), subject.clone(), object.clone()))
    }

    pub fn contains(&self, fact: &Fact) -> bool {
        match fact {
            Fact::Class { class, individual } => self.contains_class(class, individual),
            Fact::Object {
                property,
                subject,
                object,
            } => self.contains_object(property, subject, object),
        }
    }

    pub fn fact_count(&self) -> usize {
        self.provenance.len()
    }

    /// Every fact in the store, class facts first, each group sorted.
    pub fn facts(&self) -> impl Iterator<Item = Fact> + '_ {
        let classes = self.class_assertions().map(|(c, a)| Fact::Class {
            class: c.clone(),
            individual: a.clone(),
        });
        let objects = self.object_facts.iter().map(|(p, s, ob)| Fact::Object {
            property: p.clone(),
            subject: s.clone(),
            object: ob.clone(),
        });
        classes.chain(objects)
    }

    /// Provenance of the first derivation of `fact`.
    pub fn provenance(&self, fact: &Fact) -> Option<&Provenance> {
        self.provenance.get(fact)
    }

    fn insert(&mut self, fact: Fact, provenance: Provenance) -> bool {
        let added = match &fact {
            Fact::Class { class, individual } => self
                .class_facts
                .entry(class.clone())
                .or_default()
                .insert(individual.clone()),
            Fact::Object {
                property,
                subject,
                object,
            } => {
                let added = self.object_facts.insert((
                    property.clone(),
                    subject.clone(),
                    object.clone(),
                ));
                if added {
                    self.succ
                        .entry((property.clone(), subject.clone()))
                        .or_default()
                        .insert(object.clone());
                    self.pred
                        .entry((property.clone(), object.clone()))
                        .or_default()
                        .insert(subject.clone());
                }
                added
            }
        };
        if added {
            self.provenance.insert(fact, provenance);
        }
        added
    }

    fn objects_of(&self, property: &Iri, subject: &Iri) -> Vec<Iri> {
        self.succ
            .get(&(property.clone(), subject.clone()))
            .map(|s| s.iter().cloned().collect())
            .unwrap_or_default()
    }

    fn subjects_of(&self, property: &Iri, object: &Iri) -> Vec<Iri> {
        self.pred
            .get(&(property.clone(), object.clone()))
            .map(|s| s.iter().cloned().collect())
            .unwrap_or_default()
    }
}

/// Static rule inputs pulled out of the ontology once per run.
struct Schema {
    object_domains: BTreeMap<Iri, BTreeSet<Iri>>,
    object_ranges: BTreeMap<Iri, BTreeSet<Iri>>,
    characteristics: BTreeMap<Iri, BTreeSet<Characteristic>>,
    /// Proper superclasses per class, from the taxonomy.
    supers: BTreeMap<Iri, Vec<Iri>>,
}

impl Schema {
    fn build(o: &Ontology, taxonomy: &Taxonomy) -> Self {
        let mut object_domains: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        let mut object_ranges: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
        let mut characteristics: BTreeMap<Iri, BTreeSet<Characteristic>> = BTreeMap::new();
        for axiom in o.axioms() {
            match axiom {
                Axiom::ObjectPropertyDomain(p, c) => {
                    object_domains.entry(p.clone()).or_default().insert(c.clone());
                }
                Axiom::ObjectPropertyRange(p, c) => {
                    object_ranges.entry(p.clone()).or_default().insert(c.clone());
                }
                Axiom::PropertyCharacteristic(p, ch) => {
                    characteristics.entry(p.clone()).or_default().insert(*ch);
                }
                _ => {}
            }
        }
        let mut supers: BTreeMap<Iri, Vec<Iri>> = BTreeMap::new();
        for (sub, sup) in taxonomy.pairs() {
            if sub != sup {
                supers.entry(sub.clone()).or_default().push(sup.clone());
            }
        }
        Schema {
            object_domains,
            object_ranges,
            characteristics,
            supers,
        }
    }

    fn has(&self, property: &Iri, ch: Characteristic) -> bool {
        self.characteristics
            .get(property)
            .is_some_and(|set| set.contains(&ch))
    }
}

/// Computes the least fixpoint of the inference rules over the asserted
/// facts. Pure function of the ontology value; two runs produce identical
/// stores including provenance.
pub fn materialize(o: &Ontology) -> InferredStore {
    let taxonomy = classify(o);
    materialize_with(o, &taxonomy)
}

fn materialize_with(o: &Ontology, taxonomy: &Taxonomy) -> InferredStore {
    let schema = Schema::build(o, taxonomy);
    let thing = Iri::thing();
    let mut store = InferredStore::default();
    let mut queue: VecDeque<Fact> = VecDeque::new();

    let add = |store: &mut InferredStore, queue: &mut VecDeque<Fact>, fact: Fact, prov: Provenance| {
        if store.insert(fact.clone(), prov) {
            queue.push_back(fact);
        }
    };

    // Individuals: declared ones plus every IRI in an individual position,
    // each remembered with the first axiom that mentions it (the witness for
    // its Thing membership).
    let mut individuals: BTreeMap<Iri, Axiom> = BTreeMap::new();
    for axiom in o.axioms() {
        let mentioned: Vec<&Iri> = match axiom {
            Axiom::Declaration(EntityKind::NamedIndividual, a) => vec![a],
            Axiom::ClassAssertion(_, a) => vec![a],
            Axiom::ObjectPropertyAssertion(_, s, ob) => vec![s, ob],
            Axiom::DataPropertyAssertion(_, s, _) => vec![s],
            _ => vec![],
        };
        for a in mentioned {
            individuals.entry(a.clone()).or_insert_with(|| axiom.clone());
        }
    }

    // Asserted facts.
    for axiom in o.axioms() {
        match axiom {
            Axiom::ClassAssertion(c, a) => add(
                &mut store,
                &mut queue,
                Fact::Class {
                    class: c.clone(),
                    individual: a.clone(),
                },
                Provenance {
                    rule: RuleId::Asserted,
                    premises: vec![Premise::Axiom(axiom.clone())],
                },
            ),
            Axiom::ObjectPropertyAssertion(p, s, ob) => add(
                &mut store,
                &mut queue,
                Fact::Object {
                    property: p.clone(),
                    subject: s.clone(),
                    object: ob.clone(),
                },
                Provenance {
                    rule: RuleId::Asserted,
                    premises: vec![Premise::Axiom(axiom.clone())],
                },
            ),
            _ => {}
        }
    }

    // Thing membership for every individual.
    for (a, witness) in &individuals {
        add(
            &mut store,
            &mut queue,
            Fact::Class {
                class: thing.clone(),
                individual: a.clone(),
            },
            Provenance {
                rule: RuleId::ThingMembership,
                premises: vec![Premise::Axiom(witness.clone())],
            },
        );
    }

    // Reflexivity seeds p(a,a) for declared individuals.
    for (p, chs) in &schema.characteristics {
        if chs.contains(&Characteristic::Reflexive) {
            for a in o.declared(EntityKind::NamedIndividual) {
                add(
                    &mut store,
                    &mut queue,
                    Fact::Object {
                        property: p.clone(),
                        subject: a.clone(),
                        object: a.clone(),
                    },
                    Provenance {
                        rule: RuleId::Reflexivity,
                        premises: vec![
                            Premise::Axiom(Axiom::PropertyCharacteristic(
                                p.clone(),
                                Characteristic::Reflexive,
                            )),
                            Premise::Axiom(Axiom::Declaration(
                                EntityKind::NamedIndividual,
                                a.clone(),
                            )),
                        ],
                    },
                );
            }
        }
    }

    // Domain typing from data assertions (both premises are axioms, so this
    // fires once up front).
    for axiom in o.axioms() {
        if let Axiom::DataPropertyAssertion(p, s, _) = axiom {
            for axiom2 in o.axioms() {
                if let Axiom::DataPropertyDomain(p2, c) = axiom2 {
                    if p2 == p {
                        add(
                            &mut store,
                            &mut queue,
                            Fact::Class {
                                class: c.clone(),
                                individual: s.clone(),
                            },
                            Provenance {
                                rule: RuleId::DomainTyping,
                                premises: vec![
                                    Premise::Axiom(axiom.clone()),
                                    Premise::Axiom(axiom2.clone()),
                                ],
                            },
                        );
                    }
                }
            }
        }
    }

    // Semi-naive closure: each new fact fires the rules it can feed.
    while let Some(fact) = queue.pop_front() {
        match &fact {
            Fact::Class { class, individual } => {
                if let Some(sups) = schema.supers.get(class) {
                    for sup in sups {
                        add(
                            &mut store,
                            &mut queue,
                            Fact::Class {
                                class: sup.clone(),
                                individual: individual.clone(),
                            },
                            Provenance {
                                rule: RuleId::SubclassPropagation,
                                premises: vec![
                                    Premise::Fact(fact.clone()),
                                    Premise::Subsumption {
                                        sub: class.clone(),
                                        sup: sup.clone(),
                                    },
                                ],
                            },
                        );
                    }
                }
            }
            Fact::Object {
                property,
                subject,
                object,
            } => {
                if let Some(domains) = schema.object_domains.get(property) {
                    for c in domains {
                        add(
                            &mut store,
                            &mut queue,
                            Fact::Class {
                                class: c.clone(),
                                individual: subject.clone(),
                            },
                            Provenance {
                                rule: RuleId::DomainTyping,
                                premises: vec![
                                    Premise::Fact(fact.clone()),
                                    Premise::Axiom(Axiom::ObjectPropertyDomain(
                                        property.clone(),
                                        c.clone(),
                                    )),
                                ],
                            },
                        );
                    }
                }
                if let Some(ranges) = schema.object_ranges.get(property) {
                    for c in ranges {
                        add(
                            &mut store,
                            &mut queue,
                            Fact::Class {
                                class: c.clone(),
                                individual: object.clone(),
                            },
                            Provenance {
                                rule: RuleId::RangeTyping,
                                premises: vec![
                                    Premise::Fact(fact.clone()),
                                    Premise::Axiom(Axiom::ObjectPropertyRange(
                                        property.clone(),
                                        c.clone(),
                                    )),
                                ],
                            },
                        );
                    }
                }
                if schema.has(property, Characteristic::Symmetric) {
                    add(
                        &mut store,
                        &mut queue,
                        Fact::Object {
                            property: property.clone(),
                            subject: object.clone(),
                            object: subject.clone(),
                        },
                        Provenance {
                            rule: RuleId::Symmetry,
                            premises: vec![
                                Premise::Fact(fact.clone()),
                                Premise::Axiom(Axiom::PropertyCharacteristic(
                                    property.clone(),
                                    Characteristic::Symmetric,
                                )),
                            ],
                        },
                    );
                }
                if schema.has(property, Characteristic::Transitive) {
                    let char_axiom = Axiom::PropertyCharacteristic(
                        property.clone(),
                        Characteristic::Transitive,
                    );
                    // p(s,o) ∧ p(o,x) ⇒ p(s,x)
                    for next in store.objects_of(property, object) {
                        add(
                            &mut store,
                            &mut queue,
                            Fact::Object {
                                property: property.clone(),
                                subject: subject.clone(),
                                object: next.clone(),
                            },
                            Provenance {
                                rule: RuleId::Transitivity,
                                premises: vec![
                                    Premise::Fact(fact.clone()),
                                    Premise::Fact(Fact::Object {
                                        property: property.clone(),
                                        subject: object.clone(),
                                        object: next,
                                    }),
                                    Premise::Axiom(char_axiom.clone()),
                                ],
                            },
                        );
                    }
                    // p(x,s) ∧ p(s,o) ⇒ p(x,o)
                    for prev in store.subjects_of(property, subject) {
                        add(
                            &mut store,
                            &mut queue,
                            Fact::Object {
                                property: property.clone(),
                                subject: prev.clone(),
                                object: object.clone(),
                            },
                            Provenance {
                                rule: RuleId::Transitivity,
                                premises: vec![
                                    Premise::Fact(Fact::Object {
                                        property: property.clone(),
                                        subject: prev,
                                        object: subject.clone(),
                                    }),
                                    Premise::Fact(fact.clone()),
                                    Premise::Axiom(char_axiom.clone()),
                                ],
                            },
                        );
                    }
                }
            }
        }
    }

    store
}

/// Clash codes, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClashCode {
    CharConflict,
    AsymViolation,
    IrreflexViolation,
    DisjointViolation,
    ComplementViolation,
    UnsatInstantiated,
}

impl ClashCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ClashCode::CharConflict => "CHAR-CONFLICT",
            ClashCode::AsymViolation => "ASYM-VIOLATION",
            ClashCode::IrreflexViolation => "IRREFLEX-VIOLATION",
            ClashCode::DisjointViolation => "DISJOINT-VIOLATION",
            ClashCode::ComplementViolation => "COMPLEMENT-VIOLATION",
            ClashCode::UnsatInstantiated => "UNSAT-INSTANTIATED",
        }
    }
}

impl fmt::Display for ClashCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A detected inconsistency. Identity (for deduplication and for comparing
/// reports across runs or merges) is the (code, subjects) pair; provenance
/// records the evidence of the first detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clash {
    pub code: ClashCode,
    pub subjects: Vec<Iri>,
    pub provenance: Vec<Premise>,
}

/// An unsatisfiable class that has no instances: flagged, not fatal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct UnsatisfiableWarning {
    pub class: Iri,
    /// The disjoint or complement pair the class is squeezed into.
    pub pair: (Iri, Iri),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConsistencyReport {
    /// Sorted by (code, subjects), deduplicated on that identity.
    pub clashes: Vec<Clash>,
    pub warnings: Vec<UnsatisfiableWarning>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.clashes.is_empty()
    }
}

/// The two characteristic combinations that are contradictory on their own:
/// a reflexive property cannot also be asymmetric or irreflexive.
const CONFLICTING_CHARACTERISTICS: [(Characteristic, Characteristic); 2] = [
    (Characteristic::Asymmetric, Characteristic::Reflexive),
    (Characteristic::Irreflexive, Characteristic::Reflexive),
];

/// Materializes, then reports every clash:
///
/// * `CHAR-CONFLICT` — a property declared both Reflexive and
///   Asymmetric/Irreflexive (schema-level, no individuals needed; one clash
///   per property, with all conflicting declarations in the provenance)
/// * `ASYM-VIOLATION` — `Asymmetric(p)` with `p(a,b)` and `p(b,a)`
/// * `IRREFLEX-VIOLATION` — `Irreflexive(p)` with `p(a,a)`
/// * `DISJOINT-VIOLATION` / `COMPLEMENT-VIOLATION` — a shared individual in
///   a disjoint or complement pair
/// * `UNSAT-INSTANTIATED` — an instantiated class subsumed by both sides of
///   a disjoint/complement pair
///
/// Unsatisfiable classes without instances become warnings instead.
pub fn check_consistency(o: &Ontology) -> ConsistencyReport {
    let taxonomy = classify(o);
    let store = materialize_with(o, &taxonomy);
    let schema = Schema::build(o, &taxonomy);

    let mut clashes: BTreeMap<(ClashCode, Vec<Iri>), Clash> = BTreeMap::new();
    let mut record = |code: ClashCode, subjects: Vec<Iri>, provenance: Vec<Premise>| {
        clashes
            .entry((code, subjects.clone()))
            .or_insert(Clash {
                code,
                subjects,
                provenance,
            });
    };

    // CHAR-CONFLICT: contradictory characteristic declarations.
    for (p, chs) in &schema.characteristics {
        let mut conflicting: BTreeSet<Characteristic> = BTreeSet::new();
        for (a, b) in CONFLICTING_CHARACTERISTICS {
            if chs.contains(&a) && chs.contains(&b) {
                conflicting.insert(a);
                conflicting.insert(b);
            }
        }
        if !conflicting.is_empty() {
            let premises = conflicting
                .into_iter()
                .map(|ch| Premise::Axiom(Axiom::PropertyCharacteristic(p.clone(), ch)))
                .collect();
            record(ClashCode::CharConflict, vec![p.clone()], premises);
        }
    }

    // ASYM-VIOLATION and IRREFLEX-VIOLATION over the materialized links.
    for (p, s, ob) in store.object_assertions() {
        if schema.has(p, Characteristic::Asymmetric)
            && s <= ob
            && store.contains_object(p, ob, s)
        {
            let axiom = Premise::Axiom(Axiom::PropertyCharacteristic(
                p.clone(),
                Characteristic::Asymmetric,
            ));
            let forward = Premise::Fact(Fact::Object {
                property: p.clone(),
                subject: s.clone(),
                object: ob.clone(),
            });
            let (subjects, premises) = if s == ob {
                (vec![p.clone(), s.clone()], vec![axiom, forward])
            } else {
                let backward = Premise::Fact(Fact::Object {
                    property: p.clone(),
                    subject: ob.clone(),
                    object: s.clone(),
                });
                (
                    vec![p.clone(), s.clone(), ob.clone()],
                    vec![axiom, forward, backward],
                )
            };
            record(ClashCode::AsymViolation, subjects, premises);
        }
        if s == ob && schema.has(p, Characteristic::Irreflexive) {
            record(
                ClashCode::IrreflexViolation,
                vec![p.clone(), s.clone()],
                vec![
                    Premise::Axiom(Axiom::PropertyCharacteristic(
                        p.clone(),
                        Characteristic::Irreflexive,
                    )),
                    Premise::Fact(Fact::Object {
                        property: p.clone(),
                        subject: s.clone(),
                        object: ob.clone(),
                    }),
                ],
            );
        }
    }

    // Disjoint/complement pairs drive the remaining three codes.
    for (first, second, axiom, code) in exclusion_pairs(o) {
        // Shared individuals.
        let shared: Vec<&Iri> = store
            .instances(&first)
            .filter(|a| store.contains_class(&second, a))
            .collect();
        for a in shared {
            record(
                code,
                vec![a.clone(), first.clone(), second.clone()],
                vec![
                    Premise::Axiom(axiom.clone()),
                    Premise::Fact(Fact::Class {
                        class: first.clone(),
                        individual: a.clone(),
                    }),
                    Premise::Fact(Fact::Class {
                        class: second.clone(),
                        individual: a.clone(),
                    }),
                ],
            );
        }
    }

    // Unsatisfiable classes: squeezed under both sides of a pair.
    let mut warnings: BTreeSet<UnsatisfiableWarning> = BTreeSet::new();
    for (class, first, second, axiom) in unsatisfiable_witnesses(o, &taxonomy) {
        match store.instances(&class).next() {
            Some(instance) => record(
                ClashCode::UnsatInstantiated,
                vec![class.clone(), first.clone(), second.clone()],
                vec![
                    Premise::Subsumption {
                        sub: class.clone(),
                        sup: first.clone(),
                    },
                    Premise::Subsumption {
                        sub: class.clone(),
                        sup: second.clone(),
                    },
                    Premise::Axiom(axiom),
                    Premise::Fact(Fact::Class {
                        class: class.clone(),
                        individual: instance.clone(),
                    }),
                ],
            ),
            None => {
                warnings.insert(UnsatisfiableWarning {
                    class,
                    pair: (first, second),
                });
            }
        }
    }

    ConsistencyReport {
        clashes: clashes.into_values().collect(),
        warnings: warnings.into_iter().collect(),
    }
}

/// All (first, second, axiom, code) exclusion pairs: disjoint pairs expanded
/// pairwise plus complement pairs, each with the clash code a shared
/// individual would trigger. Sorted-deduplicated order.
fn exclusion_pairs(o: &Ontology) -> Vec<(Iri, Iri, Axiom, ClashCode)> {
    let mut out = Vec::new();
    for axiom in o.axioms() {
        match axiom {
            Axiom::DisjointClasses(members) => {
                for (i, a) in members.iter().enumerate() {
                    for b in &members[i + 1..] {
                        out.push((
                            a.clone(),
                            b.clone(),
                            axiom.clone(),
                            ClashCode::DisjointViolation,
                        ));
                    }
                }
            }
            Axiom::ComplementClasses(a, b) => {
                out.push((
                    a.clone(),
                    b.clone(),
                    axiom.clone(),
                    ClashCode::ComplementViolation,
                ));
            }
            _ => {}
        }
    }
    out
}

/// Classes subsumed by both sides of an exclusion pair, with the pair and
/// the axiom as witness. One entry per (class, pair); the axiom is the first
/// one stating the pair in canonical order.
fn unsatisfiable_witnesses(o: &Ontology, taxonomy: &Taxonomy) -> Vec<(Iri, Iri, Iri, Axiom)> {
    let mut seen: BTreeSet<(Iri, Iri, Iri)> = BTreeSet::new();
    let mut out = Vec::new();
    for (first, second, axiom, _) in exclusion_pairs(o) {
        for class in taxonomy.classes() {
            if taxonomy.is_subclass_of(class, &first)
                && taxonomy.is_subclass_of(class, &second)
                && seen.insert((class.clone(), first.clone(), second.clone()))
            {
                out.push((class.clone(), first.clone(), second.clone(), axiom.clone()));
            }
        }
    }
    out.sort_by(|a, b| (&a.0, &a.1, &a.2).cmp(&(&b.0, &b.1, &b.2)));
    out
}

/// Classes that can never have an instance: subsumed by both sides of some
/// disjoint or complement pair.
pub fn unsatisfiable_classes(o: &Ontology) -> BTreeSet<Iri> {
    let taxonomy = classify(o);
    unsatisfiable_witnesses(o, &taxonomy)
        .into_iter()
        .map(|(class, ..)| class)
        .collect()
}

/// Materialized instances of `c`. With `direct`, only individuals whose
/// most-specific classes include `c` — that is, excluding any individual
/// also materialized into a proper declared subclass of `c`.
pub fn instances_of(o: &Ontology, c: &Iri, direct: bool) -> BTreeSet<Iri> {
    let taxonomy = classify(o);
    let store = materialize_with(o, &taxonomy);
    let all: BTreeSet<Iri> = store.instances(c).cloned().collect();
    if !direct {
        return all;
    }
    all.into_iter()
        .filter(|a| {
            !taxonomy.classes().iter().any(|d| {
                d != c && taxonomy.is_subclass_of(d, c) && store.contains_class(d, a)
            })
        })
        .collect()
}

/// Subclasses of `c` from the taxonomy. With `direct`, the declared-edge
/// children surviving transitive reduction (an edge is dropped when another
/// class sits strictly between its endpoints; for mutually-subsuming classes
/// this treats the cycle members as equivalent and elides their edges).
pub fn subclasses_of(o: &Ontology, c: &Iri, direct: bool) -> BTreeSet<Iri> {
    let taxonomy = classify(o);
    if !direct {
        return taxonomy
            .pairs()
            .iter()
            .filter(|(sub, sup)| sup == c && sub != c)
            .map(|(sub, _)| sub.clone())
            .collect();
    }
    declared_children(o, &taxonomy, c)
        .into_iter()
        .filter(|child| !has_intermediate(&taxonomy, child, c))
        .collect()
}

/// Superclasses of `c` from the taxonomy (always including `owl:Thing` for
/// declared classes). With `direct`, the declared-edge parents surviving
/// transitive reduction.
pub fn superclasses_of(o: &Ontology, c: &Iri, direct: bool) -> BTreeSet<Iri> {
    let taxonomy = classify(o);
    if !direct {
        return taxonomy
            .pairs()
            .iter()
            .filter(|(sub, sup)| sub == c && sup != c)
            .map(|(_, sup)| sup.clone())
            .collect();
    }
    if !taxonomy.classes().contains(c) {
        return BTreeSet::new();
    }
    let mut parents: BTreeSet<Iri> = BTreeSet::new();
    for axiom in o.axioms() {
        if let Axiom::SubClassOf(sub, sup) = axiom {
            if sub == c && sup != c && taxonomy.classes().contains(sup) {
                parents.insert(sup.clone());
            }
        }
    }
    if !c.is_thing() {
        parents.insert(Iri::thing());
    }
    parents
        .into_iter()
        .filter(|parent| !has_intermediate(&taxonomy, c, parent))
        .collect()
}

/// Declared-edge children of `c`, including the implicit edge every class
/// has to `owl:Thing`.
fn declared_children(o: &Ontology, taxonomy: &Taxonomy, c: &Iri) -> BTreeSet<Iri> {
    let mut children: BTreeSet<Iri> = BTreeSet::new();
    for axiom in o.axioms() {
        if let Axiom::SubClassOf(sub, sup) = axiom {
            if sup == c && sub != c && taxonomy.classes().contains(sub) {
                children.insert(sub.clone());
            }
        }
    }
    if c.is_thing() {
        children.extend(
            taxonomy
                .classes()
                .iter()
                .filter(|class| !class.is_thing())
                .cloned(),
        );
    }
    children
}

/// True when some third class sits strictly between `sub` and `sup` in the
/// closure, making a direct edge redundant.
fn has_intermediate(taxonomy: &Taxonomy, sub: &Iri, sup: &Iri) -> bool {
    taxonomy.classes().iter().any(|z| {
        z != sub && z != sup && taxonomy.is_subclass_of(sub, z) && taxonomy.is_subclass_of(z, sup)
    })
}
