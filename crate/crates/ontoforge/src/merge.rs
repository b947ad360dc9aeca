//! Import resolution and ontology merging.
//!
//! Imports are resolved against a [`Catalog`] mapping ontology IRIs to local
//! files — loading never touches the network. The closure is assembled
//! depth-first and load-once, so cyclic imports terminate (the revisit is
//! skipped and recorded as a warning). [`flatten`] folds a closure into a
//! single ontology; [`merge`] unions independently built ontologies and
//! reports what the union changed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::model::{Iri, ModelError, Ontology};
use crate::reasoner::{check_consistency, Clash, ClashCode};
use crate::syntax::{parse_functional, ParseError};

/// Maps ontology IRIs to document paths.
///
/// The file format is one mapping per line: the IRI (angle brackets
/// optional), a single tab, then a path relative to the catalog file. Blank
/// lines and lines starting with `#` are skipped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: BTreeMap<Iri, PathBuf>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a mapping, returning any previous path for the IRI.
    pub fn insert(&mut self, iri: Iri, path: impl Into<PathBuf>) -> Option<PathBuf> {
        self.entries.insert(iri, path.into())
    }

    pub fn resolve(&self, iri: &Iri) -> Option<&Path> {
        self.entries.get(iri).map(PathBuf::as_path)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Iri, &Path)> {
        self.entries.iter().map(|(iri, p)| (iri, p.as_path()))
    }

    /// Reads a catalog file; relative paths resolve against its directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new(""));
        Catalog::parse(&text, base)
    }

    /// Parses catalog text; relative paths resolve against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Catalog, CatalogError> {
        let mut catalog = Catalog::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw_line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (iri_part, path_part) =
                raw_line.split_once('\t').ok_or_else(|| CatalogError::Malformed {
                    line,
                    message: "expected `<iri><TAB><path>`".into(),
                })?;
            let iri_text = iri_part.trim();
            let iri_text = iri_text
                .strip_prefix('<')
                .and_then(|rest| rest.strip_suffix('>'))
                .unwrap_or(iri_text);
            let iri = Iri::new(iri_text).map_err(|e| CatalogError::Malformed {
                line,
                message: e.to_string(),
            })?;
            let rel = path_part.trim();
            if rel.is_empty() {
                return Err(CatalogError::Malformed {
                    line,
                    message: "empty path".into(),
                });
            }
            if catalog.entries.contains_key(&iri) {
                return Err(CatalogError::Malformed {
                    line,
                    message: format!("duplicate mapping for <{iri}>"),
                });
            }
            catalog.insert(iri, base.join(rel));
        }
        Ok(catalog)
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("catalog line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// A non-fatal event noticed while resolving imports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImportWarning {
    /// An import targeted an IRI already in the closure (a cycle or a
    /// repeated import); the edge was skipped under load-once semantics.
    AlreadyLoaded { importer: Iri, target: Iri },
    /// A document's own IRI differs from the IRI it was imported as.
    IriMismatch { requested: Iri, found: Iri },
}

impl fmt::Display for ImportWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImportWarning::AlreadyLoaded { importer, target } => write!(
                f,
                "import of <{target}> from <{importer}> skipped: already loaded"
            ),
            ImportWarning::IriMismatch { requested, found } => write!(
                f,
                "document imported as <{requested}> declares IRI <{found}>"
            ),
        }
    }
}

/// Every ontology reachable from a root through imports, loaded once each.
#[derive(Debug, Clone)]
pub struct ImportClosure {
    root: Iri,
    loaded: BTreeMap<Iri, Ontology>,
    order: Vec<Iri>,
    warnings: Vec<ImportWarning>,
}

impl ImportClosure {
    pub fn root(&self) -> &Iri {
        &self.root
    }

    pub fn get(&self, iri: &Iri) -> Option<&Ontology> {
        self.loaded.get(iri)
    }

    /// Depth-first load order; the root comes first.
    pub fn order(&self) -> &[Iri] {
        &self.order
    }

    pub fn warnings(&self) -> &[ImportWarning] {
        &self.warnings
    }

    pub fn len(&self) -> usize {
        self.loaded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.loaded.is_empty()
    }

    /// Ontologies in load order.
    pub fn ontologies(&self) -> impl Iterator<Item = &Ontology> {
        self.order.iter().filter_map(|iri| self.loaded.get(iri))
    }
}

#[derive(Debug, Error)]
pub enum ImportError {
    #[error("cannot parse root document: {0}")]
    RootParse(ParseError),
    #[error("unresolved import <{0}>: not in catalog")]
    UnresolvedImport(Iri),
    #[error("failed to load <{iri}>: {cause}")]
    LoadFailure { iri: Iri, cause: String },
}

/// Parses the root document and loads every reachable import through the
/// catalog, depth-first and load-once.
pub fn resolve_imports(root_source: &str, catalog: &Catalog) -> Result<ImportClosure, ImportError> {
    let root = parse_functional(root_source).map_err(ImportError::RootParse)?;
    let root_iri = root.iri().clone();
    let root_imports = root.imports().to_vec();
    let mut closure = ImportClosure {
        root: root_iri.clone(),
        loaded: BTreeMap::new(),
        order: vec![root_iri.clone()],
        warnings: Vec::new(),
    };
    closure.loaded.insert(root_iri.clone(), root);
    visit(&root_iri, &root_imports, catalog, &mut closure)?;
    Ok(closure)
}

fn visit(
    importer: &Iri,
    imports: &[Iri],
    catalog: &Catalog,
    closure: &mut ImportClosure,
) -> Result<(), ImportError> {
    for target in imports {
        if closure.loaded.contains_key(target) {
            closure.warnings.push(ImportWarning::AlreadyLoaded {
                importer: importer.clone(),
                target: target.clone(),
            });
            continue;
        }
        let path = catalog
            .resolve(target)
            .ok_or_else(|| ImportError::UnresolvedImport(target.clone()))?;
        let text = std::fs::read_to_string(path).map_err(|e| ImportError::LoadFailure {
            iri: target.clone(),
            cause: format!("{}: {e}", path.display()),
        })?;
        let onto = parse_functional(&text).map_err(|e| ImportError::LoadFailure {
            iri: target.clone(),
            cause: format!("{}: {e}", path.display()),
        })?;
        if onto.iri() != target {
            closure.warnings.push(ImportWarning::IriMismatch {
                requested: target.clone(),
                found: onto.iri().clone(),
            });
        }
        let nested = onto.imports().to_vec();
        closure.loaded.insert(target.clone(), onto);
        closure.order.push(target.clone());
        visit(target, &nested, catalog, closure)?;
    }
    Ok(())
}

/// A prefix bound to two different namespaces across inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixConflict {
    pub prefix: String,
    pub first: Iri,
    pub second: Iri,
}

impl fmt::Display for PrefixConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "prefix `{}:` bound to both <{}> and <{}>",
            self.prefix, self.first, self.second
        )
    }
}

#[derive(Debug, Error)]
pub enum MergeError {
    #[error("conflicting prefix binding: {0}")]
    PrefixConflict(PrefixConflict),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("merge requires at least one input ontology")]
    NoInputs,
}

/// What a merge changed relative to its inputs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MergeReport {
    /// Distinct axioms present in two or more inputs.
    pub duplicate_axioms: usize,
    /// Always empty on success — conflicting prefixes abort the merge.
    pub prefix_conflicts: Vec<PrefixConflict>,
    /// Clashes of the merged ontology that no input had on its own, matched
    /// by (code, subjects).
    pub introduced_clashes: Vec<Clash>,
}

/// Folds an import closure into one ontology: the root's IRI, the union of
/// all axiom sets, merged prefixes, and no import declarations left.
pub fn flatten(closure: &ImportClosure) -> Result<Ontology, MergeError> {
    let mut out = Ontology::new(closure.root().clone());
    for onto in closure.ontologies() {
        absorb(&mut out, onto)?;
    }
    Ok(out)
}

/// Unions the inputs under `merged_iri` and reports duplicate axioms and
/// clashes the union introduced. Output is independent of input order.
pub fn merge(inputs: &[Ontology], merged_iri: Iri) -> Result<(Ontology, MergeReport), MergeError> {
    if inputs.is_empty() {
        return Err(MergeError::NoInputs);
    }
    let mut out = Ontology::new(merged_iri);
    for input in inputs {
        absorb(&mut out, input)?;
    }

    // An axiom is a duplicate when at least two inputs contain it.
    let mut containing_inputs: BTreeMap<&crate::model::Axiom, usize> = BTreeMap::new();
    for input in inputs {
        for axiom in input.axioms() {
            *containing_inputs.entry(axiom).or_insert(0) += 1;
        }
    }
    let duplicate_axioms = containing_inputs.values().filter(|&&n| n >= 2).count();

    let input_clash_ids: BTreeSet<(ClashCode, Vec<Iri>)> = inputs
        .iter()
        .flat_map(|input| check_consistency(input).clashes)
        .map(|clash| (clash.code, clash.subjects))
        .collect();
    let introduced_clashes = check_consistency(&out)
        .clashes
        .into_iter()
        .filter(|clash| !input_clash_ids.contains(&(clash.code, clash.subjects.clone())))
        .collect();

    Ok((
        out,
        MergeReport {
            duplicate_axioms,
            prefix_conflicts: Vec::new(),
            introduced_clashes,
        },
    ))
}

/// Copies one ontology's prefixes and axioms into `out`, erroring on a
/// prefix rebind or on cross-input punning.
fn absorb(out: &mut Ontology, input: &Ontology) -> Result<(), MergeError> {
    for (prefix, namespace) in input.prefixes().bindings() {
        match out.prefixes().namespace(prefix) {
            Some(existing) if existing != namespace => {
                return Err(MergeError::PrefixConflict(PrefixConflict {
                    prefix: prefix.to_string(),
                    first: existing.clone(),
                    second: namespace.clone(),
                }));
            }
            Some(_) => {}
            None => {
                out.prefixes_mut().bind(prefix, namespace.clone())?;
            }
        }
    }
    for axiom in input.axioms() {
        out.add_axiom(axiom.clone())?;
    }
    Ok(())
}
