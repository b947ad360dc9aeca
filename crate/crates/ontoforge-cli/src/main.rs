//! Command-line front end for the ontoforge toolkit.
//!
//! The exit code is part of the contract: 0 for success (consistent, for
//! commands that judge consistency), 1 for an inconsistent ontology, 2 for
//! usage and parse errors, 3 for I/O, catalog, and import-resolution
//! failures. Data goes to standard output, diagnostics to standard error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ontoforge::syntax::render_axiom;
use ontoforge::{
    check_consistency, flatten, instances_of, materialize, merge, parse_functional,
    resolve_imports, serialize_functional, serialize_rdfxml, subclasses_of, superclasses_of,
    Axiom, Catalog, Clash, ConsistencyReport, EntityKind, ImportError, Iri, Ontology,
};

#[derive(Parser)]
#[command(name = "ontoforge", version, about = "Parse, validate, reason over, and merge OWL-style ontologies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an ontology for consistency
    Check {
        file: PathBuf,
        /// Tab-separated `<iri>\tpath` catalog; resolves and flattens the
        /// import closure before checking
        #[arg(long, value_name = "FILE")]
        catalog: Option<PathBuf>,
        /// One tab-separated line per clash instead of the prose report
        #[arg(long)]
        machine: bool,
    },
    /// Materialize inferred facts and write the augmented document
    Infer {
        file: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Parse a document and re-serialize it in the chosen format
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Merge documents into one ontology under a new IRI
    Merge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Ontology IRI of the merged result
        #[arg(long, value_name = "IRI")]
        iri: String,
        #[arg(short, long, value_name = "FILE")]
        out: PathBuf,
    },
    /// List subclasses, superclasses, or instances of a class
    Query {
        file: PathBuf,
        /// Class to query, as a CURIE resolved against the document's
        /// prefixes or a full IRI (wrap in <> to force an IRI)
        #[arg(long, value_name = "CLASS")]
        subclasses_of: Option<String>,
        #[arg(long, value_name = "CLASS")]
        superclasses_of: Option<String>,
        #[arg(long, value_name = "CLASS")]
        instances_of: Option<String>,
        /// Only direct results (transitive reduction / most specific class)
        #[arg(long)]
        direct: bool,
    },
    /// Print entity and axiom counts
    Stats { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Functional,
    Rdfxml,
}

/// A diagnostic destined for standard error, plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Real errors print usage to stderr and exit 2; --help and
            // --version print to stdout and exit 0.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("ontoforge: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Check { file, catalog, machine } => cmd_check(&file, catalog.as_deref(), machine),
        Command::Infer { file, out } => cmd_infer(&file, &out),
        Command::Convert { file, to, out } => cmd_convert(&file, to, &out),
        Command::Merge { files, iri, out } => cmd_merge(&files, &iri, &out),
        Command::Query { file, subclasses_of, superclasses_of, instances_of, direct } => {
            cmd_query(&file, subclasses_of, superclasses_of, instances_of, direct)
        }
        Command::Stats { file } => cmd_stats(&file),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn parse_document(text: &str, path: &Path) -> Result<Ontology, Failure> {
    parse_functional(text).map_err(|e| {
        Failure::usage(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message))
    })
}

fn load_document(path: &Path) -> Result<Ontology, Failure> {
    let text = read(path)?;
    parse_document(&text, path)
}

fn cmd_check(file: &Path, catalog: Option<&Path>, machine: bool) -> Result<ExitCode, Failure> {
    let ontology = match catalog {
        Some(catalog_path) => {
            let catalog = Catalog::load(catalog_path)
                .map_err(|e| Failure::io(format!("{}: {e}", catalog_path.display())))?;
            let source = read(file)?;
            let closure = resolve_imports(&source, &catalog).map_err(|e| match e {
                ImportError::RootParse(p) => Failure::usage(format!(
                    "{}:{}:{}: {}",
                    file.display(),
                    p.line,
                    p.column,
                    p.message
                )),
                other => Failure::io(other.to_string()),
            })?;
            for warning in closure.warnings() {
                eprintln!("warning: {warning}");
            }
            flatten(&closure).map_err(|e| Failure::io(format!("flattening imports: {e}")))?
        }
        None => {
            let ontology = load_document(file)?;
            if !ontology.imports().is_empty() {
                eprintln!(
                    "note: {} import{} left unresolved (pass --catalog to resolve)",
                    ontology.imports().len(),
                    plural(ontology.imports().len())
                );
            }
            ontology
        }
    };

    let report = check_consistency(&ontology);
    if machine {
        for clash in &report.clashes {
            println!("CLASH\t{}\t{}", clash.code.as_str(), join_subjects(clash, ","));
        }
        for warning in &report.warnings {
            eprintln!(
                "warning: class {} is unsatisfiable (subclass of disjoint {} and {})",
                warning.class, warning.pair.0, warning.pair.1
            );
        }
    } else {
        print_report(&ontology, &report);
    }
    Ok(exit_for(&report))
}

fn print_report(ontology: &Ontology, report: &ConsistencyReport) {
    let verdict = if report.is_consistent() { "consistent" } else { "inconsistent" };
    println!(
        "<{}>: {verdict} ({} clash{}, {} warning{})",
        ontology.iri(),
        report.clashes.len(),
        es_plural(report.clashes.len()),
        report.warnings.len(),
        plural(report.warnings.len())
    );
    for clash in &report.clashes {
        println!("clash {}: {}", clash.code.as_str(), join_subjects(clash, ", "));
    }
    for warning in &report.warnings {
        println!(
            "warning: class {} is unsatisfiable (subclass of disjoint {} and {})",
            warning.class, warning.pair.0, warning.pair.1
        );
    }
}

fn exit_for(report: &ConsistencyReport) -> ExitCode {
    if report.is_consistent() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn join_subjects(clash: &Clash, separator: &str) -> String {
    clash
        .subjects
        .iter()
        .map(Iri::as_str)
        .collect::<Vec<_>>()
        .join(separator)
}

fn cmd_infer(file: &Path, out: &Path) -> Result<ExitCode, Failure> {
    let base = load_document(file)?;
    let store = materialize(&base);

    let mut candidates: Vec<Axiom> = Vec::new();
    for (class, individual) in store.class_assertions() {
        candidates.push(Axiom::ClassAssertion(class.clone(), individual.clone()));
    }
    for (property, subject, object) in store.object_assertions().map(|t| (&t.0, &t.1, &t.2)) {
        candidates.push(Axiom::ObjectPropertyAssertion(
            property.clone(),
            subject.clone(),
            object.clone(),
        ));
    }

    let mut augmented = base.clone();
    let mut inferred: BTreeSet<Axiom> = BTreeSet::new();
    for axiom in candidates {
        if !base.contains(&axiom) {
            augmented
                .add_axiom(axiom.clone())
                .expect("assertion facts cannot conflict with declarations");
            inferred.insert(axiom);
        }
    }

    // Canonical layout with inferred lines marked; comments are stripped on
    // parse, so the output stays a valid document equal to `augmented`.
    let mut text = String::new();
    for (prefix, ns) in augmented.prefixes().bindings() {
        writeln!(text, "Prefix({prefix}:=<{ns}>)").unwrap();
    }
    writeln!(text, "Ontology(<{}>", augmented.iri()).unwrap();
    for import in augmented.imports() {
        writeln!(text, "Import(<{import}>)").unwrap();
    }
    for axiom in augmented.axioms() {
        text.push_str(&render_axiom(axiom, augmented.prefixes()));
        if inferred.contains(axiom) {
            text.push_str(" # inferred");
        }
        text.push('\n');
    }
    text.push_str(")\n");

    write_out(out, &text)?;
    eprintln!("{}: {} inferred assertion{}", out.display(), inferred.len(), plural(inferred.len()));
    Ok(ExitCode::SUCCESS)
}

fn cmd_convert(file: &Path, to: Format, out: &Path) -> Result<ExitCode, Failure> {
    let ontology = load_document(file)?;
    let text = match to {
        Format::Functional => serialize_functional(&ontology),
        Format::Rdfxml => serialize_rdfxml(&ontology),
    };
    write_out(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_merge(files: &[PathBuf], iri: &str, out: &Path) -> Result<ExitCode, Failure> {
    let merged_iri = Iri::new(iri).map_err(|e| Failure::usage(format!("--iri {iri}: {e}")))?;
    let mut inputs = Vec::with_capacity(files.len());
    for file in files {
        inputs.push(load_document(file)?);
    }
    let (merged, report) =
        merge(&inputs, merged_iri).map_err(|e| Failure::usage(format!("merge failed: {e}")))?;
    write_out(out, &serialize_functional(&merged))?;

    println!(
        "merged {} input{} into <{}>: {} axiom{}, {} in more than one input, {} introduced clash{}",
        inputs.len(),
        plural(inputs.len()),
        merged.iri(),
        merged.axiom_count(),
        plural(merged.axiom_count()),
        report.duplicate_axioms,
        report.introduced_clashes.len(),
        es_plural(report.introduced_clashes.len())
    );
    for clash in &report.introduced_clashes {
        println!("introduced clash {}: {}", clash.code.as_str(), join_subjects(clash, ", "));
    }
    if report.introduced_clashes.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_query(
    file: &Path,
    subclasses: Option<String>,
    superclasses: Option<String>,
    instances: Option<String>,
    direct: bool,
) -> Result<ExitCode, Failure> {
    let mut modes: Vec<(&str, String)> = Vec::new();
    if let Some(v) = subclasses {
        modes.push(("subclasses", v));
    }
    if let Some(v) = superclasses {
        modes.push(("superclasses", v));
    }
    if let Some(v) = instances {
        modes.push(("instances", v));
    }
    if modes.len() != 1 {
        return Err(Failure::usage(
            "query needs exactly one of --subclasses-of, --superclasses-of, --instances-of",
        ));
    }
    let (mode, raw) = modes.remove(0);

    let ontology = load_document(file)?;
    let class = resolve_class_arg(&ontology, &raw)?;
    let results = match mode {
        "subclasses" => subclasses_of(&ontology, &class, direct),
        "superclasses" => superclasses_of(&ontology, &class, direct),
        _ => instances_of(&ontology, &class, direct),
    };
    for iri in results {
        println!("{iri}");
    }
    Ok(ExitCode::SUCCESS)
}

/// `<...>` forces a full IRI; otherwise a CURIE resolved against the
/// document's prefixes, falling back to a full IRI when no prefix matches.
fn resolve_class_arg(ontology: &Ontology, raw: &str) -> Result<Iri, Failure> {
    let raw = raw.trim();
    if let Some(inner) = raw.strip_prefix('<').and_then(|rest| rest.strip_suffix('>')) {
        return Iri::new(inner).map_err(|e| Failure::usage(format!("`{raw}`: {e}")));
    }
    if let Ok(expanded) = ontology.prefixes().expand(raw) {
        return Ok(expanded);
    }
    // Only an unmistakable `scheme://...` shape falls through as a full IRI;
    // anything else colon-shaped is an unresolvable CURIE.
    if let Some((_, rest)) = raw.split_once(':') {
        if rest.starts_with("//") {
            if let Ok(iri) = Iri::new(raw) {
                return Ok(iri);
            }
        }
    }
    Err(Failure::usage(format!(
        "cannot resolve `{raw}`: no such prefix in the document (wrap in <> to force a full IRI)"
    )))
}

const ENTITY_KINDS: [EntityKind; 6] = [
    EntityKind::Class,
    EntityKind::ObjectProperty,
    EntityKind::DataProperty,
    EntityKind::AnnotationProperty,
    EntityKind::NamedIndividual,
    EntityKind::Datatype,
];

fn cmd_stats(file: &Path) -> Result<ExitCode, Failure> {
    let ontology = load_document(file)?;

    let mut entities: BTreeMap<EntityKind, usize> = BTreeMap::new();
    for (kind, _) in ontology.signature() {
        *entities.entry(kind).or_default() += 1;
    }
    println!("entities:");
    for kind in ENTITY_KINDS {
        if let Some(n) = entities.get(&kind) {
            println!("  {:<24}{n}", kind.keyword());
        }
    }

    let mut axioms: BTreeMap<&'static str, usize> = BTreeMap::new();
    for axiom in ontology.axioms() {
        *axioms.entry(axiom.kind_label()).or_default() += 1;
    }
    println!("axioms:");
    for label in Axiom::KIND_LABELS {
        if let Some(n) = axioms.get(label) {
            println!("  {label:<24}{n}");
        }
    }
    println!("total: {} axiom{}", ontology.axiom_count(), plural(ontology.axiom_count()));
    Ok(ExitCode::SUCCESS)
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

fn es_plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "es"
    }
}
