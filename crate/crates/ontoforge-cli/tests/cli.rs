//! End-to-end tests of the `ontoforge` binary: exit codes, stream
//! discipline, and the machine-readable output formats.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use ontoforge::{parse_functional, Axiom, Iri};

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn ontoforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ontoforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn check_reports_the_corpus_consistent() {
    let out = ontoforge(&["check", &corpus("testing.ofn")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("consistent (0 clashes, 0 warnings)"));
    assert_eq!(stderr(&out), "");
}

#[test]
fn machine_clash_lines_are_tab_separated_and_sorted() {
    let out = ontoforge(&["check", &corpus("mutants/m1.ofn"), "--machine"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout(&out),
        "CLASH\tCHAR-CONFLICT\thttp://example.org/testing#isAppliedIn\n"
    );

    let out = ontoforge(&["check", &corpus("mutants/m5.ofn"), "--machine"]);
    assert_eq!(code(&out), 1);
    let ns = "http://example.org/testing#";
    assert_eq!(
        stdout(&out),
        format!(
            "CLASH\tASYM-VIOLATION\t{ns}isAppliedIn,{ns}term1\n\
             CLASH\tIRREFLEX-VIOLATION\t{ns}isAppliedIn,{ns}term1\n"
        )
    );
}

#[test]
fn unsatisfiable_class_is_a_warning_not_a_clash() {
    let out = ontoforge(&["check", &corpus("mutants/m6.ofn")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("consistent (0 clashes, 1 warning)"));
    assert!(stdout(&out).contains("PhaseTechnique is unsatisfiable"));

    // Machine mode keeps stdout strictly to clash lines.
    let out = ontoforge(&["check", &corpus("mutants/m6.ofn"), "--machine"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert!(stderr(&out).contains("unsatisfiable"));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.ofn");
    fs::write(&path, "Ontology(<http://x.org/o>\nSubClassOf(a:B a:C)\n)\n").unwrap();
    let out = ontoforge(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout(&out), "");
    let diagnostics = stderr(&out);
    assert!(diagnostics.contains("broken.ofn:2:"), "got: {diagnostics}");
    assert!(diagnostics.contains('a'), "names the unbound prefix: {diagnostics}");
}

#[test]
fn missing_file_exits_3() {
    let out = ontoforge(&["check", "/no/such/file.ofn"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("file.ofn"));
}

#[test]
fn unknown_subcommand_exits_2_with_usage_on_stderr() {
    let out = ontoforge(&["frobnicate"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout(&out), "");
    assert!(stderr(&out).contains("Usage"));
}

fn import_fixture(dir: &std::path::Path) -> (String, String) {
    let root = dir.join("root.ofn");
    fs::write(
        &root,
        "Prefix(x:=<http://x.org/ns#>)\n\
         Ontology(<http://x.org/root>\n\
         Import(<http://x.org/lib>)\n\
         Declaration(Class(x:C))\n\
         Declaration(NamedIndividual(x:a))\n\
         ClassAssertion(x:C x:a)\n\
         )\n",
    )
    .unwrap();
    fs::write(
        dir.join("lib.ofn"),
        "Prefix(x:=<http://x.org/ns#>)\n\
         Ontology(<http://x.org/lib>\n\
         Declaration(Class(x:C))\n\
         Declaration(Class(x:D))\n\
         Declaration(NamedIndividual(x:a))\n\
         DisjointClasses(x:C x:D)\n\
         ClassAssertion(x:D x:a)\n\
         )\n",
    )
    .unwrap();
    let catalog = dir.join("catalog.cat");
    fs::write(&catalog, "<http://x.org/lib>\tlib.ofn\n").unwrap();
    (
        root.to_str().unwrap().to_string(),
        catalog.to_str().unwrap().to_string(),
    )
}

#[test]
fn check_with_catalog_flattens_the_import_closure() {
    let dir = tempfile::tempdir().unwrap();
    let (root, catalog) = import_fixture(dir.path());

    // Root and lib are each consistent; only the flattened union clashes.
    let out = ontoforge(&["check", &root, "--catalog", &catalog, "--machine"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("CLASH\tDISJOINT-VIOLATION\t"));

    // Without a catalog the import is left unresolved (note on stderr).
    let out = ontoforge(&["check", &root]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("unresolved"));
}

#[test]
fn unresolved_import_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let (root, _) = import_fixture(dir.path());
    let empty_catalog = dir.path().join("empty.cat");
    fs::write(&empty_catalog, "# nothing here\n").unwrap();
    let out = ontoforge(&["check", &root, "--catalog", empty_catalog.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("http://x.org/lib"));
}

#[test]
fn infer_marks_new_facts_and_stays_parseable() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("inferred.ofn");
    let out = ontoforge(&["infer", &corpus("mutants/m2.ofn"), "-o", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "", "data goes to the output file, not stdout");

    let text = fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.matches(" # inferred").count(), 1);

    let base = parse_functional(&fs::read_to_string(corpus("mutants/m2.ofn")).unwrap()).unwrap();
    let augmented = parse_functional(&text).unwrap();
    assert_eq!(augmented.axiom_count(), base.axiom_count() + 1);
    let thing_fact = Axiom::ClassAssertion(
        Iri::thing(),
        Iri::new("http://example.org/testing#i1").unwrap(),
    );
    assert!(augmented.contains(&thing_fact));
    assert!(!base.contains(&thing_fact));
}

#[test]
fn convert_to_functional_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.ofn");
    let second = dir.path().join("second.ofn");
    let out = ontoforge(&["convert", &corpus("mutants/m4.ofn"), "--to", "functional", "-o", first.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = ontoforge(&["convert", first.to_str().unwrap(), "--to", "functional", "-o", second.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        fs::read_to_string(&first).unwrap(),
        fs::read_to_string(&second).unwrap()
    );
}

#[test]
fn convert_to_rdfxml_emits_well_formed_xml() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("testing.owl");
    let out = ontoforge(&["convert", &corpus("testing.ofn"), "--to", "rdfxml", "-o", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let xml = fs::read_to_string(&out_path).unwrap();
    roxmltree::Document::parse(&xml).expect("well-formed");
}

#[test]
fn merge_exits_1_when_the_union_introduces_a_clash() {
    let dir = tempfile::tempdir().unwrap();
    let extension = dir.path().join("extension.ofn");
    fs::write(
        &extension,
        "Prefix(test:=<http://example.org/testing#>)\n\
         Ontology(<http://example.org/testing/extension>\n\
         Declaration(NamedIndividual(test:shared))\n\
         ClassAssertion(test:TestingPhases test:shared)\n\
         ClassAssertion(test:TestingTechniques test:shared)\n\
         )\n",
    )
    .unwrap();
    let merged = dir.path().join("merged.ofn");
    let out = ontoforge(&[
        "merge",
        &corpus("testing.ofn"),
        extension.to_str().unwrap(),
        "--iri",
        "http://example.org/testing/merged",
        "-o",
        merged.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let report = stdout(&out);
    assert!(report.contains("introduced clash DISJOINT-VIOLATION:"), "got: {report}");

    // The written document itself checks as inconsistent.
    let out = ontoforge(&["check", merged.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn merge_without_new_clashes_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let merged = dir.path().join("merged.ofn");
    let out = ontoforge(&[
        "merge",
        &corpus("testing.ofn"),
        &corpus("mutants/m6.ofn"),
        "--iri",
        "http://example.org/testing/m6-union",
        "-o",
        merged.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0 introduced clashes"));
    parse_functional(&fs::read_to_string(&merged).unwrap()).unwrap();
}

#[test]
fn query_direct_subclasses_lists_the_three_techniques() {
    let out = ontoforge(&[
        "query",
        &corpus("testing.ofn"),
        "--subclasses-of",
        "test:TestingTechniques",
        "--direct",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "http://example.org/testing#ErrorBasedTechnique\n\
         http://example.org/testing#FunctionalTechnique\n\
         http://example.org/testing#StructuralTechnique\n"
    );
}

#[test]
fn query_superclasses_walks_to_thing() {
    let out = ontoforge(&[
        "query",
        &corpus("testing.ofn"),
        "--superclasses-of",
        "test:ErrorGuessing",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "http://example.org/testing#ErrorBasedTechnique\n\
         http://example.org/testing#TestingTechniques\n\
         http://www.w3.org/2002/07/owl#Thing\n"
    );
}

#[test]
fn query_instances_accepts_full_iris() {
    let out = ontoforge(&[
        "query",
        &corpus("mutants/m2.ofn"),
        "--instances-of",
        "http://example.org/testing#TestingPhases",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "http://example.org/testing#i1\n");
}

#[test]
fn query_rejects_unresolvable_curies_and_double_modes() {
    let out = ontoforge(&["query", &corpus("testing.ofn"), "--subclasses-of", "nope:X"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("nope:X"));

    let out = ontoforge(&[
        "query",
        &corpus("testing.ofn"),
        "--subclasses-of",
        "test:TestingPhases",
        "--instances-of",
        "test:TestingPhases",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn stats_output_is_pinned_for_the_corpus() {
    let out = ontoforge(&["stats", &corpus("testing.ofn")]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "entities:\n\
        \x20 Class                   16\n\
        \x20 ObjectProperty          3\n\
        \x20 AnnotationProperty      2\n\
         axioms:\n\
        \x20 declaration             21\n\
        \x20 subclass-of             9\n\
        \x20 disjoint-classes        1\n\
        \x20 object-property-domain  3\n\
        \x20 object-property-range   3\n\
        \x20 property-characteristic 6\n\
        \x20 annotation-assertion    2\n\
         total: 45 axioms\n"
    );
}
