//! Regenerates the `.ofn` fixture files under `corpus/` at the workspace
//! root from the built-in constructors:
//!
//! ```text
//! cargo run -p ontoforge --example gen_corpus
//! ```
//!
//! The test suite pins the files byte-for-byte to the constructors, so this
//! is the only sanctioned way to update them.

use std::path::Path;

use ontoforge::corpus::{build_mutants, build_teaching_ontology};
use ontoforge::serialize_functional;

fn main() -> std::io::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let corpus_dir = root.join("corpus");
    let mutants_dir = corpus_dir.join("mutants");
    std::fs::create_dir_all(&mutants_dir)?;

    let testing = corpus_dir.join("testing.ofn");
    std::fs::write(&testing, serialize_functional(&build_teaching_ontology()))?;
    println!("wrote {}", testing.display());

    for fixture in build_mutants() {
        let path = mutants_dir.join(format!("{}.ofn", fixture.id));
        std::fs::write(&path, serialize_functional(&fixture.ontology))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
