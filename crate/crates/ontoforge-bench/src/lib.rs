//! Benchmark-only crate: the measurements live in `benches/toolkit.rs`.
