//! Benchmark-only crate; see `benches/walks.rs`. Kept separate so the
//! library and CLI build without criterion in their dependency trees.
