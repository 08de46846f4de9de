//! Criterion benchmarks for the weyl-core engine; see `benches/engine.rs`.
