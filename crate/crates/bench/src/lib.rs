//! Criterion benchmarks for `qtorus`; see `benches/algebra.rs`.
