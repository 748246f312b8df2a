//! Criterion benchmarks for `seidel-core`; see `benches/`.
