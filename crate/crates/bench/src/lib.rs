//! Criterion benchmarks for `mvcomp`; see `benches/`.
