//! Criterion benchmarks for `catcodes-core`; see `benches/`.
