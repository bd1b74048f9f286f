//! Criterion benchmarks for clstrata live in `benches/`; run them with
//! `cargo bench -p clstrata-bench`.
