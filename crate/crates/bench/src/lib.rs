//! Benchmarks for `nugraph-core` live in `benches/`; run them with `cargo bench -p nugraph-bench`.
