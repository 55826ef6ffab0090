//! Benchmarks for the search and BFS kernels live under `benches/`.
