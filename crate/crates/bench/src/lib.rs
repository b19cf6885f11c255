//! Benchmarks for the locfin algorithms; see `benches/`.
