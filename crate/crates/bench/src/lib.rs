//! Criterion benchmarks for the Pfaffian and determinant engines live in
//! `benches/`. This crate has no library code of its own.
