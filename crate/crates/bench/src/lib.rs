//! Benchmark-only crate; see benches/verify.rs.
