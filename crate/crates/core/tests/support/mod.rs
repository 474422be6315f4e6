pub mod gen;
pub mod tracing;
