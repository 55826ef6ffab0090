//! Interchange formats: graph6, DOT and JSON result records.

pub mod dot;
pub mod graph6;
pub mod json;

pub use dot::to_dot;
pub use graph6::{parse_graph6, serialize_graph6};
