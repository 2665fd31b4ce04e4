//! Companion library for the command-line tool: graph serialization to
//! JSON, DOT and TikZ, bundled reference fixtures with comparison, worked
//! example replay, and report rendering.

pub mod examples;
pub mod export;
pub mod fixtures;
pub mod report;
