//! Catalog, corpus generation, brute-force cross-checks and theorem replay.

pub mod catalog;
pub mod corpus;
pub mod slow;
pub mod theorems;
