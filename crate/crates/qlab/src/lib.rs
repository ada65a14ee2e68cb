//! File formats, the bundled corpus and the scenario runner behind the
//! `qlab` command.

pub mod cex;
pub mod corpus;
pub mod formats;
