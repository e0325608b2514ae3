pub mod bench;
pub mod certificate;
pub mod commands;
pub mod format;
pub mod parse;
pub mod problem;
pub mod stats;
