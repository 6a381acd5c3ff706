//! Command-line front end: golden data, report rendering and the replay of the
//! classification against the bundled tables.

pub mod commands;
pub mod golden;
pub mod report;
pub mod verify;
