//! Library surface of the `qsh` workbench: the text-grammar parsers, the
//! character-table file format, the published-scheme character builders,
//! and the property-verification suite. The binary in `main.rs` is a thin
//! command dispatcher over these modules.

pub mod charfile;
pub mod parse;
pub mod schemes;
pub mod verify;
