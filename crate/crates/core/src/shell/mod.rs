//! Text formats, random code generation, verification and the command
//! drivers behind the `lcdkit` binary.

pub mod commands;
pub mod format;
pub mod random;
pub mod verify;

pub use format::{parse_certificate, parse_code, write_certificate, write_code, Certificate};
pub use random::{random_code, CodeRng};
pub use verify::{verify_extension, verify_lcdify, VerifyFailure};
