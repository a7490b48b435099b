//! Finite-field linear codes and their LCD (linear complementary dual)
//! transformations.
//!
//! * [`galois`] - arithmetic in `F_{p^m}`
//! * [`matfq`] - exact dense linear algebra
//! * [`codecore`] - codes, duals, hulls, equivalences, minimum distance
//! * [`lcdforge`] - LCD constructions with certificates
//! * [`bounds`] - entropy, GV rate, Singleton defect
//! * [`shell`] - text formats, random codes, verification and CLI commands

pub mod bounds;
pub mod codecore;
pub mod error;
pub mod galois;
pub mod lcdforge;
pub mod matfq;
pub mod shell;

pub use codecore::{Form, LinearCode, MonomialTransform, Permutation};
pub use error::{Error, Result};
pub use galois::{Elem, Field};
pub use matfq::Matrix;
