//! Exact Hom and Ext dimensions between induced modules of the `q`-Schur
//! algebra and Specht modules of the type A Hecke algebra.
//!
//! ```
//! use weylext::engine::Engine;
//! use weylext::{FieldParams, Weight};
//!
//! let engine = Engine::new();
//! let p = FieldParams::classical(3)?;
//! let v = engine.ext_nabla_nabla(&"3,0".parse()?, &"2,1".parse::<Weight>()?, 1, p)?;
//! assert_eq!(v.dim, 1);
//! # Ok::<(), weylext::Error>(())
//! ```

pub mod alcove;
pub mod arith;
pub mod certify;
pub mod engine;
pub mod error;
pub mod mullineux;
pub mod oracle;
pub mod partition;
pub mod transfer;
pub mod weight;

pub use error::{Error, Result};
pub use partition::{Composition, Partition};
pub use weight::{FieldParams, Weight};
