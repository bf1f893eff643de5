//! Richardson varieties in `G/P_r` for classical groups of types B, C and D.
//!
//! The crate models Weyl groups as signed permutations, decides Bruhat order,
//! lists the extremal minimal coset representatives in closed form, and
//! decides nonemptiness and torus-semistability with checkable certificates.
//! The [`oracle`] module recomputes everything by brute force at small rank.

pub mod bruhat;
pub mod classify;
pub mod criteria;
pub mod error;
pub mod oracle;
pub mod report;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use bruhat::CosetContext;
pub use error::{Error, Result};
pub use rootsys::{LieType, RootSystem, SignProfile, Weight, Q};
pub use weyl::SignedPerm;
