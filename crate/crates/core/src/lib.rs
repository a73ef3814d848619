//! Desk-scale computational algebra for finite categorical groups:
//! cocycles on finite groups, the inertia groupoid and transgression,
//! twisted group and groupoid algebras including the twisted Drinfeld
//! double, categorical characters with machine verification of their
//! composition law, and the (H, theta) label calculus for module
//! categories.

pub mod algebra;
pub mod character;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod format;
pub mod group;
pub mod inertia;
pub mod linalg;
pub mod modcat;
pub mod scalar;
pub mod twogroup;

pub use error::{Error, Result};
