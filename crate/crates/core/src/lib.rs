//! Exact computer algebra for finite-dimensional color Hom-Lie algebras.
//!
//! All arithmetic is over arbitrary-precision rationals. Algebras are
//! presented by structure constants on a homogeneous basis of a space graded
//! by a finitely generated abelian group with a bicharacter.

use std::sync::atomic::{AtomicBool, Ordering};

pub mod algebra;
pub mod catalog;
pub mod codec;
pub mod checks;
pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod faulkner;
pub mod grading;
pub mod linalg;
pub mod rational;
pub mod representations;

static EAGER_VERIFICATION: AtomicBool = AtomicBool::new(true);

/// Turns re-verification of constructed algebras on or off process-wide.
pub fn set_eager_verification(on: bool) {
    EAGER_VERIFICATION.store(on, Ordering::Relaxed);
}

pub fn eager_verification() -> bool {
    EAGER_VERIFICATION.load(Ordering::Relaxed)
}
