//! Computer-algebra workbench for Macaulay's inverse system applied to
//! Artinian level local algebras.
//!
//! The crate analyzes finite inverse systems (Hilbert function, socle type,
//! level / compressed / graded status, filtration tables of the associated
//! graded ring), decides which h-vectors are admissible for level local
//! algebras of socle degree at most three, constructs explicit witnesses for
//! the admissible ones, and certifies gradedness of compressed socle-degree-3
//! algebras by solving an automorphism linear system. All arithmetic is in
//! exact rationals.

pub mod apolar;
pub mod exactlin;
pub mod gradedness;
pub mod hvectors;
pub mod multipoly;
pub mod report;

pub use exactlin::Rational;
