//! Finite topological preordered spaces.
//!
//! A space is a finite topology together with a preorder on the same
//! points. The crate classifies such spaces (semiclosed, closed, convex,
//! regular, normal, perfectly normal), builds open monotone separators,
//! continuous isotone Urysohn functions and extensions, utility
//! representations, quotients by indifference, and separation along
//! increasing chains of compact pieces.
//!
//! All values are exact rationals.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod function;
pub mod generate;
pub mod pointset;
pub mod preorder;
pub mod quotient;
pub mod separation;
pub mod stream;
pub mod topology;
pub mod utility;

pub type Rational = num_rational::BigRational;

pub use classify::{classify, diagnose, Classification, ClassifyOptions, Flag, Witness};
pub use error::{Error, Result};
pub use function::MonotoneFn;
pub use pointset::PointSet;
pub use preorder::{Direction, Preorder, PreorderedSpace};
pub use separation::SeparatorPair;
pub use topology::FiniteTopology;
