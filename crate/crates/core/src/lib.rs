//! Computation of Kashaev-Reshetikhin holonomy invariants of knots at odd
//! roots of unity.
//!
//! The pipeline: the quantized function algebra on the Poisson dual of SL2
//! ([`qalgebra`]) has a large central subalgebra whose characters, together
//! with a fractional eigenvalue, color the strands of a knot diagram
//! ([`characters`], [`diagram`]). Each color carries an ell^2-dimensional
//! simple bimodule, and crossings act through an explicit braiding built from
//! an outer automorphism of the tensor square ([`bimodule`]). Composing the
//! slice maps of a Morse-position (1,1)-tangle diagram yields a scalar, the
//! invariant ([`evaluator`]). Built-in knot families, their representation
//! varieties and A-polynomials live in [`knots`]; everything is generic over
//! the scalar field tower in [`scalars`].

pub mod bimodule;
pub mod characters;
pub mod diagram;
pub mod evaluator;
pub mod jsonio;
pub mod knots;
pub mod qalgebra;
pub mod scalars;

pub use scalars::{Backend, Field, FieldContext, ScalarError};
