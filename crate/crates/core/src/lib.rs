//! Čech cohomology of noncommutative coverings of finite-dimensional algebras.
//!
//! The crate works over exact fields (ℚ and 𝔽_p) and builds, in coordinates:
//!
//! * coverings of an algebra by two-sided ideals and their completeness check,
//! * the Sweedler coring of `A -> ⊕ A/I_i` and its Amitsur complex,
//! * functors on ordered index tuples, their Čech complexes and the comparison
//!   map from the Amitsur complex,
//! * a nerve-based oracle for constant coefficients.

pub mod algebra;
pub mod amitsur;
pub mod cech;
pub mod covering;
pub mod error;
pub mod exactla;
pub mod oracle;
pub mod sample;

pub use error::{Error, Result};
