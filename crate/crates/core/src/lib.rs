//! Isogeny character sums over F_p.
//!
//! - [`fp`]: prime-field arithmetic, quadratic and cubic residue symbols.
//! - [`curve`]: Weierstrass curves, group law, point enumeration.
//! - [`isogeny3`]: the 3-isogenies `τ_d : E_d → E_{-27d}` and their fiber sums.
//! - [`surface`]: the elliptic surface `y² = x³ + z²` and the global sum, three ways.
//! - [`class_number`]: `h*_p` by Dirichlet's character sum and by reduced forms.
//! - [`two_isogeny`]: the 2-isogeny sum on `y² = (x + 2)(x² - 2)`.
//! - [`registry`]: name-keyed registries of the interchangeable methods above.
//! - [`sweep`] and [`report`]: batch verification over prime ranges.

pub mod class_number;
pub mod curve;
pub mod error;
pub mod fp;
pub mod isogeny3;
pub mod registry;
pub mod report;
pub mod surface;
pub mod sweep;
pub mod tables;
pub mod two_isogeny;

pub use error::{Error, Result};
pub use fp::{CubicCharValue, FieldElement, Prime};
