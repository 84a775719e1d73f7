//! Dimensions of linear systems of surfaces in `P^3` with assigned fat
//! points.
//!
//! [`conjectured_dimension`] reduces a system by cubic Cremona
//! transformations to standard form, strips fixed quadrics, and corrects the
//! virtual dimension by the contribution of multiple base lines.
//! [`oracle::oracle_dimension`] computes the true dimension independently as
//! the corank of the interpolation matrix at random points over a prime
//! field.
//!
//! ```
//! use fatpoint3::{conjectured_dimension, LinearSystem};
//!
//! let l: LinearSystem = "10 6^5".parse().unwrap();
//! assert_eq!(l.expected_dimension(), 5);
//! assert_eq!(conjectured_dimension(&l).dimension, 15);
//! ```

pub mod cremona;
pub mod error;
mod literal;
pub mod oracle;
pub mod orbit;
pub mod speciality;
pub mod system;
pub mod verify;

pub use cremona::{
    cremona_curve, cremona_curve_full, cremona_system, cremona_with_lines, curve_invariants,
    is_standard_form, reduce_to_standard, EmptyReason, Outcome, ReductionStep, ReductionTrace,
    StepKind,
};
pub use error::{Error, Result};
pub use oracle::{oracle_dimension, oracle_h1, OracleConfig, OracleReport, PointMode};
pub use orbit::{line_orbit, LineOrbit, OrbitClass};
pub use speciality::{
    classify_homogeneous, conjectured_dimension, gamma_cycle, is_special, line_speciality_bound,
    quadric_pencil_dimension, quadric_triple, remove_quadrics, speciality_correction,
    DimensionReport, QuadricPencil, Verdict,
};
pub use system::{
    binomial, triple_product, CurveClass, DivisorClass, LineCycle, LinearSystem, PointPair,
};
pub use verify::{verify_grid, GridBounds, GridReport, GridRow};
