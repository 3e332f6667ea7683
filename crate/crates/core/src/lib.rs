//! Divisors of the line bundle O(1,1) on the flag threefold F³ ⊂ CP² × CP²,
//! their eigen-stratification, the Gelfand–Zeytlin lagrangian spheres in the
//! complement of a divisor, and the cubic hypersurface Y ⊂ CP⁸ that covers the
//! linear system three-to-one.
//!
//! A divisor is encoded by a traceless 3×3 complex matrix `A` up to scale: it is
//! cut out of the incidence hypersurface `Σ xᵢyᵢ = 0` by `Σ aᵢⱼ xᵢ yⱼ = 0`.
//! Simple eigenvalues of `A` are in bijection with classes of lagrangian
//! spheres in the complement, and the points of `Y ∖ Δ` are exactly the pairs
//! (divisor, simple eigenvalue).
//!
//! Module map:
//! - [`eigen`]: normalization, characteristic cubic, clustered roots,
//!   eigen-points, stratum classification, reducibility.
//! - [`flag`]: flag points, the fiber solver, the three GZ spheres, the
//!   lagrangian pullback test, clearance search and homology classes.
//! - [`moduli`]: membership residuals for Y and Δ, the covering fiber.
//! - [`sampling`]: seeded random matrix ensembles and stratum frequencies.
//! - [`verify`]: the built-in verification suite.

pub mod eigen;
pub mod flag;
pub mod linalg;
pub mod moduli;
pub mod projective;
pub mod sampling;
pub mod verify;

mod optimize;

pub use eigen::{
    char_cubic, classify_stratum, cubic_roots, discriminant, eigen_points, is_reducible,
    normalize_divisor_matrix, CharCubic, EigenError, Eigenvalue, EigenvalueSet, Stratum,
    StratumReport, TracelessMatrix, DEFAULT_TOL,
};
pub use flag::{
    clearance, divisor_residual, f_eval, fiber_solve, gz_embed, holomorphic_pair_value,
    homology_class, incidence_residual, lagrangian_residual, Clearance, FlagError, FlagPoint,
    GzSphere, HomologyClass,
};
pub use linalg::{Mat3, Vec3};
pub use moduli::{
    covering_fiber, delta_residual, moduli_points, y_residual, ModuliError, ModuliPoint,
};
pub use num_complex::Complex64;
pub use projective::ProjectivePoint;
pub use sampling::{Ensemble, StratumFrequencyReport};
