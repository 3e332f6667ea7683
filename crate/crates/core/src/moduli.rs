//! The cubic `Y = {det(A − zI) = 0} ⊂ CP⁸`, its ramification divisor
//! `Δ = {3z² + a = 0}`, and the three-sheeted covering `Y → |L|`.
//!
//! Points of `CP⁸` are handled as pairs `(A, z)` with joint scaling
//! `(A, z) ~ (tA, tz)`; no basis of the traceless slice is ever chosen.
//! Residuals are normalized by `(‖A‖₂ + |z|)` to the degree of the equation,
//! so they are invariant under the joint scaling.

use num_complex::Complex64;
use serde::Serialize;

use crate::eigen::{char_cubic, eigenvalues, ser_complex, TracelessMatrix};

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum ModuliError {
    #[error("(A, z) is not on Y: residual {residual:e} exceeds {tol:e}")]
    NotOnY { residual: f64, tol: f64 },
}

/// A point of `Y` over the divisor `A`: the pair (divisor, eigenvalue).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModuliPoint {
    pub matrix: TracelessMatrix,
    #[serde(serialize_with = "ser_complex")]
    pub z: Complex64,
    /// Algebraic multiplicity of `z`; the point lies on `Δ` when it exceeds 1.
    pub multiplicity: usize,
}

fn normalizer(a: &TracelessMatrix, z: Complex64) -> f64 {
    a.spectral_norm() + z.norm()
}

/// `|det(A − zI)| / (‖A‖₂ + |z|)³`.
pub fn y_residual(a: &TracelessMatrix, z: Complex64) -> f64 {
    char_cubic(a).det_at(z).norm() / normalizer(a, z).powi(3)
}

/// `|3z² + a| / (‖A‖₂ + |z|)²` for a point of `Y` (checked against `tol`).
pub fn delta_residual(a: &TracelessMatrix, z: Complex64, tol: f64) -> Result<f64, ModuliError> {
    let residual = y_residual(a, z);
    if residual > tol {
        return Err(ModuliError::NotOnY { residual, tol });
    }
    let cubic = char_cubic(a);
    Ok((3.0 * z * z + cubic.a).norm() / normalizer(a, z).powi(2))
}

/// The distinct eigenvalues of `A` as points of `Y`: the fiber of the covering.
pub fn covering_fiber(a: &TracelessMatrix, tol: f64) -> Vec<ModuliPoint> {
    eigenvalues(a, tol)
        .items
        .into_iter()
        .map(|e| ModuliPoint {
            matrix: a.clone(),
            z: e.lambda,
            multiplicity: e.alg_mult,
        })
        .collect()
}

/// Points of `Y ∖ Δ` over `A`, one per simple eigenvalue.
pub fn moduli_points(a: &TracelessMatrix, tol: f64) -> Vec<ModuliPoint> {
    covering_fiber(a, tol)
        .into_iter()
        .filter(|p| p.multiplicity == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{classify_stratum, Stratum, DEFAULT_TOL};
    use crate::linalg::c;
    use crate::sampling::{reference_divisor, stratum_representative};

    fn real(rows: [[f64; 3]; 3]) -> TracelessMatrix {
        TracelessMatrix::from_real_rows(rows).unwrap()
    }

    fn diag3(d: [f64; 3]) -> TracelessMatrix {
        real([[d[0], 0.0, 0.0], [0.0, d[1], 0.0], [0.0, 0.0, d[2]]])
    }

    fn zs(points: &[ModuliPoint]) -> Vec<Complex64> {
        points.iter().map(|p| p.z).collect()
    }

    fn contains(points: &[ModuliPoint], z: Complex64) -> bool {
        points.iter().any(|p| (p.z - z).norm() < 1e-10)
    }

    #[test]
    fn y_residual_examples() {
        let a = diag3([1.0, -1.0, 0.0]);
        assert!(y_residual(&a, c(1.0, 0.0)) < 1e-15);
        assert!((y_residual(&a, c(2.0, 0.0)) - 6.0 / 27.0).abs() < 1e-15);
        let t = c(-0.7, 2.3);
        let scaled = y_residual(&a.scaled(t).unwrap(), c(2.0, 0.0) * t);
        assert!((scaled - 6.0 / 27.0).abs() < 1e-14);
    }

    #[test]
    fn delta_residual_examples() {
        let v = delta_residual(&diag3([1.0, -1.0, 0.0]), c(1.0, 0.0), DEFAULT_TOL).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
        assert_eq!(
            delta_residual(&diag3([1.0, 1.0, -2.0]), c(1.0, 0.0), DEFAULT_TOL),
            Ok(0.0)
        );
        let n = stratum_representative(Stratum::NilpotentFull);
        assert_eq!(delta_residual(&n, c(0.0, 0.0), DEFAULT_TOL), Ok(0.0));
    }

    #[test]
    fn delta_residual_requires_y() {
        assert!(matches!(
            delta_residual(&diag3([1.0, -1.0, 0.0]), c(2.0, 0.0), DEFAULT_TOL),
            Err(ModuliError::NotOnY { .. })
        ));
    }

    #[test]
    fn covering_fiber_examples() {
        let f = covering_fiber(&diag3([1.0, -1.0, 0.0]), DEFAULT_TOL);
        assert_eq!(f.len(), 3);
        for z in [1.0, -1.0, 0.0] {
            assert!(contains(&f, c(z, 0.0)), "{:?}", zs(&f));
        }
        let f = covering_fiber(&diag3([1.0, 1.0, -2.0]), DEFAULT_TOL);
        assert_eq!(f.len(), 2);
        assert!(contains(&f, c(1.0, 0.0)) && contains(&f, c(-2.0, 0.0)));
        let f = covering_fiber(&stratum_representative(Stratum::NilpotentFull), DEFAULT_TOL);
        assert_eq!(f.len(), 1);
        assert!(f[0].z.norm() < 1e-12 && f[0].multiplicity == 3);
        for p in covering_fiber(&reference_divisor(), DEFAULT_TOL) {
            assert!(y_residual(&p.matrix, p.z) <= 1e-10);
        }
    }

    #[test]
    fn moduli_points_examples() {
        assert_eq!(moduli_points(&reference_divisor(), DEFAULT_TOL).len(), 3);
        let m = moduli_points(&diag3([1.0, 1.0, -2.0]), DEFAULT_TOL);
        assert_eq!(m.len(), 1);
        assert!((m[0].z - c(-2.0, 0.0)).norm() < 1e-12);
        assert!(moduli_points(
            &stratum_representative(Stratum::NilpotentRankOne),
            DEFAULT_TOL
        )
        .is_empty());
    }

    #[test]
    fn moduli_count_matches_sphere_count() {
        for s in Stratum::ALL {
            let a = stratum_representative(s);
            let report = classify_stratum(&a, DEFAULT_TOL).unwrap();
            assert_eq!(
                moduli_points(&a, DEFAULT_TOL).len(),
                report.sphere_class_count,
                "{s}"
            );
        }
    }
}
