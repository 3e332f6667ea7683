//! Points of CP² in a canonical representative.
//!
//! The canonical representative has unit Euclidean norm, and the first
//! coordinate of (numerically) largest modulus is real and positive. Two
//! representatives of the same point then agree entrywise up to rounding.

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::linalg::{herm, Vec3};

/// Relative slack used when deciding which coordinate has the largest modulus.
/// Coordinates within this factor of the maximum count as tied, and the first
/// tied coordinate wins.
const PIVOT_TIE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum ProjectiveError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("non-finite homogeneous coordinate")]
    NonFinite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    coords: [Complex64; 3],
}

impl ProjectivePoint {
    pub fn new(coords: [Complex64; 3]) -> Result<Self, ProjectiveError> {
        if coords
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(ProjectiveError::NonFinite);
        }
        let norm = coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(ProjectiveError::ZeroVector);
        }
        let max = coords.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let pivot = coords
            .iter()
            .position(|z| z.norm() >= max * (1.0 - PIVOT_TIE_SLACK))
            .unwrap_or(0);
        let phase = coords[pivot].conj() / coords[pivot].norm();
        // adding +0 turns any −0 into +0 so equal points print identically
        Ok(Self {
            coords: coords.map(|z| z * phase / norm + Complex64::new(0.0, 0.0)),
        })
    }

    pub fn from_real(coords: [f64; 3]) -> Result<Self, ProjectiveError> {
        Self::new(coords.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn from_vec(v: &Vec3) -> Result<Self, ProjectiveError> {
        Self::new([v[0], v[1], v[2]])
    }

    /// The coordinate point with a single nonzero entry at `index`.
    pub fn coordinate_point(index: usize) -> Self {
        let mut coords = [Complex64::new(0.0, 0.0); 3];
        coords[index] = Complex64::new(1.0, 0.0);
        Self { coords }
    }

    pub fn coords(&self) -> &[Complex64; 3] {
        &self.coords
    }

    pub fn to_vec(&self) -> Vec3 {
        Vec3::new(self.coords[0], self.coords[1], self.coords[2])
    }

    /// Sine of the Fubini–Study angle between the two lines: 0 for the same
    /// point, 1 for orthogonal lines.
    pub fn distance(&self, other: &Self) -> f64 {
        let overlap = herm(&self.coords, &other.coords).norm();
        (1.0 - overlap * overlap).max(0.0).sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    /// Largest entrywise deviation between canonical representatives.
    pub fn max_coord_deviation(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coords.iter().map(|z| [z.re, z.im]).collect();
        pairs.serialize(serializer)
    }
}
