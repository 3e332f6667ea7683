//! Small fixed-size complex linear algebra shared by the other modules.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

pub type Mat3 = Matrix3<Complex64>;
pub type Vec3 = Vector3<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Builds a matrix from row-major complex entries.
pub fn mat_from_rows(rows: [[Complex64; 3]; 3]) -> Mat3 {
    Mat3::from_fn(|r, col| rows[r][col])
}

/// Builds a matrix from row-major real entries.
pub fn mat_from_real(rows: [[f64; 3]; 3]) -> Mat3 {
    Mat3::from_fn(|r, col| c(rows[r][col], 0.0))
}

pub fn diag(d: [Complex64; 3]) -> Mat3 {
    Mat3::from_diagonal(&Vec3::new(d[0], d[1], d[2]))
}

pub fn frobenius_norm(m: &Mat3) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Singular values in descending order, with the right singular vectors as
/// the matching columns of `V` (so `M v_k = σ_k u_k`).
pub fn svd_sorted(m: &Mat3) -> ([f64; 3], [Vec3; 3]) {
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested V^H");
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let sigma = order.map(|k| svd.singular_values[k]);
    let vecs = order.map(|k| Vec3::new(v_t[(k, 0)].conj(), v_t[(k, 1)].conj(), v_t[(k, 2)].conj()));
    (sigma, vecs)
}

pub fn spectral_norm(m: &Mat3) -> f64 {
    svd_sorted(m).0[0]
}

/// Hermitian inner product `⟨a, b⟩ = Σ aᵢ b̄ᵢ`.
#[inline]
pub fn herm(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

/// Bilinear (non-conjugating) cross product.
#[inline]
pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    Vec3::new(
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
}

pub fn vec_norm(v: &Vec3) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
