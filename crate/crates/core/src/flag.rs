//! Geometry on the flag threefold `X = {Σ xᵢyᵢ = 0} ⊂ CP²_x × CP²_y`.
//!
//! The three Gelfand–Zeytlin spheres are
//!
//! ```text
//! S_i = { [x] × [ε₀x̄₀ : ε₁x̄₁ : ε₂x̄₂] },  εᵢ = −1, εⱼ = +1 (j ≠ i),
//! ```
//!
//! and on `S_i` the incidence relation reads `Σ εⱼ|xⱼ|² = 0`. Setting the
//! `i`-th coordinate to 1 identifies `S_i` with the unit sphere `S³ ⊂ C²`.
//!
//! The symplectic form is the sum of the Fubini–Study forms of the two
//! factors, evaluated in the affine chart that divides by the sphere-index
//! coordinate:
//!
//! ```text
//! ω(ξ, η) = Im[ ((1+|z|²)⟨η,ξ⟩ − ⟨η,z⟩⟨z,ξ⟩) / (1+|z|²)² ],   ⟨a,b⟩ = Σ aᵢb̄ᵢ
//! ```

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::eigen::TracelessMatrix;
use crate::linalg::{cross, herm, vec_norm, Vec3, ONE, ZERO};
use crate::optimize::nelder_mead;
use crate::projective::{ProjectiveError, ProjectivePoint};
use crate::sampling::{random_unit_c2, rng_from_seed};

/// Clearance values below `INCONCLUSIVE_FACTOR · tol` (but above zero)
/// certify neither disjointness nor intersection.
pub const INCONCLUSIVE_FACTOR: f64 = 10.0;
pub const DEFAULT_GRID: usize = 24;
pub const MIN_GRID: usize = 8;

const UNIT_TOL: f64 = 1e-9;
const REFINE_MAX_ITER: usize = 2000;
const REFINE_RESTARTS: usize = 3;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FlagError {
    #[error("sphere index {0} is not 0, 1 or 2")]
    InvalidSphereIndex(usize),
    #[error("[x] is an eigen-point of Aᵀ (|x × Aᵀx| = {cross_norm:e}); the fiber lies in D")]
    EigenPoint { cross_norm: f64 },
    #[error("u is not a unit vector (|u| = {norm})")]
    NotUnitVector { norm: f64 },
    #[error("grid {0} is below the minimum of 8 points per axis")]
    GridTooCoarse(usize),
    #[error("clearance {value:e} is neither zero nor above {threshold:e}")]
    Inconclusive {
        value: f64,
        threshold: f64,
        argmin: [Complex64; 2],
    },
    #[error("homology class needs exactly 3 centers, got {0}")]
    WrongCenterCount(usize),
    #[error("center {center} lies too close to the sphere's image (|F| = {value:e})")]
    AmbiguousSign { center: usize, value: f64 },
    #[error("expected exactly one center inside the sphere, found {0}")]
    NoUniqueCenter(usize),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
}

/// A point `([x], [y])` of `CP² × CP²`; lies on `X` when the incidence holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FlagPoint {
    pub x: ProjectivePoint,
    pub y: ProjectivePoint,
}

impl FlagPoint {
    pub fn new(x: ProjectivePoint, y: ProjectivePoint) -> Self {
        Self { x, y }
    }

    pub fn from_vecs(x: &Vec3, y: &Vec3) -> Result<Self, FlagError> {
        Ok(Self {
            x: ProjectivePoint::from_vec(x)?,
            y: ProjectivePoint::from_vec(y)?,
        })
    }
}

/// One of the Gelfand–Zeytlin spheres `S₀, S₁, S₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GzSphere {
    index: usize,
}

impl GzSphere {
    pub const S0: GzSphere = GzSphere { index: 0 };
    pub const S1: GzSphere = GzSphere { index: 1 };
    pub const S2: GzSphere = GzSphere { index: 2 };
    pub const ALL: [GzSphere; 3] = [Self::S0, Self::S1, Self::S2];

    pub fn new(index: usize) -> Result<Self, FlagError> {
        if index < 3 {
            Ok(Self { index })
        } else {
            Err(FlagError::InvalidSphereIndex(index))
        }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn signs(self) -> [f64; 3] {
        let mut s = [1.0; 3];
        s[self.index] = -1.0;
        s
    }

    /// Slots of `x` filled by the two components of `u`, in increasing order.
    fn free_slots(self) -> [usize; 2] {
        match self.index {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    }

    /// Homogeneous `(x, y)` for `u ∈ S³`, unnormalized.
    fn homogeneous(self, u: &[Complex64; 2]) -> (Vec3, Vec3) {
        let mut x = Vec3::from_element(ZERO);
        x[self.index] = ONE;
        let [p, q] = self.free_slots();
        x[p] = u[0];
        x[q] = u[1];
        let y = self.reflect(&x);
        (x, y)
    }

    /// `v ↦ ε ⊙ v̄`; also the exact differential of the embedding's y-part.
    fn reflect(self, v: &Vec3) -> Vec3 {
        let s = self.signs();
        Vec3::new(v[0].conj() * s[0], v[1].conj() * s[1], v[2].conj() * s[2])
    }

    /// Differential of `u ↦ x(u)` applied to a tangent vector of C².
    fn push_x(self, v: &[Complex64; 2]) -> Vec3 {
        let mut dx = Vec3::from_element(ZERO);
        let [p, q] = self.free_slots();
        dx[p] = v[0];
        dx[q] = v[1];
        dx
    }
}

impl fmt::Display for GzSphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.index)
    }
}

impl Serialize for GzSphere {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.index as u64)
    }
}

/// Class in `H₃(X ∖ D, Z) ≅ Z²` in the basis fixed by the eigenvalue order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    pub m: i32,
    pub n: i32,
}

impl HomologyClass {
    pub const fn new(m: i32, n: i32) -> Self {
        Self { m, n }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

impl Serialize for HomologyClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.m, self.n].serialize(serializer)
    }
}

/// `|Σ xᵢyᵢ|` for unit representatives.
pub fn incidence_residual(p: &FlagPoint) -> f64 {
    p.x.coords()
        .iter()
        .zip(p.y.coords())
        .map(|(a, b)| a * b)
        .sum::<Complex64>()
        .norm()
}

/// `|Σ aᵢⱼ xᵢ yⱼ| / ‖A‖_F` for unit representatives.
pub fn divisor_residual(a: &TracelessMatrix, p: &FlagPoint) -> f64 {
    let x = p.x.to_vec();
    let y = p.y.to_vec();
    (x.transpose() * a.matrix() * y)[(0, 0)].norm() / a.frobenius_norm()
}

/// The unique point of `D` over `[x]`: `y ∝ x × Aᵀx`.
pub fn fiber_solve(
    a: &TracelessMatrix,
    x: &ProjectivePoint,
    tol: f64,
) -> Result<FlagPoint, FlagError> {
    let xv = x.to_vec();
    let y = cross(&xv, &(a.transpose() * xv));
    let cross_norm = vec_norm(&y);
    if cross_norm <= tol * a.frobenius_norm() {
        return Err(FlagError::EigenPoint { cross_norm });
    }
    Ok(FlagPoint::new(*x, ProjectivePoint::from_vec(&y)?))
}

/// `|x × Aᵀx| / ‖A‖_F` for the unit representative: zero exactly on eigen-points.
pub fn eigen_margin(a: &TracelessMatrix, x: &ProjectivePoint) -> f64 {
    let xv = x.to_vec();
    vec_norm(&cross(&xv, &(a.transpose() * xv))) / a.frobenius_norm()
}

/// Embeds `u ∈ S³` into the sphere `s`.
pub fn gz_embed(s: GzSphere, u: &[Complex64; 2]) -> Result<FlagPoint, FlagError> {
    let norm = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(FlagError::NotUnitVector { norm });
    }
    let (x, y) = s.homogeneous(u);
    FlagPoint::from_vecs(&x, &y)
}

/// Affine chart dividing by coordinate `k`, with the pushed-forward tangent.
fn chart(p: &Vec3, dp: &Vec3, k: usize) -> ([Complex64; 2], [Complex64; 2]) {
    let others = match k {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let pk = p[k];
    let z = others.map(|j| p[j] / pk);
    let dz = others.map(|j| (dp[j] * pk - p[j] * dp[k]) / (pk * pk));
    (z, dz)
}

/// Fubini–Study form on C² ⊂ CP² at `z`.
pub fn fubini_study_form(z: &[Complex64; 2], xi: &[Complex64; 2], eta: &[Complex64; 2]) -> f64 {
    let n = 1.0 + z[0].norm_sqr() + z[1].norm_sqr();
    let num = herm(eta, xi) * n - herm(eta, z) * herm(z, xi);
    (num / (n * n)).im
}

/// Tangent frame of S³ at `u`: `iu`, `(−ū₁, ū₀)`, `(−iū₁, iū₀)`.
fn tangent_frame(u: &[Complex64; 2]) -> [[Complex64; 2]; 3] {
    let i = Complex64::i();
    [
        [i * u[0], i * u[1]],
        [-u[1].conj(), u[0].conj()],
        [-i * u[1].conj(), i * u[0].conj()],
    ]
}

/// `ω_x + ω_y` pulled back along the embedding of `s`, on two tangent vectors at `u`.
pub fn pullback_form(
    s: GzSphere,
    u: &[Complex64; 2],
    v: &[Complex64; 2],
    w: &[Complex64; 2],
) -> f64 {
    let (x, y) = s.homogeneous(u);
    let (dxv, dxw) = (s.push_x(v), s.push_x(w));
    let (dyv, dyw) = (s.reflect(&dxv), s.reflect(&dxw));
    let k = s.index();
    let (zx, xv) = chart(&x, &dxv, k);
    let (_, xw) = chart(&x, &dxw, k);
    let (zy, yv) = chart(&y, &dyv, k);
    let (_, yw) = chart(&y, &dyw, k);
    fubini_study_form(&zx, &xv, &xw) + fubini_study_form(&zy, &yv, &yw)
}

/// Largest `|ω(v, w)|` over `sample_count` random points of S³ and the three
/// pairs of the tangent frame. Zero up to rounding for a lagrangian embedding.
pub fn lagrangian_residual(s: GzSphere, sample_count: usize, seed: u64) -> f64 {
    let mut rng = rng_from_seed(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..sample_count.max(1) {
        let u = random_unit_c2(&mut rng);
        let frame = tangent_frame(&u);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            worst = worst.max(pullback_form(s, &u, &frame[a], &frame[b]).abs());
        }
    }
    worst
}

/// Smallest `ω_x(ξ, iξ)` over the same samples and frame vectors, on the
/// x-factor alone. Positive for a Kähler form.
pub fn holomorphic_pair_value(s: GzSphere, sample_count: usize, seed: u64) -> f64 {
    let mut rng = rng_from_seed(seed);
    let mut least = f64::INFINITY;
    for _ in 0..sample_count.max(1) {
        let u = random_unit_c2(&mut rng);
        let (x, _) = s.homogeneous(&u);
        for v in tangent_frame(&u) {
            let dx = s.push_x(&v);
            let (z, xi) = chart(&x, &dx, s.index());
            let jxi = xi.map(|c| c * Complex64::i());
            least = least.min(fubini_study_form(&z, &xi, &jxi));
        }
    }
    least
}

/// `u = (cos η·e^{iφ₁}, sin η·e^{iφ₂})`.
fn hopf(p: &[f64; 3]) -> [Complex64; 2] {
    [
        Complex64::from_polar(p[0].cos(), p[1]),
        Complex64::from_polar(p[0].sin(), p[2]),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Clearance {
    /// Refined minimum of the divisor residual over the sphere.
    pub value: f64,
    /// Best value on the grid before refinement.
    pub grid_value: f64,
    #[serde(serialize_with = "ser_c2")]
    pub argmin: [Complex64; 2],
}

fn ser_c2<S: Serializer>(u: &[Complex64; 2], serializer: S) -> Result<S::Ok, S::Error> {
    [[u[0].re, u[0].im], [u[1].re, u[1].im]].serialize(serializer)
}

/// Numerical minimum of [`divisor_residual`] over the sphere `s`.
///
/// A `grid³` lattice in Hopf coordinates is scanned, then the best lattice
/// point is refined by Nelder–Mead. A positive value means `S ∩ D = ∅` as far
/// as the search can tell; it is not a rigorous lower bound.
pub fn clearance(
    a: &TracelessMatrix,
    s: GzSphere,
    grid: usize,
    tol: f64,
) -> Result<Clearance, FlagError> {
    if grid < MIN_GRID {
        return Err(FlagError::GridTooCoarse(grid));
    }
    let residual = |p: &[f64; 3]| -> f64 {
        let u = hopf(p);
        let (x, y) = s.homogeneous(&u);
        let nx = vec_norm(&x);
        let ny = vec_norm(&y);
        (x.transpose() * a.matrix() * y)[(0, 0)].norm() / (nx * ny * a.frobenius_norm())
    };
    let g = grid as f64;
    let mut best = ([0.0; 3], f64::INFINITY);
    for k in 0..grid {
        let eta = (k as f64 + 0.5) * FRAC_PI_2 / g;
        for m in 0..grid {
            let phi1 = TAU * m as f64 / g;
            for n in 0..grid {
                let p = [eta, phi1, TAU * n as f64 / g];
                let v = residual(&p);
                if v < best.1 {
                    best = (p, v);
                }
            }
        }
    }
    // the squared residual is smooth at its minimum, which the simplex needs
    let squared = |p: &[f64; 3]| residual(p).powi(2);
    let mut point = best.0;
    let mut step = FRAC_PI_2 / g;
    for _ in 0..REFINE_RESTARTS {
        point = nelder_mead(squared, point, step, REFINE_MAX_ITER, 1e-15).0;
        step *= 0.1;
    }
    let value = residual(&point);
    let (point, value) = if value < best.1 { (point, value) } else { best };
    let result = Clearance {
        value,
        grid_value: best.1,
        argmin: hopf(&point),
    };
    let threshold = INCONCLUSIVE_FACTOR * tol;
    if value > 0.0 && value < threshold {
        return Err(FlagError::Inconclusive {
            value,
            threshold,
            argmin: result.argmin,
        });
    }
    Ok(result)
}

/// `F_i = (Σⱼ εⱼ|xⱼ|²) / Σⱼ |xⱼ|²` with the minus sign at `i`.
pub fn f_eval(i: usize, x: &ProjectivePoint) -> f64 {
    let c = x.coords();
    let total: f64 = c.iter().map(|z| z.norm_sqr()).sum();
    let signed: f64 = c
        .iter()
        .enumerate()
        .map(|(j, z)| if j == i { -z.norm_sqr() } else { z.norm_sqr() })
        .sum();
    signed / total
}

/// Class of the sphere in the complement of a stratum-1 divisor.
///
/// `centers` are the three eigen-points in basis order `p₁, p₂, p₃`. The sphere
/// encloses exactly one of them (the one where `F_i < 0`), and the class is
/// `(1,0)`, `(0,1)` or `(1,1)` accordingly.
pub fn homology_class(
    s: GzSphere,
    centers: &[ProjectivePoint],
    tol: f64,
) -> Result<HomologyClass, FlagError> {
    if centers.len() != 3 {
        return Err(FlagError::WrongCenterCount(centers.len()));
    }
    let mut inside = Vec::new();
    for (k, p) in centers.iter().enumerate() {
        let value = f_eval(s.index(), p);
        if value.abs() < tol {
            return Err(FlagError::AmbiguousSign { center: k, value });
        }
        if value < 0.0 {
            inside.push(k);
        }
    }
    match inside.as_slice() {
        [0] => Ok(HomologyClass::new(1, 0)),
        [1] => Ok(HomologyClass::new(0, 1)),
        [2] => Ok(HomologyClass::new(1, 1)),
        other => Err(FlagError::NoUniqueCenter(other.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::DEFAULT_TOL;
    use crate::linalg::c;
    use crate::sampling::reference_divisor;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn pt(v: [f64; 3]) -> ProjectivePoint {
        ProjectivePoint::from_real(v).unwrap()
    }

    fn diag_pm() -> TracelessMatrix {
        TracelessMatrix::from_real_rows([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 0.0]])
            .unwrap()
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(
            incidence_residual(&FlagPoint::new(pt([1.0, 0.0, 0.0]), pt([0.0, 1.0, 0.0]))),
            0.0
        );
        assert!(
            incidence_residual(&FlagPoint::new(pt([1.0, 0.0, 1.0]), pt([1.0, 0.0, -1.0]))) < 1e-15
        );
        assert!(
            (incidence_residual(&FlagPoint::new(pt([1.0, 0.0, 0.0]), pt([1.0, 0.0, 0.0]))) - 1.0)
                .abs()
                < 1e-15
        );
    }

    #[test]
    fn divisor_residual_examples() {
        let a = diag_pm();
        assert_eq!(
            divisor_residual(
                &a,
                &FlagPoint::new(pt([0.0, 0.0, 1.0]), pt([1.0, 0.0, 0.0]))
            ),
            0.0
        );
        let v = divisor_residual(
            &a,
            &FlagPoint::new(pt([1.0, 1.0, 0.0]), pt([1.0, -1.0, 0.0])),
        );
        assert!((v - FRAC_1_SQRT_2).abs() < 1e-15, "{v}");
        let v = divisor_residual(
            &a,
            &FlagPoint::new(pt([1.0, 1.0, 1.0]), pt([1.0, 1.0, -2.0])),
        );
        assert!(v < 1e-15);
    }

    #[test]
    fn fiber_solve_examples() {
        let a = diag_pm();
        let p = fiber_solve(&a, &pt([1.0, 1.0, 1.0]), DEFAULT_TOL).unwrap();
        assert!(p.y.max_coord_deviation(&pt([1.0, 1.0, -2.0])) < 1e-15);
        assert!(incidence_residual(&p) < 1e-15 && divisor_residual(&a, &p) < 1e-15);

        assert!(matches!(
            fiber_solve(&a, &pt([1.0, 0.0, 0.0]), DEFAULT_TOL),
            Err(FlagError::EigenPoint { .. })
        ));

        let p = fiber_solve(&reference_divisor(), &pt([1.0, 1.0, 0.0]), DEFAULT_TOL).unwrap();
        assert!(p.y.max_coord_deviation(&ProjectivePoint::coordinate_point(2)) < 1e-15);
    }

    #[test]
    fn gz_embed_examples() {
        let p = gz_embed(GzSphere::S2, &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(p.x.approx_eq(&pt([1.0, 0.0, 1.0]), 1e-7));
        assert!(p.y.approx_eq(&pt([1.0, 0.0, -1.0]), 1e-7));

        let p = gz_embed(GzSphere::S0, &[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(p.x.approx_eq(&pt([1.0, 0.0, 1.0]), 1e-7));
        assert!(p.y.approx_eq(&pt([-1.0, 0.0, 1.0]), 1e-7));

        let h = FRAC_1_SQRT_2;
        let p = gz_embed(GzSphere::S1, &[c(h, 0.0), c(h, 0.0)]).unwrap();
        assert!(p.x.approx_eq(&pt([h, 1.0, h]), 1e-7));
        assert!(p.y.approx_eq(&pt([h, -1.0, h]), 1e-7));
        assert!(incidence_residual(&p) < 1e-15);
    }

    #[test]
    fn gz_embed_rejects_non_unit() {
        assert!(matches!(
            gz_embed(GzSphere::S0, &[c(1.0, 0.0), c(1.0, 0.0)]),
            Err(FlagError::NotUnitVector { .. })
        ));
        assert_eq!(GzSphere::new(3), Err(FlagError::InvalidSphereIndex(3)));
    }

    #[test]
    fn spheres_are_lagrangian() {
        for s in GzSphere::ALL {
            assert!(lagrangian_residual(s, 100, 0) <= 1e-10);
            assert!(holomorphic_pair_value(s, 100, 0) > 1e-2);
        }
    }

    #[test]
    fn fubini_study_positive_on_complex_line() {
        let z = [c(0.3, -0.2), c(1.1, 0.4)];
        let xi = [c(0.5, 0.5), c(-1.0, 0.25)];
        let jxi = xi.map(|w| w * Complex64::i());
        assert!(fubini_study_form(&z, &xi, &jxi) > 0.0);
        // antisymmetry
        let eta = [c(0.1, 2.0), c(0.7, -0.3)];
        assert!(
            (fubini_study_form(&z, &xi, &eta) + fubini_study_form(&z, &eta, &xi)).abs() < 1e-15
        );
    }

    #[test]
    fn clearance_of_reference_divisor() {
        let a = reference_divisor();
        let norm = a.frobenius_norm();
        // minima of the unit-normalized residual: √2/2 on S₀ and S₁, 1/2 on S₂
        let expected = [FRAC_1_SQRT_2 / norm, FRAC_1_SQRT_2 / norm, 0.5 / norm];
        for (s, e) in GzSphere::ALL.into_iter().zip(expected) {
            let cl = clearance(&a, s, DEFAULT_GRID, DEFAULT_TOL).unwrap();
            assert!((cl.value - e).abs() < 1e-8, "{s}: {} vs {e}", cl.value);
            assert!(cl.value <= cl.grid_value);
        }
    }

    #[test]
    fn clearance_detects_intersection() {
        // residual vanishes at u = (0, 1) on S₀: x = [1:0:1], y = [−1:0:1]
        let a =
            TracelessMatrix::from_real_rows([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
                .unwrap();
        let at_point = divisor_residual(
            &a,
            &gz_embed(GzSphere::S0, &[c(0.0, 0.0), c(1.0, 0.0)]).unwrap(),
        );
        assert_eq!(at_point, 0.0);
        match clearance(&a, GzSphere::S0, DEFAULT_GRID, DEFAULT_TOL) {
            Ok(cl) => assert!(cl.value < 1e-7, "{cl:?}"),
            Err(FlagError::Inconclusive { value, .. }) => assert!(value < 1e-7),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn clearance_rejects_coarse_grid() {
        assert_eq!(
            clearance(&reference_divisor(), GzSphere::S0, 4, DEFAULT_TOL),
            Err(FlagError::GridTooCoarse(4))
        );
    }

    #[test]
    fn f_eval_examples() {
        assert_eq!(f_eval(0, &pt([1.0, 0.0, 0.0])), -1.0);
        assert_eq!(f_eval(0, &pt([0.0, 1.0, 0.0])), 1.0);
        assert!(f_eval(0, &pt([1.0, 1.0, 0.0])).abs() < 1e-15);
    }

    #[test]
    fn homology_classes_of_reference_divisor() {
        let centers: Vec<_> = (0..3).map(ProjectivePoint::coordinate_point).collect();
        let expected = [
            HomologyClass::new(1, 0),
            HomologyClass::new(0, 1),
            HomologyClass::new(1, 1),
        ];
        for (s, e) in GzSphere::ALL.into_iter().zip(expected) {
            assert_eq!(homology_class(s, &centers, DEFAULT_TOL), Ok(e));
        }
    }

    #[test]
    fn homology_class_errors() {
        let two: Vec<_> = (0..2).map(ProjectivePoint::coordinate_point).collect();
        assert_eq!(
            homology_class(GzSphere::S0, &two, DEFAULT_TOL),
            Err(FlagError::WrongCenterCount(2))
        );
        let on_sphere = vec![
            pt([1.0, 1.0, 0.0]),
            pt([0.0, 1.0, 0.0]),
            pt([0.0, 0.0, 1.0]),
        ];
        assert!(matches!(
            homology_class(GzSphere::S0, &on_sphere, DEFAULT_TOL),
            Err(FlagError::AmbiguousSign { center: 0, .. })
        ));
        let all_outside = vec![
            pt([0.0, 1.0, 0.0]),
            pt([0.0, 0.0, 1.0]),
            pt([0.0, 1.0, 1.0]),
        ];
        assert_eq!(
            homology_class(GzSphere::S0, &all_outside, DEFAULT_TOL),
            Err(FlagError::NoUniqueCenter(0))
        );
    }
}
