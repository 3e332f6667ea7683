//! Matrix-side algebra of a divisor.
//!
//! A divisor `D ∈ |O(1,1)|_X|` is the zero set of `Σ aᵢⱼ xᵢ yⱼ` on the incidence
//! hypersurface. Adding a multiple of the identity to `A` adds a multiple of the
//! incidence form and does not change `D`, so `A` is normalized to trace zero
//! and considered up to a nonzero complex scale.
//!
//! The fiber of `π_x` over `[x]` fails to meet `D` in a single point exactly when
//! `x·A = λx` has a solution, i.e. when `x` is an eigenvector of `Aᵀ`. The
//! Jordan type of `A` therefore stratifies the linear system into five strata,
//! and the simple eigenvalues of `A` index the classes of lagrangian spheres in
//! the complement of `D`.
//!
//! Multiplicities are decided numerically:
//! - roots of the characteristic cubic are merged when the cubic lies within a
//!   relative coefficient distance `tol` (measured against `‖A‖_F`) of a cubic
//!   with that root pattern;
//! - geometric multiplicities come from the singular values of `Aᵀ − λI`
//!   against the threshold `tol·‖A‖_F`.
//!
//! [`classify_stratum`] repeats the classification at `tol / 10` and `tol · 10`
//! and reports [`EigenError::Degenerate`] when the answers disagree.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use nalgebra::Schur;
use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::linalg::{frobenius_norm, spectral_norm, svd_sorted, Mat3, Vec3, ZERO};
use crate::projective::ProjectivePoint;

/// Default relative tolerance for clustering and rank decisions.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Factor by which [`classify_stratum`] widens and narrows the tolerance when
/// checking that a classification is stable.
pub const AMBIGUITY_BAND: f64 = 10.0;

const ZERO_DIVISOR_REL: f64 = 1e-12;
const NEWTON_POLISH_STEPS: usize = 3;
const POLISH_MIN_SEPARATION: f64 = 1e-3;
const SCHUR_EPS: f64 = 1e-15;
const SCHUR_MAX_ITER: usize = 500;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EigenError {
    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("section is a multiple of the incidence form and cuts no divisor (traceless part has norm {norm:e})")]
    ZeroDivisor { norm: f64 },
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("conjugating matrix is singular")]
    SingularConjugator,
    #[error("{lambda} is not an eigenvalue at tolerance {tol:e}")]
    NotAnEigenvalue { lambda: Complex64, tol: f64 },
    #[error(
        "classification is unreliable at tolerance {tol:e}: {}",
        describe_candidates(report, alternative)
    )]
    Degenerate {
        tol: f64,
        report: Box<StratumReport>,
        alternative: Option<Box<StratumReport>>,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn describe_candidates(report: &StratumReport, alternative: &Option<Box<StratumReport>>) -> String {
    match alternative {
        Some(alt) => format!("stratum {} or {}", report.stratum, alt.stratum),
        None => format!("stratum {} with margin {:e}", report.stratum, report.margin),
    }
}

/// Trace-free representative of a divisor, defined up to nonzero scale.
#[derive(Debug, Clone, PartialEq)]
pub struct TracelessMatrix {
    entries: Mat3,
    frobenius: f64,
}

impl TracelessMatrix {
    pub fn new(raw: Mat3) -> Result<Self, EigenError> {
        normalize_divisor_matrix(&raw)
    }

    pub fn from_rows(rows: [[Complex64; 3]; 3]) -> Result<Self, EigenError> {
        Self::new(crate::linalg::mat_from_rows(rows))
    }

    pub fn from_real_rows(rows: [[f64; 3]; 3]) -> Result<Self, EigenError> {
        Self::new(crate::linalg::mat_from_real(rows))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn transpose(&self) -> Mat3 {
        self.entries.transpose()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius
    }

    pub fn spectral_norm(&self) -> f64 {
        spectral_norm(&self.entries)
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    pub fn scaled(&self, t: Complex64) -> Result<Self, EigenError> {
        if t == ZERO {
            return Err(EigenError::ZeroScale);
        }
        Self::new(self.entries * t)
    }

    /// `g A g⁻¹`.
    pub fn conjugated(&self, g: &Mat3) -> Result<Self, EigenError> {
        let inv = g.try_inverse().ok_or(EigenError::SingularConjugator)?;
        Self::new(g * self.entries * inv)
    }

    /// Whether `other` represents the same divisor, i.e. is a nonzero complex
    /// multiple of `self` up to a relative error `tol`.
    pub fn same_divisor(&self, other: &Self, tol: f64) -> bool {
        let inner: Complex64 = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| b * a.conj())
            .sum();
        // least-squares multiplier t with other ≈ t·self
        let t = inner / (self.frobenius * self.frobenius);
        frobenius_norm(&(other.entries - self.entries * t)) <= tol * other.frobenius
    }
}

impl Serialize for TracelessMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| [self.entries[(r, c)].re, self.entries[(r, c)].im])
                    .collect()
            })
            .collect();
        rows.serialize(serializer)
    }
}

/// Coefficients of `det(A − zI) = −z³ − a·z + b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharCubic {
    /// Sum of the principal 2×2 minors.
    #[serde(serialize_with = "ser_complex")]
    pub a: Complex64,
    /// `det A`.
    #[serde(serialize_with = "ser_complex")]
    pub b: Complex64,
}

impl CharCubic {
    /// `det(A − zI)`.
    pub fn det_at(&self, z: Complex64) -> Complex64 {
        -z * z * z - self.a * z + self.b
    }

    /// The sign-normalized monic cubic `z³ + a·z − b`.
    pub fn monic_at(&self, z: Complex64) -> Complex64 {
        z * z * z + self.a * z - self.b
    }

    pub fn derivative_at(&self, z: Complex64) -> Complex64 {
        3.0 * z * z + self.a
    }

    /// Scale at which the roots live: `max(|a|^½, |b|^⅓)`.
    pub fn root_scale(&self) -> f64 {
        self.a.norm().sqrt().max(self.b.norm().cbrt())
    }
}

pub(crate) fn ser_complex<S: Serializer>(z: &Complex64, serializer: S) -> Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(serializer)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenvalue {
    #[serde(serialize_with = "ser_complex")]
    pub lambda: Complex64,
    pub alg_mult: usize,
    /// Dimension of the eigenspace of `Aᵀ`; `None` until decided against a matrix.
    pub geom_mult: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenvalueSet {
    pub items: Vec<Eigenvalue>,
    /// Reference magnitude for relative tolerances.
    pub scale: f64,
}

impl EigenvalueSet {
    pub fn has_repeated_root(&self) -> bool {
        self.items.iter().any(|e| e.alg_mult > 1)
    }

    pub fn simple(&self) -> impl Iterator<Item = &Eigenvalue> {
        self.items.iter().filter(|e| e.alg_mult == 1)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.items.iter().map(|e| e.alg_mult).sum()
    }

    pub fn weighted_sum(&self) -> Complex64 {
        self.items
            .iter()
            .map(|e| e.lambda * e.alg_mult as f64)
            .sum()
    }
}

/// Jordan type of a nonzero traceless 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    /// Three distinct eigenvalues.
    Distinct = 1,
    /// A double eigenvalue with a two-dimensional eigenspace.
    DoubleEigenspace = 2,
    /// A double eigenvalue carrying a 2×2 Jordan block.
    DoubleJordan = 3,
    /// Nilpotent with a single 3×3 Jordan block.
    NilpotentFull = 4,
    /// Nilpotent of rank one.
    NilpotentRankOne = 5,
}

impl Stratum {
    pub const ALL: [Stratum; 5] = [
        Stratum::Distinct,
        Stratum::DoubleEigenspace,
        Stratum::DoubleJordan,
        Stratum::NilpotentFull,
        Stratum::NilpotentRankOne,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.number() == n)
    }

    /// Number of simple eigenvalues, equal to the number of sphere classes.
    pub fn sphere_class_count(self) -> usize {
        match self {
            Stratum::Distinct => 3,
            Stratum::DoubleEigenspace | Stratum::DoubleJordan => 1,
            Stratum::NilpotentFull | Stratum::NilpotentRankOne => 0,
        }
    }

    pub fn is_reducible(self) -> bool {
        matches!(self, Stratum::DoubleEigenspace | Stratum::NilpotentRankOne)
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Stratum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StratumReport {
    pub stratum: Stratum,
    pub sphere_class_count: usize,
    /// Eigen-points of `Aᵀ` for the simple eigenvalues, in basis order.
    pub centers: Vec<ProjectivePoint>,
    /// The simple eigenvalue belonging to each center.
    #[serde(serialize_with = "ser_complex_vec")]
    pub center_eigenvalues: Vec<Complex64>,
    pub eigenvalues: EigenvalueSet,
    /// Smallest relative eigenvalue gap or smallest relative rank-deciding
    /// singular value, whichever is smaller.
    pub margin: f64,
    pub reducible: bool,
}

fn ser_complex_vec<S: Serializer>(v: &[Complex64], serializer: S) -> Result<S::Ok, S::Error> {
    let pairs: Vec<[f64; 2]> = v.iter().map(|z| [z.re, z.im]).collect();
    pairs.serialize(serializer)
}

/// Subtracts `trace/3 · I`.
pub fn normalize_divisor_matrix(raw: &Mat3) -> Result<TracelessMatrix, EigenError> {
    for row in 0..3 {
        for col in 0..3 {
            let z = raw[(row, col)];
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(EigenError::NonFinite { row, col });
            }
        }
    }
    let shift = raw.trace() / 3.0;
    let mut entries = *raw;
    for k in 0..3 {
        entries[(k, k)] -= shift;
    }
    let norm = frobenius_norm(&entries);
    if norm <= ZERO_DIVISOR_REL * (1.0 + frobenius_norm(raw)) {
        return Err(EigenError::ZeroDivisor { norm });
    }
    Ok(TracelessMatrix {
        entries,
        frobenius: norm,
    })
}

pub fn char_cubic(a: &TracelessMatrix) -> CharCubic {
    let m = a.matrix();
    let minors = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)] + m[(0, 0)] * m[(2, 2)]
        - m[(0, 2)] * m[(2, 0)]
        + m[(1, 1)] * m[(2, 2)]
        - m[(1, 2)] * m[(2, 1)];
    let det = m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)]);
    CharCubic { a: minors, b: det }
}

/// `−4a³ − 27b²`, the discriminant of `z³ + a·z − b`.
pub fn discriminant(c: &CharCubic) -> Complex64 {
    -4.0 * c.a * c.a * c.a - 27.0 * c.b * c.b
}

/// Roots of `z³ + a·z − b`, clustered at the cubic's own root scale.
pub fn cubic_roots(c: &CharCubic, tol: f64) -> EigenvalueSet {
    cubic_roots_scaled(c, c.root_scale(), tol)
}

/// Roots of `z³ + a·z − b`, clustered with `scale` as the reference magnitude.
///
/// Pass `‖A‖_F` when the cubic comes from a matrix so that the decision is
/// relative to the matrix, not to its (possibly tiny) eigenvalues.
pub fn cubic_roots_scaled(c: &CharCubic, scale: f64, tol: f64) -> EigenvalueSet {
    let roots = raw_roots(c);
    if scale == 0.0 {
        return EigenvalueSet {
            items: vec![Eigenvalue {
                lambda: ZERO,
                alg_mult: 3,
                geom_mult: None,
            }],
            scale,
        };
    }
    let items = cluster_roots(c, &roots, scale, tol);
    EigenvalueSet { items, scale }
}

/// Unclustered roots from the eigenvalues of the companion matrix, followed
/// by a guarded Newton polish.
fn raw_roots(c: &CharCubic) -> [Complex64; 3] {
    let s = c.root_scale();
    if s == 0.0 {
        return [ZERO; 3];
    }
    let alpha = c.a / (s * s);
    let beta = c.b / (s * s * s);
    let normalized = CharCubic { a: alpha, b: beta };
    let companion = Mat3::new(
        ZERO,
        ZERO,
        beta, //
        Complex64::new(1.0, 0.0),
        ZERO,
        -alpha, //
        ZERO,
        Complex64::new(1.0, 0.0),
        ZERO,
    );
    let mut roots = match Schur::try_new(companion, SCHUR_EPS, SCHUR_MAX_ITER) {
        Some(schur) => {
            let (_, t) = schur.unpack();
            [t[(0, 0)], t[(1, 1)], t[(2, 2)]]
        }
        None => weierstrass_roots(&normalized),
    };
    // Newton is only trusted away from near-multiple roots, where it would
    // move the members of a cluster asymmetrically.
    let polished: Vec<Complex64> = (0..3)
        .map(|i| {
            let separation = (0..3)
                .filter(|&j| j != i)
                .map(|j| (roots[i] - roots[j]).norm())
                .fold(f64::INFINITY, f64::min);
            if separation > POLISH_MIN_SEPARATION {
                polish(&normalized, roots[i])
            } else {
                roots[i]
            }
        })
        .collect();
    roots = [polished[0], polished[1], polished[2]];
    roots.map(|r| r * s)
}

fn polish(c: &CharCubic, mut z: Complex64) -> Complex64 {
    let mut residual = c.monic_at(z).norm();
    for _ in 0..NEWTON_POLISH_STEPS {
        let d = c.derivative_at(z);
        if d.norm() == 0.0 || residual == 0.0 {
            break;
        }
        let next = z - c.monic_at(z) / d;
        let next_residual = c.monic_at(next).norm();
        // also stops on NaN
        if next_residual.partial_cmp(&residual) != Some(Ordering::Less) {
            break;
        }
        z = next;
        residual = next_residual;
    }
    z
}

/// Simultaneous iteration used only if the Schur iteration fails to converge.
fn weierstrass_roots(c: &CharCubic) -> [Complex64; 3] {
    let seed = Complex64::new(0.4, 0.9);
    let mut z = [seed, seed * seed, seed * seed * seed];
    for _ in 0..500 {
        for i in 0..3 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..3 {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() > 0.0 {
                z[i] -= c.monic_at(z[i]) / denom;
            }
        }
    }
    z
}

/// Relative coefficient distance from the cubic to one with a triple root.
fn triple_root_error(c: &CharCubic, scale: f64) -> f64 {
    let alpha = c.a / (scale * scale);
    let beta = c.b / (scale * scale * scale);
    alpha.norm().max(beta.norm())
}

/// Relative coefficient distance to the cubic `(w − m)²(w + 2m)` with a double
/// root at `m`, the mean of the pair.
fn double_root_error(c: &CharCubic, scale: f64, mean: Complex64) -> f64 {
    let alpha = c.a / (scale * scale);
    let beta = c.b / (scale * scale * scale);
    let m = mean / scale;
    (alpha + 3.0 * m * m)
        .norm()
        .max((beta + 2.0 * m * m * m).norm())
}

fn cluster_roots(c: &CharCubic, roots: &[Complex64; 3], scale: f64, tol: f64) -> Vec<Eigenvalue> {
    let simple = |lambda| Eigenvalue {
        lambda,
        alg_mult: 1,
        geom_mult: None,
    };
    if triple_root_error(c, scale) <= tol {
        // the mean of a triple root of a trace-free cubic is zero
        return vec![Eigenvalue {
            lambda: ZERO,
            alg_mult: 3,
            geom_mult: None,
        }];
    }
    let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    let best = pairs
        .iter()
        .map(|&(i, j, k)| {
            let mean = (roots[i] + roots[j]) / 2.0;
            (double_root_error(c, scale, mean), mean, k)
        })
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .expect("three pairs");
    let mut items = if best.0 <= tol {
        vec![
            Eigenvalue {
                lambda: best.1,
                alg_mult: 2,
                geom_mult: None,
            },
            simple(roots[best.2]),
        ]
    } else {
        roots.iter().copied().map(simple).collect()
    };
    items.sort_by(|x, y| basis_order(x.lambda, y.lambda, scale));
    items
}

/// Basis order on eigenvalues: increasing clockwise angle from the positive
/// real axis, then increasing modulus.
pub fn basis_order(x: Complex64, y: Complex64, scale: f64) -> Ordering {
    let key = |z: Complex64| {
        let im = if z.im.abs() <= 1e-12 * scale {
            0.0
        } else {
            z.im
        };
        let angle = if z.re == 0.0 && im == 0.0 {
            0.0
        } else {
            (-im.atan2(z.re)).rem_euclid(TAU)
        };
        (angle, z.norm())
    };
    let (ax, mx) = key(x);
    let (ay, my) = key(y);
    ax.total_cmp(&ay).then(mx.total_cmp(&my))
}

struct NullSpace {
    basis: Vec<Vec3>,
    singular_values: [f64; 3],
}

fn null_space(a: &TracelessMatrix, lambda: Complex64, tol: f64) -> NullSpace {
    let mut m = a.transpose();
    for k in 0..3 {
        m[(k, k)] -= lambda;
    }
    let (sigma, vecs) = svd_sorted(&m);
    let threshold = tol * a.frobenius_norm();
    let basis = (0..3)
        .filter(|&k| sigma[k] <= threshold)
        .map(|k| vecs[k])
        .collect();
    NullSpace {
        basis,
        singular_values: sigma,
    }
}

/// Orthonormal basis of the kernel of `Aᵀ − λI`, as canonical projective
/// points. These solve `x·A = λx`.
pub fn eigen_points(
    a: &TracelessMatrix,
    lambda: Complex64,
    tol: f64,
) -> Result<Vec<ProjectivePoint>, EigenError> {
    let ns = null_space(a, lambda, tol);
    if ns.basis.is_empty() {
        return Err(EigenError::NotAnEigenvalue { lambda, tol });
    }
    ns.basis
        .iter()
        .map(|v| {
            ProjectivePoint::from_vec(v)
                .map_err(|e| EigenError::Invariant(format!("null vector: {e}")))
        })
        .collect()
}

/// Eigenvalues of `A` with algebraic multiplicities, clustered relative to `‖A‖_F`.
pub fn eigenvalues(a: &TracelessMatrix, tol: f64) -> EigenvalueSet {
    cubic_roots_scaled(&char_cubic(a), a.frobenius_norm(), tol)
}

/// Single-tolerance classification without the stability check.
pub fn classify_at(a: &TracelessMatrix, tol: f64) -> Result<StratumReport, EigenError> {
    let norm = a.frobenius_norm();
    let mut set = eigenvalues(a, tol);
    let mut margin = f64::INFINITY;
    for (i, x) in set.items.iter().enumerate() {
        for y in &set.items[i + 1..] {
            margin = margin.min((x.lambda - y.lambda).norm() / norm);
        }
    }
    let mut centers = Vec::new();
    let mut center_eigenvalues = Vec::new();
    for item in set.items.iter_mut() {
        let ns = null_space(a, item.lambda, tol);
        let geom = ns.basis.len();
        if geom == 0 {
            return Err(EigenError::NotAnEigenvalue {
                lambda: item.lambda,
                tol,
            });
        }
        if geom > item.alg_mult {
            return Err(EigenError::Invariant(format!(
                "eigenvalue {} has geometric multiplicity {geom} above algebraic multiplicity {}",
                item.lambda, item.alg_mult
            )));
        }
        // the largest singular value treated as nonzero decides the rank
        margin = margin.min(ns.singular_values[2 - geom] / norm);
        item.geom_mult = Some(geom);
        if item.alg_mult == 1 {
            let point = ProjectivePoint::from_vec(&ns.basis[0])
                .map_err(|e| EigenError::Invariant(format!("null vector: {e}")))?;
            centers.push(point);
            center_eigenvalues.push(item.lambda);
        }
    }
    let pattern: Vec<(usize, usize)> = set
        .items
        .iter()
        .map(|e| (e.alg_mult, e.geom_mult.unwrap_or(0)))
        .collect();
    let stratum = match pattern.as_slice() {
        [(1, _), (1, _), (1, _)] => Stratum::Distinct,
        [(2, 2), (1, _)] | [(1, _), (2, 2)] => Stratum::DoubleEigenspace,
        [(2, 1), (1, _)] | [(1, _), (2, 1)] => Stratum::DoubleJordan,
        [(3, 1)] => Stratum::NilpotentFull,
        [(3, 2)] => Stratum::NilpotentRankOne,
        other => {
            return Err(EigenError::Invariant(format!(
                "impossible multiplicity pattern {other:?} for a nonzero traceless matrix"
            )))
        }
    };
    Ok(StratumReport {
        stratum,
        sphere_class_count: centers.len(),
        centers,
        center_eigenvalues,
        eigenvalues: set,
        margin,
        reducible: stratum.is_reducible(),
    })
}

/// Classifies `A` into one of the five strata.
///
/// The classification is repeated at `tol / AMBIGUITY_BAND` and
/// `tol · AMBIGUITY_BAND`; disagreement, or a margin below `tol`, yields
/// [`EigenError::Degenerate`] carrying both candidate reports.
pub fn classify_stratum(a: &TracelessMatrix, tol: f64) -> Result<StratumReport, EigenError> {
    let runs = [
        classify_at(a, tol),
        classify_at(a, tol / AMBIGUITY_BAND),
        classify_at(a, tol * AMBIGUITY_BAND),
    ];
    let oks: Vec<&StratumReport> = runs.iter().filter_map(|r| r.as_ref().ok()).collect();
    let Some(&primary) = oks.first() else {
        return Err(runs[0].clone().unwrap_err());
    };
    let disagreeing = oks.iter().find(|r| r.stratum != primary.stratum).copied();
    let all_ok = oks.len() == runs.len();
    if all_ok && disagreeing.is_none() && primary.margin >= tol {
        return Ok(primary.clone());
    }
    Err(EigenError::Degenerate {
        tol,
        report: Box::new(primary.clone()),
        alternative: disagreeing.map(|r| Box::new(r.clone())),
    })
}

/// Whether some eigenvalue has a two-dimensional eigenspace, i.e. `A − λI`
/// has rank one and the section factors as a product of two linear forms.
pub fn is_reducible(a: &TracelessMatrix, tol: f64) -> bool {
    eigenvalues(a, tol)
        .items
        .iter()
        .any(|e| null_space(a, e.lambda, tol).basis.len() >= 2)
}
