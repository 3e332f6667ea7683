//! Built-in verification suite: nine numbered criteria run on fixed data and
//! seeded random samples.
//!
//! `VerifyConfig::tol` drives the classification criteria (1, 4, 5). The
//! random-sample criteria use [`DEFAULT_TOL`] together with the fixed
//! thresholds quoted in each criterion.

use std::fmt;

use serde::Serialize;

use crate::eigen::{
    char_cubic, classify_stratum, discriminant, eigenvalues, is_reducible,
    normalize_divisor_matrix, Stratum, StratumReport, TracelessMatrix, DEFAULT_TOL,
};
use crate::flag::{
    clearance, divisor_residual, eigen_margin, fiber_solve, holomorphic_pair_value, homology_class,
    incidence_residual, lagrangian_residual, FlagError, GzSphere, HomologyClass,
};
use crate::linalg::{c, diag, frobenius_norm, I, ONE};
use crate::moduli::{covering_fiber, delta_residual, moduli_points};
use crate::projective::ProjectivePoint;
use crate::sampling::{
    random_invertible, random_scale, random_unit_c3, rng_from_seed, stratum_representative,
    Ensemble, SeededRng, CONJUGATOR_COND_LIMIT,
};

pub const CRITERIA: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

const CENTER_TOL: f64 = 1e-10;
const HOLOMORPHIC_FLOOR: f64 = 1e-2;
const LAGRANGIAN_CEILING: f64 = 1e-10;
const DELTA_FLOOR: f64 = 1e-6;
const DISCRIMINANT_REL: f64 = 1e-8;
const ORACLE_GAP_REL: f64 = 1e-4;
const FIBER_MARGIN: f64 = 1e-4;
const FIBER_CEILING: f64 = 1e-10;
const EQUIVARIANCE_REL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub tol: f64,
    pub clearance_threshold: f64,
    pub grid: usize,
    pub samples: usize,
    pub random_trials: usize,
    pub equivariance_trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            clearance_threshold: 0.4,
            grid: 24,
            samples: 1000,
            random_trials: 1000,
            equivariance_trials: 200,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {}. {}: {}", self.id, self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub outcomes: Vec<CriterionOutcome>,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("no criterion numbered {0} (expected 1 to 9)")]
pub struct UnknownCriterion(pub u8);

/// The worked example's section `x₀y₀ − x₁y₁ + i·x₂y₂`, before normalization.
pub fn example_section() -> crate::linalg::Mat3 {
    diag([ONE, -ONE, I])
}

pub fn criterion_name(id: u8) -> Option<&'static str> {
    Some(match id {
        1 => "worked example",
        2 => "disjointness",
        3 => "lagrangian certification",
        4 => "homology classes",
        5 => "stratum table",
        6 => "moduli consistency",
        7 => "discriminant oracle",
        8 => "fiber solver",
        9 => "equivariance",
        _ => return None,
    })
}

pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Result<CriterionOutcome, UnknownCriterion> {
    let name = criterion_name(id).ok_or(UnknownCriterion(id))?;
    let rng = || rng_from_seed(cfg.seed.wrapping_add(id as u64));
    let (passed, detail) = match id {
        1 => worked_example(cfg),
        2 => disjointness(cfg),
        3 => lagrangian(cfg),
        4 => homology(cfg),
        5 => stratum_table(cfg),
        6 => moduli_consistency(cfg, &mut rng()),
        7 => discriminant_oracle(cfg, &mut rng()),
        8 => fiber_solver(cfg, &mut rng()),
        _ => equivariance(cfg, &mut rng()),
    };
    Ok(CriterionOutcome {
        id,
        name,
        passed,
        detail,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> VerifyReport {
    let outcomes: Vec<_> = CRITERIA
        .iter()
        .map(|&id| run_criterion(id, cfg).expect("listed criteria exist"))
        .collect();
    VerifyReport {
        config: cfg.clone(),
        passed: outcomes.iter().all(|o| o.passed),
        outcomes,
    }
}

type Check = (bool, String);

fn example_divisor() -> Result<TracelessMatrix, String> {
    normalize_divisor_matrix(&example_section()).map_err(|e| e.to_string())
}

fn example_report(tol: f64) -> Result<(TracelessMatrix, StratumReport), String> {
    let a = example_divisor()?;
    let report = classify_stratum(&a, tol).map_err(|e| e.to_string())?;
    Ok((a, report))
}

fn worked_example(cfg: &VerifyConfig) -> Check {
    let (a, report) = match example_report(cfg.tol) {
        Ok(r) => r,
        Err(e) => return (false, e),
    };
    let third = c(0.0, 1.0 / 3.0);
    let expected = diag([ONE - third, -ONE - third, c(0.0, 2.0 / 3.0)]);
    let entry_dev = frobenius_norm(&(a.matrix() - expected));
    let center_dev = if report.centers.len() == 3 {
        (0..3)
            .map(|k| report.centers[k].max_coord_deviation(&ProjectivePoint::coordinate_point(k)))
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let passed = entry_dev <= CENTER_TOL
        && report.stratum == Stratum::Distinct
        && report.sphere_class_count == 3
        && center_dev <= CENTER_TOL;
    (
        passed,
        format!(
            "normalization error {entry_dev:.1e}, stratum {}, {} classes, center deviation {center_dev:.1e}",
            report.stratum, report.sphere_class_count
        ),
    )
}

fn disjointness(cfg: &VerifyConfig) -> Check {
    let a = match example_divisor() {
        Ok(a) => a,
        Err(e) => return (false, e),
    };
    let mut passed = true;
    let mut parts = Vec::new();
    for s in GzSphere::ALL {
        match clearance(&a, s, cfg.grid, DEFAULT_TOL) {
            Ok(cl) => {
                passed &= cl.value > cfg.clearance_threshold;
                parts.push(format!("{s} {:.4}", cl.value));
            }
            Err(e) => {
                passed = false;
                parts.push(format!("{s} {e}"));
            }
        }
    }
    (
        passed,
        format!(
            "{} (threshold {})",
            parts.join(", "),
            cfg.clearance_threshold
        ),
    )
}

fn lagrangian(cfg: &VerifyConfig) -> Check {
    let mut worst: f64 = 0.0;
    let mut least = f64::INFINITY;
    for s in GzSphere::ALL {
        worst = worst.max(lagrangian_residual(s, cfg.samples, cfg.seed));
        least = least.min(holomorphic_pair_value(s, cfg.samples, cfg.seed));
    }
    (
        worst < LAGRANGIAN_CEILING && least > HOLOMORPHIC_FLOOR,
        format!("max |ω| {worst:.1e}, min ω(ξ,Jξ) {least:.3}"),
    )
}

fn homology(cfg: &VerifyConfig) -> Check {
    let (_, report) = match example_report(cfg.tol) {
        Ok(r) => r,
        Err(e) => return (false, e),
    };
    let expected = [
        HomologyClass::new(1, 0),
        HomologyClass::new(0, 1),
        HomologyClass::new(1, 1),
    ];
    let classes: Vec<Result<HomologyClass, FlagError>> = GzSphere::ALL
        .iter()
        .map(|&s| homology_class(s, &report.centers, cfg.tol))
        .collect();
    let passed = classes
        .iter()
        .zip(expected)
        .all(|(got, e)| got.as_ref() == Ok(&e));
    let shown: Vec<String> = classes
        .iter()
        .map(|r| match r {
            Ok(h) => h.to_string(),
            Err(e) => e.to_string(),
        })
        .collect();
    (passed, shown.join(", "))
}

fn stratum_table(cfg: &VerifyConfig) -> Check {
    let expected_counts = [3, 1, 1, 0, 0];
    let expected_reducible = [false, true, false, false, true];
    let mut passed = true;
    let mut parts = Vec::new();
    for (k, s) in Stratum::ALL.into_iter().enumerate() {
        let a = if s == Stratum::Distinct {
            match example_divisor() {
                Ok(a) => a,
                Err(e) => return (false, e),
            }
        } else {
            stratum_representative(s)
        };
        match classify_stratum(&a, cfg.tol) {
            Ok(r) => {
                let oracle = oracle::rank_one_shift(&a);
                let ok = r.stratum == s
                    && r.sphere_class_count == expected_counts[k]
                    && r.reducible == expected_reducible[k]
                    && is_reducible(&a, cfg.tol) == expected_reducible[k]
                    && oracle == expected_reducible[k];
                passed &= ok;
                parts.push(format!(
                    "{}→{}/{}/{}",
                    k + 1,
                    r.stratum,
                    r.sphere_class_count,
                    r.reducible
                ));
            }
            Err(e) => {
                passed = false;
                parts.push(format!("{}→{e}", k + 1));
            }
        }
    }
    (passed, parts.join(" "))
}

fn moduli_consistency(cfg: &VerifyConfig, rng: &mut SeededRng) -> Check {
    let mut count_ok = 0;
    let mut cover_ok = 0;
    let mut min_delta = f64::INFINITY;
    for _ in 0..cfg.random_trials {
        let a = Ensemble::Ginibre.draw(rng);
        let spheres = match classify_stratum(&a, DEFAULT_TOL) {
            Ok(r) => r.sphere_class_count,
            Err(_) => continue,
        };
        if moduli_points(&a, DEFAULT_TOL).len() == spheres {
            count_ok += 1;
        }
        let fiber = covering_fiber(&a, DEFAULT_TOL);
        let deltas: Vec<f64> = fiber
            .iter()
            .map(|p| delta_residual(&a, p.z, DEFAULT_TOL).unwrap_or(0.0))
            .collect();
        let least = deltas.iter().copied().fold(f64::INFINITY, f64::min);
        min_delta = min_delta.min(least);
        if fiber.len() == 3 && least > DELTA_FLOOR {
            cover_ok += 1;
        }
    }
    let n = cfg.random_trials;
    (
        count_ok == n && cover_ok == n,
        format!("count match {count_ok}/{n}, 3-point fibers off Δ {cover_ok}/{n}, min Δ residual {min_delta:.2e}"),
    )
}

fn discriminant_oracle(cfg: &VerifyConfig, rng: &mut SeededRng) -> Check {
    let mut cases: Vec<TracelessMatrix> = Stratum::ALL
        .into_iter()
        .map(stratum_representative)
        .collect();
    for k in 0..cfg.random_trials {
        cases.push(Ensemble::ALL[k % Ensemble::ALL.len()].draw(rng));
    }
    let mut agree = 0;
    let mut repeated = 0;
    let mut mismatches = Vec::new();
    for (k, a) in cases.iter().enumerate() {
        let scale = a.frobenius_norm().powi(2);
        let small = discriminant(&char_cubic(a)).norm() < DISCRIMINANT_REL * scale.powi(3);
        let brute = oracle::has_repeated_root(a, ORACLE_GAP_REL);
        let clustered = eigenvalues(a, DEFAULT_TOL).has_repeated_root();
        repeated += brute as usize;
        if small == brute && brute == clustered {
            agree += 1;
        } else if mismatches.len() < 3 {
            mismatches.push(k);
        }
    }
    let n = cases.len();
    let mut detail = format!("{agree}/{n} agree ({repeated} with a repeated root)");
    if !mismatches.is_empty() {
        detail.push_str(&format!(", first mismatches at {mismatches:?}"));
    }
    (agree == n, detail)
}

fn fiber_solver(cfg: &VerifyConfig, rng: &mut SeededRng) -> Check {
    let mut solved = 0;
    let mut worst: f64 = 0.0;
    let mut trials = 0;
    while solved < cfg.random_trials && trials < 100 * cfg.random_trials.max(1) {
        trials += 1;
        let a = Ensemble::Ginibre.draw(rng);
        let x = ProjectivePoint::from_vec(&random_unit_c3(rng)).expect("unit vector");
        if eigen_margin(&a, &x) <= FIBER_MARGIN {
            continue;
        }
        match fiber_solve(&a, &x, DEFAULT_TOL) {
            Ok(p) => {
                worst = worst
                    .max(incidence_residual(&p))
                    .max(divisor_residual(&a, &p));
                solved += 1;
            }
            Err(_) => worst = f64::INFINITY,
        }
    }

    let mut centers = 0;
    let mut raised = 0;
    let mut matrices: Vec<TracelessMatrix> = Stratum::ALL
        .into_iter()
        .map(stratum_representative)
        .collect();
    matrices.extend((0..cfg.random_trials.min(100)).map(|_| Ensemble::Ginibre.draw(rng)));
    for a in &matrices {
        let Ok(report) = classify_stratum(a, DEFAULT_TOL) else {
            continue;
        };
        for p in &report.centers {
            centers += 1;
            if matches!(
                fiber_solve(a, p, DEFAULT_TOL),
                Err(FlagError::EigenPoint { .. })
            ) {
                raised += 1;
            }
        }
    }
    (
        solved == cfg.random_trials && worst < FIBER_CEILING && raised == centers,
        format!(
            "{solved} solves, worst residual {worst:.1e}; EigenPoint on {raised}/{centers} centers"
        ),
    )
}

fn equivariance(cfg: &VerifyConfig, rng: &mut SeededRng) -> Check {
    let n = cfg.equivariance_trials;
    let mut worst: f64 = 0.0;
    let mut scale_ok = 0;
    let mut similar_ok = 0;
    for k in 0..n {
        let a = Ensemble::ALL[k % Ensemble::ALL.len()].draw(rng);
        let t = random_scale(rng);
        let ta = a.scaled(t).expect("nonzero scale");
        let (c0, c1) = (char_cubic(&a), char_cubic(&ta));
        let n2 = a.frobenius_norm().powi(2);
        let da = (c1.a - t * t * c0.a).norm() / (t.norm().powi(2) * n2);
        let db = (c1.b - t * t * t * c0.b).norm() / (t.norm().powi(3) * n2 * a.frobenius_norm());
        worst = worst.max(da).max(db);

        let base = classify_stratum(&a, DEFAULT_TOL).map(|r| r.stratum);
        if base.is_ok() && classify_stratum(&ta, DEFAULT_TOL).map(|r| r.stratum) == base {
            scale_ok += 1;
        }
        let g = random_invertible(rng, CONJUGATOR_COND_LIMIT);
        let conj = a.conjugated(&g).expect("condition-limited conjugator");
        if base.is_ok() && classify_stratum(&conj, DEFAULT_TOL).map(|r| r.stratum) == base {
            similar_ok += 1;
        }
    }
    (
        worst <= EQUIVARIANCE_REL && scale_ok == n && similar_ok == n,
        format!(
            "cubic scaling error {worst:.1e}, stratum kept under scaling {scale_ok}/{n}, under similarity {similar_ok}/{n}"
        ),
    )
}

/// Reference computations that share no code with the classification path.
pub mod oracle {
    use num_complex::Complex64;

    use crate::eigen::TracelessMatrix;
    use crate::linalg::c;

    const DK_ITER: usize = 2000;

    /// `det(A − zI)` by cofactor expansion along the first row.
    pub fn shifted_det(a: &TracelessMatrix, z: Complex64) -> Complex64 {
        let m = |i: usize, j: usize| {
            if i == j {
                a.entry(i, j) - z
            } else {
                a.entry(i, j)
            }
        };
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }

    /// Durand–Kerner iteration on `−det(A − zI)`, which is monic.
    pub fn roots(a: &TracelessMatrix) -> [Complex64; 3] {
        let r = a.frobenius_norm();
        let seed = c(0.4, 0.9);
        let mut z = [seed * r, seed * seed * r, seed * seed * seed * r];
        for _ in 0..DK_ITER {
            let previous = z;
            for k in 0..3 {
                let mut denom = c(1.0, 0.0);
                for j in 0..3 {
                    if j != k {
                        denom *= z[k] - z[j];
                    }
                }
                if denom.norm() > 0.0 {
                    z[k] -= -shifted_det(a, z[k]) / denom;
                }
            }
            let moved = (0..3)
                .map(|k| (z[k] - previous[k]).norm())
                .fold(0.0, f64::max);
            if moved <= 1e-17 * r {
                break;
            }
        }
        z
    }

    /// Whether two brute-force roots lie within `gap_rel · ‖A‖_F` of each other.
    pub fn has_repeated_root(a: &TracelessMatrix, gap_rel: f64) -> bool {
        let z = roots(a);
        let gap = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| (z[i] - z[j]).norm())
            .fold(f64::INFINITY, f64::min);
        gap < gap_rel * a.frobenius_norm()
    }

    /// Whether `A − λI` has rank at most one for some brute-force root `λ`
    /// (all 2×2 minors vanish), so the section splits into linear factors.
    pub fn rank_one_shift(a: &TracelessMatrix) -> bool {
        let n = a.frobenius_norm();
        roots(a).iter().any(|&l| {
            let m = |i: usize, j: usize| {
                if i == j {
                    a.entry(i, j) - l
                } else {
                    a.entry(i, j)
                }
            };
            let mut largest: f64 = 0.0;
            for (r0, r1) in [(0, 1), (0, 2), (1, 2)] {
                for (c0, c1) in [(0, 1), (0, 2), (1, 2)] {
                    largest = largest.max((m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)).norm());
                }
            }
            largest < 1e-6 * n * n
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::reference_divisor;

    #[test]
    fn oracle_roots_of_diagonal() {
        let r = oracle::roots(&reference_divisor());
        let third = c(0.0, 1.0 / 3.0);
        for want in [ONE - third, -ONE - third, c(0.0, 2.0 / 3.0)] {
            assert!(r.iter().any(|z| (z - want).norm() < 1e-12), "{r:?}");
        }
    }

    #[test]
    fn oracle_reducibility_of_representatives() {
        let expected = [false, true, false, false, true];
        for (s, e) in Stratum::ALL.into_iter().zip(expected) {
            assert_eq!(oracle::rank_one_shift(&stratum_representative(s)), e, "{s}");
        }
    }

    #[test]
    fn unknown_criterion_rejected() {
        assert_eq!(
            run_criterion(10, &VerifyConfig::default()),
            Err(UnknownCriterion(10))
        );
    }

    #[test]
    fn forced_clearance_failure() {
        let cfg = VerifyConfig {
            clearance_threshold: 1.0,
            ..VerifyConfig::default()
        };
        assert!(!run_criterion(2, &cfg).unwrap().passed);
    }

    #[test]
    fn classification_criteria_pass_at_coarse_tolerance() {
        let cfg = VerifyConfig {
            tol: 1e-2,
            ..VerifyConfig::default()
        };
        for id in [1, 4, 5] {
            let o = run_criterion(id, &cfg).unwrap();
            assert!(o.passed, "{o}");
        }
    }
}
