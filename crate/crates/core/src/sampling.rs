//! Seeded random ensembles of divisors and the stratum frequency sampler.
//!
//! All randomness comes from ChaCha8, a counter-based generator seeded with a
//! single `u64`, so every report is reproducible from its recorded seed.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::eigen::{classify_stratum, EigenError, Stratum, TracelessMatrix};
use crate::linalg::{c, diag, mat_from_real, svd_sorted, Mat3, Vec3, I, ONE, ZERO};

pub type SeededRng = ChaCha8Rng;

/// Conjugating matrices are redrawn until their condition number is below this.
pub const CONJUGATOR_COND_LIMIT: f64 = 100.0;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian, `E|z|² = 1`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Uniform point on the unit sphere S³ ⊂ C².
pub fn random_unit_c2<R: Rng + ?Sized>(rng: &mut R) -> [Complex64; 2] {
    loop {
        let u = [complex_normal(rng), complex_normal(rng)];
        let n = (u[0].norm_sqr() + u[1].norm_sqr()).sqrt();
        if n > 1e-6 {
            return u.map(|z| z / n);
        }
    }
}

/// Uniform point on the unit sphere S⁵ ⊂ C³.
pub fn random_unit_c3<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    loop {
        let v = Vec3::from_fn(|_, _| complex_normal(rng));
        let n = crate::linalg::vec_norm(&v);
        if n > 1e-6 {
            return v / c(n, 0.0);
        }
    }
}

pub fn ginibre<R: Rng + ?Sized>(rng: &mut R) -> Mat3 {
    Mat3::from_fn(|_, _| complex_normal(rng))
}

/// Ginibre matrix redrawn until its condition number is at most `max_cond`.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, max_cond: f64) -> Mat3 {
    loop {
        let g = ginibre(rng);
        let (sigma, _) = svd_sorted(&g);
        if sigma[2] > 0.0 && sigma[0] / sigma[2] <= max_cond {
            return g;
        }
    }
}

/// Nonzero complex scalar with log-uniform modulus in [0.1, 10] and uniform phase.
pub fn random_scale<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let modulus = 10f64.powf(rng.random_range(-1.0..1.0));
    Complex64::from_polar(modulus, rng.random_range(0.0..TAU))
}

fn random_eigenvalue<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..TAU))
}

/// Trace-free part of `diag(1, −1, i)`: the irreducible divisor
/// `x₀y₀ − x₁y₁ + i·x₂y₂ = 0` on the flag threefold.
pub fn reference_divisor() -> TracelessMatrix {
    TracelessMatrix::new(diag([ONE, -ONE, I])).expect("nonzero traceless part")
}

/// Handcrafted representative of each stratum.
pub fn stratum_representative(stratum: Stratum) -> TracelessMatrix {
    match stratum {
        Stratum::Distinct => return reference_divisor(),
        Stratum::DoubleEigenspace => {
            TracelessMatrix::from_real_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -2.0]])
        }
        Stratum::DoubleJordan => {
            TracelessMatrix::from_real_rows([[1.0, 1.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -2.0]])
        }
        Stratum::NilpotentFull => {
            TracelessMatrix::from_real_rows([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]])
        }
        Stratum::NilpotentRankOne => {
            TracelessMatrix::from_real_rows([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
        }
    }
    .expect("representatives are nonzero")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    /// Complex Gaussian entries, trace removed.
    Ginibre,
    /// Conjugates of `[[λ,1,0],[0,λ,0],[0,0,−2λ]]`.
    Jordan2,
    /// Conjugates of the full nilpotent Jordan block.
    Jordan3,
    /// Conjugates of the rank-one nilpotent `e₀e₁ᵀ`.
    Rank1,
    /// Conjugates of `diag(λ, λ, −2λ)`.
    Eigenspace,
}

impl Ensemble {
    pub const ALL: [Ensemble; 5] = [
        Ensemble::Ginibre,
        Ensemble::Jordan2,
        Ensemble::Jordan3,
        Ensemble::Rank1,
        Ensemble::Eigenspace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Ensemble::Ginibre => "ginibre",
            Ensemble::Jordan2 => "jordan2",
            Ensemble::Jordan3 => "jordan3",
            Ensemble::Rank1 => "rank1",
            Ensemble::Eigenspace => "eigenspace",
        }
    }

    /// The stratum every draw belongs to (with probability one for Ginibre).
    pub fn target_stratum(self) -> Stratum {
        match self {
            Ensemble::Ginibre => Stratum::Distinct,
            Ensemble::Eigenspace => Stratum::DoubleEigenspace,
            Ensemble::Jordan2 => Stratum::DoubleJordan,
            Ensemble::Jordan3 => Stratum::NilpotentFull,
            Ensemble::Rank1 => Stratum::NilpotentRankOne,
        }
    }

    pub fn draw<R: Rng + ?Sized>(self, rng: &mut R) -> TracelessMatrix {
        let normal_form = match self {
            Ensemble::Ginibre => loop {
                if let Ok(a) = TracelessMatrix::new(ginibre(rng)) {
                    return a;
                }
            },
            Ensemble::Jordan2 => {
                let l = random_eigenvalue(rng);
                Mat3::new(l, ONE, ZERO, ZERO, l, ZERO, ZERO, ZERO, -2.0 * l)
            }
            Ensemble::Eigenspace => {
                let l = random_eigenvalue(rng);
                diag([l, l, -2.0 * l])
            }
            Ensemble::Jordan3 => mat_from_real([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]]),
            Ensemble::Rank1 => mat_from_real([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]),
        };
        let g = random_invertible(rng, CONJUGATOR_COND_LIMIT);
        let t = random_scale(rng);
        let inv = g
            .try_inverse()
            .expect("condition-limited matrix is invertible");
        TracelessMatrix::new(g * normal_form * inv * t).expect("conjugate of a nonzero matrix")
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown ensemble `{0}` (expected ginibre, jordan2, jordan3, rank1 or eigenspace)")]
pub struct UnknownEnsemble(pub String);

impl FromStr for Ensemble {
    type Err = UnknownEnsemble;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ensemble::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| UnknownEnsemble(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StratumFrequencyReport {
    pub ensemble: String,
    pub count: usize,
    pub seed: u64,
    pub tol: f64,
    /// Stratum number → number of draws. Degenerate draws are counted under
    /// their primary candidate.
    pub frequencies: BTreeMap<u8, usize>,
    /// Draws whose classification was unstable across the tolerance band.
    pub degenerate: usize,
    pub mean_margin: f64,
}

impl StratumFrequencyReport {
    pub fn fraction_in(&self, stratum: Stratum) -> f64 {
        *self.frequencies.get(&stratum.number()).unwrap_or(&0) as f64 / self.count as f64
    }
}

/// Classifies `count` draws from `ensemble`.
pub fn sample_strata(
    count: usize,
    seed: u64,
    ensemble: Ensemble,
    tol: f64,
) -> StratumFrequencyReport {
    let mut rng = rng_from_seed(seed);
    let mut frequencies = BTreeMap::new();
    let mut degenerate = 0;
    let mut margin_sum = 0.0;
    for _ in 0..count {
        let a = ensemble.draw(&mut rng);
        let report = match classify_stratum(&a, tol) {
            Ok(r) => r,
            Err(EigenError::Degenerate { report, .. }) => {
                degenerate += 1;
                *report
            }
            Err(e) => panic!("classification of a sampled divisor failed: {e}"),
        };
        margin_sum += report.margin;
        *frequencies.entry(report.stratum.number()).or_insert(0) += 1;
    }
    StratumFrequencyReport {
        ensemble: ensemble.name().to_string(),
        count,
        seed,
        tol,
        frequencies,
        degenerate,
        mean_margin: if count > 0 {
            margin_sum / count as f64
        } else {
            0.0
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::DEFAULT_TOL;

    #[test]
    fn same_seed_same_draws() {
        let mut a = rng_from_seed(11);
        let mut b = rng_from_seed(11);
        for e in Ensemble::ALL {
            assert_eq!(e.draw(&mut a), e.draw(&mut b));
        }
    }

    #[test]
    fn unit_samples_are_unit() {
        let mut rng = rng_from_seed(3);
        for _ in 0..100 {
            let u = random_unit_c2(&mut rng);
            assert!((u[0].norm_sqr() + u[1].norm_sqr() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn conjugators_respect_condition_limit() {
        let mut rng = rng_from_seed(5);
        for _ in 0..50 {
            let (s, _) = svd_sorted(&random_invertible(&mut rng, CONJUGATOR_COND_LIMIT));
            assert!(s[0] / s[2] <= CONJUGATOR_COND_LIMIT);
        }
    }

    #[test]
    fn every_ensemble_hits_its_target() {
        for e in Ensemble::ALL {
            let report = sample_strata(200, 17, e, DEFAULT_TOL);
            assert_eq!(report.fraction_in(e.target_stratum()), 1.0, "{report:?}");
            assert_eq!(report.degenerate, 0, "{report:?}");
            assert_eq!(report.frequencies.values().sum::<usize>(), 200);
        }
    }

    #[test]
    fn single_draw_counts_once() {
        let report = sample_strata(1, 99, Ensemble::Ginibre, DEFAULT_TOL);
        assert_eq!(report.frequencies.values().sum::<usize>(), 1);
    }

    #[test]
    fn ensemble_names_parse() {
        for e in Ensemble::ALL {
            assert_eq!(e.name().parse::<Ensemble>(), Ok(e));
        }
        assert!("wishart".parse::<Ensemble>().is_err());
    }

    #[test]
    fn representatives_are_traceless() {
        for s in Stratum::ALL {
            let a = stratum_representative(s);
            assert!(a.trace().norm() < 1e-15);
        }
    }
}
