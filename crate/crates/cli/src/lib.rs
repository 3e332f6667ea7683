//! Input parsing, report assembly and exit-code mapping behind the `flagsbs`
//! binary. Every command returns a serializable report; [`CliError`] carries
//! the exit code and, for degenerate classifications, the report to emit.

use std::fs;
use std::io::Read;
use std::path::Path;

use flagsbs::eigen::eigenvalues;
use flagsbs::flag::{eigen_margin, holomorphic_pair_value};
use flagsbs::sampling::sample_strata;
use flagsbs::verify::{run_all, VerifyConfig, VerifyReport};
use flagsbs::{
    classify_stratum, clearance, covering_fiber, delta_residual, divisor_residual, fiber_solve,
    homology_class, incidence_residual, lagrangian_residual, moduli_points,
    normalize_divisor_matrix, y_residual, EigenError, Ensemble, FlagError, GzSphere, HomologyClass,
    Mat3, ModuliError, ProjectivePoint, StratumFrequencyReport, StratumReport, TracelessMatrix,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INVALID_DIVISOR: u8 = 3;
pub const EXIT_DEGENERATE: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(EigenError),
    /// Classification unstable; the report is still printed.
    #[error("degenerate classification: {message}")]
    Degenerate { message: String, report: String },
    #[error("verification failed: criteria {0:?}")]
    VerificationFailed(Vec<u8>),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => EXIT_PARSE,
            CliError::InvalidDivisor(_) => EXIT_INVALID_DIVISOR,
            CliError::Degenerate { .. } => EXIT_DEGENERATE,
            CliError::VerificationFailed(_) => EXIT_VERIFY_FAILED,
        }
    }

    /// Report to print on stdout despite the failure, if any.
    pub fn report(&self) -> Option<&str> {
        match self {
            CliError::Degenerate { report, .. } => Some(report),
            _ => None,
        }
    }
}

/// `{"matrix": [[[re, im], …] × 3] × 3, "label": …}`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorInput {
    pub matrix: [[[f64; 2]; 3]; 3],
    #[serde(default)]
    pub label: Option<String>,
}

impl DivisorInput {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Reads a file, or stdin when `path` is `-`.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let io = |source| CliError::Io {
            path: path.display().to_string(),
            source,
        };
        let text = if path == Path::new("-") {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(io)?;
            s
        } else {
            fs::read_to_string(path).map_err(io)?
        };
        Self::parse(&text)
    }

    pub fn raw_matrix(&self) -> Mat3 {
        Mat3::from_fn(|i, j| {
            let [re, im] = self.matrix[i][j];
            Complex64::new(re, im)
        })
    }

    /// The trace-normalized divisor.
    pub fn divisor(&self) -> Result<TracelessMatrix, CliError> {
        normalize_divisor_matrix(&self.raw_matrix()).map_err(|e| match e {
            EigenError::NonFinite { .. } => CliError::Parse(e.to_string()),
            other => CliError::InvalidDivisor(other),
        })
    }
}

/// Parses `"re,im"` (or a bare real number).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| {
        t.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("`{t}` is not a finite number"))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected \"re,im\", got `{s}`")),
    }
}

/// Parses three `re,im` coordinates separated by `;`.
pub fn parse_point(s: &str) -> Result<[Complex64; 3], String> {
    let coords = s
        .split(';')
        .map(parse_complex)
        .collect::<Result<Vec<_>, _>>()?;
    coords
        .try_into()
        .map_err(|v: Vec<_>| format!("expected 3 coordinates separated by `;`, got {}", v.len()))
}

fn ser_c<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

/// Single-line JSON; field order follows the struct definitions.
pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string(report).expect("reports serialize to JSON")
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub label: Option<String>,
    pub matrix: TracelessMatrix,
    pub degenerate: bool,
    #[serde(flatten)]
    pub report: StratumReport,
    /// Some eigenvalue is repeated, so the fiber of `Y` meets `Δ`.
    pub on_delta: bool,
    /// Competing classification when `degenerate` is set.
    pub alternative: Option<StratumReport>,
}

pub fn cmd_classify(input: &DivisorInput, tol: f64) -> Result<ClassifyReport, CliError> {
    let a = input.divisor()?;
    let on_delta = eigenvalues(&a, tol).has_repeated_root();
    let build = |report: StratumReport, degenerate, alternative| ClassifyReport {
        label: input.label.clone(),
        matrix: a.clone(),
        degenerate,
        report,
        on_delta,
        alternative,
    };
    match classify_stratum(&a, tol) {
        Ok(report) => Ok(build(report, false, None)),
        Err(EigenError::Degenerate {
            report,
            alternative,
            ..
        }) => {
            let message = format!(
                "stratum {} is not stable across the tolerance band{}",
                report.stratum,
                alternative
                    .as_ref()
                    .map(|r| format!(" (alternative: stratum {})", r.stratum))
                    .unwrap_or_default()
            );
            let full = build(*report, true, alternative.map(|r| *r));
            Err(CliError::Degenerate {
                message,
                report: to_json(&full),
            })
        }
        Err(e) => Err(CliError::InvalidDivisor(e)),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SphereEntry {
    pub sphere: GzSphere,
    pub clearance: Option<f64>,
    pub clearance_argmin: Option<[[f64; 2]; 2]>,
    pub lagrangian_residual: f64,
    pub holomorphic_pair_value: f64,
    pub homology_class: Option<HomologyClass>,
    pub warning: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpheresReport {
    pub label: Option<String>,
    pub stratum: Option<u8>,
    pub degenerate: bool,
    pub expected_classes: Option<usize>,
    pub spheres: Vec<SphereEntry>,
    /// Whether all three classes were computed and are pairwise distinct.
    pub classes_distinct: bool,
    pub samples: usize,
    pub grid: usize,
    pub seed: u64,
    pub note: Option<String>,
}

pub struct SpheresOptions {
    pub samples: usize,
    pub grid: usize,
    pub seed: u64,
    pub tol: f64,
}

pub fn cmd_spheres(input: &DivisorInput, opts: &SpheresOptions) -> Result<SpheresReport, CliError> {
    let a = input.divisor()?;
    let (report, degenerate) = match classify_stratum(&a, opts.tol) {
        Ok(r) => (Some(r), false),
        Err(EigenError::Degenerate { report, .. }) => (Some(*report), true),
        Err(e) => return Err(CliError::InvalidDivisor(e)),
    };
    let stratum_one = !degenerate && report.as_ref().is_some_and(|r| r.stratum.number() == 1);
    let centers = report
        .as_ref()
        .map(|r| r.centers.clone())
        .unwrap_or_default();

    let spheres: Vec<SphereEntry> = GzSphere::ALL
        .iter()
        .map(|&s| {
            let mut warnings = Vec::new();
            let (value, argmin) = match clearance(&a, s, opts.grid, opts.tol) {
                Ok(cl) => (Some(cl.value), Some(cl.argmin)),
                Err(FlagError::Inconclusive { value, argmin, .. }) => {
                    warnings.push(format!("clearance {value:e} is inconclusive"));
                    (Some(value), Some(argmin))
                }
                Err(e) => {
                    warnings.push(e.to_string());
                    (None, None)
                }
            };
            let class = if stratum_one {
                match homology_class(s, &centers, opts.tol) {
                    Ok(h) => Some(h),
                    Err(e) => {
                        warnings.push(e.to_string());
                        None
                    }
                }
            } else {
                None
            };
            SphereEntry {
                sphere: s,
                clearance: value,
                clearance_argmin: argmin.map(|u| u.map(|z| [z.re, z.im])),
                lagrangian_residual: lagrangian_residual(s, opts.samples, opts.seed),
                holomorphic_pair_value: holomorphic_pair_value(s, opts.samples, opts.seed),
                homology_class: class,
                warning: (!warnings.is_empty()).then(|| warnings.join("; ")),
            }
        })
        .collect();

    let classes: Vec<HomologyClass> = spheres.iter().filter_map(|e| e.homology_class).collect();
    let classes_distinct = classes.len() == 3
        && classes[0] != classes[1]
        && classes[0] != classes[2]
        && classes[1] != classes[2];
    let note = (!stratum_one).then(|| {
        let expected = report.as_ref().map_or(0, |r| r.sphere_class_count);
        format!(
            "divisor is not in stratum 1; {expected} sphere classes expected in the complement and the spheres may meet D"
        )
    });
    let out = SpheresReport {
        label: input.label.clone(),
        stratum: report.as_ref().map(|r| r.stratum.number()),
        degenerate,
        expected_classes: report.as_ref().map(|r| r.sphere_class_count),
        spheres,
        classes_distinct,
        samples: opts.samples,
        grid: opts.grid,
        seed: opts.seed,
        note,
    };
    if degenerate {
        return Err(CliError::Degenerate {
            message: "stratum is not stable across the tolerance band".into(),
            report: to_json(&out),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    pub label: Option<String>,
    pub x: ProjectivePoint,
    /// `None` when `[x]` is an eigen-point and the whole fiber lies in `D`.
    pub y: Option<ProjectivePoint>,
    pub eigen_point: bool,
    pub eigen_margin: f64,
    pub incidence_residual: Option<f64>,
    pub divisor_residual: Option<f64>,
}

pub fn cmd_fiber(
    input: &DivisorInput,
    x: [Complex64; 3],
    tol: f64,
) -> Result<FiberReport, CliError> {
    let a = input.divisor()?;
    let x = ProjectivePoint::new(x).map_err(|e| CliError::Parse(e.to_string()))?;
    let margin = eigen_margin(&a, &x);
    let (y, eigen_point, inc, div) = match fiber_solve(&a, &x, tol) {
        Ok(p) => (
            Some(p.y),
            false,
            Some(incidence_residual(&p)),
            Some(divisor_residual(&a, &p)),
        ),
        Err(FlagError::EigenPoint { .. }) => (None, true, None, None),
        Err(e) => return Err(CliError::Parse(e.to_string())),
    };
    Ok(FiberReport {
        label: input.label.clone(),
        x,
        y,
        eigen_point,
        eigen_margin: margin,
        incidence_residual: inc,
        divisor_residual: div,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberPoint {
    #[serde(serialize_with = "ser_c")]
    pub z: Complex64,
    pub multiplicity: usize,
    pub y_residual: f64,
    pub delta_residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipReport {
    #[serde(serialize_with = "ser_c")]
    pub z: Complex64,
    pub y_residual: f64,
    pub on_y: bool,
    pub delta_residual: Option<f64>,
    pub on_delta: Option<bool>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuliReport {
    pub label: Option<String>,
    pub tol: f64,
    pub covering_fiber: Vec<FiberPoint>,
    pub moduli_points: Vec<FiberPoint>,
    pub query: Option<MembershipReport>,
}

pub fn cmd_moduli(
    input: &DivisorInput,
    z: Option<Complex64>,
    tol: f64,
) -> Result<ModuliReport, CliError> {
    let a = input.divisor()?;
    let entry = |p: &flagsbs::ModuliPoint| FiberPoint {
        z: p.z,
        multiplicity: p.multiplicity,
        y_residual: y_residual(&a, p.z),
        delta_residual: delta_residual(&a, p.z, tol).ok(),
    };
    let query = z.map(|z| {
        let y = y_residual(&a, z);
        match delta_residual(&a, z, tol) {
            Ok(d) => MembershipReport {
                z,
                y_residual: y,
                on_y: true,
                delta_residual: Some(d),
                on_delta: Some(d <= tol),
                error: None,
            },
            Err(e @ ModuliError::NotOnY { .. }) => MembershipReport {
                z,
                y_residual: y,
                on_y: false,
                delta_residual: None,
                on_delta: None,
                error: Some(e.to_string()),
            },
        }
    });
    Ok(ModuliReport {
        label: input.label.clone(),
        tol,
        covering_fiber: covering_fiber(&a, tol).iter().map(entry).collect(),
        moduli_points: moduli_points(&a, tol).iter().map(entry).collect(),
        query,
    })
}

pub fn cmd_sample(
    count: usize,
    seed: u64,
    ensemble: &str,
    tol: f64,
) -> Result<StratumFrequencyReport, CliError> {
    if count == 0 {
        return Err(CliError::Parse("count must be at least 1".into()));
    }
    let ensemble: Ensemble = ensemble
        .parse()
        .map_err(|e: flagsbs::sampling::UnknownEnsemble| CliError::Parse(e.to_string()))?;
    Ok(sample_strata(count, seed, ensemble, tol))
}

pub fn cmd_verify(cfg: &VerifyConfig) -> VerifyReport {
    run_all(cfg)
}

/// `Err` listing the failed criteria unless every one passed.
pub fn verify_status(report: &VerifyReport) -> Result<(), CliError> {
    if report.passed {
        return Ok(());
    }
    Err(CliError::VerificationFailed(
        report
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.id)
            .collect(),
    ))
}
