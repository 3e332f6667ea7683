//! Derivative-free local minimization on a handful of parameters.

/// Nelder–Mead with the standard coefficients (reflection 1, expansion 2,
/// contraction ½, shrink ½). Returns the best vertex and its value.
pub(crate) fn nelder_mead<const N: usize, F>(
    f: F,
    start: [f64; N],
    step: f64,
    max_iter: usize,
    ftol: f64,
) -> ([f64; N], f64)
where
    F: Fn(&[f64; N]) -> f64,
{
    let mut simplex: Vec<([f64; N], f64)> = Vec::with_capacity(N + 1);
    simplex.push((start, f(&start)));
    for k in 0..N {
        let mut p = start;
        p[k] += step;
        simplex.push((p, f(&p)));
    }

    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0].1;
        let worst = simplex[N].1;
        if (worst - best).abs() <= ftol * (best.abs() + ftol) {
            break;
        }

        let mut centroid = [0.0; N];
        for (p, _) in &simplex[..N] {
            for k in 0..N {
                centroid[k] += p[k] / N as f64;
            }
        }
        let along = |t: f64| -> [f64; N] {
            let mut q = [0.0; N];
            for k in 0..N {
                q[k] = centroid[k] + t * (simplex[N].0[k] - centroid[k]);
            }
            q
        };

        let reflected = along(-1.0);
        let fr = f(&reflected);
        if fr < best {
            let expanded = along(-2.0);
            let fe = f(&expanded);
            simplex[N] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < simplex[N - 1].1 {
            simplex[N] = (reflected, fr);
        } else {
            let contracted = if fr < worst { along(-0.5) } else { along(0.5) };
            let fc = f(&contracted);
            if fc < worst.min(fr) {
                simplex[N] = (contracted, fc);
            } else {
                let anchor = simplex[0].0;
                for (p, v) in simplex.iter_mut().skip(1) {
                    for k in 0..N {
                        p[k] = anchor[k] + 0.5 * (p[k] - anchor[k]);
                    }
                    *v = f(p);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_quadratic_minimum() {
        let (p, v) = nelder_mead(
            |x: &[f64; 3]| (x[0] - 1.0).powi(2) + 2.0 * (x[1] + 0.5).powi(2) + (x[2] - 3.0).powi(2),
            [0.0, 0.0, 0.0],
            0.5,
            2000,
            1e-16,
        );
        assert!(v < 1e-12, "{v}");
        assert!(
            (p[0] - 1.0).abs() < 1e-5 && (p[1] + 0.5).abs() < 1e-5 && (p[2] - 3.0).abs() < 1e-5
        );
    }

    #[test]
    fn handles_rosenbrock_in_two_dimensions() {
        let (p, _) = nelder_mead(
            |x: &[f64; 2]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2),
            [-1.2, 1.0],
            0.3,
            5000,
            1e-18,
        );
        assert!(
            (p[0] - 1.0).abs() < 1e-4 && (p[1] - 1.0).abs() < 1e-4,
            "{p:?}"
        );
    }
}
