//! Property tests for the algebraic and geometric invariants.

use flagsbs::eigen::{eigen_points, eigenvalues};
use flagsbs::flag::{eigen_margin, pullback_form};
use flagsbs::linalg::c;
use flagsbs::sampling::{
    random_invertible, random_scale, random_unit_c2, rng_from_seed, CONJUGATOR_COND_LIMIT,
};
use flagsbs::*;
use proptest::prelude::*;

const TOL: f64 = DEFAULT_TOL;

fn complex() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| c(re, im))
}

fn nonzero_scale() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, 0.0..std::f64::consts::TAU)
        .prop_map(|(e, arg)| Complex64::from_polar(10f64.powf(e), arg))
}

fn uniform_matrix() -> impl Strategy<Value = TracelessMatrix> {
    prop::array::uniform9(complex())
        .prop_map(Mat3::from_iterator)
        .prop_filter_map("zero traceless part", |m| TracelessMatrix::new(m).ok())
}

fn ensemble() -> impl Strategy<Value = Ensemble> {
    prop::sample::select(Ensemble::ALL.to_vec())
}

/// Draw from a named ensemble, reproducible from the seed.
fn drawn() -> impl Strategy<Value = (Ensemble, TracelessMatrix)> {
    (ensemble(), any::<u64>()).prop_map(|(e, seed)| (e, e.draw(&mut rng_from_seed(seed))))
}

fn unit_c2() -> impl Strategy<Value = [Complex64; 2]> {
    any::<u64>().prop_map(|seed| random_unit_c2(&mut rng_from_seed(seed)))
}

fn sphere() -> impl Strategy<Value = GzSphere> {
    prop::sample::select(GzSphere::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cubic_matches_determinant(a in uniform_matrix(), z in complex()) {
        let direct = (a.matrix() - Mat3::identity() * z).determinant();
        let n = a.frobenius_norm() + z.norm();
        prop_assert!((char_cubic(&a).det_at(z) - direct).norm() <= 1e-12 * n.powi(3));
    }

    #[test]
    fn cubic_scales_homogeneously(a in uniform_matrix(), t in nonzero_scale()) {
        let c0 = char_cubic(&a);
        let c1 = char_cubic(&a.scaled(t).unwrap());
        let n = a.frobenius_norm();
        prop_assert!((c1.a - t * t * c0.a).norm() <= 1e-12 * (t.norm() * n).powi(2));
        prop_assert!((c1.b - t * t * t * c0.b).norm() <= 1e-12 * (t.norm() * n).powi(3));
    }

    #[test]
    fn roots_sum_to_zero(a in uniform_matrix()) {
        let set = eigenvalues(&a, TOL);
        prop_assert_eq!(set.total_multiplicity(), 3);
        prop_assert!(set.weighted_sum().norm() <= 1e-10 * a.frobenius_norm());
        let cubic = char_cubic(&a);
        for e in &set.items {
            prop_assert!(cubic.det_at(e.lambda).norm() <= 1e-8 * a.frobenius_norm().powi(3));
        }
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root((_, a) in drawn()) {
        let disc = discriminant(&char_cubic(&a)).norm();
        let small = disc < 1e-8 * a.frobenius_norm().powi(6);
        prop_assert_eq!(small, eigenvalues(&a, TOL).has_repeated_root());
    }

    #[test]
    fn ensembles_land_in_their_stratum((e, a) in drawn()) {
        let report = classify_stratum(&a, TOL).unwrap();
        prop_assert_eq!(report.stratum, e.target_stratum());
        prop_assert_eq!(report.reducible, e.target_stratum().is_reducible());
        prop_assert_eq!(is_reducible(&a, TOL), e.target_stratum().is_reducible());
        prop_assert_eq!(report.centers.len(), report.sphere_class_count);
    }

    #[test]
    fn stratum_invariant_under_scaling_and_similarity((_, a) in drawn(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let base = classify_stratum(&a, TOL).unwrap().stratum;
        let scaled = a.scaled(random_scale(&mut rng)).unwrap();
        prop_assert_eq!(classify_stratum(&scaled, TOL).unwrap().stratum, base);
        let g = random_invertible(&mut rng, CONJUGATOR_COND_LIMIT);
        let similar = a.conjugated(&g).unwrap();
        prop_assert_eq!(classify_stratum(&similar, TOL).unwrap().stratum, base);
    }

    #[test]
    fn centers_are_eigen_points((_, a) in drawn()) {
        let report = classify_stratum(&a, TOL).unwrap();
        for (p, &l) in report.centers.iter().zip(&report.center_eigenvalues) {
            prop_assert!(eigen_margin(&a, p) <= 1e-9);
            prop_assert!(eigen_points(&a, l, TOL).unwrap().iter().any(|q| q.approx_eq(p, 1e-6)));
        }
    }

    #[test]
    fn fiber_lies_on_divisor(a in uniform_matrix(), x in prop::array::uniform3(complex()), t in nonzero_scale()) {
        let Ok(px) = ProjectivePoint::new(x) else { return Ok(()) };
        prop_assume!(eigen_margin(&a, &px) > 1e-4);
        let p = fiber_solve(&a, &px, TOL).unwrap();
        prop_assert!(incidence_residual(&p) < 1e-10);
        prop_assert!(divisor_residual(&a, &p) < 1e-10);
        // the fiber is a point of CP² and does not depend on the representative of x
        let q = fiber_solve(&a, &ProjectivePoint::new(x.map(|z| z * t)).unwrap(), TOL).unwrap();
        prop_assert!(p.y.max_coord_deviation(&q.y) < 1e-9);
    }

    #[test]
    fn spheres_lie_in_flag_variety(s in sphere(), u in unit_c2()) {
        let p = gz_embed(s, &u).unwrap();
        prop_assert!(incidence_residual(&p) < 1e-14);
        prop_assert!(f_eval(s.index(), &p.x).abs() < 1e-14);
    }

    #[test]
    fn gz_embed_is_injective(s in sphere(), u in unit_c2(), v in unit_c2()) {
        let dist = ((u[0] - v[0]).norm_sqr() + (u[1] - v[1]).norm_sqr()).sqrt();
        prop_assume!(dist > 1e-6);
        let (p, q) = (gz_embed(s, &u).unwrap(), gz_embed(s, &v).unwrap());
        prop_assert!(p.x.distance(&q.x) > 1e-8);
    }

    #[test]
    fn pullback_vanishes_on_random_tangents(s in sphere(), u in unit_c2(), r in prop::array::uniform6(-1.0..1.0f64)) {
        // tangent vectors of S³ at u: project out the normal component Re⟨w, u⟩
        let tangent = |w: [Complex64; 2]| {
            let n = (w[0] * u[0].conj() + w[1] * u[1].conj()).re;
            [w[0] - u[0] * n, w[1] - u[1] * n]
        };
        let v = tangent([c(r[0], r[1]), c(r[2], r[3])]);
        let w = tangent([c(r[4], r[5]), c(r[1], -r[0])]);
        prop_assert!(pullback_form(s, &u, &v, &w).abs() < 1e-12);
    }

    #[test]
    fn generic_covering_has_degree_three(seed in any::<u64>()) {
        let a = Ensemble::Ginibre.draw(&mut rng_from_seed(seed));
        let fiber = covering_fiber(&a, TOL);
        prop_assert_eq!(fiber.len(), 3);
        for p in &fiber {
            prop_assert!(y_residual(&a, p.z) < 1e-10);
            prop_assert!(delta_residual(&a, p.z, TOL).unwrap() > 0.0);
        }
    }

    #[test]
    fn moduli_count_matches_classification((_, a) in drawn()) {
        let report = classify_stratum(&a, TOL).unwrap();
        prop_assert_eq!(moduli_points(&a, TOL).len(), report.sphere_class_count);
        let on_delta = covering_fiber(&a, TOL)
            .iter()
            .any(|p| delta_residual(&a, p.z, TOL).unwrap() < 1e-6);
        prop_assert_eq!(on_delta, report.stratum.number() >= 2);
    }

    #[test]
    fn y_residual_is_jointly_scale_invariant(a in uniform_matrix(), z in complex(), t in nonzero_scale()) {
        let r0 = y_residual(&a, z);
        let r1 = y_residual(&a.scaled(t).unwrap(), z * t);
        prop_assert!((r0 - r1).abs() <= 1e-12 * (1.0 + r0));
    }

    #[test]
    fn moduli_points_scale_with_the_divisor((_, a) in drawn(), t in nonzero_scale()) {
        let before = moduli_points(&a, TOL);
        let after = moduli_points(&a.scaled(t).unwrap(), TOL);
        prop_assert_eq!(before.len(), after.len());
        for p in &before {
            prop_assert!(after.iter().any(|q| (q.z - p.z * t).norm() <= 1e-9 * t.norm() * a.frobenius_norm()));
        }
    }

    #[test]
    fn canonicalization_is_idempotent(x in prop::array::uniform3(complex()), t in nonzero_scale()) {
        let Ok(p) = ProjectivePoint::new(x) else { return Ok(()) };
        let q = ProjectivePoint::new(p.coords().map(|z| z * t)).unwrap();
        prop_assert!(p.distance(&q) < 1e-7);
        prop_assert!(ProjectivePoint::new(*p.coords()).unwrap().max_coord_deviation(&p) < 1e-15);
    }
}
