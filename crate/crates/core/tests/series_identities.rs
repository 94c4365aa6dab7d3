use msm_core::gamma::gamma;
use msm_core::series::{
    appell_f3, bessel_w, gauss_2f1, hyp_pfq, wright_psi, BesselParams, HypergeometricSpec, WrightSpec,
};
use msm_core::{cplx, real, relative_error, Complex64, Error};
use proptest::prelude::*;

const TOL: f64 = 1e-16;

#[test]
fn bessel_special_cases() {
    let w = |p: f64, b: f64, c: f64, z: Complex64| bessel_w(&BesselParams::real(p, b, c), z, TOL).unwrap().value;
    // J_0(1), J_1(2.5), I_1(0.8), J_{0.3}(1.2 + 0.5i) from mpmath
    assert!(relative_error(w(0.0, 1.0, 1.0, real(1.0)), real(0.765_197_686_557_966_6)) < 1e-14);
    assert!(relative_error(w(1.0, 1.0, 1.0, real(2.5)), real(0.497_094_102_464_274_04)) < 1e-14);
    assert!(relative_error(w(1.0, 1.0, -1.0, real(0.8)), real(0.432_864_802_620_639_85)) < 1e-14);
    let j = w(0.3, 1.0, 1.0, cplx(1.2, 0.5));
    assert!(relative_error(j, cplx(0.773_756_164_242_732_7, -0.106_925_193_621_621_75)) < 1e-13);
    // W_{0,2,1}(z) = 2 sin z / (√π z)
    let z: f64 = 1.7;
    let want = 2.0 * z.sin() / (std::f64::consts::PI.sqrt() * z);
    assert!(relative_error(w(0.0, 2.0, 1.0, real(z)), real(want)) < 1e-14);
}

#[test]
fn trig_reductions_over_a_grid() {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    for &b in &[1.0f64, 2.0, 3.5] {
        for &c in &[0.5f64, 1.0, 2.0] {
            for &z in &[0.25f64, 1.0, 2.5] {
                let front = sqrt_pi * (z / 2.0f64).powf(b / 2.0);
                let cases = [
                    ((c * z).cos(), front * bessel_w(&BesselParams::real(-b / 2.0, b, c * c), real(z), TOL).unwrap().value),
                    ((c * z).cosh(), front * bessel_w(&BesselParams::real(-b / 2.0, b, -c * c), real(z), TOL).unwrap().value),
                    ((c * z).sin(), c * front * bessel_w(&BesselParams::real(1.0 - b / 2.0, b, c * c), real(z), TOL).unwrap().value),
                    ((c * z).sinh(), c * front * bessel_w(&BesselParams::real(1.0 - b / 2.0, b, -c * c), real(z), TOL).unwrap().value),
                ];
                for (want, got) in cases {
                    assert!(relative_error(got, real(want)) < 1e-11, "b={b} c={c} z={z}: {got} vs {want}");
                }
            }
        }
    }
}

#[test]
fn gauss_closed_forms() {
    for &z in &[0.3f64, 0.9, -0.7, -3.0] {
        let v = gauss_2f1(real(1.0), real(1.0), real(2.0), z, TOL).unwrap().value;
        let want = -(1.0 - z).ln() / z;
        assert!(relative_error(v, real(want)) < 1e-13, "z = {z}");
        let v = gauss_2f1(cplx(0.4, 0.3), real(1.7), real(1.7), z, TOL).unwrap().value;
        let want = (-cplx(0.4, 0.3) * (1.0 - z).ln()).exp();
        assert!(relative_error(v, want) < 1e-13, "z = {z}");
    }
    let v = gauss_2f1(real(0.5), real(1.5), real(2.5), -3.0, TOL).unwrap().value;
    assert!(relative_error(v, real(0.619_827_001_849_526_8)) < 1e-13);
    let v = gauss_2f1(real(0.3), real(0.7), real(1.9), 0.8, TOL).unwrap().value;
    assert!(relative_error(v, real(1.140_725_814_308_778_7)) < 1e-13);
}

#[test]
fn convergence_condition() {
    let spec = WrightSpec::new(vec![(real(1.0), 2.0)], vec![(real(1.0), 1.0)], real(0.1));
    assert_eq!(spec.convergence_index(), -1.0);
    assert!(matches!(wright_psi(&spec, 1e-12), Err(Error::Convergence(_))));
    let spec = WrightSpec::new(vec![(real(1.0), 2.0)], vec![(real(1.0), 1.5)], real(0.1));
    assert!(wright_psi(&spec, 1e-12).is_ok());
}

fn param() -> impl Strategy<Value = Complex64> {
    (0.2f64..3.0, -1.0f64..1.0).prop_map(|(re, im)| cplx(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unit_weight_wright_is_scaled_pfq(
        a in prop::collection::vec(param(), 2),
        b in prop::collection::vec(param(), 3),
        z in (-3.0f64..3.0, -3.0f64..3.0),
    ) {
        let z = cplx(z.0, z.1);
        let spec = WrightSpec::new(
            a.iter().map(|&v| (v, 1.0)).collect(),
            b.iter().map(|&v| (v, 1.0)).collect(),
            z,
        );
        let psi = wright_psi(&spec, TOL).unwrap().value;
        let scale = a.iter().map(|&v| gamma(v).unwrap()).product::<Complex64>()
            / b.iter().map(|&v| gamma(v).unwrap()).product::<Complex64>();
        let f = hyp_pfq(&HypergeometricSpec::new(a.clone(), b.clone(), z), TOL).unwrap().value;
        prop_assert!(relative_error(psi, scale * f) < 1e-11, "{psi} vs {}", scale * f);
    }

    #[test]
    fn appell_matches_rectangular_sum(
        a in param(), ap in param(), b in param(), bp in param(), g in param(),
        x in -0.5f64..0.5, y in -0.5f64..0.5,
    ) {
        let f3 = appell_f3(a, ap, b, bp, g, real(x), real(y), TOL).unwrap().value;
        // row by row: first column by the x-recurrence, then along y
        let n = 120;
        let mut direct = real(0.0);
        let mut head = real(1.0);
        for m in 0..n {
            if m > 0 {
                let j = (m - 1) as f64;
                head *= (a + j) * (b + j) * x / ((g + j) * m as f64);
            }
            let mut t = head;
            for k in 0..n {
                if k > 0 {
                    let j = (k - 1) as f64;
                    t *= (ap + j) * (bp + j) * y / ((g + (m + k - 1) as f64) * k as f64);
                }
                direct += t;
            }
        }
        prop_assert!(relative_error(f3, direct) < 1e-11, "{f3} vs {direct}");
    }
}
