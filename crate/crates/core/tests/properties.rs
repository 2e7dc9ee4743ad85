use num_complex::Complex64;
use proptest::prelude::*;

use morse_pdcm_core::phasespace::{cr_residual, PhasePoint};
use morse_pdcm_core::reality::energy_with_beta3;
use morse_pdcm_core::solution::{ansatz_with_beta3, classify_by_inequalities, energy_from_ansatz};
use morse_pdcm_core::verify::quadrature_norm_check;
use morse_pdcm_core::{
    ansatz_params, classify_region, mass_at, phase_at, potential_at, reality_roots, MassProfile, MorseParams,
};

fn params() -> impl Strategy<Value = MorseParams> {
    (0.1..2.0f64, -1.0..1.0f64, 0.3..2.0f64, 0.05..1.0f64, 0.5..2.0f64)
        .prop_map(|(v0r, v0i, ar, ai, h)| MorseParams::new(v0r, v0i, ar, ai, h).unwrap())
}

fn profile() -> impl Strategy<Value = MassProfile> {
    (-0.3..0.3f64, -0.3..0.3f64, 0.8..2.0f64, -0.5..0.5f64)
        .prop_map(|(c, d, e1, e2)| MassProfile::general_linear(c, d, e1, e2).unwrap())
}

fn point() -> impl Strategy<Value = PhasePoint> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(x, p)| PhasePoint::new(x, p))
}

proptest! {
    #[test]
    fn energy_matches_complex_form(p in params(), prof in profile(), at in point(), b3 in -2.0..2.0f64) {
        let m = mass_at(&prof, at).unwrap();
        let a = ansatz_with_beta3(&p, &m, b3);
        let e = energy_from_ansatz(&p, &m, &a).unwrap();
        // E = hbar^2/2 (w^2/M + i M' w / M^2), w = beta1 + i alpha1
        let mm = Complex64::new(m.m_r, m.m_i);
        let dm = Complex64::new(m.dm_r, m.dm_i);
        let w = Complex64::new(a.beta1, a.alpha1);
        let want = (w * w / mm + Complex64::i() * dm * w / (mm * mm)) * (0.5 * p.hbar * p.hbar);
        let scale = want.norm().max(1.0);
        prop_assert!((e.e_r - want.re).abs() < 1e-12 * scale);
        prop_assert!((e.e_i - want.im).abs() < 1e-12 * scale);
    }

    #[test]
    fn slopes_match_complex_form(p in params(), prof in profile(), at in point(), b3 in -2.0..2.0f64) {
        let m = mass_at(&prof, at).unwrap();
        let a = ansatz_with_beta3(&p, &m, b3);
        let aa = Complex64::new(p.a_r, p.a_i);
        let mm = Complex64::new(m.m_r, m.m_i);
        let dm = Complex64::new(m.dm_r, m.dm_i);
        let w = aa * b3 - Complex64::i() * aa / 2.0 - Complex64::i() * dm / (mm * 2.0);
        prop_assert!((a.beta1 - w.re).abs() < 1e-13);
        prop_assert!((a.alpha1 - w.im).abs() < 1e-13);
    }

    #[test]
    fn potential_matches_complex_form(p in params(), at in point()) {
        let v = potential_at(&p, at).unwrap();
        let ax = Complex64::new(p.a_r, p.a_i) * Complex64::new(at.x1, at.p2);
        let want = Complex64::new(p.v0r, p.v0i) * ((-ax * 2.0).exp() - (-ax).exp() * 2.0);
        prop_assert!((v.re - want.re).abs() < 1e-12 * want.norm().max(1.0));
        prop_assert!((v.im - want.im).abs() < 1e-12 * want.norm().max(1.0));
    }

    #[test]
    fn frozen_phase_is_analytic(p in params(), at in point()) {
        let prof = MassProfile::constant(1.0, 0.2).unwrap();
        prop_assume!(ansatz_params(&p, &prof, at).is_ok());
        let (r1, r2) = cr_residual(
            |q| phase_at(&p, &prof, q).unwrap().g_r,
            |q| phase_at(&p, &prof, q).unwrap().g_i,
            at,
            1e-4,
        ).unwrap();
        // O(h^2) truncation grows like |a|^3 times the exponential term
        let g = phase_at(&p, &prof, at).unwrap();
        let tol = 1e-7 * (1.0 + g.g_r.hypot(g.g_i)) * p.a_sq().powf(1.5);
        prop_assert!(r1.abs() < tol && r2.abs() < tol, "{r1:e} {r2:e} {tol:e}");
    }

    #[test]
    fn reality_roots_zero_imaginary_energy(p in params(), prof in profile(), at in point()) {
        if let Ok(st) = reality_roots(&p, &prof, at) {
            let m = mass_at(&prof, at).unwrap();
            for r in [st.root_lo(), st.root_hi()] {
                let e = energy_with_beta3(&p, &m, r).unwrap();
                prop_assert!(e.e_i.abs() < 1e-9 * e.e_r.abs().max(1.0), "{r} {e:?}");
            }
        }
    }

    #[test]
    fn inequality_regions_agree(p in params(), prof in profile(), at in point()) {
        if let Ok(a) = ansatz_params(&p, &prof, at) {
            let m = mass_at(&prof, at).unwrap();
            let direct = classify_region(a.alpha1, a.beta1).region;
            prop_assert_eq!(classify_by_inequalities(&p, &m, &a), Some(direct));
        }
    }

    #[test]
    fn quadrature_symmetric(al in 0.1..5.0f64, be in 0.1..5.0f64) {
        let q1 = quadrature_norm_check(al, be, 1e-13).unwrap();
        let q2 = quadrature_norm_check(be, al, 1e-13).unwrap();
        prop_assert!((q1.integral - q2.integral).abs() <= 1e-13 * q1.integral);
        prop_assert!(q1.rel_err < 1e-8);
    }
}
