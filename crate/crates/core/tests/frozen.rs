//! Values produced by `tests/oracle/oracle.py` (40-digit complex arithmetic
//! on `x = x1 + i p2`, not the split formulas) and frozen here.

#![allow(clippy::excessive_precision)]

use morse_pdcm_core::phasespace::PhasePoint;
use morse_pdcm_core::reality::{ei_quadratic_coeffs, energy_with_beta3, reality_roots};
use morse_pdcm_core::solution::{
    ansatz_params, constraint_ratio, density_at, energy_at, phase_at, psi_at, special_case_energy, SpecialCase,
};
use morse_pdcm_core::{mass_at, potential_at, MassProfile, MassState, MorseParams};

fn close(got: f64, want: f64, rel: f64) {
    let tol = rel * want.abs().max(1e-3);
    assert!((got - want).abs() <= tol, "got {got:e}, want {want:e}");
}

fn a03() -> MorseParams {
    MorseParams::new(0.5, 0.0, 1.0, 0.3, 1.0).unwrap()
}

fn general() -> MassProfile {
    MassProfile::general_linear(0.1, 0.05, 1.0, 0.2).unwrap()
}

const AT: PhasePoint = PhasePoint::new(0.3, -0.2);

#[test]
fn potential() {
    let p = MorseParams::new(0.5, 0.1, 1.0, 0.3, 1.0).unwrap();
    let v = potential_at(&p, PhasePoint::new(0.4, -0.1)).unwrap();
    close(v.re, -0.43987686426843232273, 1e-14);
    close(v.im, -0.083245110065635443141, 1e-14);
}

#[test]
fn general_linear_ansatz_and_energy() {
    let a = ansatz_params(&a03(), &general(), AT).unwrap();
    close(a.beta3, 1.0260959314974876259, 1e-14);
    close(a.beta1, 1.1906097195961813798, 1e-14);
    close(a.alpha1, -0.24296947889618188314, 1e-14);
    let e = energy_at(&a03(), &general(), AT).unwrap();
    close(e.e_r, 0.58712974480195849473, 1e-13);
    close(e.e_i, -0.32669693819194375162, 1e-13);
}

#[test]
fn general_linear_phase_and_psi() {
    let g = phase_at(&a03(), &general(), AT).unwrap();
    close(g.g_r, 1.0201451340256881827, 1e-14);
    close(g.g_i, -0.23242438584913366504, 1e-14);
    let w = psi_at(&a03(), &general(), AT).unwrap();
    close(w.psi_r, 0.66015125647203309568, 1e-13);
    close(w.psi_i, 1.0751622054681523492, 1e-13);
}

#[test]
fn constraint_and_density() {
    let m = MassState::new(1.0, 0.2, 0.0, 0.0).unwrap();
    close(constraint_ratio(&a03(), &m).unwrap(), 0.40582524271844656578, 1e-14);
    close(density_at(0.7, 1.3, PhasePoint::new(0.4, -0.2)).unwrap(), 0.30903192833689460552, 1e-14);
}

#[test]
fn case_ia() {
    let prof = MassProfile::case_ia(0.05, 1.0, 0.2).unwrap();
    let a = ansatz_params(&a03(), &prof, AT).unwrap();
    close(a.beta3, 1.0086568335946849591, 1e-14);
    close(a.alpha1, -0.20244362701347551711, 1e-14);
    close(a.beta1, 1.1823362934216607829, 1e-14);
    let e = energy_at(&a03(), &prof, AT).unwrap();
    close(e.e_r, 0.5709858604126813025, 1e-13);
    close(e.e_i, -0.34788601621429050078, 1e-13);
}

#[test]
fn case_iia() {
    let prof = MassProfile::case_iia(0.1, 1.0, 0.2).unwrap();
    let a = ansatz_params(&a03(), &prof, AT).unwrap();
    close(a.beta3, 1.0227022204079171885, 1e-14);
    let e = energy_at(&a03(), &prof, AT).unwrap();
    close(e.e_r, 0.5938728669518560516, 1e-13);
    close(e.e_i, -0.32411499419744391099, 1e-13);
}

#[test]
fn printed_special_energies_match_oracle() {
    let prof = MassProfile::case_ia(0.05, 1.0, 0.2).unwrap();
    let s = special_case_energy(SpecialCase::IA, &a03(), &prof, AT).unwrap();
    close(s.e_r, 0.5709858604126813025, 1e-13);
    close(s.e_i, -0.34788601621429050078, 1e-13);
    let prof = MassProfile::case_iia(0.1, 1.0, 0.2).unwrap();
    let s = special_case_energy(SpecialCase::IIA, &a03(), &prof, AT).unwrap();
    close(s.e_r, 0.5938728669518560516, 1e-13);
    close(s.e_i, -0.32411499419744391099, 1e-13);
}

#[test]
fn reality_quadratic() {
    let q = ei_quadratic_coeffs(&a03(), &general(), AT).unwrap();
    close(q.q2, 0.19941944847605223422, 1e-13);
    close(q.q1, -0.47489114658925979811, 1e-13);
    close(q.q0, -0.049376389955901341697, 1e-12);
}

#[test]
fn case_ia_reality_roots() {
    let prof = MassProfile::case_ia(0.05, 1.0, 0.2).unwrap();
    let at = PhasePoint::new(0.2, 0.1);
    let st = reality_roots(&a03(), &prof, at).unwrap();
    close(st.root_lo(), -0.094517217130472932858, 1e-12);
    close(st.root_hi(), 2.6356603558345874871, 1e-13);
    let m = mass_at(&prof, at).unwrap();
    close(energy_with_beta3(&a03(), &m, st.root_lo()).unwrap().e_r, -0.13901189453119597337, 1e-12);
    close(energy_with_beta3(&a03(), &m, st.root_hi()).unwrap().e_r, 3.8567062311645277573, 1e-13);
}
