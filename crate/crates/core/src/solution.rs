//! Closed-form ground state: ansatz parameters, energy fields, the
//! eigenfunction and its phase-space normalization.
//!
//! The phase is `g = (beta1 + i alpha1) x + beta3 e^{-ax}`, split as
//!
//! ```text
//! g_r = beta1 x1 - alpha1 p2 + beta3 e^{-X} cos Y
//! g_i = alpha1 x1 + beta1 p2 - beta3 e^{-X} sin Y
//! ```
//!
//! with `beta3` from the potential matching condition and `beta1`, `alpha1`
//! shifted by the mass couplings `K`, `J`. Every quantity is evaluated at a
//! single point, so energies are fields over the plane rather than constants.

use crate::error::{Error, Result};
use crate::model::{mass_at, scaled_coords, MassProfile, MassState, MorseParams};
use crate::phasespace::PhasePoint;

/// Mass couplings entering the linear phase slopes.
///
/// `K = (m_r^2 - m_i^2)(m_r m_i)' + 2 m_r m_i (m_i m_i' - m_r m_r')`,
/// `J = (m_r^2 - m_i^2)(m_i m_i' - m_r m_r') - 2 m_r m_i (m_r m_i)'`.
pub fn compute_jk(mass: &MassState) -> (f64, f64) {
    let MassState { m_r, m_i, dm_r, dm_i, .. } = *mass;
    let diff = m_r * m_r - m_i * m_i;
    let prod = dm_r * m_i + m_r * dm_i;
    let k = diff * prod + 2.0 * m_r * m_i * (m_i * dm_i - m_r * dm_r);
    let j = diff * (m_i * dm_i - m_r * dm_r) - 2.0 * m_r * m_i * prod;
    (j, k)
}

/// `m_r (a_r^2 - a_i^2) + 2 m_i a_r a_i`, rejected when numerically zero.
fn matching_denominator(params: &MorseParams, mass: &MassState) -> Result<f64> {
    let s = params.a_r * params.a_r - params.a_i * params.a_i;
    let den = mass.m_r * s + 2.0 * mass.m_i * params.a_r * params.a_i;
    if libm::fabs(den) < 1e-12 * mass.m_sq * params.a_sq() {
        Err(Error::DegenerateDenominator)
    } else {
        Ok(den)
    }
}

/// Principal root `beta3 = [2 m^2 V0r / (hbar^2 D)]^{1/2}`.
pub fn beta3(params: &MorseParams, mass: &MassState) -> Result<f64> {
    let den = matching_denominator(params, mass)?;
    let radicand = 2.0 * mass.m_sq * params.v0r / (params.hbar * params.hbar * den);
    if radicand < 0.0 {
        return Err(Error::NegativeRadicand);
    }
    Ok(libm::sqrt(radicand))
}

/// Right-hand side of the constraint `V0i / V0r = ratio`.
pub fn constraint_ratio(params: &MorseParams, mass: &MassState) -> Result<f64> {
    let den = matching_denominator(params, mass)?;
    let s = params.a_r * params.a_r - params.a_i * params.a_i;
    let num = 2.0 * mass.m_r * params.a_r * params.a_i - mass.m_i * s;
    Ok(num / den)
}

/// Ansatz parameters at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzParams {
    pub beta3: f64,
    pub beta1: f64,
    pub alpha1: f64,
    pub j: f64,
    pub k: f64,
}

/// Slopes `beta1 = beta3 a_r + a_i/2 + K/(2m^4)`,
/// `alpha1 = beta3 a_i - a_r/2 + J/(2m^4)` for a given `beta3`.
pub fn ansatz_with_beta3(params: &MorseParams, mass: &MassState, beta3: f64) -> AnsatzParams {
    let (j, k) = compute_jk(mass);
    let two_m4 = 2.0 * mass.m4();
    AnsatzParams {
        beta3,
        beta1: beta3 * params.a_r + 0.5 * params.a_i + k / two_m4,
        alpha1: beta3 * params.a_i - 0.5 * params.a_r + j / two_m4,
        j,
        k,
    }
}

pub fn ansatz_params(params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<AnsatzParams> {
    let mass = mass_at(profile, at)?;
    let b3 = beta3(params, &mass)?;
    Ok(ansatz_with_beta3(params, &mass, b3))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyPair {
    pub e_r: f64,
    pub e_i: f64,
}

fn finite_pair(e_r: f64, e_i: f64) -> Result<EnergyPair> {
    if e_r.is_finite() && e_i.is_finite() {
        Ok(EnergyPair { e_r, e_i })
    } else {
        Err(Error::Overflow)
    }
}

/// Constant-term matching of the split equation: the canonical energy.
pub fn energy_from_ansatz(params: &MorseParams, mass: &MassState, ansatz: &AnsatzParams) -> Result<EnergyPair> {
    let MassState { m_r, m_i, dm_r, dm_i, m_sq } = *mass;
    let AnsatzParams { beta1, alpha1, .. } = *ansatz;
    let pre = params.hbar * params.hbar / (2.0 * mass.m4());
    let diff = m_r * m_r - m_i * m_i;
    let cross = 2.0 * m_r * m_i;
    let quad = alpha1 * alpha1 - beta1 * beta1;
    let ab = alpha1 * beta1;
    let s = dm_i * beta1 + dm_r * alpha1;
    let p = dm_r * beta1 - dm_i * alpha1;

    let e_r = pre * (-m_sq * (m_r * quad - 2.0 * m_i * ab) - diff * s + cross * p);
    let e_i = pre * (-m_sq * (-2.0 * m_r * ab - m_i * quad) + diff * p + cross * s);
    finite_pair(e_r, e_i)
}

pub fn energy_at(params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<EnergyPair> {
    let mass = mass_at(profile, at)?;
    let ansatz = ansatz_with_beta3(params, &mass, beta3(params, &mass)?);
    energy_from_ansatz(params, &mass, &ansatz)
}

/// Energies as printed in the expanded closed form, transcribed term by term.
///
/// Kept only for comparison against [`energy_from_ansatz`]; the two differ in
/// general (see the verify reports).
pub fn energy_expanded_printed(params: &MorseParams, mass: &MassState, ansatz: &AnsatzParams) -> Result<EnergyPair> {
    let MassState { m_r, m_i, dm_r, dm_i, m_sq } = *mass;
    let AnsatzParams { beta3: b3, j, k, .. } = *ansatz;
    let (ar, ai) = (params.a_r, params.a_i);
    let m4 = mass.m4();
    let m8 = m4 * m4;
    let s = ar * ar - ai * ai;
    let pre = params.hbar * params.hbar / (2.0 * m4);

    let g1 = (0.25 - b3 * b3) * s + (j * j - k * k) / (4.0 * m8) + b3 * ((j * ai - k * ar) / m4 - 2.0 * ar * ai)
        - (j * ar + k * ai) / (2.0 * m4);
    let g2 = 0.5 * ar * ai * (4.0 * b3 * b3 - 1.0)
        + b3 * s
        + b3 / m4 * (j * ar + k * ai)
        + (j * ai - k * ar) / (2.0 * m4)
        + j * k / (2.0 * m8);
    let b1 = b3 * ar + 0.5 * ai + k / (2.0 * m4);
    let a1 = b3 * ai - 0.5 * ar + j / (2.0 * m4);
    let diff = m_r * m_r - m_i * m_i;

    let e_r = pre
        * (-m_sq * (m_r * g1 - m_i * g2) - diff * (dm_i * b1 + dm_r * a1) + 2.0 * m_r * m_i * (dm_r * b1 - dm_i * a1));
    let e_i = pre
        * (-m_sq * (-m_r * g2 - m_i * g1)
            + diff * (dm_r * b1 - dm_i * a1)
            + 2.0 * dm_r * dm_i * (dm_i * b1 + dm_r * a1));
    finite_pair(e_r, e_i)
}

/// Special mass profiles with a dedicated closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialCase {
    /// `dm_r/dx1 = 0`
    IA,
    /// `dm_i/dx1 = 0`
    IIA,
}

impl SpecialCase {
    /// A constant profile qualifies for both cases.
    pub fn check(self, profile: &MassProfile) -> Result<()> {
        let ok = match self {
            SpecialCase::IA => profile.c() == 0.0,
            SpecialCase::IIA => profile.d() == 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::CaseMismatch)
        }
    }
}

/// Printed special-case energies, scaled by `hbar^2` (the printed forms use
/// `hbar = 1`).
pub fn special_case_energy(
    case: SpecialCase,
    params: &MorseParams,
    profile: &MassProfile,
    at: PhasePoint,
) -> Result<EnergyPair> {
    case.check(profile)?;
    let mass = mass_at(profile, at)?;
    let b3 = beta3(params, &mass)?;
    let MassState { m_r, m_i, m_sq, .. } = mass;
    let (ar, ai) = (params.a_r, params.a_i);
    let s = ar * ar - ai * ai;
    let m4 = mass.m4();
    let m6 = m4 * m_sq;
    let q = 4.0 * b3 * b3;

    let core_i = m4 * (s * ((1.0 - q) * m_i - 4.0 * b3 * m_r) - 2.0 * ai * ar * ((1.0 - q) * m_r + 4.0 * b3 * m_i));
    let core_r = m4 * (s * ((q - 1.0) * m_r - 4.0 * b3 * m_i) + 2.0 * ai * ar * ((q - 1.0) * m_i + 4.0 * b3 * m_r));
    let tail_i = 3.0 * m_r * m_r * m_i - m_i * m_i * m_i;
    let tail_r = 3.0 * m_r * m_i * m_i - m_r * m_r * m_r;
    let (sign, slope) = match case {
        SpecialCase::IA => (1.0, mass.dm_i),
        SpecialCase::IIA => (-1.0, mass.dm_r),
    };
    let h2 = params.hbar * params.hbar;
    let e_i = h2 * (core_i + sign * tail_i * slope * slope) / (8.0 * m6);
    let e_r = h2 * (core_r + sign * tail_r * slope * slope) / (8.0 * m6);
    finite_pair(e_r, e_i)
}

/// Real and imaginary parts of the phase `g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzPhase {
    pub g_r: f64,
    pub g_i: f64,
}

pub fn phase_from_ansatz(params: &MorseParams, ansatz: &AnsatzParams, at: PhasePoint) -> Result<AnsatzPhase> {
    let s = scaled_coords(params, at);
    let decay = libm::exp(-s.x);
    let g_r = ansatz.beta1 * at.x1 - ansatz.alpha1 * at.p2 + ansatz.beta3 * decay * libm::cos(s.y);
    let g_i = ansatz.alpha1 * at.x1 + ansatz.beta1 * at.p2 - ansatz.beta3 * decay * libm::sin(s.y);
    if g_r.is_finite() && g_i.is_finite() {
        Ok(AnsatzPhase { g_r, g_i })
    } else {
        Err(Error::Overflow)
    }
}

pub fn phase_at(params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<AnsatzPhase> {
    let ansatz = ansatz_params(params, profile, at)?;
    phase_from_ansatz(params, &ansatz, at)
}

/// Unnormalized `psi = e^{-g_i} (cos g_r + i sin g_r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSample {
    pub psi_r: f64,
    pub psi_i: f64,
}

impl WaveSample {
    pub fn norm_sqr(&self) -> f64 {
        self.psi_r * self.psi_r + self.psi_i * self.psi_i
    }
}

pub fn psi_from_phase(phase: &AnsatzPhase) -> Result<WaveSample> {
    if libm::fabs(phase.g_i) > 700.0 {
        return Err(Error::Overflow);
    }
    let amp = libm::exp(-phase.g_i);
    let (sin, cos) = libm::sincos(phase.g_r);
    Ok(WaveSample { psi_r: amp * cos, psi_i: amp * sin })
}

pub fn psi_at(params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<WaveSample> {
    psi_from_phase(&phase_at(params, profile, at)?)
}

/// `N = sqrt(alpha1 beta1)`.
pub fn norm_constant(alpha1: f64, beta1: f64) -> Result<f64> {
    if alpha1 > 0.0 && beta1 > 0.0 {
        Ok(libm::sqrt(alpha1 * beta1))
    } else {
        Err(Error::NotNormalizable)
    }
}

/// Normalized density `alpha1 beta1 exp(-2 (alpha1 |x1| + beta1 |p2|))`.
pub fn density_at(alpha1: f64, beta1: f64, at: PhasePoint) -> Result<f64> {
    if !(alpha1 > 0.0 && beta1 > 0.0) {
        return Err(Error::NotNormalizable);
    }
    Ok(alpha1 * beta1 * libm::exp(-2.0 * (alpha1 * libm::fabs(at.x1) + beta1 * libm::fabs(at.p2))))
}

/// Which of the two positivity conditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Neither,
    OnlyAlpha,
    OnlyBeta,
    Both,
}

impl Region {
    pub fn from_signs(alpha_pos: bool, beta_pos: bool) -> Self {
        match (alpha_pos, beta_pos) {
            (true, true) => Region::Both,
            (true, false) => Region::OnlyAlpha,
            (false, true) => Region::OnlyBeta,
            (false, false) => Region::Neither,
        }
    }

    /// Numeric code used in field CSVs.
    pub fn code(self) -> u8 {
        match self {
            Region::Neither => 0,
            Region::OnlyAlpha => 1,
            Region::OnlyBeta => 2,
            Region::Both => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Region::Neither => "Neither",
            Region::OnlyAlpha => "OnlyAlpha",
            Region::OnlyBeta => "OnlyBeta",
            Region::Both => "Both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizationInfo {
    /// Present only for [`Region::Both`].
    pub n: Option<f64>,
    pub alpha_pos: bool,
    pub beta_pos: bool,
    pub region: Region,
}

pub fn classify_region(alpha1: f64, beta1: f64) -> NormalizationInfo {
    let alpha_pos = alpha1 > 0.0;
    let beta_pos = beta1 > 0.0;
    NormalizationInfo {
        n: norm_constant(alpha1, beta1).ok(),
        alpha_pos,
        beta_pos,
        region: Region::from_signs(alpha_pos, beta_pos),
    }
}

/// Region from the beta3 lower bounds
/// `beta3 > -a_i/(2 a_r) - K/(2 m^4 a_r)` and `beta3 > a_r/(2 a_i) - J/(2 m^4 a_i)`.
///
/// These equal the sign tests on beta1 and alpha1 only when `a_r > 0` and
/// `a_i > 0`. `None` when either component of `a` is zero.
pub fn classify_by_inequalities(params: &MorseParams, mass: &MassState, ansatz: &AnsatzParams) -> Option<Region> {
    let (ar, ai) = (params.a_r, params.a_i);
    if ar == 0.0 || ai == 0.0 {
        return None;
    }
    let m4 = mass.m4();
    let beta_bound = -ai / (2.0 * ar) - ansatz.k / (2.0 * m4 * ar);
    let alpha_bound = ar / (2.0 * ai) - ansatz.j / (2.0 * m4 * ai);
    Some(Region::from_signs(ansatz.beta3 > alpha_bound, ansatz.beta3 > beta_bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> (MorseParams, MassProfile) {
        (
            MorseParams::new(0.5, 0.0, 1.0, 0.0, 1.0).unwrap(),
            MassProfile::constant(1.0, 0.0).unwrap(),
        )
    }

    #[test]
    fn jk_vanish_for_constant_mass() {
        let m = MassState::new(1.3, -0.4, 0.0, 0.0).unwrap();
        assert_eq!(compute_jk(&m), (0.0, 0.0));
    }

    #[test]
    fn jk_special_case_reductions() {
        // case II(a): m_i' = 0
        let m = MassState::new(1.2, 0.3, 0.1, 0.0).unwrap();
        let (j, k) = compute_jk(&m);
        assert!((k - (-m.dm_r * m.m_i * m.m_sq)).abs() < 1e-15);
        assert!((j - (-m.m_r * m.dm_r * m.m_sq)).abs() < 1e-15);
        // case I(a): m_r' = 0
        let m = MassState::new(1.2, 0.3, 0.0, 0.05).unwrap();
        let (j, k) = compute_jk(&m);
        assert!((k - m.m_r * m.dm_i * m.m_sq).abs() < 1e-15);
        assert!((j - (-m.m_i * m.dm_i * m.m_sq)).abs() < 1e-15);
    }

    #[test]
    fn beta3_examples() {
        let (p, _) = unit();
        let m = MassState::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(beta3(&p, &m), Ok(1.0));

        let diag = MorseParams::new(0.5, 0.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(beta3(&diag, &m), Err(Error::DegenerateDenominator));

        let neg = MorseParams::new(-0.5, 0.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(beta3(&neg, &m), Err(Error::NegativeRadicand));
    }

    #[test]
    fn constraint_ratio_reductions() {
        let p = MorseParams::new(0.5, 0.0, 1.0, 0.3, 1.0).unwrap();
        let m = MassState::new(1.7, 0.0, 0.0, 0.0).unwrap();
        let expect = 2.0 * 0.3 / (1.0 - 0.09);
        assert!((constraint_ratio(&p, &m).unwrap() - expect).abs() < 1e-15);

        let p = MorseParams::new(0.5, 0.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(constraint_ratio(&p, &m), Ok(0.0));
    }

    #[test]
    fn ansatz_examples() {
        let (p, prof) = unit();
        let a = ansatz_params(&p, &prof, PhasePoint::new(0.4, 0.2)).unwrap();
        assert_eq!((a.beta3, a.beta1, a.alpha1), (1.0, 1.0, -0.5));

        let p = MorseParams::new(0.5, 0.0, 1.0, 0.5, 1.0).unwrap();
        let a = ansatz_params(&p, &prof, PhasePoint::ORIGIN).unwrap();
        assert!((a.beta1 - (a.beta3 + 0.25)).abs() < 1e-15);
        assert!((a.alpha1 - (0.5 * a.beta3 - 0.5)).abs() < 1e-15);
    }

    #[test]
    fn unit_energy_by_hand() {
        // E_r = -(alpha1^2 - beta1^2)/2 = 0.375, E_i = alpha1 beta1 = -0.5
        let (p, prof) = unit();
        let e = energy_at(&p, &prof, PhasePoint::ORIGIN).unwrap();
        assert!((e.e_r - 0.375).abs() < 1e-15);
        assert!((e.e_i + 0.5).abs() < 1e-15);
    }

    #[test]
    fn constant_mass_energy_matches_reduced_form() {
        let p = MorseParams::new(0.8, 0.0, 1.1, 0.4, 1.3).unwrap();
        let prof = MassProfile::constant(1.4, 0.6).unwrap();
        let at = PhasePoint::new(0.2, -0.1);
        let m = mass_at(&prof, at).unwrap();
        let a = ansatz_params(&p, &prof, at).unwrap();
        let e = energy_at(&p, &prof, at).unwrap();
        let expect = -(p.hbar * p.hbar / (2.0 * m.m_sq))
            * (m.m_r * (a.alpha1 * a.alpha1 - a.beta1 * a.beta1) - 2.0 * m.m_i * a.alpha1 * a.beta1);
        assert!((e.e_r - expect).abs() < 1e-14);
    }

    #[test]
    fn expanded_printed_energy_differs_in_sign_of_e_i() {
        let (p, prof) = unit();
        let m = mass_at(&prof, PhasePoint::ORIGIN).unwrap();
        let a = ansatz_params(&p, &prof, PhasePoint::ORIGIN).unwrap();
        let printed = energy_expanded_printed(&p, &m, &a).unwrap();
        assert!((printed.e_r - 0.375).abs() < 1e-15);
        assert!((printed.e_i - 0.5).abs() < 1e-15);
    }

    #[test]
    fn special_cases_agree_for_constant_mass() {
        let p = MorseParams::new(0.5, 0.0, 1.0, 0.3, 1.0).unwrap();
        let prof = MassProfile::constant(1.0, 0.2).unwrap();
        let at = PhasePoint::new(0.3, -0.2);
        let ia = special_case_energy(SpecialCase::IA, &p, &prof, at).unwrap();
        let iia = special_case_energy(SpecialCase::IIA, &p, &prof, at).unwrap();
        assert_eq!(ia, iia);
        let canon = energy_at(&p, &prof, at).unwrap();
        assert!((ia.e_r - canon.e_r).abs() < 1e-13 && (ia.e_i - canon.e_i).abs() < 1e-13);
    }

    #[test]
    fn special_case_mismatch() {
        let p = MorseParams::new(0.5, 0.0, 1.0, 0.3, 1.0).unwrap();
        let gl = MassProfile::general_linear(0.1, 0.05, 1.0, 0.2).unwrap();
        assert_eq!(special_case_energy(SpecialCase::IA, &p, &gl, PhasePoint::ORIGIN), Err(Error::CaseMismatch));
        let iia = MassProfile::case_iia(0.1, 1.0, 0.2).unwrap();
        assert_eq!(special_case_energy(SpecialCase::IA, &p, &iia, PhasePoint::ORIGIN), Err(Error::CaseMismatch));
    }

    #[test]
    fn phase_and_psi_at_origin() {
        let (p, prof) = unit();
        let g = phase_at(&p, &prof, PhasePoint::ORIGIN).unwrap();
        assert_eq!((g.g_r, g.g_i), (1.0, 0.0));
        let psi = psi_at(&p, &prof, PhasePoint::ORIGIN).unwrap();
        assert!((psi.psi_r - 0.540_302_305_868_139_8).abs() < 1e-15);
        assert!((psi.psi_i - 0.841_470_984_807_896_5).abs() < 1e-15);
    }

    #[test]
    fn zero_beta3_gives_linear_phase() {
        let p = MorseParams::new(0.0, 0.0, 1.0, 0.3, 1.0).unwrap();
        let prof = MassProfile::constant(1.0, 0.0).unwrap();
        let at = PhasePoint::new(0.7, -0.4);
        let a = ansatz_params(&p, &prof, at).unwrap();
        assert_eq!(a.beta3, 0.0);
        let g = phase_at(&p, &prof, at).unwrap();
        assert_eq!(g.g_r, a.beta1 * at.x1 - a.alpha1 * at.p2);
        assert_eq!(g.g_i, a.alpha1 * at.x1 + a.beta1 * at.p2);
    }

    #[test]
    fn psi_overflow() {
        let phase = AnsatzPhase { g_r: 0.0, g_i: -701.0 };
        assert_eq!(psi_from_phase(&phase), Err(Error::Overflow));
    }

    #[test]
    fn norm_constant_examples() {
        assert_eq!(norm_constant(4.0, 1.0), Ok(2.0));
        assert_eq!(norm_constant(1.0, 1.0), Ok(1.0));
        assert_eq!(norm_constant(-0.5, 1.0), Err(Error::NotNormalizable));
    }

    #[test]
    fn density_examples() {
        assert_eq!(density_at(1.0, 1.0, PhasePoint::ORIGIN), Ok(1.0));
        let d = density_at(1.0, 1.0, PhasePoint::new(0.5 * core::f64::consts::LN_2, 0.0)).unwrap();
        assert!((d - 0.5).abs() < 1e-15);
        assert_eq!(density_at(1.0, 0.0, PhasePoint::ORIGIN), Err(Error::NotNormalizable));
    }

    #[test]
    fn region_examples() {
        let info = classify_region(1.0, 1.0);
        assert_eq!(info.region, Region::Both);
        assert_eq!(info.n, Some(1.0));
        assert_eq!(classify_region(-1.0, 1.0).region, Region::OnlyBeta);
        assert_eq!(classify_region(1.0, -1.0).region, Region::OnlyAlpha);
        let none = classify_region(-1.0, -1.0);
        assert_eq!(none.region, Region::Neither);
        assert_eq!(none.n, None);
    }

    #[test]
    fn inequality_form_needs_both_components() {
        let (p, _) = unit();
        let m = MassState::new(1.0, 0.0, 0.0, 0.0).unwrap();
        let a = ansatz_with_beta3(&p, &m, 1.0);
        assert_eq!(classify_by_inequalities(&p, &m, &a), None);
    }
}
