//! Independent checks on the closed-form solution: the coefficient
//! identities of the matched split equation, the residual of the split PDE by
//! finite differences, quadrature of the density, and comparisons between
//! the general pipeline and printed special-case formulas.
//!
//! Relative residuals are `|lhs - rhs| / max(1, |lhs|, |rhs|)`.

use core::cell::Cell;

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::model::{mass_at, potential_at, MassProfile, MassState, MorseParams};
use crate::phasespace::{partial, second_partial, Axis, ComplexValue, PhasePoint};
use crate::quadrature::GaussLegendre;
use crate::reality::{
    energy_with_beta3, real_energy_at_root, reality_roots, special_case_roots, special_case_roots_with, RealityCase,
    RootChoice, SlopeReading,
};
use crate::solution::{
    ansatz_params, ansatz_with_beta3, beta3, constraint_ratio, energy_at, energy_from_ansatz,
    phase_from_ansatz, psi_from_phase, special_case_energy, AnsatzParams, SpecialCase,
};

pub fn relative_gap(lhs: f64, rhs: f64) -> f64 {
    libm::fabs(lhs - rhs) / libm::fmax(1.0, libm::fmax(libm::fabs(lhs), libm::fabs(rhs)))
}

/// Parameters with `v0i` replaced by the value the matching constraint
/// demands at this mass.
pub fn constrained_params(params: &MorseParams, mass: &MassState) -> Result<MorseParams> {
    Ok(params.with_v0i(params.v0r * constraint_ratio(params, mass)?))
}

/// The root of the `e^{-2X}` matching pair with the sign those two
/// equations actually require: `beta3^2 = -2 m^2 V0r / (hbar^2 D)`.
///
/// Differs from [`beta3`] by the sign under the root, so exactly one of the
/// two exists for a given `V0r`.
pub fn beta3_sign_consistent(params: &MorseParams, mass: &MassState) -> Result<f64> {
    let flipped = MorseParams { v0r: -params.v0r, ..*params };
    beta3(&flipped, mass)
}

/// The six coefficient identities, in order: constant real, constant
/// imaginary, `e^{-X}` pair, `e^{-2X}` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResiduals {
    pub lhs: [f64; 6],
    pub rhs: [f64; 6],
    pub rel: [f64; 6],
}

impl IdentityResiduals {
    /// Largest relative residual over the four potential-matching identities.
    pub fn max_matching(&self) -> f64 {
        self.rel[2..].iter().fold(0.0, |m, &r| libm::fmax(m, r))
    }

    pub fn max_all(&self) -> f64 {
        self.rel.iter().fold(0.0, |m, &r| libm::fmax(m, r))
    }
}

/// Identities evaluated with the canonical (printed) beta3.
pub fn identity_residuals(params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<IdentityResiduals> {
    let mass = mass_at(profile, at)?;
    let b3 = beta3(params, &mass)?;
    identity_residuals_with_beta3(params, &mass, b3)
}

/// Identities with an arbitrary beta3; `v0i` is taken from the constraint.
///
/// The mass-slope terms of the `e^{-X}` pair are read as sitting outside the
/// `-m^2 {..}` group, which is what the expansion of the kinetic term gives.
pub fn identity_residuals_with_beta3(params: &MorseParams, mass: &MassState, b3: f64) -> Result<IdentityResiduals> {
    let p = constrained_params(params, mass)?;
    let ansatz = ansatz_with_beta3(&p, mass, b3);
    let energy = energy_from_ansatz(&p, mass, &ansatz)?;
    let MassState { m_r, m_i, dm_r, dm_i, m_sq } = *mass;
    let AnsatzParams { beta1: b1, alpha1: a1, .. } = ansatz;
    let (ar, ai) = (p.a_r, p.a_i);
    let s = ar * ar - ai * ai;
    let diff = m_r * m_r - m_i * m_i;
    let cross = 2.0 * m_r * m_i;
    let pre = p.hbar * p.hbar / (2.0 * mass.m4());

    let l_a = pre
        * (-m_sq * (m_r * (a1 * a1 - b1 * b1) + m_i * (-2.0 * a1 * b1)) - diff * (dm_i * b1 + dm_r * a1)
            + cross * (dm_r * b1 - dm_i * a1));
    let l_b = pre
        * (-m_sq * (m_r * (-2.0 * a1 * b1) - m_i * (a1 * a1 - b1 * b1)) + diff * (dm_r * b1 - dm_i * a1)
            + cross * (dm_i * b1 + dm_r * a1));
    let l_c = pre
        * (-m_sq
            * (m_r * (-2.0 * a1 * b3 * ai + 2.0 * b3 * b1 * ar - 2.0 * b3 * ar * ai)
                + m_i * (2.0 * a1 * b3 * ar + 2.0 * b3 * b1 * ai + b3 * s))
            + diff * (dm_i * b3 * ar + dm_r * b3 * ai)
            - cross * (dm_r * b3 * ar - dm_i * b3 * ai));
    let l_d = pre
        * (-m_sq
            * (m_r * (2.0 * a1 * b3 * ar + 2.0 * b1 * b3 * ai + b3 * s)
                + m_i * (2.0 * a1 * b3 * ai - 2.0 * b3 * b1 * ar + 2.0 * b3 * ar * ai))
            + diff * (-dm_r * b3 * ar + dm_i * b3 * ai)
            - cross * (dm_i * b3 * ar + dm_r * b3 * ai));
    let b3sq = b3 * b3;
    let l_e = pre * (-m_sq * (m_r * (-2.0 * b3sq * ar * ai) + m_i * (b3sq * s)));
    let l_f = pre * (-m_sq * (m_r * (-b3sq * s) + m_i * (-2.0 * b3sq * ar * ai)));

    let lhs = [l_a, l_b, l_c, l_d, l_e, l_f];
    let rhs = [energy.e_r, energy.e_i, 2.0 * p.v0r, 2.0 * p.v0i, -p.v0i, -p.v0r];
    if lhs.iter().any(|v| !v.is_finite()) {
        return Err(Error::Overflow);
    }
    let mut rel = [0.0; 6];
    for (r, (l, h)) in rel.iter_mut().zip(lhs.iter().zip(rhs.iter())) {
        *r = relative_gap(*l, *h);
    }
    Ok(IdentityResiduals { lhs, rhs, rel })
}

/// How ansatz parameters are sampled over the difference stencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamSampling {
    /// Parameters fixed at the centre point; the phase is then the exact
    /// closed-form function whose derivatives the equation was matched on.
    Frozen,
    /// Parameters recomputed at every stencil point, so the slopes vary with
    /// the mass.
    Local,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeOptions {
    pub step: f64,
    pub sampling: ParamSampling,
    pub beta3_override: Option<f64>,
    /// Replace `v0i` by its constrained value before evaluating `V_i`.
    pub enforce_constraint: bool,
}

impl Default for PdeOptions {
    fn default() -> Self {
        Self {
            step: 2e-2,
            sampling: ParamSampling::Frozen,
            beta3_override: None,
            enforce_constraint: true,
        }
    }
}

/// `A = m_r psi_r'' + m_i psi_i''`, `B = m_r psi_i'' - m_i psi_r''`,
/// `C = m_r' psi_r' - m_i' psi_i'`, `D = m_i' psi_r' + m_r' psi_i'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticIntermediates {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeResidual {
    /// LHS - RHS of the cos-coefficient equation (`= E_r - V_r`).
    pub res_r: f64,
    /// LHS - RHS of the sin-coefficient equation (`= -E_i + V_i`).
    pub res_i: f64,
    /// Largest magnitude among the two right-hand sides, for scaling.
    pub rhs_scale: f64,
    pub kinetic: KineticIntermediates,
}

fn pick_beta3(params: &MorseParams, mass: &MassState, opts: &PdeOptions) -> Result<f64> {
    match opts.beta3_override {
        Some(b) => Ok(b),
        None => beta3(params, mass),
    }
}

/// Central-difference residual of the split ground-state equation.
pub fn pde_residual(params: &MorseParams, profile: &MassProfile, at: PhasePoint, opts: &PdeOptions) -> Result<PdeResidual> {
    let mass = mass_at(profile, at)?;
    let p = if opts.enforce_constraint {
        constrained_params(params, &mass)?
    } else {
        *params
    };
    let centre = ansatz_with_beta3(&p, &mass, pick_beta3(&p, &mass, opts)?);
    let energy = energy_from_ansatz(&p, &mass, &centre)?;
    let v = potential_at(&p, at)?;

    let failure: Cell<Option<Error>> = Cell::new(None);
    let nan = ComplexValue::new(f64::NAN, f64::NAN);
    let ansatz_near = |q: PhasePoint| -> Result<AnsatzParams> {
        match opts.sampling {
            ParamSampling::Frozen => Ok(centre),
            ParamSampling::Local => {
                let m = mass_at(profile, q)?;
                let b = match opts.beta3_override {
                    Some(b) => b,
                    None => beta3(&p, &m)?,
                };
                Ok(ansatz_with_beta3(&p, &m, b))
            }
        }
    };
    let g = |q: PhasePoint| match ansatz_near(q).and_then(|a| phase_from_ansatz(&p, &a, q)) {
        Ok(ph) => ComplexValue::new(ph.g_r, ph.g_i),
        Err(e) => {
            failure.set(Some(e));
            nan
        }
    };
    let psi = |q: PhasePoint| match ansatz_near(q)
        .and_then(|a| phase_from_ansatz(&p, &a, q))
        .and_then(|ph| psi_from_phase(&ph))
    {
        Ok(w) => ComplexValue::new(w.psi_r, w.psi_i),
        Err(e) => {
            failure.set(Some(e));
            nan
        }
    };
    let h = opts.step;
    let diffs = (|| {
        Ok((
            partial(&g, at, Axis::X1, h)?,
            second_partial(&g, at, Axis::X1, h)?,
            partial(&psi, at, Axis::X1, h)?,
            second_partial(&psi, at, Axis::X1, h)?,
        ))
    })();
    let (g1, g2, d1, d2) = match diffs {
        Ok(v) => v,
        Err(e) => return Err(failure.get().unwrap_or(e)),
    };

    let MassState { m_r, m_i, dm_r, dm_i, m_sq } = mass;
    let (gr1, gi1, gr2, gi2) = (g1.re, g1.im, g2.re, g2.im);
    let pre = p.hbar * p.hbar / (2.0 * mass.m4());
    let diff = m_r * m_r - m_i * m_i;
    let cross = 2.0 * m_r * m_i;
    let lhs_r = pre
        * (-m_sq * (m_r * (gi1 * gi1 - gr1 * gr1 - gi2) + m_i * (gr2 - 2.0 * gr1 * gi1))
            + diff * (-dm_r * gi1 - dm_i * gr1)
            + cross * (dm_r * gr1 - dm_i * gi1));
    let lhs_i = pre
        * (-m_sq * (m_r * (-gr2 + 2.0 * gr1 * gi1) + m_i * (gi1 * gi1 - gr1 * gr1 - gi2))
            + diff * (-dm_r * gr1 + dm_i * gi1)
            + cross * (-dm_i * gr1 - dm_r * gi1));
    let rhs_r = energy.e_r - v.re;
    let rhs_i = -energy.e_i + v.im;
    let res_r = lhs_r - rhs_r;
    let res_i = lhs_i - rhs_i;
    if !(res_r.is_finite() && res_i.is_finite()) {
        return Err(Error::NonFiniteField);
    }
    Ok(PdeResidual {
        res_r,
        res_i,
        rhs_scale: libm::fmax(libm::fabs(rhs_r), libm::fabs(rhs_i)),
        kinetic: KineticIntermediates {
            a: m_r * d2.re + m_i * d2.im,
            b: m_r * d2.im - m_i * d2.re,
            c: dm_r * d1.re - dm_i * d1.im,
            d: dm_i * d1.re + dm_r * d1.im,
        },
    })
}

/// Residuals at steps `h`, `h/2`, `h/4` and the observed order of the
/// discretization error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeConvergence {
    pub residuals: [PdeResidual; 3],
    /// `log2(|R(h) - R(h/2)| / |R(h/2) - R(h/4)|)`, absent when both
    /// differences sit at rounding level.
    pub order_r: Option<f64>,
    pub order_i: Option<f64>,
}

impl PdeConvergence {
    /// Residual at the finest step, the best available estimate of the limit.
    pub fn finest(&self) -> &PdeResidual {
        &self.residuals[2]
    }
}

fn observed_order(coarse: f64, mid: f64, fine: f64, floor: f64) -> Option<f64> {
    let d1 = libm::fabs(coarse - mid);
    let d2 = libm::fabs(mid - fine);
    if d1 <= floor || d2 <= floor {
        return None;
    }
    Some(libm::log2(d1 / d2))
}

pub fn pde_convergence(
    params: &MorseParams,
    profile: &MassProfile,
    at: PhasePoint,
    opts: &PdeOptions,
) -> Result<PdeConvergence> {
    let run = |h: f64| pde_residual(params, profile, at, &PdeOptions { step: h, ..*opts });
    let residuals = [run(opts.step)?, run(0.5 * opts.step)?, run(0.25 * opts.step)?];
    let floor = 1e-12 * libm::fmax(1.0, residuals[0].rhs_scale);
    let [c, m, f] = residuals;
    Ok(PdeConvergence {
        residuals,
        order_r: observed_order(c.res_r, m.res_r, f.res_r, floor),
        order_i: observed_order(c.res_i, m.res_i, f.res_i, floor),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureCheck {
    /// Numeric `∫∫ exp(-2 (alpha1 |x1| + beta1 |p2|))`.
    pub integral: f64,
    /// `1 / (alpha1 beta1)`
    pub closed_form: f64,
    pub rel_err: f64,
    /// `alpha1 beta1 * integral`, the normalized density's total mass.
    pub density_integral: f64,
}

fn half_line_integral(gl: &GaussLegendre, rate: f64, tol: f64) -> Result<f64> {
    // beyond this cut the integrand is below 1e-16
    let cut = libm::log(1e16) / (2.0 * rate);
    gl.integrate_adaptive(&|x: f64| libm::exp(-2.0 * rate * x), 0.0, cut, tol)
}

/// Separable quadrature of the normalization integral.
pub fn quadrature_norm_check(alpha1: f64, beta1: f64, tol: f64) -> Result<QuadratureCheck> {
    if !(alpha1 > 0.0 && beta1 > 0.0) || !(alpha1.is_finite() && beta1.is_finite()) {
        return Err(Error::NotNormalizable);
    }
    let gl = GaussLegendre::new();
    let ix = 2.0 * half_line_integral(&gl, alpha1, tol)?;
    let ip = 2.0 * half_line_integral(&gl, beta1, tol)?;
    let integral = ix * ip;
    let closed_form = 1.0 / (alpha1 * beta1);
    Ok(QuadratureCheck {
        integral,
        closed_form,
        rel_err: libm::fabs(integral - closed_form) / closed_form,
        density_integral: alpha1 * beta1 * integral,
    })
}

/// Printed slopes of the special profiles.
pub fn special_case_slopes(case: SpecialCase, params: &MorseParams, mass: &MassState, b3: f64) -> (f64, f64) {
    let MassState { m_r, m_i, dm_r, dm_i, m_sq } = *mass;
    let (ar, ai) = (params.a_r, params.a_i);
    match case {
        SpecialCase::IA => (
            ai * b3 - 0.5 * ar - m_i * dm_i / (2.0 * m_sq),
            ar * b3 + 0.5 * ai + m_r * dm_i / (2.0 * m_sq),
        ),
        SpecialCase::IIA => (
            ai * b3 - 0.5 * ar - m_r * dm_r / (2.0 * m_sq),
            ar * b3 + 0.5 * ai - m_i * dm_r / (2.0 * m_sq),
        ),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpecializationReport {
    pub points: usize,
    /// Points where the pipeline failed (reported, not compared).
    pub skipped: usize,
    pub max_alpha_gap: f64,
    pub max_beta_gap: f64,
    pub max_energy_gap_r: f64,
    pub max_energy_gap_i: f64,
}

pub fn specialization_check(
    case: SpecialCase,
    params: &MorseParams,
    profile: &MassProfile,
    grid: &GridSpec,
) -> Result<SpecializationReport> {
    case.check(profile)?;
    let mut rep = SpecializationReport::default();
    for at in grid.points() {
        rep.points += 1;
        let Ok(ansatz) = ansatz_params(params, profile, at) else {
            rep.skipped += 1;
            continue;
        };
        let mass = mass_at(profile, at)?;
        let (alpha, beta) = special_case_slopes(case, params, &mass, ansatz.beta3);
        rep.max_alpha_gap = libm::fmax(rep.max_alpha_gap, relative_gap(alpha, ansatz.alpha1));
        rep.max_beta_gap = libm::fmax(rep.max_beta_gap, relative_gap(beta, ansatz.beta1));
        if let (Ok(e), Ok(s)) = (energy_at(params, profile, at), special_case_energy(case, params, profile, at)) {
            rep.max_energy_gap_r = libm::fmax(rep.max_energy_gap_r, relative_gap(e.e_r, s.e_r));
            rep.max_energy_gap_i = libm::fmax(rep.max_energy_gap_i, relative_gap(e.e_i, s.e_i));
        }
    }
    Ok(rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RealityReport {
    pub points: usize,
    /// Points where the canonical quadratic produced roots.
    pub canonical_ok: usize,
    /// Largest `|E_i(root)| / max(1, |E_r(root)|)` over canonical roots.
    pub max_ei_at_root: f64,
    /// Same, restricted to roots inside the normalizable region.
    pub max_ei_at_admissible_root: f64,
    pub admissible_roots: usize,
    pub printed_ok: usize,
    pub degenerate_lambda2: usize,
    /// Largest relative gap between sorted printed and canonical roots.
    pub max_root_gap: f64,
    /// Points where both sorted roots agree to 1e-9.
    pub roots_agree: usize,
    /// Root gap with the mass slope squared in the radicand.
    pub max_squared_root_gap: f64,
    /// Largest relative gap between the printed real energy and the
    /// canonical one at the same printed root.
    pub max_er_gap: f64,
    pub er_agree: usize,
}

pub fn reality_crosscheck(
    case: RealityCase,
    params: &MorseParams,
    profile: &MassProfile,
    grid: &GridSpec,
) -> Result<RealityReport> {
    let mut rep = RealityReport::default();
    for at in grid.points() {
        rep.points += 1;
        let Ok(mass) = mass_at(profile, at) else {
            continue;
        };
        let canon = reality_roots(params, profile, at);
        if let Ok(st) = canon {
            rep.canonical_ok += 1;
            for (root, adm) in [(st.root_lo(), st.admissible.0), (st.root_hi(), st.admissible.1)] {
                let e = energy_with_beta3(params, &mass, root)?;
                let r = libm::fabs(e.e_i) / libm::fmax(1.0, libm::fabs(e.e_r));
                rep.max_ei_at_root = libm::fmax(rep.max_ei_at_root, r);
                if adm {
                    rep.admissible_roots += 1;
                    rep.max_ei_at_admissible_root = libm::fmax(rep.max_ei_at_admissible_root, r);
                }
            }
        }
        match special_case_roots(case, params, profile, at) {
            Ok(pr) => {
                rep.printed_ok += 1;
                if let Ok(st) = canon {
                    let gap = libm::fmax(
                        relative_gap(pr.root_lo(), st.root_lo()),
                        relative_gap(pr.root_hi(), st.root_hi()),
                    );
                    rep.max_root_gap = libm::fmax(rep.max_root_gap, gap);
                    if gap < 1e-9 {
                        rep.roots_agree += 1;
                    }
                    if let Ok(sq) = special_case_roots_with(case, params, profile, at, SlopeReading::Squared) {
                        let gap = libm::fmax(
                            relative_gap(sq.root_lo(), st.root_lo()),
                            relative_gap(sq.root_hi(), st.root_hi()),
                        );
                        rep.max_squared_root_gap = libm::fmax(rep.max_squared_root_gap, gap);
                    }
                }
                for (choice, root) in [(RootChoice::First, pr.first), (RootChoice::Second, pr.second)] {
                    let printed = real_energy_at_root(case, params, profile, at, choice);
                    let direct = energy_with_beta3(params, &mass, root);
                    if let (Ok(er), Ok(e)) = (printed, direct) {
                        let gap = relative_gap(er, e.e_r);
                        rep.max_er_gap = libm::fmax(rep.max_er_gap, gap);
                        if gap < 1e-9 {
                            rep.er_agree += 1;
                        }
                    }
                }
            }
            Err(Error::DegenerateLambda2) => rep.degenerate_lambda2 += 1,
            Err(Error::CaseMismatch) => return Err(Error::CaseMismatch),
            Err(_) => {}
        }
    }
    Ok(rep)
}
