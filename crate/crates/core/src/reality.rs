//! Reality of the spectrum: values of beta3 for which `E_i = 0`.
//!
//! Here beta3 is a free unknown rather than the value fixed by the matching
//! condition, and V0r plays no role. Once the phase slopes are expanded,
//! `E_i` is an exact quadratic in beta3; its roots are the canonical answer.
//! The printed closed forms for the two special profiles are evaluated
//! alongside for comparison only.

use crate::error::{Error, Result};
use crate::model::{mass_at, MassProfile, MassState, MorseParams};
use crate::phasespace::PhasePoint;
use crate::solution::{
    ansatz_params, ansatz_with_beta3, classify_region, energy_from_ansatz, EnergyPair, Region, SpecialCase,
};

/// `q2 b^2 + q1 b + q0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic {
    pub q2: f64,
    pub q1: f64,
    pub q0: f64,
}

impl Quadratic {
    pub fn eval(&self, b: f64) -> f64 {
        (self.q2 * b + self.q1) * b + self.q0
    }
}

/// Energy with beta3 overridden and the slopes recomputed from it.
pub fn energy_with_beta3(params: &MorseParams, mass: &MassState, beta3: f64) -> Result<EnergyPair> {
    energy_from_ansatz(params, mass, &ansatz_with_beta3(params, mass, beta3))
}

fn ei_coeffs_for(params: &MorseParams, mass: &MassState) -> Result<Quadratic> {
    let e0 = energy_with_beta3(params, mass, 0.0)?.e_i;
    let ep = energy_with_beta3(params, mass, 1.0)?.e_i;
    let em = energy_with_beta3(params, mass, -1.0)?.e_i;
    Ok(Quadratic {
        q2: 0.5 * (ep + em) - e0,
        q1: 0.5 * (ep - em),
        q0: e0,
    })
}

/// Coefficients of `E_i(beta3)`, read off from samples at beta3 = 0, 1, -1.
pub fn ei_quadratic_coeffs(params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<Quadratic> {
    ei_coeffs_for(params, &mass_at(profile, at)?)
}

/// Magnitude of a typical `E_i` coefficient, used to make the degeneracy
/// tests scale-free.
fn coefficient_scale(params: &MorseParams, mass: &MassState) -> f64 {
    let slope_sq = (mass.dm_r * mass.dm_r + mass.dm_i * mass.dm_i) / mass.m_sq;
    params.hbar * params.hbar * (params.a_sq() + slope_sq) / libm::sqrt(mass.m_sq)
}

const DEGENERACY_TOL: f64 = 1e-14;

/// One root (linear fallback) or two sorted roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Roots {
    One(f64),
    Two(f64, f64),
}

impl Roots {
    pub fn lo(&self) -> f64 {
        match *self {
            Roots::One(r) => r,
            Roots::Two(lo, _) => lo,
        }
    }

    /// Equal to [`Roots::lo`] for a single root.
    pub fn hi(&self) -> f64 {
        match *self {
            Roots::One(r) => r,
            Roots::Two(_, hi) => hi,
        }
    }
}

/// Real roots of `q`, falling back to the linear equation when `q2` is
/// negligible against `scale`.
pub fn solve_quadratic(q: &Quadratic, scale: f64) -> Result<Roots> {
    let Quadratic { q2, q1, q0 } = *q;
    let tiny = DEGENERACY_TOL * scale;
    if libm::fabs(q2) < tiny {
        if libm::fabs(q1) < tiny {
            return if libm::fabs(q0) < tiny {
                Err(Error::DegenerateIdentically)
            } else {
                Err(Error::NoRealRoots)
            };
        }
        return Ok(Roots::One(-q0 / q1));
    }
    let mut disc = q1 * q1 - 4.0 * q2 * q0;
    if disc < 0.0 {
        if disc > -DEGENERACY_TOL * (q1 * q1 + libm::fabs(4.0 * q2 * q0)) {
            disc = 0.0;
        } else {
            return Err(Error::NoRealRoots);
        }
    }
    // cancellation-free pair: q lands on the same side as q1
    let t = -0.5 * (q1 + libm::copysign(libm::sqrt(disc), q1));
    let (r1, r2) = if t == 0.0 {
        (0.0, 0.0)
    } else {
        (t / q2, q0 / t)
    };
    Ok(if r1 <= r2 { Roots::Two(r1, r2) } else { Roots::Two(r2, r1) })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealityState {
    /// `m_r / m_i`, absent when `m_i = 0`.
    pub mu: Option<f64>,
    /// `(m_r' - mu m_i') / m_i`
    pub dmu: Option<f64>,
    pub roots: Roots,
    /// Whether each root (lo, hi) lands in the normalizable region.
    pub admissible: (bool, bool),
}

impl RealityState {
    pub fn root_lo(&self) -> f64 {
        self.roots.lo()
    }

    pub fn root_hi(&self) -> f64 {
        self.roots.hi()
    }
}

fn admissible_at(params: &MorseParams, mass: &MassState, beta3: f64) -> bool {
    let a = ansatz_with_beta3(params, mass, beta3);
    classify_region(a.alpha1, a.beta1).region == Region::Both
}

pub fn reality_roots(params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<RealityState> {
    let mass = mass_at(profile, at)?;
    let q = ei_coeffs_for(params, &mass)?;
    let roots = solve_quadratic(&q, coefficient_scale(params, &mass))?;
    let (mu, dmu) = if mass.m_i != 0.0 {
        let mu = mass.m_r / mass.m_i;
        (Some(mu), Some((mass.dm_r - mu * mass.dm_i) / mass.m_i))
    } else {
        (None, None)
    };
    Ok(RealityState {
        mu,
        dmu,
        roots,
        admissible: (
            admissible_at(params, &mass, roots.lo()),
            admissible_at(params, &mass, roots.hi()),
        ),
    })
}

/// Profile families with printed closed-form reality roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealityCase {
    /// `dm_r/dx1 = 0`
    IB,
    /// `dm_i/dx1 = 0`
    IIB,
}

impl RealityCase {
    fn special(self) -> SpecialCase {
        match self {
            RealityCase::IB => SpecialCase::IA,
            RealityCase::IIB => SpecialCase::IIA,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialCaseCoeffs {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    /// Square root in the printed root formula (gamma1 or gamma2).
    pub gamma: f64,
}

/// Printed roots in their sign order: `first` takes the minus branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialCaseRoots {
    pub first: f64,
    pub second: f64,
    pub coeffs: SpecialCaseCoeffs,
}

impl SpecialCaseRoots {
    pub fn root_lo(&self) -> f64 {
        libm::fmin(self.first, self.second)
    }

    pub fn root_hi(&self) -> f64 {
        libm::fmax(self.first, self.second)
    }
}

/// How the mass slope enters the radicand of the printed root formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlopeReading {
    /// First power, as printed.
    #[default]
    AsPrinted,
    /// Squared slope. This is what `E_i = 0` reduces to, and with it the
    /// printed roots coincide with the canonical quadratic.
    Squared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootChoice {
    /// Minus branch.
    First,
    /// Plus branch.
    Second,
}

fn special_coeffs(
    case: RealityCase,
    params: &MorseParams,
    mass: &MassState,
    reading: SlopeReading,
) -> Result<SpecialCaseCoeffs> {
    let MassState { m_r, m_i, m_sq, .. } = *mass;
    let (ar, ai) = (params.a_r, params.a_i);
    let s = ar * ar - ai * ai;
    let lambda1 = m_r * s + m_i * (2.0 * ai * ar);
    let lambda2 = -m_i * s + m_r * (2.0 * ai * ar);
    let lambda3 = -m_i * s - m_r * (2.0 * ai * ar);
    if libm::fabs(lambda2) < DEGENERACY_TOL * libm::sqrt(m_sq) * params.a_sq() {
        return Err(Error::DegenerateLambda2);
    }
    let a4 = params.a_sq() * params.a_sq();
    let m6 = m_sq * m_sq * m_sq;
    let shape = lambda2 * (m_i * m_i - 3.0 * m_r * m_r) * m_i;
    let slope = |d: f64| match reading {
        SlopeReading::AsPrinted => d,
        SlopeReading::Squared => d * d,
    };
    let radicand = match case {
        RealityCase::IB => a4 * m6 + shape * slope(mass.dm_i),
        RealityCase::IIB => a4 * m6 - shape * slope(mass.dm_r),
    };
    if radicand < 0.0 {
        return Err(Error::NegativeUnderRoot);
    }
    Ok(SpecialCaseCoeffs {
        lambda1,
        lambda2,
        lambda3,
        gamma: libm::sqrt(radicand),
    })
}

/// Printed closed-form roots for the two special profiles.
pub fn special_case_roots(
    case: RealityCase,
    params: &MorseParams,
    profile: &MassProfile,
    at: PhasePoint,
) -> Result<SpecialCaseRoots> {
    special_case_roots_with(case, params, profile, at, SlopeReading::AsPrinted)
}

pub fn special_case_roots_with(
    case: RealityCase,
    params: &MorseParams,
    profile: &MassProfile,
    at: PhasePoint,
    reading: SlopeReading,
) -> Result<SpecialCaseRoots> {
    case.special().check(profile)?;
    let mass = mass_at(profile, at)?;
    let coeffs = special_coeffs(case, params, &mass, reading)?;
    let num = mass.m_sq * coeffs.lambda1;
    let den = 2.0 * mass.m_sq * coeffs.lambda2;
    Ok(SpecialCaseRoots {
        first: (num - coeffs.gamma) / den,
        second: (num + coeffs.gamma) / den,
        coeffs,
    })
}

/// Printed real energy at a special-case root (scaled by `hbar^2`).
pub fn real_energy_at_root(
    case: RealityCase,
    params: &MorseParams,
    profile: &MassProfile,
    at: PhasePoint,
    choice: RootChoice,
) -> Result<f64> {
    case.special().check(profile)?;
    let mass = mass_at(profile, at)?;
    let c = special_coeffs(case, params, &mass, SlopeReading::AsPrinted)?;
    let MassState { m_r, m_i, m_sq, .. } = mass;
    let a4 = params.a_sq() * params.a_sq();
    let m4 = mass.m4();
    let bracket = m_i * m_i * m_r * a4 + m_sq * params.a_i * params.a_r * c.lambda3;
    let slope_term = match case {
        RealityCase::IB => bracket * mass.dm_i * mass.dm_i,
        RealityCase::IIB => -bracket * mass.dm_r * mass.dm_r,
    };
    let branch = match choice {
        RootChoice::First => -1.0,
        RootChoice::Second => 1.0,
    };
    let e_r = (slope_term + a4 * m4 * c.lambda1 + branch * m_sq * c.gamma) / (4.0 * m4 * c.lambda2 * c.lambda2);
    let e_r = params.hbar * params.hbar * e_r;
    if e_r.is_finite() {
        Ok(e_r)
    } else {
        Err(Error::Overflow)
    }
}

/// The printed product form of the reality condition, bracket groups read as
/// multiplied with the trailing `+ 2 mu beta1` added last.
///
/// Reported as a diagnostic; it does not vanish at the canonical roots.
pub fn root_product_residual(
    params: &MorseParams,
    profile: &MassProfile,
    at: PhasePoint,
    beta3_override: Option<f64>,
) -> Result<f64> {
    let mass = mass_at(profile, at)?;
    if mass.m_i == 0.0 || mass.dm_i == 0.0 {
        return Err(Error::DivisionByZero);
    }
    let ansatz = match beta3_override {
        Some(b) => ansatz_with_beta3(params, &mass, b),
        None => ansatz_params(params, profile, at)?,
    };
    let (a1, b1) = (ansatz.alpha1, ansatz.beta1);
    let mu = mass.m_r / mass.m_i;
    let dmu = (mass.dm_r - mu * mass.dm_i) / mass.m_i;
    let mu2m1 = mu * mu - 1.0;
    let value = (1.0 + mu) * mass.dm_i / mass.m_i
        * ((a1 * a1 - b1 * b1) + 2.0 * mu * a1 * b1)
        * (dmu * mass.m_i / mass.dm_i + mu)
        * (mu2m1 * b1 + 2.0 * mu * a1)
        * mu2m1
        * a1
        + 2.0 * mu * b1;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow)
    }
}
