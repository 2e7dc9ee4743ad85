//! Potential parameters, linear-analytic mass profiles and the split complex
//! Morse potential `V(x) = V0 (e^{-2ax} - 2 e^{-ax})`.
//!
//! Mass derivatives (`dm_r`, `dm_i`) are taken along x1. For an analytic
//! profile the Cauchy-Riemann conditions make this the same as the complex
//! derivative dM/dx; the Wirtinger reading `d/dx` of a non-analytic profile
//! would differ, but such profiles are not representable here.

use crate::error::{Error, Result};
use crate::phasespace::{ComplexValue, PhasePoint};

/// Complex well depth `V0 = v0r + i v0i`, complex range `a = a_r + i a_i`,
/// and the reduced Planck constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseParams {
    pub v0r: f64,
    pub v0i: f64,
    pub a_r: f64,
    pub a_i: f64,
    pub hbar: f64,
}

impl MorseParams {
    pub fn new(v0r: f64, v0i: f64, a_r: f64, a_i: f64, hbar: f64) -> Result<Self> {
        let all = [v0r, v0i, a_r, a_i, hbar];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("potential parameters must be finite"));
        }
        if hbar <= 0.0 {
            return Err(Error::InvalidParameter("hbar must be positive"));
        }
        if a_r == 0.0 && a_i == 0.0 {
            return Err(Error::InvalidParameter("range parameter a must be nonzero"));
        }
        Ok(Self { v0r, v0i, a_r, a_i, hbar })
    }

    /// `|a|^2`
    pub fn a_sq(&self) -> f64 {
        self.a_r * self.a_r + self.a_i * self.a_i
    }

    /// Same parameters with `v0i` replaced.
    pub fn with_v0i(self, v0i: f64) -> Self {
        Self { v0i, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MassKind {
    /// `m_r = c x1 - d p2 + e1`, `m_i = d x1 + c p2 + e2`.
    GeneralLinear,
    /// `c = 0`: the real part does not vary along x1.
    CaseIA,
    /// `d = 0`: the imaginary part does not vary along x1.
    CaseIIA,
    Constant,
}

/// Linear analytic mass `M(x) = (c + i d) x + (e1 + i e2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassProfile {
    kind: MassKind,
    c: f64,
    d: f64,
    e1: f64,
    e2: f64,
}

impl MassProfile {
    /// Validates that the slopes agree with `kind`.
    pub fn new(kind: MassKind, c: f64, d: f64, e1: f64, e2: f64) -> Result<Self> {
        if ![c, d, e1, e2].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParameter("mass constants must be finite"));
        }
        match kind {
            MassKind::CaseIA if c != 0.0 => Err(Error::InvalidParameter("case I(a) requires c = 0")),
            MassKind::CaseIIA if d != 0.0 => Err(Error::InvalidParameter("case II(a) requires d = 0")),
            MassKind::Constant if c != 0.0 || d != 0.0 => {
                Err(Error::InvalidParameter("constant mass requires c = d = 0"))
            }
            _ => Ok(Self { kind, c, d, e1, e2 }),
        }
    }

    pub fn general_linear(c: f64, d: f64, e1: f64, e2: f64) -> Result<Self> {
        Self::new(MassKind::GeneralLinear, c, d, e1, e2)
    }

    pub fn case_ia(d: f64, e1: f64, e2: f64) -> Result<Self> {
        Self::new(MassKind::CaseIA, 0.0, d, e1, e2)
    }

    pub fn case_iia(c: f64, e1: f64, e2: f64) -> Result<Self> {
        Self::new(MassKind::CaseIIA, c, 0.0, e1, e2)
    }

    pub fn constant(e1: f64, e2: f64) -> Result<Self> {
        Self::new(MassKind::Constant, 0.0, 0.0, e1, e2)
    }

    pub fn kind(&self) -> MassKind {
        self.kind
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn e1(&self) -> f64 {
        self.e1
    }

    pub fn e2(&self) -> f64 {
        self.e2
    }

    /// Components without the positivity check.
    pub fn components(&self, at: PhasePoint) -> (f64, f64) {
        (
            self.c * at.x1 - self.d * at.p2 + self.e1,
            self.d * at.x1 + self.c * at.p2 + self.e2,
        )
    }
}

/// Mass and its x1-slopes at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassState {
    pub m_r: f64,
    pub m_i: f64,
    pub dm_r: f64,
    pub dm_i: f64,
    /// `|M|^2 = m_r^2 + m_i^2`
    pub m_sq: f64,
}

impl MassState {
    /// Builds a state from raw components, enforcing `m_r > 0`.
    pub fn new(m_r: f64, m_i: f64, dm_r: f64, dm_i: f64) -> Result<Self> {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(m_r > 0.0) || !m_i.is_finite() || !dm_r.is_finite() || !dm_i.is_finite() {
            return Err(Error::MassPositivityViolation);
        }
        Ok(Self {
            m_r,
            m_i,
            dm_r,
            dm_i,
            m_sq: m_r * m_r + m_i * m_i,
        })
    }

    /// `|M|^4`
    pub fn m4(&self) -> f64 {
        self.m_sq * self.m_sq
    }
}

pub fn mass_at(profile: &MassProfile, at: PhasePoint) -> Result<MassState> {
    let (m_r, m_i) = profile.components(at);
    MassState::new(m_r, m_i, profile.c, profile.d)
}

/// `X = a_r x1 - a_i p2`, `Y = a_i x1 + a_r p2`, i.e. `X + iY = a x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledCoordinates {
    pub x: f64,
    pub y: f64,
}

pub fn scaled_coords(params: &MorseParams, at: PhasePoint) -> ScaledCoordinates {
    ScaledCoordinates {
        x: params.a_r * at.x1 - params.a_i * at.p2,
        y: params.a_i * at.x1 + params.a_r * at.p2,
    }
}

const OVERFLOW_LIMIT: f64 = 1e300;

/// Split potential `(V_r, V_i)`.
pub fn potential_at(params: &MorseParams, at: PhasePoint) -> Result<ComplexValue> {
    let s = scaled_coords(params, at);
    if s.x < -300.0 {
        // |V| ~ |V0| e^{-2X} for large negative X; decide in log space.
        let log_mag = libm::log(libm::hypot(params.v0r, params.v0i)) - 2.0 * s.x;
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(log_mag < libm::log(OVERFLOW_LIMIT)) {
            return Err(Error::Overflow);
        }
    }
    let e1 = libm::exp(-s.x);
    let e2 = e1 * e1;
    let cos_part = e2 * libm::cos(2.0 * s.y) - 2.0 * e1 * libm::cos(s.y);
    let sin_part = e2 * libm::sin(2.0 * s.y) - 2.0 * e1 * libm::sin(s.y);
    let v = ComplexValue::new(
        params.v0r * cos_part + params.v0i * sin_part,
        params.v0i * cos_part - params.v0r * sin_part,
    );
    if !v.is_finite() || v.abs() > OVERFLOW_LIMIT {
        return Err(Error::Overflow);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mass_examples() {
        let gl = MassProfile::general_linear(0.1, 0.05, 1.0, 0.2).unwrap();
        let m = mass_at(&gl, PhasePoint::ORIGIN).unwrap();
        assert_eq!((m.m_r, m.m_i, m.dm_r, m.dm_i), (1.0, 0.2, 0.1, 0.05));
        assert!((m.m_sq - 1.04).abs() < 1e-15);

        let k = MassProfile::constant(1.0, 0.0).unwrap();
        let m = mass_at(&k, PhasePoint::new(5.0, -3.0)).unwrap();
        assert_eq!((m.m_r, m.m_i, m.dm_r, m.dm_i, m.m_sq), (1.0, 0.0, 0.0, 0.0, 1.0));

        let bad = MassProfile::general_linear(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(mass_at(&bad, PhasePoint::new(-1.0, 0.0)), Err(Error::MassPositivityViolation));
    }

    #[test]
    fn profile_kind_invariants() {
        assert!(MassProfile::new(MassKind::CaseIA, 0.1, 0.05, 1.0, 0.0).is_err());
        assert!(MassProfile::new(MassKind::CaseIIA, 0.1, 0.05, 1.0, 0.0).is_err());
        assert!(MassProfile::new(MassKind::Constant, 0.0, 0.05, 1.0, 0.0).is_err());
        assert_eq!(MassProfile::case_ia(0.05, 1.0, 0.2).unwrap().c(), 0.0);
        assert_eq!(MassProfile::case_iia(0.1, 1.0, 0.2).unwrap().d(), 0.0);
    }

    #[test]
    fn params_invariants() {
        assert!(MorseParams::new(0.5, 0.0, 0.0, 0.0, 1.0).is_err());
        assert!(MorseParams::new(0.5, 0.0, 1.0, 0.0, 0.0).is_err());
        assert!(MorseParams::new(f64::NAN, 0.0, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn scaled_coordinate_examples() {
        let p = MorseParams::new(0.5, 0.0, 1.0, 0.5, 1.0).unwrap();
        let s = scaled_coords(&p, PhasePoint::ORIGIN);
        assert_eq!((s.x, s.y), (0.0, 0.0));
        let s = scaled_coords(&p, PhasePoint::new(1.0, 0.0));
        assert_eq!((s.x, s.y), (1.0, 0.5));
        let s = scaled_coords(&p, PhasePoint::new(0.0, 1.0));
        assert_eq!((s.x, s.y), (-0.5, 1.0));
    }

    #[test]
    fn potential_limits() {
        let p = MorseParams::new(0.7, -0.3, 1.2, 0.4, 1.0).unwrap();
        let v = potential_at(&p, PhasePoint::ORIGIN).unwrap();
        assert_eq!((v.re, v.im), (-0.7, 0.3));

        let far = potential_at(&p, PhasePoint::new(80.0, 0.0)).unwrap();
        assert!(far.abs() < 1e-30);

        assert_eq!(potential_at(&p, PhasePoint::new(-400.0, 0.0)), Err(Error::Overflow));
        // e^{-2X} ~ e^{696}: representable, still above the 1e300 cap
        assert_eq!(potential_at(&p, PhasePoint::new(-290.0, 0.0)), Err(Error::Overflow));
        assert!(potential_at(&p, PhasePoint::new(-260.0, 0.0)).unwrap().is_finite());
    }
}
