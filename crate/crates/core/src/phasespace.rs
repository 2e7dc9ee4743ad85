//! Coordinates of the (x1, p2) plane and finite-difference operators on it.
//!
//! A complex coordinate `x = x1 + i p2` is split into two real axes. Fields are
//! plain closures from [`PhasePoint`] to [`ComplexValue`]; nothing is cached,
//! so every operator here is a pure function of the callback.

use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A complex number stored as its real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Add for ComplexValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for ComplexValue {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

/// A point `x = x1 + i p2` of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhasePoint {
    pub x1: f64,
    pub p2: f64,
}

impl PhasePoint {
    pub const ORIGIN: Self = Self { x1: 0.0, p2: 0.0 };

    pub const fn new(x1: f64, p2: f64) -> Self {
        Self { x1, p2 }
    }

    fn shifted(self, dx1: f64, dp2: f64) -> Self {
        Self::new(self.x1 + dx1, self.p2 + dp2)
    }
}

/// Coordinate direction for a partial derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X1,
    P2,
}

/// Default relative step: `1e-4 * max(1, |coordinate|)`, using the larger of
/// the two coordinates.
pub fn default_step(at: PhasePoint) -> f64 {
    1e-4 * libm::fmax(1.0, libm::fmax(libm::fabs(at.x1), libm::fabs(at.p2)))
}

fn check_step(step: f64) -> Result<()> {
    if step > 0.0 && step.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter("step must be positive and finite"))
    }
}

fn sample<F>(field: &F, at: PhasePoint) -> Result<ComplexValue>
where
    F: Fn(PhasePoint) -> ComplexValue,
{
    let v = field(at);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteField)
    }
}

fn offset(axis: Axis, h: f64) -> (f64, f64) {
    match axis {
        Axis::X1 => (h, 0.0),
        Axis::P2 => (0.0, h),
    }
}

/// Second-order central first derivative along `axis`.
pub fn partial<F>(field: &F, at: PhasePoint, axis: Axis, step: f64) -> Result<ComplexValue>
where
    F: Fn(PhasePoint) -> ComplexValue,
{
    check_step(step)?;
    let (dx, dp) = offset(axis, step);
    let fwd = sample(field, at.shifted(dx, dp))?;
    let bwd = sample(field, at.shifted(-dx, -dp))?;
    Ok((fwd - bwd).scale(0.5 / step))
}

/// Second-order central second derivative along `axis`.
pub fn second_partial<F>(field: &F, at: PhasePoint, axis: Axis, step: f64) -> Result<ComplexValue>
where
    F: Fn(PhasePoint) -> ComplexValue,
{
    check_step(step)?;
    let (dx, dp) = offset(axis, step);
    let fwd = sample(field, at.shifted(dx, dp))?;
    let mid = sample(field, at)?;
    let bwd = sample(field, at.shifted(-dx, -dp))?;
    Ok((fwd + bwd - mid.scale(2.0)).scale(1.0 / (step * step)))
}

/// Richardson-extrapolated first derivative: `(4 D(h/2) - D(h)) / 3`.
pub fn partial_richardson<F>(field: &F, at: PhasePoint, axis: Axis, step: f64) -> Result<ComplexValue>
where
    F: Fn(PhasePoint) -> ComplexValue,
{
    let coarse = partial(field, at, axis, step)?;
    let fine = partial(field, at, axis, 0.5 * step)?;
    Ok((fine.scale(4.0) - coarse).scale(1.0 / 3.0))
}

/// `d/dx = (d/dx1 - i d/dp2) / 2`, by central differences.
///
/// For a field analytic in `x = x1 + i p2` this is the ordinary complex
/// derivative.
pub fn complex_derivative<F>(field: F, at: PhasePoint, step: f64) -> Result<ComplexValue>
where
    F: Fn(PhasePoint) -> ComplexValue,
{
    let dx1 = partial(&field, at, Axis::X1, step)?;
    let dp2 = partial(&field, at, Axis::P2, step)?;
    // -i * dp2 = (dp2.im, -dp2.re)
    Ok(ComplexValue::new(dx1.re + dp2.im, dx1.im - dp2.re).scale(0.5))
}

/// Cauchy-Riemann residuals of the pair `(u, v)`:
/// `r1 = u_x1 - v_p2`, `r2 = u_p2 + v_x1`.
pub fn cr_residual<U, V>(u: U, v: V, at: PhasePoint, step: f64) -> Result<(f64, f64)>
where
    U: Fn(PhasePoint) -> f64,
    V: Fn(PhasePoint) -> f64,
{
    let field = |p: PhasePoint| ComplexValue::new(u(p), v(p));
    let dx1 = partial(&field, at, Axis::X1, step)?;
    let dp2 = partial(&field, at, Axis::P2, step)?;
    Ok((dx1.re - dp2.im, dp2.re + dx1.im))
}
