//! Composite Gauss-Legendre quadrature on a finite interval.

use crate::error::{Error, Result};

const ORDER: usize = 16;

/// Nodes and weights of the `ORDER`-point rule on [-1, 1].
#[derive(Debug, Clone, Copy)]
pub struct GaussLegendre {
    nodes: [f64; ORDER],
    weights: [f64; ORDER],
}

impl GaussLegendre {
    /// Newton iteration on P_n from the Chebyshev-like initial guesses.
    pub fn new() -> Self {
        let n = ORDER;
        let mut nodes = [0.0; ORDER];
        let mut weights = [0.0; ORDER];
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if libm::fabs(dx) < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Integral of `f` over [lo, hi] split into `panels` equal pieces.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: &F, lo: f64, hi: f64, panels: usize) -> f64 {
        let width = (hi - lo) / panels as f64;
        let mut total = 0.0;
        for k in 0..panels {
            let a = lo + width * k as f64;
            let mid = a + 0.5 * width;
            let mut s = 0.0;
            for (x, w) in self.nodes.iter().zip(self.weights.iter()) {
                s += w * f(mid + 0.5 * width * x);
            }
            total += 0.5 * width * s;
        }
        total
    }

    /// Doubles the panel count until successive estimates agree to `tol`
    /// (relative). Fails with `Overflow` if that never happens.
    pub fn integrate_adaptive<F: Fn(f64) -> f64>(&self, f: &F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
        let mut panels = 1;
        let mut prev = self.integrate(f, lo, hi, panels);
        while panels < 1 << 14 {
            panels *= 2;
            let next = self.integrate(f, lo, hi, panels);
            if libm::fabs(next - prev) <= tol * libm::fmax(libm::fabs(next), f64::MIN_POSITIVE) {
                return Ok(next);
            }
            prev = next;
        }
        Err(Error::Overflow)
    }
}

impl Default for GaussLegendre {
    fn default() -> Self {
        Self::new()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        let gl = GaussLegendre::new();
        let s: f64 = gl.weights.iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
    }

    #[test]
    fn exact_for_high_degree_polynomials() {
        let gl = GaussLegendre::new();
        let v = gl.integrate(&|x: f64| x.powi(30), -1.0, 1.0, 1);
        assert!((v - 2.0 / 31.0).abs() < 1e-14);
    }

    #[test]
    fn exponential_tail() {
        let gl = GaussLegendre::new();
        let v = gl.integrate_adaptive(&|x: f64| libm::exp(-2.0 * x), 0.0, 20.0, 1e-13).unwrap();
        assert!((v - 0.5 * (1.0 - libm::exp(-40.0))).abs() < 1e-13);
    }
}
