//! Gaussian growth certificates.
//!
//! A [`GrowthCertificate`] asserts `|f(t)| <= c0 · exp(-a t² + c1 |t|)` for all
//! real `t`. Quadrature uses it to check that the integration window is wide
//! enough; periodization uses it to bound the discarded tail of a lattice sum.

use crate::qseries::{q_binomial_row, Complex};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthCertificate {
    /// `c0`
    pub amplitude: f64,
    /// `c1`
    pub linear: f64,
    /// `a`, strictly positive
    pub quadratic: f64,
}

impl GrowthCertificate {
    pub const fn new(amplitude: f64, linear: f64, quadratic: f64) -> Self {
        GrowthCertificate { amplitude, linear, quadratic }
    }

    /// `|f(t)| <= c0 exp(-t²/4 + c1|t|)`.
    pub const fn quarter_gaussian(amplitude: f64, linear: f64) -> Self {
        Self::new(amplitude, linear, 0.25)
    }

    /// The pure Gaussian `exp(-t²/2)`.
    pub const fn gaussian() -> Self {
        Self::new(1.0, 0.0, 0.5)
    }

    /// Bound for `exp(-t²/2) H_n(t)`: `|H_n(t)| e^{-t²/4} <= Σ_k |h_k| sup_t |t|^k e^{-t²/4}`
    /// with `sup_t t^k e^{-t²/4} = (2k/e)^{k/2}`.
    pub fn hermite_function(n: usize) -> Self {
        let coeffs = hermite_coefficients(n);
        let amplitude = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let sup = if k == 0 { 1.0 } else { libm::pow(2.0 * k as f64 / core::f64::consts::E, k as f64 / 2.0) };
                c.abs() * sup
            })
            .sum();
        Self::quarter_gaussian(amplitude, 0.0)
    }

    /// Bound for `exp(-t²/2) H_n(sin(λt) | q)` from the `n + 1` exponentials
    /// of the sine expansion: `|e^{i(2k-n)λt}| <= e^{n |Im λ| |t|}`.
    pub fn gaussian_q_hermite(n: usize, lambda: Complex, q: Complex) -> Self {
        let amplitude: f64 = q_binomial_row(n, q).iter().map(|b| b.norm()).sum();
        Self::new(amplitude, n as f64 * lambda.im.abs(), 0.5)
    }

    pub fn bound(&self, t: f64) -> f64 {
        let t = t.abs();
        self.amplitude * libm::exp(-self.quadratic * t * t + self.linear * t)
    }

    /// Location of the envelope maximum; the bound decreases beyond it.
    pub fn peak(&self) -> f64 {
        self.linear / (2.0 * self.quadratic)
    }

    /// Bound on `Σ_{m >= 0} g(t0 + m·step)` for the envelope `g`, valid once
    /// `t0` lies past the peak. Uses the geometric ratio of consecutive terms.
    pub fn tail_sum(&self, t0: f64, step: f64) -> Option<f64> {
        if self.amplitude == 0.0 {
            return Some(0.0);
        }
        if t0 < self.peak() {
            return None;
        }
        let a = self.quadratic;
        let decay = step * (2.0 * a * t0 + a * step - self.linear);
        if decay <= 0.0 {
            return None;
        }
        let ratio = libm::exp(-decay);
        Some(self.bound(t0) / (1.0 - ratio))
    }
}

/// Monomial coefficients of the physicists' Hermite polynomial `H_n`.
pub(crate) fn hermite_coefficients(n: usize) -> alloc::vec::Vec<f64> {
    use alloc::vec;
    let mut prev = vec![0.0; n + 1];
    let mut cur = vec![0.0; n + 1];
    cur[0] = 1.0;
    for k in 0..n {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        let mut next = vec![0.0; n + 1];
        for d in 0..=k {
            next[d + 1] += 2.0 * cur[d];
            next[d] -= 2.0 * k as f64 * prev[d];
        }
        prev = cur;
        cur = next;
    }
    cur
}
