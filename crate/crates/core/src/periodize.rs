//! The periodization map `(Mf)(r) = Σ_k f(√(2π/N) (kN + r))` and the vectors it
//! produces.
//!
//! If `f` and `g` are an integral Fourier pair then `Φ(Mf) = Mg` (Poisson
//! summation). Periodizing Hermite functions gives Mehta's eigenvectors;
//! periodizing Gaussian-weighted `H_n(sin λt | q)` gives the pair `f_n`, `g_n`
//! with `Φ f_n = q^{n²/4} g_n`.
//!
//! Lattice sums are truncated by a certified bound taken from a
//! [`GrowthCertificate`], then confirmed by doubling the truncation index.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::envelope::GrowthCertificate;
use crate::fourier::{dft_matrix, Integrand, QuadratureSpec, SampledIntegrand};
use crate::qhermite::{classical_hermite, qinv_hermite, SinExpansion};
use crate::qseries::{i_pow, Complex, QParams, RootOfUnityParams, I};
use crate::{max_abs_diff, Error, Result};

/// When to stop summing over the lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Target accuracy relative to `max(1, Σ_k |term_k|)`.
    pub eps: f64,
    /// Largest truncation index `K` (terms `|k| <= K`) ever used.
    pub k_max: usize,
    /// Grow `K` until the bound is met and a doubling check agrees. When
    /// false, `K = k_max` is summed directly and only the bound is checked.
    pub adaptive: bool,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { eps: 1e-14, k_max: 64, adaptive: true }
    }
}

impl TruncationPolicy {
    pub fn with_eps(eps: f64) -> Self {
        TruncationPolicy { eps, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorFamily {
    /// Periodization of a caller-supplied function.
    Custom,
    /// Lattice sum of `exp(-t²/2) H_n(t)`.
    Mehta,
    /// Lattice sum of `exp(-t²/2) H_n(sin λt | q)`.
    QHermiteF,
    /// Lattice sum of `exp(-t²/2) H_n(sin iλt | 1/q)`.
    QHermiteG,
    /// The same function as [`VectorFamily::QHermiteG`] on the real branch,
    /// written as `i^n h_n(sinh κt | q)`.
    QHermiteGSinh,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorLabel {
    pub family: VectorFamily,
    pub degree: Option<usize>,
    pub params: Option<QParams>,
    /// Declared symmetry under `r -> -r mod N`.
    pub parity: Option<Parity>,
    /// Number of DFT applications, mod 4.
    pub dft_power: u8,
    pub conjugated: bool,
}

impl VectorLabel {
    pub fn new(family: VectorFamily) -> Self {
        VectorLabel { family, degree: None, params: None, parity: None, dft_power: 0, conjugated: false }
    }

    fn of_degree(family: VectorFamily, n: usize, params: Option<QParams>) -> Self {
        VectorLabel { degree: Some(n), params, parity: Some(Parity::of_degree(n)), ..Self::new(family) }
    }
}

/// A length-`N` vector produced by a truncated lattice sum.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodizedVector {
    pub size: usize,
    pub values: Vec<Complex>,
    pub label: VectorLabel,
    /// Terms `|k| <= truncation_used` were summed.
    pub truncation_used: usize,
    /// Certified bound on the discarded terms, per entry.
    pub tail_bound: f64,
    /// Absolute tolerance the truncation was run against.
    pub tolerance: f64,
}

impl PeriodizedVector {
    /// Wraps explicit values; no truncation took place.
    pub fn from_values(values: Vec<Complex>, label: VectorLabel) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        Ok(PeriodizedVector { size: values.len(), values, label, truncation_used: 0, tail_bound: 0.0, tolerance: 0.0 })
    }

    /// `max_r |v((N - r) mod N) - ε v(r)|`.
    pub fn parity_residual(&self, parity: Parity) -> f64 {
        let n = self.size;
        (0..n).map(|r| (self.values[(n - r) % n] - parity.sign() * self.values[r]).norm()).fold(0.0, f64::max)
    }

    /// Parity residual for the declared parity, if any.
    pub fn declared_parity_residual(&self) -> Option<f64> {
        self.label.parity.map(|p| self.parity_residual(p))
    }

    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        out.values.iter_mut().for_each(|z| *z = z.conj());
        out.label.conjugated = !out.label.conjugated;
        out
    }

    pub fn norm_inf(&self) -> f64 {
        crate::norm_inf(&self.values)
    }
}

#[derive(Clone, Copy, Default)]
struct Compensated {
    sum: Complex,
    comp: Complex,
}

impl Compensated {
    fn add(&mut self, x: Complex) {
        let (s, c) = neumaier(self.sum.re, x.re);
        let (t, d) = neumaier(self.sum.im, x.im);
        self.sum = Complex::new(s, t);
        self.comp += Complex::new(c, d);
    }

    fn value(&self) -> Complex {
        self.sum + self.comp
    }
}

fn neumaier(sum: f64, x: f64) -> (f64, f64) {
    let t = sum + x;
    let c = if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
    (t, c)
}

struct Summation {
    values: Vec<Complex>,
    k: usize,
    tail: f64,
    tol: f64,
}

struct Lattice<'a> {
    size: usize,
    // t = step · u
    step: f64,
    cert: GrowthCertificate,
    term: &'a dyn Fn(i64) -> Complex,
    acc: Vec<Compensated>,
    mass: Vec<f64>,
}

impl<'a> Lattice<'a> {
    fn new(size: usize, cert: GrowthCertificate, term: &'a dyn Fn(i64) -> Complex) -> Self {
        Lattice {
            size,
            step: libm::sqrt(2.0 * PI / size as f64),
            cert,
            term,
            acc: vec![Compensated::default(); size],
            mass: vec![0.0; size],
        }
    }

    fn check(&self, u: i64, value: Complex, slack: f64) -> Result<()> {
        let t = self.step * u as f64;
        let abs = value.norm();
        if !abs.is_finite() {
            return Err(Error::NonFinite("lattice term"));
        }
        let bound = self.cert.bound(t);
        if abs > bound * (1.0 + 1e-9) + slack {
            return Err(Error::CertificateViolation { t, value: abs, bound });
        }
        Ok(())
    }

    /// Adds the terms `k` and `-k` (just `k = 0` once) to every entry.
    fn add_shell(&mut self, k: usize) -> Result<()> {
        let n = self.size as i64;
        let slack = f64::EPSILON * self.max_mass();
        for r in 0..self.size {
            let ks: &[i64] = if k == 0 { &[0] } else { &[k as i64, -(k as i64)] };
            for &kk in ks {
                let u = kk * n + r as i64;
                let v = (self.term)(u);
                self.check(u, v, slack)?;
                self.acc[r].add(v);
                self.mass[r] += v.norm();
            }
        }
        Ok(())
    }

    fn max_mass(&self) -> f64 {
        self.mass.iter().copied().fold(0.0, f64::max)
    }

    fn values(&self) -> Vec<Complex> {
        self.acc.iter().map(Compensated::value).collect()
    }

    /// Bound on `Σ_{|k| > K}` for any entry: every omitted lattice point has
    /// `|u| >= KN + 1`, and points for one entry are `N` apart.
    fn tail(&self, k: usize) -> f64 {
        let t0 = self.step * (k * self.size + 1) as f64;
        let spacing = self.step * self.size as f64;
        match self.cert.tail_sum(t0, spacing) {
            Some(b) => 2.0 * b,
            None => f64::INFINITY,
        }
    }
}

fn sum_lattice(
    size: usize,
    cert: GrowthCertificate,
    term: &dyn Fn(i64) -> Complex,
    policy: &TruncationPolicy,
) -> Result<Summation> {
    if size == 0 {
        return Err(Error::InvalidArgument("N must be positive"));
    }
    if !(policy.eps > 0.0) || policy.k_max == 0 {
        return Err(Error::InvalidArgument("truncation policy needs eps > 0 and k_max >= 1"));
    }
    let roundoff = 4.0 * f64::EPSILON / 2.0;
    let mut lat = Lattice::new(size, cert, term);

    if !policy.adaptive {
        for k in 0..=policy.k_max {
            lat.add_shell(k)?;
        }
        let mass = lat.max_mass();
        let tol = policy.eps * mass.max(1.0);
        let tail = lat.tail(policy.k_max);
        if !(tail + roundoff * mass < tol) {
            return Err(Error::Truncation { k_max: policy.k_max, bound: tail + roundoff * mass, tolerance: tol });
        }
        return Ok(Summation { values: lat.values(), k: policy.k_max, tail, tol });
    }

    lat.add_shell(0)?;
    lat.add_shell(1)?;
    let mut k = 1;
    loop {
        let mass = lat.max_mass();
        let tol = policy.eps * mass.max(1.0);
        let tail = lat.tail(k);
        if tail + roundoff * mass < tol && 2 * k <= policy.k_max {
            let current = lat.values();
            for extra in (k + 1)..=(2 * k) {
                lat.add_shell(extra)?;
            }
            let doubled = lat.values();
            if max_abs_diff(&current, &doubled) < tol {
                return Ok(Summation { values: current, k, tail, tol });
            }
            k *= 2;
            continue;
        }
        if k + 1 > policy.k_max {
            return Err(Error::Truncation { k_max: policy.k_max, bound: tail + roundoff * mass, tolerance: tol });
        }
        k += 1;
        lat.add_shell(k)?;
    }
}

fn finish(size: usize, sum: Summation, label: VectorLabel) -> PeriodizedVector {
    PeriodizedVector {
        size,
        values: sum.values,
        label,
        truncation_used: sum.k,
        tail_bound: sum.tail,
        tolerance: sum.tol,
    }
}

fn lattice_step(size: usize) -> f64 {
    libm::sqrt(2.0 * PI / size as f64)
}

/// `exp(-πu²/N) = exp(-t²/2)` at `t = √(2π/N) u`, from the integer `u`.
fn lattice_gaussian(u: i64, size: usize) -> f64 {
    let u = u as f64;
    libm::exp(-PI * (u * u) / size as f64)
}

/// Periodizes `f`, which must obey `|f(t)| <= cert.bound(t)` on the real line.
pub fn periodize(
    f: impl Fn(f64) -> Complex,
    size: usize,
    cert: GrowthCertificate,
    policy: &TruncationPolicy,
) -> Result<PeriodizedVector> {
    let step = lattice_step(size.max(1));
    let term = |u: i64| f(step * u as f64);
    let sum = sum_lattice(size, cert, &term, policy)?;
    Ok(finish(size, sum, VectorLabel::new(VectorFamily::Custom)))
}

/// Mehta's vector `F_n(r) = Σ_k exp(-π(kN+r)²/N) H_n(√(2π/N)(kN+r))`.
pub fn mehta_vector(n: usize, size: usize, policy: &TruncationPolicy) -> Result<PeriodizedVector> {
    let step = lattice_step(size.max(1));
    let term = |u: i64| {
        let h = classical_hermite(n, Complex::new(step * u as f64, 0.0));
        h * lattice_gaussian(u, size)
    };
    let sum = sum_lattice(size, GrowthCertificate::hermite_function(n), &term, policy)?;
    Ok(finish(size, sum, VectorLabel::of_degree(VectorFamily::Mehta, n, None)))
}

fn qhermite_lattice(
    n: usize,
    size: usize,
    lambda: Complex,
    q: Complex,
    policy: &TruncationPolicy,
) -> Result<Summation> {
    let step = lattice_step(size.max(1));
    let poly = SinExpansion::new(n, q);
    let term = |u: i64| poly.eval(lambda * (step * u as f64)) * lattice_gaussian(u, size);
    let cert = GrowthCertificate::gaussian_q_hermite(n, lambda, q);
    sum_lattice(size, cert, &term, policy)
}

/// `f_n(r) = Σ_k exp(-π(kN+r)²/N) H_n(sin(λ√(2π/N)(kN+r)) | q)` with `λ = κ`
/// or `α_{j,M}`.
pub fn f_q_vector(
    n: usize,
    size: usize,
    params: impl Into<QParams>,
    policy: &TruncationPolicy,
) -> Result<PeriodizedVector> {
    let params = params.into();
    let sum = qhermite_lattice(n, size, params.lambda(), params.q(), policy)?;
    Ok(finish(size, sum, VectorLabel::of_degree(VectorFamily::QHermiteF, n, Some(params))))
}

/// `g_n(r) = Σ_k exp(-π(kN+r)²/N) H_n(sin(iλ√(2π/N)(kN+r)) | 1/q)`.
pub fn g_q_vector(
    n: usize,
    size: usize,
    params: impl Into<QParams>,
    policy: &TruncationPolicy,
) -> Result<PeriodizedVector> {
    let params = params.into();
    let sum = qhermite_lattice(n, size, I * params.lambda(), params.q_inv(), policy)?;
    Ok(finish(size, sum, VectorLabel::of_degree(VectorFamily::QHermiteG, n, Some(params))))
}

/// Real branch of [`g_q_vector`] through the q⁻¹-Hermite polynomial:
/// `Σ_k exp(-t²/2) i^n h_n(sinh κt | q)`.
pub fn g_q_vector_sinh(
    n: usize,
    size: usize,
    params: crate::RealQParams,
    policy: &TruncationPolicy,
) -> Result<PeriodizedVector> {
    let step = lattice_step(size.max(1));
    let (kappa, q) = (params.kappa(), Complex::new(params.q(), 0.0));
    let lead = i_pow(n as i64);
    let term = |u: i64| {
        let x = Complex::new(libm::sinh(kappa * step * u as f64), 0.0);
        // q is nonzero by construction of RealQParams
        let h = qinv_hermite(n, x, q).unwrap_or(Complex::new(f64::NAN, f64::NAN));
        lead * h * lattice_gaussian(u, size)
    };
    let cert = GrowthCertificate::gaussian_q_hermite(n, Complex::new(0.0, kappa), q.inv());
    let sum = sum_lattice(size, cert, &term, policy)?;
    let label = VectorLabel::of_degree(VectorFamily::QHermiteGSinh, n, Some(params.into()));
    Ok(finish(size, sum, label))
}

/// `‖Φ f_n - q^{n²/4} g_n‖_∞`.
pub fn verify_finite_pair(n: usize, size: usize, params: impl Into<QParams>, policy: &TruncationPolicy) -> Result<f64> {
    let params = params.into();
    let f = f_q_vector(n, size, params, policy)?;
    let g = g_q_vector(n, size, params, policy)?;
    let phi = dft_matrix(size)?;
    let lhs = phi.apply(&f.values)?;
    let qpow = params.q_pow((n * n) as f64 / 4.0);
    let rhs: Vec<Complex> = g.values.iter().map(|z| qpow * z).collect();
    Ok(max_abs_diff(&lhs, &rhs))
}

/// Root-of-unity branch, where `g_n = conj(f_n)`:
/// `(‖Φ f - q^{n²/4} f̄‖_∞, ‖Φ f̄ - (-1)^n q^{-n²/4} f‖_∞)`.
pub fn verify_conjugate_relations(
    n: usize,
    size: usize,
    params: &RootOfUnityParams,
    policy: &TruncationPolicy,
) -> Result<(f64, f64)> {
    let f = f_q_vector(n, size, *params, policy)?;
    let fbar = f.conj();
    let phi = dft_matrix(size)?;
    let p = (n * n) as f64 / 4.0;
    let (qp, qm) = (params.q_pow(p), params.q_pow(-p));
    let sign = Parity::of_degree(n).sign();

    let lhs = phi.apply(&f.values)?;
    let rhs: Vec<Complex> = fbar.values.iter().map(|z| qp * z).collect();
    let first = max_abs_diff(&lhs, &rhs);

    let lhs = phi.apply(&fbar.values)?;
    let rhs: Vec<Complex> = f.values.iter().map(|z| sign * qm * z).collect();
    Ok((first, max_abs_diff(&lhs, &rhs)))
}

/// `‖Φ(M f) - M(FT f)‖_∞`, with the transform computed pointwise by the
/// quadrature oracle. `transform_cert` must bound the transform of `f`.
pub fn verify_poisson_transfer<F: Integrand + ?Sized>(
    f: &F,
    transform_cert: GrowthCertificate,
    quadrature: &QuadratureSpec,
    size: usize,
    policy: &TruncationPolicy,
) -> Result<f64> {
    let direct = periodize(|t| f.eval(t.into()).to_complex(), size, f.certificate(), policy)?;
    let sampled = SampledIntegrand::new(f, quadrature)?;
    let transformed = periodize(
        |t| sampled.transform(Complex::new(t, 0.0)).unwrap_or(Complex::new(f64::NAN, f64::NAN)),
        size,
        transform_cert,
        policy,
    )?;
    let phi = dft_matrix(size)?;
    Ok(max_abs_diff(&phi.apply(&direct.values)?, &transformed.values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::{GaussianQHermite, HermiteFunction};
    use crate::{RealQParams, RootOfUnityParams};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn policy() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    #[test]
    fn zero_function() {
        let v = periodize(|_| c(0.0, 0.0), 5, GrowthCertificate::new(0.0, 0.0, 0.5), &policy()).unwrap();
        assert!(v.values.iter().all(|z| *z == c(0.0, 0.0)));
    }

    #[test]
    fn theta_value() {
        let direct: f64 = (-6i64..=6).map(|k| libm::exp(-PI * (k * k) as f64)).sum();
        let v = periodize(|t| c(libm::exp(-t * t / 2.0), 0.0), 1, GrowthCertificate::gaussian(), &policy()).unwrap();
        assert!((v.values[0].re - direct).abs() < 1e-15);
        assert!((direct - 1.086_434_811_213_308).abs() < 1e-15);
        let m = mehta_vector(0, 1, &policy()).unwrap();
        assert!((m.values[0].re - direct).abs() < 1e-15);
        assert!(v.tail_bound < v.tolerance);
    }

    #[test]
    fn even_function_is_symmetric() {
        let v =
            periodize(|t| c(libm::exp(-t * t / 2.0) * libm::cos(t), 0.0), 7, GrowthCertificate::gaussian(), &policy())
                .unwrap();
        assert!(v.parity_residual(Parity::Even) < 1e-12);
    }

    #[test]
    fn mehta_parity() {
        for n in [1, 3, 5] {
            let v = mehta_vector(n, 6, &policy()).unwrap();
            assert!(v.values[0].norm() < 1e-12);
            assert!(v.declared_parity_residual().unwrap() < 1e-10 * v.norm_inf().max(1.0));
        }
        let v = mehta_vector(1, 4, &policy()).unwrap();
        assert!(v.values[2].norm() < 1e-12);
    }

    #[test]
    fn mehta_is_eigenvector() {
        for size in [3, 4, 5, 8, 16] {
            let phi = dft_matrix(size).unwrap();
            for n in 0..=size {
                let v = mehta_vector(n, size, &policy()).unwrap();
                let out = phi.apply(&v.values).unwrap();
                let expected: Vec<Complex> = v.values.iter().map(|z| i_pow(n as i64) * z).collect();
                let rel = max_abs_diff(&out, &expected) / v.norm_inf().max(1.0);
                assert!(rel < 1e-12, "N={size} n={n}: {rel}");
            }
        }
    }

    #[test]
    fn truncation_failure_names_cap() {
        let p = TruncationPolicy::with_eps(1e-30);
        match mehta_vector(2, 5, &p) {
            Err(Error::Truncation { k_max, .. }) => assert_eq!(k_max, 64),
            other => panic!("{other:?}"),
        }
        let fixed = TruncationPolicy { adaptive: false, k_max: 8, eps: 1e-14 };
        let a = mehta_vector(3, 5, &fixed).unwrap();
        let b = mehta_vector(3, 5, &policy()).unwrap();
        assert!(max_abs_diff(&a.values, &b.values) < 1e-13 * a.norm_inf());
    }

    #[test]
    fn doubling_robustness() {
        let p = RootOfUnityParams::new(1, 3).unwrap();
        let v = f_q_vector(4, 8, p, &policy()).unwrap();
        let wide = TruncationPolicy { adaptive: false, k_max: 2 * v.truncation_used, eps: 1e-14 };
        let w = f_q_vector(4, 8, p, &wide).unwrap();
        assert!(max_abs_diff(&v.values, &w.values) < v.tolerance);
    }

    #[test]
    fn certificate_violation_is_reported() {
        let r = periodize(|t| c(1.0 + t * t, 0.0), 3, GrowthCertificate::gaussian(), &policy());
        assert!(matches!(r, Err(Error::CertificateViolation { .. })));
    }

    #[test]
    fn degree_zero_reduces_to_gaussian() {
        let m = mehta_vector(0, 5, &policy()).unwrap();
        let p = RootOfUnityParams::new(1, 3).unwrap();
        let f = f_q_vector(0, 5, p, &policy()).unwrap();
        let g = g_q_vector(0, 5, p, &policy()).unwrap();
        assert!(max_abs_diff(&m.values, &f.values) < 1e-15);
        assert!(max_abs_diff(&m.values, &g.values) < 1e-15);
    }

    #[test]
    fn g_is_conjugate_of_f_at_roots_of_unity() {
        for (j, m) in [(1, 3), (1, 4)] {
            let p = RootOfUnityParams::new(j, m).unwrap();
            for size in [5, 8] {
                for n in 0..=6 {
                    let f = f_q_vector(n, size, p, &policy()).unwrap();
                    let g = g_q_vector(n, size, p, &policy()).unwrap();
                    let d = max_abs_diff(&g.values, &f.conj().values);
                    assert!(d < 1e-10, "n={n} N={size} M={m}: {d}");
                    assert!(f.declared_parity_residual().unwrap() < 1e-10);
                    if n % 2 == 1 {
                        assert!(f.values[0].norm() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn sinh_form_agrees() {
        let p = RealQParams::from_q(0.6).unwrap();
        for n in 0..=4 {
            let a = g_q_vector(n, 5, p, &policy()).unwrap();
            let b = g_q_vector_sinh(n, 5, p, &policy()).unwrap();
            assert!(max_abs_diff(&a.values, &b.values) < 1e-10, "n={n}");
        }
    }

    #[test]
    fn finite_pair() {
        let real = RealQParams::from_q(0.5).unwrap();
        let root = RootOfUnityParams::new(1, 4).unwrap();
        for size in [5, 8] {
            for n in 0..=6 {
                let r = verify_finite_pair(n, size, real, &policy()).unwrap();
                assert!(r < 1e-8, "real n={n} N={size}: {r}");
                let r = verify_finite_pair(n, size, root, &policy()).unwrap();
                assert!(r < 1e-8, "root n={n} N={size}: {r}");
            }
        }
    }

    #[test]
    fn conjugate_relations() {
        for (n, size, j, m) in [(0, 5, 1, 3), (3, 8, 1, 3), (4, 5, 2, 5)] {
            let p = RootOfUnityParams::new(j, m).unwrap();
            let (a, b) = verify_conjugate_relations(n, size, &p, &policy()).unwrap();
            assert!(a < 1e-8 && b < 1e-8, "({n},{size},{j},{m}): {a} {b}");
        }
    }

    #[test]
    fn poisson_transfer_hermite() {
        let f = HermiteFunction { n: 3 };
        let cert = f.certificate();
        let spec = QuadratureSpec::for_degree(3, 0.0, &cert).unwrap();
        // the transform of exp(-x²/2) H_3 is -i times itself
        let r = verify_poisson_transfer(&f, cert, &spec, 5, &policy()).unwrap();
        assert!(r < 1e-8, "{r}");
    }

    #[test]
    fn poisson_transfer_qhermite() {
        let p = RootOfUnityParams::new(1, 3).unwrap();
        let f = GaussianQHermite::new(2, p.alpha(), p.q());
        let spec = QuadratureSpec::for_degree(2, p.alpha().im, &f.certificate()).unwrap();
        let tc = GrowthCertificate::gaussian_q_hermite(2, p.alpha().conj(), p.q_inv());
        let r = verify_poisson_transfer(&f, tc, &spec, 4, &policy()).unwrap();
        assert!(r < 1e-8, "{r}");
    }
}
