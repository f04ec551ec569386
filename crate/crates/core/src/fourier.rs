//! The finite Fourier transform and a quadrature oracle for the integral one.
//!
//! [`DftOperator`] is the unitary matrix `Φ_rs = exp(2πi rs/N)/√N`, applied
//! densely. The integral transform `(1/√2π) ∫ e^{ixy} f(x) dx` is approximated
//! on `[-L, L]` by a trapezoid rule on an exactly representable grid, with the
//! integrand sampled in double-double precision. The extra precision is what
//! lets the oracle resolve transforms of root-of-unity integrands whose samples
//! are many orders of magnitude larger than the result.

use alloc::vec::Vec;

use crate::dd::{self, Dd, DdComplex};
use crate::envelope::GrowthCertificate;
use crate::linalg::Matrix;
use crate::periodize::PeriodizedVector;
use crate::qhermite::{classical_hermite, qhermite_sin, qinv_hermite};
use crate::qseries::{cis_fraction, i_pow, q_binomial_row, Complex, RealQParams, RootOfUnityParams, I};
use crate::{Error, Result};

/// Unitary DFT matrix of size `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct DftOperator {
    size: usize,
    matrix: Matrix,
}

/// `Φ_rs = exp(2πi rs/N)/√N`; exponents are reduced mod `N` before evaluation.
pub fn dft_matrix(n: usize) -> Result<DftOperator> {
    if n == 0 {
        return Err(Error::InvalidArgument("DFT size must be positive"));
    }
    let norm = 1.0 / libm::sqrt(n as f64);
    let matrix = Matrix::from_fn(n, n, |r, s| cis_fraction(((r * s) % n) as i64, n as i64) * norm);
    Ok(DftOperator { size: n, matrix })
}

impl DftOperator {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Complex]) -> Result<Vec<Complex>> {
        self.matrix.mul_vec(v)
    }
}

/// `Φ v` for a periodized vector; the label records one more transform.
pub fn apply_dft(op: &DftOperator, v: &PeriodizedVector) -> Result<PeriodizedVector> {
    let values = op.apply(&v.values)?;
    let mut out = v.clone();
    out.values = values;
    out.label.dft_power = (out.label.dft_power + 1) % 4;
    Ok(out)
}

/// Integrand envelope required at `±L`.
pub const ENVELOPE_TOL: f64 = 1e-16;
pub const DEFAULT_POINTS: usize = 4096;
const MAX_HALF_WIDTH: f64 = 4096.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    /// Composite trapezoid with `points` subintervals.
    Trapezoid,
    /// `points`-node Gauss-Legendre. Nodes and weights are only double
    /// precision, so integrands with large cancellation lose digits here.
    GaussLegendre,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    half_width: f64,
    points: usize,
    rule: QuadratureRule,
}

impl QuadratureSpec {
    /// Rejects a window whose certified envelope at `±L` is not below
    /// [`ENVELOPE_TOL`].
    pub fn new(half_width: f64, points: usize, rule: QuadratureRule, cert: &GrowthCertificate) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) || points < 2 {
            return Err(Error::InvalidArgument("quadrature needs L > 0 and at least two points"));
        }
        let spec = QuadratureSpec { half_width, points, rule };
        spec.check_envelope(cert)?;
        Ok(spec)
    }

    /// Trapezoid on `L = max(8, 3(n+1) max(1, |Im λ|))`, rounded up to an
    /// integer and widened until the envelope check passes, with
    /// [`DEFAULT_POINTS`] subintervals.
    pub fn for_degree(n: usize, lambda_im: f64, cert: &GrowthCertificate) -> Result<Self> {
        let mut half_width = libm::ceil(f64::max(8.0, 3.0 * (n as f64 + 1.0) * f64::max(1.0, lambda_im.abs())));
        while half_width < cert.peak() || cert.bound(half_width) >= ENVELOPE_TOL {
            half_width += 1.0;
            if half_width > MAX_HALF_WIDTH {
                return Err(Error::Envelope { half_width, envelope: cert.bound(half_width) });
            }
        }
        Self::new(half_width, DEFAULT_POINTS, QuadratureRule::Trapezoid, cert)
    }

    pub fn check_envelope(&self, cert: &GrowthCertificate) -> Result<()> {
        let envelope =
            if self.half_width < cert.peak() { cert.bound(cert.peak()) } else { cert.bound(self.half_width) };
        if !(envelope < ENVELOPE_TOL) {
            return Err(Error::Envelope { half_width: self.half_width, envelope });
        }
        Ok(())
    }

    /// Same rule with `L` and the number of points both doubled.
    pub fn doubled(&self) -> Self {
        QuadratureSpec { half_width: 2.0 * self.half_width, points: 2 * self.points, rule: self.rule }
    }

    pub fn with_rule(self, rule: QuadratureRule) -> Self {
        QuadratureSpec { rule, ..self }
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }

    fn nodes(&self) -> Vec<(Dd, Dd)> {
        let l = self.half_width;
        match self.rule {
            QuadratureRule::Trapezoid => {
                let intervals = self.points as f64;
                let h = Dd::from_f64(2.0 * l) / Dd::from_f64(intervals);
                (0..=self.points)
                    .map(|k| {
                        // exact for integer L and power-of-two point counts
                        let x = Dd::from_f64(2.0 * l * k as f64) / Dd::from_f64(intervals) - Dd::from_f64(l);
                        let w = if k == 0 || k == self.points { h.mul_pow2(-1) } else { h };
                        (x, w)
                    })
                    .collect()
            }
            QuadratureRule::GaussLegendre => gauss_legendre(self.points)
                .into_iter()
                .map(|(x, w)| (Dd::from_f64(x * l), Dd::from_f64(w * l)))
                .collect(),
        }
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let half = n.div_ceil(2);
    let mut tail = Vec::with_capacity(half);
    for i in 0..half {
        let mut x = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 0 { 1.0 } else { p1 };
            dp = n as f64 * (x * p - p0) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        tail.push((x, w));
    }
    for &(x, w) in tail.iter() {
        out.push((-x, w));
    }
    let skip_middle = n % 2 == 1;
    for (i, &(x, w)) in tail.iter().enumerate().rev() {
        if skip_middle && i == half - 1 {
            continue;
        }
        out.push((x, w));
    }
    out
}

/// A function sampled by the quadrature oracle, with a growth certificate
/// valid on the whole real line.
pub trait Integrand {
    fn eval(&self, x: Dd) -> DdComplex;
    fn certificate(&self) -> GrowthCertificate;
}

fn gaussian_dd(x: Dd) -> Dd {
    (-x.sqr().mul_pow2(-1)).exp()
}

/// `exp(-x²/2)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Gaussian;

impl Integrand for Gaussian {
    fn eval(&self, x: Dd) -> DdComplex {
        DdComplex::from_real(gaussian_dd(x))
    }

    fn certificate(&self) -> GrowthCertificate {
        GrowthCertificate::gaussian()
    }
}

/// `exp(-x²/2) H_n(x)`.
#[derive(Debug, Clone, Copy)]
pub struct HermiteFunction {
    pub n: usize,
}

impl Integrand for HermiteFunction {
    fn eval(&self, x: Dd) -> DdComplex {
        let (mut prev, mut cur) = (Dd::ZERO, Dd::ONE);
        for k in 0..self.n {
            let next = x.mul_pow2(1) * cur - prev.mul_f64(2.0 * k as f64);
            prev = cur;
            cur = next;
        }
        DdComplex::from_real(cur * gaussian_dd(x))
    }

    fn certificate(&self) -> GrowthCertificate {
        GrowthCertificate::hermite_function(self.n)
    }
}

/// `exp(-x²/2) H_n(sin(λx) | q)`, the polynomial by its recurrence.
#[derive(Debug, Clone)]
pub struct GaussianQHermite {
    n: usize,
    lambda: DdComplex,
    // 1 - q^k for k = 1..n-1
    damping: Vec<DdComplex>,
    cert: GrowthCertificate,
}

impl GaussianQHermite {
    pub fn new(n: usize, lambda: Complex, q: Complex) -> Self {
        let qd = DdComplex::from(q);
        let mut damping = Vec::with_capacity(n);
        let mut qk = qd;
        for _ in 1..n.max(1) {
            damping.push(DdComplex::ONE - qk);
            qk *= qd;
        }
        GaussianQHermite {
            n,
            lambda: lambda.into(),
            damping,
            cert: GrowthCertificate::gaussian_q_hermite(n, lambda, q),
        }
    }
}

impl Integrand for GaussianQHermite {
    fn eval(&self, x: Dd) -> DdComplex {
        let s = self.lambda.scale(x).sin().mul_pow2(1);
        let (mut prev, mut cur) = (DdComplex::ZERO, DdComplex::ONE);
        for k in 0..self.n {
            let next = if k == 0 { s } else { s * cur - self.damping[k - 1] * prev };
            prev = cur;
            cur = next;
        }
        cur.scale(gaussian_dd(x))
    }

    fn certificate(&self) -> GrowthCertificate {
        self.cert
    }
}

/// `exp(-x²/2) cos^m(Mπ/2 - √(πjM) e^{-iπ/4} x)`.
#[derive(Debug, Clone, Copy)]
pub struct CosPower {
    m: u32,
    shift: Dd,
    // √(πjM/2), so that √(πjM) e^{-iπ/4} = slope (1 - i)
    slope: Dd,
}

impl CosPower {
    pub fn new(m: u32, params: &RootOfUnityParams) -> Self {
        let (j, order) = (params.j() as f64, params.order() as f64);
        CosPower { m, shift: dd::FRAC_PI_2.mul_f64(order), slope: dd::PI.mul_f64(j * order).mul_pow2(-1).sqrt() }
    }
}

impl Integrand for CosPower {
    fn eval(&self, x: Dd) -> DdComplex {
        let sx = self.slope * x;
        let arg = DdComplex::new(self.shift - sx, sx);
        arg.cos().powu(self.m).scale(gaussian_dd(x))
    }

    fn certificate(&self) -> GrowthCertificate {
        // |cos z| <= e^{|Im z|}
        GrowthCertificate::new(1.0, self.m as f64 * self.slope.to_f64() * (1.0 + 1e-15), 0.5)
    }
}

/// Adapter for an ordinary closure, sampled at double precision.
pub struct FnIntegrand<F> {
    pub f: F,
    pub cert: GrowthCertificate,
}

impl<F: Fn(f64) -> Complex> Integrand for FnIntegrand<F> {
    fn eval(&self, x: Dd) -> DdComplex {
        (self.f)(x.to_f64()).into()
    }

    fn certificate(&self) -> GrowthCertificate {
        self.cert
    }
}

/// `(1/√2π) ∫_{-L}^{L} e^{ixy} f(x) dx`. The inverse transform is the same
/// integral at `-y`.
pub fn integral_ft<F: Integrand + ?Sized>(f: &F, y: Complex, spec: &QuadratureSpec) -> Result<Complex> {
    Ok(integral_ft_many(f, &[y], spec)?[0])
}

/// [`integral_ft`] at several `y`, sampling the integrand once.
pub fn integral_ft_many<F: Integrand + ?Sized>(f: &F, ys: &[Complex], spec: &QuadratureSpec) -> Result<Vec<Complex>> {
    let sampled = SampledIntegrand::new(f, spec)?;
    ys.iter().map(|&y| sampled.transform(y)).collect()
}

/// An integrand sampled once on the quadrature nodes, weights folded in.
#[derive(Debug, Clone)]
pub struct SampledIntegrand {
    samples: Vec<(Dd, DdComplex)>,
}

impl SampledIntegrand {
    pub fn new<F: Integrand + ?Sized>(f: &F, spec: &QuadratureSpec) -> Result<Self> {
        spec.check_envelope(&f.certificate())?;
        let samples: Vec<(Dd, DdComplex)> = spec.nodes().into_iter().map(|(x, w)| (x, f.eval(x).scale(w))).collect();
        if samples.iter().any(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite("quadrature integrand"));
        }
        Ok(SampledIntegrand { samples })
    }

    /// `(1/√2π) Σ w_k f(x_k) e^{i x_k y}`.
    pub fn transform(&self, y: Complex) -> Result<Complex> {
        let iy = DdComplex::from(I * y);
        let mut acc = DdComplex::ZERO;
        for &(x, v) in &self.samples {
            acc += v * iy.scale(x).exp();
        }
        let out = acc.scale(dd::FRAC_1_SQRT_2PI).to_complex();
        if out.re.is_finite() && out.im.is_finite() {
            Ok(out)
        } else {
            Err(Error::NonFinite("quadrature sum"))
        }
    }
}

fn reals(ys: &[f64]) -> Vec<Complex> {
    ys.iter().map(|&y| Complex::new(y, 0.0)).collect()
}

fn max_deviation(left: &[Complex], ys: &[f64], mut right: impl FnMut(f64) -> Result<Complex>) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (l, &y) in left.iter().zip(ys) {
        worst = worst.max((l - right(y)?).norm());
    }
    Ok(worst)
}

fn gauss(y: f64) -> f64 {
    libm::exp(-y * y / 2.0)
}

/// Max over `ys` of `|FT[e^{-x²/2} H_n](y) - i^n e^{-y²/2} H_n(y)|`.
pub fn verify_hermite_eigenfunction(n: usize, ys: &[f64]) -> Result<f64> {
    let f = HermiteFunction { n };
    let spec = QuadratureSpec::for_degree(n, 0.0, &f.certificate())?;
    let left = integral_ft_many(&f, &reals(ys), &spec)?;
    max_deviation(&left, ys, |y| Ok(i_pow(n as i64) * gauss(y) * classical_hermite(n, Complex::new(y, 0.0))))
}

/// Transform of `e^{-x²/2} H_n(sin λx | q)` for arbitrary `λ` and `q`, against
/// the closed form
/// `i^n e^{-n²λ²/2} e^{-y²/2} Σ_k [n,k]_{1/q} (e^{-2λ²}/q)^{k(k-n)} (-1)^k e^{-(2k-n)λy}`.
pub fn verify_gaussian_qhermite_transform(n: usize, lambda: Complex, q: Complex, ys: &[f64]) -> Result<f64> {
    if q == Complex::new(0.0, 0.0) {
        return Err(Error::ZeroQ);
    }
    if q == Complex::new(1.0, 0.0) {
        return Err(Error::InvalidArgument("q = 1 is excluded"));
    }
    let f = GaussianQHermite::new(n, lambda, q);
    let spec = QuadratureSpec::for_degree(n, lambda.im, &f.certificate())?;
    let left = integral_ft_many(&f, &reals(ys), &spec)?;

    let qinv = q.inv();
    let row = q_binomial_row(n, qinv);
    let base = qinv * (-2.0 * lambda * lambda).exp();
    let prefactor = i_pow(n as i64) * (-((n * n) as f64) * lambda * lambda / 2.0).exp();
    max_deviation(&left, ys, |y| {
        let sum: Complex = row
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let (k, n) = (k as i64, n as i64);
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                b * base.powi((k * (k - n)) as i32) * sign * (-((2 * k - n) as f64) * lambda * y).exp()
            })
            .sum();
        Ok(prefactor * gauss(y) * sum)
    })
}

fn check_self_dual(lambda: Complex, q: Complex) -> Result<()> {
    let expected = (-2.0 * lambda * lambda).exp();
    if (q - expected).norm() > 1e-12 * q.norm().max(1.0) {
        return Err(Error::InvalidArgument("q must equal exp(-2 lambda^2)"));
    }
    Ok(())
}

fn transform_of_gaussian_qhermite(n: usize, lambda: Complex, q: Complex, ys: &[f64]) -> Result<Vec<Complex>> {
    let f = GaussianQHermite::new(n, lambda, q);
    let spec = QuadratureSpec::for_degree(n, lambda.im, &f.certificate())?;
    integral_ft_many(&f, &reals(ys), &spec)
}

/// For `q = exp(-2λ²)`: transform of `e^{-x²/2} H_n(sin λx | q)` against
/// `q^{n²/4} e^{-y²/2} H_n(sin(iλy) | 1/q)`, with `q^{n²/4} = e^{-n²λ²/2}`.
pub fn verify_self_dual_transform(n: usize, lambda: Complex, q: Complex, ys: &[f64]) -> Result<f64> {
    check_self_dual(lambda, q)?;
    let left = transform_of_gaussian_qhermite(n, lambda, q, ys)?;
    let qpow = (-((n * n) as f64) * lambda * lambda / 2.0).exp();
    max_deviation(&left, ys, |y| Ok(qpow * gauss(y) * qhermite_sin(n, I * lambda * y, q.inv())))
}

/// Real branch: right side `i^n q^{n²/4} e^{-y²/2} h_n(sinh κy | q)` with the
/// q⁻¹-Hermite polynomial `h_n`.
pub fn verify_real_branch_transform(n: usize, params: &RealQParams, ys: &[f64]) -> Result<f64> {
    let kappa = params.kappa();
    let q = Complex::new(params.q(), 0.0);
    let left = transform_of_gaussian_qhermite(n, Complex::new(kappa, 0.0), q, ys)?;
    let qpow = params.q_pow((n * n) as f64 / 4.0);
    max_deviation(&left, ys, |y| {
        let h = qinv_hermite(n, Complex::new(libm::sinh(kappa * y), 0.0), q)?;
        Ok(i_pow(n as i64) * qpow * gauss(y) * h)
    })
}

/// Root-of-unity branch: right side `q^{n²/4} e^{-y²/2} H_n(sin(ᾱy) | q̄)`,
/// using `iα = ᾱ` and `1/q = q̄`.
pub fn verify_root_branch_transform(n: usize, params: &RootOfUnityParams, ys: &[f64]) -> Result<f64> {
    let alpha = params.alpha();
    let left = transform_of_gaussian_qhermite(n, alpha, params.q(), ys)?;
    let qpow = params.q_pow((n * n) as f64 / 4.0);
    max_deviation(&left, ys, |y| Ok(qpow * gauss(y) * qhermite_sin(n, alpha.conj() * y, params.q_inv())))
}

/// Inverse transform of `e^{-x²/2} H_n(sin ᾱx | q̄)` against
/// `q^{-n²/4} e^{-y²/2} H_n(sin αy | q)`: the root-of-unity transform pair
/// with both sides conjugated.
pub fn verify_conjugate_inversion(n: usize, params: &RootOfUnityParams, ys: &[f64]) -> Result<f64> {
    let alpha = params.alpha();
    let f = GaussianQHermite::new(n, alpha.conj(), params.q_inv());
    let spec = QuadratureSpec::for_degree(n, alpha.im, &f.certificate())?;
    let neg: Vec<Complex> = ys.iter().map(|&y| Complex::new(-y, 0.0)).collect();
    let left = integral_ft_many(&f, &neg, &spec)?;
    let qpow = params.q_pow(-((n * n) as f64) / 4.0);
    max_deviation(&left, ys, |y| Ok(qpow * gauss(y) * qhermite_sin(n, alpha * y, params.q())))
}

/// Transform of `e^{-x²/2} cos^m(Mπ/2 - √(πjM) e^{-iπ/4} x)` against
/// `i^{m²jM} e^{-y²/2} cos^m(Mπ/2 - √(πjM) e^{iπ/4} y)`.
pub fn verify_cos_power(m: u32, j: i64, order: i64, ys: &[f64]) -> Result<f64> {
    let params = RootOfUnityParams::coprime(j, order)?;
    let f = CosPower::new(m, &params);
    let degree = m as usize * order as usize;
    let spec = QuadratureSpec::for_degree(degree, params.alpha().im, &f.certificate())?;
    let left = integral_ft_many(&f, &reals(ys), &spec)?;
    let slope = libm::sqrt(core::f64::consts::PI * (j * order) as f64 / 2.0);
    let shift = order as f64 * core::f64::consts::FRAC_PI_2;
    let phase = i_pow((m as i64) * (m as i64) * j * order);
    max_deviation(&left, ys, |y| {
        let arg = Complex::new(shift - slope * y, -slope * y);
        Ok(phase * gauss(y) * arg.cos().powu(m))
    })
}
