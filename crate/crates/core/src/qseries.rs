//! Deformation parameters, q-shifted factorials and q-binomial coefficients.
//!
//! q-binomials are evaluated as polynomials in `q` through the Pascal-type
//! recurrence, never through the Pochhammer ratio. At a primitive `M`-th root
//! of unity the ratio is `0/0` as soon as `n >= M`, which is exactly the regime
//! where `H_M(x|q)` collapses onto a Chebyshev polynomial.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

pub type Complex = num_complex::Complex64;

pub const I: Complex = Complex::new(0.0, 1.0);

/// `i^n` for any integer `n`, exact.
pub fn i_pow(n: i64) -> Complex {
    match n.rem_euclid(4) {
        0 => Complex::new(1.0, 0.0),
        1 => Complex::new(0.0, 1.0),
        2 => Complex::new(-1.0, 0.0),
        _ => Complex::new(0.0, -1.0),
    }
}

/// `exp(2πi · num / den)`, exact at multiples of a quarter turn.
pub fn cis_fraction(num: i64, den: i64) -> Complex {
    debug_assert!(den > 0);
    let num = num.rem_euclid(den);
    if (4 * num) % den == 0 {
        return i_pow(4 * num / den);
    }
    Complex::from_polar(1.0, 2.0 * PI * num as f64 / den as f64)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn check_root_domain(j: i64, m: i64) -> Result<()> {
    if m < 1 || j < 1 || j > m - 1 {
        return Err(Error::RootOfUnityDomain { j, m });
    }
    Ok(())
}

/// `q_{j,M} = exp(2πij/M)` for `1 <= j <= M-1`.
pub fn q_root(j: i64, m: i64) -> Result<Complex> {
    check_root_domain(j, m)?;
    Ok(cis_fraction(j, m))
}

/// `α_{j,M} = sqrt(πj/M) · exp(-iπ/4)`, the scaling with `exp(-2α²) = q_{j,M}`
/// and `iα = conj(α)`.
pub fn alpha_param(j: i64, m: i64) -> Result<Complex> {
    check_root_domain(j, m)?;
    // sqrt(πj/M) e^{-iπ/4} = sqrt(πj/(2M)) (1 - i); both parts share one rounding
    let s = libm::sqrt(PI * j as f64 / (2.0 * m as f64));
    Ok(Complex::new(s, -s))
}

/// Root-of-unity deformation `q = exp(2πij/M)` together with its Gaussian
/// scaling `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOfUnityParams {
    j: u32,
    m: u32,
    q: Complex,
    alpha: Complex,
    coprime: bool,
}

impl RootOfUnityParams {
    pub fn new(j: i64, m: i64) -> Result<Self> {
        let q = q_root(j, m)?;
        let alpha = alpha_param(j, m)?;
        let (j, m) = (j as u32, m as u32);
        Ok(RootOfUnityParams { j, m, q, alpha, coprime: gcd(j as u64, m as u64) == 1 })
    }

    /// Same as [`new`](Self::new) but rejects `gcd(j, M) != 1`.
    pub fn coprime(j: i64, m: i64) -> Result<Self> {
        let p = Self::new(j, m)?;
        p.require_coprime()?;
        Ok(p)
    }

    /// Recognises `q` as `exp(2πij/M)` with `M <= max_order`, picking the
    /// smallest such `M`.
    pub fn identify(q: Complex, max_order: u32) -> Option<Self> {
        if (q.norm() - 1.0).abs() > 1e-12 {
            return None;
        }
        let turns = q.arg() / (2.0 * PI);
        let turns = turns - libm::floor(turns);
        (2..=max_order).find_map(|m| {
            let j = libm::round(turns * m as f64);
            let j = j as i64;
            if j >= 1 && j < m as i64 && (turns * m as f64 - j as f64).abs() < 1e-10 {
                Self::new(j, m as i64).ok()
            } else {
                None
            }
        })
    }

    pub fn require_coprime(&self) -> Result<()> {
        if self.coprime {
            Ok(())
        } else {
            Err(Error::NotCoprime { j: self.j as i64, m: self.m as i64 })
        }
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// The root order `M`.
    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> Complex {
        self.q
    }

    /// `q^{-1} = exp(-2πij/M)`, computed directly rather than by division.
    pub fn q_inv(&self) -> Complex {
        cis_fraction(-(self.j as i64), self.m as i64)
    }

    pub fn alpha(&self) -> Complex {
        self.alpha
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime
    }

    /// `q^p` on the branch `log q = 2πij/M`.
    pub fn q_pow(&self, p: f64) -> Complex {
        Complex::from_polar(1.0, 2.0 * PI * self.j as f64 * p / self.m as f64)
    }
}

/// Real deformation `0 < q < 1` with `q = exp(-2κ²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealQParams {
    kappa: f64,
    q: f64,
}

impl RealQParams {
    pub fn from_q(q: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::RealQDomain { q });
        }
        Ok(RealQParams { kappa: libm::sqrt(-libm::log(q) / 2.0), q })
    }

    pub fn from_kappa(kappa: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(Error::InvalidArgument("kappa must be positive and finite"));
        }
        Self::from_q(libm::exp(-2.0 * kappa * kappa))
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn q_pow(&self, p: f64) -> f64 {
        libm::exp(p * libm::log(self.q))
    }
}

/// Either branch of the Gaussian q-Hermite construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QParams {
    Real(RealQParams),
    Root(RootOfUnityParams),
}

impl QParams {
    /// The scaling `λ` with `q = exp(-2λ²)`: `κ` or `α_{j,M}`.
    pub fn lambda(&self) -> Complex {
        match self {
            QParams::Real(p) => Complex::new(p.kappa, 0.0),
            QParams::Root(p) => p.alpha,
        }
    }

    pub fn q(&self) -> Complex {
        match self {
            QParams::Real(p) => Complex::new(p.q, 0.0),
            QParams::Root(p) => p.q,
        }
    }

    pub fn q_inv(&self) -> Complex {
        match self {
            QParams::Real(p) => Complex::new(1.0 / p.q, 0.0),
            QParams::Root(p) => p.q_inv(),
        }
    }

    /// `q^p` on the principal branch matching `q = exp(-2λ²)`.
    pub fn q_pow(&self, p: f64) -> Complex {
        match self {
            QParams::Real(r) => Complex::new(r.q_pow(p), 0.0),
            QParams::Root(r) => r.q_pow(p),
        }
    }
}

impl From<RealQParams> for QParams {
    fn from(p: RealQParams) -> Self {
        QParams::Real(p)
    }
}

impl From<RootOfUnityParams> for QParams {
    fn from(p: RootOfUnityParams) -> Self {
        QParams::Root(p)
    }
}

/// `(a; q)_n = ∏_{k=0}^{n-1} (1 - a q^k)`.
pub fn q_pochhammer(a: Complex, q: Complex, n: usize) -> Result<Complex> {
    let mut acc = Complex::new(1.0, 0.0);
    let mut aq = a;
    for _ in 0..n {
        acc *= Complex::new(1.0, 0.0) - aq;
        aq *= q;
    }
    if acc.is_finite() {
        Ok(acc)
    } else {
        Err(Error::NonFinite("q_pochhammer"))
    }
}

/// Row `[n, 0]_q, ..., [n, n]_q` of Gaussian binomials.
pub fn q_binomial_row(n: usize, q: Complex) -> Vec<Complex> {
    let mut powers = Vec::with_capacity(n + 1);
    let mut p = Complex::new(1.0, 0.0);
    for _ in 0..=n {
        powers.push(p);
        p *= q;
    }
    let mut row = vec![Complex::new(0.0, 0.0); n + 1];
    row[0] = Complex::new(1.0, 0.0);
    for level in 1..=n {
        row[level] = Complex::new(1.0, 0.0);
        for k in (1..level).rev() {
            row[k] = row[k - 1] + powers[k] * row[k];
        }
    }
    row
}

/// Gaussian binomial `[n, k]_q`; zero outside `0 <= k <= n`.
pub fn q_binomial(n: usize, k: i64, q: Complex) -> Complex {
    if k < 0 || k > n as i64 {
        return Complex::new(0.0, 0.0);
    }
    q_binomial_row(n, q)[k as usize]
}
