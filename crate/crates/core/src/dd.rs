//! Double-double arithmetic.
//!
//! A [`Dd`] is an unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`, good for
//! roughly 32 significant decimal digits. It exists for one job: evaluating
//! integrands of the quadrature oracle whose samples are many orders of
//! magnitude larger than their integral. A root-of-unity integrand such as
//! `exp(-x²/2) cos²(5π/2 - √(10π) e^{-iπ/4} x)` peaks near `1e13` while its
//! transform is `O(1)`, so plain `f64` sampling cannot resolve the answer.
//!
//! Only the operations the oracle needs are provided: the four field
//! operations, `sqrt`, `exp`, `sin`/`cos`, `sinh`/`cosh`, and a complex type on
//! top of them. Transcendentals are argument-reduced Taylor series.

use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::Complex;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: Dd = Dd { hi: core::f64::consts::PI, lo: 1.2246467991473532e-16 };
pub const FRAC_PI_2: Dd = Dd { hi: core::f64::consts::FRAC_PI_2, lo: 6.123233995736766e-17 };
pub const LN_2: Dd = Dd { hi: core::f64::consts::LN_2, lo: 2.3190468138462996e-17 };
/// `1 / sqrt(2π)`
pub const FRAC_1_SQRT_2PI: Dd = Dd { hi: 0.3989422804014327, lo: -2.49232720227773e-17 };
pub const SQRT_2: Dd = Dd { hi: core::f64::consts::SQRT_2, lo: -9.667293313452913e-17 };

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
const TAYLOR_CUTOFF: f64 = 1e-34;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub const fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn mul_exact(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Multiplication by `2^k`, exact barring over/underflow.
    #[inline]
    pub fn mul_pow2(self, k: i32) -> Self {
        Dd { hi: libm::scalbn(self.hi, k), lo: libm::scalbn(self.lo, k) }
    }

    #[inline]
    pub fn sqr(self) -> Self {
        let (p, e) = two_prod(self.hi, self.hi);
        let e = e + 2.0 * self.hi * self.lo;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - Dd::mul_exact(q1, b);
        let q2 = r.hi / b;
        let r = r - Dd::mul_exact(q2, b);
        let q3 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }

    pub fn recip(self) -> Self {
        Dd::ONE / self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let x = libm::sqrt(self.hi);
        let correction = (self - Dd::from_f64(x).sqr()).hi / (2.0 * x);
        let (hi, lo) = quick_two_sum(x, correction);
        Dd { hi, lo }
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.78 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = libm::round(self.hi / LN_2.hi);
        // |r| <= ln2/2, scaled by 2^-9 before the series
        let r = (self - LN_2.mul_f64(k)).mul_pow2(-9);
        let mut term = r;
        let mut sum = r;
        let mut i = 2.0;
        while term.hi.abs() > TAYLOR_CUTOFF * sum.hi.abs().max(1e-300) && i < 30.0 {
            term = (term * r).div_f64(i);
            sum += term;
            i += 1.0;
        }
        // expm1(2y) = 2 expm1(y) + expm1(y)^2
        for _ in 0..9 {
            sum = sum.mul_pow2(1) + sum.sqr();
        }
        (sum + Dd::ONE).mul_pow2(k as i32)
    }

    /// `(sin x, cos x)`. Reduction uses a double-double `π/2`, adequate for
    /// `|x|` up to about `1e6`.
    pub fn sin_cos(self) -> (Self, Self) {
        let k = libm::round(self.hi / FRAC_PI_2.hi);
        let r = self - FRAC_PI_2.mul_f64(k);
        let r2 = r.sqr();

        let mut s = r;
        let mut term = r;
        let mut i = 1.0;
        while term.hi.abs() > TAYLOR_CUTOFF && i < 40.0 {
            term = -(term * r2).div_f64((2.0 * i) * (2.0 * i + 1.0));
            s += term;
            i += 1.0;
        }

        let mut c = Dd::ONE;
        let mut term = Dd::ONE;
        let mut i = 1.0;
        while term.hi.abs() > TAYLOR_CUTOFF && i < 40.0 {
            term = -(term * r2).div_f64((2.0 * i - 1.0) * (2.0 * i));
            c += term;
            i += 1.0;
        }

        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    /// `(sinh x, cosh x)`.
    pub fn sinh_cosh(self) -> (Self, Self) {
        if self.hi.abs() < 0.5 {
            let x2 = self.sqr();
            let mut s = self;
            let mut term = self;
            let mut i = 1.0;
            while term.hi.abs() > TAYLOR_CUTOFF * s.hi.abs().max(1e-300) && i < 40.0 {
                term = (term * x2).div_f64((2.0 * i) * (2.0 * i + 1.0));
                s += term;
                i += 1.0;
            }
            let c = (Dd::ONE + s.sqr()).sqrt();
            return (s, c);
        }
        let e = self.exp();
        let inv = e.recip();
        ((e - inv).mul_pow2(-1), (e + inv).mul_pow2(-1))
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd::from_f64(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}

impl AddAssign for Dd {
    #[inline]
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    #[inline]
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

impl MulAssign for Dd {
    #[inline]
    fn mul_assign(&mut self, b: Dd) {
        *self = *self * b;
    }
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: DdComplex = DdComplex { re: Dd::ONE, im: Dd::ZERO };
    pub const I: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ONE };

    #[inline]
    pub const fn new(re: Dd, im: Dd) -> Self {
        DdComplex { re, im }
    }

    #[inline]
    pub fn from_real(re: Dd) -> Self {
        DdComplex { re, im: Dd::ZERO }
    }

    #[inline]
    pub fn to_complex(self) -> Complex {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn conj(self) -> Self {
        DdComplex { re: self.re, im: -self.im }
    }

    #[inline]
    pub fn scale(self, s: Dd) -> Self {
        DdComplex { re: self.re * s, im: self.im * s }
    }

    #[inline]
    pub fn mul_pow2(self, k: i32) -> Self {
        DdComplex { re: self.re.mul_pow2(k), im: self.im.mul_pow2(k) }
    }

    /// `z · x` for a real double `x`, exact when `z` has double parts.
    #[inline]
    pub fn mul_f64(self, x: f64) -> Self {
        DdComplex { re: self.re.mul_f64(x), im: self.im.mul_f64(x) }
    }

    pub fn norm_f64(self) -> f64 {
        libm::hypot(self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        DdComplex { re: m * c, im: m * s }
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        DdComplex { re: s * ch, im: c * sh }
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        DdComplex { re: c * ch, im: -(s * sh) }
    }

    pub fn powu(self, n: u32) -> Self {
        let mut acc = DdComplex::ONE;
        for _ in 0..n {
            acc *= self;
        }
        acc
    }
}

impl From<Complex> for DdComplex {
    fn from(z: Complex) -> Self {
        DdComplex { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn neg(self) -> DdComplex {
        DdComplex { re: -self.re, im: -self.im }
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn add(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn sub(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re * b.re - self.im * b.im, im: self.re * b.im + self.im * b.re }
    }
}

impl AddAssign for DdComplex {
    #[inline]
    fn add_assign(&mut self, b: DdComplex) {
        *self = *self + b;
    }
}

impl MulAssign for DdComplex {
    #[inline]
    fn mul_assign(&mut self, b: DdComplex) {
        *self = *self * b;
    }
}
