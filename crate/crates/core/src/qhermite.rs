//! Continuous q-Hermite polynomials and their relatives.
//!
//! `H_n(x|q)` is generated by `2x H_n = H_{n+1} + (1 - q^n) H_{n-1}` with
//! `H_0 = 1`, `H_{-1} = 0`. It is also a finite Fourier series in `θ` when
//! `x = cos θ`, and the sine form of that series is what the Gaussian
//! transforms act on. Every representation here is computed by its own code
//! path so the tests can play them against each other.
//!
//! At a primitive root of unity `q = exp(2πij/M)` the polynomial of degree
//! `M` collapses to `2 T_M(x)` and higher degrees factor as
//! `H_{mM+n} = (2 T_M)^m H_n`. The `M` zeros of `T_M` carry a discrete
//! orthogonality with complex weights for degrees below `M`; the weights are
//! found here by a least-squares probe.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::linalg::{self, Matrix};
use crate::qseries::{i_pow, q_binomial_row, Complex, RootOfUnityParams, I};
use crate::{Error, Result};

const ONE: Complex = Complex::new(1.0, 0.0);

/// `H_n(x|q)` by the three-term recurrence.
pub fn qhermite_recurrence(n: usize, x: Complex, q: Complex) -> Complex {
    qhermite_values(n, x, q)[n]
}

/// `H_0(x|q), ..., H_n(x|q)` from one pass of the recurrence.
pub fn qhermite_values(n: usize, x: Complex, q: Complex) -> Vec<Complex> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(ONE);
    if n == 0 {
        return out;
    }
    out.push(2.0 * x);
    let mut qk = q;
    for k in 1..n {
        let next = 2.0 * x * out[k] - (ONE - qk) * out[k - 1];
        out.push(next);
        qk *= q;
    }
    out
}

/// `H_n(cos θ | q) = Σ_k [n,k]_q e^{i(n-2k)θ}`; `θ` may be complex.
pub fn qhermite_fourier_sum(n: usize, theta: Complex, q: Complex) -> Complex {
    let row = q_binomial_row(n, q);
    let step = (-2.0 * I * theta).exp();
    let mut phase = (I * n as f64 * theta).exp();
    let mut sum = Complex::new(0.0, 0.0);
    for b in &row {
        sum += b * phase;
        phase *= step;
    }
    sum
}

/// Repeated evaluation of `H_n(sin θ | q) = i^n Σ_k [n,k]_q (-1)^k e^{i(2k-n)θ}`
/// with the q-binomial row computed once.
#[derive(Debug, Clone)]
pub struct SinExpansion {
    degree: usize,
    // i^n (-1)^k [n,k]_q
    coeffs: Vec<Complex>,
}

impl SinExpansion {
    pub fn new(n: usize, q: Complex) -> Self {
        let lead = i_pow(n as i64);
        let coeffs = q_binomial_row(n, q)
            .into_iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 0 { lead * b } else { -lead * b })
            .collect();
        SinExpansion { degree: n, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, theta: Complex) -> Complex {
        let step = (2.0 * I * theta).exp();
        let mut phase = (-I * self.degree as f64 * theta).exp();
        let mut sum = Complex::new(0.0, 0.0);
        for c in &self.coeffs {
            sum += c * phase;
            phase *= step;
        }
        sum
    }

    /// `Σ_k |coefficient_k|`, the amplitude of the growth envelope.
    pub fn coefficient_mass(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }
}

/// `H_n(sin θ | q)` through the sine-form Fourier sum.
pub fn qhermite_sin(n: usize, theta: Complex, q: Complex) -> Complex {
    SinExpansion::new(n, q).eval(theta)
}

/// The q⁻¹-Hermite polynomial `h_n(x|q) = i^{-n} H_n(ix | q^{-1})`.
pub fn qinv_hermite(n: usize, x: Complex, q: Complex) -> Result<Complex> {
    if q == Complex::new(0.0, 0.0) {
        return Err(Error::ZeroQ);
    }
    Ok(i_pow(-(n as i64)) * qhermite_recurrence(n, I * x, q.inv()))
}

/// Chebyshev polynomial of the first kind, `T_M(cos θ) = cos(Mθ)`.
pub fn chebyshev_t(m: usize, x: Complex) -> Complex {
    if m == 0 {
        return ONE;
    }
    let (mut prev, mut cur) = (ONE, x);
    for _ in 1..m {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial, `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn classical_hermite(n: usize, x: Complex) -> Complex {
    if n == 0 {
        return ONE;
    }
    let (mut prev, mut cur) = (ONE, 2.0 * x);
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Zeros `cos((2s+1)π/(2M))`, `s = 0..M`, in decreasing order.
///
/// Evaluated as `sin((M - 2s - 1)π/(2M))` so the list is exactly antisymmetric.
pub fn chebyshev_zeros(m: usize) -> Vec<f64> {
    (0..m).map(|s| libm::sin((m as f64 - 2.0 * s as f64 - 1.0) * PI / (2.0 * m as f64))).collect()
}

/// Maximum over the grid of `|H_M(x|q_{j,M}) - 2 T_M(x)|`.
pub fn verify_chebyshev_identity(params: &RootOfUnityParams, grid: &[f64]) -> Result<f64> {
    params.require_coprime()?;
    let m = params.order() as usize;
    Ok(grid
        .iter()
        .map(|&x| {
            let x = Complex::new(x, 0.0);
            (qhermite_recurrence(m, x, params.q()) - 2.0 * chebyshev_t(m, x)).norm()
        })
        .fold(0.0, f64::max))
}

/// Maximum over the grid of `|H_{mM+n}(x|q) - (2 T_M(x))^m H_n(x|q)|`, both
/// sides by separate recurrences.
pub fn verify_factorization(params: &RootOfUnityParams, m: usize, n: usize, grid: &[f64]) -> Result<f64> {
    params.require_coprime()?;
    let order = params.order() as usize;
    if n >= order {
        return Err(Error::InvalidArgument("factorization needs 0 <= n <= M-1"));
    }
    if m == 0 {
        return Ok(0.0);
    }
    let q = params.q();
    Ok(grid
        .iter()
        .map(|&x| {
            let x = Complex::new(x, 0.0);
            let left = qhermite_recurrence(m * order + n, x, q);
            let right = (2.0 * chebyshev_t(order, x)).powu(m as u32) * qhermite_recurrence(n, x, q);
            (left - right).norm()
        })
        .fold(0.0, f64::max))
}

/// Least-squares orthogonality residual tolerated before the probe reports
/// the system as inconsistent.
pub const WEIGHT_RESIDUAL_TOL: f64 = 1e-8;
/// Condition estimate beyond which the weight system is rejected.
pub const WEIGHT_CONDITION_LIMIT: f64 = 1e12;

/// Outcome of the discrete-orthogonality probe on the zeros of `T_M`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteWeights {
    pub nodes: Vec<f64>,
    pub weights: Vec<Complex>,
    /// `gram[m][n] = Σ_s w_s H_m(x_s) H_n(x_s)` for `0 <= m, n < M`.
    pub gram: Vec<Vec<Complex>>,
    /// Largest off-diagonal `|gram[m][n]|`.
    pub max_residual: f64,
    pub condition: f64,
}

/// Solves `Σ_s w_s H_m(x_s|q) H_n(x_s|q) = 0` for `m < n < M`, normalised by
/// `Σ_s w_s = 1`, over the Chebyshev zeros `x_s`.
pub fn solve_discrete_weights(params: &RootOfUnityParams) -> Result<DiscreteWeights> {
    params.require_coprime()?;
    let order = params.order() as usize;
    let nodes = chebyshev_zeros(order);
    let table: Vec<Vec<Complex>> =
        nodes.iter().map(|&x| qhermite_values(order - 1, Complex::new(x, 0.0), params.q())).collect();

    let pairs = order * (order - 1) / 2;
    let mut system = Matrix::zeros(pairs + 1, order);
    let mut rhs = vec![Complex::new(0.0, 0.0); pairs + 1];
    let mut row = 0;
    for m in 0..order {
        for n in (m + 1)..order {
            for (s, h) in table.iter().enumerate() {
                system[(row, s)] = h[m] * h[n];
            }
            row += 1;
        }
    }
    for s in 0..order {
        system[(row, s)] = ONE;
    }
    rhs[row] = ONE;

    let sv = linalg::singular_values(&system);
    let condition = match (sv.first(), sv.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 => hi / lo,
        _ => f64::INFINITY,
    };
    if !(condition < WEIGHT_CONDITION_LIMIT) {
        return Err(Error::IllConditioned { condition });
    }
    let weights = linalg::least_squares(&system, &rhs)?;

    let mut gram = vec![vec![Complex::new(0.0, 0.0); order]; order];
    let mut max_residual: f64 = 0.0;
    for m in 0..order {
        for n in 0..order {
            let g: Complex = table.iter().zip(&weights).map(|(h, w)| w * h[m] * h[n]).sum();
            if m != n {
                max_residual = max_residual.max(g.norm());
            }
            gram[m][n] = g;
        }
    }
    let normalisation = (weights.iter().sum::<Complex>() - ONE).norm();
    let worst = max_residual.max(normalisation);
    if worst > WEIGHT_RESIDUAL_TOL {
        return Err(Error::Inconsistent { residual: worst, condition });
    }
    Ok(DiscreteWeights { nodes, weights, gram, max_residual, condition })
}

/// `|((1-q)/2)^{-n/2} H_n(x sqrt((1-q)/2) | q) - H_n(x)|` for `0 < q < 1`.
pub fn qtolimit_deviation(n: usize, q: f64, x: f64) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::RealQDomain { q });
    }
    let s = libm::sqrt((1.0 - q) / 2.0);
    let scaled = qhermite_recurrence(n, Complex::new(x * s, 0.0), Complex::new(q, 0.0)) / libm::pow(s, n as f64);
    Ok((scaled - classical_hermite(n, Complex::new(x, 0.0))).norm())
}

/// `|α^{-n} H_n(sin(αx) | q_{j,M}) - H_n(x)|`, the root-of-unity analogue of
/// [`qtolimit_deviation`]; it tends to zero as `M` grows with `j` fixed.
pub fn root_limit_deviation(n: usize, params: &RootOfUnityParams, x: f64) -> f64 {
    let alpha = params.alpha();
    let value = qhermite_recurrence(n, (alpha * x).sin(), params.q()) / alpha.powu(n as u32);
    (value - classical_hermite(n, Complex::new(x, 0.0))).norm()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolynomialFamily {
    ContinuousQHermite,
    QInverseHermite,
    ClassicalHermite,
    ChebyshevT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Recurrence,
    /// Finite Fourier series in `θ = arccos x`.
    FourierSum,
    /// `(2 T_M)^m H_n` at a recognised root of unity.
    Factorized,
}

/// A single polynomial value together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolynomialEvaluation {
    pub family: PolynomialFamily,
    pub degree: usize,
    pub argument: Complex,
    pub q: Option<Complex>,
    pub value: Complex,
    pub method: EvalMethod,
}

impl PolynomialEvaluation {
    pub fn evaluate(
        family: PolynomialFamily,
        degree: usize,
        argument: Complex,
        q: Option<Complex>,
        method: EvalMethod,
    ) -> Result<Self> {
        use EvalMethod::*;
        use PolynomialFamily::*;

        let need_q = || q.ok_or(Error::InvalidArgument("q-family needs a deformation parameter"));
        let value = match (family, method) {
            (ContinuousQHermite, Recurrence) => qhermite_recurrence(degree, argument, need_q()?),
            (ContinuousQHermite, FourierSum) => qhermite_fourier_sum(degree, argument.acos(), need_q()?),
            (ContinuousQHermite, Factorized) => {
                let params = RootOfUnityParams::identify(need_q()?, 64)
                    .ok_or(Error::InvalidArgument("q is not a recognisable root of unity"))?;
                params.require_coprime()?;
                let order = params.order() as usize;
                let (m, r) = (degree / order, degree % order);
                (2.0 * chebyshev_t(order, argument)).powu(m as u32) * qhermite_recurrence(r, argument, params.q())
            }
            (QInverseHermite, Recurrence) => qinv_hermite(degree, argument, need_q()?)?,
            (QInverseHermite, FourierSum) => {
                let q = need_q()?;
                if q == Complex::new(0.0, 0.0) {
                    return Err(Error::ZeroQ);
                }
                i_pow(-(degree as i64)) * qhermite_fourier_sum(degree, (I * argument).acos(), q.inv())
            }
            (ClassicalHermite, Recurrence) => classical_hermite(degree, argument),
            (ChebyshevT, Recurrence) => chebyshev_t(degree, argument),
            (ChebyshevT, FourierSum) => (degree as f64 * argument.acos()).cos(),
            _ => return Err(Error::InvalidArgument("evaluation method not available for this family")),
        };
        Ok(PolynomialEvaluation { family, degree, argument, q, value, method })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equispaced_grid;
    use crate::qseries::q_root;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
    }

    #[test]
    fn recurrence_small_degrees() {
        let x = c(0.37, -0.2);
        assert_eq!(qhermite_recurrence(0, x, c(0.4, 0.1)), ONE);
        let v = qhermite_recurrence(2, x, c(-1.0, 0.0));
        assert!(close(v, 4.0 * x * x - 2.0, 1e-15));
        let q3 = q_root(1, 3).unwrap();
        let v = qhermite_recurrence(3, x, q3);
        assert!(close(v, 8.0 * x * x * x - 6.0 * x, 1e-14));
    }

    #[test]
    fn fourier_sum_small_degrees() {
        let t = c(0.7, 0.3);
        assert_eq!(qhermite_fourier_sum(0, t, c(0.2, 0.0)), ONE);
        assert!(close(qhermite_fourier_sum(1, t, c(0.2, 0.0)), 2.0 * t.cos(), 1e-15));
        let v = qhermite_fourier_sum(2, c(0.0, 0.0), c(0.5, 0.0));
        assert!(close(v, c(3.5, 0.0), 1e-15));
        assert!(close(qhermite_recurrence(2, ONE, c(0.5, 0.0)), c(3.5, 0.0), 1e-15));
    }

    #[test]
    fn sine_form_examples() {
        let q = c(0.3, 0.8);
        for n in 0..8 {
            let a = qhermite_sin(n, c(PI / 2.0, 0.0), q);
            assert!(close(a, qhermite_recurrence(n, ONE, q), 1e-13));
        }
        let t = c(-0.4, 0.9);
        assert!(close(qhermite_sin(1, t, q), 2.0 * t.sin(), 1e-14));
    }

    #[test]
    fn q_inverse_examples() {
        let x = c(0.3, 0.1);
        assert_eq!(qinv_hermite(0, x, c(0.5, 0.0)).unwrap(), ONE);
        assert!(close(qinv_hermite(1, x, c(0.5, 0.0)).unwrap(), 2.0 * x, 1e-15));
        assert!(close(qinv_hermite(2, x, c(0.5, 0.0)).unwrap(), 4.0 * x * x - 1.0, 1e-15));
        assert_eq!(qinv_hermite(2, x, c(0.0, 0.0)), Err(Error::ZeroQ));
    }

    #[test]
    fn chebyshev_and_hermite_examples() {
        let x = c(0.3, 0.2);
        assert_eq!(chebyshev_t(0, x), ONE);
        assert!(close(chebyshev_t(2, x), 2.0 * x * x - 1.0, 1e-15));
        assert!(chebyshev_t(5, c(libm::cos(PI / 10.0), 0.0)).norm() < 1e-15);
        assert_eq!(classical_hermite(0, x), ONE);
        assert!(close(classical_hermite(2, x), 4.0 * x * x - 2.0, 1e-15));
        assert_eq!(classical_hermite(3, ONE), c(-4.0, 0.0));
    }

    #[test]
    fn zeros() {
        assert_eq!(chebyshev_zeros(1), [0.0]);
        let z = chebyshev_zeros(2);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert!((z[0] - h).abs() < 2e-16 && (z[1] + h).abs() < 2e-16);
        let z = chebyshev_zeros(4);
        for (s, &x) in z.iter().enumerate() {
            assert!((x - libm::cos((2 * s + 1) as f64 * PI / 8.0)).abs() < 1e-15);
        }
        for m in 1..=40 {
            let z = chebyshev_zeros(m);
            assert!(z.windows(2).all(|w| w[0] > w[1]));
            assert!(z.iter().all(|&x| x > -1.0 && x < 1.0));
            assert!(z.iter().all(|&x| chebyshev_t(m, c(x, 0.0)).norm() < 1e-13));
        }
    }

    #[test]
    fn chebyshev_collapse() {
        let grid = equispaced_grid(101, -1.0, 1.0);
        let p = RootOfUnityParams::new(1, 2).unwrap();
        assert!(verify_chebyshev_identity(&p, &grid).unwrap() < 1e-12);
        let p = RootOfUnityParams::new(2, 5).unwrap();
        assert!(verify_chebyshev_identity(&p, &grid).unwrap() < 1e-11);
        let p = RootOfUnityParams::new(2, 4).unwrap();
        assert_eq!(verify_chebyshev_identity(&p, &grid), Err(Error::NotCoprime { j: 2, m: 4 }));
        for m in 2..=16i64 {
            for j in 1..m {
                let Ok(p) = RootOfUnityParams::coprime(j, m) else { continue };
                assert!(verify_chebyshev_identity(&p, &grid).unwrap() < 1e-11, "j={j} M={m}");
            }
        }
    }

    #[test]
    fn factorization() {
        let grid = equispaced_grid(101, -1.0, 1.0);
        let p = RootOfUnityParams::new(1, 3).unwrap();
        assert_eq!(verify_factorization(&p, 0, 2, &grid).unwrap(), 0.0);
        assert!(verify_factorization(&p, 2, 1, &grid).unwrap() < 1e-9);
        let p = RootOfUnityParams::new(1, 4).unwrap();
        assert!(verify_factorization(&p, 1, 3, &grid).unwrap() < 1e-10);
        assert!(verify_factorization(&p, 1, 4, &grid).is_err());
    }

    #[test]
    fn weights_two_points() {
        let w = solve_discrete_weights(&RootOfUnityParams::new(1, 2).unwrap()).unwrap();
        assert!(close(w.weights[0], c(0.5, 0.0), 1e-14));
        assert!(close(w.weights[1], c(0.5, 0.0), 1e-14));
    }

    #[test]
    fn weights_three_and_five_points() {
        // independent check: plug the weights back into the orthogonality sums
        for (m, tol) in [(3, 1e-10), (5, 1e-9)] {
            let p = RootOfUnityParams::new(1, m).unwrap();
            let w = solve_discrete_weights(&p).unwrap();
            let nodes = chebyshev_zeros(m as usize);
            for a in 0..m as usize {
                for b in (a + 1)..m as usize {
                    let s: Complex = nodes
                        .iter()
                        .zip(&w.weights)
                        .map(|(&x, wt)| {
                            let x = c(x, 0.0);
                            wt * qhermite_fourier_sum(a, x.acos(), p.q()) * qhermite_fourier_sum(b, x.acos(), p.q())
                        })
                        .sum();
                    assert!(s.norm() < tol, "M={m} ({a},{b}): {s}");
                }
            }
        }
    }

    #[test]
    fn weights_succeed_for_coprime_orders_up_to_12() {
        for m in 2..=12i64 {
            for j in 1..m {
                let Ok(p) = RootOfUnityParams::coprime(j, m) else { continue };
                let w = solve_discrete_weights(&p).unwrap();
                assert!(w.max_residual < 1e-8);
            }
        }
        let p = RootOfUnityParams::new(2, 6).unwrap();
        assert!(matches!(solve_discrete_weights(&p), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn limit_examples() {
        assert_eq!(qtolimit_deviation(0, 0.3, 1.7).unwrap(), 0.0);
        let d99 = qtolimit_deviation(3, 0.99, 0.7).unwrap();
        let d999 = qtolimit_deviation(3, 0.999, 0.7).unwrap();
        assert!(d999 < d99);
        let seq: Vec<f64> = [0.9, 0.99, 0.999].iter().map(|&q| qtolimit_deviation(5, q, 0.7).unwrap()).collect();
        assert!(seq[0] > seq[1] && seq[1] > seq[2]);
        assert!(qtolimit_deviation(2, 1.0, 0.1).is_err());
    }

    #[test]
    fn polynomial_evaluation_methods_agree() {
        use EvalMethod::*;
        use PolynomialFamily::*;
        let q = q_root(1, 5).unwrap();
        let x = c(0.31, 0.0);
        let a = PolynomialEvaluation::evaluate(ContinuousQHermite, 13, x, Some(q), Recurrence).unwrap();
        let b = PolynomialEvaluation::evaluate(ContinuousQHermite, 13, x, Some(q), FourierSum).unwrap();
        let f = PolynomialEvaluation::evaluate(ContinuousQHermite, 13, x, Some(q), Factorized).unwrap();
        assert!(close(a.value, b.value, 1e-11) && close(a.value, f.value, 1e-11));
        let h1 = PolynomialEvaluation::evaluate(QInverseHermite, 4, x, Some(c(0.6, 0.0)), Recurrence).unwrap();
        let h2 = PolynomialEvaluation::evaluate(QInverseHermite, 4, x, Some(c(0.6, 0.0)), FourierSum).unwrap();
        assert!(close(h1.value, h2.value, 1e-12));
        let t1 = PolynomialEvaluation::evaluate(ChebyshevT, 7, x, None, Recurrence).unwrap();
        let t2 = PolynomialEvaluation::evaluate(ChebyshevT, 7, x, None, FourierSum).unwrap();
        assert!(close(t1.value, t2.value, 1e-13));
        assert!(PolynomialEvaluation::evaluate(ClassicalHermite, 3, x, None, FourierSum).is_err());
        assert!(PolynomialEvaluation::evaluate(ContinuousQHermite, 3, x, None, Recurrence).is_err());
    }

    fn arb_complex(r: f64) -> impl Strategy<Value = Complex> {
        (-r..r, -r..r).prop_map(|(a, b)| Complex::new(a, b))
    }

    fn arb_q() -> impl Strategy<Value = Complex> {
        prop_oneof![
            (0.0..2.0 * PI).prop_map(|t| Complex::from_polar(1.0, t)),
            (0.1f64..0.95, 0.0..2.0 * PI).prop_map(|(r, t)| Complex::from_polar(r, t)),
        ]
    }

    proptest! {
        #[test]
        fn parity(n in 0usize..=20, x in arb_complex(1.5), q in arb_q()) {
            let a = qhermite_recurrence(n, -x, q);
            let b = qhermite_recurrence(n, x, q) * if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!(close(a, b, 1e-12));
        }

        #[test]
        fn recurrence_matches_fourier_sum(
            n in 0usize..=25,
            re in -PI..PI,
            im in -2.0f64..2.0,
            q in arb_q(),
        ) {
            let theta = Complex::new(re, im);
            let a = qhermite_recurrence(n, theta.cos(), q);
            let b = qhermite_fourier_sum(n, theta, q);
            prop_assert!(close(a, b, 1e-10), "n={} a={} b={}", n, a, b);
        }

        #[test]
        fn sine_form_is_shifted_cosine_form(n in 0usize..=10, t in arb_complex(2.0), q in arb_q()) {
            let a = qhermite_sin(n, t, q);
            let b = qhermite_fourier_sum(n, Complex::new(PI / 2.0, 0.0) - t, q);
            prop_assert!(close(a, b, 1e-11));
        }

        #[test]
        fn q_inverse_consistency(n in 0usize..=15, x in arb_complex(1.0), q in arb_q()) {
            let a = qinv_hermite(n, x, q).unwrap();
            let b = i_pow(-(n as i64)) * qhermite_recurrence(n, I * x, 1.0 / q);
            prop_assert!(close(a, b, 1e-12));
        }
    }
}
