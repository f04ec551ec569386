//! Eigenvectors of the DFT assembled from Fourier-pair vectors.
//!
//! If `Φf = a²g` and `Φg = b²f` then `Φ(bf ± ag) = ±ab (bf ± ag)`. At a root
//! of unity the periodized pair satisfies `Φf = q^{n²/4} f̄` and
//! `Φf̄ = (-1)^n q^{-n²/4} f`, and with `a = q^{n²/8}`, `b = i^n q^{-n²/8}`
//! the combination reduces to the real vectors
//! `F_n = Re(e^{iπn/4} q^{-n²/8} f_n)` and `G_n = Im(e^{iπn/4} q^{-n²/8} f_n)`
//! with eigenvalues `i^n` and `-i^n`.

use alloc::vec::Vec;

use crate::fourier::{dft_matrix, DftOperator};
use crate::linalg::{singular_values, Matrix};
use crate::periodize::{f_q_vector, mehta_vector, PeriodizedVector, TruncationPolicy, VectorFamily, VectorLabel};
use crate::qseries::{cis_fraction, i_pow, Complex, RootOfUnityParams};
use crate::{max_abs_diff, Error, Result};

/// Relative residual above which a construction is rejected.
pub const RESIDUAL_THRESHOLD: f64 = 1e-8;
/// Singular values below `RANK_TOL · largest` do not count toward the rank.
pub const RANK_TOL: f64 = 1e-10;

/// The four possible DFT eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eigenvalue {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Eigenvalue {
    /// `i^n`.
    pub fn i_power(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => Eigenvalue::One,
            1 => Eigenvalue::I,
            2 => Eigenvalue::MinusOne,
            _ => Eigenvalue::MinusI,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Eigenvalue::One => 0,
            Eigenvalue::I => 1,
            Eigenvalue::MinusOne => 2,
            Eigenvalue::MinusI => 3,
        }
    }

    pub fn value(self) -> Complex {
        i_pow(self.exponent())
    }

    pub fn negated(self) -> Self {
        Self::i_power(self.exponent() + 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Mehta {
        n: usize,
    },
    /// `F_n`, the real part.
    QPlus {
        n: usize,
        j: u32,
        m: u32,
    },
    /// `G_n`, the imaginary part.
    QMinus {
        n: usize,
        j: u32,
        m: u32,
    },
    Custom,
}

/// `‖Φv - λv‖_∞ / max(‖v‖_∞, tiny)`.
pub fn relative_residual(op: &DftOperator, values: &[Complex], eigenvalue: Complex) -> Result<f64> {
    let image = op.apply(values)?;
    let scaled: Vec<Complex> = values.iter().map(|z| eigenvalue * z).collect();
    Ok(max_abs_diff(&image, &scaled) / crate::norm_inf(values).max(f64::MIN_POSITIVE))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenCandidate {
    pub vector: PeriodizedVector,
    pub eigenvalue: Eigenvalue,
    pub residual: f64,
    pub provenance: Provenance,
}

impl EigenCandidate {
    pub fn new(vector: PeriodizedVector, eigenvalue: Eigenvalue, provenance: Provenance) -> Result<Self> {
        let op = dft_matrix(vector.size)?;
        Self::with_operator(&op, vector, eigenvalue, provenance)
    }

    fn with_operator(
        op: &DftOperator,
        vector: PeriodizedVector,
        eigenvalue: Eigenvalue,
        provenance: Provenance,
    ) -> Result<Self> {
        let residual = relative_residual(op, &vector.values, eigenvalue.value())?;
        Ok(EigenCandidate { vector, eigenvalue, residual, provenance })
    }

    pub fn recompute_residual(&self) -> Result<f64> {
        let op = dft_matrix(self.vector.size)?;
        relative_residual(&op, &self.vector.values, self.eigenvalue.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `b f ± a g`, an eigenvector with eigenvalue `±ab` whenever `Φf = a²g` and
/// `Φg = b²f`.
pub fn combine(
    f: &PeriodizedVector,
    g: &PeriodizedVector,
    a: Complex,
    b: Complex,
    sign: Sign,
) -> Result<PeriodizedVector> {
    if f.size != g.size {
        return Err(Error::LengthMismatch { expected: f.size, found: g.size });
    }
    let values = f.values.iter().zip(&g.values).map(|(x, y)| b * x + sign.value() * a * y).collect();
    Ok(PeriodizedVector {
        values,
        label: VectorLabel::new(VectorFamily::Custom),
        truncation_used: f.truncation_used.max(g.truncation_used),
        tail_bound: f.tail_bound.max(g.tail_bound),
        tolerance: f.tolerance.max(g.tolerance),
        size: f.size,
    })
}

/// Phase `c(n)` in `F_n = Re(c(n) q^{-n²/8} f_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseConvention {
    /// `e^{iπn/4}`, the phase that makes `F_n`, `G_n` eigenvectors.
    #[default]
    PiOver4,
    /// `e^{iπn/8}`. Kept as a probe: its residuals are reported, not enforced.
    PiOver8,
}

impl PhaseConvention {
    pub fn phase(self, n: usize) -> Complex {
        match self {
            PhaseConvention::PiOver4 => cis_fraction(n as i64, 8),
            PhaseConvention::PiOver8 => cis_fraction(n as i64, 16),
        }
    }
}

/// `c(n) q^{-n²/8} f_n`, whose real and imaginary parts are `F_n` and `G_n`.
pub fn rotated_f(f: &PeriodizedVector, n: usize, params: &RootOfUnityParams, phase: PhaseConvention) -> Vec<Complex> {
    let factor = phase.phase(n) * params.q_pow(-((n * n) as f64) / 8.0);
    f.values.iter().map(|z| factor * z).collect()
}

/// The real vectors `F_n` (claimed eigenvalue `i^n`) and `G_n` (claimed
/// eigenvalue `-i^n`) with their residuals, whatever those turn out to be.
pub fn q_eigenvector_candidates(
    n: usize,
    size: usize,
    params: &RootOfUnityParams,
    policy: &TruncationPolicy,
    phase: PhaseConvention,
) -> Result<(EigenCandidate, EigenCandidate)> {
    let f = f_q_vector(n, size, *params, policy)?;
    let rotated = rotated_f(&f, n, params, phase);
    let part = |pick: fn(&Complex) -> f64| {
        let mut v = f.clone();
        v.values = rotated.iter().map(|z| Complex::new(pick(z), 0.0)).collect();
        v
    };
    let (j, m) = (params.j(), params.order());
    let op = dft_matrix(size)?;
    let lambda = Eigenvalue::i_power(n as i64);
    let big_f = EigenCandidate::with_operator(&op, part(|z| z.re), lambda, Provenance::QPlus { n, j, m })?;
    let big_g = EigenCandidate::with_operator(&op, part(|z| z.im), lambda.negated(), Provenance::QMinus { n, j, m })?;
    Ok((big_f, big_g))
}

/// [`q_eigenvector_candidates`], except that under
/// [`PhaseConvention::PiOver4`] a relative residual above
/// [`RESIDUAL_THRESHOLD`] is an error. `PiOver8` results are returned as they
/// are.
pub fn q_eigenvectors(
    n: usize,
    size: usize,
    params: &RootOfUnityParams,
    policy: &TruncationPolicy,
    phase: PhaseConvention,
) -> Result<(EigenCandidate, EigenCandidate)> {
    let (big_f, big_g) = q_eigenvector_candidates(n, size, params, policy, phase)?;
    if phase == PhaseConvention::PiOver4 {
        let worst = big_f.residual.max(big_g.residual);
        if !(worst <= RESIDUAL_THRESHOLD) {
            return Err(Error::ResidualTooLarge { residual: worst, threshold: RESIDUAL_THRESHOLD });
        }
    }
    Ok((big_f, big_g))
}

/// Degrees of Mehta's conjectured basis: `0..N` for odd `N`, and
/// `0..=N-2` together with `N` for even `N`.
pub fn mehta_degrees(size: usize) -> Vec<usize> {
    if size % 2 == 1 {
        (0..size).collect()
    } else {
        (0..size.saturating_sub(1)).chain(core::iter::once(size)).collect()
    }
}

/// Mehta vectors for every degree in [`mehta_degrees`], with eigenvalue `i^n`.
pub fn mehta_eigencheck(size: usize, policy: &TruncationPolicy) -> Result<Vec<EigenCandidate>> {
    let op = dft_matrix(size)?;
    mehta_degrees(size)
        .into_iter()
        .map(|n| {
            let v = mehta_vector(n, size, policy)?;
            EigenCandidate::with_operator(&op, v, Eigenvalue::i_power(n as i64), Provenance::Mehta { n })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceReport {
    pub rank: usize,
    pub smallest_singular_value: f64,
    pub largest_singular_value: f64,
    /// Largest `|<v_a, v_b>|` over `a != b` after normalising each column.
    pub max_offdiagonal_gram: f64,
}

/// Rank, extreme singular values and non-orthogonality of the candidate
/// vectors stacked as columns, each scaled to unit Euclidean norm (zero
/// columns are left as they are).
pub fn independence_report(candidates: &[EigenCandidate]) -> Result<IndependenceReport> {
    let first = candidates.first().ok_or(Error::Empty)?;
    let size = first.vector.size;
    let columns: Vec<Vec<Complex>> = candidates
        .iter()
        .map(|c| {
            if c.vector.size != size {
                return Err(Error::LengthMismatch { expected: size, found: c.vector.size });
            }
            let norm = libm::sqrt(c.vector.values.iter().map(|z| z.norm_sqr()).sum::<f64>());
            let scale = if norm > 0.0 { 1.0 / norm } else { 1.0 };
            Ok(c.vector.values.iter().map(|z| z * scale).collect())
        })
        .collect::<Result<_>>()?;
    let matrix = Matrix::from_columns(&columns)?;
    let sv = singular_values(&matrix);
    let largest = sv.first().copied().unwrap_or(0.0);
    let smallest = sv.last().copied().unwrap_or(0.0);
    let rank = sv.iter().filter(|&&s| s > RANK_TOL * largest).count();

    let gram = matrix.adjoint().matmul(&matrix)?;
    let mut max_offdiagonal_gram: f64 = 0.0;
    for a in 0..columns.len() {
        for b in 0..columns.len() {
            if a != b {
                max_offdiagonal_gram = max_offdiagonal_gram.max(gram[(a, b)].norm());
            }
        }
    }
    Ok(IndependenceReport {
        rank,
        smallest_singular_value: smallest,
        largest_singular_value: largest,
        max_offdiagonal_gram,
    })
}
