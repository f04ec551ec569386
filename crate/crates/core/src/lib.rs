//! Eigenvectors of the finite Fourier transform built from Gaussian-weighted,
//! periodized continuous q-Hermite polynomials.
//!
//! The crate covers two families:
//!
//! * the classical Mehta vectors, lattice sums of Hermite functions that are
//!   eigenvectors of the unitary DFT with eigenvalue `i^n`;
//! * their q-extension for `q = exp(2πij/M)` a root of unity, where the
//!   Gaussian-weighted polynomial `H_n(sin(αx) | q)` transforms into its
//!   complex conjugate under the integral Fourier transform, and the
//!   periodized vectors pair up into real eigenvectors `F_n`, `G_n`.
//!
//! Every identity used on the construction path has an independent numerical
//! check: a double-double trapezoid oracle for integral transforms, dense
//! DFT matrix products for the finite transform, recurrence versus explicit
//! Fourier-sum evaluation for the polynomials, and a least-squares probe for
//! the discrete orthogonality on Chebyshev zeros.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use qdft_core::periodize::TruncationPolicy;
//! use qdft_core::eigen::{mehta_eigencheck};
//!
//! let candidates = mehta_eigencheck(5, &TruncationPolicy::default()).unwrap();
//! assert_eq!(candidates.len(), 5);
//! assert!(candidates.iter().all(|c| c.residual < 1e-9));
//! ```
#![no_std]
#![forbid(unsafe_code)]
// `!(x < tol)` is deliberate: NaN must fail the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// index loops mirror the matrix formulas
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dd;
pub mod eigen;
pub mod envelope;
mod error;
pub mod fourier;
pub mod linalg;
pub mod periodize;
pub mod qhermite;
pub mod qseries;

pub use error::{Error, Result};
pub use qseries::{Complex, QParams, RealQParams, RootOfUnityParams};

/// Maximum absolute entry of a complex slice; 0 for an empty slice.
pub fn norm_inf(values: &[Complex]) -> f64 {
    values.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Maximum entrywise distance between two equally long slices.
pub fn max_abs_diff(a: &[Complex], b: &[Complex]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `points` equispaced samples covering `[lo, hi]`, both endpoints included.
pub fn equispaced_grid(points: usize, lo: f64, hi: f64) -> alloc::vec::Vec<f64> {
    match points {
        0 => alloc::vec::Vec::new(),
        1 => alloc::vec![0.5 * (lo + hi)],
        _ => {
            let step = (hi - lo) / (points - 1) as f64;
            (0..points).map(|i| if i + 1 == points { hi } else { lo + step * i as f64 }).collect()
        }
    }
}
