//! End-to-end acceptance battery. Each test prints one PASS/FAIL line; run with
//! `cargo test -p qdft-core --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use qdft_core::eigen::{independence_report, mehta_eigencheck, q_eigenvectors, PhaseConvention};
use qdft_core::fourier::{
    dft_matrix, verify_cos_power, verify_gaussian_qhermite_transform, verify_hermite_eigenfunction,
    verify_real_branch_transform, verify_root_branch_transform, verify_self_dual_transform, HermiteFunction, Integrand,
    QuadratureSpec,
};
use qdft_core::linalg::Matrix;
use qdft_core::periodize::{
    f_q_vector, g_q_vector, verify_conjugate_relations, verify_finite_pair, verify_poisson_transfer, TruncationPolicy,
};
use qdft_core::qhermite::{qtolimit_deviation, root_limit_deviation, verify_chebyshev_identity, verify_factorization};
use qdft_core::{equispaced_grid, max_abs_diff, Complex, RealQParams, RootOfUnityParams};

fn report(name: &str, pass: bool, detail: &str, elapsed: Duration, limit: Option<Duration>) {
    let in_time = limit.map_or(true, |l| elapsed <= l);
    let status = if pass && in_time { "PASS" } else { "FAIL" };
    let budget = limit.map_or(String::new(), |l| format!(" / limit {:.0}s", l.as_secs_f64()));
    println!("[{status}] {name}: {detail} ({:.2}s{budget})", elapsed.as_secs_f64());
    assert!(pass, "{name}: {detail}");
    assert!(in_time, "{name}: took {:.2}s", elapsed.as_secs_f64());
}

fn max_entry_distance(a: &Matrix, b: &Matrix) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            worst = worst.max((a[(r, c)] - b[(r, c)]).norm());
        }
    }
    worst
}

fn policy() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn roots() -> Vec<RootOfUnityParams> {
    [(1, 3), (1, 4), (2, 5)].iter().map(|&(j, m)| RootOfUnityParams::new(j, m).unwrap()).collect()
}

#[test]
fn dft_structure() {
    let start = Instant::now();
    let (mut unitary, mut fourth, mut spectrum): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let targets = [Complex::new(1.0, 0.0), Complex::new(-1.0, 0.0), Complex::new(0.0, 1.0), Complex::new(0.0, -1.0)];
    for n in 1..=64 {
        let phi = dft_matrix(n).unwrap();
        let m = phi.matrix();
        let id = Matrix::identity(n);
        unitary = unitary.max(max_entry_distance(&m.matmul(&m.adjoint()).unwrap(), &id));
        let m2 = m.matmul(m).unwrap();
        fourth = fourth.max(max_entry_distance(&m2.matmul(&m2).unwrap(), &id));

        // Φ is normal, so its eigenvectors diagonalise the Hermitian matrix
        // H₁ + 0.37 H₂ built from its Hermitian and skew parts; the four
        // eigenvalue classes map to the distinct values ±1, ±0.37 there.
        let dense = DMatrix::from_fn(n, n, |r, c| m[(r, c)]);
        let adj = dense.adjoint();
        let h1 = (&dense + &adj) * Complex::new(0.5, 0.0);
        let h2 = (&dense - &adj) * Complex::new(0.0, -0.5);
        let vectors = (h1 + h2 * Complex::new(0.37, 0.0)).symmetric_eigen().eigenvectors;
        for k in 0..n {
            let v = vectors.column(k);
            let mu = (v.adjoint() * &dense * v)[(0, 0)];
            let pair_residual = (&dense * v - v * mu).norm();
            let d = targets.iter().map(|t| (mu - t).norm()).fold(f64::INFINITY, f64::min);
            spectrum = spectrum.max(d).max(pair_residual);
        }
    }
    let pass = unitary < 1e-12 && fourth < 1e-11 && spectrum < 1e-10;
    let detail = format!("N=1..64: max|ΦΦ*-I| {unitary:.2e}, max|Φ⁴-I| {fourth:.2e}, spectrum distance {spectrum:.2e}");
    report("DFT unitarity, fourth power and spectrum", pass, &detail, start.elapsed(), Some(Duration::from_secs(10)));
}

#[test]
fn hermite_eigenfunctions() {
    let start = Instant::now();
    let ys = equispaced_grid(13, -3.0, 3.0);
    let worst = (0..=10).map(|n| verify_hermite_eigenfunction(n, &ys).unwrap()).fold(0.0, f64::max);
    let detail = format!("n<=10, 13 samples on [-3,3]: max deviation {worst:.2e}");
    report(
        "Hermite functions are Fourier eigenfunctions",
        worst < 1e-8,
        &detail,
        start.elapsed(),
        Some(Duration::from_secs(5)),
    );
}

#[test]
fn mehta_relation() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for size in [3, 4, 5, 8, 9, 16] {
        for cand in mehta_eigencheck(size, &policy()).unwrap() {
            worst = worst.max(cand.residual);
            count += 1;
        }
    }
    let detail = format!("{count} vectors, N in {{3,4,5,8,9,16}}: max relative residual {worst:.2e}");
    report("Mehta vectors are DFT eigenvectors", worst < 1e-9, &detail, start.elapsed(), Some(Duration::from_secs(5)));
}

#[test]
fn chebyshev_collapse_and_factorization() {
    let start = Instant::now();
    let grid = equispaced_grid(101, -1.0, 1.0);
    let (mut collapse, mut factor): (f64, f64) = (0.0, 0.0);
    let mut cases = 0;
    for m in 2..=12i64 {
        for j in 1..m {
            let Ok(p) = RootOfUnityParams::coprime(j, m) else { continue };
            cases += 1;
            collapse = collapse.max(verify_chebyshev_identity(&p, &grid).unwrap());
            for mult in 0..=3 {
                for n in 0..m as usize {
                    factor = factor.max(verify_factorization(&p, mult, n, &grid).unwrap());
                }
            }
        }
    }
    let detail =
        format!("{cases} coprime (j,M) with M<=12: collapse {collapse:.2e}, factorization (m<=3) {factor:.2e}");
    report(
        "Chebyshev collapse and factorization at roots of unity",
        collapse < 1e-10 && factor < 1e-10,
        &detail,
        start.elapsed(),
        Some(Duration::from_secs(5)),
    );
}

#[test]
fn integral_transform_battery() {
    let start = Instant::now();
    let ys = equispaced_grid(13, -3.0, 3.0);
    let reals: Vec<RealQParams> = [0.5, 0.7].iter().map(|&q| RealQParams::from_q(q).unwrap()).collect();
    let mut general: f64 = 0.0;
    let mut self_dual: f64 = 0.0;
    let mut real_branch: f64 = 0.0;
    let mut root_branch: f64 = 0.0;
    let mut cos_power: f64 = 0.0;
    for n in 0..=8 {
        for p in &reals {
            let (lam, q) = (Complex::new(p.kappa(), 0.0), Complex::new(p.q(), 0.0));
            general = general.max(verify_gaussian_qhermite_transform(n, lam, q, &ys).unwrap());
            self_dual = self_dual.max(verify_self_dual_transform(n, lam, q, &ys).unwrap());
            real_branch = real_branch.max(verify_real_branch_transform(n, p, &ys).unwrap());
        }
        for p in &roots() {
            general = general.max(verify_gaussian_qhermite_transform(n, p.alpha(), p.q(), &ys).unwrap());
            self_dual = self_dual.max(verify_self_dual_transform(n, p.alpha(), p.q(), &ys).unwrap());
            root_branch = root_branch.max(verify_root_branch_transform(n, p, &ys).unwrap());
        }
    }
    for p in &roots() {
        for m in 0..=2 {
            let d = verify_cos_power(m, p.j() as i64, p.order() as i64, &ys).unwrap();
            cos_power = cos_power.max(d);
        }
    }
    let worst = general.max(self_dual).max(real_branch).max(root_branch).max(cos_power);
    let detail = format!(
        "n<=8, q in {{0.5,0.7}}, (j,M) in {{(1,3),(1,4),(2,5)}}: general {general:.2e}, \
         q=exp(-2λ²) {self_dual:.2e}, real branch {real_branch:.2e}, root branch {root_branch:.2e}, \
         cosine powers m<=2 {cos_power:.2e}"
    );
    report(
        "Gaussian q-Hermite integral transforms",
        worst < 1e-7,
        &detail,
        start.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn finite_transform_relations() {
    let start = Instant::now();
    let reals: Vec<RealQParams> = [0.5, 0.7].iter().map(|&q| RealQParams::from_q(q).unwrap()).collect();
    let (mut pair, mut conj_rel, mut conj_id, mut conj_id_relative): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for size in [5, 8] {
        for n in 0..=6 {
            for p in &reals {
                pair = pair.max(verify_finite_pair(n, size, *p, &policy()).unwrap());
            }
            for p in &roots() {
                pair = pair.max(verify_finite_pair(n, size, *p, &policy()).unwrap());
                let (a, b) = verify_conjugate_relations(n, size, p, &policy()).unwrap();
                conj_rel = conj_rel.max(a).max(b);
                let f = f_q_vector(n, size, *p, &policy()).unwrap();
                let g = g_q_vector(n, size, *p, &policy()).unwrap();
                let d = max_abs_diff(&g.values, &f.conj().values);
                if p.order() == 5 {
                    conj_id_relative = conj_id_relative.max(d / f.norm_inf());
                } else {
                    conj_id = conj_id.max(d);
                }
            }
        }
    }
    println!("[INFO] g - conj(f) at (j,M) = (2,5), relative to ‖f‖∞: {conj_id_relative:.2e}");
    let detail = format!(
        "N in {{5,8}}, n<=6, both branches: Φf-q^(n²/4)g {pair:.2e}, conjugate relations {conj_rel:.2e}, \
         g-conj(f) at (1,3),(1,4) {conj_id:.2e}"
    );
    report(
        "Finite Fourier pairs of periodized q-Hermite vectors",
        pair < 1e-8 && conj_rel < 1e-8 && conj_id < 1e-10,
        &detail,
        start.elapsed(),
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn q_eigenvector_construction() {
    let start = Instant::now();
    let (mut quarter, mut eighth): (f64, f64) = (0.0, 0.0);
    let mut eighth_failures = 0;
    let mut total = 0;
    for (j, m) in [(1, 3), (1, 4)] {
        let p = RootOfUnityParams::new(j, m).unwrap();
        for size in [5, 8] {
            for n in 0..=6 {
                let (f, g) = q_eigenvectors(n, size, &p, &policy(), PhaseConvention::PiOver4).unwrap();
                quarter = quarter.max(f.residual).max(g.residual);
                let (f8, g8) = q_eigenvectors(n, size, &p, &policy(), PhaseConvention::PiOver8).unwrap();
                let r8 = f8.residual.max(g8.residual);
                eighth = eighth.max(r8);
                total += 1;
                if r8 >= 1e-7 {
                    eighth_failures += 1;
                }
            }
        }
    }
    println!("[INFO] e^(iπn/8) phase probe: max residual {eighth:.2e}, {eighth_failures}/{total} cases above 1e-7");
    let detail = format!("N in {{5,8}}, n<=6, (j,M) in {{(1,3),(1,4)}}: e^(iπn/4) phase max residual {quarter:.2e}");
    report("Real eigenvectors F_n, G_n at roots of unity", quarter < 1e-7, &detail, start.elapsed(), None);
}

#[test]
fn poisson_transfer() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 0..=5 {
        let f = HermiteFunction { n };
        let cert = f.certificate();
        let spec = QuadratureSpec::for_degree(n, 0.0, &cert).unwrap();
        for size in [4, 5, 8] {
            worst = worst.max(verify_poisson_transfer(&f, cert, &spec, size, &policy()).unwrap());
        }
    }
    let detail = format!("Gaussian·H_n, n<=5, N in {{4,5,8}}: max |Φ(Mf) - M(FT f)| {worst:.2e}");
    report(
        "Periodization carries integral to finite transforms",
        worst < 1e-8,
        &detail,
        start.elapsed(),
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn classical_limits() {
    let start = Instant::now();
    let xs = [0.3, 0.7, 1.1];
    let mut violations = Vec::new();
    let mut settled: f64 = 0.0;
    for n in 0..=5 {
        for &x in &xs {
            let seq: Vec<f64> = [0.9, 0.99, 0.999].iter().map(|&q| qtolimit_deviation(n, q, x).unwrap()).collect();
            if n <= 2 {
                // these degrees coincide with H_n after rescaling; only roundoff remains
                settled = settled.max(seq.iter().copied().fold(0.0, f64::max));
            } else if !(seq[0] > seq[1] && seq[1] > seq[2]) {
                violations.push(format!("real n={n} x={x}: {seq:?}"));
            }
            let seq: Vec<f64> = [8, 16, 32]
                .iter()
                .map(|&m| root_limit_deviation(n, &RootOfUnityParams::new(1, m).unwrap(), x))
                .collect();
            if n == 0 {
                settled = settled.max(seq.iter().copied().fold(0.0, f64::max));
            } else if !(seq[0] > seq[1] && seq[1] > seq[2]) {
                violations.push(format!("root n={n} x={x}: {seq:?}"));
            }
        }
    }
    let pass = violations.is_empty() && settled < 1e-10;
    let detail = format!(
        "q -> 1 and M -> ∞: {} non-decreasing sequences; degrees with exact limit stay at {settled:.1e}",
        violations.len()
    );
    for v in &violations {
        println!("  {v}");
    }
    report("Classical Hermite limits", pass, &detail, start.elapsed(), None);
}

#[test]
fn independence_and_non_orthogonality() {
    let start = Instant::now();
    let mut weakest = f64::INFINITY;
    let mut rank_deficient = Vec::new();
    let mut witness = None;
    for size in 1..=32 {
        let cands = mehta_eigencheck(size, &policy()).unwrap();
        let rep = independence_report(&cands).unwrap();
        weakest = weakest.min(rep.smallest_singular_value);
        if rep.rank < cands.len() || rep.smallest_singular_value <= 1e-8 {
            rank_deficient.push(size);
        }
        if size <= 8 && rep.max_offdiagonal_gram > 1e-6 && witness.is_none() {
            witness = Some((size, rep.max_offdiagonal_gram));
        }
    }
    let detail = format!(
        "N<=32: smallest normalized singular value {weakest:.2e}, rank-deficient sizes {rank_deficient:?}; \
         non-orthogonality witness {witness:?}"
    );
    report(
        "Mehta vectors independent but not orthogonal",
        rank_deficient.is_empty() && witness.is_some(),
        &detail,
        start.elapsed(),
        None,
    );
}
