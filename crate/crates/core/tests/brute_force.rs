//! Dense-matrix oracles: every closed form checked against explicit linear algebra
//! on the full 4×4 density matrix or the full N-qubit state vector.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Complex, DMatrix, Matrix2, Matrix4};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xdiscord::families::{expectation_oracle, SymmetricState};
use xdiscord::measurement::{conditional_outcome, Branch};
use xdiscord::oracle::random_xstate;
use xdiscord::{
    concurrence_closed, concurrence_rmatrix, family_xstate, FamilyPoint, MeasurementAngles, Parity, XState,
};

type C = Complex<f64>;

fn c(z: Complex64) -> C {
    C::new(z.re, z.im)
}

fn dense(s: &XState) -> Matrix4<C> {
    let m = s.matrix();
    Matrix4::from_fn(|i, j| c(m[i][j]))
}

fn entropy_of(eigs: impl Iterator<Item = f64>) -> f64 {
    eigs.map(|l| if l > 1e-300 { -l * l.log2() } else { 0.0 }).sum()
}

fn vn_entropy4(m: &Matrix4<C>) -> f64 {
    entropy_of(m.symmetric_eigenvalues().iter().copied())
}

fn vn_entropy2(m: &Matrix2<C>) -> f64 {
    entropy_of(m.symmetric_eigenvalues().iter().copied())
}

/// `Tr_B` and `Tr_A` with qubit A as the high bit.
fn marginals(m: &Matrix4<C>) -> (Matrix2<C>, Matrix2<C>) {
    let a = Matrix2::from_fn(|i, j| m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)]);
    let b = Matrix2::from_fn(|i, j| m[(i, j)] + m[(2 + i, 2 + j)]);
    (a, b)
}

/// Projects B onto `(I + sign n·σ)/2`, traces B out, returns `(p, ρ_A)`.
fn measure_b(m: &Matrix4<C>, theta: f64, phi: f64, sign: f64) -> (f64, Matrix2<C>) {
    let (st, ct) = theta.sin_cos();
    let i2 = Matrix2::<C>::identity();
    let n_sigma = Matrix2::new(
        C::new(ct, 0.0),
        C::from_polar(st, -phi),
        C::from_polar(st, phi),
        C::new(-ct, 0.0),
    );
    let proj = (i2 + n_sigma * C::new(sign, 0.0)) * C::new(0.5, 0.0);
    let full = i2.kronecker(&proj);
    let post = full * m * full;
    let (rho_a, _) = marginals(&post);
    let p = rho_a.trace().re;
    (p, rho_a / C::new(p, 0.0))
}

fn sample_states(count: usize, seed: u64) -> Vec<XState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_xstate(&mut rng)).collect()
}

#[test]
fn entropies_match_dense_eigendecomposition() {
    for s in sample_states(500, 1) {
        let m = dense(&s);
        let (a, b) = marginals(&m);
        assert!((s.joint_entropy() - vn_entropy4(&m)).abs() < 1e-9, "{s:?}");
        assert!((s.reduced_entropy() - vn_entropy2(&b)).abs() < 1e-12, "{s:?}");
        // exchange symmetry: both marginals agree
        assert!((vn_entropy2(&a) - vn_entropy2(&b)).abs() < 1e-12);
        let sp = s.spectrum();
        let mut dense_eigs: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        dense_eigs.sort_by(f64::total_cmp);
        let mut mine = [sp.lambda0, sp.lambda_plus, sp.lambda_minus, 0.0];
        mine.sort_by(f64::total_cmp);
        for (x, y) in mine.iter().zip(&dense_eigs) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}

#[test]
fn conditional_outcomes_match_explicit_measurement() {
    for (k, s) in sample_states(100, 2).into_iter().enumerate() {
        let m = dense(&s);
        let theta = PI * ((k * 37) % 101) as f64 / 100.0;
        let phi = 0.13 * k as f64;
        let angles = MeasurementAngles::new(theta, phi).unwrap();
        for (branch, sign) in [(Branch::Plus, 1.0), (Branch::Minus, -1.0)] {
            let o = conditional_outcome(&s, angles, branch);
            let (p, rho) = measure_b(&m, theta, phi, sign);
            assert!((o.probability - p).abs() < 1e-13);
            if p > 1e-9 {
                for i in 0..2 {
                    for j in 0..2 {
                        assert!((c(o.state[i][j]) - rho[(i, j)]).norm() < 1e-10, "{s:?} {theta} {phi}");
                    }
                }
                let eig = rho.symmetric_eigenvalues();
                let gap = (eig[0] - eig[1]).abs();
                assert!((o.kappa - gap).abs() < 1e-10);
            }
        }
    }
}

/// Concurrence from the Schur eigenvalues of the non-Hermitian `R = ρ ρ̃`.
///
/// nalgebra's Hermitian eigenvectors are unreliable for complex input, so the
/// `√ρ ρ̃ √ρ` route is avoided.
fn concurrence_dense(s: &XState) -> f64 {
    let m = dense(s);
    let sy = Matrix2::new(C::new(0.0, 0.0), C::new(0.0, -1.0), C::new(0.0, 1.0), C::new(0.0, 0.0));
    let flip = sy.kronecker(&sy);
    let tilde = flip * m.conjugate() * flip;
    let r = m * tilde;
    let eigs = r.eigenvalues().expect("Schur decomposition converges");
    let mut roots: Vec<f64> = eigs.iter().map(|l| l.re.max(0.0).sqrt()).collect();
    roots.sort_by(|a, b| b.total_cmp(a));
    (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0)
}

#[test]
fn concurrence_matches_dense_wootters() {
    // square roots of near-zero eigenvalues limit the dense route to ~1e-7
    for s in sample_states(2000, 3) {
        let dense = concurrence_dense(&s);
        assert!((concurrence_closed(&s) - dense).abs() < 1e-6, "{s:?}: dense {dense}");
        assert!((concurrence_rmatrix(&s) - dense).abs() < 1e-6, "{s:?}: dense {dense}");
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Full 2^N state vector of a symmetric state; bit value 0 marks an excited qubit.
fn expand(sym: &SymmetricState) -> Vec<C> {
    let n = sym.n_qubits();
    let mut psi = vec![C::new(0.0, 0.0); 1 << n];
    for (idx, amp) in psi.iter_mut().enumerate() {
        let excited = n - idx.count_ones() as usize;
        *amp = c(sym.coeffs()[excited]) / C::new(binomial(n, excited).sqrt(), 0.0);
    }
    psi
}

/// Reduced state of the two most significant qubits.
fn two_qubit_reduction(psi: &[C], n: usize) -> Matrix4<C> {
    let rest = 1 << (n - 2);
    let mut rho = Matrix4::<C>::zeros();
    for a in 0..4 {
        for b in 0..4 {
            rho[(a, b)] = (0..rest).map(|r| psi[a * rest + r] * psi[b * rest + r].conj()).sum();
        }
    }
    rho
}

fn assert_reduction_matches(p: FamilyPoint) {
    let sym = p.symmetric_state().unwrap();
    let n = sym.n_qubits();
    let rho = two_qubit_reduction(&expand(&sym), n);
    let closed = dense(&family_xstate(&p).unwrap());
    let diff = DMatrix::from_fn(4, 4, |i, j| (rho[(i, j)] - closed[(i, j)]).norm()).max();
    assert!(diff < 1e-12, "{p:?}: max deviation {diff:e}\n{rho}\n{closed}");
}

#[test]
fn dicke_reductions_match_full_state_vector() {
    for n_qubits in 2..=8 {
        for excitation in 0..=n_qubits {
            assert_reduction_matches(FamilyPoint::Dicke { n_qubits, excitation });
        }
    }
}

#[test]
fn superposition_reductions_match_full_state_vector() {
    for n_qubits in 2..=8 {
        for excitation in 0..=n_qubits - 2 {
            for (alpha, delta) in [(0.3, 0.0), (1.1, 0.7), (2.9, 4.0), (FRAC_PI_2, 5.5)] {
                assert_reduction_matches(FamilyPoint::Superposition {
                    n_qubits,
                    excitation,
                    alpha,
                    delta,
                });
            }
        }
    }
}

#[test]
fn scs_reductions_match_full_state_vector() {
    for n_qubits in 2..=8 {
        for eta in [0.0, 0.05, 0.3, 0.77, 1.0] {
            for parity in [Parity::Even, Parity::Odd] {
                assert_reduction_matches(FamilyPoint::Scs { n_qubits, eta, parity });
            }
        }
    }
}

#[test]
fn ghz_like_reduction_is_classical() {
    for n_qubits in 3..=8 {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n_qubits + 1];
        coeffs[n_qubits] = Complex64::new(0.6, 0.0);
        coeffs[0] = Complex64::from_polar(0.8, 1.3);
        let sym = SymmetricState::new(coeffs).unwrap();
        let s = sym.xstate().unwrap();
        assert!((s.v_plus() - 0.36).abs() < 1e-14);
        assert!((s.v_minus() - 0.64).abs() < 1e-14);
        assert!(s.y().abs() < 1e-14 && s.u().norm() < 1e-14);
        let rho = two_qubit_reduction(&expand(&sym), n_qubits);
        assert!((rho - dense(&s)).norm() < 1e-12);
        assert!(expectation_oracle(&sym).unwrap().jplus2().norm() < 1e-14);
    }
}
