//! Eigenvalues of small complex Hermitian matrices.
//!
//! Cyclic Jacobi: every off-diagonal pair `(p, q)` is annihilated in turn by a
//! unitary plane rotation `G = D·R`, where `D = diag(1, e^{-iφ})` removes the
//! phase of `a_pq` and `R` is the classic real Jacobi rotation. Sweeps repeat
//! until the off-diagonal Frobenius norm drops below [`OFF_DIAGONAL_TOL`].

use num_complex::Complex64 as C64;

use super::matrix::HermitianMatrix;

/// Convergence threshold on the off-diagonal Frobenius norm, scaled by
/// `max(1, ||A||_F)`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of `m` in descending order.
///
/// Dimension 2 uses the closed form; everything else goes through
/// [`jacobi_eigenvalues`].
pub fn eigenvalues_hermitian(m: &HermitianMatrix) -> Vec<f64> {
    if m.dim() == 2 {
        let a = m.matrix();
        let (l1, l2) = eigenvalues_2x2(a[(0, 0)].re, a[(1, 1)].re, a[(0, 1)]);
        return vec![l1, l2];
    }
    jacobi_eigenvalues(m)
}

/// Closed-form spectrum of `[[a, b], [conj(b), d]]`, descending.
pub fn eigenvalues_2x2(a: f64, d: f64, b: C64) -> (f64, f64) {
    let mean = 0.5 * (a + d);
    let half_gap = (0.5 * (a - d)).hypot(b.norm());
    (mean + half_gap, mean - half_gap)
}

/// Cyclic Jacobi eigenvalues (descending), for any dimension.
pub fn jacobi_eigenvalues(m: &HermitianMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut a: Vec<C64> = m.matrix().as_slice().to_vec();
    for i in 0..n {
        a[i * n + i] = C64::new(a[i * n + i].re, 0.0);
    }
    let scale = m.matrix().frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) < OFF_DIAGONAL_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    eig
}

fn off_diagonal_norm(a: &[C64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(a: &mut [C64], n: usize, p: usize, q: usize) {
    let b = a[p * n + q];
    let b_abs = b.norm();
    if b_abs < f64::MIN_POSITIVE {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let phase = b / b_abs; // e^{iφ}

    let theta = (aqq - app) / (2.0 * b_abs);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    };
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    // G restricted to (p, q): [[c, s], [-s e^{-iφ}, c e^{-iφ}]]
    let g_pp = C64::new(c, 0.0);
    let g_pq = C64::new(s, 0.0);
    let g_qp = -phase.conj() * s;
    let g_qq = phase.conj() * c;

    // A <- A G
    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * g_pp + akq * g_qp;
        a[k * n + q] = akp * g_pq + akq * g_qq;
    }
    // A <- G^dag A
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[q * n + k] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[p * n + q] = C64::new(0.0, 0.0);
    a[q * n + p] = C64::new(0.0, 0.0);
    a[p * n + p] = C64::new(a[p * n + p].re, 0.0);
    a[q * n + q] = C64::new(a[q * n + q].re, 0.0);
}
