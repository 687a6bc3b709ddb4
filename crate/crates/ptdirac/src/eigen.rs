//! Eigenvalues and singular values for 2x2 and 4x4 complex matrices.
//!
//! The eigenvalue routine is a shifted QR iteration on the Hessenberg form,
//! deflating trailing 1x1 and 2x2 blocks (2x2 blocks are closed by the
//! quadratic formula). Singular values come from a one-sided Jacobi sweep,
//! which keeps tiny singular values accurate enough for the rank test at
//! the exceptional line.

use num_complex::Complex64;

use crate::error::{PtDiracError, Result};
use crate::matrix::OperatorMatrix;

/// Eigenvalues of a 2x2 complex matrix by the quadratic formula.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> [Complex64; 2] {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = (tr * tr - 4.0 * det).sqrt();
    // Pick the sign that avoids cancellation in the larger root.
    let s = if (tr + disc).norm() >= (tr - disc).norm() {
        disc
    } else {
        -disc
    };
    let l1 = (tr + s) / 2.0;
    let l2 = if l1.norm() > 0.0 { det / l1 } else { (tr - s) / 2.0 };
    [l1, l2]
}

/// Complex Givens rotation G = [[conj(a), conj(b)], [-b, a]] / r zeroing the
/// second component of (a, b).
fn givens(a: Complex64, b: Complex64) -> (Complex64, Complex64, f64) {
    let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
    (a, b, r)
}

fn apply_givens_rows(h: &mut [Complex64], n: usize, i: usize, a: Complex64, b: Complex64, r: f64) {
    for j in 0..n {
        let x = h[i * n + j];
        let y = h[(i + 1) * n + j];
        h[i * n + j] = (a.conj() * x + b.conj() * y) / r;
        h[(i + 1) * n + j] = (-b * x + a * y) / r;
    }
}

fn apply_givens_cols(h: &mut [Complex64], n: usize, i: usize, a: Complex64, b: Complex64, r: f64) {
    for row in 0..n {
        let x = h[row * n + i];
        let y = h[row * n + i + 1];
        h[row * n + i] = (x * a + y * b) / r;
        h[row * n + i + 1] = (-x * b.conj() + y * a.conj()) / r;
    }
}

/// Reduce to upper Hessenberg form by Householder similarity.
fn hessenberg(h: &mut [Complex64], n: usize) {
    for k in 0..n.saturating_sub(2) {
        // Householder vector for column k, rows k+1..n.
        let mut norm_sqr = 0.0;
        for i in k + 1..n {
            norm_sqr += h[i * n + k].norm_sqr();
        }
        let x0 = h[(k + 1) * n + k];
        let norm = norm_sqr.sqrt();
        if norm <= f64::MIN_POSITIVE {
            continue;
        }
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::ONE };
        let alpha = -phase * norm;
        let mut v = vec![Complex64::ZERO; n];
        v[k + 1] = x0 - alpha;
        for i in k + 2..n {
            v[i] = h[i * n + k];
        }
        let vnorm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sqr <= f64::MIN_POSITIVE {
            continue;
        }
        // H <- P H P with P = I - 2 v v^+/(v^+ v).
        let beta = 2.0 / vnorm_sqr;
        // Left: H -= beta * v (v^+ H)
        for j in 0..n {
            let mut dot = Complex64::ZERO;
            for i in k + 1..n {
                dot += v[i].conj() * h[i * n + j];
            }
            dot *= beta;
            for i in k + 1..n {
                h[i * n + j] -= v[i] * dot;
            }
        }
        // Right: H -= beta * (H v) v^+
        for i in 0..n {
            let mut dot = Complex64::ZERO;
            for j in k + 1..n {
                dot += h[i * n + j] * v[j];
            }
            dot *= beta;
            for j in k + 1..n {
                h[i * n + j] -= dot * v[j].conj();
            }
        }
    }
}

/// Eigenvalues of a general small complex matrix.
pub fn eigenvalues(m: &OperatorMatrix) -> Result<Vec<Complex64>> {
    let n = m.dim();
    let mut h: Vec<Complex64> = m.entries().to_vec();
    let scale = m.frobenius_norm();
    if scale == 0.0 {
        return Ok(vec![Complex64::ZERO; n]);
    }
    hessenberg(&mut h, n);

    let mut eigs = Vec::with_capacity(n);
    let mut hi = n; // active block is 0..hi
    let eps = f64::EPSILON;
    let mut iter_since_deflate = 0usize;
    let mut total_iter = 0usize;
    while hi > 0 {
        if hi == 1 {
            eigs.push(h[0]);
            hi = 0;
            continue;
        }
        // Look for a negligible subdiagonal inside the active block.
        let mut lo = 0;
        for i in (1..hi).rev() {
            let sub = h[i * n + (i - 1)].norm();
            let local = h[(i - 1) * n + (i - 1)].norm() + h[i * n + i].norm();
            if sub <= eps * local.max(scale * eps) {
                h[i * n + (i - 1)] = Complex64::ZERO;
                lo = i;
                break;
            }
        }
        if lo == hi - 1 {
            eigs.push(h[(hi - 1) * n + (hi - 1)]);
            hi -= 1;
            iter_since_deflate = 0;
            continue;
        }
        if lo == hi - 2 {
            let i = hi - 2;
            let [l1, l2] = eig2(
                h[i * n + i],
                h[i * n + i + 1],
                h[(i + 1) * n + i],
                h[(i + 1) * n + i + 1],
            );
            eigs.push(l1);
            eigs.push(l2);
            hi -= 2;
            iter_since_deflate = 0;
            continue;
        }
        total_iter += 1;
        iter_since_deflate += 1;
        if total_iter > 500 {
            return Err(PtDiracError::EigenNoConvergence);
        }
        // Wilkinson shift from the trailing 2x2 of the active block; an
        // occasional exceptional shift breaks rare stalls.
        let i = hi - 2;
        let shift = if iter_since_deflate.is_multiple_of(12) {
            h[(hi - 1) * n + (hi - 1)] + Complex64::new(1.0, 0.5) * h[(hi - 1) * n + i].norm()
        } else {
            let [l1, l2] = eig2(
                h[i * n + i],
                h[i * n + i + 1],
                h[(i + 1) * n + i],
                h[(i + 1) * n + i + 1],
            );
            let corner = h[(hi - 1) * n + (hi - 1)];
            if (l1 - corner).norm() <= (l2 - corner).norm() {
                l1
            } else {
                l2
            }
        };
        // Explicit single-shift QR step on rows/cols lo..hi.
        for d in lo..hi {
            h[d * n + d] -= shift;
        }
        let mut rotations = Vec::with_capacity(hi - lo - 1);
        for i in lo..hi - 1 {
            let (a, b, r) = givens(h[i * n + i], h[(i + 1) * n + i]);
            if r > 0.0 {
                apply_givens_rows(&mut h, n, i, a, b, r);
            }
            rotations.push((i, a, b, r));
        }
        for &(i, a, b, r) in &rotations {
            if r > 0.0 {
                apply_givens_cols(&mut h, n, i, a, b, r);
            }
        }
        for d in lo..hi {
            h[d * n + d] += shift;
        }
    }
    Ok(eigs)
}

/// Singular values in descending order, by one-sided Jacobi on the columns.
pub fn singular_values(m: &OperatorMatrix) -> Vec<f64> {
    let n = m.dim();
    // Work on columns: cols[j][i] = A[i][j].
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| m.get(i, j)).collect())
        .collect();
    for _sweep in 0..40 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = Complex64::ZERO;
                for (ap, aq) in cols[p].iter().zip(cols[q].iter()) {
                    app += ap.norm_sqr();
                    aqq += aq.norm_sqr();
                    apq += ap.conj() * aq;
                }
                let denom = (app * aqq).sqrt();
                if denom <= f64::MIN_POSITIVE || apq.norm() <= 1e-30 * denom {
                    continue;
                }
                off = off.max(apq.norm() / denom);
                // Phase so the inner product becomes real, then a real
                // Jacobi rotation zeroing it.
                let phase = apq / apq.norm();
                let g = apq.norm();
                let tau = (aqq - app) / (2.0 * g);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = cols.split_at_mut(q);
                for (cp, cq) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let ap = *cp;
                    let aq = *cq * phase.conj();
                    *cp = c * ap - s * aq;
                    *cq = (s * ap + c * aq) * phase;
                }
            }
        }
        if off <= 1e-15 {
            break;
        }
    }
    let mut sigmas: Vec<f64> = cols
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sigmas.sort_by(|a, b| b.total_cmp(a));
    sigmas
}

/// Numerical rank: count of singular values above `threshold`.
pub fn rank(m: &OperatorMatrix, threshold: f64) -> usize {
    singular_values(m).iter().filter(|&&s| s > threshold).count()
}

/// Coefficients of the characteristic polynomial
/// lambda^n + c[0] lambda^{n-1} + ... + c[n-1], by Faddeev-LeVerrier.
pub fn char_poly(m: &OperatorMatrix) -> Vec<Complex64> {
    let n = m.dim();
    let mut coeffs = Vec::with_capacity(n);
    let mut aux = m.clone();
    let mut c = -aux.trace();
    coeffs.push(c);
    for k in 2..=n {
        let shifted = aux
            .add(&OperatorMatrix::identity(n).unwrap().scale(c))
            .unwrap();
        aux = m.mul(&shifted).unwrap();
        c = -aux.trace() / (k as f64);
        coeffs.push(c);
    }
    coeffs
}
