//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
//!
//! The matrix is first split into the connected components of its nonzero
//! pattern (a permutation similarity, so the spectrum is unchanged) and each
//! component is diagonalized independently. Iteration stops once the
//! off-diagonal Frobenius norm of the whole matrix is below
//! `tol * (||A||_F + 1)`.

use crate::error::{Error, Result};
use crate::graph::{dense_cap, DenseSymmetricMatrix};

pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// All eigenvalues of `matrix`, ascending.
pub fn numeric_spectrum(matrix: &DenseSymmetricMatrix, tol: f64) -> Result<Vec<f64>> {
    numeric_spectrum_with(matrix, tol, DEFAULT_MAX_SWEEPS)
}

pub fn numeric_spectrum_with(matrix: &DenseSymmetricMatrix, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    let n = matrix.dimension();
    let cap = dense_cap();
    if n > cap {
        return Err(Error::DenseCapExceeded { dimension: n, cap });
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::Usage(format!("tolerance must be non-negative, got {tol}")));
    }
    let frobenius = matrix.as_slice().iter().map(|v| v * v).sum::<f64>().sqrt();
    let threshold = tol * (frobenius + 1.0);

    let components = components(matrix);
    let nontrivial = components.iter().filter(|c| c.len() > 1).count().max(1);
    // Per-component budget so the squared norms sum to at most threshold^2.
    let component_threshold = threshold / (nontrivial as f64).sqrt();

    let mut eigenvalues = Vec::with_capacity(n);
    let mut worst_off = 0.0f64;
    for members in components {
        if members.len() == 1 {
            let i = members[0];
            eigenvalues.push(matrix.get(i, i));
            continue;
        }
        let mut block = extract(matrix, &members);
        let (values, off) = diagonalize(&mut block, members.len(), component_threshold, max_sweeps);
        worst_off = worst_off.max(off);
        match values {
            Some(values) => eigenvalues.extend(values),
            None => return Err(Error::NoConvergence { sweeps: max_sweeps, off_norm: worst_off }),
        }
    }
    // A fully diagonal input has nothing to iterate on; it still has to meet
    // the strict bound.
    if threshold <= 0.0 {
        return Err(Error::NoConvergence { sweeps: 0, off_norm: 0.0 });
    }
    eigenvalues.sort_by(f64::total_cmp);
    Ok(eigenvalues)
}

/// Connected components of the nonzero pattern, each sorted ascending.
fn components(matrix: &DenseSymmetricMatrix) -> Vec<Vec<usize>> {
    let n = matrix.dimension();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for (j, &v) in matrix.row(i).iter().enumerate().skip(i + 1) {
            if v != 0.0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let root = find(&mut parent, i);
        groups[root].push(i);
    }
    groups.into_iter().filter(|g| !g.is_empty()).collect()
}

fn extract(matrix: &DenseSymmetricMatrix, members: &[usize]) -> Vec<f64> {
    let k = members.len();
    let mut block = vec![0.0; k * k];
    for (bi, &i) in members.iter().enumerate() {
        let row = matrix.row(i);
        for (bj, &j) in members.iter().enumerate() {
            block[bi * k + bj] = row[j];
        }
    }
    block
}

fn off_norm(a: &[f64], k: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..k {
        for &v in &a[p * k + p + 1..(p + 1) * k] {
            sum += v * v;
        }
    }
    (2.0 * sum).sqrt()
}

/// Runs cyclic sweeps on a `k x k` row-major block. Returns the diagonal once
/// the off-diagonal norm drops below `threshold`, or `None` after
/// `max_sweeps`, together with the last measured off-diagonal norm.
fn diagonalize(a: &mut [f64], k: usize, threshold: f64, max_sweeps: usize) -> (Option<Vec<f64>>, f64) {
    let mut row_p = vec![0.0; k];
    let mut row_q = vec![0.0; k];
    // Entries below `skip` are left alone: even if every off-diagonal entry
    // sat just under it, they would contribute at most threshold / 2.
    let skip = threshold / (2.0 * k as f64);
    let mut off = off_norm(a, k);
    for _ in 0..max_sweeps {
        if off < threshold {
            return (Some((0..k).map(|i| a[i * k + i]).collect()), off);
        }
        for p in 0..k - 1 {
            for q in p + 1..k {
                let apq = a[p * k + q];
                if apq == 0.0 || apq.abs() < skip {
                    continue;
                }
                rotate(a, k, p, q, apq, &mut row_p, &mut row_q);
            }
        }
        off = off_norm(a, k);
    }
    if off < threshold {
        return (Some((0..k).map(|i| a[i * k + i]).collect()), off);
    }
    (None, off)
}

/// Applies the Jacobi rotation that annihilates `a[p][q]`.
fn rotate(a: &mut [f64], k: usize, p: usize, q: usize, apq: f64, row_p: &mut [f64], row_q: &mut [f64]) {
    let app = a[p * k + p];
    let aqq = a[q * k + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t =
        if theta.abs() > 1e150 { 0.5 / theta } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    row_p.copy_from_slice(&a[p * k..(p + 1) * k]);
    row_q.copy_from_slice(&a[q * k..(q + 1) * k]);
    for r in 0..k {
        let g = row_p[r];
        let h = row_q[r];
        row_p[r] = g - s * (h + g * tau);
        row_q[r] = h + s * (g - h * tau);
    }
    row_p[p] = app - t * apq;
    row_q[q] = aqq + t * apq;
    row_p[q] = 0.0;
    row_q[p] = 0.0;

    a[p * k..(p + 1) * k].copy_from_slice(row_p);
    a[q * k..(q + 1) * k].copy_from_slice(row_q);
    for r in 0..k {
        a[r * k + p] = row_p[r];
        a[r * k + q] = row_q[r];
    }
}
