//! Small dense linear-algebra helpers (internal).

/// Solves `A x = b` in place by Gaussian elimination with partial pivoting.
/// Returns `None` when the pivot falls below `tol` (singular system).
pub(crate) fn solve(a: &mut [Vec<f64>], b: &mut [f64], tol: f64) -> Option<Vec<f64>> {
    let n = b.len();
    debug_assert!(a.len() == n && a.iter().all(|r| r.len() == n));
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col].abs() < tol {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for c in row + 1..n {
            s -= a[row][c] * x[c];
        }
        x[row] = s / a[row][row];
    }
    Some(x)
}

/// Nonnegative least squares `min ‖M μ − y‖, μ ≥ 0` by Lawson–Hanson active
/// set. `cols` are the columns of `M`. Sized for a handful of unknowns.
pub(crate) fn nnls(cols: &[Vec<f64>], y: &[f64], iters: usize) -> Vec<f64> {
    let k = cols.len();
    let mut mu = vec![0.0; k];
    if k == 0 {
        return mu;
    }
    let mut passive = vec![false; k];
    let resid = |mu: &[f64]| -> Vec<f64> {
        let mut r = y.to_vec();
        for (j, c) in cols.iter().enumerate() {
            for (ri, ci) in r.iter_mut().zip(c) {
                *ri -= mu[j] * ci;
            }
        }
        r
    };
    for _ in 0..iters {
        let r = resid(&mu);
        // most negative gradient among active (zero) coordinates
        let mut best = (usize::MAX, 1e-12);
        for j in 0..k {
            if passive[j] {
                continue;
            }
            let g: f64 = cols[j].iter().zip(&r).map(|(c, ri)| c * ri).sum();
            if g > best.1 {
                best = (j, g);
            }
        }
        if best.0 == usize::MAX {
            break;
        }
        passive[best.0] = true;
        // inner loop: solve unconstrained on the passive set, clip negatives
        loop {
            let idx: Vec<usize> = (0..k).filter(|&j| passive[j]).collect();
            let m = idx.len();
            let mut g = vec![vec![0.0; m]; m];
            let mut rhs = vec![0.0; m];
            for (p, &jp) in idx.iter().enumerate() {
                rhs[p] = cols[jp].iter().zip(y).map(|(c, yi)| c * yi).sum();
                for (q, &jq) in idx.iter().enumerate() {
                    g[p][q] = cols[jp].iter().zip(&cols[jq]).map(|(a, b)| a * b).sum();
                }
            }
            let sol = match solve(&mut g, &mut rhs, 1e-14) {
                Some(s) => s,
                None => {
                    // drop the most recent column and give up on this pivot
                    passive[*idx.last().unwrap()] = false;
                    break;
                }
            };
            if sol.iter().all(|&s| s >= -1e-14) {
                for &j in &idx {
                    mu[j] = 0.0;
                }
                for (p, &j) in idx.iter().enumerate() {
                    mu[j] = sol[p].max(0.0);
                }
                break;
            }
            // step toward sol until the first coordinate hits zero
            let mut alpha = 1.0f64;
            for (p, &j) in idx.iter().enumerate() {
                if sol[p] < 0.0 {
                    let denom = mu[j] - sol[p];
                    if denom > 1e-300 {
                        alpha = alpha.min(mu[j] / denom);
                    }
                }
            }
            for (p, &j) in idx.iter().enumerate() {
                mu[j] += alpha * (sol[p] - mu[j]);
                if mu[j] <= 1e-14 {
                    mu[j] = 0.0;
                    passive[j] = false;
                }
            }
        }
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let mut a = vec![vec![2.0, 1.0], vec![1.0, 3.0]];
        let mut b = vec![3.0, 5.0];
        let x = solve(&mut a, &mut b, 1e-14).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-12);
        assert!((x[1] - 1.4).abs() < 1e-12);
    }

    #[test]
    fn nnls_clips_negative_solution() {
        // y is best approximated by the first column alone
        let cols = vec![vec![1.0, 0.0], vec![-1.0, 0.1]];
        let y = vec![2.0, 0.0];
        let mu = nnls(&cols, &y, 50);
        assert!(mu[0] > 1.9 && mu[1].abs() < 1e-9);
    }
}
