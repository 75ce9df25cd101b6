//! Independent floating-point cross-check: multi-start damped Newton
//! iteration on the normalized Einstein residuals. Used only to confirm
//! solution counts and approximate coordinates; never part of any
//! certificate.

use crate::solver::Enumeration;
use num_traits::ToPrimitive;

fn ricci_f64(n: f64, p: f64, x: [f64; 4]) -> [f64; 4] {
    let d = [
        2.0 * p * (n - p),
        (n - p) * (n - p + 1.0),
        2.0 * p * (n - p),
        p * (p + 1.0),
    ];
    let c123 = p * (n - p) * (n - p + 1.0) / (2.0 * (n + 1.0));
    let c134 = p * (p + 1.0) * (n - p) / (2.0 * (n + 1.0));
    let mut r = [0.0_f64; 4];
    for k in 0..4 {
        r[k] = 1.0 / (2.0 * x[k]);
    }
    for (tri, w) in [([0usize, 1, 2], c123), ([0usize, 2, 3], c134)] {
        for idx in 0..3 {
            let k = tri[idx];
            let i = tri[(idx + 1) % 3];
            let j = tri[(idx + 2) % 3];
            r[k] += w / (2.0 * d[k])
                * (x[k] / (x[i] * x[j]) - x[i] / (x[k] * x[j]) - x[j] / (x[k] * x[i]));
        }
    }
    r
}

fn residual(n: f64, p: f64, v: [f64; 3]) -> [f64; 3] {
    let r = ricci_f64(n, p, [1.0, v[0], v[1], v[2]]);
    [r[0] - r[2], r[0] - r[1], r[2] - r[3]]
}

fn norm(v: [f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Gaussian elimination with partial pivoting on a 3x3 system.
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].abs() < 1e-14 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..3 {
            let factor = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = [0.0_f64; 3];
    for row in (0..3).rev() {
        let mut acc = b[row];
        for k in (row + 1)..3 {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

fn newton_from(n: f64, p: f64, start: [f64; 3]) -> Option<[f64; 3]> {
    let mut v = start;
    for _ in 0..80 {
        let f = residual(n, p, v);
        if norm(f) < 1e-11 {
            return Some(v);
        }
        let mut jac = [[0.0_f64; 3]; 3];
        for col in 0..3 {
            let h = 1e-7 * v[col].abs().max(1.0);
            let mut shifted = v;
            shifted[col] += h;
            let fh = residual(n, p, shifted);
            for row in 0..3 {
                jac[row][col] = (fh[row] - f[row]) / h;
            }
        }
        let step = solve3(jac, f)?;
        let base = norm(f);
        let mut t = 1.0_f64;
        let mut advanced = false;
        while t >= 1e-6 {
            let cand = [v[0] - t * step[0], v[1] - t * step[1], v[2] - t * step[2]];
            if cand.iter().all(|c| *c > 0.0) && norm(residual(n, p, cand)) < base {
                v = cand;
                advanced = true;
                break;
            }
            t *= 0.5;
        }
        if !advanced {
            return None;
        }
    }
    let f = residual(n, p, v);
    if norm(f) < 1e-11 {
        Some(v)
    } else {
        None
    }
}

/// Runs damped Newton iterations from a positive grid of starting points and
/// returns the distinct converged solutions `(x2, x3, x4)` sorted by `x3`
/// then `x2`.
pub fn newton_oracle(n: i64, p: i64, grid_density: usize) -> Vec<[f64; 3]> {
    let nf = n as f64;
    let pf = p as f64;
    let mut clusters: Vec<[f64; 3]> = Vec::new();
    let step = 6.0 / grid_density as f64;
    for a in 1..=grid_density {
        for b in 1..=grid_density {
            for c in 1..=grid_density {
                let start = [a as f64 * step, b as f64 * step, c as f64 * step];
                let Some(v) = newton_from(nf, pf, start) else {
                    continue;
                };
                let known = clusters.iter().any(|u| {
                    u.iter()
                        .zip(v.iter())
                        .all(|(x, y)| (x - y).abs() < 1e-6)
                });
                if !known {
                    clusters.push(v);
                }
            }
        }
    }
    clusters.sort_by(|a, b| {
        (a[1], a[0])
            .partial_cmp(&(b[1], b[0]))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    clusters
}

/// Result of comparing the floating-point clusters against a certified
/// enumeration.
#[derive(Clone, Debug)]
pub struct NewtonComparison {
    pub cluster_count: usize,
    pub certified_count: usize,
    pub matched: bool,
    /// Largest inf-norm distance between a certified solution and its
    /// nearest cluster, over matched pairs.
    pub max_distance: f64,
}

/// Matches every certified solution to a distinct Newton cluster within
/// `tol` (inf-norm over `(x2, x3, x4)`).
pub fn newton_matches_certified(
    enumeration: &Enumeration,
    grid_density: usize,
    tol: f64,
) -> NewtonComparison {
    let clusters = newton_oracle(enumeration.space.n(), enumeration.space.p(), grid_density);
    let mut used = vec![false; clusters.len()];
    let mut max_distance = 0.0_f64;
    let mut all_matched = true;
    for sol in &enumeration.solutions {
        let target = [
            sol.metric[1].midpoint().to_f64().unwrap_or(f64::NAN),
            sol.metric[2].midpoint().to_f64().unwrap_or(f64::NAN),
            sol.metric[3].midpoint().to_f64().unwrap_or(f64::NAN),
        ];
        let mut best: Option<(usize, f64)> = None;
        for (k, cluster) in clusters.iter().enumerate() {
            if used[k] {
                continue;
            }
            let dist = cluster
                .iter()
                .zip(target.iter())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max);
            if best.map_or(true, |(_, d)| dist < d) {
                best = Some((k, dist));
            }
        }
        match best {
            Some((k, dist)) if dist <= tol => {
                used[k] = true;
                max_distance = max_distance.max(dist);
            }
            _ => {
                all_matched = false;
            }
        }
    }
    NewtonComparison {
        cluster_count: clusters.len(),
        certified_count: enumeration.solutions.len(),
        matched: all_matched && clusters.len() == enumeration.solutions.len(),
        max_distance,
    }
}
