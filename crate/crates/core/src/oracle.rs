//! Brute-force referees for `c_n²(λ)` that share no code path with the
//! tridiagonal bisection:
//!
//! * the largest generalized eigenvalue of the stiffness/mass pair built from
//!   Gegenbauer moments in the monomial basis, i.e. the maximum of
//!   `‖p′‖²/‖p‖²` over `p ∈ P_n`;
//! * four times the largest eigenvalue of `C_m C_mᵀ`, with `C_m` assembled
//!   entry by entry from the Gamma-function norms.
//!
//! Both reduce to dense symmetric eigenproblems, solved with cyclic Jacobi
//! rotations.


use crate::error::{Error, Result};
use crate::real::{Field, Real};
use crate::recurrence::{alpha_squared, beta_squared, check_lambda, check_lambda_f64, ProblemSpec};

/// Square matrix stored as rows.
pub type Dense<R> = Vec<Vec<R>>;

/// `M_{2j} = ∫ t^{2j} (1−t²)^{λ−1/2} dt = Γ(j+1/2)Γ(λ+1/2)/Γ(j+λ+1)`.
pub fn moment(j: usize, lambda: f64) -> Result<f64> {
    check_lambda_f64(lambda)?;
    let j = j as f64;
    if j + lambda + 1.0 < 170.0 {
        return Ok(libm::tgamma(j + 0.5) * libm::tgamma(lambda + 0.5) / libm::tgamma(j + lambda + 1.0));
    }
    Ok((libm::lgamma(j + 0.5) + libm::lgamma(lambda + 0.5) - libm::lgamma(j + lambda + 1.0)).exp())
}

/// `M_{2j}/M_0 = ∏_{i<j} (i+1/2)/(i+λ+1)`, rational in λ.
pub fn normalized_moment<F: Field>(j: usize, lambda: &F) -> F {
    (0..j as i64).fold(F::one(), |acc, i| {
        acc * (F::from_i64(2 * i + 1) / F::from_i64(2)) / (F::from_i64(i + 1) + lambda.clone())
    })
}

/// Mass `G[i][j] = M_{i+j}` and stiffness `K[i][j] = i·j·M_{i+j−2}` in the
/// monomial basis `1, t, …, tⁿ` (odd moments vanish).
#[derive(Clone, Debug, PartialEq)]
pub struct GramPair<F> {
    pub n: usize,
    pub mass: Dense<F>,
    pub stiffness: Dense<F>,
}

pub const ORACLE_CAP_DOUBLE: usize = 12;
pub const ORACLE_CAP_EXTENDED: usize = 24;

pub fn oracle_cap<R: Real>() -> usize {
    if R::BITS > f64::MANTISSA_DIGITS {
        ORACLE_CAP_EXTENDED
    } else {
        ORACLE_CAP_DOUBLE
    }
}

fn assemble<F: Field>(n: usize, moments: &[F]) -> GramPair<F> {
    let size = n + 1;
    let even = |p: usize| if p.is_multiple_of(2) { moments[p / 2].clone() } else { F::zero() };
    let mass = (0..size).map(|i| (0..size).map(|j| even(i + j)).collect()).collect();
    let stiffness = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == 0 || j == 0 {
                        F::zero()
                    } else {
                        F::from_i64((i * j) as i64) * even(i + j - 2)
                    }
                })
                .collect()
        })
        .collect();
    GramPair { n, mass, stiffness }
}

/// Gram pair with absolute moments from log-gamma.
pub fn gram_pair(n: usize, lambda: f64) -> Result<GramPair<f64>> {
    if n > ORACLE_CAP_DOUBLE {
        return Err(Error::OracleCapExceeded { n, cap: ORACLE_CAP_DOUBLE });
    }
    let moments = (0..=n).map(|j| moment(j, lambda)).collect::<Result<Vec<_>>>()?;
    Ok(assemble(n, &moments))
}

/// Gram pair scaled by `1/M_0`; rational in λ, so exact with `BigRational`.
/// Scaling leaves the generalized eigenvalues unchanged.
pub fn gram_pair_normalized<F: Field>(n: usize, lambda: &F) -> Result<GramPair<F>> {
    check_lambda(lambda)?;
    let moments: Vec<F> = (0..=n).map(|j| normalized_moment(j, lambda)).collect();
    Ok(assemble(n, &moments))
}

/// Eigen-decomposition `A = V diag(values) Vᵀ`; `vectors[i][k]` is component
/// `i` of eigenvector `k`.
#[derive(Clone, Debug)]
pub struct SymEigen<R> {
    pub values: Vec<R>,
    pub vectors: Dense<R>,
    pub sweeps: usize,
}

pub const MAX_SWEEPS: usize = 60;

/// Cyclic Jacobi eigensolver for a symmetric matrix.
///
/// A rotation is applied only when `|a_pq| > tol·√|a_pp a_qq|` (relative
/// criterion, which also resolves tiny eigenvalues of graded matrices);
/// converged when a whole sweep applies none. Exact zeros are never rotated,
/// so a block structure in `a` is preserved. Sweep order is fixed.
pub fn jacobi_eigen<R: Real>(a: &Dense<R>, tol: f64) -> Result<SymEigen<R>> {
    let n = a.len();
    let mut a = a.clone();
    let mut v: Dense<R> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect())
        .collect();
    let tol = R::from_f64(tol).max(R::epsilon());
    let huge = R::from_f64(1e100);
    let two = R::from_i64(2);

    for sweep in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q].clone();
                if apq == R::zero() {
                    continue;
                }
                let scale = (a[p][p].clone() * a[q][q].clone()).abs().sqrt();
                if apq.abs() <= tol.clone() * scale {
                    a[p][q] = R::zero();
                    a[q][p] = R::zero();
                    continue;
                }
                rotated = true;
                let theta = (a[q][q].clone() - a[p][p].clone()) / (two.clone() * apq.clone());
                let t = if theta.abs() > huge {
                    R::one() / (two.clone() * theta)
                } else {
                    let mag = R::one() / (theta.abs() + (theta.clone() * theta.clone() + R::one()).sqrt());
                    if theta < R::zero() {
                        -mag
                    } else {
                        mag
                    }
                };
                let c = R::one() / (t.clone() * t.clone() + R::one()).sqrt();
                let s = t.clone() * c.clone();
                let tau = s.clone() / (R::one() + c.clone());

                a[p][p] = a[p][p].clone() - t.clone() * apq.clone();
                a[q][q] = a[q][q].clone() + t * apq;
                a[p][q] = R::zero();
                a[q][p] = R::zero();
                for r in 0..n {
                    if r != p && r != q {
                        let (arp, arq) = (a[r][p].clone(), a[r][q].clone());
                        let new_p = arp.clone() - s.clone() * (arq.clone() + tau.clone() * arp.clone());
                        let new_q = arq.clone() + s.clone() * (arp - tau.clone() * arq);
                        a[r][p] = new_p.clone();
                        a[p][r] = new_p;
                        a[r][q] = new_q.clone();
                        a[q][r] = new_q;
                    }
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p].clone(), row[q].clone());
                    row[p] = vp.clone() - s.clone() * (vq.clone() + tau.clone() * vp.clone());
                    row[q] = vq.clone() + s.clone() * (vp - tau.clone() * vq);
                }
            }
        }
        if !rotated {
            let values = (0..n).map(|i| a[i][i].clone()).collect();
            return Ok(SymEigen { values, vectors: v, sweeps: sweep + 1 });
        }
    }
    Err(Error::JacobiNoConvergence(MAX_SWEEPS))
}

/// Largest generalized eigenvalue of `(K, G)` with its coefficient vector.
#[derive(Clone, Debug)]
pub struct RayleighMax<R> {
    pub value: R,
    /// Monomial coefficients of the maximizer, unit Euclidean norm, largest
    /// entry positive.
    pub vector: Vec<R>,
    /// `λ_max(G)/λ_min(G)`.
    pub mass_condition: f64,
}

/// Maximizes `xᵀKx / xᵀGx`: diagonalize `G = V D Vᵀ`, form
/// `D^{-1/2} Vᵀ K V D^{-1/2}` and take its top eigenpair.
pub fn rayleigh_max<R: Real>(pair: &GramPair<R>, rel_tol: f64) -> Result<RayleighMax<R>> {
    let size = pair.n + 1;
    let g = jacobi_eigen(&pair.mass, rel_tol)?;
    let d_max = g.values.iter().cloned().fold(R::zero(), R::max);
    let d_min = g.values.iter().cloned().reduce(R::min).unwrap_or_else(R::zero);
    let condition = if d_min > R::zero() { (d_max / d_min.clone()).to_f64() } else { f64::INFINITY };
    if !(d_min > R::zero()) || condition * R::epsilon().to_f64() > 1e-2 {
        return Err(Error::IllConditioned { condition });
    }

    // S = V D^{-1/2}
    let inv_sqrt: Vec<R> = g.values.iter().map(|d| R::one() / d.sqrt()).collect();
    let s: Dense<R> = (0..size)
        .map(|i| (0..size).map(|k| g.vectors[i][k].clone() * inv_sqrt[k].clone()).collect())
        .collect();
    // K S
    let ks: Dense<R> = (0..size)
        .map(|i| {
            (0..size)
                .map(|k| {
                    (0..size).fold(R::zero(), |acc, j| acc + pair.stiffness[i][j].clone() * s[j][k].clone())
                })
                .collect()
        })
        .collect();
    let mut reduced: Dense<R> = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| (0..size).fold(R::zero(), |acc, i| acc + s[i][a].clone() * ks[i][b].clone()))
                .collect()
        })
        .collect();
    for a in 0..size {
        for b in a + 1..size {
            let avg = (reduced[a][b].clone() + reduced[b][a].clone()) / R::from_i64(2);
            reduced[a][b] = avg.clone();
            reduced[b][a] = avg;
        }
    }

    let top = jacobi_eigen(&reduced, rel_tol)?;
    let best = (0..size)
        .reduce(|i, j| if top.values[j] > top.values[i] { j } else { i })
        .expect("nonempty");
    let mut x: Vec<R> = (0..size)
        .map(|i| (0..size).fold(R::zero(), |acc, k| acc + s[i][k].clone() * top.vectors[k][best].clone()))
        .collect();
    let norm = x.iter().fold(R::zero(), |acc, v| acc + v.clone() * v.clone()).sqrt();
    let pivot = x.iter().cloned().reduce(|a, b| if b.abs() > a.abs() { b } else { a }).unwrap();
    let sign = if pivot < R::zero() { -R::one() } else { R::one() };
    for v in x.iter_mut() {
        *v = v.clone() * sign.clone() / norm.clone();
    }
    Ok(RayleighMax { value: top.values[best].clone(), vector: x, mass_condition: condition })
}

/// `c_n²` from the moment Gram pair evaluated in `R`.
pub fn rayleigh_c_squared<R: Real>(spec: &ProblemSpec) -> Result<RayleighMax<R>> {
    let cap = oracle_cap::<R>();
    if spec.n() > cap {
        return Err(Error::OracleCapExceeded { n: spec.n(), cap });
    }
    let pair = gram_pair_normalized(spec.n(), &R::from_f64(spec.lambda()))?;
    rayleigh_max(&pair, R::epsilon().to_f64())
}

/// Upper-triangular `C_m` with entries `α_i β_j`, `i ≤ j`, from the Gamma norms.
pub fn c_matrix(spec: &ProblemSpec) -> Result<Dense<f64>> {
    let (m, l, b) = (spec.m(), spec.lambda(), spec.branch());
    let alpha = (1..=m).map(|k| alpha_squared(k, l, b).map(f64::sqrt)).collect::<Result<Vec<_>>>()?;
    let beta = (1..=m).map(|k| beta_squared(k, l, b).map(f64::sqrt)).collect::<Result<Vec<_>>>()?;
    Ok((0..m)
        .map(|i| (0..m).map(|j| if i <= j { alpha[i] * beta[j] } else { 0.0 }).collect())
        .collect())
}

/// `A_m = C_m C_mᵀ`.
pub fn a_matrix(spec: &ProblemSpec) -> Result<Dense<f64>> {
    let c = c_matrix(spec)?;
    let m = c.len();
    Ok((0..m)
        .map(|i| (0..m).map(|j| (0..m).map(|k| c[i][k] * c[j][k]).sum()).collect())
        .collect())
}

/// `4·λ_max(C_m C_mᵀ)`.
pub fn oracle_via_c(spec: &ProblemSpec) -> Result<f64> {
    let a = a_matrix(spec)?;
    let eig = jacobi_eigen(&a, f64::EPSILON)?;
    Ok(4.0 * eig.values.iter().cloned().fold(0.0, f64::max))
}
