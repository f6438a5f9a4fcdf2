//! Discrete fractional resolvents.
//!
//! For the F-LMM and L1 schemes the sequences d_n, D_n with
//! y_n = d_n y₀ + Σ_{k=1}^{n} D_{n−k} f_k are extracted by impulse response.
//! For the α-difference scheme the operators Q_β^n are also available as
//! Poisson transforms of the continuous resolvent.

use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::quadrature::{integrate, QuadConfig};
use crate::solver::{default_kernel, AlphaDiffForm, FOdeProblem, ImpulseForcing, SolverOptions, StepKernel, StepWorkspace};
use crate::special::{
    check_square, eigen_decomposition, eigenvalues, in_stable_sector, ln_gamma, mittag_leffler, spectral_norm, CVector,
    MlParams, SquareMatrix,
};
use crate::weights::SchemeId;

/// d₀…d_{n_max} and D₀…D_{n_max} for one (scheme, A, α, h).
#[derive(Debug, Clone)]
pub struct ResolventSequence {
    pub scheme: SchemeId,
    pub alpha: f64,
    pub h: f64,
    pub n_max: usize,
    pub a: SquareMatrix,
    pub d: Vec<SquareMatrix>,
    pub big_d: Vec<SquareMatrix>,
}

impl ResolventSequence {
    pub fn t(&self, n: usize) -> f64 {
        n as f64 * self.h
    }

    /// Spectral norms ‖d_n‖.
    pub fn norms_d(&self) -> Vec<f64> {
        self.d.iter().map(spectral_norm).collect()
    }

    /// Spectral norms ‖D_n‖.
    pub fn norms_big_d(&self) -> Vec<f64> {
        self.big_d.iter().map(spectral_norm).collect()
    }

    /// CSV with columns `n, t, norm_d, norm_D` after `metadata`.
    pub fn write_csv<W: Write>(&self, mut w: W, metadata: &str) -> io::Result<()> {
        writeln!(w, "{metadata}")?;
        writeln!(w, "n,t,norm_d,norm_D")?;
        for (n, (nd, nbd)) in self.norms_d().iter().zip(self.norms_big_d()).enumerate() {
            writeln!(w, "{n},{:.10},{nd:.17e},{nbd:.17e}", self.t(n))?;
        }
        Ok(())
    }
}

fn columns(
    a: &SquareMatrix,
    alpha: f64,
    n_steps: usize,
    kernel: &StepKernel,
    y0: impl Fn(usize) -> CVector + Sync,
    forced: bool,
) -> Result<Vec<crate::solver::Trajectory>> {
    let dim = a.nrows();
    (0..dim)
        .into_par_iter()
        .map(|i| {
            let base = FOdeProblem::linear(alpha, a.clone(), y0(i), "impulse")?;
            let p = if forced {
                let mut e = vec![Complex64::new(0.0, 0.0); dim];
                e[i] = Complex64::new(1.0, 0.0);
                base.with_nonlinearity(std::sync::Arc::new(ImpulseForcing { step: 1, vector: e }))
            } else {
                base
            };
            let mut k = kernel.clone();
            k.kappa.truncate(n_steps + 1);
            k.coef.truncate(n_steps + 1);
            let tr = StepWorkspace::new(&p, k, SolverOptions::default())?.run()?;
            if let Some(cut) = &tr.truncated {
                return Err(Error::Overflow(format!("impulse response column {i}: {}", cut.reason)));
            }
            Ok(tr)
        })
        .collect()
}

fn unit(dim: usize, i: usize) -> CVector {
    let mut e = CVector::zeros(dim);
    e[i] = Complex64::new(1.0, 0.0);
    e
}

fn assemble(trs: &[crate::solver::Trajectory], offset: usize, count: usize) -> Vec<SquareMatrix> {
    let dim = trs.len();
    (0..count)
        .map(|n| SquareMatrix::from_fn(dim, dim, |r, c| trs[c].state(n + offset)[r]))
        .collect()
}

/// Impulse-response resolvents from an explicit step kernel with at least
/// n_max + 1 steps.
pub fn impulse_resolvent_kernel(kernel: &StepKernel, a: &SquareMatrix, n_max: usize) -> Result<ResolventSequence> {
    check_square(a)?;
    if kernel.n_steps() < n_max + 1 {
        return Err(invalid(format!("kernel covers {} steps, need {}", kernel.n_steps(), n_max + 1)));
    }
    let dim = a.nrows();
    let hom = columns(a, kernel.alpha, n_max, kernel, |i| unit(dim, i), false)?;
    let forced = columns(a, kernel.alpha, n_max + 1, kernel, |_| CVector::zeros(dim), true)?;
    Ok(ResolventSequence {
        scheme: kernel.scheme,
        alpha: kernel.alpha,
        h: kernel.h,
        n_max,
        a: a.clone(),
        d: assemble(&hom, 0, n_max + 1),
        big_d: assemble(&forced, 1, n_max + 1),
    })
}

/// d_n, D_n for `scheme` by impulse response. The α-difference scheme uses
/// its direct indexing, for which D_n = h Q_α^n.
pub fn impulse_resolvent(scheme: SchemeId, a: &SquareMatrix, alpha: f64, h: f64, n_max: usize) -> Result<ResolventSequence> {
    let kernel = default_kernel(scheme, alpha, h, n_max + 1)?;
    impulse_resolvent_kernel(&kernel, a, n_max)
}

/// Q₁⁰…Q₁^{n_max} from the Poisson-indexed α-difference scheme run
/// homogeneously from each basis vector.
pub fn alpha_diff_q1_impulse(a: &SquareMatrix, alpha: f64, h: f64, n_max: usize) -> Result<Vec<SquareMatrix>> {
    check_square(a)?;
    let kernel = StepKernel::alpha_difference(alpha, h, n_max + 1, AlphaDiffForm::PoissonIndexed)?;
    let dim = a.nrows();
    let hom = columns(a, alpha, n_max + 1, &kernel, |i| unit(dim, i), false)?;
    Ok(assemble(&hom, 1, n_max + 1))
}

/// F_ω(0) = ω₀ for the schemes with an integral form.
pub fn omega0(scheme: SchemeId, alpha: f64) -> Result<f64> {
    match scheme {
        SchemeId::FBdf1 => Ok(1.0),
        SchemeId::FBdf2 => Ok((2.0f64 / 3.0).powf(alpha)),
        SchemeId::FAdams2 => Ok(1.0 - alpha / 2.0),
        SchemeId::L1 => Ok(ln_gamma(2.0 - alpha).exp()),
        SchemeId::AlphaDiff => Err(Error::UnsupportedScheme("the alpha-difference scheme has no closed-form D0".into())),
    }
}

/// D₀ = h^α F_ω(0) (I − h^α F_ω(0) A)⁻¹ = (h^{−α} F_ω(0)⁻¹ I − A)⁻¹.
pub fn closed_form_d0(scheme: SchemeId, a: &SquareMatrix, alpha: f64, h: f64) -> Result<SquareMatrix> {
    check_square(a)?;
    let c = 1.0 / (h.powf(alpha) * omega0(scheme, alpha)?);
    let mut m = -a.clone();
    for i in 0..a.nrows() {
        m[(i, i)] += c;
    }
    m.lu().try_inverse().ok_or(Error::SingularStepMatrix)
}

fn check_beta(alpha: f64, beta: f64) -> Result<()> {
    if beta == 1.0 || (beta - alpha).abs() <= 1e-15 {
        Ok(())
    } else {
        Err(invalid(format!("beta must be 1 or alpha={alpha}, got {beta}")))
    }
}

/// Integration window [max(0, n − 12√(n+1)), n + 12√(n+1) + 30].
pub fn poisson_window(n: usize) -> (f64, f64) {
    let nf = n as f64;
    let w = 12.0 * (nf + 1.0).sqrt();
    ((nf - w).max(0.0), nf + w + 30.0)
}

const POISSON_REL_TOL: f64 = 1e-10;

/// ∫ e^{−s} sⁿ/n! s^{β−1} g(s) ds over the Poisson window. When the window
/// starts at 0 the variable is changed to u = s^α, which removes the
/// endpoint singularity of s^{β−1} and makes E_{α,β}(c s^α) smooth.
fn poisson_integral<G>(n: usize, alpha: f64, beta: f64, mut g: G) -> Result<Complex64>
where
    G: FnMut(f64) -> Complex64,
{
    let (lo, hi) = poisson_window(n);
    let nf = n as f64;
    let lnf = ln_gamma(nf + 1.0);
    let weight = move |s: f64| -> f64 {
        if n == 0 {
            (-s).exp()
        } else if s <= 0.0 {
            0.0
        } else {
            (nf * s.ln() - s - lnf).exp()
        }
    };
    let cfg = QuadConfig { abs_tol: 1e-300, rel_tol: POISSON_REL_TOL, max_intervals: 4000 };
    let pieces = 16;
    let r = if lo == 0.0 {
        let umax = hi.powf(alpha);
        let bps: Vec<f64> = (0..=pieces).map(|k| umax * (k as f64 / pieces as f64).powi(2)).collect();
        // ds = (1/α) u^{1/α − 1} du and s^{β−1} u^{1/α−1} = u^{β/α−1}
        let q = beta / alpha - 1.0;
        integrate(
            |u| {
                if u <= 0.0 && q > 0.0 {
                    return Complex64::new(0.0, 0.0);
                }
                let s = u.powf(1.0 / alpha);
                let jac = if q == 0.0 { 1.0 } else { u.powf(q) };
                g(s) * (weight(s) * jac / alpha)
            },
            &bps,
            &cfg,
        )
    } else {
        let bps: Vec<f64> = (0..=pieces).map(|k| lo + (hi - lo) * k as f64 / pieces as f64).collect();
        integrate(|s| g(s) * (weight(s) * s.powf(beta - 1.0)), &bps, &cfg)
    };
    r.map(|q| q.value).map_err(|e| Error::QuadratureNonConvergence(format!("Poisson index {n}: {e}")))
}

/// ∫₀^∞ ρ_n^h(t) dt, computed over the truncated window.
pub fn poisson_mass(n: usize) -> Result<f64> {
    poisson_integral(n, 1.0, 1.0, |_| Complex64::new(1.0, 0.0)).map(|z| z.re)
}

/// Q_β^n for a scalar λ.
pub fn poisson_scalar(lambda: Complex64, alpha: f64, h: f64, n: usize, beta: f64) -> Result<Complex64> {
    check_beta(alpha, beta)?;
    let params = MlParams::new(alpha, beta)?;
    let hb = h.powf(beta - 1.0);
    let mut failure = None;
    let v = poisson_integral(n, alpha, beta, |s| {
        let z = lambda * (h * s).powf(alpha);
        match mittag_leffler(&params, z) {
            Ok(e) => e * hb,
            Err(err) => {
                failure.get_or_insert(err);
                Complex64::new(0.0, 0.0)
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(v),
    }
}

/// Q_β^n = ∫₀^∞ ρ_n^h(t) t^{β−1} E_{α,β}(t^α A) dt through the eigenbasis of A.
pub fn poisson_resolvent(a: &SquareMatrix, alpha: f64, h: f64, n: usize, beta: f64) -> Result<SquareMatrix> {
    check_beta(alpha, beta)?;
    eigen_decomposition(a)?.apply(|lam| poisson_scalar(lam, alpha, h, n, beta))
}

/// Q_β⁰…Q_β^{n_max}, parallel over n.
pub fn poisson_resolvent_sequence(a: &SquareMatrix, alpha: f64, h: f64, n_max: usize, beta: f64) -> Result<Vec<SquareMatrix>> {
    check_beta(alpha, beta)?;
    let eig = eigen_decomposition(a)?;
    (0..=n_max)
        .into_par_iter()
        .map(|n| eig.apply(|lam| poisson_scalar(lam, alpha, h, n, beta)))
        .collect()
}

/// Fitted decay of a resolvent sequence over its last decade.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolventDecayReport {
    /// False when some eigenvalue of A lies outside or on the boundary of the
    /// stable sector, so no decay is expected.
    pub applicable: bool,
    pub slope_d: f64,
    pub slope_big_d: f64,
    /// sup_n t_n^α ‖d_n‖ over t_n ≥ 1.
    pub sup_d: f64,
    /// sup_n t_n^{α+1} ‖D_n‖ over t_n ≥ 1.
    pub sup_big_d: f64,
    pub norm_d0: f64,
    /// Σ_{k=1}^{n_max} ‖D_k‖.
    pub s0: f64,
    /// Change of the partial sums of ‖D_k‖ over the last decade.
    pub s0_last_decade: f64,
    /// Σ_{k>n_max} ‖D_k‖ estimated from the fitted power law.
    pub s0_tail: f64,
}

impl ResolventDecayReport {
    /// Key-value summary block.
    pub fn summary(&self) -> String {
        format!(
            "{{\"applicable\": {}, \"slope_d\": {:.6}, \"slope_D\": {:.6}, \"sup_d\": {:.6e}, \"sup_D\": {:.6e}, \"norm_D0\": {:.6e}, \"S0\": {:.6e}, \"S0_last_decade\": {:.3e}, \"S0_tail\": {:.3e}}}",
            self.applicable, self.slope_d, self.slope_big_d, self.sup_d, self.sup_big_d, self.norm_d0, self.s0, self.s0_last_decade, self.s0_tail
        )
    }
}

/// Least-squares slope and intercept of ln y against ln t over the points with
/// t ∈ [t_max/10, t_max] and y > 0.
pub fn last_decade_fit(t: &[f64], y: &[f64]) -> Result<(f64, f64)> {
    let t_max = t.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let pts: Vec<(f64, f64)> = t
        .iter()
        .zip(y)
        .filter(|(&ti, &yi)| ti >= t_max / 10.0 && ti > 0.0 && yi > 0.0 && yi.is_finite())
        .map(|(&ti, &yi)| (ti.ln(), yi.ln()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientRange(format!("only {} usable points in the last decade", pts.len())));
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (sxx, sxy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (x - mx), b + (x - mx) * (y - my)));
    let slope = sxy / sxx;
    Ok((slope, my - slope * mx))
}

/// Fitted log-log slopes of ‖d_n‖ and ‖D_n‖ plus the summability data used
/// by the perturbation check.
pub fn verify_resolvent_decay(r: &ResolventSequence) -> Result<ResolventDecayReport> {
    let t_max = r.t(r.n_max);
    if t_max < 100.0 {
        return Err(Error::InsufficientRange(format!("t_max = {t_max} must reach 100 (two decades past t = 1)")));
    }
    let t: Vec<f64> = (0..=r.n_max).map(|n| r.t(n)).collect();
    let nd = r.norms_d();
    let nbd = r.norms_big_d();
    let applicable = eigenvalues(&r.a)?
        .into_iter()
        .map(|l| in_stable_sector(l, r.alpha.min(1.0)))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|s| s.stable);
    let (slope_d, _) = last_decade_fit(&t, &nd)?;
    let (slope_big_d, icpt) = last_decade_fit(&t, &nbd)?;
    let mut sup_d = 0.0f64;
    let mut sup_big_d = 0.0f64;
    for n in 0..=r.n_max {
        if t[n] >= 1.0 {
            sup_d = sup_d.max(t[n].powf(r.alpha) * nd[n]);
            sup_big_d = sup_big_d.max(t[n].powf(r.alpha + 1.0) * nbd[n]);
        }
    }
    let s0: f64 = nbd[1..].iter().sum();
    let n_dec = (r.n_max / 10).max(1);
    let s0_last_decade: f64 = nbd[n_dec + 1..].iter().sum();
    let s0_tail = if slope_big_d < -1.0 {
        // Σ_{k>N} C t_k^{q} ≈ (C/h) ∫_{t_N}^∞ t^{q} dt
        let q = slope_big_d;
        icpt.exp() * t_max.powf(q + 1.0) / (-(q + 1.0) * r.h)
    } else {
        f64::INFINITY
    };
    Ok(ResolventDecayReport {
        applicable,
        slope_d,
        slope_big_d,
        sup_d,
        sup_big_d,
        norm_d0: nbd[0],
        s0,
        s0_last_decade,
        s0_tail,
    })
}
