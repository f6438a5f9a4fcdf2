//! Two-parameter Mittag-Leffler function E_{α,β}(z) and the Prabhakar
//! function E^γ_{α,β}(z) for γ ∈ {1, 2}.
//!
//! Three representations are combined:
//!
//! * the Taylor series Σ z^k / Γ(αk+β), accepted only when the measured
//!   cancellation ratio Σ|t_k| / |Σ t_k| keeps the rounding error below the
//!   tolerance (the series cancels catastrophically once |z|^{1/α} is large);
//! * the N-term asymptotic expansion −Σ z^{-k}/Γ(β−kα) for |z| ≥ r₁ and
//!   |arg z| > απ/2, plus the exponentially small pole term when
//!   |arg z| < απ, accepted when the next-term estimate passes;
//! * otherwise the Laplace-inversion integral along two rays arg s = ±φ,
//!   plus the pole residue (1/α) s*^{1−β} exp(s*) when the pole
//!   s* = z^{1/α} lies between the rays.
//!
//! The gap between the series and asymptotic radii is covered by the contour
//! integral. [`Error::AccuracyNotAttainable`] is returned only when that
//! quadrature fails to reach the tolerance.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::rgamma;
use crate::error::{invalid, Error, Result};
use crate::quadrature::{integrate, QuadConfig};

/// Parameters (α, β, γ) of E^γ_{α,β}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl MlParams {
    /// Validated two-parameter set: α ∈ (0, 1], β > 0, γ = 1.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(beta.is_finite() && beta > 0.0) {
            return Err(invalid(format!("beta must be positive, got {beta}")));
        }
        Ok(Self { alpha, beta, gamma: 1.0 })
    }

    /// Prabhakar parameter set. β may be any finite real here because the
    /// reduction formula steps down to β − 1.
    pub fn prabhakar(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !beta.is_finite() {
            return Err(invalid(format!("beta must be finite, got {beta}")));
        }
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(invalid(format!("gamma must be positive, got {gamma}")));
        }
        Ok(Self { alpha, beta, gamma })
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    Ok(())
}

/// Crossover radii and tolerance of the evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlConfig {
    /// Largest |z| at which the Taylor series is attempted.
    pub r0: f64,
    /// Smallest |z| at which the asymptotic expansion is attempted.
    pub r1: f64,
    /// Number of terms of the asymptotic expansion.
    pub n_asymptotic: usize,
    /// Target relative accuracy.
    pub tol: f64,
}

impl Default for MlConfig {
    fn default() -> Self {
        Self { r0: 9.0, r1: 40.0, n_asymptotic: 8, tol: 1e-13 }
    }
}

/// Which representation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MlBranch {
    Exact,
    Series,
    Asymptotic,
    Contour,
}

/// E_{α,β}(z) with the default configuration.
pub fn mittag_leffler(p: &MlParams, z: Complex64) -> Result<Complex64> {
    mittag_leffler_with(p, z, &MlConfig::default()).map(|(v, _)| v)
}

/// E_{α,β}(z) with an explicit configuration; also reports the branch used.
pub fn mittag_leffler_with(p: &MlParams, z: Complex64, cfg: &MlConfig) -> Result<(Complex64, MlBranch)> {
    ml_eval(p.alpha, p.beta, z, cfg)
}

/// Prabhakar function E^γ_{α,β}(z). Only γ = 1 and γ = 2 are implemented;
/// γ = 2 uses the reduction
/// E²_{α,β} = [E_{α,β−1} + (1 − β + α) E_{α,β}] / α.
pub fn prabhakar(p: &MlParams, z: Complex64) -> Result<Complex64> {
    let cfg = MlConfig::default();
    if p.gamma == 1.0 {
        return ml_eval(p.alpha, p.beta, z, &cfg).map(|(v, _)| v);
    }
    if p.gamma == 2.0 {
        let lower = ml_eval(p.alpha, p.beta - 1.0, z, &cfg)?.0;
        let same = ml_eval(p.alpha, p.beta, z, &cfg)?.0;
        return Ok((lower + same * (1.0 - p.beta + p.alpha)) / p.alpha);
    }
    Err(Error::UnsupportedGamma(p.gamma))
}

/// Truncated Taylor series. `None` when cancellation makes it inaccurate.
pub fn ml_series(alpha: f64, beta: f64, z: Complex64, tol: f64) -> Option<Complex64> {
    const MAX_TERMS: usize = 20_000;
    let r = z.norm();
    // Index past which the terms decrease monotonically.
    let k_peak = if r > 0.0 { ((r.powf(1.0 / alpha) + 2.0 - beta) / alpha).max(2.0) } else { 0.0 };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut zk = Complex64::new(1.0, 0.0);
    for k in 0..MAX_TERMS {
        let term = zk * rgamma(alpha * k as f64 + beta);
        if !(term.re.is_finite() && term.im.is_finite()) {
            return None;
        }
        sum += term;
        let t = term.norm();
        abs_sum += t;
        if (k as f64) > k_peak && (t <= 1e-17 * sum.norm() || t < 1e-300) {
            let s = sum.norm();
            let rounding = 4.0 * f64::EPSILON * abs_sum;
            if s == 0.0 {
                return if abs_sum == 0.0 { Some(sum) } else { None };
            }
            return if rounding <= tol * s { Some(sum) } else { None };
        }
        zk *= z;
    }
    None
}

/// N-term asymptotic expansion plus the pole term when it is not negligible.
/// Returns the value and an estimate of the truncation error.
pub fn ml_asymptotic(alpha: f64, beta: f64, z: Complex64, n_terms: usize) -> (Complex64, f64) {
    let mut sum = Complex64::new(0.0, 0.0);
    let zinv = z.inv();
    let mut zp = Complex64::new(1.0, 0.0);
    for k in 1..=n_terms {
        zp *= zinv;
        sum -= zp * rgamma(beta - alpha * k as f64);
    }
    let r = z.norm();
    let next = |k: usize| r.powi(-(k as i32)) * rgamma(beta - alpha * k as f64).abs();
    let err = next(n_terms + 1).max(next(n_terms + 2));
    if z.arg().abs() < alpha * PI {
        sum += pole_residue(alpha, beta, z);
    }
    (sum, err)
}

/// (1/α) s*^{1−β} exp(s*) with s* = |z|^{1/α} exp(i arg(z)/α).
fn pole_residue(alpha: f64, beta: f64, z: Complex64) -> Complex64 {
    let s = Complex64::from_polar(z.norm().powf(1.0 / alpha), z.arg() / alpha);
    let ln = (1.0 - beta) * s.ln() + s;
    ln.exp() / alpha
}

fn ml_eval(alpha: f64, beta: f64, z: Complex64, cfg: &MlConfig) -> Result<(Complex64, MlBranch)> {
    check_alpha(alpha)?;
    if !beta.is_finite() {
        return Err(invalid(format!("beta must be finite, got {beta}")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(invalid(format!("Mittag-Leffler argument must be finite, got {z}")));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok((Complex64::new(rgamma(beta), 0.0), MlBranch::Exact));
    }
    if alpha == 1.0 && beta == 1.0 {
        return Ok((z.exp(), MlBranch::Exact));
    }
    let r = z.norm();
    if r <= cfg.r0 {
        if let Some(v) = ml_series(alpha, beta, z, cfg.tol) {
            return Ok((v, MlBranch::Series));
        }
    }
    if r >= cfg.r1 && z.arg().abs() > 0.5 * alpha * PI {
        let (v, err) = ml_asymptotic(alpha, beta, z, cfg.n_asymptotic);
        if err <= cfg.tol * v.norm() && v.re.is_finite() && v.im.is_finite() {
            return Ok((v, MlBranch::Asymptotic));
        }
    }
    ml_contour(alpha, beta, z, cfg.tol).map(|v| (v, MlBranch::Contour))
}

/// Laplace-inversion integral along arg s = ±φ plus the enclosed residue.
fn ml_contour(alpha: f64, beta: f64, z: Complex64, tol: f64) -> Result<Complex64> {
    // The integrand behaves like r^{α−β} at the origin; keep β − α < 1 so
    // that it stays integrable, stepping down with
    // E_{α,β}(z) = (E_{α,β−α}(z) − 1/Γ(β−α)) / z.
    if beta - alpha >= 1.0 {
        let lower = ml_contour(alpha, beta - alpha, z, tol)?;
        return Ok((lower - rgamma(beta - alpha)) / z);
    }
    let not_attainable = |reason: String| Error::AccuracyNotAttainable { re: z.re, im: z.im, reason };

    let theta_star = z.arg().abs() / alpha;
    let phi = if (theta_star - PI).abs() < 0.15 { PI - 0.3 } else { PI };
    let residue = if theta_star < phi {
        let v = pole_residue(alpha, beta, z);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Overflow(format!("Mittag-Leffler pole term at z = {z}")));
        }
        v
    } else {
        Complex64::new(0.0, 0.0)
    };

    let expo = alpha - beta + 1.0; // > 0
    let p = 1.0 / expo;
    let r_max = 60.0 / phi.cos().abs();
    let rays = [Complex64::from_polar(1.0, phi), Complex64::from_polar(1.0, -phi)];
    let rot_ab = [
        Complex64::from_polar(1.0, phi * (alpha - beta)),
        Complex64::from_polar(1.0, -phi * (alpha - beta)),
    ];
    let rot_a = [Complex64::from_polar(1.0, phi * alpha), Complex64::from_polar(1.0, -phi * alpha)];
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);

    let integrand = |u: f64| -> Complex64 {
        if u <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        // r^{α−β} dr/du = p exactly; forming it from the factors underflows
        // when u^p does.
        let r = u.powf(p);
        let mut acc = Complex64::new(0.0, 0.0);
        for side in 0..2 {
            let s = rays[side] * r;
            let num = s.exp() * rot_ab[side];
            let den = rot_a[side] * r.powf(alpha) - z;
            let term = num / den * rays[side];
            if side == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc * p / two_pi_i
    };

    let mut r_breaks = vec![0.0, 0.5, 2.0, 6.0, 15.0, 30.0, r_max];
    let r_pole = z.norm().powf(1.0 / alpha);
    if r_pole > 0.0 && r_pole < r_max {
        r_breaks.push(r_pole);
    }
    r_breaks.sort_by(f64::total_cmp);
    r_breaks.dedup();
    let u_breaks: Vec<f64> = r_breaks.iter().map(|&r| r.powf(expo)).collect();

    let cfg = QuadConfig {
        abs_tol: (0.1 * tol * residue.norm()).max(1e-300),
        rel_tol: tol,
        max_intervals: 4000,
    };
    let res = integrate(integrand, &u_breaks, &cfg).map_err(|e| not_attainable(e.to_string()))?;
    let v = residue + res.value;
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(not_attainable("non-finite result".into()));
    }
    Ok(v)
}
