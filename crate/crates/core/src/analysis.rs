//! Long-time diagnostics: the decay index p_α, stability-region boundaries,
//! sector classification of eigenvalues and the perturbation smallness
//! check.

use std::f64::consts::PI;
use std::fmt;
use std::io::{self, Write};

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::resolvent::{last_decade_fit, verify_resolvent_decay, ResolventSequence};
use crate::solver::{FOdeProblem, Nonlinearity, Trajectory};
use crate::special::{eigenvalues, in_stable_sector, SectorReport};
use crate::weights::{closed_form_mu, l1_mu_weights, SchemeId};

/// Fitted slopes beyond ±this decide the verdict.
pub const VERDICT_THRESHOLD: f64 = 0.05;
/// Default index offset.
pub const DEFAULT_M: usize = 5;

/// Long-time behaviour read off the fitted log-log slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Decays,
    Grows,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Decays => "DECAYS",
            Self::Grows => "GROWS",
            Self::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Which states enter the index at t_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexAlignment {
    /// p(t_n) = −ln(‖y_{n+m}‖/‖y_n‖) / ln(t_{n+m}/t_n).
    #[default]
    Exact,
    /// p(t_n) = −ln(‖y_{n+m−1}‖/‖y_{n−1}‖) / ln(t_{n+m}/t_n), the indexing
    /// the reference tables follow.
    Lagged,
}

/// p_α samples plus the fitted decay of ‖y_n‖.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayReport {
    pub m: usize,
    pub alignment: IndexAlignment,
    /// (t_n, p_α(t_n)) for t_n > 1.
    pub samples: Vec<(f64, f64)>,
    /// Negated least-squares slope of ln‖y_n‖ against ln t_n over the final
    /// decade, so that decay rates are positive.
    pub fitted_slope: f64,
    /// exp of the fitted intercept: ‖y_n‖ ≈ C t_n^{−slope}.
    pub fitted_constant: f64,
    pub verdict: Verdict,
    /// Samples dropped because a norm was zero or non-finite.
    pub skipped: usize,
}

impl DecayReport {
    /// p_α at the sample closest to `t`, if one lies within half a step.
    pub fn p_at(&self, t: f64) -> Option<f64> {
        let h = if self.samples.len() > 1 { self.samples[1].0 - self.samples[0].0 } else { f64::INFINITY };
        self.samples
            .iter()
            .min_by(|a, b| (a.0 - t).abs().total_cmp(&(b.0 - t).abs()))
            .filter(|s| (s.0 - t).abs() <= 0.5 * h.abs() + 1e-9)
            .map(|s| s.1)
    }

    /// CSV with columns `t, p_alpha` after `metadata`.
    pub fn write_csv<W: Write>(&self, mut w: W, metadata: &str) -> io::Result<()> {
        writeln!(w, "{metadata}")?;
        writeln!(w, "t,p_alpha")?;
        for (t, p) in &self.samples {
            writeln!(w, "{t:.10},{p:.12}")?;
        }
        Ok(())
    }

    /// Key-value summary block.
    pub fn summary(&self) -> String {
        format!(
            "{{\"m\": {}, \"fitted_slope\": {:.6}, \"fitted_constant\": {:.6e}, \"verdict\": \"{}\", \"skipped\": {}}}",
            self.m, self.fitted_slope, self.fitted_constant, self.verdict, self.skipped
        )
    }
}

/// p_α(t_n) from a norm sequence on t_n = n h, or None when a norm is zero or
/// the index is out of range.
pub fn index_value(norms: &[f64], n: usize, m: usize, alignment: IndexAlignment) -> Option<f64> {
    let (a, b) = match alignment {
        IndexAlignment::Exact => (n, n + m),
        IndexAlignment::Lagged => (n.checked_sub(1)?, n + m - 1),
    };
    let (ya, yb) = (*norms.get(a)?, *norms.get(b)?);
    if !(ya > 0.0 && yb > 0.0 && ya.is_finite() && yb.is_finite()) || n == 0 {
        return None;
    }
    let v = -(yb / ya).ln() / ((n + m) as f64 / n as f64).ln();
    v.is_finite().then_some(v)
}

/// Decay index with the exact definition.
pub fn p_index(traj: &Trajectory, m: usize) -> Result<DecayReport> {
    p_index_with(traj, m, IndexAlignment::Exact)
}

pub fn p_index_with(traj: &Trajectory, m: usize, alignment: IndexAlignment) -> Result<DecayReport> {
    if m == 0 {
        return Err(invalid("index offset m must be positive"));
    }
    let norms = traj.norms();
    let h = traj.h;
    let first = (1.0 / h).floor() as usize + 1;
    if norms.len() < first + m + 1 || norms.len() < m + 2 {
        return Err(Error::InsufficientRange(format!(
            "trajectory has {} states; need t_n > 1 plus {} more steps",
            norms.len(),
            m
        )));
    }
    let mut samples = Vec::new();
    let mut skipped = 0;
    let last = norms.len() - 1;
    for n in first..=last.saturating_sub(m) {
        if n as f64 * h <= 1.0 {
            continue;
        }
        match index_value(&norms, n, m, alignment) {
            Some(p) => samples.push((n as f64 * h, p)),
            None => skipped += 1,
        }
    }
    let (fitted_slope, fitted_constant) = match last_decade_fit(&traj.times, &norms) {
        Ok((s, c)) => (-s, c.exp()),
        Err(_) if norms.iter().all(|&x| x == 0.0) => (0.0, 0.0),
        Err(e) => return Err(e),
    };
    let verdict = if fitted_slope > VERDICT_THRESHOLD {
        Verdict::Decays
    } else if fitted_slope < -VERDICT_THRESHOLD {
        Verdict::Grows
    } else {
        Verdict::Inconclusive
    };
    Ok(DecayReport { m, alignment, samples, fitted_slope, fitted_constant, verdict, skipped })
}

/// Sampled image of the unit circle under z ↦ 1/(h^α F_ω(z)) = h^{−α} F_μ(z).
#[derive(Debug, Clone)]
pub struct RegionSample {
    pub scheme: SchemeId,
    pub alpha: f64,
    pub h: f64,
    pub theta: Vec<f64>,
    pub boundary: Vec<Complex64>,
    /// Series length used where no closed form exists.
    pub n_terms: usize,
    /// Bound on the neglected series tail of F_μ (0 for closed forms).
    pub tail_bound: f64,
}

impl RegionSample {
    /// CSV with columns `theta, re, im` after `metadata`.
    pub fn write_csv<W: Write>(&self, mut w: W, metadata: &str) -> io::Result<()> {
        writeln!(w, "{metadata}")?;
        writeln!(w, "theta,re,im")?;
        for (t, z) in self.theta.iter().zip(&self.boundary) {
            writeln!(w, "{t:.12},{:.15e},{:.15e}", z.re, z.im)?;
        }
        Ok(())
    }

    /// Minimal SVG: the boundary as a polyline plus the rays arg z = ±απ/2.
    pub fn write_svg<W: Write>(&self, mut w: W) -> io::Result<()> {
        let r = self.boundary.iter().map(|z| z.norm()).fold(1e-300, f64::max) * 1.1;
        let size = 600.0;
        let map = |z: Complex64| (size / 2.0 + z.re / r * size / 2.0, size / 2.0 - z.im / r * size / 2.0);
        writeln!(w, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#)?;
        writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
        writeln!(w, r##"<line x1="0" y1="{c}" x2="{size}" y2="{c}" stroke="#bbb"/><line x1="{c}" y1="0" x2="{c}" y2="{size}" stroke="#bbb"/>"##, c = size / 2.0)?;
        let phi = self.alpha * PI / 2.0;
        let (x0, y0) = map(Complex64::new(0.0, 0.0));
        let (xa, ya) = map(Complex64::from_polar(r * 2.0, phi));
        let (xb, yb) = map(Complex64::from_polar(r * 2.0, -phi));
        writeln!(w, r##"<polygon points="{x0:.2},{y0:.2} {xa:.2},{ya:.2} {xb:.2},{yb:.2}" fill="#e8eefc" stroke="#4060c0"/>"##)?;
        write!(w, r##"<polyline fill="none" stroke="#c03030" stroke-width="1.5" points=""##)?;
        for z in &self.boundary {
            let (x, y) = map(*z);
            write!(w, "{x:.2},{y:.2} ")?;
        }
        writeln!(w, r#""/>"#)?;
        writeln!(w, "</svg>")
    }
}

/// θ_j = −π + 2π(j + ½)/n_theta, which never hits θ = 0 for even n_theta.
pub fn theta_grid(n_theta: usize) -> Vec<f64> {
    (0..n_theta).map(|j| -PI + 2.0 * PI * (j as f64 + 0.5) / n_theta as f64).collect()
}

/// Region boundary for `scheme`. F-LMMs and the α-difference scheme use
/// closed forms; L1 evaluates F_μ(z) = (1 − z)^{−2} Σ ν_j z^j with ν the
/// second differences of μ, truncated after `n_terms`.
pub fn region_boundary(scheme: SchemeId, alpha: f64, h: f64, n_theta: usize, n_terms: usize) -> Result<RegionSample> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(invalid(format!("step size must be positive, got {h}")));
    }
    if n_theta < 2 || !n_theta.is_multiple_of(2) {
        return Err(invalid(format!("n_theta must be even and at least 2, got {n_theta}")));
    }
    let theta = theta_grid(n_theta);
    let scale = h.powf(-alpha);
    let mut tail_bound = 0.0;
    let boundary: Vec<Complex64> = match scheme {
        SchemeId::AlphaDiff => theta
            .iter()
            .map(|&t| (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, t)).powf(alpha) * scale)
            .collect(),
        SchemeId::FBdf1 | SchemeId::FBdf2 | SchemeId::FAdams2 => theta
            .iter()
            .map(|&t| closed_form_mu(scheme, alpha, Complex64::from_polar(1.0, t)).expect("closed form exists") * scale)
            .collect(),
        SchemeId::L1 => {
            if n_terms < 16 {
                return Err(invalid(format!("n_terms must be at least 16, got {n_terms}")));
            }
            let w = l1_mu_weights(alpha, n_terms)?;
            let mu = w.mu()?;
            let at = |k: usize, back: usize| if k >= back { mu[k - back] } else { 0.0 };
            let nu: Vec<f64> = (0..n_terms).map(|j| at(j, 0) - 2.0 * at(j, 1) + at(j, 2)).collect();
            // |ν_j| ≈ C j^{−3−α}, so Σ_{j≥N} |ν_j| ≤ 2 |ν_{N−1}| N/(2 + α);
            // dividing by the smallest |1 − z|² on the grid bounds the error.
            let series_tail = 2.0 * nu[n_terms - 1].abs() * n_terms as f64 / (2.0 + alpha);
            let gap = 2.0 * (PI / (2.0 * n_theta as f64)).sin();
            tail_bound = series_tail / (gap * gap) * scale;
            let mut out = Vec::with_capacity(n_theta);
            for &t in &theta {
                let z = Complex64::from_polar(1.0, t);
                let mut acc = Complex64::new(0.0, 0.0);
                for &c in nu.iter().rev() {
                    acc = acc * z + c;
                }
                let one_minus = Complex64::new(1.0, 0.0) - z;
                out.push(acc / (one_minus * one_minus) * scale);
            }
            out
        }
    };
    if boundary.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::UnreliableTail("non-finite boundary point".into()));
    }
    Ok(RegionSample { scheme, alpha, h, theta, boundary, n_terms, tail_bound })
}

/// Overall sector classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectorVerdict {
    AllInSector,
    AnyCritical,
    AnyOutside,
}

impl fmt::Display for SectorVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AllInSector => "all-in-sector",
            Self::AnyCritical => "any-critical",
            Self::AnyOutside => "any-outside",
        })
    }
}

/// Sector report per eigenvalue of A.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub eigen: Vec<(Complex64, SectorReport)>,
    pub verdict: SectorVerdict,
}

/// Classifies given eigenvalues against the sector |arg z| > απ/2.
pub fn classify_eigenvalues(eigs: &[Complex64], alpha: f64) -> Result<Classification> {
    // eigenvalues at roundoff level relative to the spectrum count as zero
    let scale = eigs.iter().map(|l| l.norm()).fold(0.0, f64::max);
    let eigen = eigs
        .iter()
        .map(|&l| {
            let l = if l.norm() <= 1e-13 * scale { Complex64::new(0.0, 0.0) } else { l };
            in_stable_sector(l, alpha).map(|r| (l, r))
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = if eigen.iter().any(|(_, r)| !r.stable && !r.critical) {
        SectorVerdict::AnyOutside
    } else if eigen.iter().any(|(_, r)| r.critical) {
        SectorVerdict::AnyCritical
    } else {
        SectorVerdict::AllInSector
    };
    Ok(Classification { eigen, verdict })
}

/// Classifies the eigenvalues of the problem's linear part.
pub fn classify_problem(p: &FOdeProblem) -> Result<Classification> {
    classify_eigenvalues(&eigenvalues(&p.a)?, p.alpha)
}

/// Both smallness conditions on the Lipschitz function L(t).
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationCheck {
    pub d0_norm: f64,
    /// sup of L over the grid.
    pub l0: f64,
    /// Σ_{k≥1} ‖D_k‖: computed partial sum plus the fitted tail.
    pub s0: f64,
    pub s0_tail: f64,
    /// 1 − ‖D₀‖ ℒ₀ > 0.
    pub condition1: bool,
    /// sup_n Σ_{k=0}^{n−1} ‖D_{n−k}‖ L(t_k) over the computed range.
    pub conv_sup: f64,
    /// The same sum at n = n_max.
    pub conv_last: f64,
    /// (1 − ‖D₀‖ℒ₀)^{−1} (max(conv_sup, conv_last) + ℒ₀ · tail).
    pub rho0: f64,
    pub pass: bool,
}

/// Lipschitz function t ↦ L(t) along a computed trajectory, read from
/// `f.lipschitz` at the nearest grid point.
pub fn lipschitz_along<'a>(traj: &'a Trajectory, f: &'a dyn Nonlinearity) -> impl Fn(f64) -> f64 + 'a {
    move |t: f64| {
        let n = ((t / traj.h).round() as usize).min(traj.len() - 1);
        f.lipschitz(t, traj.state(n)).unwrap_or(f64::INFINITY)
    }
}

/// Evaluates the smallness conditions with `l` sampled on the resolvent grid.
pub fn perturbation_check<L: Fn(f64) -> f64>(p: &FOdeProblem, r: &ResolventSequence, l: L) -> Result<PerturbationCheck> {
    if p.dim() != r.a.nrows() {
        return Err(Error::DimensionMismatch(format!("problem has dimension {}, resolvent {}", p.dim(), r.a.nrows())));
    }
    let nbd = r.norms_big_d();
    let lk: Vec<f64> = (0..=r.n_max).map(|k| l(r.t(k))).collect();
    if lk.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return Err(invalid("Lipschitz function must be finite and non-negative on the grid"));
    }
    let l0 = lk.iter().copied().fold(0.0, f64::max);
    let d0_norm = nbd[0];
    let partial: f64 = nbd[1..].iter().sum();
    let s0_tail = if l0 == 0.0 {
        0.0
    } else {
        let rep = verify_resolvent_decay(r).map_err(|e| Error::UnreliableTail(format!("decay fit failed: {e}")))?;
        if !rep.s0_tail.is_finite() {
            return Err(Error::UnreliableTail(format!("fitted slope {:.4} of D_n is not summable", rep.slope_big_d)));
        }
        rep.s0_tail
    };
    let mut conv_sup = 0.0f64;
    let mut conv_last = 0.0;
    for n in 1..=r.n_max {
        let s: f64 = (0..n).map(|k| nbd[n - k] * lk[k]).sum();
        conv_sup = conv_sup.max(s);
        conv_last = s;
    }
    let gap = 1.0 - d0_norm * l0;
    let condition1 = gap > 0.0;
    let rho0 = if l0 == 0.0 {
        0.0
    } else if condition1 {
        (conv_sup.max(conv_last) + l0 * s0_tail) / gap
    } else {
        f64::INFINITY
    };
    Ok(PerturbationCheck {
        d0_norm,
        l0,
        s0: partial + s0_tail,
        s0_tail,
        condition1,
        conv_sup,
        conv_last,
        rho0,
        pass: condition1 && rho0 < 1.0,
    })
}
