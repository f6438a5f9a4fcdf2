//! Convolution weights of the time-stepping schemes.
//!
//! A scheme in differential form reads h^{-α} Σ μ_j (y_{n−j} − y₀) = g_n and
//! in integral form y_n = y₀ + h^α Σ ω_{n−j} g_j, with ω the convolution
//! inverse of μ. Weights depend on α only (uniform grid), never on h.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::special::rgamma;

/// Formal power series Σ c_n z^n, truncated.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    pub coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid("power series needs at least one coefficient"));
        }
        if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(invalid("power series has non-finite coefficients"));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Real parts of the coefficients.
    pub fn real(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }

    /// Horner evaluation of the truncated series.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &PowerSeries, n_terms: usize) -> PowerSeries {
        let mut out = vec![Complex64::new(0.0, 0.0); n_terms];
        for (i, &a) in self.coeffs.iter().enumerate().take(n_terms) {
            if a == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(n_terms - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

/// (Σ f_n z^n)^α as a formal power series, by Miller's recurrence
/// g₀ = f₀^α, g_n = (1/(n f₀)) Σ_{k=1}^{n} (k(1+α) − n) f_k g_{n−k}.
///
/// Only the nonzero coefficients of `f` are visited, so a polynomial of
/// degree q costs O(q · n_terms).
pub fn miller_power(f: &PowerSeries, alpha: f64, n_terms: usize) -> Result<PowerSeries> {
    if n_terms == 0 {
        return Err(invalid("n_terms must be at least 1"));
    }
    if !alpha.is_finite() {
        return Err(invalid(format!("exponent must be finite, got {alpha}")));
    }
    let f0 = f.coeffs[0];
    if f0 == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let nz: Vec<(usize, Complex64)> = f
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| **c != Complex64::new(0.0, 0.0))
        .map(|(k, &c)| (k, c))
        .collect();
    let mut g = vec![Complex64::new(0.0, 0.0); n_terms];
    g[0] = if f0.im == 0.0 && f0.re > 0.0 { Complex64::new(f0.re.powf(alpha), 0.0) } else { f0.powf(alpha) };
    for n in 1..n_terms {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(k, fk) in &nz {
            if k > n {
                break;
            }
            acc += fk * g[n - k] * (k as f64 * (1.0 + alpha) - n as f64);
        }
        g[n] = acc / (f0 * n as f64);
    }
    Ok(PowerSeries { coeffs: g })
}

/// Convolution inverse by forward substitution:
/// v₀ = 1/u₀, v_n = −(1/u₀) Σ_{j=1}^{n} u_j v_{n−j}.
pub fn conv_inverse(u: &PowerSeries, n_terms: usize) -> Result<PowerSeries> {
    if n_terms == 0 {
        return Err(invalid("n_terms must be at least 1"));
    }
    let u0 = u.coeffs[0];
    if u0 == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let inv0 = u0.inv();
    let mut v = vec![Complex64::new(0.0, 0.0); n_terms];
    v[0] = inv0;
    for n in 1..n_terms {
        let top = n.min(u.coeffs.len() - 1);
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 1..=top {
            acc += u.coeffs[j] * v[n - j];
        }
        v[n] = -acc * inv0;
    }
    Ok(PowerSeries { coeffs: v })
}

/// Real convolution inverse, used for long weight tables.
pub fn conv_inverse_real(u: &[f64], n_terms: usize) -> Result<Vec<f64>> {
    if n_terms == 0 || u.is_empty() {
        return Err(invalid("n_terms must be at least 1"));
    }
    if u[0] == 0.0 {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let inv0 = 1.0 / u[0];
    let mut v = vec![0.0; n_terms];
    v[0] = inv0;
    for n in 1..n_terms {
        let top = n.min(u.len() - 1);
        let acc: f64 = (1..=top).map(|j| u[j] * v[n - j]).sum();
        v[n] = -acc * inv0;
    }
    Ok(v)
}

/// Scheme identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeId {
    FBdf1,
    FBdf2,
    FAdams2,
    L1,
    AlphaDiff,
}

impl SchemeId {
    pub const ALL: [SchemeId; 5] = [SchemeId::FBdf1, SchemeId::FBdf2, SchemeId::FAdams2, SchemeId::L1, SchemeId::AlphaDiff];

    pub fn name(self) -> &'static str {
        match self {
            SchemeId::FBdf1 => "fbdf1",
            SchemeId::FBdf2 => "fbdf2",
            SchemeId::FAdams2 => "fadams2",
            SchemeId::L1 => "l1",
            SchemeId::AlphaDiff => "alphadiff",
        }
    }

    /// Display label used in tables.
    pub fn label(self) -> &'static str {
        match self {
            SchemeId::FBdf1 => "F-BDF1",
            SchemeId::FBdf2 => "F-BDF2",
            SchemeId::FAdams2 => "F-Adams2",
            SchemeId::L1 => "L1",
            SchemeId::AlphaDiff => "alpha-difference",
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "fbdf1" => Ok(SchemeId::FBdf1),
            "fbdf2" => Ok(SchemeId::FBdf2),
            "fadams2" | "adams2" => Ok(SchemeId::FAdams2),
            "l1" => Ok(SchemeId::L1),
            "alphadiff" | "alphadifference" => Ok(SchemeId::AlphaDiff),
            _ => Err(Error::UnsupportedScheme(s.to_string())),
        }
    }
}

/// Weight tables of one scheme at one α.
///
/// For [`SchemeId::AlphaDiff`] `mu` holds the kernel k^{1−α} of the
/// α-difference operator and `omega` is absent. For L1, `sigma[n]` is the
/// initial-value weight σ_n for 1 ≤ n ≤ n_terms; `sigma[0]` is unused and 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeWeights {
    pub scheme: SchemeId,
    pub alpha: f64,
    pub n_terms: usize,
    pub mu: Option<Vec<f64>>,
    pub omega: Option<Vec<f64>>,
    pub sigma: Option<Vec<f64>>,
}

impl SchemeWeights {
    pub fn mu(&self) -> Result<&[f64]> {
        self.mu.as_deref().ok_or_else(|| Error::UnsupportedScheme(format!("{} has no mu weights", self.scheme)))
    }

    pub fn omega(&self) -> Result<&[f64]> {
        self.omega.as_deref().ok_or_else(|| Error::UnsupportedScheme(format!("{} has no omega weights", self.scheme)))
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    Ok(())
}

fn check_terms(n_terms: usize) -> Result<()> {
    if n_terms == 0 {
        return Err(invalid("n_terms must be at least 1"));
    }
    Ok(())
}

fn bdf_polynomial(k: usize) -> Result<PowerSeries> {
    match k {
        1 => PowerSeries::from_real(&[1.0, -1.0]),
        2 => PowerSeries::from_real(&[1.5, -2.0, 0.5]),
        _ => Err(Error::UnsupportedScheme(format!("F-BDF{k} (only k = 1, 2 are implemented)"))),
    }
}

/// F-BDF1 / F-BDF2: F_μ(z) = (Σ_{ℓ=1}^{k} (1−z)^ℓ/ℓ)^α and F_ω = F_μ^{-1}.
pub fn fbdf_weights(k: usize, alpha: f64, n_terms: usize) -> Result<SchemeWeights> {
    check_alpha(alpha)?;
    check_terms(n_terms)?;
    let poly = bdf_polynomial(k)?;
    let mu = miller_power(&poly, alpha, n_terms)?.real();
    let omega = miller_power(&poly, -alpha, n_terms)?.real();
    Ok(SchemeWeights {
        scheme: if k == 1 { SchemeId::FBdf1 } else { SchemeId::FBdf2 },
        alpha,
        n_terms,
        mu: Some(mu),
        omega: Some(omega),
        sigma: None,
    })
}

/// F-BDF1 weights by the closed recursion μ₀ = 1, μ_j = (1 − (α+1)/j) μ_{j−1}.
pub fn fbdf1_mu_recursion(alpha: f64, n_terms: usize) -> Vec<f64> {
    let mut mu = Vec::with_capacity(n_terms);
    let mut m = 1.0;
    for j in 0..n_terms {
        if j > 0 {
            m *= 1.0 - (alpha + 1.0) / j as f64;
        }
        mu.push(m);
    }
    mu
}

/// Two-step fractional Adams: F_ω(z) = (1−z)^{−α} (1 − (α/2)(1−z)).
pub fn fadams2_weights(alpha: f64, n_terms: usize) -> Result<SchemeWeights> {
    check_alpha(alpha)?;
    check_terms(n_terms)?;
    let one_minus_z = PowerSeries::from_real(&[1.0, -1.0])?;
    let base = miller_power(&one_minus_z, -alpha, n_terms)?;
    let lin = PowerSeries::from_real(&[1.0 - 0.5 * alpha, 0.5 * alpha])?;
    let omega = base.mul(&lin, n_terms).real();
    // μ = (1−z)^α / ((1−α/2) + (α/2) z): one division recurrence instead of
    // an O(n²) inverse; identical sequence.
    let num = miller_power(&one_minus_z, alpha, n_terms)?.real();
    let (c0, c1) = (1.0 - 0.5 * alpha, 0.5 * alpha);
    let mut mu = vec![0.0; n_terms];
    for n in 0..n_terms {
        let prev = if n > 0 { mu[n - 1] } else { 0.0 };
        mu[n] = (num[n] - c1 * prev) / c0;
    }
    Ok(SchemeWeights { scheme: SchemeId::FAdams2, alpha, n_terms, mu: Some(mu), omega: Some(omega), sigma: None })
}

/// (j+1)^a − 2 j^a + (j−1)^a without cancellation for large j.
fn second_difference_pow(a: f64, j: usize) -> f64 {
    if j < 3 {
        let jf = j as f64;
        return (jf + 1.0).powf(a) - 2.0 * jf.powf(a) + if j >= 1 { (jf - 1.0).powf(a) } else { 0.0 };
    }
    // Σ_{k≥1} 2 C(a, 2k) j^{a−2k}
    let jf = j as f64;
    let x2 = 1.0 / (jf * jf);
    let mut binom = a * (a - 1.0) / 2.0;
    let mut pow = x2;
    let mut sum = 0.0;
    let mut k = 1;
    loop {
        let term = 2.0 * binom * pow;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() || k > 200 {
            break;
        }
        let m = 2.0 * k as f64;
        binom *= (a - m) * (a - m - 1.0) / ((m + 1.0) * (m + 2.0));
        pow *= x2;
        k += 1;
    }
    jf.powf(a) * sum
}

/// n^a − (n−1)^a for n ≥ 1, computed as −n^a expm1(a ln(1 − 1/n)).
fn first_difference_pow(a: f64, n: usize) -> f64 {
    if n == 1 {
        return 1.0;
    }
    let nf = n as f64;
    -nf.powf(a) * (a * (-1.0 / nf).ln_1p()).exp_m1()
}

/// L1 weights μ₀ = 1/Γ(2−α), μ_j = Δ²(j^{1−α})/Γ(2−α), σ_n = ∇(n^{1−α})/Γ(2−α),
/// with ω = conv_inverse(μ).
pub fn l1_weights(alpha: f64, n_terms: usize) -> Result<SchemeWeights> {
    let mut w = l1_mu_weights(alpha, n_terms)?;
    w.omega = Some(conv_inverse_real(w.mu()?, n_terms)?);
    Ok(w)
}

/// L1 μ and σ only; skips the O(n²) inverse.
pub fn l1_mu_weights(alpha: f64, n_terms: usize) -> Result<SchemeWeights> {
    check_alpha(alpha)?;
    check_terms(n_terms)?;
    let a = 1.0 - alpha;
    let rg = rgamma(2.0 - alpha);
    let mu: Vec<f64> = (0..n_terms).map(|j| if j == 0 { rg } else { rg * second_difference_pow(a, j) }).collect();
    let mut sigma = vec![0.0; n_terms + 1];
    for (n, s) in sigma.iter_mut().enumerate().skip(1) {
        *s = rg * first_difference_pow(a, n);
    }
    Ok(SchemeWeights { scheme: SchemeId::L1, alpha, n_terms, mu: Some(mu), omega: None, sigma: Some(sigma) })
}

/// k_n^a = Γ(a+n)/(Γ(a)Γ(1+n)) by the recursion k_n = k_{n−1}(a+n−1)/n.
pub fn alpha_diff_kernel(a: f64, n_terms: usize) -> Result<Vec<f64>> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(invalid(format!("kernel parameter must lie in (0, 1], got {a}")));
    }
    check_terms(n_terms)?;
    let mut k = Vec::with_capacity(n_terms);
    let mut v = 1.0;
    for n in 0..n_terms {
        if n > 0 {
            v *= (a + n as f64 - 1.0) / n as f64;
        }
        k.push(v);
    }
    Ok(k)
}

/// α-difference scheme weights: `mu` holds k^{1−α}.
pub fn alpha_diff_weights(alpha: f64, n_terms: usize) -> Result<SchemeWeights> {
    check_alpha(alpha)?;
    // At α = 1 the kernel degenerates to k^0 = δ; handled by the recursion
    // only for a > 0, so treat it explicitly.
    let mu = if alpha == 1.0 {
        let mut v = vec![0.0; n_terms.max(1)];
        v[0] = 1.0;
        v
    } else {
        alpha_diff_kernel(1.0 - alpha, n_terms)?
    };
    Ok(SchemeWeights { scheme: SchemeId::AlphaDiff, alpha, n_terms, mu: Some(mu), omega: None, sigma: None })
}

/// Weights for any scheme.
pub fn scheme_weights(scheme: SchemeId, alpha: f64, n_terms: usize) -> Result<SchemeWeights> {
    match scheme {
        SchemeId::FBdf1 => fbdf_weights(1, alpha, n_terms),
        SchemeId::FBdf2 => fbdf_weights(2, alpha, n_terms),
        SchemeId::FAdams2 => fadams2_weights(alpha, n_terms),
        SchemeId::L1 => l1_weights(alpha, n_terms),
        SchemeId::AlphaDiff => alpha_diff_weights(alpha, n_terms),
    }
}

/// Which sequence of a [`SchemeWeights`] to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    Mu,
    Omega,
}

/// Truncated generating-function value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GfValue {
    pub value: Complex64,
    /// Bound on the neglected tail, assuming the coefficient magnitudes do
    /// not increase past the table (true for every scheme here). `None` on
    /// |z| = 1, where no bound is available.
    pub tail_bound: Option<f64>,
}

/// Σ_{n<n_terms} w_n z^n for |z| ≤ 1.
pub fn generating_fn_eval(w: &SchemeWeights, which: Sequence, z: Complex64) -> Result<GfValue> {
    let r = z.norm();
    if !(r <= 1.0) {
        return Err(invalid(format!("generating functions are evaluated on |z| <= 1, got |z| = {r}")));
    }
    let seq = match which {
        Sequence::Mu => w.mu()?,
        Sequence::Omega => w.omega()?,
    };
    let value = seq.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let tail_bound = if r < 1.0 {
        let n = seq.len();
        let start = n - (n / 10).max(1);
        let m = seq[start..].iter().fold(0.0f64, |a, &c| a.max(c.abs()));
        Some(m * r.powi(n as i32) / (1.0 - r))
    } else {
        None
    };
    Ok(GfValue { value, tail_bound })
}

/// Closed-form F_μ(z) where one exists (all schemes except L1).
pub fn closed_form_mu(scheme: SchemeId, alpha: f64, z: Complex64) -> Option<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    match scheme {
        SchemeId::FBdf1 => Some((one - z).powf(alpha)),
        SchemeId::FBdf2 => Some((one - z).powf(alpha) * ((3.0 - z) / 2.0).powf(alpha)),
        SchemeId::FAdams2 => Some((one - z).powf(alpha) / (one - (one - z) * (0.5 * alpha))),
        SchemeId::AlphaDiff => Some((one - z).powf(alpha - 1.0)),
        SchemeId::L1 => None,
    }
}
