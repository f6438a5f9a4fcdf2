//! Stability sector Λ_α = {λ ≠ 0 : |arg λ| > απ/2}.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{invalid, Result};

/// |arg λ| within this distance of απ/2 counts as the critical boundary.
pub const CRITICAL_BAND: f64 = 1e-12;

/// Sector membership of one eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorReport {
    pub stable: bool,
    /// |arg λ| − απ/2, negative outside the sector. Zero for λ = 0.
    pub margin: f64,
    /// On the boundary (including λ = 0); never reported stable.
    pub critical: bool,
}

/// Sector test with the principal argument in (−π, π].
pub fn in_stable_sector(lambda: Complex64, alpha: f64) -> Result<SectorReport> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    if !(lambda.re.is_finite() && lambda.im.is_finite()) {
        return Err(invalid(format!("eigenvalue must be finite, got {lambda}")));
    }
    if lambda.re == 0.0 && lambda.im == 0.0 {
        return Ok(SectorReport { stable: false, margin: 0.0, critical: true });
    }
    let margin = lambda.arg().abs() - 0.5 * alpha * PI;
    let critical = margin.abs() <= CRITICAL_BAND;
    Ok(SectorReport { stable: margin > 0.0 && !critical, margin, critical })
}
