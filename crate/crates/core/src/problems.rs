//! Built-in experiment families: the scalar test equation, a periodic
//! advection-diffusion semi-discretization and the controlled fractional
//! Lorenz system.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::solver::{FOdeProblem, Nonlinearity};
use crate::special::{real_matrix, CVector, SquareMatrix};

/// Initial value of the scalar experiments.
pub const SCALAR_Y0: f64 = 5.0;
/// Initial value of the Lorenz experiments.
pub const LORENZ_Y0: [f64; 3] = [1.0, -8.0, 9.0];
/// Default advection speed, diffusion and grid of the advection-diffusion tables.
pub const ADVDIFF_A: f64 = 0.1;
pub const ADVDIFF_D: f64 = 5.0;
pub const ADVDIFF_NX: usize = 64;

/// Experiment family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemFamily {
    ScalarTest,
    AdvectionDiffusion,
    LorenzControl,
}

impl ProblemFamily {
    pub fn name(self) -> &'static str {
        match self {
            Self::ScalarTest => "scalar",
            Self::AdvectionDiffusion => "advdiff",
            Self::LorenzControl => "lorenz",
        }
    }
}

impl fmt::Display for ProblemFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "scalar" | "scalartest" => Ok(Self::ScalarTest),
            "advdiff" | "advectiondiffusion" => Ok(Self::AdvectionDiffusion),
            "lorenz" | "lorenzcontrol" => Ok(Self::LorenzControl),
            _ => Err(invalid(format!("unknown problem '{s}' (expected scalar, advdiff or lorenz)"))),
        }
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProblemSpec {
    ScalarTest { b: f64, y0: Complex64 },
    AdvectionDiffusion { a: f64, d: f64, nx: usize },
    LorenzControl { control: bool },
}

impl ProblemSpec {
    pub fn family(&self) -> ProblemFamily {
        match self {
            Self::ScalarTest { .. } => ProblemFamily::ScalarTest,
            Self::AdvectionDiffusion { .. } => ProblemFamily::AdvectionDiffusion,
            Self::LorenzControl { .. } => ProblemFamily::LorenzControl,
        }
    }

    /// Table defaults for a family.
    pub fn default_for(family: ProblemFamily) -> Self {
        match family {
            ProblemFamily::ScalarTest => Self::ScalarTest { b: 10.0, y0: Complex64::new(SCALAR_Y0, 0.0) },
            ProblemFamily::AdvectionDiffusion => Self::AdvectionDiffusion { a: ADVDIFF_A, d: ADVDIFF_D, nx: ADVDIFF_NX },
            ProblemFamily::LorenzControl => Self::LorenzControl { control: true },
        }
    }

    /// Builds the problem at order `alpha`. The advection-diffusion initial
    /// value is 10 sin(4πx).
    pub fn build(&self, alpha: f64) -> Result<FOdeProblem> {
        match *self {
            Self::ScalarTest { b, y0 } => scalar_test(alpha, b, y0),
            Self::AdvectionDiffusion { a, d, nx } => advection_diffusion(alpha, a, d, nx, |x| 10.0 * (4.0 * PI * x).sin()),
            Self::LorenzControl { control } => lorenz_controlled(alpha, control),
        }
    }
}

/// λ = 1 + (1 + b) i.
pub fn scalar_lambda(b: f64) -> Complex64 {
    Complex64::new(1.0, 1.0 + b)
}

/// D^α y = λ y with λ = 1 + (1 + b) i.
pub fn scalar_test(alpha: f64, b: f64, y0: Complex64) -> Result<FOdeProblem> {
    if !b.is_finite() {
        return Err(invalid(format!("b must be finite, got {b}")));
    }
    FOdeProblem::linear(
        alpha,
        SquareMatrix::from_element(1, 1, scalar_lambda(b)),
        CVector::from_element(1, y0),
        format!("scalar b={b}"),
    )
}

fn check_grid(nx: usize) -> Result<()> {
    if nx < 4 || !nx.is_multiple_of(2) {
        return Err(invalid(format!("grid size must be even and at least 4, got {nx}")));
    }
    Ok(())
}

/// Periodic second-difference circulant: −2 on the diagonal, 1 on both
/// neighbours.
pub fn circulant_second_difference(nx: usize) -> SquareMatrix {
    SquareMatrix::from_fn(nx, nx, |i, j| {
        let k = (j + nx - i) % nx;
        Complex64::new(
            match k {
                0 => -2.0,
                1 => 1.0,
                k if k == nx - 1 => 1.0,
                _ => 0.0,
            },
            0.0,
        )
    })
}

/// Periodic central-difference circulant: 1 above the diagonal, −1 below.
pub fn circulant_skew(nx: usize) -> SquareMatrix {
    SquareMatrix::from_fn(nx, nx, |i, j| {
        let k = (j + nx - i) % nx;
        Complex64::new(
            match k {
                1 => 1.0,
                k if k == nx - 1 => -1.0,
                _ => 0.0,
            },
            0.0,
        )
    })
}

/// The semi-discrete matrix (D/δx²) A − (a/(2δx)) B on x_j = j/N.
pub fn advection_diffusion_matrix(a: f64, d: f64, nx: usize) -> Result<SquareMatrix> {
    check_grid(nx)?;
    if !(d.is_finite() && d > 0.0) || !a.is_finite() {
        return Err(invalid(format!("need finite a and D > 0, got a={a}, D={d}")));
    }
    let dx = 1.0 / nx as f64;
    Ok(circulant_second_difference(nx) * Complex64::new(d / (dx * dx), 0.0)
        - circulant_skew(nx) * Complex64::new(a / (2.0 * dx), 0.0))
}

/// Fourier eigenvalues λ_j = (2D/δx²)(cos 2πjδx − 1) − i (a/δx) sin 2πjδx,
/// j = 1..=N.
pub fn advection_diffusion_eigenvalues(a: f64, d: f64, nx: usize) -> Result<Vec<Complex64>> {
    check_grid(nx)?;
    let dx = 1.0 / nx as f64;
    Ok((1..=nx)
        .map(|j| {
            let th = 2.0 * PI * (j % nx) as f64 * dx;
            Complex64::new(2.0 * d / (dx * dx) * (th.cos() - 1.0), -(a / dx) * th.sin())
        })
        .collect())
}

/// Periodic advection-diffusion with initial profile `u0` sampled at x_j = j/N.
pub fn advection_diffusion<F: Fn(f64) -> f64>(alpha: f64, a: f64, d: f64, nx: usize, u0: F) -> Result<FOdeProblem> {
    let m = advection_diffusion_matrix(a, d, nx)?;
    let dx = 1.0 / nx as f64;
    let y0 = CVector::from_fn(nx, |j, _| Complex64::new(u0((j + 1) as f64 * dx), 0.0));
    FOdeProblem::linear(alpha, m, y0, format!("advdiff a={a} D={d} N={nx}"))
}

/// Lorenz quadratic part (0, −y₁y₃, y₁y₂) with its analytic Jacobian.
#[derive(Debug, Clone, Copy, Default)]
pub struct LorenzNonlinearity;

impl Nonlinearity for LorenzNonlinearity {
    fn eval(&self, _: usize, _: f64, y: &[Complex64], out: &mut [Complex64]) {
        out[0] = Complex64::new(0.0, 0.0);
        out[1] = -y[0] * y[2];
        out[2] = y[0] * y[1];
    }

    fn jacobian(&self, _: usize, _: f64, y: &[Complex64], jac: &mut SquareMatrix) -> bool {
        jac.fill(Complex64::new(0.0, 0.0));
        jac[(1, 0)] = -y[2];
        jac[(1, 2)] = -y[0];
        jac[(2, 0)] = y[1];
        jac[(2, 1)] = y[0];
        true
    }

    fn lipschitz(&self, _: f64, y: &[Complex64]) -> Option<f64> {
        Some((2.0 * y[0].norm_sqr() + y[1].norm_sqr() + y[2].norm_sqr()).sqrt())
    }
}

/// Lorenz linear part.
pub fn lorenz_matrix() -> SquareMatrix {
    real_matrix(&[&[-10.0, 10.0, 0.0], &[28.0, -1.0, 0.0], &[0.0, 0.0, -8.0 / 3.0]])
}

/// Feedback input B = (1, 1, 1)ᵀ.
pub fn lorenz_input() -> [f64; 3] {
    [1.0, 1.0, 1.0]
}

/// Feedback gain K = (0, −10, 0).
pub fn lorenz_gain() -> [f64; 3] {
    [0.0, -10.0, 0.0]
}

/// A + B K.
pub fn lorenz_controlled_matrix() -> SquareMatrix {
    let (b, k) = (lorenz_input(), lorenz_gain());
    let mut m = lorenz_matrix();
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] += b[i] * k[j];
        }
    }
    m
}

/// Fractional Lorenz system from (1, −8, 9); the feedback u = K y is folded
/// into the linear part when `with_control`.
pub fn lorenz_controlled(alpha: f64, with_control: bool) -> Result<FOdeProblem> {
    let a = if with_control { lorenz_controlled_matrix() } else { lorenz_matrix() };
    let y0 = CVector::from_iterator(3, LORENZ_Y0.iter().map(|&v| Complex64::new(v, 0.0)));
    let label = if with_control { "lorenz controlled" } else { "lorenz" };
    FOdeProblem::new(alpha, a, Arc::new(LorenzNonlinearity), y0, label)
}
