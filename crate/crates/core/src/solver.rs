//! Uniform-grid time stepping for D^α y = A y + f(t, y).
//!
//! Every scheme is reduced to one implicit step equation
//!
//! ```text
//! (c I − s A) y_n − s f(t_n, y_n) = κ_n y₀ + Σ_{j=1}^{n−1} c_{n−j} H_j
//! ```
//!
//! where the history quantity H_j depends on the form: H_j = A y_j + f_j for
//! the integral (ω) form, H_j = y_j − y₀ for the differential (μ) form and
//! H_j = y_j for the α-difference scheme. The matrix c I − s A is factored
//! once per run.

use std::fmt;
use std::io::{self, Write};
use std::sync::Arc;

use nalgebra::{DVector, LU};
use num_complex::Complex64;

use crate::error::{invalid, Error, Result};
use crate::special::{check_square, CVector, SquareMatrix};
use crate::weights::{alpha_diff_kernel, scheme_weights, SchemeId, SchemeWeights};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The nonlinear part f(t, y) of the model.
///
/// Implementations must be holomorphic in y when no analytic Jacobian is
/// supplied, since the finite-difference Jacobian perturbs along the real
/// axis only.
pub trait Nonlinearity: Send + Sync {
    /// Writes f(t, y) into `out`. `step` is the grid index of `t`.
    fn eval(&self, step: usize, t: f64, y: &[Complex64], out: &mut [Complex64]);

    /// Writes ∂f/∂y into `jac` and returns true, or returns false when no
    /// analytic Jacobian is available.
    fn jacobian(&self, _step: usize, _t: f64, _y: &[Complex64], _jac: &mut SquareMatrix) -> bool {
        false
    }

    /// True when f vanishes identically.
    fn is_zero(&self) -> bool {
        false
    }

    /// False when f does not depend on y, so that each step is linear.
    fn depends_on_state(&self) -> bool {
        true
    }

    /// Local Lipschitz estimate at (t, y), if known.
    fn lipschitz(&self, _t: f64, _y: &[Complex64]) -> Option<f64> {
        None
    }
}

/// f ≡ 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroNonlinearity;

impl Nonlinearity for ZeroNonlinearity {
    fn eval(&self, _: usize, _: f64, _: &[Complex64], out: &mut [Complex64]) {
        out.fill(ZERO);
    }
    fn jacobian(&self, _: usize, _: f64, _: &[Complex64], jac: &mut SquareMatrix) -> bool {
        jac.fill(ZERO);
        true
    }
    fn is_zero(&self) -> bool {
        true
    }
    fn depends_on_state(&self) -> bool {
        false
    }
    fn lipschitz(&self, _: f64, _: &[Complex64]) -> Option<f64> {
        Some(0.0)
    }
}

/// Wraps a closure `(t, y, out)` as a nonlinearity with a finite-difference
/// Jacobian.
pub struct FnNonlinearity<F> {
    f: F,
}

impl<F> FnNonlinearity<F>
where
    F: Fn(f64, &[Complex64], &mut [Complex64]) + Send + Sync,
{
    pub fn new(f: F) -> Self {
        Self { f }
    }
}

impl<F> Nonlinearity for FnNonlinearity<F>
where
    F: Fn(f64, &[Complex64], &mut [Complex64]) + Send + Sync,
{
    fn eval(&self, _: usize, t: f64, y: &[Complex64], out: &mut [Complex64]) {
        (self.f)(t, y, out)
    }
}

/// State-independent forcing that equals `vector` at grid index `step` and
/// vanishes elsewhere.
#[derive(Debug, Clone)]
pub struct ImpulseForcing {
    pub step: usize,
    pub vector: Vec<Complex64>,
}

impl Nonlinearity for ImpulseForcing {
    fn eval(&self, step: usize, _: f64, _: &[Complex64], out: &mut [Complex64]) {
        if step == self.step {
            out.copy_from_slice(&self.vector);
        } else {
            out.fill(ZERO);
        }
    }
    fn jacobian(&self, _: usize, _: f64, _: &[Complex64], jac: &mut SquareMatrix) -> bool {
        jac.fill(ZERO);
        true
    }
    fn depends_on_state(&self) -> bool {
        false
    }
    fn lipschitz(&self, _: f64, _: &[Complex64]) -> Option<f64> {
        Some(0.0)
    }
}

/// Semi-linear Caputo problem D^α y = A y + f(t, y), y(0) = y₀.
#[derive(Clone)]
pub struct FOdeProblem {
    pub alpha: f64,
    pub a: SquareMatrix,
    pub f: Arc<dyn Nonlinearity>,
    /// Global Lipschitz bound of f, if known.
    pub lipschitz_bound: Option<f64>,
    pub y0: CVector,
    pub label: String,
}

impl fmt::Debug for FOdeProblem {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fm.debug_struct("FOdeProblem")
            .field("alpha", &self.alpha)
            .field("dim", &self.dim())
            .field("nonlinear", &!self.f.is_zero())
            .field("label", &self.label)
            .finish()
    }
}

impl FOdeProblem {
    /// Linear problem with f ≡ 0.
    pub fn linear(alpha: f64, a: SquareMatrix, y0: CVector, label: impl Into<String>) -> Result<Self> {
        let p = Self {
            alpha,
            a,
            f: Arc::new(ZeroNonlinearity),
            lipschitz_bound: Some(0.0),
            y0,
            label: label.into(),
        };
        p.validate()?;
        Ok(p)
    }

    /// Problem with a nonlinear part.
    pub fn new(
        alpha: f64,
        a: SquareMatrix,
        f: Arc<dyn Nonlinearity>,
        y0: CVector,
        label: impl Into<String>,
    ) -> Result<Self> {
        let p = Self { alpha, a, f, lipschitz_bound: None, y0, label: label.into() };
        p.validate()?;
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.y0.len()
    }

    /// Same problem with a different order.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        let mut p = self.clone();
        p.alpha = alpha;
        p.validate()?;
        Ok(p)
    }

    /// Same problem with a different initial value.
    pub fn with_y0(&self, y0: CVector) -> Result<Self> {
        let mut p = self.clone();
        p.y0 = y0;
        p.validate()?;
        Ok(p)
    }

    /// Same problem with a different nonlinearity.
    pub fn with_nonlinearity(&self, f: Arc<dyn Nonlinearity>) -> Self {
        let mut p = self.clone();
        p.f = f;
        p.lipschitz_bound = None;
        p
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(invalid(format!("alpha must lie in (0, 1], got {}", self.alpha)));
        }
        check_square(&self.a)?;
        if self.a.nrows() != self.y0.len() {
            return Err(Error::DimensionMismatch(format!(
                "A is {}x{} but y0 has {} entries",
                self.a.nrows(),
                self.a.ncols(),
                self.y0.len()
            )));
        }
        if self.y0.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(invalid("y0 has non-finite entries"));
        }
        if let Some(l) = self.lipschitz_bound {
            if !(l.is_finite() && l >= 0.0) {
                return Err(invalid(format!("Lipschitz bound must be finite and non-negative, got {l}")));
            }
        }
        Ok(())
    }

    /// ‖f(0, 0)‖; zero when the origin is an equilibrium.
    pub fn origin_residual(&self) -> f64 {
        let d = self.dim();
        let mut out = vec![ZERO; d];
        self.f.eval(0, 0.0, &vec![ZERO; d], &mut out);
        norm(&out)
    }
}

/// How the α-difference equations are indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlphaDiffForm {
    /// y₀ at index 0 and equations for n ≥ 1.
    #[default]
    Direct,
    /// v₋₁ = y₀ held in state 0 and equations for n ≥ 0 held in states
    /// 1, 2, …, so that state n + 1 equals Q₁ⁿ y₀ for f ≡ 0.
    PoissonIndexed,
}

/// Which step equation a kernel encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeForm {
    Integral,
    Differential,
    AlphaDifference(AlphaDiffForm),
}

/// Coefficients of the generic step equation for one run.
#[derive(Debug, Clone)]
pub struct StepKernel {
    pub scheme: SchemeId,
    pub form: SchemeForm,
    pub alpha: f64,
    pub h: f64,
    pub c: f64,
    pub s: f64,
    /// κ_n for n = 0..=N.
    pub kappa: Vec<f64>,
    /// History coefficients c_m for m = 0..=N (c₀ unused).
    pub coef: Vec<f64>,
}

fn check_step(h: f64, n_steps: usize) -> Result<()> {
    if !(h.is_finite() && h > 0.0) {
        return Err(invalid(format!("step size must be positive, got {h}")));
    }
    if n_steps == 0 {
        return Err(invalid("number of steps must be positive"));
    }
    Ok(())
}

impl StepKernel {
    /// y_n = y₀ + h^α Σ_{j=1}^{n} ω_{n−j} (A y_j + f_j).
    pub fn integral(w: &SchemeWeights, h: f64, n_steps: usize) -> Result<Self> {
        check_step(h, n_steps)?;
        let omega = w.omega()?;
        if omega.len() < n_steps {
            return Err(invalid(format!("need {} omega weights, have {}", n_steps, omega.len())));
        }
        let ha = h.powf(w.alpha);
        let mut coef: Vec<f64> = omega.iter().take(n_steps + 1).map(|&o| ha * o).collect();
        coef.resize(n_steps + 1, 0.0);
        Ok(Self {
            scheme: w.scheme,
            form: SchemeForm::Integral,
            alpha: w.alpha,
            h,
            c: 1.0,
            s: ha * omega[0],
            kappa: vec![1.0; n_steps + 1],
            coef,
        })
    }

    /// h^{−α} Σ_{j=0}^{n} μ_j (y_{n−j} − y₀) = A y_n + f_n.
    pub fn differential(w: &SchemeWeights, h: f64, n_steps: usize) -> Result<Self> {
        check_step(h, n_steps)?;
        if w.scheme == SchemeId::AlphaDiff {
            return Err(Error::UnsupportedScheme("the alpha-difference scheme has its own kernel".into()));
        }
        let mu = w.mu()?;
        if mu.len() < n_steps {
            return Err(invalid(format!("need {} mu weights, have {}", n_steps, mu.len())));
        }
        if mu[0] == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let mut coef: Vec<f64> = mu.iter().take(n_steps + 1).map(|&m| -m).collect();
        coef.resize(n_steps + 1, 0.0);
        Ok(Self {
            scheme: w.scheme,
            form: SchemeForm::Differential,
            alpha: w.alpha,
            h,
            c: mu[0],
            s: h.powf(w.alpha),
            kappa: vec![mu[0]; n_steps + 1],
            coef,
        })
    }

    /// Caputo α-difference scheme with kernel k^{1−α}.
    pub fn alpha_difference(alpha: f64, h: f64, n_steps: usize, form: AlphaDiffForm) -> Result<Self> {
        check_step(h, n_steps)?;
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(invalid(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        let k = if alpha == 1.0 {
            let mut d = vec![0.0; n_steps + 1];
            d[0] = 1.0;
            d
        } else {
            alpha_diff_kernel(1.0 - alpha, n_steps + 1)?
        };
        let mut coef = vec![0.0; n_steps + 1];
        for m in 1..=n_steps {
            coef[m] = k[m - 1] - k[m];
        }
        let kappa = match form {
            AlphaDiffForm::Direct => coef.clone(),
            AlphaDiffForm::PoissonIndexed => {
                let mut kap = vec![0.0; n_steps + 1];
                kap[1..].copy_from_slice(&k[..n_steps]);
                kap
            }
        };
        Ok(Self {
            scheme: SchemeId::AlphaDiff,
            form: SchemeForm::AlphaDifference(form),
            alpha,
            h,
            c: k[0],
            s: h.powf(alpha),
            kappa,
            coef,
        })
    }

    pub fn n_steps(&self) -> usize {
        self.coef.len() - 1
    }
}

/// Tolerances and limits of the per-step solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub newton_abs_tol: f64,
    pub newton_rel_tol: f64,
    pub max_newton: usize,
    /// Relative step of the finite-difference Jacobian.
    pub fd_step: f64,
    pub damping: f64,
    pub max_fixed_point: usize,
    /// The run stops once ‖y_n‖ exceeds this factor times max(‖y₀‖, 1).
    pub blowup_factor: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            newton_abs_tol: 1e-12,
            newton_rel_tol: 1e-12,
            max_newton: 50,
            fd_step: 1e-7,
            damping: 0.5,
            max_fixed_point: 2000,
            blowup_factor: 1e12,
        }
    }
}

/// Iteration counters of a run.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SolveStats {
    pub newton_iterations: usize,
    pub fixed_point_steps: usize,
    /// Largest final step residual ‖(cI − sA)y − s f − r‖.
    pub max_residual: f64,
    /// Largest step residual relative to ‖y_n‖.
    pub max_rel_residual: f64,
}

/// Why a run ended before its horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct Truncation {
    pub step: usize,
    pub norm: f64,
    pub reason: String,
}

/// Computed states y₀…y_N on t_n = n h.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub scheme: SchemeId,
    pub form: SchemeForm,
    pub alpha: f64,
    pub h: f64,
    pub dim: usize,
    pub times: Vec<f64>,
    data: Vec<Complex64>,
    pub truncated: Option<Truncation>,
    pub stats: SolveStats,
}

impl Trajectory {
    /// Number of stored states (N + 1 unless truncated).
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn state(&self, n: usize) -> &[Complex64] {
        &self.data[n * self.dim..(n + 1) * self.dim]
    }

    pub fn states(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks_exact(self.dim)
    }

    /// Euclidean norms ‖y_n‖.
    pub fn norms(&self) -> Vec<f64> {
        self.states().map(norm).collect()
    }

    /// Builds a trajectory from given states, e.g. synthetic test data.
    pub fn from_states(scheme: SchemeId, alpha: f64, h: f64, states: &[Vec<Complex64>]) -> Result<Self> {
        let dim = states.first().map_or(0, |s| s.len());
        if dim == 0 || states.iter().any(|s| s.len() != dim) {
            return Err(Error::DimensionMismatch("states must be non-empty and of equal length".into()));
        }
        Ok(Self {
            scheme,
            form: SchemeForm::Integral,
            alpha,
            h,
            dim,
            times: (0..states.len()).map(|n| n as f64 * h).collect(),
            data: states.concat(),
            truncated: None,
            stats: SolveStats::default(),
        })
    }

    /// CSV with columns `t, y0_re, y0_im, …, norm` after `metadata`.
    pub fn write_csv<W: Write>(&self, mut w: W, metadata: &str) -> io::Result<()> {
        writeln!(w, "{metadata}")?;
        write!(w, "t")?;
        for i in 0..self.dim {
            write!(w, ",y{i}_re,y{i}_im")?;
        }
        writeln!(w, ",norm")?;
        for (n, y) in self.states().enumerate() {
            write!(w, "{:.10}", self.times[n])?;
            for z in y {
                write!(w, ",{:.17e},{:.17e}", z.re, z.im)?;
            }
            writeln!(w, ",{:.17e}", norm(y))?;
        }
        Ok(())
    }
}

pub(crate) fn norm(y: &[Complex64]) -> f64 {
    y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Solver state between steps: history, accumulator and counters.
pub struct StepWorkspace<'a> {
    problem: &'a FOdeProblem,
    kernel: StepKernel,
    opts: SolverOptions,
    lu: LU<Complex64, nalgebra::Dyn, nalgebra::Dyn>,
    step_matrix: SquareMatrix,
    /// H_j as interleaved (re, im) rows, j = 0..=n.
    history: Vec<f64>,
    /// Σ_{j=1}^{n−1} c_{n−j} H_j for the step under way, interleaved.
    acc: Vec<f64>,
    data: Vec<Complex64>,
    n: usize,
    stats: SolveStats,
    limit: f64,
    truncated: Option<Truncation>,
}

impl<'a> StepWorkspace<'a> {
    pub fn new(problem: &'a FOdeProblem, kernel: StepKernel, opts: SolverOptions) -> Result<Self> {
        problem.validate()?;
        if (kernel.alpha - problem.alpha).abs() > 1e-15 {
            return Err(invalid(format!(
                "weights are for alpha={} but the problem has alpha={}",
                kernel.alpha, problem.alpha
            )));
        }
        let d = problem.dim();
        let mut step_matrix = -problem.a.clone() * Complex64::new(kernel.s, 0.0);
        for i in 0..d {
            step_matrix[(i, i)] += kernel.c;
        }
        let lu = step_matrix.clone().lu();
        let u = lu.u();
        let diag: Vec<f64> = (0..d).map(|i| u[(i, i)].norm()).collect();
        let big = diag.iter().copied().fold(0.0, f64::max);
        let small = diag.iter().copied().fold(f64::INFINITY, f64::min);
        if !(small > f64::EPSILON * d as f64 * big) {
            return Err(Error::SingularStepMatrix);
        }
        let n_steps = kernel.n_steps();
        let mut data = Vec::with_capacity((n_steps + 1) * d);
        data.extend(problem.y0.iter().copied());
        let mut ws = Self {
            problem,
            kernel,
            opts,
            lu,
            step_matrix,
            history: Vec::with_capacity((n_steps + 1) * 2 * d),
            acc: vec![0.0; 2 * d],
            data,
            n: 0,
            stats: SolveStats::default(),
            limit: opts.blowup_factor * norm(problem.y0.as_slice()).max(1.0),
            truncated: None,
        };
        let y0: Vec<Complex64> = problem.y0.iter().copied().collect();
        let h0 = ws.history_entry(0, &y0);
        ws.push_history(&h0);
        Ok(ws)
    }

    /// Index of the last computed state.
    pub fn current_step(&self) -> usize {
        self.n
    }

    /// Σ_{j=1}^{n−1} c_{n−j} H_j as used by the most recent step.
    pub fn accumulator(&self) -> Vec<Complex64> {
        self.acc.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect()
    }

    /// H_j as stored for step j.
    pub fn history_entry_at(&self, j: usize) -> Vec<Complex64> {
        let d2 = 2 * self.problem.dim();
        self.history[j * d2..(j + 1) * d2].chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect()
    }

    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    pub fn truncated(&self) -> Option<&Truncation> {
        self.truncated.as_ref()
    }

    fn push_history(&mut self, h: &[Complex64]) {
        for z in h {
            self.history.push(z.re);
            self.history.push(z.im);
        }
    }

    fn t(&self, n: usize) -> f64 {
        n as f64 * self.kernel.h
    }

    fn history_entry(&self, n: usize, y: &[Complex64]) -> Vec<Complex64> {
        match self.kernel.form {
            SchemeForm::Integral => {
                let d = y.len();
                let mut g = vec![ZERO; d];
                self.problem.f.eval(n, self.t(n), y, &mut g);
                for (i, gi) in g.iter_mut().enumerate() {
                    for (j, yj) in y.iter().enumerate() {
                        *gi += self.problem.a[(i, j)] * yj;
                    }
                }
                g
            }
            SchemeForm::Differential => y.iter().zip(self.problem.y0.iter()).map(|(a, b)| a - b).collect(),
            SchemeForm::AlphaDifference(_) => y.to_vec(),
        }
    }

    fn accumulate(&mut self, n: usize) {
        let d2 = self.acc.len();
        self.acc.fill(0.0);
        let coef = &self.kernel.coef;
        for j in 1..n {
            let c = coef[n - j];
            let row = &self.history[j * d2..(j + 1) * d2];
            for (a, &x) in self.acc.iter_mut().zip(row) {
                *a += c * x;
            }
        }
    }

    fn solve_linear(&self, b: &[Complex64]) -> Vec<Complex64> {
        let rhs = DVector::from_column_slice(b);
        self.lu.solve(&rhs).expect("step matrix was checked to be invertible").as_slice().to_vec()
    }

    fn residual(&self, y: &[Complex64], rhs: &[Complex64], fy: &[Complex64]) -> Vec<Complex64> {
        let d = y.len();
        let s = self.kernel.s;
        (0..d)
            .map(|i| {
                let mut r = -rhs[i] - s * fy[i];
                for (j, yj) in y.iter().enumerate() {
                    r += self.step_matrix[(i, j)] * yj;
                }
                r
            })
            .collect()
    }

    fn newton(&mut self, n: usize, rhs: &[Complex64], guess: Vec<Complex64>) -> Option<Vec<Complex64>> {
        let d = rhs.len();
        let t = self.t(n);
        let s = self.kernel.s;
        let f = &self.problem.f;
        let mut y = guess;
        let mut fy = vec![ZERO; d];
        let mut jac = SquareMatrix::zeros(d, d);
        let mut fp = vec![ZERO; d];
        for _ in 0..self.opts.max_newton {
            self.stats.newton_iterations += 1;
            f.eval(n, t, &y, &mut fy);
            let r = self.residual(&y, rhs, &fy);
            if !f.jacobian(n, t, &y, &mut jac) {
                for k in 0..d {
                    let delta = self.opts.fd_step * y[k].norm().max(1.0);
                    let mut yp = y.clone();
                    yp[k] += delta;
                    f.eval(n, t, &yp, &mut fp);
                    for i in 0..d {
                        jac[(i, k)] = (fp[i] - fy[i]) / delta;
                    }
                }
            }
            let m = &self.step_matrix - jac.clone() * Complex64::new(s, 0.0);
            let dy = m.lu().solve(&DVector::from_column_slice(&r))?;
            let mut step = 0.0f64;
            for (yi, di) in y.iter_mut().zip(dy.iter()) {
                *yi -= di;
                step = step.max(di.norm());
            }
            if !step.is_finite() {
                return None;
            }
            let scale = y.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if step <= self.opts.newton_abs_tol + self.opts.newton_rel_tol * scale {
                return Some(y);
            }
        }
        None
    }

    fn fixed_point(&mut self, n: usize, rhs: &[Complex64], guess: Vec<Complex64>) -> Result<Vec<Complex64>> {
        let d = rhs.len();
        let t = self.t(n);
        let s = self.kernel.s;
        let theta = self.opts.damping;
        let mut y = guess;
        let mut fy = vec![ZERO; d];
        let mut last = f64::INFINITY;
        for _ in 0..self.opts.max_fixed_point {
            self.stats.fixed_point_steps += 1;
            self.problem.f.eval(n, t, &y, &mut fy);
            let b: Vec<Complex64> = rhs.iter().zip(&fy).map(|(r, f)| r + s * f).collect();
            let next = self.solve_linear(&b);
            let mut step = 0.0f64;
            for (yi, ni) in y.iter_mut().zip(&next) {
                let upd = (ni - *yi) * theta;
                *yi += upd;
                step = step.max(upd.norm());
            }
            last = step;
            if !step.is_finite() {
                break;
            }
            let scale = y.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if step <= self.opts.newton_abs_tol + self.opts.newton_rel_tol * scale {
                return Ok(y);
            }
        }
        Err(Error::NonlinearNonConvergence { step: n, residual: last })
    }

    /// Advances one step. Returns false once the horizon is reached or the
    /// run was truncated.
    pub fn step(&mut self) -> Result<bool> {
        if self.truncated.is_some() || self.n >= self.kernel.n_steps() {
            return Ok(false);
        }
        let n = self.n + 1;
        let d = self.problem.dim();
        self.accumulate(n);
        let kappa = self.kernel.kappa[n];
        let rhs: Vec<Complex64> = (0..d)
            .map(|i| self.problem.y0[i] * kappa + Complex64::new(self.acc[2 * i], self.acc[2 * i + 1]))
            .collect();
        let f = Arc::clone(&self.problem.f);
        let t = self.t(n);
        let y = if f.is_zero() {
            self.solve_linear(&rhs)
        } else if !f.depends_on_state() {
            let mut fy = vec![ZERO; d];
            f.eval(n, t, &rhs, &mut fy);
            let b: Vec<Complex64> = rhs.iter().zip(&fy).map(|(r, g)| r + self.kernel.s * g).collect();
            self.solve_linear(&b)
        } else {
            let prev = self.data[(n - 1) * d..n * d].to_vec();
            match self.newton(n, &rhs, prev.clone()) {
                Some(y) => y,
                None => self.fixed_point(n, &rhs, prev)?,
            }
        };
        let mut fy = vec![ZERO; d];
        f.eval(n, t, &y, &mut fy);
        let res = norm(&self.residual(&y, &rhs, &fy));
        let ny = norm(&y);
        self.stats.max_residual = self.stats.max_residual.max(res);
        if ny > 0.0 {
            self.stats.max_rel_residual = self.stats.max_rel_residual.max(res / ny);
        }

        if !ny.is_finite() || ny > self.limit {
            self.truncated = Some(Truncation {
                step: n,
                norm: ny,
                reason: format!("state norm {ny:e} exceeded the blow-up limit {:e}", self.limit),
            });
            return Ok(false);
        }
        let hn = self.history_entry(n, &y);
        self.push_history(&hn);
        self.data.extend_from_slice(&y);
        self.n = n;
        Ok(true)
    }

    /// Steps to the horizon and returns the trajectory.
    pub fn run(mut self) -> Result<Trajectory> {
        while self.step()? {}
        Ok(self.into_trajectory())
    }

    pub fn into_trajectory(self) -> Trajectory {
        let len = self.n + 1;
        Trajectory {
            scheme: self.kernel.scheme,
            form: self.kernel.form,
            alpha: self.kernel.alpha,
            h: self.kernel.h,
            dim: self.problem.dim(),
            times: (0..len).map(|n| n as f64 * self.kernel.h).collect(),
            data: self.data,
            truncated: self.truncated,
            stats: self.stats,
        }
    }
}

/// Integral-form F-LMM run.
pub fn solve_flmm(p: &FOdeProblem, w: &SchemeWeights, h: f64, n_steps: usize) -> Result<Trajectory> {
    StepWorkspace::new(p, StepKernel::integral(w, h, n_steps)?, SolverOptions::default())?.run()
}

/// Differential-form run for any scheme with μ weights.
pub fn solve_differential(p: &FOdeProblem, w: &SchemeWeights, h: f64, n_steps: usize) -> Result<Trajectory> {
    StepWorkspace::new(p, StepKernel::differential(w, h, n_steps)?, SolverOptions::default())?.run()
}

/// L1 scheme in differential form.
pub fn solve_l1(p: &FOdeProblem, w: &SchemeWeights, h: f64, n_steps: usize) -> Result<Trajectory> {
    if w.scheme != SchemeId::L1 {
        return Err(Error::UnsupportedScheme(format!("expected L1 weights, got {}", w.scheme)));
    }
    solve_differential(p, w, h, n_steps)
}

/// α-difference scheme in the direct indexing.
pub fn solve_alpha_diff(p: &FOdeProblem, h: f64, n_steps: usize) -> Result<Trajectory> {
    solve_alpha_diff_form(p, h, n_steps, AlphaDiffForm::Direct)
}

pub fn solve_alpha_diff_form(p: &FOdeProblem, h: f64, n_steps: usize, form: AlphaDiffForm) -> Result<Trajectory> {
    StepWorkspace::new(p, StepKernel::alpha_difference(p.alpha, h, n_steps, form)?, SolverOptions::default())?.run()
}

/// Kernel a scheme runs with by default: integral form for the F-LMMs,
/// differential form for L1.
pub fn default_kernel(scheme: SchemeId, alpha: f64, h: f64, n_steps: usize) -> Result<StepKernel> {
    check_step(h, n_steps)?;
    match scheme {
        SchemeId::FBdf1 | SchemeId::FBdf2 | SchemeId::FAdams2 => {
            StepKernel::integral(&scheme_weights(scheme, alpha, n_steps + 1)?, h, n_steps)
        }
        SchemeId::L1 => StepKernel::differential(&crate::weights::l1_mu_weights(alpha, n_steps + 1)?, h, n_steps),
        SchemeId::AlphaDiff => StepKernel::alpha_difference(alpha, h, n_steps, AlphaDiffForm::Direct),
    }
}

/// Runs `scheme` on `p` for `n_steps` steps of size `h`.
pub fn solve(p: &FOdeProblem, scheme: SchemeId, h: f64, n_steps: usize) -> Result<Trajectory> {
    solve_with(p, scheme, h, n_steps, SolverOptions::default())
}

pub fn solve_with(p: &FOdeProblem, scheme: SchemeId, h: f64, n_steps: usize, opts: SolverOptions) -> Result<Trajectory> {
    StepWorkspace::new(p, default_kernel(scheme, p.alpha, h, n_steps)?, opts)?.run()
}
