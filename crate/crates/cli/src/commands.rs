//! Subcommand implementations.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use mlstab::analysis::{p_index_with, region_boundary, IndexAlignment};
use mlstab::problems::ProblemSpec;
use mlstab::resolvent::{
    alpha_diff_q1_impulse, closed_form_d0, impulse_resolvent, poisson_resolvent, poisson_resolvent_sequence,
    verify_resolvent_decay,
};
use mlstab::solver::{solve as run_scheme, FOdeProblem};
use mlstab::special::{CVector, SquareMatrix};
use mlstab::tables::{reference_table, reproduce as reproduce_table, TableId, ALPHAS};
use mlstab::weights::{scheme_weights, SchemeId};
use num_complex::Complex64;

use crate::config::Settings;
use crate::CliError;

const VERSION: &str = concat!("mlstab ", env!("CARGO_PKG_VERSION"));
const DEFAULT_H: f64 = 0.1;

fn scheme(s: &Settings) -> Result<SchemeId, CliError> {
    s.get_or("scheme", SchemeId::FBdf1)
}

/// α restricted to the open interval (0, 1).
fn alpha(s: &Settings) -> Result<f64, CliError> {
    let a: f64 = s.require("alpha")?;
    if !(a > 0.0 && a < 1.0) {
        return Err(CliError::usage(format!("alpha must be in (0,1), got {a}")));
    }
    Ok(a)
}

fn step(s: &Settings) -> Result<f64, CliError> {
    let h = s.get_or("h", DEFAULT_H)?;
    if !(h.is_finite() && h > 0.0) {
        return Err(CliError::usage(format!("h must be positive, got {h}")));
    }
    Ok(h)
}

/// Step count from `n-steps` or `t-end / h`.
fn steps(s: &Settings, h: f64, default_t_end: Option<f64>) -> Result<usize, CliError> {
    let n = match (s.get::<usize>("n-steps")?, s.get::<f64>("t-end")?) {
        (Some(_), Some(_)) => return Err(CliError::usage("give either --n-steps or --t-end, not both")),
        (Some(n), None) => n,
        (None, t) => {
            let t = t.or(default_t_end).ok_or_else(|| CliError::usage("missing --t-end or --n-steps"))?;
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::usage(format!("t-end must be positive, got {t}")));
            }
            (t / h).round() as usize
        }
    };
    if n == 0 {
        return Err(CliError::usage("the run has zero steps"));
    }
    Ok(n)
}

fn parse_complex(v: &str) -> Result<Complex64, CliError> {
    let parts: Vec<&str> = v.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| CliError::usage(format!("invalid lambda '{v}': {e}")));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(CliError::usage(format!("lambda must be 're' or 're,im', got '{v}'"))),
    }
}

/// The configured problem and a short description for metadata lines.
fn problem(s: &Settings, alpha: f64) -> Result<(FOdeProblem, String), CliError> {
    let name = s.raw("problem").unwrap_or("scalar");
    let (p, desc) = match name {
        "linear" => {
            let lam = parse_complex(s.raw("lambda").unwrap_or("0"))?;
            let p = FOdeProblem::linear(
                alpha,
                SquareMatrix::from_element(1, 1, lam),
                CVector::from_element(1, Complex64::new(1.0, 0.0)),
                format!("linear lambda={lam}"),
            )?;
            (p, format!("problem=linear lambda={}{:+}i", lam.re, lam.im))
        }
        other => {
            let family = other.parse().map_err(|e: mlstab::Error| CliError::usage(e.to_string()))?;
            let spec = match ProblemSpec::default_for(family) {
                ProblemSpec::ScalarTest { b, y0 } => {
                    ProblemSpec::ScalarTest { b: s.get_or("b", b)?, y0 }
                }
                ProblemSpec::AdvectionDiffusion { a, d, nx } => {
                    ProblemSpec::AdvectionDiffusion { a: s.get_or("a", a)?, d: s.get_or("D", d)?, nx: s.get_or("nx", nx)? }
                }
                ProblemSpec::LorenzControl { control } => ProblemSpec::LorenzControl { control: s.get_or("control", control)? },
            };
            let desc = match spec {
                ProblemSpec::ScalarTest { b, .. } => format!("problem=scalar b={b}"),
                ProblemSpec::AdvectionDiffusion { a, d, nx } => format!("problem=advdiff a={a} D={d} nx={nx}"),
                ProblemSpec::LorenzControl { control } => format!("problem=lorenz control={control}"),
            };
            (spec.build(alpha)?, desc)
        }
    };
    Ok((p, desc))
}

fn metadata(scheme: SchemeId, alpha: f64, h: Option<f64>, extra: &str) -> String {
    let h = h.map(|h| format!(" h={h}")).unwrap_or_default();
    let extra = if extra.is_empty() { String::new() } else { format!(" {extra}") };
    format!("# {VERSION} scheme={} alpha={alpha}{h}{extra}", scheme.name())
}

fn out_dir(s: &Settings) -> Result<Option<PathBuf>, CliError> {
    match s.raw("out") {
        None => Ok(None),
        Some(d) => {
            let dir = PathBuf::from(d);
            fs::create_dir_all(&dir).map_err(|e| CliError::io(e, &format!("cannot create {}", dir.display())))?;
            Ok(Some(dir))
        }
    }
}

fn write_file<F>(dir: &Path, name: &str, body: F) -> Result<PathBuf, CliError>
where
    F: FnOnce(&mut BufWriter<File>) -> io::Result<()>,
{
    let path = dir.join(name);
    let what = format!("cannot write {}", path.display());
    let file = File::create(&path).map_err(|e| CliError::io(e, &what))?;
    let mut w = BufWriter::new(file);
    body(&mut w).and_then(|_| w.flush()).map_err(|e| CliError::io(e, &what))?;
    Ok(path)
}

fn cell(v: Option<&Vec<f64>>, n: usize) -> String {
    v.and_then(|x| x.get(n)).map(|x| format!("{x:.17e}")).unwrap_or_default()
}

pub fn weights(s: &Settings) -> Result<(), CliError> {
    let scheme = scheme(s)?;
    let alpha = alpha(s)?;
    let n = s.get_or("n", 16usize)?;
    let w = scheme_weights(scheme, alpha, n)?;
    let mut text = Vec::new();
    let meta = metadata(scheme, alpha, None, &format!("n={n}"));
    let write = |w_: &mut dyn Write| -> io::Result<()> {
        writeln!(w_, "{meta}")?;
        writeln!(w_, "n,mu,omega,sigma")?;
        for k in 0..n {
            writeln!(w_, "{k},{},{},{}", cell(w.mu.as_ref(), k), cell(w.omega.as_ref(), k), cell(w.sigma.as_ref(), k))?;
        }
        Ok(())
    };
    write(&mut text).map_err(|e| CliError::io(e, "format"))?;
    match out_dir(s)? {
        Some(dir) => {
            let path = write_file(&dir, &format!("weights_{}.csv", scheme.name()), |f| f.write_all(&text))?;
            println!("wrote {}", path.display());
        }
        None => print!("{}", String::from_utf8_lossy(&text)),
    }
    Ok(())
}

fn alignment(s: &Settings) -> Result<IndexAlignment, CliError> {
    match s.raw("alignment").unwrap_or("lagged") {
        "lagged" => Ok(IndexAlignment::Lagged),
        "exact" => Ok(IndexAlignment::Exact),
        other => Err(CliError::usage(format!("alignment must be exact or lagged, got '{other}'"))),
    }
}

pub fn solve(s: &Settings) -> Result<(), CliError> {
    let scheme = scheme(s)?;
    let alpha = alpha(s)?;
    let h = step(s)?;
    let n = steps(s, h, None)?;
    let m = s.get_or("m", mlstab::analysis::DEFAULT_M)?;
    let align = alignment(s)?;
    let checkpoints: Vec<f64> = s.list("checkpoints")?;
    let (p, desc) = problem(s, alpha)?;
    let tr = run_scheme(&p, scheme, h, n)?;
    let meta = metadata(scheme, alpha, Some(h), &desc);
    if let Some(cut) = &tr.truncated {
        if let Some(dir) = out_dir(s)? {
            write_file(&dir, "trajectory.csv", |w| tr.write_csv(w, &meta))?;
        }
        return Err(CliError::solver(format!("run stopped at step {}: {} (norm {:e})", cut.step, cut.reason, cut.norm)));
    }
    let rep = p_index_with(&tr, m, align)?;
    println!("{meta}");
    println!("steps {n}, t_end {}", tr.times[tr.len() - 1]);
    for &t in &checkpoints {
        match rep.p_at(t) {
            Some(v) => println!("p_alpha(t={t}) = {v:.4}"),
            None => println!("p_alpha(t={t}) = n/a (outside the indexed range)"),
        }
    }
    println!("verdict {} (fitted decay rate {:.4})", rep.verdict, rep.fitted_slope);
    if let Some(dir) = out_dir(s)? {
        write_file(&dir, "trajectory.csv", |w| tr.write_csv(w, &meta))?;
        write_file(&dir, "p_index.csv", |w| rep.write_csv(w, &meta))?;
        write_file(&dir, "summary.txt", |w| {
            writeln!(w, "{meta}")?;
            writeln!(w, "{}", rep.summary())?;
            for &t in &checkpoints {
                match rep.p_at(t) {
                    Some(v) => writeln!(w, "t={t},p_alpha={v:.6}")?,
                    None => writeln!(w, "t={t},p_alpha=")?,
                }
            }
            Ok(())
        })?;
        println!("wrote {}", dir.display());
    }
    Ok(())
}

pub fn reproduce(id: &str, s: &Settings) -> Result<(), CliError> {
    let id: TableId = id.parse().map_err(|e: mlstab::Error| CliError::usage(e.to_string()))?;
    let table = reference_table(id);
    let mut result = reproduce_table(id)?;
    if let Some(tol) = s.get::<f64>("tolerance")? {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::usage(format!("tolerance must be positive, got {tol}")));
        }
        result.tolerance = tol;
        for c in &mut result.cells {
            c.pass = c.deviation <= tol;
        }
    }
    let labels: Vec<String> = table
        .columns
        .iter()
        .enumerate()
        .map(|(k, c)| if k == 0 { c.scheme.label().to_string() } else { format!("[{}]", c.scheme.label()) })
        .collect();
    println!("{} {}, h = {}, tolerance {}", id.name(), labels.join(" "), table.h, result.tolerance);
    print!("{:>6}", "t");
    for a in ALPHAS {
        print!("  {:>26}", format!("alpha={a}"));
    }
    println!();
    for &t in &table.times {
        print!("{t:>6}");
        for a in ALPHAS {
            let vals: Vec<String> = table
                .columns
                .iter()
                .enumerate()
                .filter_map(|(k, col)| {
                    let c = result.cells.iter().find(|c| c.scheme == col.scheme && c.alpha == a && c.t == t)?;
                    let mark = if c.asserted && !c.pass { "*" } else { "" };
                    Some(if k == 0 { format!("{:.4}{mark}", c.computed) } else { format!("[{:.4}{mark}]", c.computed) })
                })
                .collect();
            print!("  {:>26}", vals.join(" "));
        }
        println!();
    }
    let failing = result.cells.iter().filter(|c| c.asserted && !c.pass).count();
    println!(
        "{}: max asserted deviation {:.2e}, {failing} asserted cell(s) outside tolerance",
        if failing == 0 { "PASS" } else { "FAIL" },
        result.max_asserted_deviation()
    );
    if let Some(dir) = out_dir(s)? {
        let meta = format!("# {VERSION} table={} h={}", id.name(), table.h);
        let path = write_file(&dir, &format!("{}.csv", id.name()), |w| result.write_csv(w, &meta))?;
        println!("wrote {}", path.display());
    }
    if failing > 0 {
        return Err(CliError::tolerance(format!("{failing} cell(s) of {} miss the tolerance", id.name())));
    }
    Ok(())
}

pub fn region(s: &Settings) -> Result<(), CliError> {
    let scheme = scheme(s)?;
    let alpha = alpha(s)?;
    let h = step(s)?;
    let n_theta = s.get_or("n-theta", 512usize)?;
    let n_terms = s.get_or("n-terms", 100_000usize)?;
    let svg = s.get_or("svg", false)?;
    let dir = out_dir(s)?;
    if svg && dir.is_none() {
        return Err(CliError::usage("--svg needs --out"));
    }
    let r = region_boundary(scheme, alpha, h, n_theta, n_terms)?;
    let args = r.boundary.iter().map(|z| z.arg());
    let lo = args.clone().fold(f64::INFINITY, f64::min);
    let hi = args.fold(f64::NEG_INFINITY, f64::max);
    let meta = metadata(scheme, alpha, Some(h), &format!("n_theta={n_theta}"));
    println!("{meta}");
    println!(
        "boundary arg range [{lo:.6}, {hi:.6}], sector half-angle {:.6}, truncation bound {:.2e}",
        alpha * std::f64::consts::FRAC_PI_2,
        r.tail_bound
    );
    if let Some(dir) = dir {
        write_file(&dir, "region.csv", |w| r.write_csv(w, &meta))?;
        if svg {
            write_file(&dir, "region.svg", |w| r.write_svg(w))?;
        }
        println!("wrote {}", dir.display());
    }
    Ok(())
}

fn max_rel(a: &SquareMatrix, b: &SquareMatrix) -> f64 {
    let scale = b.iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max) / scale
}

pub fn resolvent(s: &Settings) -> Result<(), CliError> {
    let scheme = scheme(s)?;
    let alpha = alpha(s)?;
    let h = step(s)?;
    let n = steps(s, h, Some(1000.0))?;
    let (p, desc) = problem(s, alpha)?;
    let r = impulse_resolvent(scheme, &p.a, alpha, h, n)?;
    let meta = metadata(scheme, alpha, Some(h), &desc);
    println!("{meta}");
    let mut failures = Vec::new();

    let (d0_dev, d0_tol, what) = if scheme == SchemeId::AlphaDiff {
        let q = poisson_resolvent(&p.a, alpha, h, 0, alpha)? * Complex64::new(h, 0.0);
        (max_rel(&r.big_d[0], &q), s.get_or("tolerance", 1e-6)?, "h Q_alpha^0 quadrature")
    } else {
        let want = closed_form_d0(scheme, &p.a, alpha, h)?;
        (max_rel(&r.big_d[0], &want), s.get_or("tolerance", 1e-12)?, "h^a w0 (I - h^a w0 A)^-1")
    };
    println!("D0: impulse vs {what}: max relative deviation {d0_dev:.3e} (tol {d0_tol:e})");
    if d0_dev.is_nan() || d0_dev > d0_tol {
        failures.push("D0");
    }

    if scheme == SchemeId::AlphaDiff {
        let k = n.min(200);
        let imp = alpha_diff_q1_impulse(&p.a, alpha, h, k)?;
        let quad = poisson_resolvent_sequence(&p.a, alpha, h, k, 1.0)?;
        let dev = imp.iter().zip(&quad).map(|(x, y)| (x - y).iter().map(|z| z.norm()).fold(0.0, f64::max)).fold(0.0, f64::max);
        let tol = s.get_or("tolerance", 1e-6)?;
        println!("Q1: quadrature vs Poisson-indexed impulse response, n <= {k}: max deviation {dev:.3e} (tol {tol:e})");
        if dev.is_nan() || dev > tol {
            failures.push("Q1");
        }
    }

    match verify_resolvent_decay(&r) {
        Ok(rep) if rep.applicable => println!("decay {}", rep.summary()),
        Ok(rep) => println!(
            "decay: not applicable (spectrum not inside the stable sector); measured slopes d {:.4}, D {:.4}",
            rep.slope_d, rep.slope_big_d
        ),
        Err(mlstab::Error::InsufficientRange(msg)) => println!("decay: not evaluated ({msg})"),
        Err(e) => println!("decay: not evaluated ({e})"),
    }
    if let Some(dir) = out_dir(s)? {
        write_file(&dir, "resolvent.csv", |w| r.write_csv(w, &meta))?;
        println!("wrote {}", dir.display());
    }
    if !failures.is_empty() {
        return Err(CliError::tolerance(format!("{} comparison outside tolerance", failures.join(" and "))));
    }
    Ok(())
}
