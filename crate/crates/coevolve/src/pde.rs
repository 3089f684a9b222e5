//! Deterministic inner integrators: right-hand sides and explicit Euler
//! stepping for the three model PDEs, plus the dynamically renormalized
//! right-hand side used for self-similarity verification.

use crate::error::{Error, Result};
use crate::field::Field1D;

/// The model equation being integrated. All kinds use zero-flux (Neumann)
/// boundaries, discretized with mirror ghost nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PdeKind {
    /// `u_t = D u_xx + u (1 - u)(u - alpha)`
    Nagumo { alpha: f64, diffusivity: f64 },
    /// `u_t = u_xx`
    Diffusion,
    /// `u_t = kappa (1 + u^2) u_xx + u u_x`
    BurgersVariant { kappa: f64 },
}

impl PdeKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PdeKind::Nagumo { alpha, diffusivity } => {
                if !(diffusivity > 0.0 && alpha > 0.0 && alpha < 0.5) {
                    return Err(Error::invalid(format!(
                        "Nagumo needs D > 0 and 0 < alpha < 1/2, got D={diffusivity}, alpha={alpha}"
                    )));
                }
            }
            PdeKind::Diffusion => {}
            PdeKind::BurgersVariant { kappa } => {
                if !(kappa > 0.0) {
                    return Err(Error::invalid(format!("kappa must be positive, got {kappa}")));
                }
            }
        }
        Ok(())
    }

    /// Effective diffusivity bound used in the explicit-Euler stability
    /// criterion `2 D dt < dx^2`. For the quasilinear variant it depends on
    /// the solution amplitude.
    pub fn diffusivity_bound(&self, u: &[f64]) -> f64 {
        match *self {
            PdeKind::Nagumo { diffusivity, .. } => diffusivity,
            PdeKind::Diffusion => 1.0,
            PdeKind::BurgersVariant { kappa } => {
                let max_sq = u.iter().fold(0.0f64, |m, &v| m.max(v * v));
                kappa * (1.0 + max_sq)
            }
        }
    }

    /// Largest stable explicit-Euler step for the given grid and state.
    pub fn stability_limit(&self, dx: f64, u: &[f64]) -> f64 {
        dx * dx / (2.0 * self.diffusivity_bound(u))
    }
}

/// Second difference with mirror ghosts (`u[-1] = u[1]`, `u[n] = u[n-2]`).
#[inline]
fn laplacian(u: &[f64], i: usize, inv_dx2: f64) -> f64 {
    let n = u.len();
    let left = if i == 0 { u[1] } else { u[i - 1] };
    let right = if i == n - 1 { u[n - 2] } else { u[i + 1] };
    (left - 2.0 * u[i] + right) * inv_dx2
}

/// Central first difference with mirror ghosts (zero at the boundaries).
#[inline]
fn gradient(u: &[f64], i: usize, inv_2dx: f64) -> f64 {
    let n = u.len();
    let left = if i == 0 { u[1] } else { u[i - 1] };
    let right = if i == n - 1 { u[n - 2] } else { u[i + 1] };
    (right - left) * inv_2dx
}

fn rhs_into(kind: &PdeKind, u: &[f64], dx: f64, out: &mut [f64]) {
    let inv_dx2 = 1.0 / (dx * dx);
    let inv_2dx = 0.5 / dx;
    match *kind {
        PdeKind::Nagumo { alpha, diffusivity } => {
            for i in 0..u.len() {
                let v = u[i];
                out[i] = diffusivity * laplacian(u, i, inv_dx2) + v * (1.0 - v) * (v - alpha);
            }
        }
        PdeKind::Diffusion => {
            for i in 0..u.len() {
                out[i] = laplacian(u, i, inv_dx2);
            }
        }
        PdeKind::BurgersVariant { kappa } => {
            for i in 0..u.len() {
                let v = u[i];
                out[i] = kappa * (1.0 + v * v) * laplacian(u, i, inv_dx2)
                    + v * gradient(u, i, inv_2dx);
            }
        }
    }
}

/// Spatial right-hand side of the PDE on the field's grid.
pub fn rhs(kind: &PdeKind, u: &Field1D) -> Result<Field1D> {
    kind.validate()?;
    let mut out = vec![0.0; u.len()];
    rhs_into(kind, u.values(), u.dx(), &mut out);
    u.with_values(out)
}

/// Right-hand side in the dynamically renormalized frame:
/// `L_y(u) - xi_b * u + xi_a * y * u_y` on the rescaled coordinate `y`.
pub fn renormalized_rhs(kind: &PdeKind, u_hat: &Field1D, xi_a: f64, xi_b: f64) -> Result<Field1D> {
    let base = rhs(kind, u_hat)?;
    let inv_2dx = 0.5 / u_hat.dx();
    let v = u_hat.values();
    let out = base
        .values()
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let y = u_hat.grid().node(i);
            l - xi_b * v[i] + xi_a * y * gradient(v, i, inv_2dx)
        })
        .collect();
    u_hat.with_values(out)
}

/// Explicit forward-Euler integration for `n_steps` steps of size `dt`.
///
/// Refuses to run when `2 D dt >= dx^2` (diffusive stability criterion,
/// evaluated on the initial state).
pub fn euler_integrate(kind: &PdeKind, u0: &Field1D, dt: f64, n_steps: usize) -> Result<Field1D> {
    let reports = euler_integrate_reports(kind, u0, dt, &[n_steps])?;
    Ok(reports.into_iter().next().expect("one report requested"))
}

/// As [`euler_integrate`], returning snapshots at each requested step count.
/// `report_steps` must be non-decreasing.
pub fn euler_integrate_reports(
    kind: &PdeKind,
    u0: &Field1D,
    dt: f64,
    report_steps: &[usize],
) -> Result<Vec<Field1D>> {
    kind.validate()?;
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::Config(format!("time step must be positive, got {dt}")));
    }
    if report_steps.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Config("report steps must be non-decreasing".into()));
    }
    let dx = u0.dx();
    let limit = kind.stability_limit(dx, u0.values());
    if dt >= limit {
        return Err(Error::Config(format!(
            "explicit Euler unstable: dt = {dt} but 2 D dt < dx^2 requires dt < {limit:.3e}"
        )));
    }

    let mut u = u0.values().to_vec();
    let mut du = vec![0.0; u.len()];
    let mut out = Vec::with_capacity(report_steps.len());
    let mut step = 0usize;
    for &target in report_steps {
        while step < target {
            rhs_into(kind, &u, dx, &mut du);
            for (v, d) in u.iter_mut().zip(&du) {
                *v += dt * d;
            }
            step += 1;
        }
        out.push(u0.with_values(u.clone())?);
    }
    Ok(out)
}
