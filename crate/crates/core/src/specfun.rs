//! Modified Bessel function K_nu(x) for imaginary, real, and general
//! complex order, by panel quadrature of the integral representation
//!
//! ```text
//! K_nu(x) = integral_0^infinity exp(-x cosh u) cosh(nu*u) du.
//! ```
//!
//! The kernel is evaluated in double-double arithmetic ([`crate::dd`]).
//! This is not gold-plating: the contour-integral wavefunction multiplies
//! K_{it}(x) by weights that grow like e^{|phi|*t} (up to ~e^45 over the
//! truncated contour), so quadrature noise must sit near 1e-30 absolute.
//! A plain f64 node sum has an eps * integral(|f|) ~ 1e-16 noise floor
//! and fails both that use and the complex-order recurrence check at
//! small x. Panel sums, Gauss-Legendre nodes, and panel boundaries all
//! stay in double-double; only the final result collapses to f64.

use num_complex::Complex64;
use std::sync::OnceLock;

use crate::dd::{gauss_legendre, Dd};
use crate::error::{Error, Result};

/// Validity domain, enforced: quadrature panel sizing and truncation are
/// tuned and tested for these ranges only.
pub const MAX_IMAG_ORDER: f64 = 50.0;
pub const MAX_REAL_ORDER: f64 = 3.0;
pub const MIN_ARG: f64 = 1.0e-3;
pub const MAX_ARG: f64 = 1.0e2;

/// Rule for truncating the semi-infinite integration variable u.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum UMaxPolicy {
    /// Solve x*(cosh(u) - 1) - |Re nu|*u >= ln(1/abs_floor), so the
    /// neglected tail is below abs_floor relative to the u = 0 peak even
    /// after the cosh(Re nu * u) growth. Implies the hard invariant
    /// exp(-x*cosh(u_max)) < abs_floor.
    RelativeTail,
    /// Caller-chosen truncation point; rejected if it violates the
    /// invariant exp(-x*cosh(u_max)) < abs_floor.
    Fixed(f64),
}

/// Tolerances and truncation policy for one Bessel evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselEvalSpec {
    /// Target relative accuracy; also sets the oscillation resolution
    /// (nodes per period of cos(t*u)).
    pub rel_tol: f64,
    /// Absolute tail cutoff for truncation and residual normalization.
    pub abs_floor: f64,
    pub u_max_policy: UMaxPolicy,
    /// Hard budget on total quadrature nodes.
    pub max_nodes: usize,
}

impl Default for BesselEvalSpec {
    fn default() -> Self {
        BesselEvalSpec {
            rel_tol: 1.0e-13,
            abs_floor: 1.0e-18,
            u_max_policy: UMaxPolicy::RelativeTail,
            max_nodes: 200_000,
        }
    }
}

impl BesselEvalSpec {
    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_floor > 0.0) {
            return Err(Error::Domain(format!(
                "abs_floor must be positive for tail truncation, got {}",
                self.abs_floor
            )));
        }
        Ok(())
    }
}

const PANEL_NODES: usize = 16;

fn gl16() -> &'static (Vec<Dd>, Vec<Dd>) {
    static CACHE: OnceLock<(Vec<Dd>, Vec<Dd>)> = OnceLock::new();
    CACHE.get_or_init(|| gauss_legendre(PANEL_NODES))
}

fn check_arg(x: f64) -> Result<()> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("argument x must be positive, got {x}")));
    }
    if !(MIN_ARG..=MAX_ARG).contains(&x) {
        return Err(Error::Accuracy(format!(
            "argument x = {x} outside the validated range [{MIN_ARG}, {MAX_ARG}]"
        )));
    }
    Ok(())
}

fn check_order(sigma: f64, t: f64) -> Result<()> {
    if t.abs() > MAX_IMAG_ORDER {
        return Err(Error::Accuracy(format!(
            "imaginary order |t| = {} exceeds validated bound {MAX_IMAG_ORDER}",
            t.abs()
        )));
    }
    if sigma.abs() > MAX_REAL_ORDER {
        return Err(Error::Accuracy(format!(
            "real order |sigma| = {} exceeds validated bound {MAX_REAL_ORDER}",
            sigma.abs()
        )));
    }
    Ok(())
}

/// Truncation point u_max for given argument and |Re nu|.
fn u_max_for(x: f64, abs_sigma: f64, spec: &BesselEvalSpec) -> Result<f64> {
    let big_l = -spec.abs_floor.ln();
    match spec.u_max_policy {
        UMaxPolicy::RelativeTail => {
            // fixed point of u = acosh(1 + (L + |sigma| u)/x); two
            // passes suffice because the correction is logarithmic
            let mut u = (1.0 + big_l / x).acosh();
            for _ in 0..3 {
                u = (1.0 + (big_l + abs_sigma * u) / x).acosh();
            }
            Ok(u)
        }
        UMaxPolicy::Fixed(u) => {
            if !(u > 0.0) || x * u.cosh() < big_l {
                return Err(Error::Accuracy(format!(
                    "fixed truncation u_max = {u} leaves exp(-x cosh u_max) above abs_floor"
                )));
            }
            Ok(u)
        }
    }
}

/// Core quadrature: integral_0^u_max exp(-x cosh u) * cosh((sigma+it) u) du
/// as (real, imag). sigma == 0 takes a pure-real path so the imaginary
/// part is exactly zero.
fn kernel_quadrature(sigma: f64, t: f64, x: f64, spec: &BesselEvalSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    check_arg(x)?;
    check_order(sigma, t)?;
    let u_max = u_max_for(x, sigma.abs(), spec)?;

    // panel width: resolve the cos(t u) oscillation with at least
    // nodes_per_period nodes (>= 12, tightened by rel_tol), and the
    // integrand peak near u = 0 for large x
    let nodes_per_period = 12.0_f64.max((-spec.rel_tol.log10()).ceil());
    let period = 2.0 * std::f64::consts::PI / t.abs().max(1.0e-9);
    let w_osc = (PANEL_NODES as f64 / nodes_per_period) * period;
    let width = 0.5_f64.min(w_osc).min(2.0 / x.sqrt());
    let n_panels = (u_max / width).ceil().max(1.0) as usize;
    if n_panels * PANEL_NODES > spec.max_nodes {
        return Err(Error::Accuracy(format!(
            "oscillation resolution needs {} nodes, budget is {}",
            n_panels * PANEL_NODES,
            spec.max_nodes
        )));
    }

    let (xi, wt) = gl16();
    let um = Dd::from_f64(u_max);
    // shared boundary vector keeps the panel union gap-free at dd level
    let bounds: Vec<Dd> = (0..=n_panels)
        .map(|i| um.mul_f64(i as f64 / n_panels as f64))
        .collect();

    let mut acc_re = Dd::from_f64(0.0);
    let mut acc_im = Dd::from_f64(0.0);
    for p in 0..n_panels {
        let c0 = bounds[p].add(bounds[p + 1]).mul_f64(0.5);
        let half = bounds[p + 1].sub(bounds[p]).mul_f64(0.5);
        for i in 0..PANEL_NODES {
            let u = c0.add(half.mul(xi[i]));
            let e = u.exp();
            let einv = e.recip();
            let ch = e.add(einv).mul_f64(0.5);
            let gauss = ch.mul_f64(-x).exp();
            let scale = wt[i].mul(half).mul(gauss);
            if t == 0.0 && sigma == 0.0 {
                acc_re = acc_re.add(scale);
                continue;
            }
            let (s_t, c_t) = if t == 0.0 {
                (Dd::from_f64(0.0), Dd::from_f64(1.0))
            } else {
                u.mul_f64(t).sin_cos()
            };
            if sigma == 0.0 {
                acc_re = acc_re.add(scale.mul(c_t));
            } else {
                let (ch_s, sh_s) = if sigma == 1.0 {
                    (ch, e.sub(einv).mul_f64(0.5))
                } else if sigma == -1.0 {
                    (ch, einv.sub(e).mul_f64(0.5))
                } else {
                    let es = u.mul_f64(sigma).exp();
                    let esi = es.recip();
                    (es.add(esi).mul_f64(0.5), es.sub(esi).mul_f64(0.5))
                };
                // cosh((sigma+it)u) = cosh(sigma u)cos(tu) + i sinh(sigma u)sin(tu)
                acc_re = acc_re.add(scale.mul(ch_s).mul(c_t));
                acc_im = acc_im.add(scale.mul(sh_s).mul(s_t));
            }
        }
    }
    Ok((acc_re.to_f64(), acc_im.to_f64()))
}

/// K_{it}(x) for purely imaginary order; real and even in t.
pub fn bessel_k_imag_order(t: f64, x: f64, spec: &BesselEvalSpec) -> Result<f64> {
    Ok(kernel_quadrature(0.0, t, x, spec)?.0)
}

/// K_nu(x) for real order nu (cross-check path; |nu| <= 3).
pub fn bessel_k_real_order(nu: f64, x: f64, spec: &BesselEvalSpec) -> Result<f64> {
    Ok(kernel_quadrature(nu, 0.0, x, spec)?.0)
}

/// K_nu(x) for general complex order within the validated box.
pub fn bessel_k_complex_order(nu: Complex64, x: f64, spec: &BesselEvalSpec) -> Result<Complex64> {
    let (re, im) = kernel_quadrature(nu.re, nu.im, x, spec)?;
    Ok(Complex64::new(re, im))
}

/// Residual of the three-term recurrence
/// K_{nu+1}(x) - K_{nu-1}(x) = (2 nu / x) K_nu(x) at nu = it,
/// normalized by max(|K_{it}(x)|, abs_floor). The neighbors have complex
/// order and are evaluated by the same quadrature.
pub fn bessel_recurrence_residual(t: f64, x: f64, spec: &BesselEvalSpec) -> Result<f64> {
    let nu = Complex64::new(0.0, t);
    let k0 = bessel_k_imag_order(t, x, spec)?;
    let kp = bessel_k_complex_order(nu + 1.0, x, spec)?;
    let km = bessel_k_complex_order(nu - 1.0, x, spec)?;
    let rhs = 2.0 * nu / x * k0;
    let num = (kp - km - rhs).norm();
    Ok(num / k0.abs().max(spec.abs_floor))
}
