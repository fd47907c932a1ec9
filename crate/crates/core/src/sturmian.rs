//! Angular pseudo-Sturmian functions and the adiabatic eigenvalue
//! problem at fixed hyperradius.
//!
//! The basis function on sector j is S(nu, theta) = cos((theta - j pi/3) nu),
//! unnormalized. It satisfies the free angular equation away from the
//! coalescence lines; the contact interaction enters only through the
//! logarithmic-derivative condition at the lines theta_j = (2j+1) pi/6,
//! which holds when the spectral function
//!
//! ```text
//! rho(nu) = (6/(pi c)) nu tan(nu pi/6)
//! ```
//!
//! equals the hyperradius-like parameter. Reading that relation at fixed
//! R' gives the adiabatic channel roots q_kappa with eigenvalues
//! Lambda_kappa = (q^2 - 1/4)/R'^2.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::sector_angle;

use std::f64::consts::{FRAC_PI_6, PI};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    /// contact interaction coefficient; attractive for c < 0
    pub c: f64,
    /// derived length scale a = 6/(pi c), so -1/a = -pi c/6
    pub a: f64,
    pub attractive: bool,
}

impl ModelParams {
    pub fn new(c: f64) -> Result<Self> {
        if !c.is_finite() || c == 0.0 {
            return Err(Error::Domain(format!(
                "interaction coefficient must be finite and nonzero, got {c}"
            )));
        }
        Ok(ModelParams {
            c,
            a: 6.0 / (PI * c),
            attractive: c < 0.0,
        })
    }
}

/// One point of the spectral curve. Pole-adjacent entries carry NaN in
/// rho (see [`rho_curve`]).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SturmianValue {
    pub nu: Complex64,
    pub rho: Complex64,
}

impl SturmianValue {
    pub fn is_pole_adjacent(&self) -> bool {
        self.rho.re.is_nan() || self.rho.im.is_nan()
    }
}

/// Adiabatic channel root at fixed R'.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdiabaticRoot {
    /// channel label 0, 6, 12, ...
    pub kappa: u32,
    /// root of q tan(pi q/6) = pi R' c/6; purely imaginary for the
    /// kappa = 0 attractive channel, real otherwise
    pub q: Complex64,
    pub r_prime: f64,
    /// (q^2 - 1/4)/R'^2, always real
    pub lambda: f64,
}

/// Unnormalized angular basis function cos((theta - j pi/3) nu) on
/// sector j; theta must lie in sector j (boundaries included).
pub fn sturmian_fn(nu: Complex64, theta: f64, sector: usize) -> Result<Complex64> {
    let d = sector_angle(theta, sector);
    if d.abs() > FRAC_PI_6 + 1.0e-12 {
        return Err(Error::Domain(format!(
            "theta = {theta} lies outside sector {sector}"
        )));
    }
    Ok((nu * d).cos())
}

fn real_axis_pole_distance(nu: Complex64) -> Option<f64> {
    // tangent poles at nu = 3 + 6n on the real axis
    if nu.im.abs() > 1.0e-12 {
        return None;
    }
    let m = (nu.re - 3.0) / 6.0;
    Some(6.0 * (m - m.round()).abs())
}

/// Spectral function rho(nu) = (6/(pi c)) nu tan(nu pi/6). Real for nu on
/// either the real or the imaginary axis.
pub fn rho(nu: Complex64, params: &ModelParams) -> Result<Complex64> {
    if let Some(d) = real_axis_pole_distance(nu) {
        if d < 1.0e-9 {
            return Err(Error::Pole(format!(
                "rho has a tangent pole at nu = {} (nu = 3 mod 6)",
                nu.re
            )));
        }
    }
    Ok(6.0 / (PI * params.c) * nu * (nu * FRAC_PI_6).tan())
}

/// Tabulate rho over a grid; points within 1e-6 of a real-axis pole are
/// kept in place but marked with NaN so emitted data stays aligned.
pub fn rho_curve(nu_grid: &[Complex64], params: &ModelParams) -> Vec<SturmianValue> {
    nu_grid
        .iter()
        .map(|&nu| {
            let near_pole = real_axis_pole_distance(nu).is_some_and(|d| d < 1.0e-6);
            let value = if near_pole {
                Complex64::new(f64::NAN, f64::NAN)
            } else {
                6.0 / (PI * params.c) * nu * (nu * FRAC_PI_6).tan()
            };
            SturmianValue { nu, rho: value }
        })
        .collect()
}

/// One-sided log-derivative of the basis function at the sector boundary,
/// by backward differences with two Richardson levels, compared with the
/// contact condition: returns |(1/rho) S'/S + pi c/6| at theta -> theta_0^-.
pub fn boundary_residual(nu: Complex64, params: &ModelParams) -> Result<f64> {
    let r = rho(nu, params)?;
    if r.norm() < 1.0e-12 {
        return Err(Error::Domain(format!(
            "rho(nu) vanishes at nu = {nu}; the log-derivative limit is indeterminate"
        )));
    }
    let theta_b = FRAC_PI_6;
    let f = |theta: f64| -> Complex64 { (nu * sector_angle(theta, 0)).cos() };
    let fb = f(theta_b);
    if fb.norm() < 1.0e-12 {
        return Err(Error::Degenerate(format!(
            "basis function vanishes on the boundary at nu = {nu}"
        )));
    }
    let h0 = 1.0e-3 * FRAC_PI_6;
    let back_diff = |h: f64| (fb - f(theta_b - h)) / h;
    let d = [back_diff(h0), back_diff(h0 / 2.0), back_diff(h0 / 4.0)];
    let r1a = 2.0 * d[1] - d[0];
    let r1b = 2.0 * d[2] - d[1];
    let r2 = (4.0 * r1b - r1a) / 3.0;
    if (r2 - r1b).norm() > 1.0e-4 * (1.0 + r2.norm()) {
        return Err(Error::Accuracy(format!(
            "finite-difference limit did not settle at nu = {nu}"
        )));
    }
    Ok((r2 / (r * fb) + PI * params.c / 6.0).norm())
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracket(format!(
            "no sign change on [{lo}, {hi}] (f = {flo} .. {fhi})"
        )));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Scan for a sign change on a grid, then bisect. The scan makes no
/// assumption about which sub-interval holds the root.
fn scan_and_bisect(f: impl Fn(f64) -> f64 + Copy, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    const SCAN: usize = 256;
    let step = (hi - lo) / SCAN as f64;
    let mut prev_x = lo;
    let mut prev_f = f(lo);
    for i in 1..=SCAN {
        let x = lo + step * i as f64;
        let fx = f(x);
        if prev_f == 0.0 {
            return Ok(prev_x);
        }
        if prev_f.is_finite() && fx.is_finite() && prev_f.signum() != fx.signum() {
            return bisect(f, prev_x, x, tol);
        }
        prev_x = x;
        prev_f = fx;
    }
    Err(Error::Bracket(format!(
        "no sign change found scanning [{lo}, {hi}]"
    )))
}

const ROOT_TOL: f64 = 1.0e-12;
const POLE_GUARD: f64 = 1.0e-9;

/// Channel roots q_kappa of q tan(pi q/6) = pi R' c/6 for
/// kappa = 0, 6, 12, ... <= kappa_max, with Lambda = (q^2 - 1/4)/R'^2.
/// For attractive c the kappa = 0 root is purely imaginary, q = i tau
/// with tau tanh(pi tau/6) = pi R' |c|/6; all other roots are real and
/// lie in (kappa - 3, kappa + 3).
pub fn adiabatic_roots(
    r_prime: f64,
    params: &ModelParams,
    kappa_max: u32,
) -> Result<Vec<AdiabaticRoot>> {
    if !(r_prime > 0.0) || !r_prime.is_finite() {
        return Err(Error::Domain(format!(
            "hyperradius parameter must be positive and finite, got {r_prime}"
        )));
    }
    let rhs = PI * r_prime * params.c / 6.0;
    let mut roots = Vec::new();

    if params.attractive {
        // q = i tau turns q tan(pi q/6) into -tau tanh(pi tau/6)
        let target = rhs.abs();
        let g = |tau: f64| tau * (PI * tau / 6.0).tanh() - target;
        let tau = bisect(g, 0.0, target + 10.0, ROOT_TOL).map_err(|e| {
            Error::Bracket(format!("imaginary channel kappa = 0: {e}"))
        })?;
        roots.push(AdiabaticRoot {
            kappa: 0,
            q: Complex64::new(0.0, tau),
            r_prime,
            lambda: (-tau * tau - 0.25) / (r_prime * r_prime),
        });
    } else {
        // repulsive: the lowest root is real in (0, 3)
        let f = |q: f64| q * (PI * q / 6.0).tan() - rhs;
        let q = scan_and_bisect(f, POLE_GUARD, 3.0 - POLE_GUARD, ROOT_TOL)
            .map_err(|e| Error::Bracket(format!("channel kappa = 0: {e}")))?;
        roots.push(AdiabaticRoot {
            kappa: 0,
            q: Complex64::new(q, 0.0),
            r_prime,
            lambda: (q * q - 0.25) / (r_prime * r_prime),
        });
    }

    let mut kappa = 6u32;
    while kappa <= kappa_max {
        let f = |q: f64| q * (PI * q / 6.0).tan() - rhs;
        let lo = kappa as f64 - 3.0 + POLE_GUARD;
        let hi = kappa as f64 + 3.0 - POLE_GUARD;
        let q = scan_and_bisect(f, lo, hi, ROOT_TOL)
            .map_err(|e| Error::Bracket(format!("channel kappa = {kappa}: {e}")))?;
        roots.push(AdiabaticRoot {
            kappa,
            q: Complex64::new(q, 0.0),
            r_prime,
            lambda: (q * q - 0.25) / (r_prime * r_prime),
        });
        kappa += 6;
    }
    Ok(roots)
}
