//! Channel kinematics and the spectral coefficient A(nu) for the elastic
//! 2+1 process, with the closed-form S-matrix.
//!
//! Below the breakup threshold the total energy is E = k^2 - (pi c)^2/36
//! = -K^2, where k is the bound-pair/free-particle relative momentum and
//! K the radial decay constant. The rapidity beta defined by
//! cosh(beta) = -pi c/(6K), sinh(beta) = k/K turns the boundary condition
//! into the three-term recurrence
//!
//! ```text
//! A(nu+1) sin((nu+1) pi/6) - A(nu-1) sin((nu-1) pi/6)
//!     = -(pi c)/(3K) A(nu) cos(nu pi/6)
//! ```
//!
//! whose bounded solution is A(nu) = e^{-beta nu} (e^{-i pi nu/3}
//! + S e^{i pi nu/3} + S3). Matching exponential carriers fixes
//!
//! ```text
//! S  = (1 - 36 u^2 + i (24/sqrt 3) u) / (1 - 36 u^2 - i (24/sqrt 3) u),
//! S3 = (3 + i lam k) / (-1 + i lam k),
//! ```
//!
//! with u = k/(pi c) and lam = 6 sqrt(3)/(pi c). Note the orientation of
//! S: the recurrence admits exactly one, and the residual test below
//! breaks loudly (residual > 1e-3) if S is replaced by 1/S.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sturmian::{rho, ModelParams};

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelEnergy {
    /// 2+1 relative momentum, 0 <= k < pi |c|/6
    pub k: f64,
    /// radial decay constant K = sqrt((pi c)^2/36 - k^2) > 0
    pub decay: f64,
    /// total energy E = k^2 - (pi c)^2/36 = -K^2 < 0
    pub energy: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatteringSolution {
    /// rapidity, cosh(beta) = -pi c/(6K), sinh(beta) = k/K
    pub beta: f64,
    /// unimodular S-matrix element, S = e^{2 i delta}
    pub s: Complex64,
    /// coefficient of the short-ranged part of A(nu)
    pub s3: Complex64,
    /// phase shift, arg(S)/2 in (-pi/2, pi/2]
    pub delta: f64,
    /// cosine-form offset; equals S3 e^{-i delta}/2 and is real negative
    pub alpha: Complex64,
}

/// Pole of the S-matrix continued to complex momentum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SMatrixPole {
    pub k: Complex64,
    /// E = k^2 - (pi c)^2/36 at the pole (real)
    pub energy: f64,
}

pub fn channel_energy(k: f64, params: &ModelParams) -> Result<ChannelEnergy> {
    if !params.attractive {
        return Err(Error::Domain(format!(
            "no 2+1 bound channel for repulsive coupling c = {}",
            params.c
        )));
    }
    let threshold = PI * params.c.abs() / 6.0;
    if !(0.0..threshold).contains(&k) {
        return Err(Error::Domain(format!(
            "momentum k = {k} outside the open channel [0, {threshold})"
        )));
    }
    let decay = (threshold * threshold - k * k).sqrt();
    Ok(ChannelEnergy {
        k,
        decay,
        energy: k * k - threshold * threshold,
    })
}

pub fn beta_of(energy: &ChannelEnergy, params: &ModelParams) -> f64 {
    let ch = -PI * params.c / (6.0 * energy.decay);
    let sh = energy.k / energy.decay;
    (ch + sh).ln()
}

/// Canonical S-matrix in the momentum form; numerator and denominator
/// are conjugates, so |S| = 1 identically in the open channel.
pub fn s_matrix(k: f64, params: &ModelParams) -> Result<Complex64> {
    channel_energy(k, params)?;
    let u = k / (PI * params.c);
    let re = 1.0 - 36.0 * u * u;
    let im = 24.0 / 3.0_f64.sqrt() * u;
    Ok(Complex64::new(re, im) / Complex64::new(re, -im))
}

/// Same S-matrix as the product of linear factors in lam*k; must agree
/// with [`s_matrix`] to rounding.
pub fn s_matrix_factored(k: f64, params: &ModelParams) -> Result<Complex64> {
    channel_energy(k, params)?;
    let x = lambda_coeff(params) * k;
    let i = Complex64::i();
    let num = (-1.0 - i * x) * (3.0 + i * x);
    let den = (3.0 - i * x) * (-1.0 + i * x);
    Ok(num / den)
}

/// lam = 6 sqrt(3)/(pi c)
pub fn lambda_coeff(params: &ModelParams) -> f64 {
    6.0 * 3.0_f64.sqrt() / (PI * params.c)
}

pub fn s3_coefficient(k: f64, params: &ModelParams) -> Result<Complex64> {
    channel_energy(k, params)?;
    let x = lambda_coeff(params) * k;
    let i = Complex64::i();
    Ok((3.0 + i * x) / (-1.0 + i * x))
}

/// S3 written through the rapidity: -cot(pi/6) cot(pi/6 + i beta).
/// Used as a cross-check against the momentum form.
pub fn s3_cot_form(beta: f64) -> Complex64 {
    let z = Complex64::new(FRAC_PI_6, beta);
    -(1.0 / FRAC_PI_6.tan()) * z.cos() / z.sin()
}

/// Phase shift from a unimodular S value: arg(S)/2 in (-pi/2, pi/2].
pub fn phase_shift(s: Complex64) -> f64 {
    0.5 * s.arg()
}

/// Remove the mod-pi jumps of [`phase_shift`] along a k-ordered sweep.
pub fn unwrap_phases(deltas: &mut [f64]) {
    for i in 1..deltas.len() {
        while deltas[i] - deltas[i - 1] > FRAC_PI_3 * 1.5 {
            deltas[i] -= PI;
        }
        while deltas[i] - deltas[i - 1] < -FRAC_PI_3 * 1.5 {
            deltas[i] += PI;
        }
    }
}

pub fn scattering_solution(k: f64, params: &ModelParams) -> Result<ScatteringSolution> {
    let energy = channel_energy(k, params)?;
    let beta = beta_of(&energy, params);
    let s = s_matrix(k, params)?;
    let s3 = s3_coefficient(k, params)?;
    let delta = phase_shift(s);
    let alpha = 0.5 * s3 * Complex64::from_polar(1.0, -delta);
    Ok(ScatteringSolution {
        beta,
        s,
        s3,
        delta,
        alpha,
    })
}

/// Spectral coefficient A(nu) = e^{-beta nu}(e^{-i pi nu/3}
/// + S e^{i pi nu/3} + S3).
pub fn coefficient_a(nu: Complex64, sol: &ScatteringSolution) -> Complex64 {
    let i = Complex64::i();
    let w = i * FRAC_PI_3 * nu;
    (-sol.beta * nu).exp() * ((-w).exp() + sol.s * w.exp() + sol.s3)
}

/// The same coefficient as 2 e^{i delta} e^{-beta nu}
/// [cos(pi nu/3 + delta) + alpha]. The leading e^{i delta} is required
/// for exact equality with [`coefficient_a`]; without it the two
/// expressions differ by that constant phase.
pub fn coefficient_a_cosine_form(nu: Complex64, sol: &ScatteringSolution) -> Complex64 {
    let phase = Complex64::from_polar(1.0, sol.delta);
    2.0 * phase
        * (-sol.beta * nu).exp()
        * ((FRAC_PI_3 * nu + sol.delta).cos() + sol.alpha)
}

/// Residual of the sine/cosine recurrence at nu, normalized by the
/// largest of its three terms (0 when all terms vanish).
pub fn recurrence_residual(
    a: &dyn Fn(Complex64) -> Complex64,
    nu: Complex64,
    energy: &ChannelEnergy,
    params: &ModelParams,
) -> f64 {
    recurrence_residual_forms(a, nu, energy, params).0
}

/// Both recurrence forms: the sine/cosine residual, and where defined
/// (nu away from 0, +-1 and the spectral poles) the residual of the
/// B(nu) rho(nu) S(nu, theta_j) form with B = A/nu. The second form
/// reduces to the first through rho(nu) cos(nu pi/6) = (6/(pi c)) nu
/// sin(nu pi/6), so the two normalized residuals must agree to rounding.
pub fn recurrence_residual_forms(
    a: &dyn Fn(Complex64) -> Complex64,
    nu: Complex64,
    energy: &ChannelEnergy,
    params: &ModelParams,
) -> (f64, Option<f64>) {
    let ap = a(nu + 1.0);
    let am = a(nu - 1.0);
    let a0 = a(nu);
    let t1 = ap * ((nu + 1.0) * FRAC_PI_6).sin();
    let t2 = -am * ((nu - 1.0) * FRAC_PI_6).sin();
    let t3 = PI * params.c / (3.0 * energy.decay) * a0 * (nu * FRAC_PI_6).cos();
    let scale = t1.norm().max(t2.norm()).max(t3.norm());
    let sine_form = if scale == 0.0 {
        0.0
    } else {
        (t1 + t2 + t3).norm() / scale
    };

    let far_from_b_poles = nu.norm() > 1.0e-3
        && (nu + 1.0).norm() > 1.0e-3
        && (nu - 1.0).norm() > 1.0e-3;
    let spectral_form = if far_from_b_poles {
        let boundary = |m: Complex64| (m * FRAC_PI_6).cos();
        match (rho(nu + 1.0, params), rho(nu - 1.0, params)) {
            (Ok(rp), Ok(rm)) => {
                let u1 = am / (nu - 1.0) * rm * boundary(nu - 1.0);
                let u2 = -(ap / (nu + 1.0)) * rp * boundary(nu + 1.0);
                let u3 = -(2.0 * nu / energy.decay) * (a0 / nu) * boundary(nu);
                let scale_u = u1.norm().max(u2.norm()).max(u3.norm());
                Some(if scale_u == 0.0 {
                    0.0
                } else {
                    (u1 + u2 + u3).norm() / scale_u
                })
            }
            _ => None,
        }
    } else {
        None
    };
    (sine_form, spectral_form)
}

/// Numerical root of the S-matrix denominator factor (-1 + i lam k) in
/// the upper half momentum plane, found by secant iteration; the
/// analytic location is i pi|c|/(6 sqrt 3) with energy -(pi c)^2/27.
pub fn s_matrix_pole(params: &ModelParams) -> Result<SMatrixPole> {
    if !params.attractive {
        return Err(Error::Domain(
            "S-matrix pole requires attractive coupling".into(),
        ));
    }
    let lam = lambda_coeff(params);
    let f = |k: Complex64| -1.0 + Complex64::i() * lam * k;
    let scale = PI * params.c.abs() / 6.0;
    let mut k0 = Complex64::new(0.0, 0.3 * scale);
    let mut k1 = Complex64::new(0.0, 0.8 * scale);
    for _ in 0..60 {
        let (f0, f1) = (f(k0), f(k1));
        if (f1 - f0).norm() == 0.0 {
            break;
        }
        let k2 = k1 - f1 * (k1 - k0) / (f1 - f0);
        k0 = k1;
        k1 = k2;
        if f(k1).norm() < 1.0e-15 {
            break;
        }
    }
    let e = k1 * k1 - Complex64::new(scale * scale, 0.0);
    if k1.im <= 0.0 || e.im.abs() > 1.0e-12 {
        return Err(Error::Convergence(format!(
            "pole search did not land in the upper half plane: k = {k1}"
        )));
    }
    Ok(SMatrixPole { k: k1, energy: e.re })
}
