//! The full 2+1 wavefunction in three equivalent representations, plus
//! the asymptotic channel form and the contact-condition verifier.
//!
//! Closed form: with theta' = theta - j pi/3 measured from the sector
//! center, phi0 = theta', phi1 = theta' + pi/3, phi2 = theta' - pi/3,
//! and z = K R,
//!
//! ```text
//! Psi = (i pi/2) [ e^{-z cosh(beta + i phi1)} + e^{-z cosh(beta - i phi2)}
//!     + S  ( e^{-z cosh(beta - i phi1)} + e^{-z cosh(beta + i phi2)} )
//!     + S3 ( e^{-z cosh(beta + i phi0)} + e^{-z cosh(beta - i phi0)} ) ].
//! ```
//!
//! Expanding -z cosh(beta +- i phi) = (pi c/6) R cos(phi) -+ i k R sin(phi)
//! fixes every sign unambiguously (cosh beta = -pi c/(6K), sinh beta = k/K).
//!
//! Contour form: the same function as i * integral over t in [0, t_max]
//! of w(t) K_{it}(KR) dt, where w collects the even-in-t part of
//! A(it) cos(i theta' t) into six cosines of complex argument. Each
//! cosine reproduces one closed-form exponential through
//! integral_0^inf K_{i tau}(z) cos(a tau) d tau = (pi/2) e^{-z cosh a},
//! so the two representations agree exactly, not just asymptotically.
//!
//! Plane-wave form: the McGuire-type six-term sum of sector-restricted
//! plane waves with complex single-particle momenta; equal to the closed
//! form times 2/(i pi) after relabeling positions by the sector ordering.

use num_complex::Complex64;

use crate::dd;
use crate::error::{Error, Result};
use crate::geometry::{
    particle_order, sector_angle, to_hyperspherical, to_jacobi, HyperPoint, ParticleConfig,
};
use crate::scattering::{ChannelEnergy, ScatteringSolution};
use crate::specfun::{bessel_k_imag_order, BesselEvalSpec, UMaxPolicy};
use crate::sturmian::ModelParams;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

/// Contour quadrature controls for [`kl_integral`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    /// hard truncation of the imaginary-order contour
    pub t_max: f64,
    /// Gauss-Legendre node density along t
    pub nodes_per_unit: f64,
    /// relative accuracy target; also the adaptive stopping threshold
    pub rel_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            t_max: 40.0,
            nodes_per_unit: 24.0,
            rel_tol: 1.0e-7,
        }
    }
}

/// Refuse the contour integral closer than this to a coalescence line:
/// the integrand decay exponent pi/6 - |theta'| vanishes on the lines.
pub const KL_ANGLE_MARGIN: f64 = PI / 60.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWaveMomenta {
    pub k1: Complex64,
    pub k2: Complex64,
    pub k3: Complex64,
}

fn phases(p: HyperPoint) -> (f64, f64, f64) {
    let tp = sector_angle(p.theta, p.sector);
    (tp, tp + FRAC_PI_3, tp - FRAC_PI_3)
}

/// One six-term exponential: exp((pi c/6) R cos(phi) - i sign k R sin(phi)).
fn channel_term(p: HyperPoint, energy: &ChannelEnergy, params: &ModelParams, phi: f64, sign: f64) -> Complex64 {
    let damp = (PI * params.c / 6.0 * p.radius * phi.cos()).exp();
    Complex64::from_polar(damp, -sign * energy.k * p.radius * phi.sin())
}

/// Closed-form wavefunction, including the overall i pi/2 factor.
/// Total on its domain; the caller supplies a consistent (theta, sector)
/// pair, e.g. from `geometry::to_hyperspherical`.
pub fn psi_closed_form(
    p: HyperPoint,
    energy: &ChannelEnergy,
    sol: &ScatteringSolution,
    params: &ModelParams,
) -> Complex64 {
    let (phi0, phi1, phi2) = phases(p);
    let t = |phi: f64, sign: f64| channel_term(p, energy, params, phi, sign);
    let sum = t(phi1, 1.0) + t(phi2, -1.0)
        + sol.s * (t(phi2, 1.0) + t(phi1, -1.0))
        + sol.s3 * (t(phi0, 1.0) + t(phi0, -1.0));
    Complex64::i() * FRAC_PI_2 * sum
}

/// Channel asymptotics: both bounding-line channel pairs (incoming plus
/// S-weighted outgoing on each line), dropping only the short-ranged S3
/// pair. Keeping both pairs makes the large-R ratio to the closed form
/// approach 1 everywhere in the sector interior, including the center
/// where the two pairs coincide.
pub fn psi_asymptotic(
    p: HyperPoint,
    energy: &ChannelEnergy,
    sol: &ScatteringSolution,
    params: &ModelParams,
) -> Result<Complex64> {
    let (_, phi1, phi2) = phases(p);
    if !(FRAC_PI_6 < phi1 && phi1 < FRAC_PI_2) {
        return Err(Error::Domain(format!(
            "asymptotic channel angle {phi1} outside (pi/6, pi/2); point is not in the sector interior"
        )));
    }
    let t = |phi: f64, sign: f64| channel_term(p, energy, params, phi, sign);
    let sum = t(phi1, 1.0) + sol.s * t(phi1, -1.0) + t(phi2, -1.0) + sol.s * t(phi2, 1.0);
    Ok(Complex64::i() * FRAC_PI_2 * sum)
}

/// Contact-condition residual |(1/(R Psi)) dPsi/dtheta + pi c/6| at
/// theta -> theta_j^- for the closed form, by the same backward-difference
/// Richardson scheme used for the angular basis functions.
pub fn boundary_condition_residual(
    radius: f64,
    sector: usize,
    energy: &ChannelEnergy,
    sol: &ScatteringSolution,
    params: &ModelParams,
) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::Domain(format!(
            "boundary-condition probe needs R > 0, got {radius}"
        )));
    }
    let theta_b = sector as f64 * FRAC_PI_3 + FRAC_PI_6;
    let psi = |theta: f64| {
        psi_closed_form(
            HyperPoint {
                radius,
                theta,
                sector,
            },
            energy,
            sol,
            params,
        )
    };
    let pb = psi(theta_b);
    // scale of the largest single term, for the degeneracy floor
    let peak = (PI * params.c / 6.0 * radius * 0.0_f64.cos()).exp().max(
        (PI * params.c / 6.0 * radius * FRAC_PI_2.cos()).exp(),
    );
    if pb.norm() < 1.0e-12 * peak {
        return Err(Error::Degenerate(format!(
            "wavefunction vanishes at the probe point (R = {radius}, sector {sector})"
        )));
    }
    let h0 = 1.0e-3 * FRAC_PI_6;
    let back_diff = |h: f64| (pb - psi(theta_b - h)) / h;
    let d = [back_diff(h0), back_diff(h0 / 2.0), back_diff(h0 / 4.0)];
    let r1a = 2.0 * d[1] - d[0];
    let r1b = 2.0 * d[2] - d[1];
    let r2 = (4.0 * r1b - r1a) / 3.0;
    if (r2 - r1b).norm() > 1.0e-4 * (1.0 + r2.norm()) {
        return Err(Error::Accuracy(format!(
            "log-derivative extrapolation did not settle at R = {radius}, sector {sector}"
        )));
    }
    Ok((r2 / (radius * pb) + PI * params.c / 6.0).norm())
}

fn bessel_spec_for_contour() -> BesselEvalSpec {
    // the contour weights grow like e^{|phi| t}; push the kernel's
    // truncation and noise floor far below the default so the weighted
    // tail stays clean
    BesselEvalSpec {
        rel_tol: 1.0e-13,
        abs_floor: 1.0e-36,
        u_max_policy: UMaxPolicy::RelativeTail,
        max_nodes: 400_000,
    }
}

/// Contour-integral wavefunction i * integral_0^T w(t) K_{it}(KR) dt with
/// the even-in-t weight
///
/// ```text
/// w(t) = cos((b+i phi1)t) + cos((b-i phi2)t)
///      + S  [cos((b-i phi1)t) + cos((b+i phi2)t)]
///      + S3 [cos((b+i phi0)t) + cos((b-i phi0)t)],  b = beta.
/// ```
///
/// Marches fixed-width Gauss-Legendre panels in t and stops once panel
/// contributions fall below rel_tol; errors if the point is too close to
/// a coalescence line (no decay) or t_max truncates a still-live tail.
pub fn kl_integral(
    p: HyperPoint,
    energy: &ChannelEnergy,
    sol: &ScatteringSolution,
    params: &ModelParams,
    q: &QuadratureSpec,
) -> Result<Complex64> {
    kl_integral_with_stats(p, energy, sol, params, q).map(|(v, _)| v)
}

/// Work actually spent by [`kl_integral`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KlStats {
    pub panels: usize,
    pub nodes: usize,
}

/// Same as [`kl_integral`] but also reports the panel and node counts.
pub fn kl_integral_with_stats(
    p: HyperPoint,
    energy: &ChannelEnergy,
    sol: &ScatteringSolution,
    params: &ModelParams,
    q: &QuadratureSpec,
) -> Result<(Complex64, KlStats)> {
    if !(q.t_max > 0.0) || !(q.rel_tol > 0.0) || !(q.nodes_per_unit >= 1.0) {
        return Err(Error::Domain(
            "contour spec needs t_max > 0, rel_tol > 0, nodes_per_unit >= 1".into(),
        ));
    }
    // K cosh(beta) = pi|c|/6 ties the three channel inputs together
    let mismatch = (energy.decay * sol.beta.cosh() + PI * params.c / 6.0).abs();
    if mismatch > 1.0e-9 * (1.0 + PI * params.c.abs() / 6.0) {
        return Err(Error::Domain(
            "channel energy, scattering solution, and parameters disagree".into(),
        ));
    }
    let tp = sector_angle(p.theta, p.sector);
    if tp.abs() > FRAC_PI_6 {
        return Err(Error::Domain(format!(
            "theta = {} is not inside sector {}",
            p.theta, p.sector
        )));
    }
    if FRAC_PI_6 - tp.abs() <= KL_ANGLE_MARGIN {
        return Err(Error::Convergence(format!(
            "point within {KL_ANGLE_MARGIN:.4} of a coalescence line; the contour integrand does not decay"
        )));
    }
    let x = energy.decay * p.radius;
    let bspec = bessel_spec_for_contour();

    // resolve the fastest oscillation: the kernel phase advances like
    // ln(2 t/x) per unit t at large t, the weight like beta
    let osc_rate = (2.0 * q.t_max / x).ln().max(sol.beta).max(1.0);
    let needed = 10.0 * osc_rate / (2.0 * PI);
    if q.nodes_per_unit < needed {
        return Err(Error::Accuracy(format!(
            "nodes_per_unit = {} cannot resolve the contour oscillation (need >= {needed:.1})",
            q.nodes_per_unit
        )));
    }

    let (phi0, phi1, phi2) = phases(p);
    let weight = |t: f64| -> Complex64 {
        let cz = |re: f64, im: f64| (Complex64::new(re, im) * t).cos();
        cz(sol.beta, phi1) + cz(sol.beta, -phi2)
            + sol.s * (cz(sol.beta, -phi1) + cz(sol.beta, phi2))
            + sol.s3 * (cz(sol.beta, phi0) + cz(sol.beta, -phi0))
    };

    let (xi_dd, wt_dd) = dd::gauss_legendre(16);
    let xi: Vec<f64> = xi_dd.iter().map(|v| v.to_f64()).collect();
    let wt: Vec<f64> = wt_dd.iter().map(|v| v.to_f64()).collect();

    let width = 16.0 / q.nodes_per_unit;
    let n_panels = (q.t_max / width).ceil() as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    let mut settled = 0;
    let mut stats = KlStats { panels: 0, nodes: 0 };
    for panel in 0..n_panels {
        let a = panel as f64 * width;
        let b = (q.t_max).min(a + width);
        let c0 = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut sum = Complex64::new(0.0, 0.0);
        for i in 0..16 {
            let t = c0 + half * xi[i];
            let kv = bessel_k_imag_order(t, x, &bspec)?;
            sum += wt[i] * weight(t) * kv;
        }
        sum *= half;
        acc += sum;
        last = sum.norm();
        stats.panels = panel + 1;
        stats.nodes += 16;
        if panel >= 4 && last < 0.05 * q.rel_tol * acc.norm() {
            settled += 1;
            if settled >= 2 {
                return Ok((Complex64::i() * acc, stats));
            }
        } else {
            settled = 0;
        }
    }
    if last > q.rel_tol * acc.norm() {
        return Err(Error::Accuracy(format!(
            "contour truncated at t_max = {} with live tail (last panel {last:.3e} vs target {:.3e})",
            q.t_max,
            q.rel_tol * acc.norm()
        )));
    }
    Ok((Complex64::i() * acc, stats))
}

/// Complex single-particle momenta of the plane-wave representation.
pub fn plane_wave_momenta(energy: &ChannelEnergy, params: &ModelParams) -> PlaneWaveMomenta {
    let s2 = 2.0_f64.sqrt();
    let s6 = 6.0_f64.sqrt();
    let bind = PI * params.c / (6.0 * s2);
    let drift = energy.k / s6;
    PlaneWaveMomenta {
        k1: Complex64::new(-drift, bind),
        k2: Complex64::new(-drift, -bind),
        k3: Complex64::new(2.0 * drift, 0.0),
    }
}

/// Six-term symmetric plane-wave representation, evaluated with the
/// momentum assignment of the sector that contains the configuration.
/// Proportional to [`psi_closed_form`] with constant i pi/2.
pub fn psi_plane_wave(
    cfg: ParticleConfig,
    energy: &ChannelEnergy,
    sol: &ScatteringSolution,
    params: &ModelParams,
) -> Result<Complex64> {
    let xs = [cfg.x1, cfg.x2, cfg.x3];
    let scale = xs.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if (xs[i] - xs[j]).abs() < 1.0e-12 * scale {
            return Err(Error::Degenerate(format!(
                "configuration lies on the coalescence line x{} = x{}",
                i + 1,
                j + 1
            )));
        }
    }
    let hp = to_hyperspherical(to_jacobi(cfg))?;
    // relabel so the reference ordering y2 < y3 < y1 holds
    let order = particle_order(hp.sector);
    let y1 = xs[order[2] - 1];
    let y2 = xs[order[0] - 1];
    let y3 = xs[order[1] - 1];
    let m = plane_wave_momenta(energy, params);
    let i = Complex64::i();
    let term = |sign: f64, a: Complex64, b: Complex64, c: Complex64| {
        (i * sign * (a * y1 + b * y2 + c * y3)).exp()
    };
    Ok(term(-1.0, m.k3, m.k2, m.k1)
        + term(1.0, m.k2, m.k3, m.k1)
        + sol.s * (term(-1.0, m.k1, m.k3, m.k2) + term(1.0, m.k3, m.k1, m.k2))
        + sol.s3 * (term(-1.0, m.k1, m.k2, m.k3) + term(1.0, m.k2, m.k1, m.k3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scattering::{channel_energy, scattering_solution};
    use crate::sturmian::ModelParams;
    use rand::{Rng, SeedableRng};

    fn setup(k: f64, c: f64) -> (ChannelEnergy, ScatteringSolution, ModelParams) {
        let params = ModelParams::new(c).unwrap();
        let e = channel_energy(k, &params).unwrap();
        let sol = scattering_solution(k, &params).unwrap();
        (e, sol, params)
    }

    fn hp(radius: f64, theta: f64, sector: usize) -> HyperPoint {
        HyperPoint {
            radius,
            theta,
            sector,
        }
    }

    #[test]
    fn closed_form_sector_shift_invariance() {
        let (e, sol, p) = setup(0.3, -1.0);
        for j in 0..6 {
            let theta = j as f64 * FRAC_PI_3 + 0.07;
            let a = psi_closed_form(hp(1.7, theta, j), &e, &sol, &p);
            let b = psi_closed_form(hp(1.7, theta + FRAC_PI_3, (j + 1) % 6), &e, &sol, &p);
            assert!((a - b).norm() < 1e-12 * a.norm(), "j = {j}");
        }
    }

    #[test]
    fn closed_form_continuous_across_lines() {
        let (e, sol, p) = setup(0.3, -1.0);
        for j in 0..6 {
            let line = j as f64 * FRAC_PI_3 + FRAC_PI_6;
            let a = psi_closed_form(hp(2.0, line, j), &e, &sol, &p);
            let b = psi_closed_form(hp(2.0, line, (j + 1) % 6), &e, &sol, &p);
            assert!((a - b).norm() < 1e-12 * a.norm(), "line after sector {j}");
        }
    }

    #[test]
    fn closed_form_finite_at_origin() {
        let (e, sol, p) = setup(0.3, -1.0);
        let v = psi_closed_form(hp(0.0, 0.0, 0), &e, &sol, &p);
        let expected = Complex64::i() * FRAC_PI_2 * (2.0 + 2.0 * sol.s + 2.0 * sol.s3);
        assert!((v - expected).norm() < 1e-14);
    }

    #[test]
    fn boundary_condition_residual_small_and_sector_independent() {
        let (e, sol, p) = setup(0.3, -1.0);
        for &radius in &[1.0, 5.0] {
            let r = boundary_condition_residual(radius, 0, &e, &sol, &p).unwrap();
            assert!(r < 1e-6, "R = {radius}: residual {r}");
        }
        // sectors agree up to finite-difference noise on the rounded
        // boundary angles (each residual is itself ~1e-11)
        let reference = boundary_condition_residual(2.0, 0, &e, &sol, &p).unwrap();
        for j in 1..6 {
            let r = boundary_condition_residual(2.0, j, &e, &sol, &p).unwrap();
            assert!((r - reference).abs() < 5e-11, "sector {j}: {r} vs {reference}");
        }
        assert!(matches!(
            boundary_condition_residual(0.0, 0, &e, &sol, &p),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn asymptotic_ratio_approaches_one_at_sector_center() {
        let (e, sol, p) = setup(0.3, -1.0);
        let mut prev = f64::INFINITY;
        for &radius in &[10.0, 20.0, 30.0] {
            let point = hp(radius, 0.0, 0);
            let full = psi_closed_form(point, &e, &sol, &p);
            let asym = psi_asymptotic(point, &e, &sol, &p).unwrap();
            let dev = (full / asym - 1.0).norm();
            assert!(dev < prev, "R = {radius}: {dev} vs {prev}");
            prev = dev;
        }
        assert!(prev < 0.01, "ratio deviation at R = 30: {prev}");
        // interior but off-center point as well
        let point = hp(35.0, 0.08, 0);
        let dev = (psi_closed_form(point, &e, &sol, &p)
            / psi_asymptotic(point, &e, &sol, &p).unwrap()
            - 1.0)
            .norm();
        assert!(dev < 0.01, "off-center deviation {dev}");
    }

    #[test]
    fn asymptotic_real_at_zero_momentum_and_domain_error() {
        let (e, sol, p) = setup(0.0, -1.0);
        let v = psi_asymptotic(hp(8.0, 0.05, 0), &e, &sol, &p).unwrap() / (Complex64::i() * FRAC_PI_2);
        assert!(v.im.abs() < 1e-13 * v.re.abs());
        assert!(v.re > 0.0);

        let (e, sol, p) = setup(0.3, -1.0);
        // on the line (phi1 = pi/2) and beyond: domain error
        assert!(matches!(
            psi_asymptotic(hp(8.0, FRAC_PI_6, 0), &e, &sol, &p),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn kl_matches_closed_form_at_reference_point() {
        let (e, sol, p) = setup(0.3, -1.0);
        let q = QuadratureSpec::default();
        let point = hp(2.0, 0.1, 0);
        let via_contour = kl_integral(point, &e, &sol, &p, &q).unwrap();
        let closed = psi_closed_form(point, &e, &sol, &p);
        let ratio = via_contour / closed;
        assert!(
            (ratio - 1.0).norm() < 1e-6,
            "contour/closed ratio {ratio} deviates"
        );
    }

    #[test]
    fn kl_refusals() {
        let (e, sol, p) = setup(0.3, -1.0);
        let q = QuadratureSpec::default();
        // too close to the line
        assert!(matches!(
            kl_integral(hp(2.0, FRAC_PI_6 - 0.01, 0), &e, &sol, &p, &q),
            Err(Error::Convergence(_))
        ));
        // allowed by the margin but truncated by t_max: live-tail error
        assert!(matches!(
            kl_integral(hp(2.0, 0.25, 0), &e, &sol, &p, &q),
            Err(Error::Accuracy(_))
        ));
        // inconsistent sector label
        assert!(matches!(
            kl_integral(hp(2.0, 1.5, 0), &e, &sol, &p, &q),
            Err(Error::Domain(_))
        ));
        // density too low for the kernel oscillation
        let thin = QuadratureSpec {
            nodes_per_unit: 2.0,
            ..q
        };
        assert!(matches!(
            kl_integral(hp(2.0, 0.1, 0), &e, &sol, &p, &thin),
            Err(Error::Accuracy(_))
        ));
    }

    #[test]
    fn kl_single_cosh_pair_identity() {
        // 2 i * integral_0^T cos(a t) K_{it}(z) dt -> i pi e^{-z cosh a}
        let a = Complex64::new(0.3, 0.2);
        let z = 1.5;
        let spec = BesselEvalSpec::default();
        let (xi_dd, wt_dd) = dd::gauss_legendre(16);
        let width = 0.5;
        let mut acc = Complex64::new(0.0, 0.0);
        for panel in 0..28 {
            let c0 = width * (panel as f64 + 0.5);
            let mut sum = Complex64::new(0.0, 0.0);
            for i in 0..16 {
                let t = c0 + 0.5 * width * xi_dd[i].to_f64();
                let kv = bessel_k_imag_order(t, z, &spec).unwrap();
                sum += wt_dd[i].to_f64() * (a * t).cos() * kv;
            }
            acc += sum * 0.5 * width;
        }
        let lhs = 2.0 * Complex64::i() * acc;
        let rhs = Complex64::i() * PI * (-z * a.cosh()).exp();
        assert!((lhs - rhs).norm() < 1e-6 * rhs.norm(), "{lhs} vs {rhs}");
    }

    #[test]
    fn kl_even_reduction_equals_symmetric_contour() {
        // raw integrand A(it) cos(i theta' t) K_{it} over [-T, T] versus
        // the evenized weight over [0, T]; mathematically identical at
        // any T, so moderate T and plain f64 suffice here
        let (e, sol, _) = setup(0.3, -1.0);
        let point = hp(2.0, 0.1, 0);
        let tp = sector_angle(point.theta, point.sector);
        let x = e.decay * point.radius;
        let spec = BesselEvalSpec::default();
        let (xi_dd, wt_dd) = dd::gauss_legendre(16);
        let t_max = 10.0;
        let width = 0.5;
        let n = (2.0 * t_max / width) as usize;
        let mut raw = Complex64::new(0.0, 0.0);
        for panel in 0..n {
            let a0 = -t_max + width * panel as f64;
            let c0 = a0 + 0.5 * width;
            let mut sum = Complex64::new(0.0, 0.0);
            for i in 0..16 {
                let t = c0 + 0.5 * width * xi_dd[i].to_f64();
                let kv = bessel_k_imag_order(t, x, &spec).unwrap();
                let nu = Complex64::new(0.0, t);
                let g = crate::scattering::coefficient_a(nu, &sol) * (nu * tp).cos();
                sum += wt_dd[i].to_f64() * g * kv;
            }
            raw += sum * 0.5 * width;
        }
        let mut even = Complex64::new(0.0, 0.0);
        let weight = |t: f64| -> Complex64 {
            let cz = |re: f64, im: f64| (Complex64::new(re, im) * t).cos();
            cz(sol.beta, tp + FRAC_PI_3) + cz(sol.beta, -(tp - FRAC_PI_3))
                + sol.s * (cz(sol.beta, -(tp + FRAC_PI_3)) + cz(sol.beta, tp - FRAC_PI_3))
                + sol.s3 * (cz(sol.beta, tp) + cz(sol.beta, -tp))
        };
        for panel in 0..(n / 2) {
            let c0 = width * (panel as f64 + 0.5);
            let mut sum = Complex64::new(0.0, 0.0);
            for i in 0..16 {
                let t = c0 + 0.5 * width * xi_dd[i].to_f64();
                let kv = bessel_k_imag_order(t, x, &spec).unwrap();
                sum += wt_dd[i].to_f64() * weight(t) * kv;
            }
            even += sum * 0.5 * width;
        }
        assert!(
            (raw - even).norm() < 1e-8 * even.norm().max(1e-3),
            "{raw} vs {even}"
        );
    }

    #[test]
    fn momenta_identities() {
        let (e, _, p) = setup(0.3, -1.0);
        let m = plane_wave_momenta(&e, &p);
        assert!((m.k1 + m.k2 + m.k3).norm() < 1e-14);
        let sum_sq = m.k1 * m.k1 + m.k2 * m.k2 + m.k3 * m.k3;
        assert!((sum_sq - Complex64::new(e.energy, 0.0)).norm() < 1e-14);
        assert!((m.k3.re - 0.24495).abs() < 1e-5);
        assert!(m.k3.im == 0.0);
    }

    #[test]
    fn plane_wave_proportional_to_closed_form() {
        let (e, sol, p) = setup(0.3, -1.0);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut reference: Option<Complex64> = None;
        let mut count = 0;
        while count < 20 {
            let cfg = ParticleConfig {
                x1: rng.gen_range(-3.0..3.0),
                x2: rng.gen_range(-3.0..3.0),
                x3: rng.gen_range(-3.0..3.0),
            };
            let pw = match psi_plane_wave(cfg, &e, &sol, &p) {
                Ok(v) => v,
                Err(_) => continue,
            };
            let hp = to_hyperspherical(to_jacobi(cfg)).unwrap();
            let closed = psi_closed_form(hp, &e, &sol, &p);
            let ratio = closed / pw;
            if let Some(r0) = reference {
                assert!((ratio - r0).norm() < 1e-10 * r0.norm(), "cfg {cfg:?}");
            } else {
                reference = Some(ratio);
            }
            count += 1;
        }
        // the constant is exactly i pi/2
        let r0 = reference.unwrap();
        assert!((r0 - Complex64::i() * FRAC_PI_2).norm() < 1e-10);
    }

    #[test]
    fn plane_wave_exchange_symmetric() {
        let (e, sol, p) = setup(0.2, -1.0);
        let cfg = ParticleConfig {
            x1: 0.4,
            x2: -1.3,
            x3: 2.2,
        };
        let base = psi_plane_wave(cfg, &e, &sol, &p).unwrap();
        let swaps = [
            ParticleConfig { x1: cfg.x2, x2: cfg.x1, x3: cfg.x3 },
            ParticleConfig { x1: cfg.x3, x2: cfg.x2, x3: cfg.x1 },
            ParticleConfig { x1: cfg.x2, x2: cfg.x3, x3: cfg.x1 },
        ];
        for s in swaps {
            let v = psi_plane_wave(s, &e, &sol, &p).unwrap();
            assert!((v - base).norm() < 1e-12 * base.norm(), "{s:?}");
        }
        assert!(matches!(
            psi_plane_wave(
                ParticleConfig { x1: 1.0, x2: 1.0, x3: 0.0 },
                &e,
                &sol,
                &p
            ),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn pair_bound_factor_decay_rate() {
        // x1 = d/2, x2 = -d/2, x3 fixed far away; at k = 0 the dominant
        // channel terms are non-oscillatory and |Psi| ~ e^{-(pi|c|/6) d/sqrt 2}
        let (e, sol, p) = setup(0.0, -1.0);
        let psi_at = |d: f64| {
            psi_plane_wave(
                ParticleConfig {
                    x1: 0.5 * d,
                    x2: -0.5 * d,
                    x3: -40.0,
                },
                &e,
                &sol,
                &p,
            )
            .unwrap()
            .norm()
        };
        let slope = (psi_at(1.0).ln() - psi_at(0.5).ln()) / 0.5;
        let expected = -PI / (6.0 * 2.0_f64.sqrt());
        assert!(
            (slope - expected).abs() < 0.01 * expected.abs(),
            "slope {slope} vs {expected}"
        );
    }
}
