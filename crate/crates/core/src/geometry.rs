//! Coordinates for three equal-mass particles on a line: positions,
//! Jacobi coordinates, hyperspherical polar form, and the bookkeeping of
//! the six sectors cut out by the pair-coalescence lines.
//!
//! Conventions: eta = sqrt(1/2)(x1 - x2), xi = sqrt(2/3)((x1+x2)/2 - x3),
//! eta = R cos(theta), xi = R sin(theta), theta in (-pi, pi]. The
//! coalescence lines sit at theta_j = (2j+1) pi/6; sector j is the arc of
//! width pi/3 centered on j pi/3. Within one sector the particle ordering
//! on the line is fixed.

use crate::error::{Error, Result};

use std::f64::consts::{FRAC_PI_6, PI};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParticleConfig {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiCoords {
    /// center of mass; carried along, unused by the relative problem
    pub r: f64,
    pub eta: f64,
    pub xi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HyperPoint {
    pub radius: f64,
    /// polar angle of (eta, xi), in (-pi, pi]
    pub theta: f64,
    /// sector index in {0,..,5} with |wrap(theta - sector*pi/3)| <= pi/6
    pub sector: usize,
}

pub fn to_jacobi(cfg: ParticleConfig) -> JacobiCoords {
    JacobiCoords {
        r: (cfg.x1 + cfg.x2 + cfg.x3) / 3.0,
        eta: 0.5_f64.sqrt() * (cfg.x1 - cfg.x2),
        xi: (2.0 / 3.0_f64).sqrt() * (0.5 * (cfg.x1 + cfg.x2) - cfg.x3),
    }
}

pub fn from_jacobi(jc: JacobiCoords) -> ParticleConfig {
    // pair sum s = x1 + x2 from (3/2)s - 3r = sqrt(3/2) xi
    let s = 2.0 * jc.r + (2.0 / 3.0_f64).sqrt() * jc.xi;
    let d = 2.0_f64.sqrt() * jc.eta;
    ParticleConfig {
        x1: 0.5 * (s + d),
        x2: 0.5 * (s - d),
        x3: 3.0 * jc.r - s,
    }
}

pub fn to_hyperspherical(jc: JacobiCoords) -> Result<HyperPoint> {
    let radius = jc.eta.hypot(jc.xi);
    if radius == 0.0 {
        return Err(Error::Degenerate(
            "triple coalescence point R = 0 has no defined hyperangle".into(),
        ));
    }
    let theta = jc.xi.atan2(jc.eta);
    Ok(HyperPoint {
        radius,
        theta,
        sector: sector_of(theta),
    })
}

pub fn from_hyperspherical(hp: HyperPoint, r: f64) -> JacobiCoords {
    JacobiCoords {
        r,
        eta: hp.radius * hp.theta.cos(),
        xi: hp.radius * hp.theta.sin(),
    }
}

/// Reduce any finite angle to (-pi, pi].
pub fn wrap_angle(theta: f64) -> f64 {
    let mut w = theta.rem_euclid(2.0 * PI);
    if w > PI {
        w -= 2.0 * PI;
    }
    w
}

/// Sector index for an angle. Points numerically on a boundary line
/// theta_j = (2j+1) pi/6 go to the lower-theta side, so each sector is
/// the half-open arc ((2j-1) pi/6, (2j+1) pi/6].
pub fn sector_of(theta: f64) -> usize {
    let q = wrap_angle(theta) / FRAC_PI_6;
    let m = q.round();
    let j = if (q - m).abs() < 1.0e-12 && (m as i64) % 2 != 0 {
        // exactly on the line between sectors (m-1)/2 and (m+1)/2
        (m as i64 - 1) / 2
    } else {
        ((q - 1.0) / 2.0).ceil() as i64
    };
    j.rem_euclid(6) as usize
}

/// Boundary line theta_j = (2j+1) pi/6 wrapped to (-pi, pi].
pub fn sector_boundary(j: usize) -> f64 {
    assert!(j < 6, "sector index must be in 0..=5");
    wrap_angle((2 * j + 1) as f64 * FRAC_PI_6)
}

/// Angle measured from the center of the given sector, wrapped so the
/// sector interior maps to (-pi/6, pi/6].
pub fn sector_angle(theta: f64, sector: usize) -> f64 {
    assert!(sector < 6, "sector index must be in 0..=5");
    wrap_angle(theta - sector as f64 * 2.0 * FRAC_PI_6)
}

/// Particle indices sorted by position, valid throughout the sector.
/// Derived by evaluating the inverse coordinate map at the sector center
/// rather than hard-coded: e.g. sector 0 gives x2 < x3 < x1, returned as
/// [2, 3, 1].
pub fn particle_order(sector: usize) -> [usize; 3] {
    assert!(sector < 6, "sector index must be in 0..=5");
    let theta = sector as f64 * 2.0 * FRAC_PI_6;
    let cfg = from_jacobi(from_hyperspherical(
        HyperPoint {
            radius: 1.0,
            theta,
            sector,
        },
        0.0,
    ));
    let mut tagged = [(cfg.x1, 1), (cfg.x2, 2), (cfg.x3, 3)];
    tagged.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    [tagged[0].1, tagged[1].1, tagged[2].1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn jacobi_examples() {
        let j = to_jacobi(ParticleConfig { x1: 1.0, x2: -1.0, x3: 0.0 });
        assert!(close(j.r, 0.0, 1e-15));
        assert!(close(j.eta, 2.0_f64.sqrt(), 1e-15));
        assert!(close(j.xi, 0.0, 1e-15));

        let o = to_jacobi(ParticleConfig { x1: 0.0, x2: 0.0, x3: 0.0 });
        assert_eq!((o.r, o.eta, o.xi), (0.0, 0.0, 0.0));

        let j = to_jacobi(ParticleConfig { x1: 0.0, x2: 1.0, x3: 2.0 });
        assert!(close(j.r, 1.0, 1e-15));
        assert!(close(j.eta, -0.5_f64.sqrt(), 1e-15));
        assert!(close(j.xi, -1.5_f64.sqrt(), 1e-15));

        // hyperspherical form of the same point
        let h = to_hyperspherical(j).unwrap();
        assert!(close(h.radius, 2.0_f64.sqrt(), 1e-15));
        assert!(close(h.theta, -2.0 * PI / 3.0, 1e-15));
        assert_eq!(h.sector, 4);
    }

    #[test]
    fn hyperspherical_examples_and_degenerate_point() {
        let h = to_hyperspherical(JacobiCoords { r: 0.0, eta: 2.0_f64.sqrt(), xi: 0.0 }).unwrap();
        assert!(close(h.radius, 2.0_f64.sqrt(), 1e-15));
        assert_eq!(h.theta, 0.0);
        assert_eq!(h.sector, 0);

        // exactly on the x1 = x2 line: tie-break to the lower sector
        let b = to_hyperspherical(JacobiCoords { r: 0.0, eta: 0.0, xi: 1.0 }).unwrap();
        assert!(close(b.theta, PI / 2.0, 1e-15));
        assert_eq!(b.sector, 1);

        assert!(matches!(
            to_hyperspherical(JacobiCoords { r: 1.0, eta: 0.0, xi: 0.0 }),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn sector_examples_and_boundaries() {
        assert_eq!(sector_of(0.0), 0);
        assert_eq!(sector_of(PI / 3.0), 1);
        assert_eq!(sector_of(-2.0 * PI / 3.0), 4);
        assert_eq!(sector_of(PI), 3);
        assert_eq!(sector_of(-5.0 * FRAC_PI_6), 3);
        // boundary lines go to the lower-theta side
        assert_eq!(sector_of(FRAC_PI_6), 0);
        assert_eq!(sector_of(PI / 2.0), 1);
        assert_eq!(sector_of(-FRAC_PI_6), 5);
        // wrapping invariance
        for &t in &[0.1, 1.0, -2.0, 3.0] {
            assert_eq!(sector_of(t), sector_of(t + 2.0 * PI));
            assert_eq!(sector_of(t), sector_of(t - 4.0 * PI));
        }
        // every sector contains its own center and respects the width bound
        for j in 0..6 {
            let center = j as f64 * PI / 3.0;
            assert_eq!(sector_of(center), j);
            assert!(sector_angle(center + 0.1, j).abs() <= FRAC_PI_6 + 1e-12);
            assert!(close(sector_boundary(j), wrap_angle((2 * j + 1) as f64 * FRAC_PI_6), 1e-15));
        }
    }

    #[test]
    fn particle_order_from_inverse_map() {
        assert_eq!(particle_order(0), [2, 3, 1]);
        assert_eq!(particle_order(3), [1, 3, 2]);
        assert_eq!(particle_order(4), [1, 2, 3]);
        // antipodal sectors carry reversed orderings
        for j in 0..3 {
            let a = particle_order(j);
            let mut b = particle_order(j + 3);
            b.reverse();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn sector_tiling_is_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10_000 {
            let theta: f64 = rng.gen_range(-PI..PI);
            let j = sector_of(theta);
            let hits: Vec<usize> = (0..6)
                .filter(|&m| sector_angle(theta, m).abs() < FRAC_PI_6 - 1e-9)
                .collect();
            if hits.len() == 1 {
                assert_eq!(hits[0], j, "theta = {theta}");
            } else {
                // within 1e-9 of a boundary; still must satisfy the weak bound
                assert!(sector_angle(theta, j).abs() <= FRAC_PI_6 + 1e-9);
            }
        }
    }

    #[test]
    fn permutation_matches_actual_sorted_positions() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 2000 {
            let cfg = ParticleConfig {
                x1: rng.gen_range(-5.0..5.0),
                x2: rng.gen_range(-5.0..5.0),
                x3: rng.gen_range(-5.0..5.0),
            };
            let xs = [cfg.x1, cfg.x2, cfg.x3];
            // skip near-coalescent configs where the order is ambiguous
            if (xs[0] - xs[1]).abs() < 1e-6
                || (xs[0] - xs[2]).abs() < 1e-6
                || (xs[1] - xs[2]).abs() < 1e-6
            {
                continue;
            }
            let h = to_hyperspherical(to_jacobi(cfg)).unwrap();
            let order = particle_order(h.sector);
            assert!(
                xs[order[0] - 1] < xs[order[1] - 1] && xs[order[1] - 1] < xs[order[2] - 1],
                "cfg {cfg:?} sector {} order {order:?}",
                h.sector
            );
            checked += 1;
        }
    }

    #[test]
    fn coalescence_lines_are_sector_boundaries() {
        // x1 = x2 puts theta on +-pi/2; x2 = x3 on pi/6 or -5pi/6;
        // x1 = x3 on -pi/6 or 5pi/6
        let cases: [(ParticleConfig, [f64; 2]); 3] = [
            (ParticleConfig { x1: 1.0, x2: 1.0, x3: 0.0 }, [PI / 2.0, -PI / 2.0]),
            (ParticleConfig { x1: 1.0, x2: 0.0, x3: 0.0 }, [FRAC_PI_6, -5.0 * FRAC_PI_6]),
            (ParticleConfig { x1: 0.0, x2: 1.0, x3: 0.0 }, [-FRAC_PI_6, 5.0 * FRAC_PI_6]),
        ];
        for (cfg, lines) in cases {
            for sign in [1.0, -1.0] {
                let scaled = ParticleConfig {
                    x1: sign * cfg.x1,
                    x2: sign * cfg.x2,
                    x3: sign * cfg.x3,
                };
                let h = to_hyperspherical(to_jacobi(scaled)).unwrap();
                assert!(
                    lines.iter().any(|&l| close(h.theta, l, 1e-12)),
                    "theta {} not on expected lines {lines:?}",
                    h.theta
                );
                // and each line is a sector boundary
                assert!(
                    (0..6).any(|j| close(sector_boundary(j), h.theta, 1e-12)),
                    "theta {} is not of the form (2j+1)pi/6",
                    h.theta
                );
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_positions(
            x1 in -100.0..100.0f64,
            x2 in -100.0..100.0f64,
            x3 in -100.0..100.0f64,
        ) {
            let cfg = ParticleConfig { x1, x2, x3 };
            let jc = to_jacobi(cfg);
            let back = from_jacobi(jc);
            prop_assert!(close(back.x1, x1, 1e-13));
            prop_assert!(close(back.x2, x2, 1e-13));
            prop_assert!(close(back.x3, x3, 1e-13));
            if let Ok(h) = to_hyperspherical(jc) {
                let jc2 = from_hyperspherical(h, jc.r);
                prop_assert!(close(jc2.eta, jc.eta, 1e-13));
                prop_assert!(close(jc2.xi, jc.xi, 1e-13));
                prop_assert!(sector_angle(h.theta, h.sector).abs() <= FRAC_PI_6 + 1e-12);
            }
        }
    }
}
