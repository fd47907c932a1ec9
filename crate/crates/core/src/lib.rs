//! Exact quantum three-body scattering on a line with contact interactions.
//!
//! Three equal-mass particles interact pairwise through equal-strength
//! delta potentials of strength `c` (attractive for `c < 0`). Below the
//! three-body breakup threshold the only open channel is elastic 2+1
//! scattering: a bound pair plus a free particle. This crate computes that
//! solution exactly, in several cross-checkable representations:
//!
//! * [`geometry`]: Jacobi and hyperspherical coordinates `(R, theta)` and
//!   the six interaction sectors between the pair-coalescence lines.
//! * [`specfun`]: modified Bessel functions of imaginary (and general
//!   complex) order via direct quadrature of the cosh-kernel integral.
//! * [`sturmian`]: angular basis functions matching the contact condition
//!   on the coalescence lines, their eigenvalue curve `rho(nu)`, and the
//!   adiabatic channel roots at fixed hyperradius.
//! * [`scattering`]: channel kinematics, the spectral coefficient `A(nu)`,
//!   its three-term recurrence, and the closed-form 2+1 S-matrix.
//! * [`wavefunction`]: the contour-integral wavefunction over imaginary
//!   order, its closed six-exponential form, the channel asymptotics, and
//!   the equivalent symmetrized plane-wave representation.
//! * [`checks`]: the named invariant suites used by the CLI `verify`
//!   command and the acceptance tests.
//!
//! All energies sit below the breakup threshold; lengths and momenta are
//! dimensionless (hbar = mass = 1).

pub mod checks;
pub mod dd;
pub mod error;
pub mod geometry;
pub mod scattering;
pub mod specfun;
pub mod sturmian;
pub mod wavefunction;

pub use error::{Error, Result};
pub use geometry::{HyperPoint, JacobiCoords, ParticleConfig};
pub use scattering::{ChannelEnergy, ScatteringSolution};
pub use specfun::BesselEvalSpec;
pub use sturmian::{AdiabaticRoot, ModelParams, SturmianValue};
pub use wavefunction::{PlaneWaveMomenta, QuadratureSpec};
