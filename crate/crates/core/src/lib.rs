//! Nonlocal capillarity toolkit.
//!
//! Surface tension modeled by long-range pair interactions: a droplet
//! `E ⊆ Ω` carries the energy
//!
//! ```text
//! E(E) = I₁(E, Ω \ E) + σ I₂(E, Rⁿ \ Ω),     I_j(X, Y) = ∬ K_j(x - y) dx dy,
//! ```
//!
//! with fractional kernels `K_j = c · a_j(x/|x|)/|x|^{n+s_j}`. The crate
//! provides:
//!
//! - [`kernel`]: kernel construction, comparability checks, and planar
//!   reduction of the angular profile;
//! - [`wedge`]: nonlocal mean curvature of wedge cones, the contact-angle
//!   balance equation, two-kernel regime classification, and the angle
//!   solver;
//! - [`classical`]: the spherical-cap energy and Young's law `cos θ = -σ`
//!   recovered in the `s → 1` limit;
//! - [`sweep`]: endpoint asymptotics of `θ(s, σ)` and CSV sweep tables;
//! - [`grid`], [`energy`], [`anneal`], [`diagnostics`]: a volume-constrained
//!   droplet minimizer on a 2D lattice with annealed boundary swaps,
//!   validated against its own first-variation residual.

pub mod anneal;
pub mod classical;
pub mod diagnostics;
pub mod energy;
pub mod error;
pub mod grid;
pub mod integrals;
pub mod kernel;
pub mod quad;
pub mod sweep;
pub mod wedge;

pub use classical::{cap_energy_argmin, classical_cap_energy, classical_young, CapEnergyQuery};
pub use error::{Error, Result};
pub use integrals::halfspace_exterior_integral;
pub use kernel::{
    reduce_profile, AngularProfile, BoundsReport, FractionalKernel, KernelBounds, ReducedProfile,
};
pub use sweep::{estimate_slope, fmt_f64, sweep, AsymptoticFit, LimitEnd, SweepRow, SweepTable};
pub use wedge::{
    classify_regime, sigma_threshold, solve_contact_angle, solve_contact_angle_at, wedge_nmc,
    young_residual, young_residual_at, AngleSolution, ContactAngleProblem, Regime, WedgeGeometry,
    DEFAULT_TOL, THETA_MIN,
};
