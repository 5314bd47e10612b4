//! Planar integrals of power kernels over halfplanes, wedges and rectangles.
//!
//! Every region handled here is an intersection of halfplanes, so the integral
//! of `K(v - y)` over the region reduces per ray from `v`: along a direction
//! `ω` the radial part of `c·a(ω)/|z|^{2+s}` integrates in closed form,
//!
//! ```text
//! ∫_{t0}^{t1} c a(ω) t^{-1-s} dt = (c/s) a(ω) (t0^{-s} - t1^{-s}),
//! ```
//!
//! leaving a one-dimensional angular integral that adaptive quadrature
//! handles. Kernels enter through their planar [`ReducedProfile`], which for
//! dimensions above two is the fiber-integrated profile, so these routines
//! cover all dimensions.

use crate::error::{Error, Result};
use crate::kernel::{reduce_profile, FractionalKernel, ReducedProfile};
use crate::quad::{self, graded_both, graded_toward, QuadOptions};
use std::f64::consts::{PI, TAU};

fn default_opts() -> QuadOptions {
    QuadOptions {
        rel_tol: 1e-10,
        abs_tol: 1e-13,
        max_panels: 20_000,
    }
}

/// `∫_lo^hi a★(α) (sin α)^s dα` on `[lo, hi] ⊆ [0, π]`.
///
/// The weight has fractional-power behavior where `sin` vanishes, so panels
/// are graded into the endpoints; tabulated profiles also contribute their
/// interpolation grid as breakpoints.
pub fn profile_sin_power_integral(red: &ReducedProfile, lo: f64, hi: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&lo) || !(0.0..=PI).contains(&hi) || lo > hi {
        return Err(Error::domain(format!(
            "angular bounds [{lo}, {hi}] outside [0, pi]"
        )));
    }
    if lo == hi {
        return Ok(0.0);
    }
    let s = red.exponent();
    let mut breaks = graded_both(lo, hi, 42);
    breaks.extend(red.breakpoints_in(lo, hi));
    breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
    breaks.dedup();
    let r = quad::integrate(
        |a| red.eval(a) * a.sin().max(0.0).powf(s),
        lo,
        hi,
        &breaks,
        default_opts(),
    )?;
    Ok(r.value)
}

/// Exterior-halfspace interaction at distance `d`: the integral of
/// `K(v - y)` over the complement of `H = {y·e_n > 0}` for `v ∈ H` at
/// distance `d` from `∂H`. Scales exactly as `d^{-s}`.
pub fn halfspace_exterior_integral(kernel: &FractionalKernel, d: f64) -> Result<f64> {
    let red = reduce_profile(kernel)?;
    halfspace_exterior_reduced(&red, kernel.normalization(), d)
}

/// As [`halfspace_exterior_integral`] with a precomputed reduction.
pub fn halfspace_exterior_reduced(red: &ReducedProfile, c: f64, d: f64) -> Result<f64> {
    if !(d > 0.0) {
        return Err(Error::domain(format!("halfspace distance d = {d}, need d > 0")));
    }
    let s = red.exponent();
    let weight = profile_sin_power_integral(red, 0.0, PI)?;
    Ok(c / s * d.powf(-s) * weight)
}

/// Interaction of a point with the reflected wedge `V \ H`.
///
/// Geometry: the container halfspace is `H = {y₂ > 0}`, the droplet halfspace
/// `V` meets it at angle `θ`, and the evaluation point is
/// `v = ρ (cos θ, sin θ)` on `(∂V) ∩ H`. The set `V \ H` is the cone of
/// directions `β ∈ (θ - π, 0)`; since `v` lies on the line spanning the
/// cone's `β = θ - π` edge, a ray from `v` in direction `β` is inside the
/// cone exactly for `t > t₀(β) = ρ sin θ / (-sin β)`, giving per ray the
/// closed radial form above with `t₁ = ∞`.
pub(crate) fn wedge_reflected_integral(
    red: &ReducedProfile,
    c: f64,
    theta: f64,
    rho: f64,
) -> Result<f64> {
    let s = red.exponent();
    let lo = theta - PI;
    let hi = 0.0;
    let mut breaks = graded_toward(lo, hi, hi, 42);
    breaks.extend(red.breakpoints_in(lo, hi));
    breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
    breaks.dedup();
    let depth = rho * theta.sin();
    let r = quad::integrate(
        |beta| {
            let t0 = depth / (-beta.sin()).max(f64::MIN_POSITIVE);
            red.eval(beta) * t0.powf(-s)
        },
        lo,
        hi,
        &breaks,
        default_opts(),
    )?;
    Ok(c / s * r.value)
}

/// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub fn contains(&self, p: [f64; 2]) -> bool {
        p[0] > self.x0 && p[0] < self.x1 && p[1] > self.y0 && p[1] < self.y1
    }

    fn corner_angles(&self, p: [f64; 2]) -> Vec<f64> {
        let corners = [
            [self.x0, self.y0],
            [self.x1, self.y0],
            [self.x1, self.y1],
            [self.x0, self.y1],
        ];
        corners
            .iter()
            .map(|c| (c[1] - p[1]).atan2(c[0] - p[0]).rem_euclid(TAU))
            .collect()
    }

    /// Ray-slab clipping: parameter interval in which `p + t ω` is inside.
    fn clip_ray(&self, p: [f64; 2], omega: [f64; 2]) -> Option<(f64, f64)> {
        let mut t_in = f64::NEG_INFINITY;
        let mut t_out = f64::INFINITY;
        for (coord, dir, lo, hi) in [
            (p[0], omega[0], self.x0, self.x1),
            (p[1], omega[1], self.y0, self.y1),
        ] {
            if dir.abs() < 1e-300 {
                if coord <= lo || coord >= hi {
                    return None;
                }
            } else {
                let a = (lo - coord) / dir;
                let b = (hi - coord) / dir;
                t_in = t_in.max(a.min(b));
                t_out = t_out.min(a.max(b));
            }
        }
        if t_in < t_out && t_out > 0.0 {
            Some((t_in.max(0.0), t_out))
        } else {
            None
        }
    }
}

/// `∫_{R² \ rect} K(p - y) dy` for a point `p` strictly inside the rectangle.
pub(crate) fn rect_complement_integral(red: &ReducedProfile, c: f64, p: [f64; 2], rect: &Rect) -> Result<f64> {
    if !rect.contains(p) {
        return Err(Error::domain("point must lie inside the rectangle"));
    }
    let s = red.exponent();
    let mut breaks = rect.corner_angles(p);
    breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
    breaks.dedup();
    let r = quad::integrate(
        |phi| {
            let omega = [phi.cos(), phi.sin()];
            let (_, t_exit) = rect
                .clip_ray(p, omega)
                .expect("interior point: every ray exits");
            red.eval(phi) * t_exit.powf(-s)
        },
        0.0,
        TAU,
        &breaks,
        default_opts(),
    )?;
    Ok(c / s * r.value)
}

/// `∫_rect K(p - y) dy` for a point `p` strictly outside the rectangle.
pub(crate) fn rect_integral(red: &ReducedProfile, c: f64, p: [f64; 2], rect: &Rect) -> Result<f64> {
    if rect.contains(p) {
        return Err(Error::domain("point must lie outside the rectangle"));
    }
    let s = red.exponent();
    let mut breaks = rect.corner_angles(p);
    breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
    breaks.dedup();
    let r = quad::integrate(
        |phi| {
            let omega = [phi.cos(), phi.sin()];
            match rect.clip_ray(p, omega) {
                Some((t_in, t_out)) if t_in > 0.0 => {
                    red.eval(phi) * (t_in.powf(-s) - t_out.powf(-s))
                }
                _ => 0.0,
            }
        },
        0.0,
        TAU,
        &breaks,
        default_opts(),
    )?;
    Ok(c / s * r.value)
}
