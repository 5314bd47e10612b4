//! Independent oracles used across the integration suites.
//!
//! Everything here deliberately avoids the production integration paths:
//! closed forms go through gamma functions, Monte-Carlo estimators use
//! heavy-tailed radial proposals matched to the kernel decay, and the
//! principal-value oracle excludes an `ε`-ball and Richardson-extrapolates
//! instead of subtracting a tangent halfplane.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::gamma;
use std::f64::consts::{PI, TAU};

/// `∫_0^π sin^p α dα = √π Γ((p+1)/2) / Γ(p/2 + 1)`.
pub fn sin_power_closed(p: f64) -> f64 {
    PI.sqrt() * gamma((p + 1.0) / 2.0) / gamma(p / 2.0 + 1.0)
}

/// `∫_{R^m} (1 + |y|²)^{-p} dy = π^{m/2} Γ(p - m/2) / Γ(p)`.
pub fn fiber_mass_closed(m: usize, p: f64) -> f64 {
    PI.powf(m as f64 / 2.0) * gamma(p - m as f64 / 2.0) / gamma(p)
}

/// Monte-Carlo estimate of `∫_{y·e₂ < 0} c/|v-y|^{2+s} dy` for `v = (0, d)`:
/// radii follow a Pareto(s) proposal from `d` (the smallest distance to the
/// region), making the weight constant; only the Bernoulli acceptance
/// carries variance, so the heavy tail is handled exactly.
pub fn mc_halfspace_exterior(c: f64, s: f64, d: f64, samples: u64, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..samples {
        let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
        let r = d * u.powf(-1.0 / s);
        let phi = rng.gen_range(0.0..TAU);
        // z = v - y must satisfy z₂ > d.
        if r * phi.sin() > d {
            hits += 1;
        }
    }
    let weight = TAU * c / (s * d.powf(s));
    weight * hits as f64 / samples as f64
}

/// Signed angular measure `S(r) = |{ω : v + rω ∉ W}| - |{ω : v + rω ∈ W}|`
/// for the wedge `W = {polar angle ∈ (0, θ)}` seen from `v = (cos θ, sin θ)`,
/// via exact circle/ray crossings and midpoint membership tests.
fn signed_arc_measure(theta: f64, r: f64) -> f64 {
    let v = [theta.cos(), theta.sin()];
    let mut cuts: Vec<f64> = Vec::with_capacity(6);
    // Crossings with the line spanned by each wedge edge: ω·u⊥ = -v·u⊥ / r.
    for u in [[1.0, 0.0], [theta.cos(), theta.sin()]] {
        let perp = [-u[1], u[0]];
        let rhs = -(v[0] * perp[0] + v[1] * perp[1]) / r;
        if rhs.abs() <= 1.0 {
            // ω·perp = rhs on the unit circle: two solutions.
            let base = perp[1].atan2(perp[0]);
            let off = rhs.acos();
            cuts.push((base + off).rem_euclid(TAU));
            cuts.push((base - off).rem_euclid(TAU));
        }
    }
    cuts.push(0.0);
    cuts.push(TAU);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let inside = |angle: f64| {
        let p = [v[0] + r * angle.cos(), v[1] + r * angle.sin()];
        let polar = p[1].atan2(p[0]).rem_euclid(TAU);
        polar < theta
    };
    let mut signed = 0.0;
    for pair in cuts.windows(2) {
        let span = pair[1] - pair[0];
        if span <= 0.0 {
            continue;
        }
        let mid = 0.5 * (pair[0] + pair[1]);
        signed += if inside(mid) { -span } else { span };
    }
    signed
}

/// Principal-value curvature of the wedge at `v = (cos θ, sin θ)` for the
/// isotropic planar kernel `c/|x|^{2+s}`: the `ε`-excluded integral
/// `c ∫_ε^∞ r^{-1-s} S(r) dr` on a fine log-spaced Simpson grid with the
/// asymptotic cone tail attached analytically, Richardson-extrapolated in
/// `ε` against the `ε^{1-s}` leading error.
pub fn pv_wedge_nmc_oracle(c: f64, s: f64, theta: f64) -> f64 {
    let pv_eps = |eps: f64| -> f64 {
        let r_max = 2e4f64;
        // Log-spaced composite Simpson in t = ln r.
        let n = 16_384;
        let lo = eps.ln();
        let hi = r_max.ln();
        let step = (hi - lo) / n as f64;
        let f = |t: f64| {
            let r = t.exp();
            r.powf(-s) * signed_arc_measure(theta, r) // dr = r dt
        };
        let mut acc = f(lo) + f(hi);
        for k in 1..n {
            let w = if k % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(lo + k as f64 * step);
        }
        let body = acc * step / 3.0;
        // Beyond r_max the circle sees the asymptotic cone: S → 2π - 2θ.
        let tail = (TAU - 2.0 * theta) * r_max.powf(-s) / s;
        c * (body + tail)
    };
    let eps = 1e-3;
    let coarse = pv_eps(eps);
    let fine = pv_eps(eps / 2.0);
    let damp = 2f64.powf(s - 1.0);
    (fine - damp * coarse) / (1.0 - damp)
}

/// Oracle for the single-kernel contact-angle balance at `ρ = 1`:
/// `pv_wedge - (1 - σ) · exterior(sin θ)` with the exterior anchored at the
/// Monte-Carlo halfspace value and moved to distance `sin θ` by the exact
/// kernel scaling.
pub struct ResidualOracle {
    pub c: f64,
    pub s: f64,
    pub sigma: f64,
    ext_at_unit: f64,
}

impl ResidualOracle {
    pub fn new(c: f64, s: f64, sigma: f64, mc_samples: u64, seed: u64) -> Self {
        ResidualOracle {
            c,
            s,
            sigma,
            ext_at_unit: mc_halfspace_exterior(c, s, 1.0, mc_samples, seed),
        }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let nmc = pv_wedge_nmc_oracle(self.c, self.s, theta);
        let ext = self.ext_at_unit * theta.sin().powf(-self.s);
        nmc - (1.0 - self.sigma) * ext
    }

    /// First sign change of the residual on a `step`-spaced grid.
    pub fn scan_root(&self, lo: f64, hi: f64, step: f64) -> Option<f64> {
        let mut prev_theta = lo;
        let mut prev = self.eval(lo);
        let mut theta = lo + step;
        while theta <= hi {
            let cur = self.eval(theta);
            if prev.signum() != cur.signum() {
                // Linear interpolation inside the grid cell.
                return Some(prev_theta + step * prev / (prev - cur));
            }
            prev = cur;
            prev_theta = theta;
            theta += step;
        }
        None
    }
}

/// Fixed-grid composite Simpson on `[a, b]` with `n` panels (`n` even).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    assert!(n % 2 == 0);
    let step = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + k as f64 * step);
    }
    acc * step / 3.0
}
