//! Classical capillarity in the plane: spherical-cap energy and Young's law.
//!
//! An area-`m` circular-segment droplet meeting the wall at angle `θ` has
//! radius `r = sqrt(m / (θ - sin θ cos θ))`, arc length `2θr` and chord
//! `2r sin θ`, so its surface-plus-adhesion energy is
//!
//! ```text
//! E(θ) = 2 (θ + σ sin θ) sqrt(m / (θ - sin θ cos θ)),
//! ```
//!
//! whose derivative is proportional to `(θ cos θ - sin θ)(cos θ + σ)`; the
//! unique interior critical point is the Young angle `arccos(-σ)` and it is
//! the minimum.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// A spherical-cap energy evaluation request.
#[derive(Debug, Clone, Copy)]
pub struct CapEnergyQuery {
    /// Droplet area (2D volume), positive.
    pub m: f64,
    /// Relative adhesion coefficient in `[-1, 1]`.
    pub sigma: f64,
    /// Contact angle in `(0, π)`.
    pub theta: f64,
}

impl CapEnergyQuery {
    pub fn new(m: f64, sigma: f64, theta: f64) -> Result<Self> {
        if !(m > 0.0) {
            return Err(Error::domain(format!("cap area m = {m}, need m > 0")));
        }
        if !(sigma.abs() <= 1.0) {
            return Err(Error::domain(format!("sigma = {sigma} outside [-1, 1]")));
        }
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::domain(format!("theta = {theta} outside (0, pi)")));
        }
        Ok(CapEnergyQuery { m, sigma, theta })
    }
}

/// Circular-segment capillarity energy at fixed area.
pub fn classical_cap_energy(q: &CapEnergyQuery) -> f64 {
    let CapEnergyQuery { m, sigma, theta } = *q;
    let wetted = theta - theta.sin() * theta.cos();
    2.0 * (theta + sigma * theta.sin()) * (m / wetted).sqrt()
}

/// Young's law: the classical contact angle `arccos(-σ)`.
pub fn classical_young(sigma: f64) -> Result<f64> {
    if !(sigma.abs() <= 1.0) {
        return Err(Error::domain(format!("sigma = {sigma} outside [-1, 1]")));
    }
    Ok((-sigma).acos())
}

/// Golden-section argmin of the cap energy over `θ ∈ (0, π)`.
pub fn cap_energy_argmin(m: f64, sigma: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(Error::domain(format!("cap area m = {m}, need m > 0")));
    }
    if !(sigma.abs() <= 1.0) {
        return Err(Error::domain(format!("sigma = {sigma} outside [-1, 1]")));
    }
    let f = |theta: f64| {
        classical_cap_energy(&CapEnergyQuery { m, sigma, theta })
    };
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = 1e-9;
    let mut b = PI - 1e-9;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > 1e-10 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_disk_energy_is_pi() {
        // σ = 0, θ = π/2, m = π/2 is the unit-radius half disk: energy = arc = π.
        let q = CapEnergyQuery::new(PI / 2.0, 0.0, PI / 2.0).unwrap();
        let e = classical_cap_energy(&q);
        assert!((e - PI).abs() < 1e-14, "energy {e}");
    }

    #[test]
    fn energy_scales_as_sqrt_area() {
        let theta = 1.1;
        let sigma = -0.4;
        let base = classical_cap_energy(&CapEnergyQuery::new(1.0, sigma, theta).unwrap());
        for m in [0.25, 2.0, 9.0] {
            let e = classical_cap_energy(&CapEnergyQuery::new(m, sigma, theta).unwrap());
            assert!((e / m.sqrt() - base).abs() < 1e-13);
        }
    }

    #[test]
    fn derivative_crosses_zero_at_young_angle() {
        // σ = -1/2: critical angle is arccos(1/2) = π/3.
        let sigma = -0.5;
        let m = 1.0;
        let h = 1e-6;
        let de = |theta: f64| {
            let ep = classical_cap_energy(&CapEnergyQuery::new(m, sigma, theta + h).unwrap());
            let em = classical_cap_energy(&CapEnergyQuery::new(m, sigma, theta - h).unwrap());
            (ep - em) / (2.0 * h)
        };
        let target = PI / 3.0;
        assert!(de(target - 1e-4) < 0.0);
        assert!(de(target + 1e-4) > 0.0);
    }

    #[test]
    fn argmin_matches_young() {
        for &sigma in &[-0.72, -0.5, -0.18, 0.0, 0.18, 0.4, 0.72] {
            let argmin = cap_energy_argmin(1.0, sigma).unwrap();
            let young = classical_young(sigma).unwrap();
            assert!(
                (argmin - young).abs() < 1e-6,
                "sigma = {sigma}: argmin {argmin} vs young {young}"
            );
        }
    }

    #[test]
    fn young_endpoints() {
        assert_eq!(classical_young(0.0).unwrap(), PI / 2.0);
        assert!((classical_young(-1.0).unwrap()).abs() < 1e-15);
        assert!((classical_young(1.0).unwrap() - PI).abs() < 1e-15);
        assert!((classical_young(0.3).unwrap() - 1.8754889808102941).abs() < 1e-12);
        assert!(classical_young(1.5).is_err());
    }
}
