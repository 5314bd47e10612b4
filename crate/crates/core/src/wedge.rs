//! Nonlocal mean curvature of wedge cones and the contact-angle equation.
//!
//! The droplet blow-up at a contact point is a wedge `H ∩ V`: the container
//! halfspace `H = {x·e_n > 0}` intersected with the droplet halfspace `V`,
//! meeting at angle `θ`. Its nonlocal mean curvature at `v ∈ (∂V) ∩ H`,
//!
//! ```text
//! H_{H∩V}(v) = pv ∫ (χ_{(H∩V)ᶜ} - χ_{H∩V})(y) K(v - y) dy,
//! ```
//!
//! is regularized by subtracting the halfplane `V` through `v`, whose
//! principal value vanishes by antipodal symmetry. The difference of the two
//! indicator integrands is `2 χ_{V \ H}`, supported away from `v`, so
//!
//! ```text
//! H_{H∩V}(v) = 2 ∫_{V \ H} K(v - y) dy,
//! ```
//!
//! an absolutely convergent integral computed by per-ray radial reduction in
//! [`crate::integrals`]. The contact angle is the unique root in `(0, π)` of
//! the balance
//!
//! ```text
//! H_{H∩V}(v) - ∫_{Hᶜ} K₁(v - y) dy + σ ∫_{Hᶜ} K₂(v - y) dy = 0,
//! ```
//!
//! which is strictly decreasing in `θ`, running from `+∞` to
//! `(σ N₂ A₂ - N₁ A₁) / (s sin^s θ)` as `θ → π`; an interior root exists
//! exactly when `|σ|` is below the profile-weight ratio `N₁A₁ / N₂A₂`.

use crate::error::{Error, Result};
use crate::integrals::{
    halfspace_exterior_reduced, profile_sin_power_integral, wedge_reflected_integral,
};
use crate::kernel::{reduce_profile, FractionalKernel, ReducedProfile};
use std::f64::consts::PI;

/// Solver never evaluates the residual closer than this to `θ ∈ {0, π}`;
/// the degenerate angles are produced symbolically by regime classification.
pub const THETA_MIN: f64 = 1e-3;

/// Default root tolerance in radians.
pub const DEFAULT_TOL: f64 = 1e-6;

const SCAN_POINTS: usize = 64;
const MAX_REFINE: u32 = 200;

/// Wedge evaluation geometry: the droplet cone `H ∩ V` at opening angle
/// `theta`, probed at the point of `(∂V) ∩ H` at distance `rho` from the
/// apex line.
#[derive(Debug, Clone, Copy)]
pub struct WedgeGeometry {
    n: usize,
    theta: f64,
    rho: f64,
}

impl WedgeGeometry {
    pub fn new(n: usize, theta: f64, rho: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("dimension n = {n}, need n >= 2")));
        }
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::domain(format!(
                "wedge angle theta = {theta} outside (0, pi)"
            )));
        }
        if !(rho > 0.0) {
            return Err(Error::domain(format!("apex distance rho = {rho}, need rho > 0")));
        }
        Ok(WedgeGeometry { n, theta, rho })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Planar coordinates of the evaluation point in the wedge plane
    /// (first axis along the wall, second along the container normal).
    pub fn evaluation_point(&self) -> [f64; 2] {
        [self.rho * self.theta.cos(), self.rho * self.theta.sin()]
    }
}

/// Nonlocal mean curvature of the wedge `H ∩ V` at the geometry's
/// evaluation point. Scales as `rho^{-s}`.
pub fn wedge_nmc(kernel: &FractionalKernel, geom: &WedgeGeometry) -> Result<f64> {
    if kernel.dim() != geom.n {
        return Err(Error::domain(format!(
            "kernel dimension {} does not match geometry dimension {}",
            kernel.dim(),
            geom.n
        )));
    }
    let red = reduce_profile(kernel)?;
    wedge_nmc_reduced(&red, kernel.normalization(), geom.theta, geom.rho)
}

fn wedge_nmc_reduced(red: &ReducedProfile, c: f64, theta: f64, rho: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::domain(format!(
            "wedge angle theta = {theta} outside (0, pi)"
        )));
    }
    Ok(2.0 * wedge_reflected_integral(red, c, theta, rho)?)
}

/// One or two interaction kernels plus the relative adhesion coefficient.
#[derive(Debug, Clone)]
pub struct ContactAngleProblem {
    kernel1: FractionalKernel,
    kernel2: FractionalKernel,
    sigma: f64,
    single: bool,
}

impl ContactAngleProblem {
    /// Common-kernel problem: the same kernel governs liquid-gas and
    /// liquid-solid interactions.
    pub fn single_kernel(kernel: FractionalKernel, sigma: f64) -> Result<Self> {
        check_sigma(sigma)?;
        Ok(ContactAngleProblem {
            kernel2: kernel.clone(),
            kernel1: kernel,
            sigma,
            single: true,
        })
    }

    /// Distinct liquid-gas (`kernel1`) and liquid-solid (`kernel2`) kernels.
    pub fn two_kernels(
        kernel1: FractionalKernel,
        kernel2: FractionalKernel,
        sigma: f64,
    ) -> Result<Self> {
        check_sigma(sigma)?;
        if kernel1.dim() != kernel2.dim() {
            return Err(Error::domain(format!(
                "kernel dimensions differ: {} vs {}",
                kernel1.dim(),
                kernel2.dim()
            )));
        }
        let single = kernel1.same_structure(&kernel2);
        Ok(ContactAngleProblem {
            kernel1,
            kernel2,
            sigma,
            single,
        })
    }

    pub fn kernel1(&self) -> &FractionalKernel {
        &self.kernel1
    }

    pub fn kernel2(&self) -> &FractionalKernel {
        &self.kernel2
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn is_single_kernel(&self) -> bool {
        self.single
    }
}

fn check_sigma(sigma: f64) -> Result<()> {
    if !(sigma.abs() <= 1.0) {
        return Err(Error::domain(format!(
            "relative adhesion sigma = {sigma} outside [-1, 1]"
        )));
    }
    Ok(())
}

/// Outcome class of the contact-angle equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Complete wetting, `θ = 0`.
    DegenerateZero,
    /// Complete non-wetting, `θ = π`.
    DegeneratePi,
    /// A unique interior angle solves the balance equation.
    Interior,
    /// `s₁ = s₂` with `|σ|` at or above the solvability threshold.
    OutsideThreshold,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::DegenerateZero => "degenerate_zero",
            Regime::DegeneratePi => "degenerate_pi",
            Regime::Interior => "interior",
            Regime::OutsideThreshold => "outside_threshold",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt.write_str(self.as_str())
    }
}

/// Contact-angle solution with diagnostics.
#[derive(Debug, Clone)]
pub struct AngleSolution {
    pub regime: Regime,
    /// Present except in the `OutsideThreshold` regime.
    pub theta: Option<f64>,
    /// Balance residual at the returned angle; zero by convention for the
    /// degenerate regimes.
    pub residual: f64,
    pub bracket_iterations: u32,
}

impl AngleSolution {
    fn symbolic(regime: Regime, theta: f64) -> Self {
        AngleSolution {
            regime,
            theta: Some(theta),
            residual: 0.0,
            bracket_iterations: 0,
        }
    }
}

/// Solvability threshold for the balanced two-kernel equation at `s₁ = s₂`:
/// the ratio of the `(sin α)^s`-weighted masses of the two reduced profiles
/// (normalization factors included, since they scale the kernels' angular
/// parts). Equal kernels give exactly 1.
pub fn sigma_threshold(problem: &ContactAngleProblem) -> Result<f64> {
    let s1 = problem.kernel1.exponent();
    let s2 = problem.kernel2.exponent();
    if s1 != s2 {
        return Err(Error::domain(format!(
            "sigma threshold requires equal exponents, got s1 = {s1}, s2 = {s2}"
        )));
    }
    let red1 = reduce_profile(&problem.kernel1)?;
    let red2 = reduce_profile(&problem.kernel2)?;
    let a1 = problem.kernel1.normalization() * profile_sin_power_integral(&red1, 0.0, PI)?;
    let a2 = problem.kernel2.normalization() * profile_sin_power_integral(&red2, 0.0, PI)?;
    Ok(a1 / a2)
}

/// Decide the regime from the kernel homogeneities and `σ`.
///
/// The more singular kernel dominates at small scales: for `s₁ < s₂` the
/// liquid-solid kernel wins and the angle degenerates with the sign of `σ`;
/// for `s₁ > s₂` (or `σ = 0`) the liquid-gas kernel alone fixes an interior
/// angle; for `s₁ = s₂` both act and an interior angle exists iff `|σ|` is
/// below [`sigma_threshold`].
pub fn classify_regime(problem: &ContactAngleProblem) -> Result<Regime> {
    let s1 = problem.kernel1.exponent();
    let s2 = problem.kernel2.exponent();
    if problem.sigma == 0.0 {
        return Ok(Regime::Interior);
    }
    if s1 < s2 {
        return Ok(if problem.sigma < 0.0 {
            Regime::DegenerateZero
        } else {
            Regime::DegeneratePi
        });
    }
    if s1 > s2 {
        return Ok(Regime::Interior);
    }
    let threshold = sigma_threshold(problem)?;
    if problem.sigma.abs() < threshold {
        Ok(Regime::Interior)
    } else {
        Ok(Regime::OutsideThreshold)
    }
}

/// Cached reductions for repeated residual evaluations.
struct ResidualEval {
    red1: ReducedProfile,
    c1: f64,
    /// `None` when the liquid-solid term is inert (σ = 0 or s₁ ≠ s₂).
    solid: Option<(ReducedProfile, f64, f64)>,
    sigma: f64,
}

impl ResidualEval {
    fn new(problem: &ContactAngleProblem, use_sigma_term: bool) -> Result<Self> {
        let red1 = reduce_profile(&problem.kernel1)?;
        let solid = if use_sigma_term && problem.sigma != 0.0 {
            let red2 = reduce_profile(&problem.kernel2)?;
            let c2 = problem.kernel2.normalization();
            Ok::<_, Error>(Some((red2, c2, problem.kernel2.exponent())))
        } else {
            Ok(None)
        }?;
        Ok(ResidualEval {
            red1,
            c1: problem.kernel1.normalization(),
            solid,
            sigma: problem.sigma,
        })
    }

    fn eval(&self, theta: f64, rho: f64) -> Result<f64> {
        let nmc = wedge_nmc_reduced(&self.red1, self.c1, theta, rho)?;
        let d = rho * theta.sin();
        let ext1 = halfspace_exterior_reduced(&self.red1, self.c1, d)?;
        let mut residual = nmc - ext1;
        if let Some((red2, c2, _)) = &self.solid {
            residual += self.sigma * halfspace_exterior_reduced(red2, *c2, d)?;
        }
        Ok(residual)
    }
}

/// Contact-angle balance residual at angle `theta`, evaluated at the
/// canonical point `rho = 1`:
///
/// ```text
/// H^{K₁}_{H∩V}(v) - ∫_{Hᶜ} K₁(v-y) dy + σ ∫_{Hᶜ} K₂(v-y) dy.
/// ```
///
/// In the single-kernel case this is `H^{K}_{H∩V}(v) + (σ-1) ∫_{Hᶜ} K`.
/// Strictly decreasing in `theta`.
pub fn young_residual(problem: &ContactAngleProblem, theta: f64) -> Result<f64> {
    young_residual_at(problem, theta, 1.0)
}

/// [`young_residual`] at apex distance `rho`; the root in `theta` does not
/// depend on `rho` (both sides scale by `rho^{-s}` when `s₁ = s₂`).
pub fn young_residual_at(problem: &ContactAngleProblem, theta: f64, rho: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::domain(format!("theta = {theta} outside (0, pi)")));
    }
    ResidualEval::new(problem, true)?.eval(theta, rho)
}

/// Solve the contact-angle equation at the canonical apex distance.
pub fn solve_contact_angle(problem: &ContactAngleProblem, tol: f64) -> Result<AngleSolution> {
    solve_contact_angle_at(problem, tol, 1.0)
}

/// Solve at apex distance `rho`; by homogeneity the angle is invariant.
pub fn solve_contact_angle_at(
    problem: &ContactAngleProblem,
    tol: f64,
    rho: f64,
) -> Result<AngleSolution> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance {tol} must be positive")));
    }
    if !(rho > 0.0) {
        return Err(Error::domain(format!("rho = {rho}, need rho > 0")));
    }

    // Perfect wetting / non-wetting endpoints are exact symbolic branches.
    if problem.single {
        if problem.sigma == -1.0 {
            return Ok(AngleSolution::symbolic(Regime::DegenerateZero, 0.0));
        }
        if problem.sigma == 1.0 {
            return Ok(AngleSolution::symbolic(Regime::DegeneratePi, PI));
        }
    }

    let regime = classify_regime(problem)?;
    match regime {
        Regime::DegenerateZero => Ok(AngleSolution::symbolic(regime, 0.0)),
        Regime::DegeneratePi => Ok(AngleSolution::symbolic(regime, PI)),
        Regime::OutsideThreshold => Ok(AngleSolution {
            regime,
            theta: None,
            residual: f64::NAN,
            bracket_iterations: 0,
        }),
        Regime::Interior => {
            let s1 = problem.kernel1.exponent();
            let s2 = problem.kernel2.exponent();
            // The liquid-solid term participates only in the balanced case
            // s₁ = s₂; otherwise the angle solves the σ-independent equation.
            let eval = ResidualEval::new(problem, s1 == s2)?;
            let f = |theta: f64| eval.eval(theta, rho);
            let (theta, residual, iters) = root_find(&f, THETA_MIN, PI - THETA_MIN, tol)?;
            Ok(AngleSolution {
                regime,
                theta: Some(theta),
                residual,
                bracket_iterations: iters,
            })
        }
    }
}

/// Coarse sign-change scan followed by Illinois-damped false position with
/// bisection fallback. The residual is expensive, so the scan stops at the
/// first sign change (the residual is monotone).
fn root_find<F: Fn(f64) -> Result<f64>>(
    f: &F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<(f64, f64, u32)> {
    let mut iters = 0u32;
    let mut a = lo;
    let mut fa = f(a)?;
    if fa == 0.0 {
        return Ok((a, 0.0, iters));
    }
    let mut bracket: Option<(f64, f64, f64, f64)> = None;
    for k in 1..SCAN_POINTS {
        let b = lo + (hi - lo) * k as f64 / (SCAN_POINTS - 1) as f64;
        let fb = f(b)?;
        iters += 1;
        if fb == 0.0 {
            return Ok((b, 0.0, iters));
        }
        if fa.signum() != fb.signum() {
            bracket = Some((a, b, fa, fb));
            break;
        }
        a = b;
        fa = fb;
    }
    let (mut a, mut b, mut fa, mut fb) = bracket.ok_or(Error::NoBracket {
        lo,
        hi,
        f_lo: f(lo)?,
        f_hi: f(hi)?,
    })?;

    let mut side = 0i8;
    while b - a > tol {
        if iters >= MAX_REFINE {
            return Err(Error::Numerical {
                context: "contact-angle refinement exceeded the iteration budget".into(),
                achieved: b - a,
                requested: tol,
            });
        }
        let mut m = b - fb * (b - a) / (fb - fa);
        let margin = 0.01 * (b - a);
        if !(m > a + margin && m < b - margin) {
            m = 0.5 * (a + b);
        }
        let fm = f(m)?;
        iters += 1;
        if fm == 0.0 {
            return Ok((m, 0.0, iters));
        }
        if fm.signum() == fb.signum() {
            b = m;
            fb = fm;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        } else {
            a = m;
            fa = fm;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        }
    }
    // Final secant estimate inside the closing bracket.
    let theta = (b - fb * (b - a) / (fb - fa)).clamp(a, b);
    let residual = f(theta)?;
    Ok((theta, residual, iters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::halfspace_exterior_integral;
    use crate::kernel::AngularProfile;

    fn iso(s: f64) -> FractionalKernel {
        FractionalKernel::isotropic(2, s).unwrap()
    }

    #[test]
    fn right_angle_matches_halfspace_identity() {
        // At θ = π/2 the wedge curvature equals the exterior-halfspace
        // integral at the evaluation point's wall distance, which is the
        // σ = 0 contact-angle balance.
        let k = iso(0.5);
        let geom = WedgeGeometry::new(2, PI / 2.0, 1.0).unwrap();
        let nmc = wedge_nmc(&k, &geom).unwrap();
        let ext = halfspace_exterior_integral(&k, 1.0).unwrap();
        assert!(
            ((nmc - ext) / ext).abs() < 1e-9,
            "nmc {nmc} vs exterior {ext}"
        );
    }

    #[test]
    fn nmc_vanishes_as_wedge_opens_to_halfspace() {
        let k = iso(0.5);
        let mut prev = f64::INFINITY;
        for theta in [2.0, 2.6, 3.0, 3.1, PI - 1e-6] {
            let geom = WedgeGeometry::new(2, theta, 1.0).unwrap();
            let v = wedge_nmc(&k, &geom).unwrap();
            assert!(v >= 0.0 && v < prev, "theta {theta}: {v}");
            prev = v;
        }
        assert!(prev < 1e-5, "near-halfspace curvature {prev}");
    }

    #[test]
    fn nmc_scales_with_apex_distance() {
        let k = iso(0.3);
        let theta = 2.0 * PI / 3.0;
        let at = |rho: f64| {
            wedge_nmc(&k, &WedgeGeometry::new(2, theta, rho).unwrap()).unwrap()
        };
        let base = at(1.0);
        for rho in [0.5, 2.0, 4.0] {
            assert!(((at(rho) / base) - rho.powf(-0.3)).abs() < 1e-10);
        }
    }

    #[test]
    fn rejects_degenerate_wedge() {
        assert!(WedgeGeometry::new(2, 0.0, 1.0).is_err());
        assert!(WedgeGeometry::new(2, PI, 1.0).is_err());
        assert!(WedgeGeometry::new(2, 1.0, 0.0).is_err());
    }

    #[test]
    fn residual_at_sigma_one_is_curvature_alone() {
        let problem = ContactAngleProblem::single_kernel(iso(0.5), 1.0).unwrap();
        let theta = 1.9;
        let res = young_residual(&problem, theta).unwrap();
        let nmc = wedge_nmc(
            &iso(0.5),
            &WedgeGeometry::new(2, theta, 1.0).unwrap(),
        )
        .unwrap();
        assert!((res - nmc).abs() < 1e-11 * nmc.abs().max(1.0));
    }

    #[test]
    fn residual_positive_at_right_angle_for_positive_sigma() {
        let problem = ContactAngleProblem::single_kernel(iso(0.5), 0.3).unwrap();
        let res = young_residual(&problem, PI / 2.0).unwrap();
        assert!(res > 0.0, "residual {res}");
        // The root therefore sits beyond π/2.
        let sol = solve_contact_angle(&problem, 1e-6).unwrap();
        assert!(sol.theta.unwrap() > PI / 2.0);
    }

    #[test]
    fn residual_strictly_decreasing() {
        for s in [0.25, 0.5, 0.75] {
            let problem = ContactAngleProblem::single_kernel(iso(s), 0.3).unwrap();
            let mut prev = f64::INFINITY;
            for k in 0..50 {
                let theta = 0.02 + (PI - 0.04) * k as f64 / 49.0;
                let r = young_residual(&problem, theta).unwrap();
                assert!(r < prev, "s = {s}, theta = {theta}");
                prev = r;
            }
        }
    }

    #[test]
    fn symmetric_wetting_solves_to_right_angle() {
        for s in [0.1, 0.5, 0.9] {
            let problem = ContactAngleProblem::single_kernel(iso(s), 0.0).unwrap();
            let sol = solve_contact_angle(&problem, 1e-6).unwrap();
            assert_eq!(sol.regime, Regime::Interior);
            let theta = sol.theta.unwrap();
            assert!((theta - PI / 2.0).abs() < 1e-4, "s = {s}: {theta}");
            assert!(sol.residual.abs() < 1e-6);
        }
    }

    #[test]
    fn endpoint_adhesion_is_symbolic() {
        let p0 = ContactAngleProblem::single_kernel(iso(0.4), -1.0).unwrap();
        let sol0 = solve_contact_angle(&p0, 1e-6).unwrap();
        assert_eq!(sol0.regime, Regime::DegenerateZero);
        assert_eq!(sol0.theta, Some(0.0));
        let p1 = ContactAngleProblem::single_kernel(iso(0.4), 1.0).unwrap();
        let sol1 = solve_contact_angle(&p1, 1e-6).unwrap();
        assert_eq!(sol1.regime, Regime::DegeneratePi);
        assert_eq!(sol1.theta, Some(PI));
    }

    #[test]
    fn regime_classification_of_mixed_exponents() {
        let mk = |s1: f64, s2: f64, sigma: f64| {
            ContactAngleProblem::two_kernels(iso(s1), iso(s2), sigma).unwrap()
        };
        assert_eq!(
            classify_regime(&mk(0.3, 0.7, -0.5)).unwrap(),
            Regime::DegenerateZero
        );
        assert_eq!(
            classify_regime(&mk(0.3, 0.7, 0.5)).unwrap(),
            Regime::DegeneratePi
        );
        assert_eq!(classify_regime(&mk(0.7, 0.3, 0.9)).unwrap(), Regime::Interior);
        assert_eq!(classify_regime(&mk(0.3, 0.7, 0.0)).unwrap(), Regime::Interior);
    }

    #[test]
    fn equal_kernels_have_unit_threshold() {
        let problem = ContactAngleProblem::single_kernel(iso(0.5), 0.3).unwrap();
        let t = sigma_threshold(&problem).unwrap();
        assert!((t - 1.0).abs() < 1e-8, "threshold {t}");
    }

    #[test]
    fn constant_profiles_scale_threshold() {
        use std::sync::Arc;
        let two = AngularProfile::Custom {
            f: Arc::new(|_: &[f64]| 2.0),
            isotropic: true,
        };
        let k1 = FractionalKernel::new(2, 0.5, two).unwrap();
        let k2 = iso(0.5);
        let problem = ContactAngleProblem::two_kernels(k1, k2, 0.3).unwrap();
        let t = sigma_threshold(&problem).unwrap();
        assert!((t - 2.0).abs() < 1e-10, "threshold {t}");
    }

    #[test]
    fn threshold_requires_equal_exponents() {
        let problem = ContactAngleProblem::two_kernels(iso(0.4), iso(0.6), 0.2).unwrap();
        assert!(sigma_threshold(&problem).is_err());
    }

    #[test]
    fn above_threshold_reports_regime_without_angle() {
        use std::sync::Arc;
        let half = AngularProfile::Custom {
            f: Arc::new(|_: &[f64]| 0.5),
            isotropic: true,
        };
        let k1 = FractionalKernel::new(2, 0.5, half).unwrap();
        let k2 = iso(0.5);
        // Threshold is 0.5; sigma = 0.8 exceeds it.
        let problem = ContactAngleProblem::two_kernels(k1, k2, 0.8).unwrap();
        let sol = solve_contact_angle(&problem, 1e-6).unwrap();
        assert_eq!(sol.regime, Regime::OutsideThreshold);
        assert!(sol.theta.is_none());
    }

    #[test]
    fn dominant_liquid_gas_kernel_with_flat_profile_gives_right_angle() {
        let problem = ContactAngleProblem::two_kernels(iso(0.7), iso(0.3), 0.5).unwrap();
        let sol = solve_contact_angle(&problem, 1e-6).unwrap();
        assert_eq!(sol.regime, Regime::Interior);
        assert!((sol.theta.unwrap() - PI / 2.0).abs() < 1e-3);
    }

    #[test]
    fn root_is_independent_of_apex_distance() {
        let problem = ContactAngleProblem::single_kernel(iso(0.5), 0.3).unwrap();
        let tol = 1e-6;
        let t1 = solve_contact_angle_at(&problem, tol, 1.0)
            .unwrap()
            .theta
            .unwrap();
        let t2 = solve_contact_angle_at(&problem, tol, 2.0)
            .unwrap()
            .theta
            .unwrap();
        assert!((t1 - t2).abs() < 2.0 * tol, "{t1} vs {t2}");
    }

    #[test]
    fn complement_symmetry_of_the_angle() {
        for (s, sigma) in [(0.25, 0.5), (0.5, 0.3), (0.75, 0.8)] {
            let tol = 1e-7;
            let plus = solve_contact_angle(
                &ContactAngleProblem::single_kernel(iso(s), sigma).unwrap(),
                tol,
            )
            .unwrap()
            .theta
            .unwrap();
            let minus = solve_contact_angle(
                &ContactAngleProblem::single_kernel(iso(s), -sigma).unwrap(),
                tol,
            )
            .unwrap()
            .theta
            .unwrap();
            assert!(
                (plus + minus - PI).abs() < 2e-4,
                "s = {s}, sigma = {sigma}: {plus} + {minus}"
            );
        }
    }

    #[test]
    fn angle_increases_with_adhesion_coefficient() {
        for s in [0.25, 0.5, 0.75] {
            let mut prev = -1.0;
            for sigma in [-0.9, -0.5, 0.0, 0.5, 0.9] {
                let sol = solve_contact_angle(
                    &ContactAngleProblem::single_kernel(iso(s), sigma).unwrap(),
                    1e-6,
                )
                .unwrap();
                let theta = sol.theta.unwrap();
                assert!(theta > prev, "s = {s}, sigma = {sigma}");
                prev = theta;
            }
        }
    }
}
