//! Adaptive one-dimensional quadrature.
//!
//! A Gauss–Kronrod 7/15 rule drives globally adaptive bisection: the panel
//! with the largest error estimate is split until the summed estimate meets
//! the tolerance. Callers that integrate endpoint singularities of the form
//! `x^s` pass geometrically graded breakpoints via [`QuadOptions::breakpoints`]
//! (see [`graded_toward`]); the adaptive loop then only has to clean up.

use crate::error::{Error, Result};
use std::collections::BinaryHeap;

/// Kronrod-15 abscissae on [0, 1] side of the symmetric rule.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];

/// Kronrod-15 weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Embedded Gauss-7 weights (abscissae are XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            rel_tol: 1e-11,
            abs_tol: 1e-14,
            max_panels: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub evals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let fsum = f(mid - dx) + f(mid + dx);
        kronrod += WGK[i] * fsum;
        if i % 2 == 1 {
            gauss += WG[i / 2] * fsum;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Panel { a, b, value, error }
}

/// Integrate `f` on `[a, b]`. `breakpoints` must lie strictly inside the
/// interval and be sorted; they seed the initial panel decomposition.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    opts: QuadOptions,
) -> Result<QuadResult> {
    if !(a < b) {
        if a == b {
            return Ok(QuadResult {
                value: 0.0,
                abs_error: 0.0,
                evals: 0,
            });
        }
        return Err(Error::domain(format!("integration bounds out of order: [{a}, {b}]")));
    }

    let mut heap: BinaryHeap<Panel> = BinaryHeap::new();
    let mut evals = 0usize;
    let mut total = 0.0;
    let mut err = 0.0;
    let push = |heap: &mut BinaryHeap<Panel>, p: Panel, total: &mut f64, err: &mut f64| {
        *total += p.value;
        *err += p.error;
        heap.push(p);
    };

    let mut lo = a;
    for &p in breakpoints.iter().filter(|&&p| p > a && p < b) {
        push(&mut heap, gk15(&f, lo, p), &mut total, &mut err);
        evals += 15;
        lo = p;
    }
    push(&mut heap, gk15(&f, lo, b), &mut total, &mut err);
    evals += 15;

    let mut panels = heap.len();
    loop {
        let target = opts.abs_tol.max(opts.rel_tol * total.abs());
        if err <= target {
            // Resum once to shed drift from the incremental bookkeeping.
            let value: f64 = heap.iter().map(|p| p.value).sum();
            let abs_error: f64 = heap.iter().map(|p| p.error).sum();
            return Ok(QuadResult {
                value,
                abs_error,
                evals,
            });
        }
        if panels >= opts.max_panels {
            return Err(Error::Numerical {
                context: "adaptive quadrature ran out of panels".into(),
                achieved: err,
                requested: target,
            });
        }
        let worst = heap.pop().expect("heap nonempty");
        total -= worst.value;
        err -= worst.error;
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval at floating-point resolution; keep its estimate.
            let mut kept = worst;
            kept.error = 0.0;
            push(&mut heap, kept, &mut total, &mut err);
            continue;
        }
        push(&mut heap, gk15(&f, worst.a, mid), &mut total, &mut err);
        push(&mut heap, gk15(&f, mid, worst.b), &mut total, &mut err);
        evals += 30;
        panels += 1;
    }
}

/// Geometric breakpoints accumulating toward `end` (one of the interval
/// endpoints), halving the distance `levels` times. Used to grade panels into
/// an endpoint where the integrand behaves like a fractional power.
pub fn graded_toward(a: f64, b: f64, end: f64, levels: u32) -> Vec<f64> {
    let other = if end == a { b } else { a };
    let mut pts: Vec<f64> = (1..=levels)
        .map(|k| end + (other - end) * 0.5f64.powi(k as i32))
        .collect();
    pts.retain(|&p| p > a.min(b) && p < a.max(b));
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pts.dedup();
    pts
}

/// Breakpoints graded into both endpoints of `[a, b]`.
pub fn graded_both(a: f64, b: f64, levels: u32) -> Vec<f64> {
    let mut pts = graded_toward(a, b, a, levels);
    pts.extend(graded_toward(a, b, b, levels));
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pts.dedup();
    pts
}
