//! Volume-constrained droplet minimization by annealed boundary swaps.
//!
//! Moves exchange one droplet boundary cell for one gas cell adjacent to the
//! droplet, so the cell count is conserved exactly and no volume multiplier
//! is needed. Energy deltas come from the incremental pair sums in
//! [`crate::energy`], `O(box)` per proposal. The temperature ladder starts at
//! ten times the median probe-move delta unless overridden, and the chain is
//! fully determined by the seed.

use crate::energy::{EnergyBreakdown, EnergyModel};
use crate::error::{Error, Result};
use crate::grid::{Cell, DropletState, GridDomain};
use crate::wedge::ContactAngleProblem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Annealing parameters. `initial_temperature = None` calibrates from probe
/// moves.
#[derive(Debug, Clone, Copy)]
pub struct AnnealSchedule {
    pub initial_temperature: Option<f64>,
    pub cooling_factor: f64,
    pub steps_per_level: usize,
    pub levels: usize,
    pub rng_seed: u64,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        // With the probe-calibrated start at 10x the median move scale, a
        // 0.95 ladder over 60 levels still ends near half the move scale and
        // leaves a thermal state; 0.90 ends around 0.2% of the start and
        // freezes the chain before the polish phase.
        AnnealSchedule {
            initial_temperature: None,
            cooling_factor: 0.90,
            steps_per_level: 2000,
            levels: 60,
            rng_seed: 1,
        }
    }
}

impl AnnealSchedule {
    fn validate(&self) -> Result<()> {
        if !(self.cooling_factor > 0.0 && self.cooling_factor < 1.0) {
            return Err(Error::domain(format!(
                "cooling factor {} outside (0, 1)",
                self.cooling_factor
            )));
        }
        if self.steps_per_level == 0 || self.levels == 0 {
            return Err(Error::domain("steps_per_level and levels must be positive"));
        }
        if let Some(t) = self.initial_temperature {
            if !(t > 0.0) {
                return Err(Error::domain(format!("initial temperature {t} must be positive")));
            }
        }
        Ok(())
    }
}

/// Minimization output: best-seen state, its energy, and the monotone
/// best-energy trace `(step, best_total)`.
#[derive(Debug, Clone)]
pub struct MinimizeResult {
    pub state: DropletState,
    pub energy: EnergyBreakdown,
    pub trace: Vec<(u64, f64)>,
    pub proposed: u64,
    pub accepted: u64,
    pub initial_temperature: f64,
}

/// Deterministic initial droplet: the `m` container cells closest to a seed
/// point (the wall center for halfplane containers, the container center
/// otherwise), ties broken by cell index.
pub fn initial_state(grid: &GridDomain, m: usize) -> Result<DropletState> {
    let capacity = grid.container_cell_count();
    if m > capacity {
        return Err(Error::domain(format!(
            "volume {m} exceeds container capacity {capacity}"
        )));
    }
    let seed_point = match grid.wall_y() {
        Some(wall) => [grid.width() as f64 * grid.spacing() * 0.5, wall],
        None => [
            grid.width() as f64 * grid.spacing() * 0.5,
            grid.height() as f64 * grid.spacing() * 0.5,
        ],
    };
    let mut cells: Vec<Cell> = grid.container_cells().collect();
    cells.sort_by(|&a, &b| {
        let da = dist2(grid.cell_center(a), seed_point);
        let db = dist2(grid.cell_center(b), seed_point);
        da.partial_cmp(&db)
            .unwrap()
            .then(a.1.cmp(&b.1))
            .then(a.0.cmp(&b.0))
    });
    DropletState::from_cells(grid, cells.into_iter().take(m))
}

fn dist2(a: [f64; 2], b: [f64; 2]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    dx * dx + dy * dy
}

/// Minimize the capillarity energy at fixed cell count `m`.
pub fn minimize(
    grid: &GridDomain,
    m: usize,
    problem: &ContactAngleProblem,
    schedule: &AnnealSchedule,
) -> Result<MinimizeResult> {
    schedule.validate()?;
    let model = EnergyModel::new(grid, problem)?;
    let mut state = initial_state(grid, m)?;
    let start = model.capillarity_energy(&state);
    let mut trace = vec![(0u64, start.total)];

    let mut rng = ChaCha8Rng::seed_from_u64(schedule.rng_seed);
    let propose = |state: &DropletState, rng: &mut ChaCha8Rng| -> Option<(Cell, Cell)> {
        let boundary = state.boundary_cells(grid);
        let frontier = state.frontier_cells(grid);
        if boundary.is_empty() || frontier.is_empty() {
            return None;
        }
        let b = boundary[rng.gen_range(0..boundary.len())];
        let f = frontier[rng.gen_range(0..frontier.len())];
        Some((b, f))
    };

    // Probe the move-scale to calibrate the starting temperature.
    let t0 = match schedule.initial_temperature {
        Some(t) => t,
        None => {
            let mut probes = Vec::with_capacity(100);
            for _ in 0..100 {
                if let Some((b, f)) = propose(&state, &mut rng) {
                    probes.push(model.move_delta(&state, b, f).abs());
                }
            }
            if probes.is_empty() {
                // No admissible moves (empty or full container): done.
                return Ok(MinimizeResult {
                    state,
                    energy: start,
                    trace,
                    proposed: 0,
                    accepted: 0,
                    initial_temperature: 0.0,
                });
            }
            probes.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let median = probes[probes.len() / 2];
            (10.0 * median).max(f64::MIN_POSITIVE)
        }
    };

    let mut current = start.total;
    let mut best = current;
    let mut best_state = state.clone();
    let mut temperature = t0;
    let mut proposed = 0u64;
    let mut accepted = 0u64;
    let mut step = 0u64;

    for _level in 0..schedule.levels {
        for _ in 0..schedule.steps_per_level {
            step += 1;
            let Some((b, f)) = propose(&state, &mut rng) else {
                break;
            };
            proposed += 1;
            let delta = model.move_delta(&state, b, f);
            let accept = delta <= 0.0 || rng.gen::<f64>() < (-delta / temperature).exp();
            if accept {
                state.set(b, false);
                state.set(f, true);
                accepted += 1;
                current += delta;
                if current < best {
                    best = current;
                    best_state = state.clone();
                    trace.push((step, best));
                }
            }
            debug_assert_eq!(state.volume_cells(), m, "volume must be conserved");
        }
        temperature *= schedule.cooling_factor;
    }

    // Zero-temperature polish: deterministic first-improvement sweeps over
    // boundary/frontier swaps until the best state is locally optimal, so
    // the returned droplet is a genuine discrete critical point.
    let mut polish_sweeps = 0usize;
    loop {
        polish_sweeps += 1;
        let boundary = best_state.boundary_cells(grid);
        let frontier = best_state.frontier_cells(grid);
        let mut improved = false;
        for &b in &boundary {
            for &f in &frontier {
                // Revalidate against the current state: earlier swaps in the
                // sweep may have changed either side of the interface.
                let b_ok = best_state.contains(b)
                    && grid
                        .neighbors4(b)
                        .any(|nb| grid.in_container(nb) && !best_state.contains(nb));
                let f_ok = !best_state.contains(f)
                    && grid.neighbors4(f).any(|nb| best_state.contains(nb));
                if !b_ok || !f_ok {
                    continue;
                }
                let delta = model.move_delta(&best_state, b, f);
                if delta < -1e-12 {
                    best_state.set(b, false);
                    best_state.set(f, true);
                    best += delta;
                    step += 1;
                    trace.push((step, best));
                    improved = true;
                }
            }
        }
        debug_assert_eq!(best_state.volume_cells(), m, "volume must be conserved");
        if !improved || polish_sweeps >= 200 {
            break;
        }
    }

    // Refresh the reported energy of the best state by full recomputation,
    // shedding the accumulated incremental drift.
    let energy = model.capillarity_energy(&best_state);
    Ok(MinimizeResult {
        state: best_state,
        energy,
        trace,
        proposed,
        accepted,
        initial_temperature: t0,
    })
}
