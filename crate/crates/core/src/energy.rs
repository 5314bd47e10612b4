//! Discrete interaction energies on the lattice.
//!
//! Pair energies use the midpoint rule `K(c_x - c_y) h⁴` per cell pair, with
//! a 4×4 subcell refinement for pairs closer than `2h` where the midpoint
//! rule misestimates the near-singular kernel. Pair values depend only on the
//! cell offset, so they are tabulated once per grid and kernel. Interactions
//! with the solid exterior split into the summed in-box part and an analytic
//! tail for mass beyond the box, keeping the truncation error of the
//! heavy-tailed kernel out of the energy.

use crate::error::{Error, Result};
use crate::grid::{Cell, ContainerKind, DropletState, GridDomain};
use crate::integrals::{
    halfspace_exterior_reduced, rect_complement_integral, rect_integral, Rect,
};
use crate::kernel::{reduce_profile, FractionalKernel};
use crate::wedge::ContactAngleProblem;

/// Near-pair cutoff in units of `h`.
const NEAR_CUTOFF: f64 = 2.0;
/// Subcells per axis used to refine near pairs.
const REFINE: usize = 4;

/// Compensated accumulator (Neumaier variant).
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Offset-indexed table of cell-pair interaction energies `∬ K` (midpoint
/// with near refinement), including the `h⁴` measure.
#[derive(Debug, Clone)]
pub struct PairTable {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl PairTable {
    pub fn build(grid: &GridDomain, kernel: &FractionalKernel) -> Result<Self> {
        if kernel.dim() != 2 {
            return Err(Error::domain(format!(
                "lattice energies are planar; kernel has dimension {}",
                kernel.dim()
            )));
        }
        let (w, hc) = (grid.width(), grid.height());
        let h = grid.spacing();
        let mut values = vec![0.0; (2 * w - 1) * (2 * hc - 1)];
        for dj in -(hc as isize - 1)..hc as isize {
            for di in -(w as isize - 1)..w as isize {
                let idx = ((dj + hc as isize - 1) as usize) * (2 * w - 1)
                    + (di + w as isize - 1) as usize;
                values[idx] = pair_energy(kernel, h, di, dj)?;
            }
        }
        Ok(PairTable {
            width: w,
            height: hc,
            values,
        })
    }

    #[inline]
    pub fn get(&self, a: Cell, b: Cell) -> f64 {
        let di = b.0 as isize - a.0 as isize + self.width as isize - 1;
        let dj = b.1 as isize - a.1 as isize + self.height as isize - 1;
        self.values[dj as usize * (2 * self.width - 1) + di as usize]
    }
}

fn pair_energy(kernel: &FractionalKernel, h: f64, di: isize, dj: isize) -> Result<f64> {
    if di == 0 && dj == 0 {
        return Ok(0.0);
    }
    let dx = di as f64 * h;
    let dy = dj as f64 * h;
    let dist = (dx * dx + dy * dy).sqrt();
    if dist > NEAR_CUTOFF * h {
        return Ok(kernel.eval(&[dx, dy])? * h.powi(4));
    }
    // 4×4 subcells in both cells: 256 kernel samples at sub-center offsets.
    let sub = h / REFINE as f64;
    let mut acc = 0.0;
    for ax in 0..REFINE {
        for ay in 0..REFINE {
            for bx in 0..REFINE {
                for by in 0..REFINE {
                    let ox = dx + (bx as f64 - ax as f64) * sub;
                    let oy = dy + (by as f64 - ay as f64) * sub;
                    acc += kernel.eval(&[ox, oy])?;
                }
            }
        }
    }
    Ok(acc * sub.powi(4))
}

/// Point-set interaction `I(X, Y)` between disjoint cell sets.
pub fn interaction_energy(
    grid: &GridDomain,
    x_cells: &[Cell],
    y_cells: &[Cell],
    kernel: &FractionalKernel,
) -> Result<f64> {
    let table = PairTable::build(grid, kernel)?;
    interaction_energy_with(&table, x_cells, y_cells)
}

/// As [`interaction_energy`] with a prebuilt pair table.
pub fn interaction_energy_with(
    table: &PairTable,
    x_cells: &[Cell],
    y_cells: &[Cell],
) -> Result<f64> {
    let overlap = {
        let set: std::collections::HashSet<Cell> = x_cells.iter().copied().collect();
        y_cells.iter().any(|c| set.contains(c))
    };
    if overlap {
        return Err(Error::domain("interaction sets must be disjoint"));
    }
    let mut acc = KahanSum::default();
    for &x in x_cells {
        for &y in y_cells {
            acc.add(table.get(x, y));
        }
    }
    Ok(acc.value())
}

/// Liquid-gas / liquid-solid split of the capillarity energy.
#[derive(Debug, Clone, Copy)]
pub struct EnergyBreakdown {
    pub liquid_gas: f64,
    pub liquid_solid: f64,
    pub total: f64,
}

/// Precomputed tables for repeated energy evaluations on one grid.
///
/// The liquid-gas term pairs droplet cells with the container cells of the
/// box and adds, per droplet cell, the analytic interaction with the
/// container beyond the box: the gas phase does not stop at the window
/// edge, and without that tail the window edges would act as spurious
/// adhesive walls. The liquid-solid term likewise sums the in-box exterior
/// cells and closes the remainder analytically. Both tails are
/// state-independent per-cell weights, so move deltas stay `O(box)`.
pub struct EnergyModel<'a> {
    grid: &'a GridDomain,
    sigma: f64,
    table1: PairTable,
    /// Per-cell interaction with the solid exterior (in-box sum plus
    /// analytic beyond-box tail), `h⁴`-weighted like the pair table.
    solid_weight: Vec<f64>,
    /// Per-cell interaction with the container (gas phase) beyond the box,
    /// `h⁴`-weighted.
    gas_tail: Vec<f64>,
}

impl<'a> EnergyModel<'a> {
    pub fn new(grid: &'a GridDomain, problem: &ContactAngleProblem) -> Result<Self> {
        let table1 = PairTable::build(grid, problem.kernel1())?;
        let table2 = if problem.is_single_kernel() {
            None
        } else {
            Some(PairTable::build(grid, problem.kernel2())?)
        };
        let solid_weight =
            solid_weights(grid, problem.kernel2(), table2.as_ref().unwrap_or(&table1))?;
        let gas_tail = gas_tails(grid, problem.kernel1())?;
        Ok(EnergyModel {
            grid,
            sigma: problem.sigma(),
            table1,
            solid_weight,
            gas_tail,
        })
    }

    pub fn grid(&self) -> &GridDomain {
        self.grid
    }

    pub fn pair_table(&self) -> &PairTable {
        &self.table1
    }

    /// Interaction of one cell with the entire solid exterior.
    pub fn solid_weight(&self, cell: Cell) -> f64 {
        self.solid_weight[self.grid.idx(cell)]
    }

    /// Interaction of one cell with the gas phase beyond the box.
    pub fn gas_tail(&self, cell: Cell) -> f64 {
        self.gas_tail[self.grid.idx(cell)]
    }

    /// Full capillarity energy of a state.
    pub fn capillarity_energy(&self, state: &DropletState) -> EnergyBreakdown {
        let mut gas = KahanSum::default();
        let mut solid = KahanSum::default();
        let droplet: Vec<Cell> = state.cells().collect();
        for &x in &droplet {
            for y in self.grid.container_cells() {
                if !state.contains(y) {
                    gas.add(self.table1.get(x, y));
                }
            }
            gas.add(self.gas_tail(x));
            solid.add(self.solid_weight(x));
        }
        let liquid_gas = gas.value();
        let liquid_solid = solid.value();
        EnergyBreakdown {
            liquid_gas,
            liquid_solid,
            total: liquid_gas + self.sigma * liquid_solid,
        }
    }

    /// Energy change of the volume-preserving swap `remove -> add`, computed
    /// from pair sums touching only the two flipped cells.
    pub fn move_delta(&self, state: &DropletState, remove: Cell, add: Cell) -> f64 {
        debug_assert!(state.contains(remove) && !state.contains(add));
        let mut linear = KahanSum::default();
        let mut cross = KahanSum::default();
        for y in self.grid.container_cells() {
            linear.add(self.table1.get(add, y) - self.table1.get(remove, y));
            if state.contains(y) {
                cross.add(self.table1.get(y, add) - self.table1.get(y, remove));
            }
        }
        let gas_delta = linear.value() - 2.0 * cross.value()
            + 2.0 * self.table1.get(add, remove)
            + self.gas_tail(add)
            - self.gas_tail(remove);
        gas_delta + self.sigma * (self.solid_weight(add) - self.solid_weight(remove))
    }
}

/// Solid and gas tail regions for one cell, by container kind:
/// the solid tail closes `R² \ Ω` beyond the box, the gas tail closes
/// `Ω` beyond the box.
fn beyond_box_tails(
    grid: &GridDomain,
    red: &crate::kernel::ReducedProfile,
    c: f64,
    center: [f64; 2],
) -> Result<(f64, f64)> {
    let h = grid.spacing();
    match grid.kind() {
        ContainerKind::Full => {
            // No solid anywhere; the whole beyond-box plane is container.
            let gas = rect_complement_integral(red, c, center, &grid.box_rect())?;
            Ok((0.0, gas))
        }
        ContainerKind::Halfplane { wall_row } => {
            // Solid beyond the box: the lower halfplane minus its in-box
            // slab. Gas beyond the box: the rest of the box complement.
            let wall = wall_row as f64 * h;
            let d = center[1] - wall;
            let slab = Rect {
                x0: 0.0,
                x1: grid.width() as f64 * h,
                y0: 0.0,
                y1: wall,
            };
            let solid =
                halfspace_exterior_reduced(red, c, d)? - rect_integral(red, c, center, &slab)?;
            let gas = rect_complement_integral(red, c, center, &grid.box_rect())? - solid;
            Ok((solid, gas))
        }
        ContainerKind::RectBox { .. } => {
            // Everything beyond the box is solid; the container is inside.
            let solid = rect_complement_integral(red, c, center, &grid.box_rect())?;
            Ok((solid, 0.0))
        }
    }
}

/// Per-cell solid interaction: summed pairs with in-box exterior cells plus
/// the analytic tail over the exterior beyond the box.
fn solid_weights(
    grid: &GridDomain,
    kernel2: &FractionalKernel,
    table2: &PairTable,
) -> Result<Vec<f64>> {
    let mut weights = vec![0.0; grid.width() * grid.height()];
    if matches!(grid.kind(), ContainerKind::Full) {
        return Ok(weights);
    }
    let red = reduce_profile(kernel2)?;
    let c = kernel2.normalization();
    let h = grid.spacing();
    let exterior: Vec<Cell> = grid.exterior_cells().collect();
    for cell in grid.container_cells() {
        let mut acc = KahanSum::default();
        for &y in &exterior {
            acc.add(table2.get(cell, y));
        }
        let center = grid.cell_center(cell);
        let (solid_tail, _) = beyond_box_tails(grid, &red, c, center)?;
        weights[grid.idx(cell)] = acc.value() + h * h * solid_tail;
    }
    Ok(weights)
}

/// Per-cell gas-phase tail beyond the box for the liquid-gas kernel.
fn gas_tails(grid: &GridDomain, kernel1: &FractionalKernel) -> Result<Vec<f64>> {
    let mut weights = vec![0.0; grid.width() * grid.height()];
    if matches!(grid.kind(), ContainerKind::RectBox { .. }) {
        return Ok(weights);
    }
    let red = reduce_profile(kernel1)?;
    let c = kernel1.normalization();
    let h = grid.spacing();
    for cell in grid.container_cells() {
        let center = grid.cell_center(cell);
        let (_, gas_tail) = beyond_box_tails(grid, &red, c, center)?;
        weights[grid.idx(cell)] = h * h * gas_tail;
    }
    Ok(weights)
}
