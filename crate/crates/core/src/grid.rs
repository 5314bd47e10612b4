//! 2D lattice container domains and droplet occupancy states.
//!
//! The box is a `width × height` cell lattice with spacing `h`; cell `(i, j)`
//! has center `((i+0.5)h, (j+0.5)h)` with `j = 0` the bottom row. Container
//! cells are the part of `Ω` inside the box; the rest of the box is exterior
//! (solid) and everything beyond the box is handled analytically by the
//! energy tails.

use crate::error::{Error, Result};
use crate::integrals::Rect;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Built-in container geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContainerKind {
    /// Solid fills everything below row `wall_row`; container above.
    Halfplane { wall_row: usize },
    /// Rectangular container block surrounded by solid on all sides.
    RectBox {
        i0: usize,
        j0: usize,
        w: usize,
        h: usize,
    },
    /// No solid at all: the whole plane is container.
    Full,
}

#[derive(Debug, Clone)]
pub struct GridDomain {
    h: f64,
    width: usize,
    height: usize,
    kind: ContainerKind,
    container: Vec<bool>,
}

pub type Cell = (usize, usize);

impl GridDomain {
    /// Halfplane container: a wall `margin` rows above the box bottom, solid
    /// below, container everywhere above. The box is sized from the nominal
    /// container extent plus a margin of at least half its diameter.
    pub fn halfplane(container_w: usize, container_h: usize, margin: usize, h: f64) -> Result<Self> {
        check_extents(container_w, container_h, margin, h)?;
        let width = container_w + 2 * margin;
        let height = container_h + 2 * margin;
        let mut container = vec![false; width * height];
        for j in margin..height {
            for i in 0..width {
                container[j * width + i] = true;
            }
        }
        Ok(GridDomain {
            h,
            width,
            height,
            kind: ContainerKind::Halfplane { wall_row: margin },
            container,
        })
    }

    /// Rectangular container block with solid margin on every side.
    pub fn rect_box(container_w: usize, container_h: usize, margin: usize, h: f64) -> Result<Self> {
        check_extents(container_w, container_h, margin, h)?;
        let width = container_w + 2 * margin;
        let height = container_h + 2 * margin;
        let mut container = vec![false; width * height];
        for j in margin..margin + container_h {
            for i in margin..margin + container_w {
                container[j * width + i] = true;
            }
        }
        Ok(GridDomain {
            h,
            width,
            height,
            kind: ContainerKind::RectBox {
                i0: margin,
                j0: margin,
                w: container_w,
                h: container_h,
            },
            container,
        })
    }

    /// Container covering the whole plane; the box is just the computation
    /// window. Used by the classical-limit diagnostics.
    pub fn full(width: usize, height: usize, h: f64) -> Result<Self> {
        if width == 0 || height == 0 || !(h > 0.0) {
            return Err(Error::domain("grid extents and spacing must be positive"));
        }
        Ok(GridDomain {
            h,
            width,
            height,
            kind: ContainerKind::Full,
            container: vec![true; width * height],
        })
    }

    pub fn spacing(&self) -> f64 {
        self.h
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn kind(&self) -> ContainerKind {
        self.kind
    }

    #[inline]
    pub fn idx(&self, cell: Cell) -> usize {
        cell.1 * self.width + cell.0
    }

    #[inline]
    pub fn in_container(&self, cell: Cell) -> bool {
        self.container[self.idx(cell)]
    }

    pub fn cell_center(&self, cell: Cell) -> [f64; 2] {
        [
            (cell.0 as f64 + 0.5) * self.h,
            (cell.1 as f64 + 0.5) * self.h,
        ]
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.height).flat_map(move |j| (0..self.width).map(move |i| (i, j)))
    }

    pub fn container_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells().filter(move |&c| self.in_container(c))
    }

    pub fn exterior_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells().filter(move |&c| !self.in_container(c))
    }

    pub fn container_cell_count(&self) -> usize {
        self.container.iter().filter(|&&b| b).count()
    }

    /// Physical rectangle spanned by the box.
    pub fn box_rect(&self) -> Rect {
        Rect {
            x0: 0.0,
            x1: self.width as f64 * self.h,
            y0: 0.0,
            y1: self.height as f64 * self.h,
        }
    }

    /// Wall height for halfplane containers.
    pub fn wall_y(&self) -> Option<f64> {
        match self.kind {
            ContainerKind::Halfplane { wall_row } => Some(wall_row as f64 * self.h),
            _ => None,
        }
    }

    /// Distance from a container cell's center to the container boundary
    /// `∂Ω`; infinite for the full-plane container.
    pub fn distance_to_wall(&self, cell: Cell) -> f64 {
        let c = self.cell_center(cell);
        match self.kind {
            ContainerKind::Full => f64::INFINITY,
            ContainerKind::Halfplane { wall_row } => c[1] - wall_row as f64 * self.h,
            ContainerKind::RectBox { i0, j0, w, h } => {
                let x0 = i0 as f64 * self.h;
                let x1 = (i0 + w) as f64 * self.h;
                let y0 = j0 as f64 * self.h;
                let y1 = (j0 + h) as f64 * self.h;
                (c[0] - x0).min(x1 - c[0]).min(c[1] - y0).min(y1 - c[1])
            }
        }
    }

    pub(crate) fn neighbors4(&self, cell: Cell) -> impl Iterator<Item = Cell> {
        let (i, j) = (cell.0 as isize, cell.1 as isize);
        let (w, h) = (self.width as isize, self.height as isize);
        [(i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)]
            .into_iter()
            .filter(move |&(a, b)| a >= 0 && b >= 0 && a < w && b < h)
            .map(|(a, b)| (a as usize, b as usize))
    }
}

fn check_extents(w: usize, h: usize, margin: usize, spacing: f64) -> Result<()> {
    if w == 0 || h == 0 {
        return Err(Error::domain("container extents must be positive"));
    }
    if !(spacing > 0.0) {
        return Err(Error::domain(format!("lattice spacing {spacing} must be positive")));
    }
    let need = w.max(h).div_ceil(2);
    if margin < need {
        return Err(Error::domain(format!(
            "margin {margin} below half the container extent ({need}); exterior tails need it"
        )));
    }
    Ok(())
}

/// Droplet occupancy over the container cells, with exactly conserved volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DropletState {
    width: usize,
    height: usize,
    occupancy: Vec<bool>,
    volume_cells: usize,
}

impl DropletState {
    pub fn empty(grid: &GridDomain) -> Self {
        DropletState {
            width: grid.width,
            height: grid.height,
            occupancy: vec![false; grid.width * grid.height],
            volume_cells: 0,
        }
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(grid: &GridDomain, cells: I) -> Result<Self> {
        let mut state = DropletState::empty(grid);
        for cell in cells {
            if cell.0 >= grid.width || cell.1 >= grid.height {
                return Err(Error::domain(format!("cell {cell:?} outside the box")));
            }
            if !grid.in_container(cell) {
                return Err(Error::domain(format!(
                    "cell {cell:?} lies outside the container"
                )));
            }
            let idx = grid.idx(cell);
            if !state.occupancy[idx] {
                state.occupancy[idx] = true;
                state.volume_cells += 1;
            }
        }
        Ok(state)
    }

    /// Deterministic random state with `m` occupied container cells.
    pub fn random(grid: &GridDomain, m: usize, seed: u64) -> Result<Self> {
        let total = grid.container_cell_count();
        if m > total {
            return Err(Error::domain(format!(
                "volume {m} exceeds container capacity {total}"
            )));
        }
        let mut cells: Vec<Cell> = grid.container_cells().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        cells.shuffle(&mut rng);
        DropletState::from_cells(grid, cells.into_iter().take(m))
    }

    #[inline]
    pub fn contains(&self, cell: Cell) -> bool {
        self.occupancy[cell.1 * self.width + cell.0]
    }

    pub fn volume_cells(&self) -> usize {
        self.volume_cells
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.height)
            .flat_map(move |j| (0..self.width).map(move |i| (i, j)))
            .filter(move |&c| self.contains(c))
    }

    pub(crate) fn set(&mut self, cell: Cell, value: bool) {
        let idx = cell.1 * self.width + cell.0;
        if self.occupancy[idx] != value {
            self.occupancy[idx] = value;
            if value {
                self.volume_cells += 1;
            } else {
                self.volume_cells -= 1;
            }
        }
    }

    /// Droplet cells with a gas neighbor (4-adjacency, inside the container).
    pub fn boundary_cells(&self, grid: &GridDomain) -> Vec<Cell> {
        grid.container_cells()
            .filter(|&c| self.contains(c))
            .filter(|&c| {
                grid.neighbors4(c)
                    .any(|nb| grid.in_container(nb) && !self.contains(nb))
            })
            .collect()
    }

    /// Gas cells adjacent to the droplet.
    pub fn frontier_cells(&self, grid: &GridDomain) -> Vec<Cell> {
        grid.container_cells()
            .filter(|&c| !self.contains(c))
            .filter(|&c| grid.neighbors4(c).any(|nb| self.contains(nb)))
            .collect()
    }
}

/// Serialize a grid and droplet to the plain-text snapshot format:
/// first line `W H h`, then `H` rows of `W` characters, top row first,
/// with `.` exterior, `C` empty container, `E` droplet.
pub fn write_snapshot(grid: &GridDomain, state: &DropletState) -> String {
    let mut out = format!(
        "{} {} {}\n",
        grid.width,
        grid.height,
        crate::sweep::fmt_f64(grid.h)
    );
    for j in (0..grid.height).rev() {
        for i in 0..grid.width {
            out.push(if state.contains((i, j)) {
                'E'
            } else if grid.in_container((i, j)) {
                'C'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    out
}

/// Parse a snapshot back into a grid and state. The container kind is
/// recognized from the mask (full plane, halfplane wall, or rectangle block);
/// other masks are rejected.
pub fn read_snapshot(text: &str) -> Result<(GridDomain, DropletState)> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty snapshot".into()))?;
    let mut parts = header.split_whitespace();
    let width: usize = parse_field(parts.next(), "width")?;
    let height: usize = parse_field(parts.next(), "height")?;
    let h: f64 = parse_field(parts.next(), "spacing")?;
    if parts.next().is_some() {
        return Err(Error::Parse("trailing fields in snapshot header".into()));
    }
    if width == 0 || height == 0 || !(h > 0.0) {
        return Err(Error::Parse("snapshot extents must be positive".into()));
    }

    let mut container = vec![false; width * height];
    let mut droplet = vec![false; width * height];
    let mut rows = 0usize;
    for (row, line) in lines.enumerate() {
        if row >= height {
            return Err(Error::Parse("too many snapshot rows".into()));
        }
        if line.chars().count() != width {
            return Err(Error::Parse(format!(
                "row {row} has {} cells, expected {width}",
                line.chars().count()
            )));
        }
        let j = height - 1 - row;
        for (i, ch) in line.chars().enumerate() {
            match ch {
                '.' => {}
                'C' => container[j * width + i] = true,
                'E' => {
                    container[j * width + i] = true;
                    droplet[j * width + i] = true;
                }
                other => {
                    return Err(Error::Parse(format!("unexpected cell character `{other}`")))
                }
            }
        }
        rows += 1;
    }
    if rows != height {
        return Err(Error::Parse(format!("expected {height} rows, found {rows}")));
    }

    let kind = infer_kind(width, height, &container)?;
    let grid = GridDomain {
        h,
        width,
        height,
        kind,
        container,
    };
    let volume = droplet.iter().filter(|&&b| b).count();
    let state = DropletState {
        width,
        height,
        occupancy: droplet,
        volume_cells: volume,
    };
    Ok((grid, state))
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, name: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse(format!("missing snapshot header field `{name}`")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad snapshot header field `{name}`")))
}

fn infer_kind(width: usize, height: usize, container: &[bool]) -> Result<ContainerKind> {
    if container.iter().all(|&b| b) {
        return Ok(ContainerKind::Full);
    }
    // Halfplane: some wall row below which everything is solid.
    if let Some(wall_row) = (0..height).find(|&j| (0..width).all(|i| container[j * width + i])) {
        let is_halfplane = (0..height).all(|j| {
            (0..width).all(|i| container[j * width + i] == (j >= wall_row))
        });
        if is_halfplane && wall_row > 0 {
            return Ok(ContainerKind::Halfplane { wall_row });
        }
    }
    // Rectangle block: container cells exactly fill their bounding box.
    let cells: Vec<(usize, usize)> = (0..height)
        .flat_map(|j| (0..width).map(move |i| (i, j)))
        .filter(|&(i, j)| container[j * width + i])
        .collect();
    if let (Some(&(_, _)), true) = (cells.first(), !cells.is_empty()) {
        let i0 = cells.iter().map(|c| c.0).min().unwrap();
        let i1 = cells.iter().map(|c| c.0).max().unwrap();
        let j0 = cells.iter().map(|c| c.1).min().unwrap();
        let j1 = cells.iter().map(|c| c.1).max().unwrap();
        let w = i1 - i0 + 1;
        let h = j1 - j0 + 1;
        if cells.len() == w * h {
            return Ok(ContainerKind::RectBox { i0, j0, w, h });
        }
    }
    Err(Error::Parse(
        "container mask is neither full plane, halfplane nor rectangle".into(),
    ))
}
