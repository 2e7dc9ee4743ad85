//! Grid scans. Rows (fixed p2) are evaluated in parallel and reassembled in
//! row order, so the output does not depend on the worker count.

use std::fmt::Write as _;

use morse_pdcm_core::reality::{energy_with_beta3, real_energy_at_root, RootChoice};
use morse_pdcm_core::solution::{ansatz_with_beta3, classify_region};
use morse_pdcm_core::verify::PdeOptions;
use morse_pdcm_core::{
    ansatz_params, evaluate, mass_at, psi_at, reality_roots, special_case_roots, CellStatus, Error, GridSpec,
    MassProfile, MorseParams, PhasePoint, Quantity, RealityCase, Region,
};
use rayon::prelude::*;

/// Runs `f` over every row of `grid` on a pool of `threads` workers.
pub fn map_rows<T, F>(grid: &GridSpec, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(PhasePoint) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    let rows: Vec<Vec<T>> = pool.install(|| {
        (0..grid.np)
            .into_par_iter()
            .map(|ip| grid.row(ip).map(&f).collect())
            .collect()
    });
    rows.into_iter().flatten().collect()
}

pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else {
        format!("{v:.16e}")
    }
}

#[derive(Debug, Clone)]
pub struct FieldGrid {
    pub spec: GridSpec,
    pub quantity: Quantity,
    pub values: Vec<f64>,
    pub status: Vec<CellStatus>,
}

impl FieldGrid {
    pub fn count(&self, status: CellStatus) -> usize {
        self.status.iter().filter(|&&s| s == status).count()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x1,p2,value,status\n");
        for ((at, v), s) in self.spec.points().zip(&self.values).zip(&self.status) {
            let _ = writeln!(out, "{},{},{},{}", fmt_f64(at.x1), fmt_f64(at.p2), fmt_f64(*v), s.name());
        }
        out
    }
}

pub fn scan_field(
    quantity: Quantity,
    params: &MorseParams,
    profile: &MassProfile,
    grid: &GridSpec,
    pde: &PdeOptions,
    threads: usize,
) -> FieldGrid {
    let cells = map_rows(grid, threads, |at| match evaluate(quantity, params, profile, at, pde) {
        Ok(v) => (v, CellStatus::Ok),
        Err(e) => (f64::NAN, CellStatus::from(e)),
    });
    let (values, status) = cells.into_iter().unzip();
    FieldGrid { spec: *grid, quantity, values, status }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionCell {
    pub alpha1: f64,
    pub beta1: f64,
    pub region: Result<Region, CellStatus>,
}

pub fn scan_regions(params: &MorseParams, profile: &MassProfile, grid: &GridSpec, threads: usize) -> Vec<RegionCell> {
    map_rows(grid, threads, |at| match ansatz_params(params, profile, at) {
        Ok(a) => RegionCell {
            alpha1: a.alpha1,
            beta1: a.beta1,
            region: Ok(classify_region(a.alpha1, a.beta1).region),
        },
        Err(e) => RegionCell { alpha1: f64::NAN, beta1: f64::NAN, region: Err(e.into()) },
    })
}

/// `x1,p2,alpha1,beta1,region`; failed cells carry their status name in
/// the region column.
pub fn regions_csv(grid: &GridSpec, cells: &[RegionCell]) -> String {
    let mut out = String::from("x1,p2,alpha1,beta1,region\n");
    for (at, c) in grid.points().zip(cells) {
        let region = match c.region {
            Ok(r) => r.name(),
            Err(s) => s.name(),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_f64(at.x1),
            fmt_f64(at.p2),
            fmt_f64(c.alpha1),
            fmt_f64(c.beta1),
            region
        );
    }
    out
}

/// Which root formula a reality scan uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealityMode {
    General,
    Printed(RealityCase),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealityCell {
    pub root_lo: f64,
    pub root_hi: f64,
    pub er_lo: f64,
    pub er_hi: f64,
    pub admissible: (bool, bool),
    pub status: CellStatus,
}

impl RealityCell {
    fn failed(e: Error) -> Self {
        Self {
            root_lo: f64::NAN,
            root_hi: f64::NAN,
            er_lo: f64::NAN,
            er_hi: f64::NAN,
            admissible: (false, false),
            status: e.into(),
        }
    }
}

fn reality_cell(mode: RealityMode, params: &MorseParams, profile: &MassProfile, at: PhasePoint) -> Result<RealityCell, Error> {
    let mass = mass_at(profile, at)?;
    let admissible = |b: f64| {
        let a = ansatz_with_beta3(params, &mass, b);
        classify_region(a.alpha1, a.beta1).region == Region::Both
    };
    match mode {
        RealityMode::General => {
            let st = reality_roots(params, profile, at)?;
            Ok(RealityCell {
                root_lo: st.root_lo(),
                root_hi: st.root_hi(),
                er_lo: energy_with_beta3(params, &mass, st.root_lo())?.e_r,
                er_hi: energy_with_beta3(params, &mass, st.root_hi())?.e_r,
                admissible: st.admissible,
                status: CellStatus::Ok,
            })
        }
        RealityMode::Printed(case) => {
            let r = special_case_roots(case, params, profile, at)?;
            let e_first = real_energy_at_root(case, params, profile, at, RootChoice::First)?;
            let e_second = real_energy_at_root(case, params, profile, at, RootChoice::Second)?;
            let ((lo, e_lo), (hi, e_hi)) = if r.first <= r.second {
                ((r.first, e_first), (r.second, e_second))
            } else {
                ((r.second, e_second), (r.first, e_first))
            };
            Ok(RealityCell {
                root_lo: lo,
                root_hi: hi,
                er_lo: e_lo,
                er_hi: e_hi,
                admissible: (admissible(lo), admissible(hi)),
                status: CellStatus::Ok,
            })
        }
    }
}

pub fn scan_reality(
    mode: RealityMode,
    params: &MorseParams,
    profile: &MassProfile,
    grid: &GridSpec,
    threads: usize,
) -> Vec<RealityCell> {
    map_rows(grid, threads, |at| {
        reality_cell(mode, params, profile, at).unwrap_or_else(RealityCell::failed)
    })
}

pub fn reality_csv(grid: &GridSpec, cells: &[RealityCell]) -> String {
    let mut out = String::from("x1,p2,root_lo,root_hi,er_lo,er_hi,admissible_lo,admissible_hi,status\n");
    for (at, c) in grid.points().zip(cells) {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            fmt_f64(at.x1),
            fmt_f64(at.p2),
            fmt_f64(c.root_lo),
            fmt_f64(c.root_hi),
            fmt_f64(c.er_lo),
            fmt_f64(c.er_hi),
            c.admissible.0,
            c.admissible.1,
            c.status.name()
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Along {
    X1,
    P2,
}

/// 1-D profile of the eigenfunction along one axis through `through`,
/// spanning the grid's range on that axis.
pub fn psi_profile(
    along: Along,
    params: &MorseParams,
    profile: &MassProfile,
    grid: &GridSpec,
    through: PhasePoint,
) -> String {
    let mut out = String::from("x1,p2,psi_r,psi_i,abs2,status\n");
    let n = match along {
        Along::X1 => grid.nx,
        Along::P2 => grid.np,
    };
    for k in 0..n {
        let at = match along {
            Along::X1 => PhasePoint::new(grid.x1(k), through.p2),
            Along::P2 => PhasePoint::new(through.x1, grid.p2(k)),
        };
        let (r, i, a, s) = match psi_at(params, profile, at) {
            Ok(w) => (w.psi_r, w.psi_i, w.norm_sqr(), CellStatus::Ok),
            Err(e) => (f64::NAN, f64::NAN, f64::NAN, e.into()),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            fmt_f64(at.x1),
            fmt_f64(at.p2),
            fmt_f64(r),
            fmt_f64(i),
            fmt_f64(a),
            s.name()
        );
    }
    out
}
