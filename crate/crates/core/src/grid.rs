//! Rectangular scan grids over the (x1, p2) plane and pointwise evaluation
//! of the scanned quantities.

use crate::error::{Error, Result};
use crate::model::{mass_at, MassProfile, MorseParams};
use crate::phasespace::PhasePoint;
use crate::reality::{energy_with_beta3, reality_roots};
use crate::solution::{ansatz_params, classify_region, density_at, energy_at};
use crate::verify::{pde_residual, PdeOptions};

/// Uniform grid with both endpoints included: `nx` columns, `np` rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x1_min: f64,
    pub x1_max: f64,
    pub p2_min: f64,
    pub p2_max: f64,
    pub nx: usize,
    pub np: usize,
}

impl GridSpec {
    pub fn new(x1_min: f64, x1_max: f64, p2_min: f64, p2_max: f64, nx: usize, np: usize) -> Result<Self> {
        if ![x1_min, x1_max, p2_min, p2_max].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParameter("grid bounds must be finite"));
        }
        if !(x1_min < x1_max && p2_min < p2_max) {
            return Err(Error::InvalidParameter("grid bounds must be increasing"));
        }
        if nx < 2 || np < 2 {
            return Err(Error::InvalidParameter("grid needs at least two points per axis"));
        }
        Ok(Self { x1_min, x1_max, p2_min, p2_max, nx, np })
    }

    pub fn len(&self) -> usize {
        self.nx * self.np
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn x1(&self, ix: usize) -> f64 {
        self.x1_min + (self.x1_max - self.x1_min) * ix as f64 / (self.nx - 1) as f64
    }

    pub fn p2(&self, ip: usize) -> f64 {
        self.p2_min + (self.p2_max - self.p2_min) * ip as f64 / (self.np - 1) as f64
    }

    pub fn point(&self, ix: usize, ip: usize) -> PhasePoint {
        PhasePoint::new(self.x1(ix), self.p2(ip))
    }

    /// One row (fixed p2), x1 ascending.
    pub fn row(&self, ip: usize) -> impl Iterator<Item = PhasePoint> + '_ {
        (0..self.nx).map(move |ix| self.point(ix, ip))
    }

    /// Row-major: p2 outer, x1 inner.
    pub fn points(&self) -> impl Iterator<Item = PhasePoint> + '_ {
        (0..self.np).flat_map(move |ip| self.row(ip))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Er,
    Ei,
    Density,
    Region,
    Beta3,
    Alpha1,
    Beta1,
    RootLo,
    RootHi,
    /// Canonical real energy at the upper reality root.
    ErAtRoot,
    PdeResR,
    PdeResI,
}

impl Quantity {
    pub const ALL: [Quantity; 12] = [
        Quantity::Er,
        Quantity::Ei,
        Quantity::Density,
        Quantity::Region,
        Quantity::Beta3,
        Quantity::Alpha1,
        Quantity::Beta1,
        Quantity::RootLo,
        Quantity::RootHi,
        Quantity::ErAtRoot,
        Quantity::PdeResR,
        Quantity::PdeResI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Er => "er",
            Quantity::Ei => "ei",
            Quantity::Density => "density",
            Quantity::Region => "region",
            Quantity::Beta3 => "beta3",
            Quantity::Alpha1 => "alpha1",
            Quantity::Beta1 => "beta1",
            Quantity::RootLo => "root_lo",
            Quantity::RootHi => "root_hi",
            Quantity::ErAtRoot => "er_at_root",
            Quantity::PdeResR => "pde_res_r",
            Quantity::PdeResI => "pde_res_i",
        }
    }

    /// Case-insensitive, accepts `_` or `-` separators.
    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|q| {
            let n = q.name();
            n.len() == s.len()
                && n.bytes().zip(s.bytes()).all(|(a, b)| {
                    let b = b.to_ascii_lowercase();
                    a == b || (a == b'_' && b == b'-')
                })
        })
    }
}

/// Outcome of evaluating one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellStatus {
    Ok,
    DegenerateDenominator,
    NegativeRadicand,
    MassPositivityViolation,
    NotNormalizable,
    NoRealRoots,
    Overflow,
    /// Degenerate equation with no double root or usable formula.
    Degenerate,
}

impl CellStatus {
    pub fn name(self) -> &'static str {
        match self {
            CellStatus::Ok => "Ok",
            CellStatus::DegenerateDenominator => "DegenerateDenominator",
            CellStatus::NegativeRadicand => "NegativeRadicand",
            CellStatus::MassPositivityViolation => "MassPositivityViolation",
            CellStatus::NotNormalizable => "NotNormalizable",
            CellStatus::NoRealRoots => "NoRealRoots",
            CellStatus::Overflow => "Overflow",
            CellStatus::Degenerate => "Degenerate",
        }
    }
}

impl From<Error> for CellStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateDenominator => CellStatus::DegenerateDenominator,
            Error::NegativeRadicand | Error::NegativeUnderRoot => CellStatus::NegativeRadicand,
            Error::MassPositivityViolation => CellStatus::MassPositivityViolation,
            Error::NotNormalizable => CellStatus::NotNormalizable,
            Error::NoRealRoots => CellStatus::NoRealRoots,
            Error::Overflow | Error::NonFiniteField => CellStatus::Overflow,
            Error::DegenerateIdentically
            | Error::DegenerateLambda2
            | Error::DivisionByZero
            | Error::CaseMismatch
            | Error::InvalidParameter(_) => CellStatus::Degenerate,
        }
    }
}

/// Value of `quantity` at one point. Regions come back as their numeric code.
pub fn evaluate(
    quantity: Quantity,
    params: &MorseParams,
    profile: &MassProfile,
    at: PhasePoint,
    pde: &PdeOptions,
) -> Result<f64> {
    match quantity {
        Quantity::Er => energy_at(params, profile, at).map(|e| e.e_r),
        Quantity::Ei => energy_at(params, profile, at).map(|e| e.e_i),
        Quantity::Density => {
            let a = ansatz_params(params, profile, at)?;
            density_at(a.alpha1, a.beta1, at)
        }
        Quantity::Region => {
            let a = ansatz_params(params, profile, at)?;
            Ok(classify_region(a.alpha1, a.beta1).region.code() as f64)
        }
        Quantity::Beta3 => ansatz_params(params, profile, at).map(|a| a.beta3),
        Quantity::Alpha1 => ansatz_params(params, profile, at).map(|a| a.alpha1),
        Quantity::Beta1 => ansatz_params(params, profile, at).map(|a| a.beta1),
        Quantity::RootLo => reality_roots(params, profile, at).map(|r| r.root_lo()),
        Quantity::RootHi => reality_roots(params, profile, at).map(|r| r.root_hi()),
        Quantity::ErAtRoot => {
            let r = reality_roots(params, profile, at)?;
            let mass = mass_at(profile, at)?;
            energy_with_beta3(params, &mass, r.root_hi()).map(|e| e.e_r)
        }
        Quantity::PdeResR => pde_residual(params, profile, at, pde).map(|r| r.res_r),
        Quantity::PdeResI => pde_residual(params, profile, at, pde).map(|r| r.res_i),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_invariants() {
        assert!(GridSpec::new(0.0, 1.0, 0.0, 1.0, 1, 5).is_err());
        assert!(GridSpec::new(1.0, 0.0, 0.0, 1.0, 3, 3).is_err());
        assert!(GridSpec::new(0.0, 1.0, 0.0, f64::NAN, 3, 3).is_err());
        let g = GridSpec::new(-1.0, 1.0, 0.0, 2.0, 3, 2).unwrap();
        assert_eq!(g.len(), 6);
        let pts: [PhasePoint; 6] = {
            let mut it = g.points();
            core::array::from_fn(|_| it.next().unwrap())
        };
        assert_eq!(pts[0], PhasePoint::new(-1.0, 0.0));
        assert_eq!(pts[2], PhasePoint::new(1.0, 0.0));
        assert_eq!(pts[3], PhasePoint::new(-1.0, 2.0));
        assert_eq!(pts[5], PhasePoint::new(1.0, 2.0));
    }

    #[test]
    fn quantity_names_round_trip() {
        for q in Quantity::ALL {
            assert_eq!(Quantity::parse(q.name()), Some(q));
        }
        assert_eq!(Quantity::parse("PDE-RES-R"), Some(Quantity::PdeResR));
        assert_eq!(Quantity::parse("energy"), None);
    }

    #[test]
    fn evaluate_constant_mass() {
        let p = MorseParams::new(0.5, 0.0, 1.0, 0.0, 1.0).unwrap();
        let prof = MassProfile::constant(1.0, 0.0).unwrap();
        let opts = PdeOptions::default();
        let at = PhasePoint::new(0.5, 0.5);
        assert!((evaluate(Quantity::Er, &p, &prof, at, &opts).unwrap() - 0.375).abs() < 1e-15);
        assert!((evaluate(Quantity::Ei, &p, &prof, at, &opts).unwrap() + 0.5).abs() < 1e-15);
        assert_eq!(evaluate(Quantity::Region, &p, &prof, at, &opts).unwrap(), 2.0);
        assert_eq!(
            evaluate(Quantity::Density, &p, &prof, at, &opts).map_err(CellStatus::from),
            Err(CellStatus::NotNormalizable)
        );
        assert_eq!(evaluate(Quantity::RootHi, &p, &prof, at, &opts).unwrap(), 0.0);
    }
}
