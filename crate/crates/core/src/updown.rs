//! Upsets `U(A)` and downsets `D(A)` of `Z^d` given by finite generators,
//! and the socle operators `S_d(U) = max(Z^d \ U)` and
//! `S_u(D) = min(Z^d \ D)`.

use crate::corner::{self, CornerSelection, Orientation, Strategy};
use crate::error::{Error, Result};
use crate::lattice::{maximal_elements, minimal_elements, Antichain, LatticePoint};

/// `U(gens)`, stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpSet {
    gens: Antichain,
}

/// `D(gens)`, stored by its maximal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownSet {
    gens: Antichain,
}

impl UpSet {
    /// Reduces `points` to its minimal elements.
    pub fn new(dim: usize, points: &[LatticePoint]) -> Result<Self> {
        Ok(Self { gens: minimal_elements(dim, points)? })
    }

    pub fn from_antichain(gens: Antichain) -> Self {
        Self { gens }
    }

    pub fn generators(&self) -> &Antichain {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn contains(&self, x: &LatticePoint) -> Result<bool> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(self.gens.iter().any(|g| g.leq_unchecked(x)))
    }

    /// `U` is cofinite iff for every axis some generator agrees with the
    /// componentwise minimum of the generators on all other axes.
    pub fn check_cofinite(&self) -> Result<()> {
        check_axes(&self.gens, |a, b| a.min(b)).map_err(|axis| Error::NotCofinite { axis })
    }

    /// `S_d(U)`: points `r` with `r` outside `U` and `r + e_j` inside for every `j`.
    pub fn socle(&self) -> Result<Antichain> {
        self.socle_with(Strategy::default())
    }

    pub fn socle_with(&self, strategy: Strategy) -> Result<Antichain> {
        self.check_cofinite()?;
        corner::enumerate_corners(&self.gens, Orientation::Down, strategy)
    }

    pub fn socle_with_witnesses(&self) -> Result<Vec<CornerSelection>> {
        let socle = self.socle()?;
        Ok(corner::witnesses(&self.gens, &socle, Orientation::Down))
    }
}

impl DownSet {
    /// Reduces `points` to its maximal elements.
    pub fn new(dim: usize, points: &[LatticePoint]) -> Result<Self> {
        Ok(Self { gens: maximal_elements(dim, points)? })
    }

    pub fn from_antichain(gens: Antichain) -> Self {
        Self { gens }
    }

    pub fn generators(&self) -> &Antichain {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn contains(&self, x: &LatticePoint) -> Result<bool> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(self.gens.iter().any(|g| x.leq_unchecked(g)))
    }

    /// Dual of [`UpSet::check_cofinite`]: every axis needs a generator equal
    /// to the componentwise maximum on all other axes.
    pub fn check_corner_bounded(&self) -> Result<()> {
        check_axes(&self.gens, |a, b| a.max(b)).map_err(|axis| Error::NotCornerBounded { axis })
    }

    /// `S_u(D)`: points `r` with `r` outside `D` and `r - e_j` inside for every `j`.
    pub fn socle(&self) -> Result<Antichain> {
        self.socle_with(Strategy::default())
    }

    pub fn socle_with(&self, strategy: Strategy) -> Result<Antichain> {
        self.check_corner_bounded()?;
        corner::enumerate_corners(&self.gens, Orientation::Up, strategy)
    }

    pub fn socle_with_witnesses(&self) -> Result<Vec<CornerSelection>> {
        let socle = self.socle()?;
        Ok(corner::witnesses(&self.gens, &socle, Orientation::Up))
    }
}

fn check_axes(gens: &Antichain, pick: impl Fn(i64, i64) -> i64) -> std::result::Result<(), usize> {
    let dim = gens.dim();
    let Some(first) = gens.points().first() else {
        return Err(0);
    };
    let extreme: Vec<i64> = (0..dim)
        .map(|i| gens.iter().map(|g| g.coords()[i]).fold(first.coords()[i], &pick))
        .collect();
    for axis in 0..dim {
        let bounded = gens.iter().any(|g| {
            g.coords().iter().enumerate().all(|(i, &x)| i == axis || x == extreme[i])
        });
        if !bounded {
            return Err(axis);
        }
    }
    Ok(())
}

/// `x` in `U(gens)`.
pub fn up_contains(u: &UpSet, x: &LatticePoint) -> Result<bool> {
    u.contains(x)
}

/// `x` in `D(gens)`.
pub fn down_contains(d: &DownSet, x: &LatticePoint) -> Result<bool> {
    d.contains(x)
}

pub fn socle_down(u: &UpSet) -> Result<Antichain> {
    u.socle()
}

pub fn socle_up(d: &DownSet) -> Result<Antichain> {
    d.socle()
}

pub fn socle_down_with_witnesses(u: &UpSet) -> Result<Vec<CornerSelection>> {
    u.socle_with_witnesses()
}

pub fn socle_up_with_witnesses(d: &DownSet) -> Result<Vec<CornerSelection>> {
    d.socle_with_witnesses()
}
