//! Brute-force reference implementations, usable only on small boxes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::augment::bounds;
use crate::error::{Error, Result};
use crate::lattice::{Antichain, LatticePoint};

pub const DEFAULT_VOLUME_CAP: u128 = 10_000_000;

/// A closed integer box `[lo, hi]` with a cap on the number of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    lo: Vec<i64>,
    hi: Vec<i64>,
    cap: u128,
}

impl SearchBox {
    pub fn new(lo: &LatticePoint, hi: &LatticePoint) -> Result<Self> {
        lo.leq(hi)?
            .then(|| Self { lo: lo.coords().to_vec(), hi: hi.coords().to_vec(), cap: DEFAULT_VOLUME_CAP })
            .ok_or_else(|| Error::Box(format!("lower corner {lo} is not below {hi}")))
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn volume(&self) -> u128 {
        self.lo
            .iter()
            .zip(&self.hi)
            .try_fold(1u128, |acc, (l, h)| acc.checked_mul((h - l) as u128 + 1))
            .unwrap_or(u128::MAX)
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        x.coords().iter().zip(self.lo.iter().zip(&self.hi)).all(|(v, (l, h))| l <= v && v <= h)
    }

    fn guard(&self) -> Result<()> {
        let v = self.volume();
        if v > self.cap {
            return Err(Error::ScaleGuard(format!("box volume {v} exceeds cap {}", self.cap)));
        }
        Ok(())
    }

    /// Points of the box whose first coordinate is `first`, in lexicographic order.
    fn slab(&self, first: i64) -> impl Iterator<Item = Vec<i64>> + '_ {
        let mut cur = self.lo.clone();
        cur[0] = first;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = cur.clone();
            done = true;
            for j in (1..cur.len()).rev() {
                if cur[j] < self.hi[j] {
                    cur[j] += 1;
                    done = false;
                    break;
                }
                cur[j] = self.lo[j];
            }
            Some(out)
        })
    }
}

/// The box `[m - 1, M + 1]` around the coordinatewise extremes of `gens`.
pub fn default_box(gens: &Antichain) -> Result<SearchBox> {
    let b = bounds(gens)?;
    SearchBox::new(&b.lower.shift_all(-1)?, &b.upper.shift_all(1)?)
}

fn scan<F>(bx: &SearchBox, keep: F) -> Vec<LatticePoint>
where
    F: Fn(&[i64]) -> bool + Sync,
{
    let firsts = bx.lo[0]..=bx.hi[0];
    let per_slab = |f: i64| bx.slab(f).filter(|x| keep(x)).collect::<Vec<_>>();
    #[cfg(feature = "parallel")]
    let found: Vec<Vec<i64>> = firsts.into_par_iter().flat_map_iter(per_slab).collect();
    #[cfg(not(feature = "parallel"))]
    let found: Vec<Vec<i64>> = firsts.flat_map(per_slab).collect();
    found.into_iter().map(LatticePoint::from_vec_unchecked).collect()
}

fn check_box(gens: &Antichain, bx: &SearchBox, offset: i64) -> Result<()> {
    if bx.dim() != gens.dim() {
        return Err(Error::DimensionMismatch { expected: gens.dim(), found: bx.dim() });
    }
    bx.guard()?;
    for g in gens {
        for (j, &v) in g.coords().iter().enumerate() {
            let c = v.checked_add(offset).ok_or_else(|| Error::Overflow(g.clone()))?;
            if c < bx.lo[j] || c > bx.hi[j] {
                return Err(Error::Box(format!("box misses candidate coordinate {c} on axis {j}")));
            }
        }
    }
    Ok(())
}

/// Maximal points of the complement of the upset generated by `gens`,
/// found by testing every point of `bx`.
pub fn brute_socle_down(gens: &Antichain, bx: &SearchBox) -> Result<Antichain> {
    check_box(gens, bx, -1)?;
    let pts = gens.points();
    let in_up = |x: &[i64]| pts.iter().any(|g| g.coords().iter().zip(x).all(|(a, b)| a <= b));
    let found = scan(bx, |x| {
        !in_up(x)
            && (0..x.len()).all(|j| {
                let mut y = x.to_vec();
                y[j] += 1;
                in_up(&y)
            })
    });
    Antichain::with_dim(gens.dim(), found)
}

/// Minimal points of the complement of the downset generated by `gens`.
pub fn brute_socle_up(gens: &Antichain, bx: &SearchBox) -> Result<Antichain> {
    check_box(gens, bx, 1)?;
    let pts = gens.points();
    let in_down = |x: &[i64]| pts.iter().any(|g| g.coords().iter().zip(x).all(|(a, b)| b <= a));
    let found = scan(bx, |x| {
        !in_down(x)
            && (0..x.len()).all(|j| {
                let mut y = x.to_vec();
                y[j] -= 1;
                in_down(&y)
            })
    });
    Antichain::with_dim(gens.dim(), found)
}

/// Streams the generator antichain of every zero-dimensional monomial
/// ideal in `d <= 2` variables, other than the unit ideal, whose standard
/// monomials all have coordinates at most `cap`.
///
/// A standard set is a staircase of column heights `h_0 >= h_1 >= ..`,
/// one column per value of the first coordinate (a single column for `d = 1`).
#[derive(Clone, Debug)]
pub struct ZeroDimIdeals {
    dim: usize,
    cap: i64,
    heights: Vec<i64>,
    started: bool,
}

pub fn enumerate_zero_dim_ideals(dim: usize, cap: u32) -> Result<ZeroDimIdeals> {
    if !(1..=2).contains(&dim) || cap > 4 {
        return Err(Error::ScaleGuard(format!("enumeration limited to d <= 2, cap <= 4 (got d={dim}, cap={cap})")));
    }
    let cols = if dim == 1 { 1 } else { cap as usize + 1 };
    let mut heights = vec![0; cols];
    heights[0] = 1;
    Ok(ZeroDimIdeals { dim, cap: cap as i64, heights, started: false })
}

impl ZeroDimIdeals {
    fn advance(&mut self) -> bool {
        for i in (0..self.heights.len()).rev() {
            let ceiling = if i == 0 { self.cap + 1 } else { self.heights[i - 1] };
            if self.heights[i] < ceiling {
                self.heights[i] += 1;
                self.heights[i + 1..].iter_mut().for_each(|h| *h = 0);
                return true;
            }
        }
        false
    }

    fn standard(&self, x: &[i64]) -> bool {
        if x.iter().any(|&v| v < 0) {
            return true;
        }
        match x {
            [a] => *a < self.heights[0],
            [a, b] => *a <= self.cap && *b < self.heights[*a as usize],
            _ => unreachable!(),
        }
    }

    fn generators(&self) -> Antichain {
        let side = self.cap + 2;
        let total = side.pow(self.dim as u32);
        let mut gens = Vec::new();
        for n in 0..total {
            let x: Vec<i64> = (0..self.dim).map(|j| (n / side.pow(j as u32)) % side).rev().collect();
            let minimal_outside = !self.standard(&x)
                && (0..self.dim).all(|j| {
                    let mut y = x.clone();
                    y[j] -= 1;
                    self.standard(&y)
                });
            if minimal_outside {
                gens.push(LatticePoint::from_vec_unchecked(x));
            }
        }
        Antichain::with_dim(self.dim, gens).expect("minimal points form an antichain")
    }
}

impl Iterator for ZeroDimIdeals {
    type Item = Antichain;

    fn next(&mut self) -> Option<Antichain> {
        if self.started && !self.advance() {
            return None;
        }
        self.started = true;
        Some(self.generators())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;
    use crate::updown::UpSet;

    fn ac(points: &[&[i64]]) -> Antichain {
        Antichain::new(points.iter().map(|p| pt(p)).collect()).unwrap()
    }

    #[test]
    fn brute_matches_worked_example() {
        let g = ac(&[&[3, 2, 3], &[2, 3, 3], &[2, 2, 4], &[1, 1, 5], &[5, 5, 1]]);
        let bx = default_box(&g).unwrap();
        let brute = brute_socle_down(&g, &bx).unwrap();
        assert_eq!(brute, crate::reconstruct::socle_of_generators(&g).unwrap());
        assert!(brute.contains(&pt(&[2, 2, 3])));
    }

    #[test]
    fn brute_up_is_dual() {
        let g = ac(&[&[1, 3], &[2, 2], &[4, 0]]);
        let bx = default_box(&g).unwrap();
        assert_eq!(brute_socle_up(&g, &bx).unwrap(), ac(&[&[2, 3], &[3, 1]]));
    }

    #[test]
    fn box_checks() {
        let g = ac(&[&[1, 3], &[3, 1]]);
        let small = SearchBox::new(&pt(&[1, 1]), &pt(&[3, 3])).unwrap();
        assert!(matches!(brute_socle_down(&g, &small), Err(Error::Box(_))));
        let big = SearchBox::new(&pt(&[0, 0]), &pt(&[5000, 5000])).unwrap();
        assert!(matches!(brute_socle_down(&g, &big), Err(Error::ScaleGuard(_))));
        assert!(SearchBox::new(&pt(&[2, 0]), &pt(&[1, 1])).is_err());
        assert_eq!(small.volume(), 9);
    }

    #[test]
    fn enumeration_counts() {
        let d1: Vec<Antichain> = enumerate_zero_dim_ideals(1, 2).unwrap().collect();
        assert_eq!(d1, vec![ac(&[&[1]]), ac(&[&[2]]), ac(&[&[3]])]);
        for cap in 0..=4u32 {
            let n = enumerate_zero_dim_ideals(2, cap).unwrap().count();
            let m = cap as u64 + 1;
            // staircases in an m x m square: C(2m, m), less the empty one
            let binom = (1..=m).fold(1u64, |acc, i| acc * (m + i) / i);
            assert_eq!(n as u64, binom - 1);
        }
        assert!(enumerate_zero_dim_ideals(3, 1).is_err());
        assert!(enumerate_zero_dim_ideals(2, 5).is_err());
    }

    #[test]
    fn enumerated_ideals_are_zero_dimensional() {
        for g in enumerate_zero_dim_ideals(2, 3).unwrap() {
            assert!(g.is_nonnegative());
            assert!(UpSet::from_antichain(g).check_cofinite().is_ok());
        }
    }
}
