//! Corner enumeration behind `S_d` and `S_u`.
//!
//! Every maximal point `r` below an upset `U(G)` has, for each axis `j`, a
//! witness `g` in `G` with `g <= r + e_j`, and then `g_j = r_j + 1`. So
//! `r_j = g_{w(j), j} - 1` for a witness map `w: [d] -> G`, and the map is
//! valid iff
//!
//! * `g_{w(j), i} < g_{w(i), i}` for all `i != j` (each witness sits below
//!   `r + e_j`), and
//! * every generator `g` has some axis with `g_i >= g_{w(i), i}` (`r` is not
//!   in the upset).
//!
//! The search assigns witnesses axis by axis and drops a branch as soon as
//! the pairwise condition fails. Minimal points above a downset are handled
//! by running the same search on negated coordinates.

use std::collections::BTreeSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Antichain, LatticePoint};

/// Which socle operator to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Maximal points outside an upset, `r_j = g_j - 1`.
    Down,
    /// Minimal points outside a downset, `r_j = g_j + 1`.
    Up,
}

/// Execution strategy for the witness search.
/// Defaults to `Parallel` when the `parallel` feature is on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Below this many witness pairs the parallel strategy runs sequentially.
#[cfg(feature = "parallel")]
const PAR_MIN_BRANCHES: usize = 64;

/// A socle point together with, for each axis, the index (into the sorted
/// generator list) of a generator witnessing that axis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CornerSelection {
    pub point: LatticePoint,
    pub sources: Vec<usize>,
}

struct Search<'a> {
    dim: usize,
    // oriented coordinates, one row per generator
    gens: &'a [Vec<i64>],
}

impl Search<'_> {
    #[inline]
    fn compatible(&self, w: &[usize], depth: usize, cand: usize) -> bool {
        let g = &self.gens;
        w[..depth].iter().enumerate().all(|(j, &wj)| {
            g[wj][depth] < g[cand][depth] && g[cand][j] < g[wj][j]
        })
    }

    fn outside(&self, w: &[usize]) -> bool {
        self.gens
            .iter()
            .all(|g| (0..self.dim).any(|i| g[i] >= self.gens[w[i]][i]))
    }

    fn corner(&self, w: &[usize]) -> Vec<i64> {
        (0..self.dim).map(|j| self.gens[w[j]][j] - 1).collect()
    }

    fn dfs(&self, w: &mut Vec<usize>, out: &mut Vec<Vec<i64>>) {
        let depth = w.len();
        if depth == self.dim {
            if self.outside(w) {
                out.push(self.corner(w));
            }
            return;
        }
        for cand in 0..self.gens.len() {
            if self.compatible(w, depth, cand) {
                w.push(cand);
                self.dfs(w, out);
                w.pop();
            }
        }
    }

    fn run_from(&self, prefix: &[usize]) -> Vec<Vec<i64>> {
        let mut w = Vec::with_capacity(self.dim);
        let mut out = Vec::new();
        for (depth, &cand) in prefix.iter().enumerate() {
            if !self.compatible(&w, depth, cand) {
                return out;
            }
            w.push(cand);
        }
        self.dfs(&mut w, &mut out);
        out
    }
}

fn oriented_rows(gens: &Antichain, orientation: Orientation) -> Result<Vec<Vec<i64>>> {
    gens.iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|&x| {
                    // leaves room for negation and the +-1 corner offset
                    if x <= i64::MIN + 1 || x == i64::MAX {
                        return Err(Error::Overflow(p.clone()));
                    }
                    Ok(match orientation {
                        Orientation::Down => x,
                        Orientation::Up => -x,
                    })
                })
                .collect()
        })
        .collect()
}

/// All corners of `gens` in the given orientation. Exact for any finite
/// generator set; cofiniteness checks live in [`crate::updown`].
pub fn enumerate_corners(
    gens: &Antichain,
    orientation: Orientation,
    strategy: Strategy,
) -> Result<Antichain> {
    let dim = gens.dim();
    let rows = oriented_rows(gens, orientation)?;
    // d distinct witnesses are needed
    if rows.len() < dim {
        return Antichain::empty(dim);
    }
    let search = Search { dim, gens: &rows };
    let raw: Vec<Vec<i64>> = match strategy {
        Strategy::Sequential => search.run_from(&[]),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            let k = rows.len();
            if dim < 2 || k * k < PAR_MIN_BRANCHES {
                search.run_from(&[])
            } else {
                (0..k * k)
                    .into_par_iter()
                    .flat_map_iter(|ix| search.run_from(&[ix / k, ix % k]))
                    .collect()
            }
        }
    };
    let unique: BTreeSet<Vec<i64>> = raw.into_iter().collect();
    let mut points: Vec<LatticePoint> = unique
        .into_iter()
        .map(|mut v| {
            if orientation == Orientation::Up {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            LatticePoint::from_vec_unchecked(v)
        })
        .collect();
    points.sort();
    Ok(Antichain::from_sorted_unchecked(dim, points))
}

/// Attaches the lowest-index witness per axis to each corner.
pub fn witnesses(
    gens: &Antichain,
    corners: &Antichain,
    orientation: Orientation,
) -> Vec<CornerSelection> {
    corners
        .iter()
        .map(|r| {
            let sources = (0..gens.dim())
                .map(|j| {
                    gens.iter()
                        .position(|g| {
                            g.coords().iter().zip(r.coords()).enumerate().all(|(i, (&gi, &ri))| {
                                match (orientation, i == j) {
                                    (Orientation::Down, true) => gi <= ri + 1,
                                    (Orientation::Down, false) => gi <= ri,
                                    (Orientation::Up, true) => ri - 1 <= gi,
                                    (Orientation::Up, false) => ri <= gi,
                                }
                            })
                        })
                        .expect("every corner has a witness on each axis")
                })
                .collect();
            CornerSelection { point: r.clone(), sources }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pt;

    fn ac(points: &[&[i64]]) -> Antichain {
        Antichain::new(points.iter().map(|p| pt(p)).collect()).unwrap()
    }

    #[test]
    fn worked_example_down() {
        let g = ac(&[&[2, 2, 4], &[2, 3, 3], &[2, 4, 2], &[3, 2, 3], &[4, 2, 2]]);
        let s = enumerate_corners(&g, Orientation::Down, Strategy::Sequential).unwrap();
        assert_eq!(s, ac(&[&[2, 2, 3], &[3, 3, 2]]));
    }

    #[test]
    fn worked_example_up() {
        let q = ac(&[&[2, 2, 3], &[3, 3, 2], &[4, 4, 1], &[4, 1, 4], &[1, 4, 4]]);
        let s = enumerate_corners(&q, Orientation::Up, Strategy::Sequential).unwrap();
        assert_eq!(s, ac(&[&[2, 2, 4], &[2, 3, 3], &[2, 4, 2], &[3, 2, 3], &[4, 2, 2]]));
    }

    #[test]
    fn too_few_generators_have_no_corners() {
        let g = ac(&[&[1, 2, 3], &[3, 2, 1]]);
        assert!(enumerate_corners(&g, Orientation::Down, Strategy::Sequential).unwrap().is_empty());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let mut pts = Vec::new();
        for a in 0..5i64 {
            for b in 0..5i64 {
                pts.push(pt(&[a, b, 8 - a - b]));
            }
        }
        let g = crate::lattice::minimal_elements(3, &pts).unwrap();
        for o in [Orientation::Down, Orientation::Up] {
            assert_eq!(
                enumerate_corners(&g, o, Strategy::Sequential).unwrap(),
                enumerate_corners(&g, o, Strategy::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn witnesses_are_distinct_and_reproduce_coordinates() {
        let g = ac(&[&[2, 2, 4], &[2, 3, 3], &[2, 4, 2], &[3, 2, 3], &[4, 2, 2]]);
        let s = enumerate_corners(&g, Orientation::Down, Strategy::Sequential).unwrap();
        for sel in witnesses(&g, &s, Orientation::Down) {
            let mut seen = sel.sources.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), 3);
            for (j, &src) in sel.sources.iter().enumerate() {
                assert_eq!(sel.point.coords()[j], g.points()[src].coords()[j] - 1);
            }
        }
    }
}
