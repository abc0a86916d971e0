#![allow(dead_code)]

use monideal::lattice::{minimal_elements, Antichain, LatticePoint};
use proptest::prelude::*;

pub fn point(dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = LatticePoint> {
    prop::collection::vec(lo..=hi, dim).prop_map(|v| LatticePoint::new(v).unwrap())
}

/// An antichain of up to `kmax` points in `[lo, hi]^dim`, as the minimal
/// elements of a random point list.
pub fn antichain_in(dim: usize, kmax: usize, lo: i64, hi: i64) -> impl Strategy<Value = Antichain> {
    prop::collection::vec(point(dim, lo, hi), 1..=kmax).prop_map(move |pts| minimal_elements(dim, &pts).unwrap())
}

pub fn antichain(dmax: usize, kmax: usize, lo: i64, hi: i64) -> impl Strategy<Value = Antichain> {
    (1..=dmax).prop_flat_map(move |d| antichain_in(d, kmax, lo, hi))
}

/// An antichain with valid augmentation bounds `a <= m`, `b >= M`.
pub fn with_bounds(
    dmax: usize,
    kmax: usize,
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = (Antichain, LatticePoint, LatticePoint)> {
    antichain(dmax, kmax, lo, hi).prop_flat_map(|g| {
        let d = g.dim();
        let slack = prop::collection::vec(0i64..=3, d);
        (Just(g), slack.clone(), slack).prop_map(|(g, s, t)| {
            let b = monideal::augment::bounds(&g).unwrap();
            let a: Vec<i64> = b.lower.coords().iter().zip(&s).map(|(x, e)| x - e).collect();
            let bb: Vec<i64> = b.upper.coords().iter().zip(&t).map(|(x, e)| x + e).collect();
            (g, LatticePoint::new(a).unwrap(), LatticePoint::new(bb).unwrap())
        })
    })
}

pub fn ac(points: &[&[i64]]) -> Antichain {
    Antichain::new(points.iter().map(|p| LatticePoint::new(p.to_vec()).unwrap()).collect()).unwrap()
}
