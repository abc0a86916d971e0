//! Seeded random instances for property tests and the `verify` command.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{Antichain, LatticePoint};

fn random_point<R: Rng + ?Sized>(rng: &mut R, dim: usize, lo: i64, hi: i64) -> LatticePoint {
    LatticePoint::from_vec_unchecked((0..dim).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// Up to `k` pairwise incomparable points in `[lo, hi]^dim`, built greedily.
/// Always returns at least one point.
pub fn random_antichain<R: Rng + ?Sized>(rng: &mut R, dim: usize, k: usize, lo: i64, hi: i64) -> Result<Antichain> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if lo > hi || k == 0 {
        return Err(Error::InvalidBounds(format!("need k >= 1 and lo <= hi (k={k}, [{lo}, {hi}])")));
    }
    let mut points: Vec<LatticePoint> = vec![random_point(rng, dim, lo, hi)];
    for _ in 0..40 * k {
        if points.len() == k {
            break;
        }
        let p = random_point(rng, dim, lo, hi);
        if points.iter().all(|q| !p.leq_unchecked(q) && !q.leq_unchecked(&p)) {
            points.push(p);
        }
    }
    Antichain::with_dim(dim, points)
}

/// Bounds `a <= lower` and `b >= upper` with random slack up to `slack`.
pub fn random_bounds<R: Rng + ?Sized>(rng: &mut R, q: &Antichain, slack: i64) -> Result<(LatticePoint, LatticePoint)> {
    let b = crate::augment::bounds(q)?;
    let jitter = |rng: &mut R, p: &LatticePoint, sign: i64| -> Result<LatticePoint> {
        let coords = p.coords().iter().map(|&x| x + sign * rng.gen_range(0..=slack)).collect();
        LatticePoint::new(coords)
    };
    Ok((jitter(rng, &b.lower, -1)?, jitter(rng, &b.upper, 1)?))
}

/// Two incomparable points of `[0, hi]^dim`; needs `dim >= 2` and `hi >= 1`.
pub fn random_incomparable_pair<R: Rng + ?Sized>(rng: &mut R, dim: usize, hi: i64) -> Result<(LatticePoint, LatticePoint)> {
    if dim < 2 || hi < 1 {
        return Err(Error::InvalidBounds(format!("incomparable pairs need d >= 2 and hi >= 1 (d={dim}, hi={hi})")));
    }
    loop {
        let p = random_point(rng, dim, 0, hi);
        let q = random_point(rng, dim, 0, hi);
        if p.dominance(&q)?.is_none() {
            return Ok((p, q));
        }
    }
}

/// An order-generic antichain of `k` points in `[0, hi]^dim`: the first
/// `k!` columns realise every strict order, the rest are uniform, and the
/// columns are shuffled. Needs `dim >= k!` and `hi >= k - 1`.
pub fn random_order_generic<R: Rng + ?Sized>(rng: &mut R, k: usize, dim: usize, hi: i64) -> Result<Antichain> {
    let perms = permutations(k);
    if k == 0 || perms.len() > dim || hi < k as i64 - 1 {
        return Err(Error::InvalidBounds(format!("cannot build {k} order-generic points in [0, {hi}]^{dim}")));
    }
    let mut columns: Vec<Vec<i64>> = Vec::with_capacity(dim);
    for perm in &perms {
        let mut values: Vec<i64> = rand::seq::index::sample(rng, hi as usize + 1, k)
            .into_iter()
            .map(|v| v as i64)
            .collect();
        values.sort_unstable();
        // perm lists point indices from lowest to highest
        let mut col = vec![0; k];
        for (rank, &t) in perm.iter().enumerate() {
            col[t] = values[rank];
        }
        columns.push(col);
    }
    while columns.len() < dim {
        columns.push((0..k).map(|_| rng.gen_range(0..=hi)).collect());
    }
    columns.shuffle(rng);
    let points = (0..k)
        .map(|t| LatticePoint::from_vec_unchecked(columns.iter().map(|c| c[t]).collect()))
        .collect();
    Antichain::with_dim(dim, points)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}
