//! Going back and forth between generators and socles.
//!
//! * [`retrieve_generators`] recovers `G` from the socle of its augmented
//!   upset: `G = S_u(D(S_d(U(G ∪ up_corners(a, b)))))`.
//! * [`socle_to_generators`] goes the other way: the upset generated by
//!   `S_u(D(Q ∪ down_corners(a, b)))` has socle exactly `Q`.
//! * [`zero_dim_ideal_from_socle`] is the special choice `a = -1`, which lands
//!   in `N_0^d` and gives the unique zero-dimensional ideal with socle `Q`.

use crate::augment::{augment_down, bounds};
use crate::corner::{enumerate_corners, Orientation, Strategy};
use crate::error::{Error, Result};
use crate::lattice::{Antichain, LatticePoint};
use crate::updown::{DownSet, UpSet};

/// `S_u(D(socle))`. Equals `G` whenever `socle = S_d(U(G*(a, b)))` with
/// `a <= lower(G)` and `b >= upper(G)`.
pub fn retrieve_generators(socle: &Antichain) -> Result<Antichain> {
    if socle.is_empty() {
        return Err(Error::EmptyAntichain);
    }
    enumerate_corners(socle, Orientation::Up, Strategy::default())
}

/// `S_d(U(gens))` without the cofiniteness precondition. The corner search
/// is exact for any finite generator set.
pub fn socle_of_generators(gens: &Antichain) -> Result<Antichain> {
    enumerate_corners(gens, Orientation::Down, Strategy::default())
}

/// Generators of a monomial ideal whose socle is `q`, built from
/// `q ∪ down_corners(a, b)`. Both bounds default to the per-axis
/// `min - 1` / `max + 1` of `q`.
pub fn socle_to_generators(q: &Antichain, a: Option<&LatticePoint>, b: Option<&LatticePoint>) -> Result<Antichain> {
    if q.is_empty() {
        return Err(Error::EmptyAntichain);
    }
    let augmented = augment_down(q, a, b)?;
    DownSet::from_antichain(augmented).socle()
}

/// The unique zero-dimensional ideal with socle `q` (`q` in `N_0^d`).
pub fn zero_dim_ideal_from_socle(q: &Antichain) -> Result<Antichain> {
    let upper = bounds(q)?.upper;
    zero_dim_ideal_from_socle_with(q, &upper)
}

/// As [`zero_dim_ideal_from_socle`] with an explicit outer corner `b`; the
/// result does not depend on `b` as long as `b` dominates `max + 1`.
pub fn zero_dim_ideal_from_socle_with(q: &Antichain, b: &LatticePoint) -> Result<Antichain> {
    if q.is_empty() {
        return Err(Error::EmptyAntichain);
    }
    if let Some(p) = q.iter().find(|p| !p.is_nonnegative()) {
        return Err(Error::NegativeCoordinate(p.clone()));
    }
    // intermediate corners carry -1 coordinates; the output does not
    let a = LatticePoint::splat(q.dim(), -1)?;
    let gens = socle_to_generators(q, Some(&a), Some(b))?;
    debug_assert!(gens.is_nonnegative());
    debug_assert!(pure_power_axes(&gens).iter().all(|&x| x));
    Ok(gens)
}

/// The three-way split of coordinates for two points `p`, `q`:
/// `below = {i : p_i < q_i}`, `equal = {i : p_i = q_i}`, `above = {i : p_i > q_i}`.
/// Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateSplit {
    pub below: Vec<usize>,
    pub equal: Vec<usize>,
    pub above: Vec<usize>,
}

pub fn pseudo_partition_2(p: &LatticePoint, q: &LatticePoint) -> Result<CoordinateSplit> {
    p.check_dim(q)?;
    let mut split = CoordinateSplit { below: vec![], equal: vec![], above: vec![] };
    for (i, (a, b)) in p.coords().iter().zip(q.coords()).enumerate() {
        match a.cmp(b) {
            std::cmp::Ordering::Less => split.below.push(i),
            std::cmp::Ordering::Equal => split.equal.push(i),
            std::cmp::Ordering::Greater => split.above.push(i),
        }
    }
    if split.below.is_empty() || split.above.is_empty() {
        let (lo, hi) = if split.above.is_empty() { (p, q) } else { (q, p) };
        return Err(Error::NotAntichain(lo.clone(), hi.clone()));
    }
    Ok(split)
}

/// Closed-form generators of the zero-dimensional ideal with socle `{p, q}`:
///
/// * `(p_i + 1) e_i + (q_j + 1) e_j` for `i` in `below`, `j` in `above`,
/// * `(p_i + 1) e_i` for `i` in `equal ∪ above`,
/// * `(q_i + 1) e_i` for `i` in `below`.
///
/// There are `|below| * |above| + d` of them.
pub fn type2_generators(p: &LatticePoint, q: &LatticePoint) -> Result<Antichain> {
    let split = pseudo_partition_2(p, q)?;
    for x in [p, q] {
        if !x.is_nonnegative() {
            return Err(Error::NegativeCoordinate(x.clone()));
        }
    }
    let dim = p.dim();
    let (pc, qc) = (p.coords(), q.coords());
    let power = |i: usize, e: i64| -> Result<Vec<i64>> {
        let mut v = vec![0; dim];
        v[i] = e.checked_add(1).ok_or_else(|| Error::Overflow(p.clone()))?;
        Ok(v)
    };
    let mut out = Vec::with_capacity(split.below.len() * split.above.len() + dim);
    for &i in &split.below {
        for &j in &split.above {
            let mut v = power(i, pc[i])?;
            v[j] = power(j, qc[j])?[j];
            out.push(LatticePoint::new(v)?);
        }
        out.push(LatticePoint::new(power(i, qc[i])?)?);
    }
    for &i in split.equal.iter().chain(&split.above) {
        out.push(LatticePoint::new(power(i, pc[i])?)?);
    }
    Antichain::with_dim(dim, out)
}

/// Outcome of [`classify_type`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeReport {
    pub is_zero_dimensional: bool,
    /// Number of socle monomials; only defined for zero-dimensional ideals.
    pub type_k: Option<usize>,
    pub is_gorenstein: bool,
}

fn pure_power_axes(gens: &Antichain) -> Vec<bool> {
    let mut seen = vec![false; gens.dim()];
    for g in gens {
        let mut support = g.coords().iter().enumerate().filter(|(_, &x)| x != 0);
        if let (Some((i, _)), None) = (support.next(), support.next()) {
            seen[i] = true;
        }
    }
    seen
}

/// Zero-dimensionality, type and Gorenstein property of the ideal generated
/// by the monomials `gens` (exponent vectors in `N_0^d`).
///
/// The unit ideal (zero vector among the generators) is reported as not
/// zero-dimensional.
pub fn classify_type(gens: &Antichain) -> Result<TypeReport> {
    if let Some(p) = gens.iter().find(|p| !p.is_nonnegative()) {
        return Err(Error::NegativeCoordinate(p.clone()));
    }
    let not_zero_dim = TypeReport { is_zero_dimensional: false, type_k: None, is_gorenstein: false };
    if gens.is_empty() || gens.iter().any(|g| g.coords().iter().all(|&x| x == 0)) {
        return Ok(not_zero_dim);
    }
    if !pure_power_axes(gens).iter().all(|&x| x) {
        return Ok(not_zero_dim);
    }
    let k = UpSet::from_antichain(gens.clone()).socle()?.len();
    Ok(TypeReport { is_zero_dimensional: true, type_k: Some(k), is_gorenstein: k == 1 })
}
