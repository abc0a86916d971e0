//! Corner augmentation: padding an antichain with `d` extreme points so that
//! its upset becomes cofinite (or its downset corner-bounded).
//!
//! For bounds `a < b`:
//!
//! * `up_corners(a, b)` holds the points with `b` on one axis and `a` on all
//!   others, `{(b1,a2,..,ad), (a1,b2,..,ad), ..}`;
//! * `down_corners(a, b)` holds the points with `a` on one axis and `b` on
//!   all others, `{(a1,b2,..,bd), (b1,a2,..,bd), ..}`.
//!
//! The two patterns are exchanged by the rotation `x -> (a + b) - x`.

use crate::error::{Error, Result};
use crate::lattice::{maximal_elements, minimal_elements, Antichain, LatticePoint};

/// Per-axis `min - 1` and `max + 1` of an antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lower: LatticePoint,
    pub upper: LatticePoint,
}

pub fn bounds(points: &Antichain) -> Result<Bounds> {
    let first = points.points().first().ok_or(Error::EmptyAntichain)?;
    let mut lo = first.coords().to_vec();
    let mut hi = lo.clone();
    for p in points {
        for (i, &x) in p.coords().iter().enumerate() {
            lo[i] = lo[i].min(x);
            hi[i] = hi[i].max(x);
        }
    }
    let lower = LatticePoint::new(lo)?.shift_all(-1)?;
    let upper = LatticePoint::new(hi)?.shift_all(1)?;
    Ok(Bounds { lower, upper })
}

fn check_strict(a: &LatticePoint, b: &LatticePoint) -> Result<()> {
    a.check_dim(b)?;
    if a.coords().iter().zip(b.coords()).any(|(x, y)| x >= y) {
        return Err(Error::InvalidBounds(format!("{a} is not strictly below {b}")));
    }
    Ok(())
}

fn corner_pattern(a: &LatticePoint, b: &LatticePoint, spike: &LatticePoint, base: &LatticePoint) -> Vec<LatticePoint> {
    let dim = a.dim();
    (0..dim)
        .map(|axis| {
            let coords = (0..dim)
                .map(|i| if i == axis { spike.coords()[i] } else { base.coords()[i] })
                .collect();
            LatticePoint::from_vec_unchecked(coords)
        })
        .inspect(|p| debug_assert!(a.leq_unchecked(p) && p.leq_unchecked(b)))
        .collect()
}

/// `b` on one axis, `a` elsewhere.
#[doc(alias = "b_star")]
pub fn up_corners(a: &LatticePoint, b: &LatticePoint) -> Result<Antichain> {
    check_strict(a, b)?;
    Antichain::with_dim(a.dim(), corner_pattern(a, b, b, a))
}

/// `a` on one axis, `b` elsewhere.
#[doc(alias = "b_lower")]
pub fn down_corners(a: &LatticePoint, b: &LatticePoint) -> Result<Antichain> {
    check_strict(a, b)?;
    Antichain::with_dim(a.dim(), corner_pattern(a, b, a, b))
}

/// Resolves the augmentation bounds, defaulting to [`bounds`] and checking
/// `a <= lower` and `b >= upper` when supplied.
pub fn resolve_bounds(
    points: &Antichain,
    a: Option<&LatticePoint>,
    b: Option<&LatticePoint>,
) -> Result<(LatticePoint, LatticePoint)> {
    let Bounds { lower, upper } = bounds(points)?;
    let a = match a {
        Some(a) => {
            if !a.leq(&lower)? {
                return Err(Error::InvalidBounds(format!("a = {a} is not below {lower}")));
            }
            a.clone()
        }
        None => lower,
    };
    let b = match b {
        Some(b) => {
            if !upper.leq(b)? {
                return Err(Error::InvalidBounds(format!("b = {b} is not above {upper}")));
            }
            b.clone()
        }
        None => upper,
    };
    Ok((a, b))
}

/// `G ∪ up_corners(a, b)`.
///
/// For `d >= 2` this is a disjoint union and an antichain of `|G| + d`
/// points. With `d = 1` the single corner lies above `G`, and the minimal
/// elements of the union are returned.
#[doc(alias = "g_star")]
pub fn augment_up(g: &Antichain, a: Option<&LatticePoint>, b: Option<&LatticePoint>) -> Result<Antichain> {
    let (a, b) = resolve_bounds(g, a, b)?;
    let mut all = g.points().to_vec();
    all.extend(up_corners(&a, &b)?.into_points());
    minimal_elements(g.dim(), &all)
}

/// `Q ∪ down_corners(a, b)`; see [`augment_up`] for the `d = 1` case.
#[doc(alias = "q_star")]
pub fn augment_down(q: &Antichain, a: Option<&LatticePoint>, b: Option<&LatticePoint>) -> Result<Antichain> {
    let (a, b) = resolve_bounds(q, a, b)?;
    let mut all = q.points().to_vec();
    all.extend(down_corners(&a, &b)?.into_points());
    maximal_elements(q.dim(), &all)
}
