//! Exact integer lattice points under the componentwise (dominance) order,
//! antichains in canonical form, and the two order (anti-)automorphisms of
//! `Z^d`: translation `x -> x + c` and rotation `x -> c - x`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An exponent vector in `Z^d`.
///
/// The derived `Ord` is lexicographic and only used for canonical storage;
/// the dominance order is [`LatticePoint::leq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(coords))
    }

    /// `(v, v, ..., v)`.
    pub fn splat(dim: usize, value: i64) -> Result<Self> {
        Self::new(vec![value; dim])
    }

    /// `scale * e_axis`.
    pub fn axis(dim: usize, axis: usize, scale: i64) -> Result<Self> {
        if axis >= dim {
            return Err(Error::IndexOutOfRange { index: axis, len: dim });
        }
        let mut coords = vec![0; dim];
        coords[axis] = scale;
        Self::new(coords)
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<i64>) -> Self {
        debug_assert!(!coords.is_empty());
        Self(coords)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub(crate) fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.leq_unchecked(other))
    }

    #[inline]
    pub(crate) fn leq_unchecked(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Dominance comparison; `None` for incomparable points.
    pub fn dominance(&self, other: &Self) -> Result<Option<Ordering>> {
        self.check_dim(other)?;
        let (mut le, mut ge) = (true, true);
        for (a, b) in self.0.iter().zip(&other.0) {
            le &= a <= b;
            ge &= a >= b;
        }
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
            .ok_or_else(|| Error::Overflow(self.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
            .ok_or_else(|| Error::Overflow(self.clone()))
    }

    /// Adds `delta` to every coordinate.
    pub fn shift_all(&self, delta: i64) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_add(delta))
            .collect::<Option<Vec<_>>>()
            .map(Self)
            .ok_or_else(|| Error::Overflow(self.clone()))
    }

    /// Adds `delta` to a single coordinate.
    pub fn shift_axis(&self, axis: usize, delta: i64) -> Result<Self> {
        if axis >= self.dim() {
            return Err(Error::IndexOutOfRange { index: axis, len: self.dim() });
        }
        let mut coords = self.0.clone();
        coords[axis] = coords[axis].checked_add(delta).ok_or_else(|| Error::Overflow(self.clone()))?;
        Ok(Self(coords))
    }

    /// `x + c`.
    pub fn translate(&self, c: &Self) -> Result<Self> {
        self.checked_add(c)
    }

    /// `c - x`.
    pub fn rotate(&self, c: &Self) -> Result<Self> {
        c.checked_sub(self)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect()))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect()))
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl TryFrom<Vec<i64>> for LatticePoint {
    type Error = Error;

    fn try_from(coords: Vec<i64>) -> Result<Self> {
        Self::new(coords)
    }
}

/// Shorthand used throughout the tests: `pt(&[2, 2, 3])`.
///
/// Panics on an empty slice.
pub fn pt(coords: &[i64]) -> LatticePoint {
    LatticePoint::new(coords.to_vec()).expect("non-empty coordinate list")
}

fn common_dim(points: &[LatticePoint]) -> Result<Option<usize>> {
    let Some(first) = points.first() else {
        return Ok(None);
    };
    for p in &points[1..] {
        first.check_dim(p)?;
    }
    Ok(Some(first.dim()))
}

/// A finite set of pairwise incomparable points of equal dimension, stored
/// sorted lexicographically so that equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    dim: usize,
    points: Vec<LatticePoint>,
}

impl Antichain {
    /// Validates dimensions and pairwise incomparability. Duplicates collapse.
    pub fn new(points: Vec<LatticePoint>) -> Result<Self> {
        let dim = common_dim(&points)?.ok_or(Error::EmptyAntichain)?;
        Self::with_dim(dim, points)
    }

    /// Like [`Antichain::new`] but accepts an empty list.
    pub fn with_dim(dim: usize, mut points: Vec<LatticePoint>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        points.sort();
        points.dedup();
        for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                if a.leq_unchecked(b) || b.leq_unchecked(a) {
                    return Err(Error::NotAntichain(a.clone(), b.clone()));
                }
            }
        }
        Ok(Self { dim, points })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Self::with_dim(dim, Vec::new())
    }

    /// Caller guarantees sorted, deduplicated, pairwise incomparable input.
    pub(crate) fn from_sorted_unchecked(dim: usize, points: Vec<LatticePoint>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(is_antichain(&points).unwrap_or(false));
        Self { dim, points }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<LatticePoint> {
        self.points
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.points.iter().all(LatticePoint::is_nonnegative)
    }

    /// Image under `x -> x + c`; translation is an order automorphism.
    pub fn translate(&self, c: &LatticePoint) -> Result<Self> {
        let mut points = self.points.iter().map(|p| p.translate(c)).collect::<Result<Vec<_>>>()?;
        points.sort();
        Ok(Self { dim: self.dim, points })
    }

    /// Image under `x -> c - x`; rotation reverses the order, so antichains
    /// map to antichains.
    pub fn rotate(&self, c: &LatticePoint) -> Result<Self> {
        let mut points = self.points.iter().map(|p| p.rotate(c)).collect::<Result<Vec<_>>>()?;
        points.sort();
        Ok(Self { dim: self.dim, points })
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.points).finish()
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl<'a> IntoIterator for &'a Antichain {
    type Item = &'a LatticePoint;
    type IntoIter = std::slice::Iter<'a, LatticePoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Componentwise `a <= b`.
pub fn leq(a: &LatticePoint, b: &LatticePoint) -> Result<bool> {
    a.leq(b)
}

/// True iff the points are pairwise incomparable.
pub fn is_antichain(points: &[LatticePoint]) -> Result<bool> {
    common_dim(points)?;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a.leq_unchecked(b) || b.leq_unchecked(a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Points of `points` not strictly above another point of `points`.
///
/// A point strictly below another is also lexicographically smaller, so a
/// single pass in lexicographic order only ever compares against survivors.
pub fn minimal_elements(dim: usize, points: &[LatticePoint]) -> Result<Antichain> {
    let mut sorted = points.to_vec();
    for p in &sorted {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
    }
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<LatticePoint> = Vec::new();
    for p in sorted {
        if !kept.iter().any(|q| q.leq_unchecked(&p)) {
            kept.push(p);
        }
    }
    Ok(Antichain::from_sorted_unchecked(dim, kept))
}

/// Points of `points` not strictly below another point of `points`.
pub fn maximal_elements(dim: usize, points: &[LatticePoint]) -> Result<Antichain> {
    let mut sorted = points.to_vec();
    for p in &sorted {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
    }
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<LatticePoint> = Vec::new();
    for p in sorted.into_iter().rev() {
        if !kept.iter().any(|q| p.leq_unchecked(q)) {
            kept.push(p);
        }
    }
    kept.reverse();
    Ok(Antichain::from_sorted_unchecked(dim, kept))
}

pub fn translate(points: &[LatticePoint], c: &LatticePoint) -> Result<Vec<LatticePoint>> {
    points.iter().map(|p| p.translate(c)).collect()
}

pub fn rotate(points: &[LatticePoint], c: &LatticePoint) -> Result<Vec<LatticePoint>> {
    points.iter().map(|p| p.rotate(c)).collect()
}
