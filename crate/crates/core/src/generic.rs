//! Coordinate classes by weak ordering, order-generic antichains and the
//! explicit generator sets `P_C` of the zero-dimensional ideal with a given
//! socle `Q = {p_1, .., p_k}`.
//!
//! Point indices refer to the lexicographic order in which an [`Antichain`]
//! stores its points; all indices (points and coordinates) are zero-based.

use std::collections::{BTreeMap, BTreeSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Antichain, LatticePoint};

/// A weak ordering of `{0, .., k-1}`: equivalence blocks listed from the
/// smallest value to the largest, each block sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakOrdering(Vec<Vec<usize>>);

impl WeakOrdering {
    /// The weak ordering of indices induced by `values`.
    pub fn from_values(values: &[i64]) -> Self {
        let mut by_value: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, &v) in values.iter().enumerate() {
            by_value.entry(v).or_default().push(i);
        }
        Self(by_value.into_values().collect())
    }

    /// Builds an ordering from explicit blocks; they must partition `0..k`.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if blocks.iter().any(Vec::is_empty) || all.iter().enumerate().any(|(i, &x)| i != x) {
            return None;
        }
        blocks.iter_mut().for_each(|b| b.sort_unstable());
        Some(Self(blocks))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No ties.
    pub fn is_strict(&self) -> bool {
        self.0.iter().all(|b| b.len() == 1)
    }
}

/// Every weak ordering of `0..k`, in no particular order.
pub fn weak_orderings(k: usize) -> Vec<WeakOrdering> {
    fn rec(remaining: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<WeakOrdering>) {
        if remaining.is_empty() {
            out.push(WeakOrdering(prefix.clone()));
            return;
        }
        let n = remaining.len();
        // choose the next (lowest) block as any nonempty subset
        for mask in 1u32..(1 << n) {
            let (block, rest): (Vec<usize>, Vec<usize>) =
                (0..n).partition(|&i| mask & (1 << i) != 0);
            let block = block.into_iter().map(|i| remaining[i]).collect();
            let rest: Vec<usize> = rest.into_iter().map(|i| remaining[i]).collect();
            prefix.push(block);
            rec(&rest, prefix, out);
            prefix.pop();
        }
    }
    assert!(k < 16, "weak ordering enumeration is exponential");
    let items: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    rec(&items, &mut Vec::new(), &mut out);
    out
}

/// The weak ordering of `(p_1i, .., p_ki)` for each coordinate `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateClassification {
    k: usize,
    assignment: Vec<WeakOrdering>,
}

impl CoordinateClassification {
    pub fn num_points(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.assignment.len()
    }

    pub fn ordering(&self, coordinate: usize) -> &WeakOrdering {
        &self.assignment[coordinate]
    }

    /// Nonempty classes `A_w`, keyed by weak ordering.
    pub fn classes(&self) -> BTreeMap<WeakOrdering, Vec<usize>> {
        let mut out: BTreeMap<WeakOrdering, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.assignment.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    pub fn class(&self, w: &WeakOrdering) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.assignment[i] == w).collect()
    }
}

pub fn classify_coordinates(q: &Antichain) -> CoordinateClassification {
    let assignment = (0..q.dim())
        .map(|i| {
            let column: Vec<i64> = q.iter().map(|p| p.coords()[i]).collect();
            WeakOrdering::from_values(&column)
        })
        .collect();
    CoordinateClassification { k: q.len(), assignment }
}

/// Every one of the `k!` strict orderings of the points is realised by some
/// coordinate. Needs `d >= k!`; the empty antichain is not order-generic.
pub fn is_order_generic(q: &Antichain) -> bool {
    let k = q.len();
    if k == 0 {
        return false;
    }
    let mut factorial = 1usize;
    for n in 2..=k {
        factorial = match factorial.checked_mul(n) {
            Some(f) if f <= q.dim() => f,
            _ => return false,
        };
    }
    let strict: BTreeSet<WeakOrdering> = classify_coordinates(q)
        .assignment
        .into_iter()
        .filter(WeakOrdering::is_strict)
        .collect();
    strict.len() == factorial
}

/// Stirling numbers of the second kind `S(n, j)` for `j = 0..=n`.
pub fn stirling2_row(n: usize) -> Result<Vec<u64>> {
    let mut row = vec![1u64];
    for m in 1..=n {
        let mut next = vec![0u64; m + 1];
        for j in 1..=m {
            let carry = if j < m { row[j].checked_mul(j as u64) } else { Some(0) };
            next[j] = carry
                .and_then(|c| c.checked_add(row[j - 1]))
                .ok_or(Error::CountOverflow(n))?;
        }
        row = next;
    }
    Ok(row)
}

/// Number of weak orderings of a `k`-set: `sum_j S(k, j) * j!`.
pub fn ordered_bell(k: usize) -> Result<u64> {
    if k == 0 {
        return Ok(1);
    }
    let row = stirling2_row(k)?;
    let mut total = 0u64;
    let mut factorial = 1u64;
    for (j, s) in row.iter().enumerate().skip(1) {
        factorial = factorial.checked_mul(j as u64).ok_or(Error::CountOverflow(k))?;
        let term = s.checked_mul(factorial).ok_or(Error::CountOverflow(k))?;
        total = total.checked_add(term).ok_or(Error::CountOverflow(k))?;
    }
    Ok(total)
}

fn check_subset(subset: &[usize], k: usize) -> Result<Vec<usize>> {
    let mut c = subset.to_vec();
    c.sort_unstable();
    c.dedup();
    if c.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&bad) = c.iter().find(|&&i| i >= k) {
        return Err(Error::IndexOutOfRange { index: bad, len: k });
    }
    Ok(c)
}

/// Coordinates where point `a` is strictly below every other point of `subset`.
pub fn b_set(a: usize, subset: &[usize], q: &Antichain) -> Result<Vec<usize>> {
    let c = check_subset(subset, q.len())?;
    if !c.contains(&a) {
        return Err(Error::IndexNotInSubset(a));
    }
    Ok(strictly_lowest(a, &c, q.points()))
}

fn strictly_lowest(a: usize, c: &[usize], pts: &[LatticePoint]) -> Vec<usize> {
    let dim = pts[a].dim();
    (0..dim)
        .filter(|&i| {
            let v = pts[a].coords()[i];
            c.iter().all(|&b| b == a || v < pts[b].coords()[i])
        })
        .collect()
}

/// A generator set `P_C` (or a union of them) with a flag recording whether
/// `Q` was order-generic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcSet {
    pub points: Vec<LatticePoint>,
    pub order_generic: bool,
}

fn unit_sum(dim: usize, terms: &[(usize, i64)], src: &LatticePoint) -> Result<LatticePoint> {
    let mut v = vec![0i64; dim];
    for &(i, e) in terms {
        debug_assert_eq!(v[i], 0, "coordinates of a tuple are distinct");
        v[i] = e.checked_add(1).ok_or_else(|| Error::Overflow(src.clone()))?;
    }
    LatticePoint::new(v)
}

fn p_c_points(c: &[usize], pts: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    let dim = pts[0].dim();
    let k = pts.len();
    let domains: Vec<Vec<usize>> = c.iter().map(|&t| strictly_lowest(t, c, pts)).collect();
    let outsiders: Vec<usize> = (0..k).filter(|s| !c.contains(s)).collect();
    let mut out = Vec::new();
    let mut tuple = vec![0usize; c.len()];
    // odometer over the product of the domains
    if domains.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut idx = vec![0usize; c.len()];
    loop {
        for (n, d) in domains.iter().enumerate() {
            tuple[n] = d[idx[n]];
        }
        // excluded iff the tuple also lies in the product for C ∪ {s}
        let dominated = outsiders.iter().any(|&s| {
            c.iter()
                .zip(&tuple)
                .all(|(&t, &i)| pts[t].coords()[i] < pts[s].coords()[i])
        });
        if !dominated {
            let terms: Vec<(usize, i64)> = c.iter().zip(&tuple).map(|(&t, &i)| (i, pts[t].coords()[i])).collect();
            out.push(unit_sum(dim, &terms, &pts[c[0]])?);
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < domains[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn require_nonnegative(q: &Antichain) -> Result<()> {
    match q.iter().find(|p| !p.is_nonnegative()) {
        Some(p) => Err(Error::NegativeCoordinate(p.clone())),
        None => Ok(()),
    }
}

/// `P_C`: sums `sum_{t in C} (p_{t,i_t} + 1) e_{i_t}` over tuples with
/// `i_t` in `b_set(t, C)`, minus tuples that also lie in the product for
/// some strictly larger subset.
pub fn p_c_set(subset: &[usize], q: &Antichain) -> Result<PcSet> {
    let c = check_subset(subset, q.len())?;
    require_nonnegative(q)?;
    let mut points = p_c_points(&c, q.points())?;
    points.sort();
    points.dedup();
    Ok(PcSet { points, order_generic: is_order_generic(q) })
}

/// The union of `P_C` over all nonempty `C`. For order-generic `Q` this is
/// the generator antichain of the zero-dimensional ideal with socle `Q`.
pub fn p_c_union(q: &Antichain) -> Result<PcSet> {
    let k = q.len();
    if k == 0 {
        return Err(Error::EmptyAntichain);
    }
    if k > 20 {
        return Err(Error::ScaleGuard(format!("{k} points give 2^{k} subsets")));
    }
    require_nonnegative(q)?;
    let pts = q.points();
    let subset = |mask: u32| -> Vec<usize> { (0..k).filter(|i| mask & (1 << i) != 0).collect() };
    let masks = 1u32..(1u32 << k);
    #[cfg(feature = "parallel")]
    let parts: Vec<Vec<LatticePoint>> =
        masks.into_par_iter().map(|m| p_c_points(&subset(m), pts)).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Vec<LatticePoint>> = masks.map(|m| p_c_points(&subset(m), pts)).collect::<Result<_>>()?;
    let union: BTreeSet<LatticePoint> = parts.into_iter().flatten().collect();
    Ok(PcSet { points: union.into_iter().collect(), order_generic: is_order_generic(q) })
}

/// The thirteen coordinate classes of a three-point antichain, with point
/// indices `u, v, w` in `0..3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Type3Class {
    /// `p_a < p_b < p_c` for `[a, b, c]`.
    Strict([usize; 3]),
    /// The two points other than `top` tie below `top`.
    TiedLow { top: usize },
    /// The two points other than `bottom` tie above `bottom`.
    TiedHigh { bottom: usize },
    AllTied,
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

impl Type3Class {
    pub fn all() -> Vec<Type3Class> {
        let mut out: Vec<Type3Class> = PERMS3.iter().map(|&p| Type3Class::Strict(p)).collect();
        out.extend((0..3).map(|top| Type3Class::TiedLow { top }));
        out.extend((0..3).map(|bottom| Type3Class::TiedHigh { bottom }));
        out.push(Type3Class::AllTied);
        out
    }

    fn of(values: [i64; 3]) -> Self {
        let mut order = [0usize, 1, 2];
        order.sort_by_key(|&i| (values[i], i));
        let [a, b, c] = order;
        match (values[a] == values[b], values[b] == values[c]) {
            (true, true) => Type3Class::AllTied,
            (true, false) => Type3Class::TiedLow { top: c },
            (false, true) => Type3Class::TiedHigh { bottom: a },
            (false, false) => Type3Class::Strict(order),
        }
    }
}

fn third(u: usize, v: usize) -> usize {
    debug_assert!(u != v && u < 3 && v < 3);
    3 - u - v
}

/// Coordinate classes of a three-point antichain and the derived sets used
/// to write down its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type3Sets {
    dim: usize,
    classes: BTreeMap<Type3Class, Vec<usize>>,
}

impl Type3Sets {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn class(&self, c: Type3Class) -> &[usize] {
        self.classes.get(&c).map(Vec::as_slice).unwrap_or(&[])
    }

    fn union(&self, parts: &[Type3Class]) -> Vec<usize> {
        let mut out: Vec<usize> = parts.iter().flat_map(|&c| self.class(c).iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// Coordinates where `u` is the sole minimum, `B_u({0,1,2})`.
    pub fn sole_min(&self, u: usize) -> Vec<usize> {
        let [v, w] = others(u);
        self.union(&[Type3Class::Strict([u, v, w]), Type3Class::Strict([u, w, v]), Type3Class::TiedHigh { bottom: u }])
    }

    /// Coordinates where `p_u < p_v` but `u` is not the sole minimum:
    /// `A_{uw,v} ∪ A_{w,u,v}`.
    pub fn pair_below(&self, u: usize, v: usize) -> Vec<usize> {
        let w = third(u, v);
        self.union(&[Type3Class::TiedLow { top: v }, Type3Class::Strict([w, u, v])])
    }

    /// Coordinates where `u` is the sole maximum.
    pub fn sole_max(&self, u: usize) -> Vec<usize> {
        let [v, w] = others(u);
        self.union(&[Type3Class::Strict([v, w, u]), Type3Class::Strict([w, v, u]), Type3Class::TiedLow { top: u }])
    }

    /// Coordinates where `u` ties for the maximum with exactly one other point.
    pub fn shared_max(&self, u: usize) -> Vec<usize> {
        let [v, w] = others(u);
        self.union(&[Type3Class::TiedHigh { bottom: w }, Type3Class::TiedHigh { bottom: v }])
    }

    pub fn sizes(&self) -> Type3ClassSizes {
        Type3ClassSizes {
            dim: self.dim,
            counts: Type3Class::all().into_iter().map(|c| (c, self.class(c).len())).collect(),
        }
    }
}

fn others(u: usize) -> [usize; 2] {
    match u {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

pub fn type3_sets(q: &Antichain) -> Result<Type3Sets> {
    if q.len() != 3 {
        return Err(Error::WrongSize { expected: 3, found: q.len() });
    }
    let pts = q.points();
    let mut classes: BTreeMap<Type3Class, Vec<usize>> = BTreeMap::new();
    for i in 0..q.dim() {
        let values = [pts[0].coords()[i], pts[1].coords()[i], pts[2].coords()[i]];
        classes.entry(Type3Class::of(values)).or_default().push(i);
    }
    Ok(Type3Sets { dim: q.dim(), classes })
}

/// The pieces of the type-3 generator set, before taking the union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type3Parts {
    /// Three-point terms over `sole_min(0) x sole_min(1) x sole_min(2)`.
    pub triple: Vec<LatticePoint>,
    /// Two-point terms for the pairs `(0,1)`, `(0,2)`, `(1,2)`, over
    /// `pair_below(u,v) x pair_below(v,u) ∪ pair_below(u,v) x sole_min(v) ∪ sole_min(u) x pair_below(v,u)`.
    pub pairs: [((usize, usize), Vec<LatticePoint>); 3],
    /// One-point terms `(p_{u,i} + 1) e_i` where `u` attains the maximum.
    pub singles: [Vec<LatticePoint>; 3],
}

impl Type3Parts {
    pub fn union(&self) -> BTreeSet<LatticePoint> {
        let pairs = self.pairs.iter().flat_map(|(_, v)| v.iter());
        self.triple.iter().chain(pairs).chain(self.singles.iter().flatten()).cloned().collect()
    }
}

/// The explicit pieces for an order-generic nonnegative three-point socle.
pub fn type3_parts(q: &Antichain) -> Result<Type3Parts> {
    let sets = type3_sets(q)?;
    require_nonnegative(q)?;
    if !is_order_generic(q) {
        return Err(Error::NotOrderGeneric);
    }
    let pts = q.points();
    let dim = q.dim();
    let val = |u: usize, i: usize| (i, pts[u].coords()[i]);

    let mins: Vec<Vec<usize>> = (0..3).map(|u| sets.sole_min(u)).collect();
    let mut triple = Vec::new();
    for &i0 in &mins[0] {
        for &i1 in &mins[1] {
            for &i2 in &mins[2] {
                triple.push(unit_sum(dim, &[val(0, i0), val(1, i1), val(2, i2)], &pts[0])?);
            }
        }
    }

    let pair = |u: usize, v: usize| -> Result<((usize, usize), Vec<LatticePoint>)> {
        let (uv, vu) = (sets.pair_below(u, v), sets.pair_below(v, u));
        let mut out = BTreeSet::new();
        let cross = uv
            .iter()
            .flat_map(|&i| vu.iter().chain(&mins[v]).map(move |&j| (i, j)))
            .chain(mins[u].iter().flat_map(|&i| vu.iter().map(move |&j| (i, j))));
        for (i, j) in cross {
            out.insert(unit_sum(dim, &[val(u, i), val(v, j)], &pts[u])?);
        }
        Ok(((u, v), out.into_iter().collect()))
    };
    let pairs = [pair(0, 1)?, pair(0, 2)?, pair(1, 2)?];

    let single = |u: usize| -> Result<Vec<LatticePoint>> {
        let mut coords = sets.sole_max(u);
        coords.extend(sets.shared_max(u));
        coords.extend_from_slice(sets.class(Type3Class::AllTied));
        coords.sort_unstable();
        coords.into_iter().map(|i| unit_sum(dim, &[val(u, i)], &pts[u])).collect()
    };
    let singles = [single(0)?, single(1)?, single(2)?];

    Ok(Type3Parts { triple, pairs, singles })
}

/// Generators of the zero-dimensional type-3 ideal with order-generic
/// socle `q`: the union of [`type3_parts`].
pub fn type3_generators(q: &Antichain) -> Result<Antichain> {
    let parts = type3_parts(q)?;
    Antichain::with_dim(q.dim(), parts.union().into_iter().collect())
}

/// Sizes of the thirteen classes of a three-point antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type3ClassSizes {
    pub dim: usize,
    pub counts: BTreeMap<Type3Class, usize>,
}

impl Type3ClassSizes {
    fn get(&self, c: Type3Class) -> i128 {
        self.counts.get(&c).copied().unwrap_or(0) as i128
    }
}

/// Closed-form number of generators of the zero-dimensional ideal with a
/// three-point socle, from the class sizes alone.
pub fn type3_cardinality(sizes: &Type3ClassSizes) -> Result<u64> {
    let sum: usize = sizes.counts.values().sum();
    if sum != sizes.dim {
        return Err(Error::InconsistentSizes { sum, dim: sizes.dim });
    }
    let a = |c| sizes.get(c);
    let sole_min = |u: usize| {
        let [v, w] = others(u);
        a(Type3Class::Strict([u, v, w])) + a(Type3Class::Strict([u, w, v])) + a(Type3Class::TiedHigh { bottom: u })
    };
    let pair_below = |u: usize, v: usize| {
        a(Type3Class::TiedLow { top: v }) + a(Type3Class::Strict([third(u, v), u, v]))
    };
    let sole_max = |u: usize| {
        let [v, w] = others(u);
        a(Type3Class::Strict([v, w, u])) + a(Type3Class::Strict([w, v, u])) + a(Type3Class::TiedLow { top: u })
    };

    let mut total = sole_min(0) * sole_min(1) * sole_min(2);
    for (u, v) in [(0, 1), (0, 2), (1, 2)] {
        total += pair_below(u, v) * pair_below(v, u)
            + pair_below(u, v) * sole_min(v)
            + sole_min(u) * pair_below(v, u);
    }
    for u in 0..3 {
        // P_{u,v} and P_{u,w} share sole_min(u) x A_{vw,u}
        total -= sole_min(u) * a(Type3Class::TiedLow { top: u });
        total += sole_max(u);
    }
    total += (0..3).map(|u| a(Type3Class::TiedHigh { bottom: u })).sum::<i128>();
    total += a(Type3Class::AllTied);
    u64::try_from(total).map_err(|_| Error::CountOverflow(3))
}
