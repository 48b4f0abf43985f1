//! Vertex-represented polytopes and the LP-backed predicates on them.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lp::{LinearProgram, Relation};
use super::vector::{serde_rational, Rational, Vector};
use crate::error::{Error, Result};

/// Convex hull of finitely many points, stored by its irredundant vertex list.
///
/// Vertices keep the order of first appearance among the generators, so
/// anything enumerated over them (vertex combinations in particular) follows
/// the caller's input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polytope {
    vertices: Vec<Vector>,
}

impl Polytope {
    /// Builds the hull of `generators`, discarding redundant points.
    pub fn new(generators: Vec<Vector>) -> Result<Self> {
        let vertices = remove_redundant(&generators)?;
        Ok(Polytope { vertices })
    }

    /// Builds a polytope whose vertex list is already known to be irredundant.
    pub fn from_vertices_unchecked(vertices: Vec<Vector>) -> Self {
        Polytope { vertices }
    }

    pub fn point(p: Vector) -> Self {
        Polytope { vertices: vec![p] }
    }

    /// The full simplex Δ({1..m}).
    pub fn simplex(m: usize) -> Self {
        Polytope { vertices: (0..m).map(|s| Vector::unit(m, s)).collect() }
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn is_singleton(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn contains(&self, p: &Vector) -> Result<bool> {
        membership(p, self)
    }

    /// Every vertex of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Polytope) -> Result<bool> {
        for v in &self.vertices {
            if !membership(v, other)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same point set (vertex lists equal up to order).
    pub fn same_set(&self, other: &Polytope) -> bool {
        let mut a = self.vertices.clone();
        let mut b = other.vertices.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Affine hyperplane `normal·x = threshold`, used as a strict separator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: Vector,
    #[serde(with = "serde_rational")]
    pub threshold: Rational,
}

impl Hyperplane {
    pub fn value(&self, x: &Vector) -> Rational {
        self.normal.dot(x)
    }

    /// Direct check that `normal·v > threshold` for every `above` point and
    /// `threshold > normal·w` for every `below` point.
    pub fn strictly_separates(&self, above: &[Vector], below: &[Vector]) -> bool {
        !self.normal.is_zero()
            && above.iter().all(|v| v.dim() == self.normal.dim() && self.value(v) > self.threshold)
            && below.iter().all(|w| w.dim() == self.normal.dim() && self.value(w) < self.threshold)
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Convex weights expressing `p` over the vertices of `poly`, if `p` lies in it.
pub fn membership_weights(p: &Vector, poly: &Polytope) -> Result<Option<Vec<Rational>>> {
    check_dim(poly.dim(), p.dim())?;
    Ok(convex_weights(p, poly.vertices()))
}

/// Weights `μ ≥ 0, Σμ = 1` with `Σ μ_j points_j = target`.
pub(crate) fn convex_weights(target: &Vector, points: &[Vector]) -> Option<Vec<Rational>> {
    let k = points.len();
    let mut lp = LinearProgram::new(k);
    lp.add(vec![Rational::one(); k], Relation::Eq, Rational::one());
    for coord in 0..target.dim() {
        lp.add(points.iter().map(|v| v[coord].clone()).collect(), Relation::Eq, target[coord].clone());
    }
    lp.solve().optimal().map(|(mu, _)| mu)
}

pub fn membership(p: &Vector, poly: &Polytope) -> Result<bool> {
    Ok(membership_weights(p, poly)?.is_some())
}

/// A common point of `conv(a)` and `conv(b)`, with the convex weights on each
/// side, if the hulls meet.
pub fn hulls_intersect(a: &[Vector], b: &[Vector]) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let (ka, kb) = (a.len(), b.len());
    let dim = a[0].dim();
    let mut lp = LinearProgram::new(ka + kb);
    let mut row = vec![Rational::zero(); ka + kb];
    row[..ka].fill(Rational::one());
    lp.add(row, Relation::Eq, Rational::one());
    let mut row = vec![Rational::zero(); ka + kb];
    row[ka..].fill(Rational::one());
    lp.add(row, Relation::Eq, Rational::one());
    for coord in 0..dim {
        let row: Vec<Rational> = a
            .iter()
            .map(|v| v[coord].clone())
            .chain(b.iter().map(|w| -&w[coord]))
            .collect();
        lp.add(row, Relation::Eq, Rational::zero());
    }
    lp.solve().optimal().map(|(x, _)| (x[..ka].to_vec(), x[ka..].to_vec()))
}

/// Strictly separates `conv(points)` from `poly`: returns `(λ, κ)` with
/// `λ·v > κ > λ·w` for all `v` in `points` and all vertices `w`, or `None`
/// when the two sets meet.
///
/// Maximizes the margin `t` subject to `λ·v ≥ κ + t`, `λ·w ≤ κ − t` and
/// `−1 ≤ λ_s ≤ 1`; the sets are disjoint iff the optimum is positive.
pub fn separate(points: &[Vector], poly: &Polytope) -> Result<Option<Hyperplane>> {
    if points.is_empty() {
        return Err(Error::EmptyInput("separate: no points"));
    }
    let m = poly.dim();
    for p in points {
        check_dim(m, p.dim())?;
    }
    // Variables: λ_0..λ_{m-1}, κ, t; all free.
    let (kappa, t) = (m, m + 1);
    let mut lp = LinearProgram::new(m + 2);
    for var in 0..m + 2 {
        lp.set_free(var);
    }
    lp.maximize_var(t);
    let one = Rational::one();
    for v in points {
        let mut row: Vec<Rational> = v.0.clone();
        row.push(-one.clone());
        row.push(-one.clone());
        lp.add(row, Relation::Ge, Rational::zero());
    }
    for w in poly.vertices() {
        let mut row: Vec<Rational> = w.0.clone();
        row.push(-one.clone());
        row.push(one.clone());
        lp.add(row, Relation::Le, Rational::zero());
    }
    for s in 0..m {
        lp.add_terms(&[(s, one.clone())], Relation::Le, one.clone());
        lp.add_terms(&[(s, one.clone())], Relation::Ge, -one.clone());
    }
    let (x, margin) = lp.solve().optimal().expect("margin LP is feasible and bounded");
    if !margin.is_positive() {
        return Ok(None);
    }
    let h = Hyperplane { normal: Vector(x[..m].to_vec()), threshold: x[kappa].clone() };
    debug_assert!(h.strictly_separates(points, poly.vertices()));
    Ok(Some(h))
}

/// `max_{p ∈ poly} direction·p`, attained at a vertex.
pub fn support(poly: &Polytope, direction: &Vector) -> Result<Rational> {
    check_dim(poly.dim(), direction.dim())?;
    if direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(poly
        .vertices()
        .iter()
        .map(|v| direction.dot(v))
        .max()
        .expect("polytope has a vertex"))
}

/// Index of a vertex attaining the support value (first in vertex order).
pub fn support_vertex(poly: &Polytope, direction: &Vector) -> usize {
    let mut best = 0;
    let mut best_value = direction.dot(&poly.vertices()[0]);
    for (i, v) in poly.vertices().iter().enumerate().skip(1) {
        let value = direction.dot(v);
        if value > best_value {
            best = i;
            best_value = value;
        }
    }
    best
}

/// The extreme points of `conv(points)`, in order of first appearance.
pub fn remove_redundant(points: &[Vector]) -> Result<Vec<Vector>> {
    let first = points.first().ok_or(Error::EmptyInput("remove_redundant: no points"))?;
    for p in points {
        check_dim(first.dim(), p.dim())?;
    }
    let mut kept: Vec<Vector> = Vec::with_capacity(points.len());
    for p in points {
        if !kept.contains(p) {
            kept.push(p.clone());
        }
    }
    // Dropping a point that lies in the hull of the others never changes the
    // hull, so one sequential pass reaches the extreme points.
    let mut i = 0;
    while i < kept.len() && kept.len() > 1 {
        let others: Vec<Vector> = kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
        if convex_weights(&kept[i], &others).is_some() {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(kept)
}
