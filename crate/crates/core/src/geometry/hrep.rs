//! Conversion between vertex and half-space representations.
//!
//! Both directions go through the double-description method on a homogenized
//! cone. Polytopes living in a proper affine subspace (every belief set does:
//! it sits in the simplex's hyperplane) are handled by first solving the
//! affine hull's equalities for some coordinates and working in the remaining
//! free ones, where the set is full-dimensional.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lp::{LinearProgram, LpOutcome, Relation};
use super::polytope::Polytope;
use super::vector::{rref, Rational, Vector};
use crate::error::{Error, Result};

pub const DEFAULT_DIM_CAP: usize = 6;

/// `{x : a·x ≤ b for each inequality, a·x = b for each equality}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HRep {
    pub inequalities: Vec<(Vector, Rational)>,
    pub equalities: Vec<(Vector, Rational)>,
}

impl HRep {
    pub fn contains(&self, x: &Vector) -> bool {
        self.inequalities.iter().all(|(a, b)| a.dot(x) <= *b) && self.equalities.iter().all(|(a, b)| a.dot(x) == *b)
    }

    /// Conjunction of the constraints of both representations.
    pub fn meet(mut self, other: &HRep) -> HRep {
        self.inequalities.extend(other.inequalities.iter().cloned());
        self.equalities.extend(other.equalities.iter().cloned());
        self
    }
}

/// Maximizes `objective·x` over the set described by `constraints`.
pub fn lp_solve(objective: &Vector, constraints: &HRep) -> LpOutcome {
    let dim = objective.dim();
    let mut lp = LinearProgram::new(dim);
    for var in 0..dim {
        lp.set_free(var);
    }
    lp.set_objective(objective.0.clone());
    for (a, b) in &constraints.inequalities {
        lp.add(a.0.clone(), Relation::Le, b.clone());
    }
    for (a, b) in &constraints.equalities {
        lp.add(a.0.clone(), Relation::Eq, b.clone());
    }
    lp.solve()
}

fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        Err(Error::DimensionCap { dim, cap })
    } else {
        Ok(())
    }
}

/// Equalities `x_pivot = rhs − Σ_free coeff·x_free`, one per pivot, in reduced
/// form. Pivots are taken from the highest coordinate downwards so the leading
/// coordinates stay free.
struct AffineChart {
    dim: usize,
    /// Reduced rows over `dim + 1` columns (last is the right-hand side).
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl AffineChart {
    /// Returns `None` when the equalities are inconsistent.
    fn from_equalities(dim: usize, equalities: &[(Vector, Rational)]) -> Option<Self> {
        let mut rows: Vec<Vec<Rational>> = equalities
            .iter()
            .map(|(a, b)| a.0.iter().cloned().chain(std::iter::once(b.clone())).collect())
            .collect();
        let mut columns: Vec<usize> = (0..dim).rev().collect();
        columns.push(dim);
        let pivots = rref(&mut rows, &columns);
        if pivots.contains(&dim) {
            return None;
        }
        let free = (0..dim).filter(|c| !pivots.contains(c)).collect();
        Some(AffineChart { dim, rows, pivots, free })
    }

    fn project(&self, x: &Vector) -> Vec<Rational> {
        self.free.iter().map(|&f| x[f].clone()).collect()
    }

    fn lift(&self, y: &[Rational]) -> Vector {
        let mut x = Vector::zeros(self.dim);
        for (&f, value) in self.free.iter().zip(y) {
            x[f] = value.clone();
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let mut value = row[self.dim].clone();
            for (&f, yf) in self.free.iter().zip(y) {
                value -= &row[f] * yf;
            }
            x[p] = value;
        }
        x
    }

    /// Rewrites `a·x ≤ b` in free coordinates.
    fn restrict(&self, a: &Vector, b: &Rational) -> (Vec<Rational>, Rational) {
        let mut coeffs: Vec<Rational> = self.free.iter().map(|&f| a[f].clone()).collect();
        let mut rhs = b.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if a[p].is_zero() {
                continue;
            }
            rhs -= &a[p] * &row[self.dim];
            for (c, &f) in coeffs.iter_mut().zip(&self.free) {
                *c -= &a[p] * &row[f];
            }
        }
        (coeffs, rhs)
    }
}

/// Equalities of the affine hull of `points`: a basis of
/// `{(a, b) : a·v = b for every v}`.
fn affine_hull_equalities(points: &[Vector]) -> Vec<(Vector, Rational)> {
    let dim = points[0].dim();
    let mut rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|v| v.0.iter().cloned().chain(std::iter::once(-Rational::one())).collect())
        .collect();
    let columns: Vec<usize> = (0..=dim).collect();
    let pivots = rref(&mut rows, &columns);
    (0..=dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut z = vec![Rational::zero(); dim + 1];
            z[free] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                z[p] = -&row[free];
            }
            let b = z.pop().expect("nonempty");
            (Vector(z), b)
        })
        .collect()
}

/// Facet description of `poly`. Equalities describe its affine hull, in
/// reduced form; inequalities are its facets.
pub fn vrep_to_hrep(poly: &Polytope, cap: usize) -> Result<HRep> {
    let dim = poly.dim();
    check_cap(dim, cap)?;
    let chart = AffineChart::from_equalities(dim, &affine_hull_equalities(poly.vertices()))
        .expect("a polytope's own affine hull is consistent");
    let equalities = chart
        .rows
        .iter()
        .map(|row| (Vector(row[..dim].to_vec()), row[dim].clone()))
        .collect();
    let r = chart.free.len();
    let mut inequalities = Vec::new();
    if r > 0 {
        // Cone {z : (y_j, 1)·z ≥ 0}; an extreme ray (c, d) is the facet −c·y ≤ d.
        let rows: Vec<Vec<Rational>> = poly
            .vertices()
            .iter()
            .map(|v| {
                let mut row = chart.project(v);
                row.push(Rational::one());
                row
            })
            .collect();
        let rays = extreme_rays(&rows, r + 1).expect("vertices of a full-dimensional chart span the cone");
        for ray in rays {
            let mut normal = Vector::zeros(dim);
            for (k, &f) in chart.free.iter().enumerate() {
                normal[f] = -&ray[k];
            }
            inequalities.push((normal, ray[r].clone()));
        }
    }
    Ok(HRep { inequalities, equalities })
}

/// Vertex set of a bounded H-described set; `None` when the set is empty.
pub fn hrep_vertices(h: &HRep, dim: usize, cap: usize) -> Result<Option<Polytope>> {
    check_cap(dim, cap)?;
    for (a, _) in h.inequalities.iter().chain(&h.equalities) {
        if a.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: a.dim() });
        }
    }
    let Some(chart) = AffineChart::from_equalities(dim, &h.equalities) else {
        return Ok(None);
    };
    let restricted: Vec<(Vec<Rational>, Rational)> =
        h.inequalities.iter().map(|(a, b)| chart.restrict(a, b)).collect();
    let r = chart.free.len();
    if r == 0 {
        let feasible = restricted.iter().all(|(_, rhs)| !rhs.is_negative());
        return Ok(feasible.then(|| Polytope::point(chart.lift(&[]))));
    }
    // Cone {(y, t) : rhs·t − c·y ≥ 0, t ≥ 0}; rays with t > 0 are vertices.
    let mut rows: Vec<Vec<Rational>> = restricted
        .iter()
        .map(|(c, rhs)| c.iter().map(|x| -x).chain(std::iter::once(rhs.clone())).collect())
        .collect();
    let mut t_row = vec![Rational::zero(); r + 1];
    t_row[r] = Rational::one();
    rows.push(t_row);
    let is_empty = || {
        let mut lp = LinearProgram::new(r);
        for var in 0..r {
            lp.set_free(var);
        }
        for (c, rhs) in &restricted {
            lp.add(c.clone(), Relation::Le, rhs.clone());
        }
        lp.solve() == LpOutcome::Infeasible
    };
    let Some(rays) = extreme_rays(&rows, r + 1) else {
        return if is_empty() { Ok(None) } else { Err(Error::Unbounded) };
    };
    let (finite, recession): (Vec<_>, Vec<_>) = rays.into_iter().partition(|ray| ray[r].is_positive());
    if !recession.is_empty() && (!finite.is_empty() || !is_empty()) {
        return Err(Error::Unbounded);
    }
    if finite.is_empty() {
        return Ok(None);
    }
    let vertices: Vec<Vector> = finite
        .iter()
        .map(|ray| {
            let y: Vec<Rational> = ray[..r].iter().map(|x| x / &ray[r]).collect();
            chart.lift(&y)
        })
        .collect();
    Polytope::new(vertices).map(Some)
}

/// Exact intersection of polytopes sharing an ambient dimension; `None` if empty.
pub fn intersect(polys: &[Polytope], cap: usize) -> Result<Option<Polytope>> {
    let first = polys.first().ok_or(Error::EmptyInput("intersect: no polytopes"))?;
    let dim = first.dim();
    let mut h = HRep::default();
    for p in polys {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
        h = h.meet(&vrep_to_hrep(p, cap)?);
    }
    hrep_vertices(&h, dim, cap)
}

#[derive(Clone)]
struct Ray {
    coords: Vec<Rational>,
    tight: Vec<bool>,
}

/// Extreme rays of the pointed cone `{z ∈ R^dim : row·z ≥ 0 for every row}`,
/// by incremental double description. Returns `None` when the rows do not
/// span `R^dim` (the cone then contains a line).
fn extreme_rays(rows: &[Vec<Rational>], dim: usize) -> Option<Vec<Vec<Rational>>> {
    // Initial basis: the first `dim` linearly independent rows.
    let mut basis: Vec<usize> = Vec::with_capacity(dim);
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    let cols: Vec<usize> = (0..dim).collect();
    for (i, row) in rows.iter().enumerate() {
        let mut trial = echelon.clone();
        trial.push(row.clone());
        if rref(&mut trial, &cols).len() > echelon.len() {
            echelon = trial;
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return None;
    }
    let inverse = invert(&basis.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>());
    let mut processed = vec![false; rows.len()];
    for &b in &basis {
        processed[b] = true;
    }
    let mut rays: Vec<Ray> = (0..dim)
        .map(|k| {
            let coords: Vec<Rational> = (0..dim).map(|r| inverse[r][k].clone()).collect();
            let mut tight = vec![false; rows.len()];
            for (j, &b) in basis.iter().enumerate() {
                tight[b] = j != k;
            }
            Ray { coords: normalize(coords), tight }
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if processed[i] {
            continue;
        }
        let values: Vec<Rational> = rays.iter().map(|ray| dot(row, &ray.coords)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (ray, value) in rays.iter().zip(&values) {
            if !value.is_negative() {
                let mut kept = ray.clone();
                kept.tight[i] = value.is_zero();
                next.push(kept);
            }
        }
        for (p, vp) in rays.iter().zip(&values) {
            if !vp.is_positive() {
                continue;
            }
            for (q, vq) in rays.iter().zip(&values) {
                if !vq.is_negative() || !adjacent(p, q, &rays, dim) {
                    continue;
                }
                let coords: Vec<Rational> = q
                    .coords
                    .iter()
                    .zip(&p.coords)
                    .map(|(a, b)| vp * a - vq * b)
                    .collect();
                let mut tight: Vec<bool> = p.tight.iter().zip(&q.tight).map(|(a, b)| *a && *b).collect();
                tight[i] = true;
                next.push(Ray { coords: normalize(coords), tight });
            }
        }
        processed[i] = true;
        rays = next;
    }
    Some(rays.into_iter().map(|r| r.coords).collect())
}

fn adjacent(p: &Ray, q: &Ray, rays: &[Ray], dim: usize) -> bool {
    let common: Vec<usize> = (0..p.tight.len()).filter(|&k| p.tight[k] && q.tight[k]).collect();
    if common.len() + 2 < dim {
        return false;
    }
    !rays.iter().any(|r| {
        !std::ptr::eq(r, p) && !std::ptr::eq(r, q) && common.iter().all(|&k| r.tight[k])
    })
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Scales a ray to coprime integer coordinates.
fn normalize(coords: Vec<Rational>) -> Vec<Rational> {
    let lcm = coords.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = coords.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return coords;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &gcd)).collect()
}

fn invert(matrix: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    let pivots = rref(&mut aug, &cols);
    assert_eq!(pivots.len(), n, "matrix is invertible");
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}
