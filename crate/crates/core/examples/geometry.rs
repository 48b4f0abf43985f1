//! Exact polytope operations on belief sets over three states.

use bewley_agg::geometry::{
    intersect, membership_weights, rat, separate, support, vrep_to_hrep, Polytope, Vector, DEFAULT_DIM_CAP,
};

fn p(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Vector {
    Vector(vec![rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1)])
}

fn main() -> bewley_agg::Result<()> {
    // Redundant generators are dropped: the centroid is not a vertex.
    let triangle = Polytope::new(vec![
        p((1, 2), (1, 4), (1, 4)),
        p((1, 4), (1, 2), (1, 4)),
        p((1, 4), (1, 4), (1, 2)),
        p((1, 3), (1, 3), (1, 3)),
    ])?;
    println!("triangle vertices: {:?}", triangle.vertices().iter().map(ToString::to_string).collect::<Vec<_>>());

    let centroid = p((1, 3), (1, 3), (1, 3));
    let weights = membership_weights(&centroid, &triangle)?.expect("centroid is inside");
    println!("centroid = convex combination with weights {}", Vector(weights));

    let corner = p((1, 1), (0, 1), (0, 1));
    let h = separate(std::slice::from_ref(&corner), &triangle)?.expect("a corner of the simplex is outside");
    println!("separating hyperplane for {corner}: {}·p = {}", h.normal, bewley_agg::geometry::format_rational(&h.threshold));

    let facets = vrep_to_hrep(&triangle, DEFAULT_DIM_CAP)?;
    println!("H-representation: {} inequalities, {} equalities", facets.inequalities.len(), facets.equalities.len());

    let band = Polytope::new(vec![
        p((1, 2), (1, 2), (0, 1)),
        p((1, 2), (0, 1), (1, 2)),
        p((1, 3), (1, 3), (1, 3)),
    ])?;
    match intersect(&[triangle.clone(), band], DEFAULT_DIM_CAP)? {
        Some(meet) => println!("intersection vertices: {:?}", meet.vertices().iter().map(ToString::to_string).collect::<Vec<_>>()),
        None => println!("the sets are disjoint"),
    }

    let first_state = Vector::unit(3, 0);
    println!("max probability of the first state: {}", support(&triangle, &first_state)?);
    Ok(())
}
