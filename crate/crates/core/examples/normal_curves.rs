//! Normal curves on the two-triangle torus: slopes, components and signed
//! intersections.
//!
//! ```bash
//! cargo run --example normal_curves
//! ```

use torus_gluing::normal_torus::{decompose, from_slope, intersection_points, normal_sign_intersections, NormalCoordinates};
use torus_gluing::Slope;

fn main() -> torus_gluing::Result<()> {
    for x in [NormalCoordinates::new(0, 1, 2), NormalCoordinates::new(1, 1, 1), NormalCoordinates::new(0, 0, 3)] {
        let d = decompose(&x);
        let slope = d.essential_slope.map_or("none".into(), |s| s.to_string());
        println!(
            "({x}): types {:?}, edge weights {:?}, slope {slope} x{}, {} trivial",
            x.curve_types(),
            x.edge_weights(),
            d.essential_multiplicity,
            d.trivial_count
        );
    }

    let a = from_slope(&Slope::from_i64(2, 3), 1, 0)?;
    let b = from_slope(&Slope::from_i64(1, 1), 2, 1)?;
    let signs = normal_sign_intersections(&a, &b)?;
    println!("({a}) and ({b}): {} points, algebraic sum {}", signs.total(), signs.algebraic());
    for p in intersection_points(&a, &b)? {
        println!("  {:?} arcs {} x {}: {:+}", p.triangle, p.first_arc_type, p.second_arc_type, p.sign);
    }
    Ok(())
}
