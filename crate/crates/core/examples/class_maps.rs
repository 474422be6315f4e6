//! Rational maps between boundary tori built from surface boundary data.
//!
//! ```bash
//! cargo run --example class_maps
//! ```

use torus_gluing::class_maps::{build_from_single_slope, build_from_two_surfaces, class_count_bound, verify_third_surface};
use torus_gluing::{PrimitiveClass, Slope};

fn main() -> torus_gluing::Result<()> {
    // r and s are boundary classes on the first torus, r' and s' on the second
    let r1 = PrimitiveClass::from_i64(1, 0)?;
    let s1 = PrimitiveClass::from_i64(1, 2)?;
    let r2 = PrimitiveClass::from_i64(0, 1)?;
    let s2 = PrimitiveClass::from_i64(-2, 1)?;
    let cm = build_from_two_surfaces(&r1, &s1, &r2, &s2)?.with_type_pair(1, 3)?.with_complexity(4);
    println!("{}", serde_json::to_string(&cm).unwrap());

    let q2 = PrimitiveClass::from_i64(-2, 3)?;
    let q1 = PrimitiveClass::from_vector(cm.maps_slope(&q2.slope()).p().clone(), cm.maps_slope(&q2.slope()).q().clone())?;
    println!("third surface {q2} -> {q1}: {:?}", verify_third_surface(&cm, &q1, &q2));

    let single = build_from_single_slope(&Slope::from_i64(2, 3), &Slope::from_i64(1, 1));
    println!("single slope: {} sends 1/1 to {}", single.phi, single.maps_slope(&Slope::from_i64(1, 1)));

    for t in [1, 2, 5] {
        let b = class_count_bound(t);
        println!("{t} tetrahedra: at most {} classes", b.bound);
    }
    Ok(())
}
