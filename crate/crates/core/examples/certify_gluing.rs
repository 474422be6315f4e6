//! Certify that no class map composed with a gluing fixes a slope.
//!
//! ```bash
//! cargo run --example certify_gluing
//! ```

use torus_gluing::certify::{c_distance, map_distance};
use torus_gluing::class_maps::ClassMap;
use torus_gluing::{UnimodularQ, UnimodularZ};

fn main() -> torus_gluing::Result<()> {
    let rotation = UnimodularZ::from_i64([0, 1, -1, 0])?;
    let classes = [
        ClassMap::identity(),
        ClassMap::external(UnimodularQ::from_fractions([(1, 2), (0, 1), (0, 1), (2, 1)])?),
        ClassMap::external(UnimodularQ::from_fractions([(1, 1), (3, 2), (0, 1), (1, 1)])?),
    ];
    let cert = c_distance(&rotation, &classes, 50)?;
    for c in &cert.per_class {
        let r = &c.result;
        println!(
            "{}: lower bound {} ({:?}), sampled {} -> {} at distance {}",
            r.map, r.lower_bound, r.criterion, r.empirical_witness, r.empirical_image, r.empirical_min_displacement
        );
    }
    println!("c-distance >= {}, certified: {}", cert.c_distance_lower_bound, cert.is_certified());
    cert.verify()?;

    let shear = UnimodularQ::from_fractions([(1, 1), (1, 1), (0, 1), (1, 1)])?;
    let r = map_distance(&shear, 50)?;
    println!("{shear} fixes {}", r.fixed_slope_witness.expect("shears fix 1/0"));
    Ok(())
}
