//! Distances and geodesics in the Farey graph.
//!
//! ```bash
//! cargo run --example farey_distance -- 355/113 -1/0
//! ```

use torus_gluing::farey::{distance, geodesic};
use torus_gluing::Slope;

fn main() -> torus_gluing::Result<()> {
    let mut args = std::env::args().skip(1);
    let s: Slope = args.next().as_deref().unwrap_or("355/113").parse()?;
    let t: Slope = args.next().as_deref().unwrap_or("1/0").parse()?;

    let path = geodesic(&s, &t);
    println!("d({s}, {t}) = {}", distance(&s, &t));
    let hops: Vec<String> = path.vertices().iter().map(ToString::to_string).collect();
    println!("{}", hops.join(" -> "));
    Ok(())
}
