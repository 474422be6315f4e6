//! How many powers of a hyperbolic gluing are needed before no class map
//! fixes a slope.
//!
//! ```bash
//! cargo run --example anosov_power
//! ```

use torus_gluing::anosov::{power_bound, trace_sequence};
use torus_gluing::class_maps::ClassMap;
use torus_gluing::{UnimodularQ, UnimodularZ};

fn main() -> torus_gluing::Result<()> {
    let sigma = UnimodularZ::from_i64([2, 1, 1, 1])?;
    let half = UnimodularQ::from_fractions([(1, 2), (0, 1), (0, 1), (2, 1)])?;
    let classes = [ClassMap::identity(), ClassMap::external(half.clone())];

    let traces: Vec<String> = trace_sequence(&sigma, &half, 6).iter().map(ToString::to_string).collect();
    println!("traces of sigma^n K: {}", traces.join(", "));

    let report = power_bound(&sigma, &UnimodularZ::identity(), &classes)?;
    for c in &report.per_class {
        println!("K = {}: N = {}, tail {:?} at n = {}, d(K) = {}", c.k, c.n_c, c.tail_kind, c.tail_index, c.d_k.0);
        for r in &c.prefix_diagnostics {
            println!("  n = {}: trace {}, passes {}", r.n, r.trace.0, r.criterion_passed);
        }
    }
    println!("every power from {} on avoids all fixed slopes", report.overall_n);
    report.verify()
}
