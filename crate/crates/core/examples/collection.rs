//! Best certified distance over several orderings of a gluing collection.
//!
//! ```bash
//! cargo run --example collection
//! ```

use torus_gluing::certify::{collection_distance, CollectionSpec};

const SPEC: &str = r#"{
  "search_bound": 30,
  "orderings": [
    {"label": "cat first", "gluings": [
      {"phi": [["2","1"],["1","1"]], "classes": [{"phi": [["1","0"],["0","1"]]}]},
      {"phi": [["1","1"],["0","1"]], "classes": [{"phi": [["1","0"],["0","1"]]}]}]},
    {"label": "rotation", "gluings": [
      {"phi": [["0","1"],["-1","0"]], "classes": [{"phi": [["1","0"],["0","1"]]}, {"phi": [["1/2","0"],["0","2"]]}]}]}
  ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: CollectionSpec = serde_json::from_str(SPEC)?;
    let report = collection_distance(&spec.orderings, spec.search_bound.unwrap_or(30))?;
    for o in &report.orderings {
        println!("{}: lower bound {}, sampled minimum {}", o.label, o.min_lower_bound, o.min_empirical_displacement);
    }
    println!("best: {} from {:?}, distance two {:?}", report.best, report.best_ordering, report.distance_two);
    report.verify()?;
    Ok(())
}
