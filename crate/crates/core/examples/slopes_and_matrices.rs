//! Slopes, unimodular matrices and their rational eigenslopes.
//!
//! ```bash
//! cargo run --example slopes_and_matrices
//! ```

use torus_gluing::slope_algebra::{intersection_number, rational_eigenslopes, Eigenslopes};
use torus_gluing::{Slope, UnimodularQ, UnimodularZ};

fn main() -> torus_gluing::Result<()> {
    let s: Slope = "2/5".parse()?;
    let t: Slope = "3/7".parse()?;
    println!("i({s}, {t}) = {}", intersection_number(&s, &t));

    let cat = UnimodularZ::from_i64([2, 1, 1, 1])?;
    println!("{cat} sends {s} to {}", cat.lft_apply(&s));
    println!("{cat} squared has trace {}", cat.pow(2).trace());

    let shear = UnimodularQ::from_fractions([(1, 1), (1, 2), (0, 1), (1, 1)])?;
    let half = UnimodularQ::from_fractions([(1, 2), (0, 1), (0, 1), (2, 1)])?;
    for m in [cat.to_q(), shear.clone(), half.clone(), shear.compose(&half), UnimodularQ::identity()] {
        let fixed = match rational_eigenslopes(&m) {
            Eigenslopes::All => "every slope".to_string(),
            Eigenslopes::Finite(v) if v.is_empty() => "none".to_string(),
            Eigenslopes::Finite(v) => v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        };
        println!("{m}: denominator {}, trace {}, fixed slopes: {fixed}", m.denominator(), m.trace());
    }
    Ok(())
}
