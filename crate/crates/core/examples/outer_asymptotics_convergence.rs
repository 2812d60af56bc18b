//! Error against the oracle as n doubles, for the common-factor form off [0, ∞).

use lagasym::numerics::{goal_slopes_ranked, outer_slope, CutComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ns = [50u64, 100, 200, 400, 800];
    let z = CutComplex::new(-2.0, 0.0);
    for d in 1..=4 {
        let r = outer_slope(0.3, z, d, &ns)?;
        let errs: Vec<String> = r.errors.iter().map(|e| format!("{e:.2e}")).collect();
        println!("d={d} slope {:.3} (expected {:.1}): {}", r.fitted_slope, r.predicted_slope, errs.join(" "));
    }
    println!();
    for d in 1..=3 {
        let [best, _] = goal_slopes_ranked(0.3, z, d, &ns)?;
        println!("cos/sin form d={d}: {:?} slope {:.3} (expected {:.1})", best.evaluator, best.fitted_slope, best.predicted_slope);
    }
    Ok(())
}
