//! Coefficients of L_{n+j}^{(α)}(z) / L_n^{(β)}(z) in √(−z), and a specialization.

use lagasym::ratio::{ratio_d, ratio_u, ExpVariant, RatioSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = ratio_d(3)?;
    for (k, coeff) in d.iter().enumerate() {
        println!("D_{k}(α, β, w) = {coeff}");
    }
    println!();
    let u = ratio_u(3, ExpVariant::Kappa)?;
    for (m, coeff) in u.u.iter().enumerate() {
        println!("U_{m}(α, β, j, w) = {coeff}");
    }
    println!();
    let spec = RatioSpec { alpha: 0.0, beta: 1.0, j: 1.0, d: 3 };
    for (m, coeff) in spec.specialize(&u.u)?.iter().enumerate() {
        println!("U_{m} at α=0, β=1, j=1: {coeff}");
    }
    Ok(())
}
