//! Perron-type coefficients C_m for z off the positive real axis, in w = √(−z).

use lagasym::buchholz::perron_c;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = perron_c(4)?.real_coeffs()?;
    for (m, coeff) in c.iter().enumerate() {
        println!("C_{m}(α, w) = {coeff}");
    }
    Ok(())
}
