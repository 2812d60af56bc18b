//! Exact Bessel-type coefficients: Buchholz polynomials, Tricomi A_m, and B_m.

use lagasym::buchholz::{buchholz_p, expand_b, tricomi_a};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, p) in buchholz_p(4).iter().enumerate() {
        println!("P_{m}(c, z) = {p}");
    }
    println!();
    for (m, a) in tricomi_a(5).iter().enumerate() {
        println!("A_{m}(a, c) = {a}");
    }
    println!();
    // w = √z
    let b = expand_b(2)?.real_coeffs()?;
    for (m, coeff) in b.iter().enumerate() {
        println!("B_{m}(α, w) = {coeff}");
    }
    Ok(())
}
