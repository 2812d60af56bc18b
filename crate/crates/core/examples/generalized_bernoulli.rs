//! Generalized Bernoulli polynomials and the Gamma / power-ratio coefficients built on them.

use lagasym::ratio::{classical_bernoulli, gamma_ratio_g, gen_bernoulli, kappa_power_ratio_a};

fn main() {
    let table = gen_bernoulli(4);
    for (n, b) in table.b.iter().enumerate() {
        println!("B_{n}^(ℓ)(x) = {b}");
    }
    let classical: Vec<String> = classical_bernoulli(10).iter().map(|b| b.to_string()).collect();
    println!("\nB_0..B_10 = {}", classical.join(", "));
    println!();
    for (m, g) in gamma_ratio_g(3).iter().enumerate() {
        println!("G_{m}(α, β, j) = {g}");
    }
    println!();
    for (m, a) in kappa_power_ratio_a(3).iter().enumerate() {
        println!("A_{m}(α, β, j) = {a}");
    }
}
