//! n^{-α} L_{n+j}^{(α)}(z/n) approaching z^{-α/2} J_α(2√z).

use lagasym::numerics::{mehler_heine_difference, CutComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = CutComplex::new(-2.0, 1.0);
    for n in [100u64, 1_000, 10_000, 100_000] {
        let d0 = mehler_heine_difference(n, 0.0, 0.0, z)?;
        let d1 = mehler_heine_difference(n, 0.5, 2.0, z)?;
        println!("n={n:>6}: |diff| {d0:.3e} (α=0, j=0)  {d1:.3e} (α=0.5, j=2)");
    }
    Ok(())
}
