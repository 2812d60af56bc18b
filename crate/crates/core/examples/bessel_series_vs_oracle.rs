//! The convergent Bessel series against the three-term recurrence.

use lagasym::numerics::{eval_bessel_series, laguerre_oracle, CutComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>4} {:>5} {:>8} {:>26} {:>10}", "n", "α", "z", "series", "rel err");
    for n in [10u64, 30, 100] {
        for alpha in [-0.5, 0.5, 3.0] {
            for z in [CutComplex::new(-5.0, 0.0), CutComplex::new(1.0, 2.0), CutComplex::new(3.0, 0.0)] {
                let oracle = laguerre_oracle(n, alpha, z)?;
                let series = eval_bessel_series(n, alpha, z, None)?;
                println!(
                    "{n:>4} {alpha:>5} {:>8} {:>26} {:>10.2e}",
                    z.to_string(),
                    series.value.to_string(),
                    series.rel_err(oracle)
                );
            }
        }
    }
    Ok(())
}
