//! Christoffel–Darboux kernel derivatives: direct sums against the closed brackets.

use lagasym::numerics::{kernel_and_derivatives, ratio_sum, CutComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = CutComplex::new(-1.5, 0.0);
    for x in [CutComplex::new(-0.4, 0.0), CutComplex::new(2.0, 0.0)] {
        let r = kernel_and_derivatives(50, 0.5, x, c, 2)?;
        for d in 0..=2 {
            println!(
                "x={x} d={d}: direct {}  closed-form rel err {:.1e}",
                r.direct[d],
                r.closed_form_rel_err(d)
            );
        }
    }
    println!();
    for n in [100u64, 400, 1600] {
        let s = ratio_sum(n, 0.0, 2, CutComplex::new(-1.0, 0.0))?;
        println!("n={n:>5}: S_2 = {}  largest term {:.3}", s.value, s.largest_term);
    }
    Ok(())
}
