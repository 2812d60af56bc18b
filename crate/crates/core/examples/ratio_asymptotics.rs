//! The ratio expansion at n = 200 against the oracle ratio.

use lagasym::numerics::{CutComplex, RatioTable};
use lagasym::ratio::{ExpVariant, RatioSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = RatioTable::new(3, ExpVariant::Kappa)?;
    let z = CutComplex::new(-1.0, 2.0);
    for j in [-1.0, 0.0, 1.0, 2.0] {
        let spec = RatioSpec { alpha: 0.5, beta: 1.5, j, d: 3 };
        let r = table.eval(200, &spec, z)?;
        let err = r.rel_err().map(|e| format!("{e:.2e}")).unwrap_or_else(|| "-".into());
        println!("j={j:>4}: {}  rel err {err}", r.result.value);
    }
    Ok(())
}
