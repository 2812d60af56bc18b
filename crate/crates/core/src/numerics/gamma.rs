use super::NumericsError;

const SHIFT: f64 = 15.0;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k(2k−1))
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn stirling_correction(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut acc = 0.0;
    for c in STIRLING.iter().rev() {
        acc = acc * inv2 + c;
    }
    acc * inv
}

fn check(x: f64) -> Result<(), NumericsError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(NumericsError::Domain(format!("log-Gamma needs a positive argument, got {x}")));
    }
    Ok(())
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64, NumericsError> {
    check(x)?;
    let mut prod = 1.0;
    let mut y = x;
    while y < SHIFT {
        prod *= y;
        y += 1.0;
    }
    Ok((y - 0.5) * y.ln() - y + HALF_LN_2PI + stirling_correction(y) - prod.ln())
}

/// `ln(Γ(x)/Γ(y))` for `x, y > 0`, accurate when `x − y` is small against `x`.
pub fn ln_gamma_quotient(x: f64, y: f64) -> Result<f64, NumericsError> {
    check(x)?;
    check(y)?;
    if x == y {
        return Ok(0.0);
    }
    let (mut a, mut b) = (x, y);
    let mut ratio = 1.0;
    while a < SHIFT || b < SHIFT {
        ratio *= a / b;
        a += 1.0;
        b += 1.0;
    }
    let shift = ratio.ln();
    // (a−½)ln a − a − (b−½)ln b + b with ln a = ln b + ln(1 + (a−b)/b)
    let d = a - b;
    let l = (d / b).ln_1p();
    Ok(d * b.ln() + (a - 0.5) * l - d + stirling_correction(a) - stirling_correction(b) - shift)
}

/// `ln(Γ(n+a+1)/Γ(n+b+1))`.
pub fn log_gamma_ratio(n: u64, a: f64, b: f64) -> Result<f64, NumericsError> {
    let n = n as f64;
    if n + a + 1.0 <= 0.0 || n + b + 1.0 <= 0.0 {
        return Err(NumericsError::Domain(format!(
            "Gamma pole or negative argument at n = {n}, a = {a}, b = {b}"
        )));
    }
    ln_gamma_quotient(n + a + 1.0, n + b + 1.0)
}
