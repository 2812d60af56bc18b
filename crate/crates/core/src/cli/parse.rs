use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::Rational;

use super::NList;

/// Exact value of `p/q`, an integer, or a decimal such as `-0.125` or `1.5e-3`.
pub fn parse_exact_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(format!("not a number: {s:?}"));
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse::<BigInt>().map_err(|e| e.to_string())? / 10;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        Rational::from_integer(all * ten.pow(scale as u32))
    } else {
        Rational::new(all, ten.pow((-scale) as u32))
    };
    Ok(if neg { -r } else { r })
}

/// Comma-separated, strictly increasing degrees.
pub fn parse_n_list(s: &str) -> Result<NList, String> {
    let ns = s
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("not a degree: {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if ns.is_empty() {
        return Err("empty degree list".into());
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("degree list must be strictly increasing: {s}"));
    }
    Ok(NList(ns))
}
