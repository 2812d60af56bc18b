use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::buchholz::HalfPlane;

/// A complex number on the plane cut along `(−∞, 0]` for roots and powers.
///
/// The imaginary part is never `−0.0`; a point on the negative real axis has
/// argument `π`, so `−z = z e^{−πi}` there.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutComplex {
    pub re: f64,
    pub im: f64,
}

impl CutComplex {
    pub fn new(re: f64, im: f64) -> Self {
        // −0.0 would put the negative real axis on the lower side
        let im = if im == 0.0 { 0.0 } else { im };
        let re = if re == 0.0 { 0.0 } else { re };
        CutComplex { re, im }
    }

    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0)
    }

    pub fn c(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn norm(self) -> f64 {
        self.c().norm()
    }

    /// Principal argument in `(−π, π]`.
    pub fn arg(self) -> f64 {
        self.c().arg()
    }

    /// `−z` with argument again in `(−π, π]`.
    pub fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }

    pub fn sqrt(self) -> Complex64 {
        self.c().sqrt()
    }

    /// `z^p` on the principal branch.
    pub fn powf(self, p: f64) -> Complex64 {
        if self.re == 0.0 && self.im == 0.0 {
            return if p == 0.0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
        }
        (self.c().ln() * p).exp()
    }

    pub fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// On `[0, ∞)`, where the common-factor forms do not apply.
    pub fn on_positive_axis(self) -> bool {
        self.im == 0.0 && self.re >= 0.0
    }

    /// Half-plane, with the negative real axis counted as upper.
    pub fn half_plane(self) -> HalfPlane {
        if self.im < 0.0 {
            HalfPlane::Lower
        } else {
            HalfPlane::Upper
        }
    }
}

impl From<Complex64> for CutComplex {
    fn from(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }
}

impl From<f64> for CutComplex {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl std::fmt::Display for CutComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im >= 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

impl std::str::FromStr for CutComplex {
    type Err = String;

    /// Accepts `x`, `yi`, `x+yi`, `x-yi`, `yi+x`, `i`, `-i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err("empty complex number".into());
        }
        let mut parts = Vec::new();
        let mut start = 0;
        let bytes = t.as_bytes();
        for i in 1..bytes.len() {
            let c = bytes[i];
            let prev = bytes[i - 1];
            if (c == b'+' || c == b'-') && prev != b'e' && prev != b'E' {
                parts.push(&t[start..i]);
                start = i;
            }
        }
        parts.push(&t[start..]);
        if parts.len() > 2 {
            return Err(format!("cannot parse complex number {s:?}"));
        }
        let (mut re, mut im) = (None, None);
        for p in parts {
            let bad = || format!("cannot parse complex number {s:?}");
            if let Some(body) = p.strip_suffix(['i', 'j']) {
                let v = match body {
                    "" | "+" => 1.0,
                    "-" => -1.0,
                    b => b.parse::<f64>().map_err(|_| bad())?,
                };
                if im.replace(v).is_some() {
                    return Err(bad());
                }
            } else {
                let v = p.parse::<f64>().map_err(|_| bad())?;
                if re.replace(v).is_some() {
                    return Err(bad());
                }
            }
        }
        Ok(CutComplex::new(re.unwrap_or(0.0), im.unwrap_or(0.0)))
    }
}
