use crate::algebra::{int, poly_integrate_buchholz, rat, Branch, Rational, SymCoeff, Var};

const B: Branch = Branch::SqrtZ;

/// Tricomi coefficients `A_0..=A_max_m` as polynomials in `(a, c)`.
///
/// `(m+1)A_{m+1} = (m+c−1)A_{m−1} − 2κA_{m−2}` with `κ = c/2 − a`.
pub fn tricomi_a(max_m: usize) -> Vec<SymCoeff> {
    let a = SymCoeff::var(Var::A, B);
    let c = SymCoeff::var(Var::C, B);
    let kappa = &c.scale(&rat(1, 2)) - &a;
    let mut out = vec![
        SymCoeff::one(B),
        SymCoeff::zero(B),
        c.scale(&rat(1, 2)),
        (&c - &a.scale(&int(2))).scale(&rat(-1, 3)),
    ];
    for m in 3..max_m {
        // m ≥ 3 here; the m = 2 step reproduces A_3 above.
        let lhs = &(&SymCoeff::integer(m as i64 - 1, B) + &c) * &out[m - 1]
            - (&kappa * &out[m - 2]).scale(&int(2));
        out.push(lhs.scale(&Rational::new(1.into(), (m as i64 + 1).into())));
    }
    out.truncate(max_m + 1);
    out
}

/// Buchholz polynomials `P_0..=P_max_m` in `(c, z)`, with `z = w²`.
pub fn buchholz_p(max_m: usize) -> Vec<SymCoeff> {
    let u = SymCoeff::z(B);
    let c_minus_2 = &SymCoeff::var(Var::C, B) - &SymCoeff::integer(2, B);
    let mut out = vec![SymCoeff::one(B)];
    for m in 1..=max_m {
        let prev = &out[m - 1];
        let d1 = prev
            .derivative_in_w_squared()
            .expect("P_m has only even powers of w");
        let d2 = d1
            .derivative_in_w_squared()
            .expect("P_m has only even powers of w");
        let integrand = (&u * prev).scale(&rat(1, 4)) + &c_minus_2 * &d1 - &u * &d2;
        let next = poly_integrate_buchholz(&integrand, m as u32)
            .expect("integrand is a polynomial in z");
        out.push(next);
    }
    out
}

/// Large-argument Bessel coefficients `a_k(ν)`, `k = 0..=max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BesselCoeffTable {
    pub a: Vec<SymCoeff>,
}

/// `a_k(ν) = Π_{i=1}^{k} (4ν² − (2i−1)²) / (8^k k!)`, as polynomials in `ν`.
pub fn bessel_asym_coeff(max_k: usize) -> BesselCoeffTable {
    let nu = SymCoeff::var(Var::Nu, B);
    let four_nu2 = nu.pow(2).scale(&int(4));
    let mut a = vec![SymCoeff::one(B)];
    for k in 1..=max_k {
        let odd = (2 * k as i64 - 1).pow(2);
        let factor = &four_nu2 - &SymCoeff::integer(odd, B);
        let next = (&a[k - 1] * &factor).scale(&Rational::new(1.into(), (8 * k as i64).into()));
        a.push(next);
    }
    BesselCoeffTable { a }
}

impl BesselCoeffTable {
    pub fn max_k(&self) -> usize {
        self.a.len() - 1
    }

    /// `a_k(α + shift)` as a polynomial in α.
    pub fn at_alpha_plus(&self, k: usize, shift: i64) -> SymCoeff {
        self.a[k]
            .rename(Var::Nu, Var::Alpha)
            .shift_var(Var::Alpha, &int(shift))
            .expect("a_k is a polynomial in ν")
    }
}
