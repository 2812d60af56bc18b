use lagasym::algebra::{
    gen_binomial, int, poly_integrate_buchholz, rat, Branch, Monomial, NSeries, Point, Rational, SeriesVar, SymCoeff,
    Var,
};
use lagasym::numerics::{CutComplex, RatioTable};
use lagasym::ratio::{ExpVariant, RatioSpec};
use num_complex::Complex64;
use proptest::prelude::*;

const B: Branch = Branch::SqrtZ;

fn sym() -> impl Strategy<Value = SymCoeff> {
    prop::collection::vec((0..3i32, 0..2i32, -3..4i32, -20..20i64, 1..9i64), 0..5).prop_map(|terms| {
        SymCoeff::from_terms(
            terms.into_iter().map(|(pa, pb, pw, num, den)| {
                let m = Monomial::one().with(Var::Alpha, pa).with(Var::Beta, pb).with(Var::W, pw);
                (m, rat(num, den))
            }),
            B,
        )
    })
}

/// Polynomials in `(α, z)`: only even nonnegative powers of `w`.
fn poly_in_z() -> impl Strategy<Value = SymCoeff> {
    prop::collection::vec((0..3i32, 0..3i32, -20..20i64, 1..9i64), 0..5).prop_map(|terms| {
        SymCoeff::from_terms(
            terms
                .into_iter()
                .map(|(pa, pz, num, den)| (Monomial::one().with(Var::Alpha, pa).with(Var::W, 2 * pz), rat(num, den))),
            B,
        )
    })
}

fn point() -> impl Strategy<Value = Point> {
    (-2.0..2.0f64, -2.0..2.0f64, 0.3..2.0f64, -3.0..3.0f64).prop_map(|(a, b, wr, wi)| {
        Point::new()
            .with(Var::Alpha, a)
            .with(Var::Beta, b)
            .with_complex(Var::W, Complex64::new(wr, wi))
    })
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #[test]
    fn ring_axioms(a in sym(), b in sym(), c in sym()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &SymCoeff::zero(B), a.clone());
        prop_assert_eq!(&a * &SymCoeff::one(B), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn power_is_additive(a in sym(), m in 0u32..3, n in 0u32..3) {
        prop_assert_eq!(a.pow(m + n), &a.pow(m) * &a.pow(n));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in sym(), b in sym(), p in point()) {
        prop_assert!(close((&a * &b).eval(&p), a.eval(&p) * b.eval(&p), 1e-9));
        prop_assert!(close((&a + &b).eval(&p), a.eval(&p) + b.eval(&p), 1e-12));
    }

    #[test]
    fn exact_evaluation_is_a_ring_map(a in poly_in_z(), b in poly_in_z(), x in -5..5i64, z in -6..6i64) {
        let vals = [(Var::Alpha, rat(x, 3))];
        let zz = rat(z, 2);
        let prod = (&a * &b).eval_exact(&vals, &zz).unwrap();
        prop_assert_eq!(prod, a.eval_exact(&vals, &zz).unwrap() * b.eval_exact(&vals, &zz).unwrap());
    }

    #[test]
    fn json_round_trip(a in sym()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: SymCoeff = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn buchholz_integration_is_linear(a in poly_in_z(), b in poly_in_z(), m in 1u32..6, k in -5..5i64) {
        let lhs = poly_integrate_buchholz(&(&a + &b.scale(&int(k))), m).unwrap();
        let rhs = &poly_integrate_buchholz(&a, m).unwrap() + &poly_integrate_buchholz(&b, m).unwrap().scale(&int(k));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_at_integers(n in 0i64..12, k in 0u32..6) {
        let x = SymCoeff::var(Var::Alpha, B);
        let v = gen_binomial(&x, k).substitute_rational(Var::Alpha, &int(n)).unwrap();
        let expected = num_integer::binomial(n as u64, k as u64);
        let expected = if (k as i64) > n { 0 } else { expected as i64 };
        prop_assert_eq!(v.as_constant().unwrap(), int(expected));
    }

    #[test]
    fn series_powers_add(c in -6..6i64, p in -4..4i64, q in -4..4i64, den in 1..4i64) {
        let base = NSeries::one_plus_monomial(SeriesVar::InvSqrtN, 5, SymCoeff::constant(rat(c, 3), B), 1);
        let (p, q) = (rat(p, den), rat(q, den));
        let lhs = base.pow_rational(&p).unwrap().mul(&base.pow_rational(&q).unwrap()).unwrap();
        prop_assert_eq!(lhs, base.pow_rational(&(p + q)).unwrap());
    }

    #[test]
    fn series_log_exp(c in -6..6i64) {
        let base = NSeries::one_plus_monomial(SeriesVar::InvSqrtN, 6, SymCoeff::var(Var::Alpha, B).scale(&rat(c, 2)), 1);
        prop_assert_eq!(base.log().unwrap().exp().unwrap(), base.clone());
        prop_assert_eq!(base.mul(&base.inv().unwrap()).unwrap(), NSeries::one(SeriesVar::InvSqrtN, 6, B));
    }

    #[test]
    fn complex_text_round_trip(re in -1e6..1e6f64, im in -1e6..1e6f64) {
        let z = CutComplex::new(re, im);
        let back: CutComplex = z.to_string().parse().unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn negation_stays_on_the_principal_sheet(re in -10.0..10.0f64, im in -10.0..10.0f64) {
        let z = CutComplex::new(re, im);
        let a = z.neg().arg();
        prop_assert!(a > -std::f64::consts::PI && a <= std::f64::consts::PI);
        prop_assert_eq!(z.neg().norm(), z.norm());
    }
}

fn ratio_tables() -> &'static RatioTable {
    static TABLE: std::sync::OnceLock<RatioTable> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| RatioTable::new(4, ExpVariant::Kappa).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `L_{n+j}^{(α)}/L_n^{(β)}` times `L_{m−j}^{(β)}/L_m^{(α)}` at `m = n+j` is one.
    #[test]
    fn reciprocal_ratio(alpha in -0.5..2.0f64, beta in -0.5..2.0f64, j in -2..3i64, re in -4.0..-0.5f64, im in -2.0..2.0f64) {
        let n = 5000u64;
        let z = CutComplex::new(re, im);
        let forward = RatioSpec { alpha, beta, j: j as f64, d: 4 };
        let backward = RatioSpec { alpha: beta, beta: alpha, j: -j as f64, d: 4 };
        let t = ratio_tables();
        let a = t.eval(n, &forward, z).unwrap().result.value.c();
        let b = t.eval((n as i64 + j) as u64, &backward, z).unwrap().result.value.c();
        let defect = (a * b - 1.0).norm();
        prop_assert!(defect < 1e-4, "defect {defect}");
    }
}

#[test]
fn rational_exponent_series_matches_binomial() {
    // (1 + x)^{1/2} = 1 + x/2 − x²/8 + x³/16
    let s = NSeries::one_plus_monomial(SeriesVar::T, 3, SymCoeff::one(B), 1)
        .pow_rational(&rat(1, 2))
        .unwrap();
    let expected: Vec<Rational> = vec![int(1), rat(1, 2), rat(-1, 8), rat(1, 16)];
    for (k, e) in expected.iter().enumerate() {
        assert_eq!(s.coeff(k).unwrap().as_constant().unwrap(), *e);
    }
}
