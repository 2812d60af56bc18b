use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::algebra::{Branch, SymCoeff, Var};
use crate::buchholz::{
    buchholz_p, expand_b_with_offset, expansion_offset, hat_b_neg_z, perron_c, tricomi_a, to_hat_b,
    ExpansionCoeffSet, ExpansionKind, PhasedCoeff,
};
use crate::ratio::{gamma_ratio_g, gen_bernoulli, kappa_power_ratio_a, ratio_d, ratio_u};

use super::{parse_exact_rational, CliError, CoeffsArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    P,
    ATricomi,
    B,
    Bhat,
    C,
    D,
    U,
    G,
    ARatio,
    Bernoulli,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::ATricomi => "A_TRICOMI",
            Family::B => "B",
            Family::Bhat => "BHAT",
            Family::C => "C",
            Family::D => "D",
            Family::U => "U",
            Family::G => "G",
            Family::ARatio => "A_RATIO",
            Family::Bernoulli => "BERNOULLI",
        }
    }

    fn variables(self) -> &'static str {
        match self {
            Family::P => "c, w with z = w^2",
            Family::ATricomi => "a, c",
            Family::B => "alpha, w = sqrt(z)",
            Family::Bhat | Family::C => "alpha, w",
            Family::D | Family::U => "alpha, beta, j, w = sqrt(-z)",
            Family::G | Family::ARatio => "alpha, beta, j",
            Family::Bernoulli => "ell (order), x",
        }
    }
}

/// One coefficient with its phase `i^quarter_turns`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub m: usize,
    pub quarter_turns: u8,
    pub expression: String,
    pub coeff: SymCoeff,
}

/// An exported coefficient table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffTable {
    pub kind: String,
    pub max_order: usize,
    pub branch_tag: Branch,
    pub variables: String,
    pub version_note: String,
    /// Exact values substituted for `alpha`, `beta`, `j`.
    pub substituted: BTreeMap<String, String>,
    pub coefficients: Vec<CoeffEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoeffCsvRow<'a> {
    pub m: usize,
    pub quarter_turns: u8,
    pub expression: &'a str,
}

impl CoeffTable {
    pub fn csv_rows(&self) -> Vec<CoeffCsvRow<'_>> {
        self.coefficients
            .iter()
            .map(|e| CoeffCsvRow {
                m: e.m,
                quarter_turns: e.quarter_turns,
                expression: &e.expression,
            })
            .collect()
    }
}

fn version_note(family: Family, args: &CoeffsArgs) -> String {
    let mut note = format!("lagasym {}", env!("CARGO_PKG_VERSION"));
    match family {
        Family::D | Family::U => note.push_str(
            "; from index 2 on the cross term B̂_1(β)(B̂_1(α, j) − B̂_1(β)) carries (±i)² = −1, \
             so D_2 = (β²−α²)(α²−β²−2)/(32z)",
        ),
        Family::B => note.push_str("; the z^{-1/2} term of B_3 is +(α+1)(4α²−1)/(64√z)"),
        Family::Bhat if args.half_plane.choice().is_none() => {
            note.push_str("; odd coefficients rewritten with w = √(−z), valid in both half-planes")
        }
        Family::Bhat => note.push_str("; w = √z and coefficient m carries i^quarter_turns"),
        _ => {}
    }
    if matches!(family, Family::U) {
        note.push_str(match args.exp_variant {
            super::ExpVariantArg::Kappa => "; exponential with κ-shifted square roots",
            super::ExpVariantArg::N => "; exponential 2w√n(√(1+j/n) − 1)",
        });
    }
    note
}

fn phased(coeffs: Vec<SymCoeff>) -> Vec<PhasedCoeff> {
    coeffs.into_iter().map(PhasedCoeff::real).collect()
}

fn raw_coefficients(args: &CoeffsArgs) -> Result<Vec<PhasedCoeff>, CliError> {
    let order = args.order;
    let offset = expansion_offset(Branch::SqrtZ);
    Ok(match args.family {
        Family::P => phased(buchholz_p(order)),
        Family::ATricomi => phased(tricomi_a(order)),
        Family::B => phased(expand_b_with_offset(order + 1, &offset)?),
        Family::Bhat => match args.half_plane.choice() {
            None => phased(hat_b_neg_z(order + 1, &offset)?),
            Some(hp) => {
                let b = ExpansionCoeffSet {
                    kind: ExpansionKind::B,
                    coeffs: phased(expand_b_with_offset(order + 1, &offset)?),
                    alpha_symbolic: true,
                };
                to_hat_b(&b, hp)?.coeffs
            }
        },
        Family::C => perron_c(order + 1)?.coeffs,
        Family::D => phased(ratio_d(order + 1)?),
        Family::U => phased(ratio_u(order + 1, args.exp_variant.into())?.u),
        Family::G => phased(gamma_ratio_g(order)),
        Family::ARatio => phased(kappa_power_ratio_a(order)),
        Family::Bernoulli => phased(gen_bernoulli(order).b),
    })
}

/// Build the table requested by `args`.
pub fn coefficient_table(args: &CoeffsArgs) -> Result<CoeffTable, CliError> {
    let mut substituted = BTreeMap::new();
    let mut values = Vec::new();
    if !args.symbolic {
        for (name, var, value) in [
            ("alpha", Var::Alpha, &args.alpha),
            ("beta", Var::Beta, &args.beta),
            ("j", Var::J, &args.j),
        ] {
            if let Some(text) = value {
                let r = parse_exact_rational(text).map_err(|e| CliError::Config(format!("--{name}: {e}")))?;
                substituted.insert(name.to_string(), r.to_string());
                values.push((var, r));
            }
        }
    }
    let coeffs = raw_coefficients(args)?;
    let branch_tag = coeffs.first().map(|c| c.coeff.branch()).unwrap_or(Branch::SqrtZ);
    let coefficients = coeffs
        .into_iter()
        .enumerate()
        .map(|(m, c)| {
            let mut coeff = c.coeff;
            for (var, r) in &values {
                coeff = coeff.substitute_rational(*var, r).map_err(crate::buchholz::ExpansionError::from)?;
            }
            Ok(CoeffEntry {
                m,
                quarter_turns: c.quarter_turns % 4,
                expression: coeff.to_string(),
                coeff,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(CoeffTable {
        kind: args.family.name().to_string(),
        max_order: args.order,
        branch_tag,
        variables: args.family.variables().to_string(),
        version_note: version_note(args.family, args),
        substituted,
        coefficients,
    })
}
