//! Generating-function checks: exponential generating functions for the
//! diagonal (unrestricted) sequences and ordinary generating functions for
//! the fixed-block-count columns, both expanded exactly as truncated
//! rational series and compared against the tables coefficient by
//! coefficient.

use num_traits::{One, Zero};

use crate::algebra::{as_integer, factorial, pow2, rat_from_int, Int, Rat, RatSeries};
use crate::{Error, Result};

use super::tables::{table, Method, Variant};

/// Coefficient-by-coefficient comparison outcome.
#[derive(Clone, Debug)]
pub struct GfReport {
    pub what: String,
    pub order: u64,
    pub mismatches: Vec<String>,
}

impl GfReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "what": self.what,
            "order": self.order,
            "mismatches": self.mismatches,
        })
        .to_string()
    }
}

/// Exponent series inside the EGF of each diagonal sequence, all with zero
/// constant term:
/// `e^x - 1` (plain), `e^x - 1 - x` (cyclically spaced),
/// `(e^{2x} - 1)/2` (marked), `(e^{2x} - 1 - 2x)/2` (marked, spaced).
fn egf_exponent(variant: Variant, order: usize) -> Result<RatSeries> {
    let coeff = |t: usize| -> Rat {
        let inv_fact = Rat::one() / rat_from_int(factorial(t as u64));
        match variant {
            Variant::Bell => {
                if t >= 1 {
                    inv_fact
                } else {
                    Rat::zero()
                }
            }
            Variant::BellPrime => {
                if t >= 2 {
                    inv_fact
                } else {
                    Rat::zero()
                }
            }
            Variant::BellB => {
                if t >= 1 {
                    rat_from_int(pow2(t as u64 - 1)) * inv_fact
                } else {
                    Rat::zero()
                }
            }
            Variant::BellBPrime => {
                if t >= 2 {
                    rat_from_int(pow2(t as u64 - 1)) * inv_fact
                } else {
                    Rat::zero()
                }
            }
            _ => unreachable!("caller restricts to bell variants"),
        }
    };
    match variant {
        Variant::Bell | Variant::BellPrime | Variant::BellB | Variant::BellBPrime => {
            Ok(RatSeries::from_fn(order, coeff))
        }
        other => Err(Error::invalid(
            "egf",
            format!("{} has no exponential generating function here", other.name()),
        )),
    }
}

/// Checks that `t! [x^t] EGF` equals the table diagonal for `t <= order`.
pub fn egf_check(variant: Variant, order: u64) -> Result<GfReport> {
    if order > 20 {
        return Err(Error::ResourceBound("egf order is capped at 20".into()));
    }
    let series = egf_exponent(variant, order as usize)?.exp()?;
    let reference = table(variant, order, u32::try_from(order).expect("small"), Method::Recurrence)?;
    let mut mismatches = Vec::new();
    for t in 0..=order {
        let scaled = series.coeff(t as usize) * rat_from_int(factorial(t));
        let coefficient = as_integer(&scaled)
            .ok_or_else(|| Error::invalid("egf", format!("non-integer t! coefficient at t={t}")))?;
        let expected = reference.diagonal(t);
        if &coefficient != expected {
            mismatches.push(format!("t={t}: {coefficient} != {expected}"));
        }
    }
    Ok(GfReport { what: format!("egf {}", variant.name()), order, mismatches })
}

/// `1/(1 - cx)` at the given truncation order.
fn geometric(order: usize, c: i64) -> RatSeries {
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = Rat::one();
    if order >= 1 {
        coeffs[1] = rat_from_int(Int::from(-c));
    }
    RatSeries::from_coeffs(coeffs).inverse().expect("nonzero constant")
}

/// Ordinary generating function of a fixed-`n` column:
/// `x^n prod 1/(1-jx)` and the variants with `2j`, `2j-1` and the extra
/// `1/(1+x)` factor for the primed families (which need `n >= 2`).
fn ogf_series(variant: Variant, n: u32, order: usize) -> Result<RatSeries> {
    let primed = matches!(variant, Variant::StirPrime | Variant::StirBPrime);
    if primed && n < 2 {
        return Err(Error::invalid("ogf", "the primed generating functions need n >= 2"));
    }
    let mut series = RatSeries::monomial(order, n as usize, Rat::one());
    if primed {
        series = series.mul(&geometric(order, -1))?;
    }
    let top = match variant {
        Variant::StirPrime => n - 1,
        Variant::Stir | Variant::StirB | Variant::StirBPrime => n,
        other => {
            return Err(Error::invalid(
                "ogf",
                format!("{} has no ordinary generating function here", other.name()),
            ))
        }
    };
    for j in 1..=top {
        let c = match variant {
            Variant::Stir | Variant::StirPrime => j as i64,
            Variant::StirB => 2 * j as i64,
            Variant::StirBPrime => 2 * j as i64 - 1,
            _ => unreachable!(),
        };
        series = series.mul(&geometric(order, c))?;
    }
    Ok(series)
}

/// Checks that the series expansion of the rational generating function
/// matches the table column for `t <= order`.
pub fn ogf_check(variant: Variant, n: u32, order: u64) -> Result<GfReport> {
    let series = ogf_series(variant, n, order as usize)?;
    let reference = table(variant, order, n, Method::Recurrence)?;
    let mut mismatches = Vec::new();
    for t in 0..=order {
        let coefficient = as_integer(series.coeff(t as usize))
            .ok_or_else(|| Error::invalid("ogf", format!("non-integer coefficient at t={t}")))?;
        let expected = reference.get(t, n);
        if &coefficient != expected {
            mismatches.push(format!("t={t}: {coefficient} != {expected}"));
        }
    }
    Ok(GfReport { what: format!("ogf {} n={n}", variant.name()), order, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn egfs_match_tables() {
        for variant in [Variant::Bell, Variant::BellPrime, Variant::BellB, Variant::BellBPrime] {
            let report = egf_check(variant, 10).unwrap();
            assert!(report.passed(), "{}: {:?}", report.what, report.mismatches);
        }
        assert!(egf_check(Variant::Stir, 5).is_err());
        assert!(egf_check(Variant::Bell, 21).is_err());
    }

    #[test]
    fn ogfs_match_tables() {
        for variant in [Variant::Stir, Variant::StirB] {
            for n in 0..=4u32 {
                let report = ogf_check(variant, n, 10).unwrap();
                assert!(report.passed(), "{}: {:?}", report.what, report.mismatches);
            }
        }
        for variant in [Variant::StirPrime, Variant::StirBPrime] {
            for n in 2..=4u32 {
                let report = ogf_check(variant, n, 10).unwrap();
                assert!(report.passed(), "{}: {:?}", report.what, report.mismatches);
            }
            assert!(ogf_check(variant, 1, 10).is_err());
        }
    }

    #[test]
    fn ogf_alternating_column() {
        // stir'(t,2): x^2/((1+x)(1-x)) gives 0,0,1,0,1,0,...
        let s = ogf_series(Variant::StirPrime, 2, 8).unwrap();
        let got: Vec<Int> = (0..=8).map(|t| as_integer(s.coeff(t)).unwrap()).collect();
        assert_eq!(got, [0, 0, 1, 0, 1, 0, 1, 0, 1].map(Int::from));
    }
}
