//! Dobinski-type partial sums with rigorous tail bounds, the Lambert W
//! function, and the asymptotic trend reports.
//!
//! The Dobinski sums express each diagonal sequence as `(1/e) sum_j term(j)`
//! or `(1/sqrt(e)) sum_j term(j)`. Everything here except W itself stays in
//! exact rational arithmetic: the scale factor is replaced by a partial
//! alternating exponential sum whose error is bounded by its first omitted
//! term, and the series tail by a geometric bound once the term ratio drops
//! below 1/2. The returned bound is a proven enclosure, so a bound below
//! 1/2 makes the integer recoverable by rounding.

use num_traits::{One, Signed, Zero};

use crate::algebra::{factorial, pow2, rat_from_int, Int, Rat};
use crate::{Error, Result};

use super::tables::Variant;

/// The four diagonal sequences with Dobinski-type expansions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DobinskiVariant {
    /// `B_t(t) = (1/e) sum j^t / j!`
    Bell,
    /// `B'_t(t) = (1/e) sum (j-1)^t / j!`
    BellPrime,
    /// `B_B_t(t) = (1/sqrt e) sum (2j)^t / (2^j j!)`
    BellB,
    /// `B_B'_t(t) = (1/sqrt e) sum (2j-1)^t / (2^j j!)`
    BellBPrime,
}

impl DobinskiVariant {
    pub fn table_variant(self) -> Variant {
        match self {
            DobinskiVariant::Bell => Variant::Bell,
            DobinskiVariant::BellPrime => Variant::BellPrime,
            DobinskiVariant::BellB => Variant::BellB,
            DobinskiVariant::BellBPrime => Variant::BellBPrime,
        }
    }

    /// Series term at index `j` (numerator and factorial weight), exact.
    fn term(self, j: u64, t: u64) -> Rat {
        let tt = u32::try_from(t).expect("t fits u32");
        let power = |base: Int| {
            if base.is_zero() && t == 0 {
                Int::one()
            } else {
                base.pow(tt)
            }
        };
        match self {
            DobinskiVariant::Bell => rat_from_int(power(Int::from(j))) / rat_from_int(factorial(j)),
            DobinskiVariant::BellPrime => {
                rat_from_int(power(Int::from(j as i64 - 1))) / rat_from_int(factorial(j))
            }
            DobinskiVariant::BellB => {
                rat_from_int(power(Int::from(2 * j))) / rat_from_int(pow2(j) * factorial(j))
            }
            DobinskiVariant::BellBPrime => rat_from_int(power(Int::from(2 * j as i64 - 1)))
                / rat_from_int(pow2(j) * factorial(j)),
        }
    }

    /// Partial sum of the reciprocal scale (`1/e` or `1/sqrt e`) to `k`
    /// terms, with the first-omitted-term error bound of an alternating
    /// series.
    fn scale_partial(self, terms: u64) -> (Rat, Rat) {
        let half = matches!(self, DobinskiVariant::BellB | DobinskiVariant::BellBPrime);
        let mut sum = Rat::zero();
        for k in 0..terms {
            let mut term = Rat::one() / rat_from_int(factorial(k));
            if half {
                term /= rat_from_int(pow2(k));
            }
            if k % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let mut err = Rat::one() / rat_from_int(factorial(terms));
        if half {
            err /= rat_from_int(pow2(terms));
        }
        (sum, err)
    }
}

/// A Dobinski-type partial evaluation: `value` approximates the exact
/// integer with `|value - exact| < bound`.
#[derive(Clone, Debug)]
pub struct DobinskiSum {
    pub variant: DobinskiVariant,
    pub t: u64,
    pub terms: u64,
    pub value: Rat,
    pub bound: Rat,
}

/// Evaluates the Dobinski-type sum for the chosen diagonal at `t`, using
/// the given number of series terms (at least `t + 10`).
pub fn dobinski(variant: DobinskiVariant, t: u64, terms: u64) -> Result<DobinskiSum> {
    if terms < t + 10 {
        return Err(Error::ResourceBound(format!(
            "dobinski needs terms >= t + 10, got t={t}, terms={terms}"
        )));
    }
    let mut partial = Rat::zero();
    for j in 0..terms {
        partial += variant.term(j, t);
    }

    // geometric tail bound: past the cutoff the term ratio is below 1/2 and
    // decreasing, so the tail is at most first_term / (1 - ratio)
    let first_omitted = variant.term(terms, t);
    let next = variant.term(terms + 1, t);
    let ratio = &next / &first_omitted;
    let half = Rat::new(Int::one(), Int::from(2));
    if ratio > half || ratio.is_negative() {
        return Err(Error::ResourceBound(format!(
            "term ratio at j={terms} is not yet below 1/2; increase terms"
        )));
    }
    let tail_bound = &first_omitted / (Rat::one() - &ratio);

    let (scale, scale_err) = variant.scale_partial(terms);
    // |B - P*E| <= |B - P/e| + |P| |1/e - E| <= tail/e + |P| err <= tail + |P| err
    let bound = &tail_bound + partial.abs() * &scale_err;
    Ok(DobinskiSum { variant, t, terms, value: partial * scale, bound })
}

/// Nearest integer to an exact rational (ties round up).
pub fn round_to_nearest(r: &Rat) -> Int {
    (r + Rat::new(Int::one(), Int::from(2))).floor().to_integer()
}

/// Lambert W on the nonnegative reals: the inverse of `w -> w e^w`,
/// computed by Halley iteration to relative accuracy well below `1e-12`.
pub fn lambert_w(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::invalid("lambert w", format!("needs a finite x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = if x > std::f64::consts::E { x.ln() - x.ln().ln() } else { x / (1.0 + x) };
    for _ in 0..60 {
        let ew = w.exp();
        let f = w * ew - x;
        let denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        let step = f / denom;
        w -= step;
        if step.abs() <= 1e-16 * (1.0 + w.abs()) {
            break;
        }
    }
    let residual = (w * w.exp() - x).abs();
    if residual > 1e-12 * x.max(1.0) {
        return Err(Error::invalid("lambert w", format!("iteration stalled at residual {residual}")));
    }
    Ok(w)
}

/// `|stir'(t,n) n! / (n-1)^t - 1|` at each sampled `t`, exact. The leading
/// term asymptotics require `n >= 3`.
pub fn stir_prime_trend(n: u32, ts: &[u64]) -> Result<Vec<(u64, Rat)>> {
    if n < 3 {
        return Err(Error::invalid("trend", "the stir' asymptotics need n >= 3"));
    }
    let t_max = *ts.iter().max().unwrap_or(&0);
    let grid = super::tables::table(Variant::StirPrime, t_max, n, super::tables::Method::Recurrence)?;
    Ok(ts
        .iter()
        .map(|&t| {
            let ratio = rat_from_int(grid.get(t, n) * factorial(n as u64))
                / rat_from_int(Int::from(n as i64 - 1).pow(t as u32));
            (t, (ratio - Rat::one()).abs())
        })
        .collect())
}

/// `|stir_B'(t,n) 2^n n! / (2n-1)^t - 1|` at each sampled `t`, exact, for
/// `n >= 2`.
pub fn stir_b_prime_trend(n: u32, ts: &[u64]) -> Result<Vec<(u64, Rat)>> {
    if n < 2 {
        return Err(Error::invalid("trend", "the stir_B' asymptotics need n >= 2"));
    }
    let t_max = *ts.iter().max().unwrap_or(&0);
    let grid = super::tables::table(Variant::StirBPrime, t_max, n, super::tables::Method::Recurrence)?;
    Ok(ts
        .iter()
        .map(|&t| {
            let ratio = rat_from_int(grid.get(t, n) * factorial(n as u64) * pow2(n as u64))
                / rat_from_int(Int::from(2 * n as i64 - 1).pow(t as u32));
            (t, (ratio - Rat::one()).abs())
        })
        .collect())
}

/// `|B'_t(t) t / (B_t(t) W(t)) - 1|` at each sampled `t`. The W factor
/// makes this one floating point; the table ratio itself is exact.
pub fn bell_prime_w_trend(ts: &[u64]) -> Result<Vec<(u64, f64)>> {
    let t_max = *ts.iter().max().unwrap_or(&0);
    let n_cap = u32::try_from(t_max).expect("fits");
    let bell = super::tables::table(Variant::Bell, t_max, n_cap, super::tables::Method::Recurrence)?;
    let prime =
        super::tables::table(Variant::BellPrime, t_max, n_cap, super::tables::Method::Recurrence)?;
    ts.iter()
        .map(|&t| {
            let ratio = rat_from_int(prime.diagonal(t) * Int::from(t))
                / rat_from_int(bell.diagonal(t).clone());
            let approx = rat_to_f64(&ratio) / lambert_w(t as f64)?;
            Ok((t, (approx - 1.0).abs()))
        })
        .collect()
}

fn rat_to_f64(r: &Rat) -> f64 {
    // enough precision for trend reporting: scale to keep both parts finite
    let digits = |i: &Int| i.to_string().len() as i32;
    let shift = (digits(r.numer()).max(digits(r.denom())) - 15).max(0) as u32;
    let scale = Int::from(10u32).pow(shift);
    let num = (r.numer() / &scale).to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = (r.denom() / &scale).to_string().parse::<f64>().unwrap_or(f64::NAN);
    num / den
}

/// The three trend tables reported by the command line: exact deviations
/// for the two Stirling families and the W-normalized Bell-prime ratio.
pub struct AsymptoticReport {
    pub stir_prime: Vec<(u64, Rat)>,
    pub stir_b_prime: Vec<(u64, Rat)>,
    pub bell_prime_w: Vec<(u64, f64)>,
}

impl AsymptoticReport {
    pub fn standard() -> Result<Self> {
        Ok(AsymptoticReport {
            stir_prime: stir_prime_trend(3, &[10, 20, 30])?,
            stir_b_prime: stir_b_prime_trend(2, &[10, 20, 30])?,
            bell_prime_w: bell_prime_w_trend(&[20, 40, 60])?,
        })
    }

    /// Deviations from the leading term must shrink monotonically along
    /// each sampled list.
    pub fn strictly_decreasing(&self) -> bool {
        self.stir_prime.windows(2).all(|w| w[0].1 > w[1].1)
            && self.stir_b_prime.windows(2).all(|w| w[0].1 > w[1].1)
            && self.bell_prime_w.windows(2).all(|w| w[0].1 > w[1].1)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("stir'(t,3) * 3! / 2^t, deviation from 1:\n");
        for (t, d) in &self.stir_prime {
            out.push_str(&format!("  t={t}: {}\n", crate::algebra::format_rat(d)));
        }
        out.push_str("stir_B'(t,2) * 8 / 3^t, deviation from 1:\n");
        for (t, d) in &self.stir_b_prime {
            out.push_str(&format!("  t={t}: {}\n", crate::algebra::format_rat(d)));
        }
        out.push_str("B'_t(t) t / (B_t(t) W(t)), deviation from 1:\n");
        for (t, d) in &self.bell_prime_w {
            out.push_str(&format!("  t={t}: {d:.6}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::series::tables::{table, Method};

    #[test]
    fn dobinski_recovers_small_values() {
        let cases = [
            (DobinskiVariant::Bell, 5, 52i64),
            (DobinskiVariant::BellPrime, 4, 4),
            (DobinskiVariant::BellB, 2, 3),
            (DobinskiVariant::BellBPrime, 3, 4),
        ];
        for (variant, t, expect) in cases {
            let sum = dobinski(variant, t, 40).unwrap();
            assert!(sum.bound < Rat::new(Int::one(), Int::from(2)), "{variant:?} bound");
            assert_eq!(round_to_nearest(&sum.value), int(expect), "{variant:?} t={t}");
            let diff = (sum.value.clone() - rat_from_int(int(expect))).abs();
            assert!(diff < sum.bound, "{variant:?}: enclosure violated");
        }
    }

    #[test]
    fn dobinski_enclosure_range() {
        for t in 0..=12u64 {
            for variant in [
                DobinskiVariant::Bell,
                DobinskiVariant::BellPrime,
                DobinskiVariant::BellB,
                DobinskiVariant::BellBPrime,
            ] {
                let sum = dobinski(variant, t, 60).unwrap();
                let reference = table(variant.table_variant(), t, t as u32, Method::Recurrence)
                    .unwrap()
                    .diagonal(t)
                    .clone();
                assert!(sum.bound < Rat::new(Int::one(), Int::from(2)));
                assert_eq!(round_to_nearest(&sum.value), reference, "{variant:?} t={t}");
            }
        }
    }

    #[test]
    fn dobinski_preconditions() {
        assert!(dobinski(DobinskiVariant::Bell, 10, 15).is_err());
        assert!(dobinski(DobinskiVariant::Bell, 10, 20).is_ok());
    }

    #[test]
    fn lambert_w_values() {
        assert_eq!(lambert_w(0.0).unwrap(), 0.0);
        let one = lambert_w(std::f64::consts::E).unwrap();
        assert!((one - 1.0).abs() < 1e-13);
        let w = lambert_w(10.0).unwrap();
        assert!((w * w.exp() - 10.0).abs() < 1e-12);
        assert!(lambert_w(-1.0).is_err());
        // bounds log t - log log t <= W(t) <= log t for t >= e
        for t in [3.0, 10.0, 60.0, 1e6] {
            let w = lambert_w(t).unwrap();
            let lt = t.ln();
            assert!(w <= lt + 1e-12, "upper bound at {t}");
            assert!(w >= lt - lt.ln() - 1e-12, "lower bound at {t}");
        }
    }

    #[test]
    fn trends_strictly_decrease() {
        let report = AsymptoticReport::standard().unwrap();
        assert!(report.strictly_decreasing(), "{}", report.render());
        // hand values: stir'(t,3) deviation is (3 + (-1)^t)/2^t
        let sp = &report.stir_prime;
        assert_eq!(sp[0].1, Rat::new(int(4), int(1024)));
    }

    #[test]
    fn trend_validity() {
        assert!(stir_prime_trend(2, &[5]).is_err());
        assert!(stir_b_prime_trend(1, &[5]).is_err());
    }
}
