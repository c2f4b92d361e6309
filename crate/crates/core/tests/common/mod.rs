//! Independent oracles shared by the integration tests. None of these call
//! into the arithmetic they are used to check.

#![allow(dead_code)]

use std::f64::consts::LN_10;

use num_bigint::BigInt;
use rand::Rng;

/// Decimal mantissa digits used by [`exact_sum_log10`] operands.
pub const MANTISSA_DIGITS: u32 = 15;

/// `log10 |n|` from the decimal expansion of a big integer.
pub fn bigint_log10(n: &BigInt) -> f64 {
    let digits = n.magnitude().to_string();
    let kept = digits.len().min(17);
    let lead: f64 = digits[..kept].parse().unwrap();
    lead.log10() + (digits.len() - kept) as f64
}

/// Exact sum of `m1·10^(e1-14) + m2·10^(e2-14)` for signed integer mantissas
/// with at most fifteen digits. Returns `None` for an exact zero, otherwise
/// `(negative, log10 |sum|)`.
pub fn exact_sum_log10(m1: i64, e1: i64, m2: i64, e2: i64) -> Option<(bool, f64)> {
    let low = e1.min(e2);
    let scale = |m: i64, e: i64| BigInt::from(m) * BigInt::from(10).pow((e - low) as u32);
    let sum = scale(m1, e1) + scale(m2, e2);
    if sum == BigInt::from(0) {
        return None;
    }
    let negative = sum < BigInt::from(0);
    Some((negative, bigint_log10(&sum) + (low - i64::from(MANTISSA_DIGITS - 1)) as f64))
}

/// Relative error implied by a difference of base-10 logarithms.
pub fn rel_from_dex(dex: f64) -> f64 {
    (dex * LN_10).exp_m1().abs()
}

/// Monte Carlo volume of the intersection of two unit balls whose centres are
/// `u` apart, by rejection sampling in the lens's bounding box. Returns the
/// estimate and its standard error.
pub fn monte_carlo_unit_lens<R: Rng>(u: f64, samples: u64, rng: &mut R) -> (f64, f64) {
    if u >= 2.0 {
        return (0.0, 0.0);
    }
    let half_width = (1.0 - u * u / 4.0).sqrt();
    let (x_lo, x_hi) = (u - 1.0, 1.0);
    let box_volume = (x_hi - x_lo) * (2.0 * half_width).powi(2);
    let mut hits = 0u64;
    for _ in 0..samples {
        let x = rng.gen_range(x_lo..x_hi);
        let y = rng.gen_range(-half_width..half_width);
        let z = rng.gen_range(-half_width..half_width);
        let yz = y * y + z * z;
        if x * x + yz <= 1.0 && (x - u) * (x - u) + yz <= 1.0 {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    (box_volume * p, box_volume * (p * (1.0 - p) / samples as f64).sqrt())
}

/// Ordinary least squares `y = intercept + slope·x`; returns the slope and
/// the largest absolute residual.
pub fn fit_line(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let worst = points
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).abs())
        .fold(0.0, f64::max);
    (slope, worst)
}
