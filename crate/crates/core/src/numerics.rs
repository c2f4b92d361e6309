//! Extended-range scalar arithmetic in the log domain.
//!
//! [`XScalar`] stores a sign and the base-10 logarithm of the magnitude. Every
//! quantity handled by this crate, from a Planck-length voxel volume near
//! 1e-105 m³ to density ratios above 1e115, is carried in this form so that
//! products, quotients, powers and roots reduce to additions and scalings of
//! a single `f64`, and decade comparisons ("dex") are plain subtractions.
//!
//! The decimal text format is `<mantissa>e<exponent>` with exactly six
//! significant digits (`2.29996e-27`). It is shared by every CSV and JSON
//! writer in the crate.

use std::cmp::Ordering;
use std::f64::consts::LN_10;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Gap in decades beyond which the smaller addend no longer changes the sum.
pub const ADD_ABSORB_DEX: f64 = 16.0;

/// Significant digits kept when parsing long decimal strings.
const PARSE_DIGITS: usize = 17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Signed real number stored as `sign · 10^log10_mag`.
///
/// `log10_mag` is always finite. For zero it is held at `0.0` and never
/// consulted, so all zeros compare equal.
#[derive(Clone, Copy, Debug)]
pub struct XScalar {
    sign: Sign,
    log10_mag: f64,
}

impl XScalar {
    pub const ZERO: XScalar = XScalar {
        sign: Sign::Zero,
        log10_mag: 0.0,
    };

    pub const ONE: XScalar = XScalar {
        sign: Sign::Positive,
        log10_mag: 0.0,
    };

    /// Builds `mantissa · 10^exponent`. A zero mantissa gives zero whatever the
    /// exponent; a negative mantissa gives a negative value.
    pub fn from_parts(mantissa: f64, exponent: i64) -> Result<Self> {
        if !mantissa.is_finite() {
            return Err(Error::NonFinite(mantissa));
        }
        if mantissa == 0.0 {
            return Ok(Self::ZERO);
        }
        let sign = if mantissa < 0.0 { Sign::Negative } else { Sign::Positive };
        Self::from_log10(sign, mantissa.abs().log10() + exponent as f64)
    }

    pub fn from_f64(value: f64) -> Result<Self> {
        Self::from_parts(value, 0)
    }

    /// Builds a value directly from its sign and base-10 log magnitude.
    pub fn from_log10(sign: Sign, log10_mag: f64) -> Result<Self> {
        if sign == Sign::Zero {
            return Ok(Self::ZERO);
        }
        if !log10_mag.is_finite() {
            return Err(Error::NonFinite(log10_mag));
        }
        Ok(Self { sign, log10_mag })
    }

    /// `10^exponent`, for any finite real exponent.
    pub fn pow10(exponent: f64) -> Result<Self> {
        Self::from_log10(Sign::Positive, exponent)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Negative
    }

    /// Base-10 logarithm of the magnitude; negative infinity for zero.
    pub fn log10_mag(&self) -> f64 {
        match self.sign {
            Sign::Zero => f64::NEG_INFINITY,
            _ => self.log10_mag,
        }
    }

    pub fn abs(self) -> Self {
        match self.sign {
            Sign::Negative => Self {
                sign: Sign::Positive,
                ..self
            },
            _ => self,
        }
    }

    /// Nearest `f64`. Magnitudes outside the `f64` range saturate to
    /// infinity or flush to zero; use [`XScalar::try_to_f64`] to detect that.
    pub fn to_f64(&self) -> f64 {
        match self.sign {
            Sign::Zero => 0.0,
            Sign::Positive => 10f64.powf(self.log10_mag),
            Sign::Negative => -(10f64.powf(self.log10_mag)),
        }
    }

    pub fn try_to_f64(&self) -> Result<f64> {
        let v = self.to_f64();
        if !v.is_finite() || (v == 0.0 && !self.is_zero()) {
            return Err(Error::OutOfRange(self.to_string()));
        }
        Ok(v)
    }

    pub fn recip(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            sign: self.sign,
            log10_mag: -self.log10_mag,
        })
    }

    pub fn checked_div(self, divisor: Self) -> Result<Self> {
        Ok(self * divisor.recip()?)
    }

    /// Integer power. `0^0` is one; zero to a negative power is a division by zero.
    pub fn powi(self, n: i32) -> Result<Self> {
        if self.is_zero() {
            return match n.cmp(&0) {
                Ordering::Greater => Ok(Self::ZERO),
                Ordering::Equal => Ok(Self::ONE),
                Ordering::Less => Err(Error::DivisionByZero),
            };
        }
        let sign = if self.sign == Sign::Negative && n % 2 != 0 {
            Sign::Negative
        } else {
            Sign::Positive
        };
        Self::from_log10(sign, self.log10_mag * f64::from(n))
    }

    /// Real `n`-th root. Odd roots of negative values are negative.
    pub fn root(self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain {
                quantity: "root degree",
                requirement: "at least 1",
                value: "0".into(),
            });
        }
        match self.sign {
            Sign::Zero => Ok(Self::ZERO),
            Sign::Negative if n.is_multiple_of(2) => Err(Error::EvenRootOfNegative),
            sign => Self::from_log10(sign, self.log10_mag / f64::from(n)),
        }
    }

    /// `log10(self / other)`: how many decades `self` sits above `other`.
    pub fn ratio_dex(self, other: Self) -> Result<f64> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.sign != other.sign {
            return Err(Error::Domain {
                quantity: "dex ratio operands",
                requirement: "of the same sign",
                value: format!("{self} vs {other}"),
            });
        }
        Ok(self.log10_mag - other.log10_mag)
    }

    /// Decimal rendering with `sig_digits` significant digits.
    pub fn render(&self, sig_digits: usize) -> String {
        let decimals = sig_digits.max(1) - 1;
        if self.is_zero() {
            return format!("{:.*e}", decimals, 0.0);
        }
        let whole = self.log10_mag.floor();
        let mantissa = 10f64.powf(self.log10_mag - whole);
        // Rounding may carry the mantissa to 10, which LowerExp reports as e1.
        let text = format!("{:.*e}", decimals, mantissa);
        let (digits, carry) = text.split_once('e').expect("LowerExp always has an exponent");
        let carry: i64 = carry.parse().expect("LowerExp exponent is an integer");
        let sign = if self.sign == Sign::Negative { "-" } else { "" };
        format!("{sign}{digits}e{}", whole as i64 + carry)
    }

    /// Seventeen significant digits, enough to round-trip through [`FromStr`].
    pub fn render_full(&self) -> String {
        self.render(17)
    }
}

/// Six-significant-digit rendering of a plain real, in the same format as
/// [`XScalar`]'s `Display`.
pub fn fmt_real(value: f64) -> String {
    // Avoid "-0.00000e0".
    let value = if value == 0.0 { 0.0 } else { value };
    format!("{value:.5e}")
}

/// Parses a plain real with the same grammar as [`XScalar`]'s `FromStr`,
/// correctly rounded to the nearest `f64`. Values outside the `f64` range are
/// an error rather than infinity or zero.
pub fn parse_real(s: &str) -> Result<f64> {
    let wide: XScalar = s.parse()?;
    let v: f64 = s.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
    if !v.is_finite() || (v == 0.0 && !wide.is_zero()) {
        return Err(Error::OutOfRange(s.trim().to_string()));
    }
    Ok(v)
}

impl Default for XScalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl PartialEq for XScalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for XScalar {}

impl PartialOrd for XScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                Sign::Zero => Ordering::Equal,
                Sign::Positive => self.log10_mag.total_cmp(&other.log10_mag),
                Sign::Negative => other.log10_mag.total_cmp(&self.log10_mag),
            },
            unequal => unequal,
        }
    }
}

impl Mul for XScalar {
    type Output = XScalar;

    fn mul(self, rhs: XScalar) -> XScalar {
        let sign = self.sign.times(rhs.sign);
        if sign == Sign::Zero {
            return XScalar::ZERO;
        }
        XScalar {
            sign,
            log10_mag: self.log10_mag + rhs.log10_mag,
        }
    }
}

impl Add for XScalar {
    type Output = XScalar;

    /// Factors out the larger magnitude and adds the residual ratio with
    /// `ln_1p`, so nothing is ever exponentiated outside `[1e-16, 1]`.
    fn add(self, rhs: XScalar) -> XScalar {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.log10_mag >= rhs.log10_mag {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let gap = big.log10_mag - small.log10_mag;
        if gap > ADD_ABSORB_DEX {
            return big;
        }
        let ratio = 10f64.powf(-gap);
        let residual = if big.sign == small.sign {
            ratio.ln_1p()
        } else {
            if gap == 0.0 {
                return XScalar::ZERO;
            }
            (-ratio).ln_1p()
        };
        XScalar {
            sign: big.sign,
            log10_mag: big.log10_mag + residual / LN_10,
        }
    }
}

impl Neg for XScalar {
    type Output = XScalar;

    fn neg(self) -> XScalar {
        XScalar {
            sign: self.sign.flip(),
            ..self
        }
    }
}

impl Sub for XScalar {
    type Output = XScalar;

    fn sub(self, rhs: XScalar) -> XScalar {
        self + (-rhs)
    }
}

impl Product for XScalar {
    fn product<I: Iterator<Item = XScalar>>(iter: I) -> XScalar {
        iter.fold(XScalar::ONE, Mul::mul)
    }
}

impl Sum for XScalar {
    fn sum<I: Iterator<Item = XScalar>>(iter: I) -> XScalar {
        iter.fold(XScalar::ZERO, Add::add)
    }
}

impl TryFrom<f64> for XScalar {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        XScalar::from_f64(value)
    }
}

impl fmt::Display for XScalar {
    /// Six significant digits unless a precision is given, in which case it
    /// counts digits after the mantissa's decimal point as `{:e}` does.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().map_or(6, |p| p + 1);
        f.write_str(&self.render(sig))
    }
}

impl FromStr for XScalar {
    type Err = Error;

    /// Accepts plain decimals (`2.7`, `-0.5`, `.25`) and scientific notation
    /// (`5.7e-27`, `1E+400`). Exponents may exceed the `f64` range.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let body = s.trim();
        let (negative, body) = match body.as_bytes().first() {
            Some(b'-') => (true, &body[1..]),
            Some(b'+') => (false, &body[1..]),
            _ => (false, body),
        };
        let (mantissa, exponent) = match body.find(['e', 'E']) {
            Some(at) => {
                let exp = &body[at + 1..];
                let exp_digits = exp.strip_prefix(['+', '-']).unwrap_or(exp);
                if exp_digits.is_empty() || !exp_digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                (&body[..at], exp.parse::<i64>().map_err(|_| bad())?)
            }
            None => (body, 0),
        };
        let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if int_part.len() + frac_part.len() == 0 || !all_digits(int_part) || !all_digits(frac_part)
        {
            return Err(bad());
        }

        // value = digits · 10^(exponent - frac_len)
        let digits: String = [int_part, frac_part].concat();
        let Some(first) = digits.find(|c| c != '0') else {
            return Ok(XScalar::ZERO);
        };
        let significant = &digits[first..];
        let kept = significant.len().min(PARSE_DIGITS);
        let lead: f64 = significant[..kept].parse().map_err(|_| bad())?;
        let scale = exponent as f64 - frac_part.len() as f64 + (significant.len() - kept) as f64;
        let sign = if negative { Sign::Negative } else { Sign::Positive };
        XScalar::from_log10(sign, lead.log10() + scale)
    }
}
