//! Exact rational values and their controlled conversion to `f64`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Builds a reduced `BigRational`, rejecting a zero denominator instead of
/// panicking like `BigRational::new` does.
pub fn rational<N, D>(numer: N, denom: D) -> Result<BigRational>
where
    N: Into<BigInt>,
    D: Into<BigInt>,
{
    let denom = denom.into();
    if denom.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(numer.into(), denom))
}

/// Renders a rational as `p/q` with the sign on the numerator. The `/q` part
/// is always present, including `q = 1`, so downstream parsers see one shape.
pub fn format_ratio(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Converts a rational to `f64` without overflowing through the numerator or
/// denominator individually.
///
/// `ToPrimitive::to_f64` on `BigRational` goes through each part separately
/// and returns infinities or NaN once either exceeds ~1e308, which happens
/// here long before the *ratio* stops being representable (densities are all
/// in [0, 1] however large the device). Both parts are right-shifted into the
/// 64-bit range first and the lost scale is reapplied as a power of two.
pub fn ratio_to_f64(value: &BigRational) -> f64 {
    let numer = value.numer();
    let denom = value.denom();
    if numer.is_zero() {
        return 0.0;
    }
    let numer_shift = numer.bits().saturating_sub(64);
    let denom_shift = denom.bits().saturating_sub(64);
    let numer_part = (numer >> numer_shift).to_f64().unwrap_or(f64::NAN);
    let denom_part = (denom >> denom_shift).to_f64().unwrap_or(f64::NAN);
    let scale = numer_shift as i64 - denom_shift as i64;
    if scale.unsigned_abs() > i32::MAX as u64 {
        return if scale > 0 {
            f64::INFINITY * numer_part.signum()
        } else {
            0.0
        };
    }
    numer_part / denom_part * 2f64.powi(scale as i32)
}
