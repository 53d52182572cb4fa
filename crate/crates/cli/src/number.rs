//! Integer arguments: plain decimal, or `B^E` shorthand such as `10^100`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Largest exponent accepted in `B^E` shorthand.
const MAX_SHORTHAND_EXPONENT: u64 = 1_000_000;

pub fn parse_integer(s: &str) -> Result<BigUint, String> {
    let decimal = |t: &str| -> Result<BigUint, String> {
        let t = t.trim();
        if t.is_empty() || !t.bytes().all(|d| d.is_ascii_digit()) {
            return Err(format!("not a non-negative decimal integer: {s:?}"));
        }
        t.parse().map_err(|_| format!("not a non-negative decimal integer: {s:?}"))
    };
    match s.split_once('^') {
        None => decimal(s),
        Some((base, exponent)) => {
            let base = decimal(base)?;
            let exponent = decimal(exponent)?
                .to_u64()
                .filter(|&e| e <= MAX_SHORTHAND_EXPONENT)
                .ok_or_else(|| format!("exponent in {s:?} is larger than {MAX_SHORTHAND_EXPONENT}"))?;
            if base.bits().saturating_mul(exponent) > 64 * MAX_SHORTHAND_EXPONENT {
                return Err(format!("{s:?} is too large to write out"));
            }
            Ok(base.pow(exponent as u32))
        }
    }
}
