//! Exact big-integer tetration and digit counting.
//!
//! Everything here works on fully materialized integers and is the ground
//! truth the modular and formula paths are checked against. Work is bounded
//! by a decimal digit budget; anything larger has to go through
//! [`crate::modtower`].

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default bound on the decimal length of any exact intermediate value.
pub const DEFAULT_DIGIT_BUDGET: u64 = 1_000_000;

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// A non-negative base written as `j * 10^c` with `c` maximal.
///
/// Zero is stored as `j = 0, c = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Base {
    a: BigUint,
    j: BigUint,
    c: u64,
}

impl Base {
    pub fn value(&self) -> &BigUint {
        &self.a
    }

    /// The cofactor left after stripping every trailing zero.
    pub fn cofactor(&self) -> &BigUint {
        &self.j
    }

    /// Number of trailing decimal zeros of the base.
    pub fn tens(&self) -> u64 {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
    }

    /// True for `10, 20, ..., 100, ...`; false for zero.
    pub fn is_positive_multiple_of_ten(&self) -> bool {
        self.c > 0
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)
    }
}

/// Splits `a` into `j * 10^c` with `j mod 10 != 0` (or `j = c = 0` for zero).
pub fn decompose(a: impl Into<BigUint>) -> Base {
    let a = a.into();
    if a.is_zero() {
        return Base { a, j: BigUint::zero(), c: 0 };
    }
    let ten = BigUint::from(10u32);
    let mut j = a.clone();
    let mut c = 0u64;
    loop {
        let (q, r) = j.div_rem(&ten);
        if !r.is_zero() {
            break;
        }
        j = q;
        c += 1;
    }
    Base { a, j, c }
}

/// Approximate `log10(x)` for `x >= 1`, accurate to about 1e-15 relative.
pub(crate) fn log10_approx(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_u64().unwrap_or(u64::MAX) as f64;
    top.log10() + shift as f64 * LOG10_2
}

/// Number of decimal digits of `x`; zero has one digit.
pub fn decimal_digits(x: &BigUint) -> u64 {
    if x.is_zero() {
        return 1;
    }
    // 10^guess <= 2^(bits-1) <= x
    let mut guess = ((x.bits() - 1) as f64 * LOG10_2).floor() as u64;
    let ten = BigUint::from(10u32);
    let mut next = pow10(guess + 1);
    while &next <= x {
        guess += 1;
        next *= &ten;
    }
    guess + 1
}

pub(crate) fn pow10(k: u64) -> BigUint {
    BigUint::from(10u32).pow(u32::try_from(k).expect("power of ten exponent fits in u32"))
}

/// `p`-adic valuation of `x` for a small prime `p`.
pub(crate) fn valuation(x: &BigUint, p: u32) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p == 2 {
        return Ok(x.trailing_zeros().unwrap_or(0));
    }
    // Strip p^(2^k) for growing k, then walk back down: the remaining
    // valuation is below 2^k, so each smaller square divides at most once.
    let mut rest = x.clone();
    let mut count = 0u64;
    let mut squares = Vec::new();
    let mut pk = BigUint::from(p);
    loop {
        let (q, r) = rest.div_rem(&pk);
        if !r.is_zero() {
            break;
        }
        rest = q;
        count += 1 << squares.len();
        let next = &pk * &pk;
        squares.push(pk);
        pk = next;
    }
    while let Some(pk) = squares.pop() {
        let (q, r) = rest.div_rem(&pk);
        if r.is_zero() {
            rest = q;
            count += 1 << squares.len();
        }
    }
    Ok(count)
}

/// Computes `base^exponent`, refusing when the result would have more than
/// `budget` decimal digits.
fn pow_within_budget(base: &BigUint, exponent: &BigUint, budget: u64) -> Result<BigUint> {
    let exceeded = Error::BudgetExceeded { budget };
    if exponent.is_zero() {
        return Ok(BigUint::one());
    }
    if base.is_zero() || base.is_one() {
        return Ok(base.clone());
    }
    // base >= 2 so base^e has more than e*log10(2) digits.
    let e = match exponent.to_u64() {
        Some(e) if (e as f64) * LOG10_2 <= budget as f64 + 1.0 => e,
        _ => return Err(exceeded),
    };
    let estimate = e as f64 * log10_approx(base);
    if estimate > budget as f64 + 1.0 {
        return Err(exceeded);
    }
    let value = base.pow(u32::try_from(e).map_err(|_| exceeded.clone())?);
    if decimal_digits(&value) > budget {
        return Err(exceeded);
    }
    Ok(value)
}

/// Exact `^b a`, with `^0 a = 1` and `0^0 = 1`.
///
/// Fails with [`Error::BudgetExceeded`] as soon as an intermediate tower
/// value would need more than `digit_budget` decimal digits.
pub fn tetrate_exact(
    a: impl Into<BigUint>,
    b: impl Into<BigUint>,
    digit_budget: u64,
) -> Result<BigUint> {
    let a = a.into();
    let b = b.into();
    if a.is_zero() {
        // 0^0 = 1 and 0^1 = 0: the tower alternates with the parity of b.
        return Ok(if b.is_even() { BigUint::one() } else { BigUint::zero() });
    }
    if a.is_one() {
        return Ok(BigUint::one());
    }
    let mut value = BigUint::one();
    let mut height = BigUint::zero();
    while height < b {
        value = pow_within_budget(&a, &value, digit_budget)?;
        height += 1u32;
    }
    Ok(value)
}

/// A fully materialized tetration `^height base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactTetration {
    pub base: Base,
    pub height: BigUint,
    pub value: BigUint,
}

impl ExactTetration {
    pub fn compute(a: impl Into<BigUint>, b: impl Into<BigUint>, digit_budget: u64) -> Result<Self> {
        let base = decompose(a);
        let height = b.into();
        let value = tetrate_exact(base.value().clone(), height.clone(), digit_budget)?;
        Ok(Self { base, height, value })
    }
}

/// Largest `t` with `10^t | x`.
pub fn trailing_zeros(x: &BigUint) -> Result<u64> {
    let twos = valuation(x, 2)?;
    let fives = valuation(x, 5)?;
    Ok(twos.min(fives))
}

/// Number of rightmost decimal digits `x` and `y` have in common.
///
/// Only physically present digits take part: the shorter number is never
/// padded with leading zeros, so `common_trailing_digits(7, 107)` is 1.
pub fn common_trailing_digits(x: &BigUint, y: &BigUint) -> Result<u64> {
    if x == y {
        return Err(Error::EqualValues);
    }
    let xs = x.to_str_radix(10);
    let ys = y.to_str_radix(10);
    let count = xs
        .bytes()
        .rev()
        .zip(ys.bytes().rev())
        .take_while(|(p, q)| p == q)
        .count();
    Ok(count as u64)
}
