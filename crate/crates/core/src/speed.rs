//! Congruence speed: how many new rightmost digits of `^b a` freeze when the
//! tower grows from height `b` to `b + 1`.
//!
//! Two independent routes are provided. The definitional route compares
//! residue windows of consecutive tower heights and counts common trailing
//! digits. The formula route applies only to bases ending in 0, where the
//! frozen digits are exactly the trailing zeros and the speed is
//! `c * (^(b-1) a - ^(b-2) a)` for `a = j * 10^c`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactint::{self, decompose, tetrate_exact, Base, DEFAULT_DIGIT_BUDGET};
use crate::modtower::{lambda_chain, tower_window, DigitWindow, TowerConfig};

/// Window width the definitional route starts from.
pub const INITIAL_WINDOW: u64 = 32;

/// Resource limits shared by every route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Largest exact integer, in decimal digits, ever materialized.
    pub digits: u64,
    pub tower: TowerConfig,
}

impl Default for Budget {
    fn default() -> Self {
        Self { digits: DEFAULT_DIGIT_BUDGET, tower: TowerConfig::default() }
    }
}

impl Budget {
    /// Budget with the given digit limit; the window budget never exceeds it.
    pub fn with_digits(digits: u64) -> Self {
        let mut budget = Self { digits, ..Self::default() };
        budget.tower.window_budget = budget.tower.window_budget.min(digits.max(1));
        budget
    }
}

/// `p`-adic valuation for `p` in {2, 5}.
pub fn v_adic(m: &BigUint, p: u32) -> Result<u64> {
    if p != 2 && p != 5 {
        return Err(Error::OutOfDomain(format!("only 2-adic and 5-adic valuations are supported, got p = {p}")));
    }
    exactint::valuation(m, p)
}

/// Which residue class selected the stabilization formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TildeCase {
    /// `a ≡ 1 (mod 5)`: `v5(a - 1)`.
    OneModFive,
    /// `a ≡ 2, 3 (mod 5)`: `v5(a^2 + 1)`.
    TwoOrThreeModFive,
    /// `a ≡ 4 (mod 5)`: `v5(a + 1)`.
    FourModFive,
    /// `a ≡ 5 (mod 10)`: `v2(a^2 - 1) - 1`.
    FiveModTen,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationInfo {
    pub tilde_v: u64,
    /// `tilde_v + 2`: from this height on the congruence speed is constant.
    pub bound: u64,
    pub case: TildeCase,
}

/// Stabilization offset of a base that is not a multiple of 10.
pub fn tilde_v(a: impl Into<BigUint>) -> Result<StabilizationInfo> {
    let a = a.into();
    if a < BigUint::from(2u32) {
        return Err(Error::OutOfDomain(format!("stabilization offset needs a >= 2, got {a}")));
    }
    let (tilde_v, case) = match (&a % 10u32).to_u32().expect("digit") {
        0 => return Err(Error::OutOfDomain(format!("{a} is a multiple of 10"))),
        5 => (v_adic(&(&a * &a - 1u32), 2)? - 1, TildeCase::FiveModTen),
        r => match r % 5 {
            1 => (v_adic(&(&a - 1u32), 5)?, TildeCase::OneModFive),
            2 | 3 => (v_adic(&(&a * &a + 1u32), 5)?, TildeCase::TwoOrThreeModFive),
            _ => (v_adic(&(&a + 1u32), 5)?, TildeCase::FourModFive),
        },
    };
    Ok(StabilizationInfo { tilde_v, bound: tilde_v + 2, case })
}

/// `c * (^(b-1) a - ^(b-2) a)` for a base ending in 0 whose value is too large
/// to write out.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicSpeed {
    pub base: Base,
    /// Height `b >= 2`.
    pub height: BigUint,
}

impl SymbolicSpeed {
    pub fn evaluate(&self, digit_budget: u64) -> Result<BigUint> {
        let upper = tetrate_exact(self.base.value().clone(), &self.height - 1u32, digit_budget)?;
        let lower = tetrate_exact(self.base.value().clone(), &self.height - 2u32, digit_budget)?;
        Ok(BigUint::from(self.base.tens()) * (upper - lower))
    }
}

impl fmt::Display for SymbolicSpeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.base.value();
        write!(
            f,
            "{}*({a}^^{} - {a}^^{})",
            self.base.tens(),
            &self.height - 1u32,
            &self.height - 2u32
        )
    }
}

/// A congruence speed, written out or left as an expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpeedValue {
    Finite(BigUint),
    Symbolic(SymbolicSpeed),
}

impl SpeedValue {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            SpeedValue::Finite(v) => Some(v),
            SpeedValue::Symbolic(_) => None,
        }
    }

    pub fn evaluate(&self, digit_budget: u64) -> Result<BigUint> {
        match self {
            SpeedValue::Finite(v) => Ok(v.clone()),
            SpeedValue::Symbolic(s) => s.evaluate(digit_budget),
        }
    }
}

impl From<u64> for SpeedValue {
    fn from(v: u64) -> Self {
        SpeedValue::Finite(BigUint::from(v))
    }
}

impl fmt::Display for SpeedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpeedValue::Finite(v) => write!(f, "{v}"),
            SpeedValue::Symbolic(s) => write!(f, "{s}"),
        }
    }
}

/// Error from parsing a rendered [`SpeedValue`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a congruence speed: {0:?}")]
pub struct ParseSpeedError(String);

impl FromStr for SpeedValue {
    type Err = ParseSpeedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseSpeedError(s.to_string());
        if let Ok(v) = s.parse::<BigUint>() {
            if s.bytes().all(|d| d.is_ascii_digit()) {
                return Ok(SpeedValue::Finite(v));
            }
        }
        // c*(a^^u - a^^l)
        let (c, rest) = s.split_once("*(").ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let (upper, lower) = inner.split_once(" - ").ok_or_else(bad)?;
        let (a1, u) = upper.split_once("^^").ok_or_else(bad)?;
        let (a2, l) = lower.split_once("^^").ok_or_else(bad)?;
        let num = |t: &str| -> Result<BigUint, ParseSpeedError> {
            if t.is_empty() || !t.bytes().all(|d| d.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let (c, a1, a2, u, l) = (num(c)?, num(a1)?, num(a2)?, num(u)?, num(l)?);
        if a1 != a2 || u != &l + 1u32 {
            return Err(bad());
        }
        let base = decompose(a1);
        if BigUint::from(base.tens()) != c || base.tens() == 0 {
            return Err(bad());
        }
        Ok(SpeedValue::Symbolic(SymbolicSpeed { base, height: u + 1u32 }))
    }
}

/// `V(a, b)` for any base and any height `b >= 1`.
///
/// Bases ending in 0 go through the closed formula; 0 and 1 are 0 by
/// definition; every other base is computed from residue windows.
pub fn congruence_speed(a: impl Into<BigUint>, b: impl Into<BigUint>, budget: &Budget) -> Result<SpeedValue> {
    let base = decompose(a);
    let b = b.into();
    if b.is_zero() {
        return Err(Error::OutOfDomain("congruence speed needs a height >= 1".into()));
    }
    if base.is_zero() || base.value().is_one() {
        return Ok(SpeedValue::Finite(BigUint::zero()));
    }
    if base.is_positive_multiple_of_ten() {
        return formula_speed(&base, &b, budget.digits);
    }
    let mut values = definitional_run(base.value(), &b, 1, budget)?;
    Ok(SpeedValue::Finite(values.remove(0)))
}

/// `V(a, b)` for the consecutive heights `first, first + 1, ..., first + count - 1`,
/// sharing residue windows between neighbouring heights.
pub fn speed_profile(
    a: impl Into<BigUint>,
    first: impl Into<BigUint>,
    count: usize,
    budget: &Budget,
) -> Result<Vec<SpeedValue>> {
    let base = decompose(a);
    let first = first.into();
    if first.is_zero() {
        return Err(Error::OutOfDomain("congruence speed needs a height >= 1".into()));
    }
    if base.is_zero() || base.value().is_one() {
        return Ok(vec![SpeedValue::Finite(BigUint::zero()); count]);
    }
    if base.is_positive_multiple_of_ten() {
        return (0..count)
            .map(|k| formula_speed(&base, &(&first + k), budget.digits))
            .collect();
    }
    Ok(definitional_run(base.value(), &first, count, budget)?
        .into_iter()
        .map(SpeedValue::Finite)
        .collect())
}

/// `V(a, b)` straight from the definition
/// `match(^b a, ^(b+1) a) - match(^(b-1) a, ^b a)`, on residue windows that
/// double from [`INITIAL_WINDOW`] digits until every first mismatch is found.
///
/// Works for every base `a >= 2`, including multiples of 10, as long as the
/// frozen digits fit in the window budget.
pub fn definitional_speed(a: impl Into<BigUint>, b: impl Into<BigUint>, budget: &Budget) -> Result<BigUint> {
    let a = a.into();
    let b = b.into();
    if a < BigUint::from(2u32) || b.is_zero() {
        return Err(Error::OutOfDomain("definitional speed needs a >= 2 and b >= 1".into()));
    }
    Ok(definitional_run(&a, &b, 1, budget)?.remove(0))
}

fn definitional_run(a: &BigUint, first: &BigUint, count: usize, budget: &Budget) -> Result<Vec<BigUint>> {
    let window_budget = budget.tower.window_budget;
    let lowest = first - 1u32;
    // Beyond the saturation height of the widest allowed window, all three
    // residues coincide at every width and no mismatch can ever be found.
    if lowest >= BigUint::from(lambda_chain(window_budget)?.saturation_height()) {
        return Err(Error::WindowBudgetExceeded { requested: window_budget + 1, budget: window_budget });
    }
    let mut n = INITIAL_WINDOW.min(window_budget);
    loop {
        let windows = (0..count + 2)
            .map(|k| tower_window(a, &(&lowest + k), n, &budget.tower))
            .collect::<Result<Vec<DigitWindow>>>()?;
        let matches = windows
            .windows(2)
            .map(|pair| pair[0].common_suffix(&pair[1]))
            .collect::<Result<Vec<Option<u64>>>>()?;
        if let Some(matches) = matches.into_iter().collect::<Option<Vec<u64>>>() {
            return matches
                .windows(2)
                .map(|m| {
                    m[1].checked_sub(m[0])
                        .map(BigUint::from)
                        .ok_or_else(|| Error::OutOfDomain(format!("frozen digits decreased ({} -> {})", m[0], m[1])))
                })
                .collect();
        }
        if n >= window_budget {
            return Err(Error::WindowBudgetExceeded { requested: n.saturating_mul(2), budget: window_budget });
        }
        n = n.saturating_mul(2).min(window_budget);
    }
}

/// The closed formula for `a = j * 10^c` with `j >= 1`, `c >= 1`:
/// `c` at height 1 and `c * (^(b-1) a - ^(b-2) a)` above.
pub fn formula_speed(base: &Base, b: &BigUint, digit_budget: u64) -> Result<SpeedValue> {
    if !base.is_positive_multiple_of_ten() {
        return Err(Error::OutOfDomain(format!("{base} is not a positive multiple of 10")));
    }
    if b.is_zero() {
        return Err(Error::OutOfDomain("congruence speed needs a height >= 1".into()));
    }
    let c = BigUint::from(base.tens());
    if b.is_one() {
        return Ok(SpeedValue::Finite(c));
    }
    if !tower_fits(base, b, digit_budget)? {
        return Ok(SpeedValue::Symbolic(SymbolicSpeed { base: base.clone(), height: b.clone() }));
    }
    let a = base.value().clone();
    let upper = tetrate_exact(a.clone(), b - 1u32, digit_budget)?;
    let lower = tetrate_exact(a, b - 2u32, digit_budget)?;
    Ok(SpeedValue::Finite(&c * upper - &c * lower))
}

/// Whether `^b a` itself can be materialized. Speeds at heights whose tower
/// cannot be written out stay symbolic.
fn tower_fits(base: &Base, b: &BigUint, digit_budget: u64) -> Result<bool> {
    match tetrate_exact(base.value().clone(), b.clone(), digit_budget) {
        Ok(_) => Ok(true),
        Err(Error::BudgetExceeded { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Tower value at heights `-1, 0, 1, ...`, where `^-1 a = 0`.
fn tetrate_from_minus_one(a: &BigUint, height: &BigInt, digit_budget: u64) -> Result<BigUint> {
    match height.sign() {
        Sign::Minus => Ok(BigUint::zero()),
        _ => tetrate_exact(a.clone(), height.magnitude().clone(), digit_budget),
    }
}

/// The single-expression form valid for every height `b >= 1`:
/// 0 for `a = 0`, otherwise `c * (^(b-1) a - ^(b-2) a)` with `^0 a = 1` and
/// `^-1 a = 0`.
pub fn compact_speed(base: &Base, b: impl Into<BigUint>, digit_budget: u64) -> Result<SpeedValue> {
    let b = BigInt::from(b.into());
    if b.sign() != Sign::Plus {
        return Err(Error::OutOfDomain("congruence speed needs a height >= 1".into()));
    }
    if base.is_zero() {
        return Ok(SpeedValue::Finite(BigUint::zero()));
    }
    if !base.is_positive_multiple_of_ten() {
        return Err(Error::OutOfDomain(format!("{base} is not a multiple of 10")));
    }
    let height = b.to_biguint().expect("positive height");
    if !tower_fits(base, &height, digit_budget)? {
        return Ok(SpeedValue::Symbolic(SymbolicSpeed { base: base.clone(), height }));
    }
    let a = base.value();
    let upper = tetrate_from_minus_one(a, &(&b - 1), digit_budget)?;
    let lower = tetrate_from_minus_one(a, &(&b - 2), digit_budget)?;
    Ok(SpeedValue::Finite(BigUint::from(base.tens()) * (upper - lower)))
}

/// The constant congruence speed `V(a)`, i.e. `V(a, tilde_v(a) + 2)`.
pub fn constant_speed(a: impl Into<BigUint>, budget: &Budget) -> Result<BigUint> {
    let base = decompose(a);
    if base.is_zero() || base.value().is_one() {
        return Err(Error::OutOfDomain(format!("constant speed is not defined for {base}")));
    }
    if base.is_positive_multiple_of_ten() {
        return Err(Error::UndefinedSpeed(base.to_string()));
    }
    let info = tilde_v(base.value().clone())?;
    let mut values = definitional_run(base.value(), &BigUint::from(info.bound), 1, budget)?;
    Ok(values.remove(0))
}

/// Trailing zero count of a tower over a base ending in 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroCount {
    Finite(BigUint),
    /// `c * ^(height-1) a`, too large to write out.
    Symbolic { base: Base, height: BigUint },
}

impl fmt::Display for ZeroCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroCount::Finite(v) => write!(f, "{v}"),
            ZeroCount::Symbolic { base, height } => {
                write!(f, "{}*{}^^{}", base.tens(), base.value(), height - 1u32)
            }
        }
    }
}

/// Number of trailing zeros of `^b a` for `a = j * 10^c`: `c * ^(b-1) a`.
pub fn trailing_zeros_formula(base: &Base, b: impl Into<BigUint>, digit_budget: u64) -> Result<ZeroCount> {
    let b = b.into();
    if !base.is_positive_multiple_of_ten() || b.is_zero() {
        return Err(Error::OutOfDomain("trailing zero formula needs a positive multiple of 10 and b >= 1".into()));
    }
    match tetrate_exact(base.value().clone(), &b - 1u32, digit_budget) {
        Ok(v) => Ok(ZeroCount::Finite(BigUint::from(base.tens()) * v)),
        Err(Error::BudgetExceeded { .. }) => Ok(ZeroCount::Symbolic { base: base.clone(), height: b }),
        Err(e) => Err(e),
    }
}

/// `V(a, b)` from fully materialized towers, independent of the modular path.
///
/// `^(b+1) a` is normally out of reach. For a base ending in 0 it is still
/// known to be divisible by `10^(c * ^b a)`, which is more zeros than `^b a`
/// has digits, so its low digits are zeros across the whole comparison.
pub fn oracle_speed(a: impl Into<BigUint>, b: impl Into<BigUint>, digit_budget: u64) -> Result<BigUint> {
    let base = decompose(a);
    let b = b.into();
    if b.is_zero() {
        return Err(Error::OutOfDomain("congruence speed needs a height >= 1".into()));
    }
    let a = base.value().clone();
    let lower = tetrate_exact(a.clone(), &b - 1u32, digit_budget)?;
    let middle = tetrate_exact(a.clone(), b.clone(), digit_budget)?;
    let upper_match = match tetrate_exact(a, &b + 1u32, digit_budget) {
        Ok(upper) => exactint::common_trailing_digits(&middle, &upper)?,
        Err(Error::BudgetExceeded { .. }) if base.is_positive_multiple_of_ten() => {
            let zeros_above = BigUint::from(base.tens()) * &middle;
            let digits = exactint::decimal_digits(&middle);
            debug_assert!(zeros_above > BigUint::from(digits));
            // match against an all-zero tail: the trailing zeros of the middle value
            exactint::trailing_zeros(&middle)?
        }
        Err(e) => return Err(e),
    };
    let lower_match = exactint::common_trailing_digits(&lower, &middle)?;
    upper_match
        .checked_sub(lower_match)
        .map(BigUint::from)
        .ok_or_else(|| Error::OutOfDomain(format!("frozen digits decreased ({lower_match} -> {upper_match})")))
}

/// Parity rule for the zero base: `^b 0` is 1 for even `b` and 0 for odd `b`.
pub fn zero_tower_is_one(b: &BigUint) -> bool {
    b.is_even()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn speed(a: u64, b: u64) -> SpeedValue {
        congruence_speed(a, b, &Budget::default()).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(v_adic(&BigUint::from(651250u32), 5).unwrap(), 4);
        assert_eq!(v_adic(&BigUint::from(24u32), 2).unwrap(), 3);
        assert_eq!(v_adic(&BigUint::from(7u32), 5).unwrap(), 0);
        assert_eq!(v_adic(&BigUint::zero(), 5), Err(Error::ZeroInput));
        assert!(v_adic(&BigUint::from(9u32), 3).is_err());
    }

    #[test]
    fn tilde_v_examples() {
        let info = tilde_v(807u32).unwrap();
        assert_eq!((info.tilde_v, info.bound, info.case), (4, 6, TildeCase::TwoOrThreeModFive));
        let info = tilde_v(2u32).unwrap();
        assert_eq!((info.tilde_v, info.bound), (1, 3));
        let info = tilde_v(5u32).unwrap();
        assert_eq!((info.tilde_v, info.bound, info.case), (2, 4, TildeCase::FiveModTen));
        assert_eq!(tilde_v(26u32).unwrap().case, TildeCase::OneModFive);
        assert_eq!(tilde_v(24u32).unwrap(), StabilizationInfo { tilde_v: 2, bound: 4, case: TildeCase::FourModFive });
        for bad in [0u32, 1, 10, 300] {
            assert!(matches!(tilde_v(bad), Err(Error::OutOfDomain(_))), "a={bad}");
        }
    }

    #[test]
    fn speed_of_807() {
        assert_eq!(speed(807, 2), 4.into());
        assert_eq!(speed(807, 6), 3.into());
        assert_eq!(speed(807, 7), 3.into());
        assert_eq!(constant_speed(807u32, &Budget::default()).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn speed_of_multiples_of_ten() {
        assert_eq!(speed(300, 1), 2.into());
        assert_eq!(speed(300, 2), 598.into());
        let symbolic = speed(300, 3);
        assert_eq!(symbolic.to_string(), "2*(300^^2 - 300^^1)");
        assert!(symbolic.finite().is_none());
        assert_eq!(speed(0, 5), 0.into());
        assert_eq!(speed(1, 5), 0.into());
        assert_eq!(speed(10, 2), 9.into());
        assert_eq!(speed(10, 3).to_string(), "1*(10^^2 - 10^^1)");
        // symbolic values evaluate to the formula whenever the lower towers fit
        let expected = BigUint::from(2u32) * (BigUint::from(300u32).pow(300) - 300u32);
        assert_eq!(symbolic.evaluate(DEFAULT_DIGIT_BUDGET).unwrap(), expected);
        assert_eq!(speed(10, 3).evaluate(DEFAULT_DIGIT_BUDGET).unwrap(), BigUint::from(10_000_000_000u64 - 10));
    }

    #[test]
    fn constant_speed_domain() {
        let budget = Budget::default();
        assert_eq!(constant_speed(30u32, &budget), Err(Error::UndefinedSpeed("30".into())));
        assert!(matches!(constant_speed(0u32, &budget), Err(Error::OutOfDomain(_))));
        assert!(matches!(constant_speed(1u32, &budget), Err(Error::OutOfDomain(_))));
        assert_eq!(constant_speed(2u32, &budget).unwrap(), BigUint::one());
    }

    #[test]
    fn compact_examples() {
        assert_eq!(compact_speed(&decompose(0u32), 3u32, DEFAULT_DIGIT_BUDGET).unwrap(), 0.into());
        assert_eq!(compact_speed(&decompose(300u32), 1u32, DEFAULT_DIGIT_BUDGET).unwrap(), 2.into());
        assert_eq!(compact_speed(&decompose(300u32), 2u32, DEFAULT_DIGIT_BUDGET).unwrap(), 598.into());
        assert!(compact_speed(&decompose(807u32), 2u32, DEFAULT_DIGIT_BUDGET).is_err());
    }

    #[test]
    fn trailing_zero_formula_examples() {
        let z = |a: u32, b: u32| trailing_zeros_formula(&decompose(a), b, DEFAULT_DIGIT_BUDGET).unwrap();
        assert_eq!(z(10, 1), ZeroCount::Finite(BigUint::from(1u32)));
        assert_eq!(z(10, 2), ZeroCount::Finite(BigUint::from(10u32)));
        assert_eq!(z(300, 2), ZeroCount::Finite(BigUint::from(600u32)));
        assert_eq!(z(300, 4).to_string(), "2*300^^3");
        let ten_ten = tetrate_exact(10u32, 2u32, DEFAULT_DIGIT_BUDGET).unwrap();
        assert_eq!(exactint::trailing_zeros(&ten_ten).unwrap(), 10);
    }

    #[test]
    fn oracle_agrees_on_small_cases() {
        assert_eq!(oracle_speed(300u32, 2u32, DEFAULT_DIGIT_BUDGET).unwrap(), BigUint::from(598u32));
        assert_eq!(oracle_speed(10u32, 1u32, DEFAULT_DIGIT_BUDGET).unwrap(), BigUint::one());
        assert_eq!(oracle_speed(807u32, 1u32, DEFAULT_DIGIT_BUDGET).unwrap(), BigUint::zero());
        assert!(oracle_speed(807u32, 2u32, DEFAULT_DIGIT_BUDGET).is_err());
        assert_eq!(oracle_speed(3u32, 2u32, DEFAULT_DIGIT_BUDGET).unwrap(), speed(3, 2).finite().unwrap().clone());
    }

    #[test]
    fn definitional_on_multiples_of_ten() {
        let budget = Budget::default();
        assert_eq!(definitional_speed(300u32, 2u32, &budget).unwrap(), BigUint::from(598u32));
        assert_eq!(definitional_speed(10u32, 1u32, &budget).unwrap(), BigUint::one());
        let small = Budget::with_digits(2000);
        assert!(matches!(definitional_speed(300u32, 3u32, &small), Err(Error::WindowBudgetExceeded { .. })));
    }

    #[test]
    fn huge_heights_fail_fast() {
        let googol = BigUint::from(10u32).pow(100);
        let err = congruence_speed(807u32, googol, &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::WindowBudgetExceeded { .. }));
    }

    #[test]
    fn symbolic_rendering_round_trips() {
        for value in [speed(300, 3), speed(20, 4), speed(807, 2), speed(0, 1)] {
            let text = value.to_string();
            assert_eq!(text.parse::<SpeedValue>().unwrap(), value, "{text}");
        }
        for bad in ["", "-3", "2*(300^^2 - 300^^2)", "3*(300^^2 - 300^^1)", "2*(300^^2 - 30^^1)", "x"] {
            assert!(bad.parse::<SpeedValue>().is_err(), "{bad}");
        }
    }

    #[test]
    fn zero_parity() {
        for b in 0u32..=20 {
            let exact = tetrate_exact(0u32, b, 10).unwrap();
            assert_eq!(exact.is_one(), zero_tower_is_one(&BigUint::from(b)));
        }
    }
}
