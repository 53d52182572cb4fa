//! Residues of `^b a` modulo `10^n` for any height, including heights far
//! beyond anything that could be materialized.
//!
//! The exponent of each tower level is reduced along the Carmichael chain
//! `10^n -> λ(10^n) -> ... -> 1`. Every modulus on that chain has the form
//! `2^x * 5^y`, so the chain is carried as exponent pairs and a modulus is only
//! materialized when a level actually needs it. Bases sharing factors with
//! the modulus are handled by the generalized Euler shift
//! `a^e ≡ a^(λ(m) + e mod λ(m))`, valid once `e` reaches `log2(m)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactint::{decimal_digits, pow10};

/// Default upper bound on the residue window width, in decimal digits.
pub const DEFAULT_WINDOW_BUDGET: u64 = 100_000;

/// Largest exponent the tower path ever materializes exactly.
pub fn default_exponent_cap() -> BigUint {
    BigUint::from(i64::MAX as u64)
}

/// A modulus of the form `2^twos * 5^fives`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmoothModulus {
    pub twos: u64,
    pub fives: u64,
}

impl SmoothModulus {
    pub fn power_of_ten(n: u64) -> Self {
        Self { twos: n, fives: n }
    }

    pub fn is_one(&self) -> bool {
        self.twos == 0 && self.fives == 0
    }

    /// Carmichael's λ: `lcm(λ(2^x), λ(5^y))` with `λ(2) = 1`, `λ(4) = 2`,
    /// `λ(2^x) = 2^(x-2)` beyond that, and `λ(5^y) = 4 * 5^(y-1)`.
    pub fn carmichael(&self) -> Self {
        let from_twos = match self.twos {
            0 | 1 => 0,
            2 => 1,
            x => x - 2,
        };
        let (twos_from_fives, fives) = match self.fives {
            0 => (0, 0),
            y => (2, y - 1),
        };
        Self { twos: from_twos.max(twos_from_fives), fives }
    }

    pub fn value(&self) -> BigUint {
        self.five_part() << self.twos
    }

    fn five_part(&self) -> BigUint {
        BigUint::from(5u32).pow(u32::try_from(self.fives).expect("modulus exponent fits in u32"))
    }

    /// `base^e` modulo this modulus, computed separately mod `2^twos` and
    /// mod `5^fives` and recombined.
    pub fn pow(&self, base: &BigUint, e: &BigUint) -> BigUint {
        if self.is_one() {
            return BigUint::zero();
        }
        let two_part = BigUint::one() << self.twos;
        let five_part = self.five_part();
        let r2 = prime_power_pow(base, e, &two_part, 2, self.twos);
        let r5 = prime_power_pow(base, e, &five_part, 5, self.fives);
        if self.fives == 0 {
            return r2;
        }
        if self.twos == 0 {
            return r5;
        }
        // x = r5 + 5^y * t with t ≡ (r2 - r5) * 5^-y (mod 2^x)
        let inv = (&five_part % &two_part)
            .modinv(&two_part)
            .expect("odd numbers are invertible mod 2^x");
        let diff = (&r2 + &two_part - (&r5 % &two_part)) % &two_part;
        let t = diff * inv % &two_part;
        r5 + five_part * t
    }
}

/// `base^e mod p^k` for `p` in {2, 5}.
///
/// Multiples of `p` vanish once `e >= k`; for units the exponent is first
/// reduced mod `λ(p^k)`.
fn prime_power_pow(base: &BigUint, e: &BigUint, modulus: &BigUint, p: u32, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::zero();
    }
    let unit = !(base % p).is_zero();
    if !unit && *e >= BigUint::from(k) {
        return BigUint::zero();
    }
    if p == 2 {
        let mask = modulus - 1u32;
        let e = if unit && k >= 3 { e & ((BigUint::one() << (k - 2)) - 1u32) } else { e.clone() };
        return masked_pow(base, &e, &mask);
    }
    if unit {
        let lambda = (modulus / p) << 2;
        return base.modpow(&(e % lambda), modulus);
    }
    base.modpow(e, modulus)
}

/// `base^e mod 2^k` with `mask = 2^k - 1`, by 4-bit fixed windows.
fn masked_pow(base: &BigUint, e: &BigUint, mask: &BigUint) -> BigUint {
    let base = base & mask;
    let mut table = vec![BigUint::one() & mask];
    for i in 1..16 {
        let next = (&table[i - 1] * &base) & mask;
        table.push(next);
    }
    let mut acc = BigUint::one() & mask;
    for (i, &d) in e.to_radix_le(16).iter().rev().enumerate() {
        if i > 0 {
            for _ in 0..4 {
                acc = (&acc * &acc) & mask;
            }
        }
        if d != 0 {
            acc = (acc * &table[usize::from(d)]) & mask;
        }
    }
    acc
}

impl fmt::Display for SmoothModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The iterated Carmichael chain `m_0 = 10^n, m_{i+1} = λ(m_i), ..., 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaChain {
    links: Vec<SmoothModulus>,
}

impl LambdaChain {
    pub fn links(&self) -> &[SmoothModulus] {
        &self.links
    }

    /// Materialized moduli, top to bottom.
    pub fn moduli(&self) -> Vec<BigUint> {
        self.links.iter().map(SmoothModulus::value).collect()
    }

    /// Number of reduction steps; the chain holds `steps() + 1` moduli.
    pub fn steps(&self) -> usize {
        self.links.len() - 1
    }

    /// Height from which `^b a mod m_0` no longer depends on `b`, for every
    /// base `a >= 2`.
    ///
    /// A level with modulus `m_i` saturates once both its own lower level has
    /// saturated and the exponent exceeds the cap (which every tower of height
    /// 5 does, since `^5 2 = 2^65536`). That gives `max(steps, 6)`; two more
    /// levels of headroom are added.
    pub fn saturation_height(&self) -> u64 {
        self.steps().max(6) as u64 + 2
    }
}

/// The Carmichael chain starting at `10^n`.
pub fn lambda_chain(n: u64) -> Result<LambdaChain> {
    if n == 0 {
        return Err(Error::OutOfDomain("window width must be at least 1".into()));
    }
    let mut links = vec![SmoothModulus::power_of_ten(n)];
    let mut m = links[0];
    while !m.is_one() {
        m = m.carmichael();
        links.push(m);
    }
    Ok(LambdaChain { links })
}

/// An integer known exactly up to a cap, or only known to exceed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CappedInt {
    Exact(BigUint),
    Exceeds(BigUint),
}

impl CappedInt {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            CappedInt::Exact(v) => Some(v),
            CappedInt::Exceeds(_) => None,
        }
    }
}

/// `^b a` if it is at most `cap`, otherwise [`CappedInt::Exceeds`].
///
/// No intermediate value larger than about `cap^2` is ever built.
pub fn tetrate_capped(a: &BigUint, b: &BigUint, cap: &BigUint) -> CappedInt {
    let finish = |v: BigUint| {
        if &v <= cap {
            CappedInt::Exact(v)
        } else {
            CappedInt::Exceeds(cap.clone())
        }
    };
    if a.is_zero() {
        let parity = b.bit(0);
        return finish(if parity { BigUint::zero() } else { BigUint::one() });
    }
    if a.is_one() || b.is_zero() {
        return finish(BigUint::one());
    }
    let floor_log2 = a.bits() - 1;
    let cap_bits = cap.bits();
    let mut value = BigUint::one();
    let mut height = BigUint::zero();
    while &height < b {
        // a^value >= 2^(floor_log2 * value) > cap once that product reaches cap's bit length.
        let exponent = match value.to_u64() {
            Some(e) if e.saturating_mul(floor_log2) < cap_bits => e,
            _ => return CappedInt::Exceeds(cap.clone()),
        };
        value = a.pow(exponent as u32);
        if &value > cap {
            return CappedInt::Exceeds(cap.clone());
        }
        height += 1u32;
    }
    CappedInt::Exact(value)
}

/// The exponent handed to [`powmod_lifted`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftExponent {
    /// The exponent itself.
    Exact(BigUint),
    /// An exponent known only to exceed `cap`, together with its residue
    /// modulo `λ(m)`.
    Reduced { cap: BigUint, residue: BigUint },
}

/// `base^e mod m`, valid whether or not `base` is coprime to `m`.
///
/// `lambda_m` must be λ(m), or any multiple of the multiplicative order of
/// every unit mod `m`.
pub fn powmod_lifted(
    base: &BigUint,
    exponent: &LiftExponent,
    m: &BigUint,
    lambda_m: &BigUint,
) -> Result<BigUint> {
    if m.is_zero() || lambda_m.is_zero() {
        return Err(Error::OutOfDomain("modulus and λ(m) must be positive".into()));
    }
    if m.is_one() {
        return Ok(BigUint::zero());
    }
    let e = effective_exponent(exponent, m.bits(), lambda_m)?;
    Ok(base.modpow(&e, m))
}

/// An exponent congruent to the true one mod `λ(m)` and at least `bits(m)`,
/// which is all `base^e mod m` depends on once `e >= log2(m)`.
fn effective_exponent(exponent: &LiftExponent, modulus_bits: u64, lambda_m: &BigUint) -> Result<BigUint> {
    match exponent {
        LiftExponent::Exact(e) => Ok(e.clone()),
        LiftExponent::Reduced { cap, residue } => {
            // True exponent > cap >= bits(m) > every prime exponent in m.
            if *cap < BigUint::from(modulus_bits) {
                return Err(Error::InvalidLift { cap: cap.to_string(), modulus_bits });
            }
            // λ(m) can be smaller than a prime exponent (λ(8) = 2), so keep
            // shifting until the exponent clears bits(m) as well.
            let mut shifted = residue % lambda_m + lambda_m;
            while shifted < BigUint::from(modulus_bits) {
                shifted += lambda_m;
            }
            Ok(shifted)
        }
    }
}

/// The last `n` decimal digits of a tower value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitWindow {
    digits: String,
    exact: bool,
}

impl DigitWindow {
    /// Builds a window from a residue; `exact` asserts the value is below `10^n`.
    pub fn from_residue(residue: &BigUint, n: u64, exact: bool) -> Self {
        let raw = residue.to_str_radix(10);
        let n = n as usize;
        assert!(raw.len() <= n, "residue wider than its window");
        let mut digits = String::with_capacity(n);
        digits.extend(std::iter::repeat_n('0', n - raw.len()));
        digits.push_str(&raw);
        Self { digits, exact }
    }

    pub fn width(&self) -> u64 {
        self.digits.len() as u64
    }

    /// Exactly `width()` characters, leading zeros kept.
    pub fn digits(&self) -> &str {
        &self.digits
    }

    /// True when the window holds the whole value.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn residue(&self) -> BigUint {
        self.digits.parse().expect("window holds decimal digits")
    }

    /// The digits that certainly belong to the value: all of them for a
    /// truncated window, the unpadded number for an exact one.
    fn physical(&self) -> &str {
        if self.exact {
            let trimmed = self.digits.trim_start_matches('0');
            if trimmed.is_empty() {
                &self.digits[self.digits.len() - 1..]
            } else {
                trimmed
            }
        } else {
            &self.digits
        }
    }

    /// The last `m` digits as a window of width `m`.
    pub fn truncate(&self, m: u64) -> DigitWindow {
        let m = m.min(self.width()) as usize;
        let tail = &self.digits[self.digits.len() - m..];
        let exact = self.exact && self.physical().len() <= m;
        DigitWindow { digits: tail.to_string(), exact }
    }

    /// Common rightmost digits of the two underlying values, compared on
    /// physically present digits only.
    ///
    /// `Ok(None)` means every digit of both windows agrees and the answer lies
    /// beyond the window.
    pub fn common_suffix(&self, other: &DigitWindow) -> Result<Option<u64>> {
        let (x, y) = (self.physical().as_bytes(), other.physical().as_bytes());
        let shared = x
            .iter()
            .rev()
            .zip(y.iter().rev())
            .take_while(|(p, q)| p == q)
            .count();
        let x_done = self.exact && shared == x.len();
        let y_done = other.exact && shared == y.len();
        if x_done && y_done {
            return Err(Error::EqualValues);
        }
        if shared < x.len() && shared < y.len() || x_done || y_done {
            return Ok(Some(shared as u64));
        }
        Ok(None)
    }
}

impl fmt::Display for DigitWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits)
    }
}

/// Limits for [`tetrate_mod`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerConfig {
    pub window_budget: u64,
    /// Exponents up to this value are used as-is; larger ones are reduced.
    /// Must be at least `4 * n` for every window width `n` in use.
    pub exponent_cap: BigUint,
}

impl Default for TowerConfig {
    fn default() -> Self {
        Self { window_budget: DEFAULT_WINDOW_BUDGET, exponent_cap: default_exponent_cap() }
    }
}

/// `^b a mod 10^n` for `a >= 2` and any `b >= 1`.
pub fn tetrate_mod(a: &BigUint, b: &BigUint, n: u64, config: &TowerConfig) -> Result<DigitWindow> {
    if a < &BigUint::from(2u32) {
        return Err(Error::OutOfDomain(format!("modular tower needs a base >= 2, got {a}")));
    }
    if b.is_zero() {
        return Err(Error::OutOfDomain("modular tower needs a height >= 1".into()));
    }
    check_window(n, config)?;
    let chain = lambda_chain(n)?;
    let height = b.clone().min(BigUint::from(chain.saturation_height()));
    let residue = tower_residue(a, &height, &chain, &config.exponent_cap)?;
    let below = pow10(n) - 1u32;
    let exact = matches!(tetrate_capped(a, b, &below), CappedInt::Exact(_));
    Ok(DigitWindow::from_residue(&residue, n, exact))
}

/// Residue window of `^b a mod 10^n` for every base, including 0 and 1 and
/// height 0, which bypass the modular machinery.
pub fn tower_window(a: &BigUint, b: &BigUint, n: u64, config: &TowerConfig) -> Result<DigitWindow> {
    if a >= &BigUint::from(2u32) && !b.is_zero() {
        return tetrate_mod(a, b, n, config);
    }
    check_window(n, config)?;
    let value = crate::exactint::tetrate_exact(a.clone(), b.clone(), n)?;
    let exact = decimal_digits(&value) <= n;
    Ok(DigitWindow::from_residue(&value, n, exact))
}

fn check_window(n: u64, config: &TowerConfig) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfDomain("window width must be at least 1".into()));
    }
    if n > config.window_budget {
        return Err(Error::WindowBudgetExceeded { requested: n, budget: config.window_budget });
    }
    Ok(())
}

/// Walks down the chain until a level can be evaluated directly, then lifts
/// the result back up one modulus at a time.
fn tower_residue(a: &BigUint, height: &BigUint, chain: &LambdaChain, cap: &BigUint) -> Result<BigUint> {
    let links = chain.links();
    let mut level = 0usize;
    let mut h = height.clone();
    let mut residue = loop {
        let m = links[level];
        if m.is_one() {
            break BigUint::zero();
        }
        if h.is_zero() {
            break BigUint::one();
        }
        let below = &h - 1u32;
        match tetrate_capped(a, &below, cap) {
            CappedInt::Exact(e) => break m.pow(a, &e),
            CappedInt::Exceeds(_) => {
                level += 1;
                h = below;
            }
        }
    };
    while level > 0 {
        level -= 1;
        let m = links[level];
        let exponent = LiftExponent::Reduced { cap: cap.clone(), residue };
        let e = effective_exponent(&exponent, m.value().bits(), &links[level + 1].value())?;
        residue = m.pow(a, &e);
    }
    Ok(residue)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Brute-force Carmichael function: least k with u^k ≡ 1 for every unit u.
    fn carmichael_brute(m: u64) -> u64 {
        if m == 1 {
            return 1;
        }
        let units: Vec<u64> = (1..m).filter(|&u| num_integer::gcd(u, m) == 1).collect();
        (1..=m)
            .find(|&k| units.iter().all(|&u| big(u).modpow(&big(k), &big(m)) == BigUint::one()))
            .unwrap()
    }

    #[test]
    fn chain_examples() {
        let chain = lambda_chain(1).unwrap();
        assert_eq!(chain.moduli(), vec![big(10), big(4), big(2), big(1)]);
        let chain = lambda_chain(2).unwrap();
        assert_eq!(&chain.moduli()[..2], &[big(100), big(20)]);
        for n in 1..=60 {
            let moduli = lambda_chain(n).unwrap().moduli();
            let k = moduli.len();
            assert_eq!(&moduli[k - 2..], &[big(2), big(1)], "n={n}");
            assert!(moduli.windows(2).all(|w| w[0] > w[1]));
        }
        assert!(lambda_chain(0).is_err());
    }

    #[test]
    fn carmichael_matches_brute_force() {
        for twos in 0..=7 {
            for fives in 0..=3 {
                let m = SmoothModulus { twos, fives };
                let value = m.value().to_u64().unwrap();
                if value > 20_000 {
                    continue;
                }
                assert_eq!(m.carmichael().value().to_u64().unwrap(), carmichael_brute(value), "m={value}");
            }
        }
    }

    #[test]
    fn smooth_pow_matches_modpow() {
        for twos in 0..=9 {
            for fives in 0..=5 {
                let m = SmoothModulus { twos, fives };
                let value = m.value();
                for base in [0u64, 1, 2, 5, 10, 12, 25, 807, 1000, 4096] {
                    for e in [0u64, 1, 2, 3, 7, 20, 64, 101] {
                        let expected = if value.is_one() { BigUint::zero() } else { big(base).modpow(&big(e), &value) };
                        assert_eq!(m.pow(&big(base), &big(e)), expected, "m={value} base={base} e={e}");
                    }
                }
            }
        }
        let huge = BigUint::from(10u32).pow(40) + 7u32;
        for (twos, fives) in [(60, 0), (0, 30), (45, 25), (3, 1)] {
            let m = SmoothModulus { twos, fives };
            for base in [3u64, 6, 15, 807, 1024] {
                assert_eq!(m.pow(&big(base), &huge), big(base).modpow(&huge, &m.value()), "m={m} base={base}");
            }
        }
    }

    #[test]
    fn capped_examples() {
        let cap = big(1_000_000);
        assert_eq!(tetrate_capped(&big(2), &big(3), &cap), CappedInt::Exact(big(16)));
        assert_eq!(tetrate_capped(&big(2), &big(5), &cap), CappedInt::Exceeds(cap.clone()));
        assert_eq!(tetrate_capped(&big(10), &big(1), &cap), CappedInt::Exact(big(10)));
        assert_eq!(tetrate_capped(&big(0), &big(7), &cap), CappedInt::Exact(big(0)));
        assert_eq!(tetrate_capped(&big(7), &big(0), &cap), CappedInt::Exact(big(1)));
        assert_eq!(tetrate_capped(&big(2), &big(4), &big(65536)), CappedInt::Exact(big(65536)));
        assert_eq!(tetrate_capped(&big(2), &big(4), &big(65535)), CappedInt::Exceeds(big(65535)));
    }

    #[test]
    fn lifted_examples() {
        let exact = powmod_lifted(&big(2), &LiftExponent::Exact(big(10)), &big(1000), &big(100)).unwrap();
        assert_eq!(exact, big(24));
        let zero = powmod_lifted(&big(10), &LiftExponent::Exact(big(10)), &big(100_000), &big(5000)).unwrap();
        assert_eq!(zero, big(0));

        let m = big(1_000_000);
        let lambda = SmoothModulus::power_of_ten(6).carmichael().value();
        let direct = big(807).modpow(&big(20), &m);
        let reduced = LiftExponent::Reduced { cap: big(19), residue: big(20) % &lambda };
        // cap 19 is below bits(10^6) = 20
        assert!(matches!(powmod_lifted(&big(807), &reduced, &m, &lambda), Err(Error::InvalidLift { .. })));
        let reduced = LiftExponent::Reduced { cap: big(20), residue: big(20) % &lambda };
        assert_eq!(powmod_lifted(&big(807), &reduced, &m, &lambda).unwrap(), direct);
    }

    #[test]
    fn lift_handles_modulus_eight() {
        // λ(8) = 2 is below the 2-adic exponent 3; the shift must still be right.
        let reduced = LiftExponent::Reduced { cap: big(4), residue: big(0) };
        assert_eq!(powmod_lifted(&big(2), &reduced, &big(8), &big(2)).unwrap(), big(0));
    }

    #[test]
    fn residues_of_807() {
        let config = TowerConfig::default();
        let w = tetrate_mod(&big(807), &big(2), 30, &config).unwrap();
        assert_eq!(w.digits(), "549620396283318273888501737943");
        assert!(!w.is_exact());
        let w = tetrate_mod(&big(807), &big(7), 30, &config).unwrap();
        assert_eq!(w.digits(), "027048888762283150626032857943");
        let w = tetrate_mod(&big(807), &big(1), 30, &config).unwrap();
        assert_eq!(w.digits(), "000000000000000000000000000807");
        assert!(w.is_exact());
    }

    #[test]
    fn window_budget_enforced() {
        let config = TowerConfig { window_budget: 10, ..TowerConfig::default() };
        assert_eq!(
            tetrate_mod(&big(3), &big(3), 11, &config),
            Err(Error::WindowBudgetExceeded { requested: 11, budget: 10 })
        );
        assert!(tetrate_mod(&big(1), &big(3), 5, &config).is_err());
        assert!(tetrate_mod(&big(0), &big(3), 5, &config).is_err());
    }

    #[test]
    fn trivial_bases_through_tower_window() {
        let config = TowerConfig::default();
        for b in 0..6u64 {
            let w = tower_window(&big(0), &big(b), 5, &config).unwrap();
            assert_eq!(w.digits(), if b % 2 == 0 { "00001" } else { "00000" });
            assert!(w.is_exact());
        }
        let w = tower_window(&big(9), &big(0), 3, &config).unwrap();
        assert_eq!(w.digits(), "001");
    }

    #[test]
    fn suffix_on_windows() {
        let short = DigitWindow::from_residue(&big(807), 30, true);
        let long = DigitWindow::from_residue(&"549620396283318273888501737943".parse().unwrap(), 30, false);
        assert_eq!(short.common_suffix(&long).unwrap(), Some(0));
        let a = DigitWindow::from_residue(&big(12345), 5, false);
        assert_eq!(a.common_suffix(&a.clone()).unwrap(), None);
        let b = DigitWindow::from_residue(&big(12345), 5, true);
        assert_eq!(b.common_suffix(&b.clone()), Err(Error::EqualValues));
        // an exact 5-digit value against a longer value that agrees on all 5
        assert_eq!(b.common_suffix(&a).unwrap(), Some(5));
        let seven = DigitWindow::from_residue(&big(7), 4, true);
        let padded = DigitWindow::from_residue(&big(1007), 4, true);
        assert_eq!(seven.common_suffix(&padded).unwrap(), Some(1));
        let zero = DigitWindow::from_residue(&big(0), 4, true);
        let one = DigitWindow::from_residue(&big(1), 4, true);
        assert_eq!(zero.common_suffix(&one).unwrap(), Some(0));
    }
}
