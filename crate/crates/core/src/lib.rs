//! Exact congruence speed of integer tetration in radix 10.
//!
//! The congruence speed `V(a, b)` counts the rightmost decimal digits of the
//! tower `^b a` that freeze when one more level is added. This crate provides
//! three independent ways to get at it:
//!
//! * [`exactint`]: fully materialized towers under a digit budget;
//! * [`modtower`]: residues `^b a mod 10^n` for arbitrarily tall towers;
//! * [`speed`]: the definitional match-count difference on residue windows,
//!   and closed formulas for bases ending in 0.

pub mod error;
pub mod exactint;
pub mod modtower;
pub mod speed;

pub use error::{Error, Result};
pub use exactint::{
    common_trailing_digits, decompose, tetrate_exact, trailing_zeros, Base, ExactTetration,
    DEFAULT_DIGIT_BUDGET,
};
pub use modtower::{
    lambda_chain, powmod_lifted, tetrate_capped, tetrate_mod, tower_window, CappedInt, DigitWindow,
    LambdaChain, LiftExponent, SmoothModulus, TowerConfig, DEFAULT_WINDOW_BUDGET,
};
pub use speed::{
    compact_speed, congruence_speed, constant_speed, definitional_speed, formula_speed,
    oracle_speed, speed_profile, tilde_v, trailing_zeros_formula, v_adic, Budget, SpeedValue,
    StabilizationInfo, SymbolicSpeed, TildeCase, ZeroCount,
};
