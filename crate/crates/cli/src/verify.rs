//! Cross-checks every route to `V(a, b)` that applies to a base.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use tetraspeed_core::speed::zero_tower_is_one;
use tetraspeed_core::{
    compact_speed, decompose, definitional_speed, formula_speed, oracle_speed, tetrate_exact,
    trailing_zeros, trailing_zeros_formula, Budget, Error, SpeedValue, ZeroCount,
};

/// Outcome of one route at one height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Route {
    Value(SpeedValue),
    /// The route does not reach this height within the budget.
    OutOfBudget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightReport {
    pub height: u64,
    pub routes: Vec<(&'static str, Route)>,
    /// Extra exact facts checked at this height (trailing-zero lemma, parity).
    pub checks: Vec<(&'static str, bool)>,
    pub agree: bool,
}

impl HeightReport {
    /// True when at least one route produced a value.
    pub fn has_value(&self) -> bool {
        self.routes.iter().any(|(_, r)| matches!(r, Route::Value(_)))
    }

    pub fn render(&self) -> String {
        let mut parts = vec![format!("b={}", self.height)];
        for (name, route) in &self.routes {
            match route {
                Route::Value(v) => parts.push(format!("{name}={v}")),
                Route::OutOfBudget => parts.push(format!("{name}=out-of-budget")),
            }
        }
        for (name, ok) in &self.checks {
            parts.push(format!("{name}={}", if *ok { "ok" } else { "FAILED" }));
        }
        let verdict = if !self.has_value() {
            "no route within budget"
        } else if self.agree {
            "agree"
        } else {
            "DISAGREE"
        };
        format!("{}: {verdict}", parts.join(" "))
    }
}

fn route(result: Result<SpeedValue, Error>) -> Result<Route, Error> {
    match result {
        Ok(v) => Ok(Route::Value(v)),
        Err(Error::BudgetExceeded { .. } | Error::WindowBudgetExceeded { .. }) => Ok(Route::OutOfBudget),
        Err(e) => Err(e),
    }
}

/// Two values agree if equal, or if one is symbolic and evaluates (within
/// budget) to the other.
fn same(x: &SpeedValue, y: &SpeedValue, digit_budget: u64) -> bool {
    let agrees = |symbolic: &SpeedValue, finite: &BigUint| {
        symbolic.evaluate(digit_budget).is_ok_and(|v| &v == finite)
    };
    match (x.finite(), y.finite()) {
        (Some(_), Some(_)) | (None, None) => x == y,
        (Some(f), None) => agrees(y, f),
        (None, Some(f)) => agrees(x, f),
    }
}

pub fn verify_height(a: &BigUint, b: u64, budget: &Budget) -> Result<HeightReport, Error> {
    let base = decompose(a.clone());
    let height = BigUint::from(b);
    let mut routes = Vec::new();
    let mut checks = Vec::new();

    if base.is_zero() {
        routes.push(("formula", Route::Value(SpeedValue::from(0))));
        routes.push(("compact", route(compact_speed(&base, b, budget.digits))?));
        // ^b 0 = 0^(^(b-1) 0) with 0^0 = 1, and the parity rule agrees
        let below = tetrate_exact(0u32, b - 1, budget.digits)?;
        let tower = tetrate_exact(0u32, b, budget.digits)?;
        let unrolled = BigUint::zero().pow(u32::from(!below.is_zero()));
        let parity = tower == unrolled && tower.is_one() == zero_tower_is_one(&height);
        checks.push(("parity", parity));
    } else if a.is_one() {
        routes.push(("convention", Route::Value(SpeedValue::from(0))));
    } else {
        routes.push(("definitional", route(definitional_speed(a.clone(), b, budget).map(SpeedValue::Finite))?));
        if base.is_positive_multiple_of_ten() {
            routes.push(("formula", route(formula_speed(&base, &height, budget.digits))?));
            routes.push(("compact", route(compact_speed(&base, b, budget.digits))?));
            if let Ok(tower) = tetrate_exact(a.clone(), b, budget.digits) {
                if let ZeroCount::Finite(expected) = trailing_zeros_formula(&base, b, budget.digits)? {
                    checks.push(("zeros-lemma", BigUint::from(trailing_zeros(&tower)?) == expected));
                }
            }
        }
        routes.push(("oracle", route(oracle_speed(a.clone(), b, budget.digits).map(SpeedValue::Finite))?));
    }

    let values: Vec<&SpeedValue> = routes
        .iter()
        .filter_map(|(_, r)| match r {
            Route::Value(v) => Some(v),
            Route::OutOfBudget => None,
        })
        .collect();
    let agree = values.windows(2).all(|w| same(w[0], w[1], budget.digits)) && checks.iter().all(|(_, ok)| *ok);
    Ok(HeightReport { height: b, routes, checks, agree })
}
