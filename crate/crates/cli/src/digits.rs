//! Residue listings with the frozen suffix marked off.

use num_bigint::BigUint;
use num_traits::CheckedSub;
use tetraspeed_core::{tower_window, DigitWindow, Error, TowerConfig};

const CYAN: &str = "\x1b[1;36m";
const RED: &str = "\x1b[31m";
const RESET: &str = "\x1b[0m";

/// One listed height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitLine {
    pub height: BigUint,
    pub window: DigitWindow,
    /// Digits shared with the previous height, if inside the window.
    pub frozen_before: Option<u64>,
    /// Digits shared with the next height, if inside the window.
    pub frozen_after: Option<u64>,
}

impl DigitLine {
    /// `height digits`, with `|` before the digits shared with the next
    /// height and before those already shared with the previous one.
    pub fn render(&self, color: bool) -> String {
        let digits = self.window.digits();
        let width = digits.len();
        let inside = |p: Option<u64>| p.map(|p| p as usize).filter(|&p| p > 0 && p < width);
        let old = inside(self.frozen_before).unwrap_or(0);
        let new = inside(self.frozen_after).map_or(old, |p| p.max(old));
        let segments = [
            (&digits[..width - new], None),
            (&digits[width - new..width - old], Some(CYAN)),
            (&digits[width - old..], Some(RED)),
        ];
        let rendered: Vec<String> = segments
            .into_iter()
            .filter(|(segment, _)| !segment.is_empty())
            .map(|(segment, paint)| match paint {
                Some(code) if color => format!("{code}{segment}{RESET}"),
                _ => segment.to_string(),
            })
            .collect();
        format!("{} {}", self.height, rendered.join("|"))
    }
}

fn frozen(lower: &DigitWindow, upper: &DigitWindow) -> Result<Option<u64>, Error> {
    match lower.common_suffix(upper) {
        Ok(found) => Ok(found),
        Err(Error::EqualValues) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Windows of `^b a mod 10^width` for every `b` in `[min_b, max_b]`.
pub fn digit_lines(
    a: &BigUint,
    min_b: &BigUint,
    max_b: &BigUint,
    width: u64,
    config: &TowerConfig,
) -> Result<Vec<DigitLine>, Error> {
    let mut lines = Vec::new();
    let mut previous = match min_b.checked_sub(&BigUint::from(1u32)) {
        Some(h) => Some(tower_window(a, &h, width, config)?),
        None => None,
    };
    let mut current = tower_window(a, min_b, width, config)?;
    let mut height = min_b.clone();
    while &height <= max_b {
        let next = tower_window(a, &(&height + 1u32), width, config)?;
        let frozen_before = match &previous {
            Some(p) => frozen(p, &current)?,
            None => None,
        };
        let frozen_after = frozen(&current, &next)?;
        lines.push(DigitLine { height: height.clone(), window: current.clone(), frozen_before, frozen_after });
        previous = Some(std::mem::replace(&mut current, next));
        height += 1u32;
    }
    Ok(lines)
}
