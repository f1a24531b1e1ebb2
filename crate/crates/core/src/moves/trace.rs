use serde::Serialize;

use crate::morse::Extremum;

/// Width change caused by swapping two adjacent events, from their kinds alone.
///
/// A maximum dropping below a minimum removes one level of `n + 2` strands
/// and adds one of `n - 2`: −4. The reverse swap is +4. Every other pair
/// leaves the per-gap counts alone.
pub fn pair_delta(lower: Option<Extremum>, upper: Option<Extremum>) -> i64 {
    match (lower, upper) {
        (Some(Extremum::Min), Some(Extremum::Max)) => -4,
        (Some(Extremum::Max), Some(Extremum::Min)) => 4,
        _ => 0,
    }
}

/// One adjacent exchange at site `site` (events `site` and `site + 1`, 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MoveStep {
    pub exchange: usize,
    pub predicted: i64,
    pub recomputed: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MoveTrace {
    pub steps: Vec<MoveStep>,
    pub total_delta: i64,
}

impl MoveTrace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a step. The kind-table prediction must match the recomputation.
    pub fn push(&mut self, step: MoveStep) {
        assert_eq!(
            step.predicted, step.recomputed,
            "delta table disagrees with recomputed width at site {}",
            step.exchange
        );
        self.total_delta += step.recomputed;
        self.steps.push(step);
    }

    pub fn extend(&mut self, other: MoveTrace) {
        for s in other.steps {
            self.push(s);
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}
