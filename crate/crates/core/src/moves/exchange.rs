use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::morse::{width, Event, EventKind, MorseWord};

use super::trace::pair_delta;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IllegalReason {
    OverlappingSupports,
    SupportTorn,
    IndexOutOfRange,
}

impl fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IllegalReason::OverlappingSupports => "overlapping supports",
            IllegalReason::SupportTorn => "support torn by renumbering",
            IllegalReason::IndexOutOfRange => "index out of range",
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("illegal exchange at site {site}: {reason}")]
    IllegalExchange { site: usize, reason: IllegalReason },
    #[error("block event {block_event} cannot pass event {blocking_event}: {reason}")]
    Blocked { block_event: usize, blocking_event: usize, reason: IllegalReason },
    #[error("bad push request: {0}")]
    BadPush(String),
}

/// Which side of the lower event's output the upper event's input sits on.
enum Side {
    Left,
    Right,
}

/// Far-commutation legality for `lower` followed by `upper`.
///
/// At the level between them, `lower` owns the output interval
/// `[p, p + outputs)` and `upper` reads the input interval `[q, q + inputs)`.
/// The swap is legal when the two intervals sit side by side. A cap followed
/// by a cup at the same point is side by side both ways; the cup is then put
/// to the right. To keep the exchange an involution, the one configuration
/// that would also land there from the right, a cup whose pair is
/// immediately followed on the right by a cap, is refused.
fn placement(lower: &Event, upper: &Event) -> Result<Side, IllegalReason> {
    let (p, out) = (lower.position, lower.outputs());
    let (q, inp) = (upper.position, upper.inputs());
    let left = q + inp <= p;
    let right = q >= p + out;
    if lower.kind == EventKind::Cup && upper.kind == EventKind::Cap && q == p + 2 {
        return Err(IllegalReason::SupportTorn);
    }
    match (left, right) {
        (_, true) => Ok(Side::Right),
        (true, false) => Ok(Side::Left),
        (false, false) => Err(IllegalReason::OverlappingSupports),
    }
}

/// The swapped pair `(new lower, new upper)` with transported positions.
fn swap_pair(lower: &Event, upper: &Event) -> Result<(Event, Event), IllegalReason> {
    Ok(match placement(lower, upper)? {
        Side::Left => {
            let shifted = lower.position + upper.outputs() - upper.inputs();
            (*upper, lower.at(shifted))
        }
        Side::Right => {
            let shifted = upper.position + lower.inputs() - lower.outputs();
            (upper.at(shifted), *lower)
        }
    })
}

fn check_site(word: &MorseWord, k: usize) -> Result<(), MoveError> {
    if k == 0 || k >= word.len() {
        Err(MoveError::IllegalExchange { site: k, reason: IllegalReason::IndexOutOfRange })
    } else {
        Ok(())
    }
}

/// Swaps events `k` and `k + 1` (1-based) when their supports commute.
pub fn exchange(word: &MorseWord, k: usize) -> Result<MorseWord, MoveError> {
    check_site(word, k)?;
    let ev = word.events();
    let (a, b) = swap_pair(&ev[k - 1], &ev[k])
        .map_err(|reason| MoveError::IllegalExchange { site: k, reason })?;
    let mut events = ev.to_vec();
    events[k - 1] = a;
    events[k] = b;
    Ok(MorseWord::from_valid(events, word.bottom(), word.top()))
}

/// Width change of the exchange at site `k`, read off the kind pair.
pub fn exchange_delta(word: &MorseWord, k: usize) -> Result<i64, MoveError> {
    check_site(word, k)?;
    let ev = word.events();
    placement(&ev[k - 1], &ev[k]).map_err(|reason| MoveError::IllegalExchange { site: k, reason })?;
    Ok(pair_delta(ev[k - 1].extremum(), ev[k].extremum()))
}

/// All legal exchange sites, ascending.
pub fn legal_sites(word: &MorseWord) -> Vec<usize> {
    let ev = word.events();
    (1..word.len()).filter(|&k| placement(&ev[k - 1], &ev[k]).is_ok()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalThinness {
    pub locally_thin: bool,
    pub improving_sites: Vec<usize>,
}

/// A word is locally thin when no single legal exchange lowers its width.
pub fn is_locally_thin(word: &MorseWord) -> LocalThinness {
    let improving_sites: Vec<usize> = legal_sites(word)
        .into_iter()
        .filter(|&k| exchange_delta(word, k) == Ok(-4))
        .collect();
    LocalThinness { locally_thin: improving_sites.is_empty(), improving_sites }
}

/// `width(exchange(word, k)) - width(word)`, recomputed from scratch.
pub fn recomputed_delta(word: &MorseWord, k: usize) -> Result<i64, MoveError> {
    let after = exchange(word, k)?;
    Ok(width(&after) as i64 - width(word) as i64)
}
