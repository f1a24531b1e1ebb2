use std::ops::RangeInclusive;

use serde::Serialize;

use crate::morse::{width, MorseWord};

use super::exchange::{exchange, exchange_delta, MoveError};
use super::trace::{MoveStep, MoveTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// Pushes the contiguous block `block` (1-based, inclusive) up past event
/// `past` or down past event `past`, one exchange at a time.
///
/// The events crossed travel through the block in the opposite direction;
/// the block keeps its internal order. Errors name the first block event
/// that cannot commute with an event in its way, using the indices of the
/// input word.
pub fn push_block(
    word: &MorseWord,
    block: RangeInclusive<usize>,
    direction: Direction,
    past: usize,
) -> Result<(MorseWord, MoveTrace), MoveError> {
    let (start, end) = (*block.start(), *block.end());
    if start == 0 || start > end || end > word.len() {
        return Err(MoveError::BadPush(format!("block {start}..{end} outside 1..{}", word.len())));
    }
    let crossed: Vec<usize> = match direction {
        Direction::Up if past > end && past <= word.len() => (end + 1..=past).collect(),
        Direction::Down if past >= 1 && past < start => (past..start).rev().collect(),
        _ => {
            return Err(MoveError::BadPush(format!(
                "cannot push {start}..{end} {direction:?} past event {past}"
            )))
        }
    };

    // origin[i] = index in the input word of the event now at position i + 1.
    let mut origin: Vec<usize> = (1..=word.len()).collect();
    let mut current = word.clone();
    let mut trace = MoveTrace::new();
    let (mut lo, mut hi) = (start, end);

    for other in crossed {
        // `other` sits right next to the block; walk it through to the far side.
        let sites: Vec<usize> = match direction {
            Direction::Up => (lo..=hi).rev().collect(),
            Direction::Down => (lo - 1..hi).collect(),
        };
        for k in sites {
            let block_event = match direction {
                Direction::Up => origin[k - 1],
                Direction::Down => origin[k],
            };
            let predicted = exchange_delta(&current, k).map_err(|e| blocked(e, block_event, other))?;
            let next = exchange(&current, k).map_err(|e| blocked(e, block_event, other))?;
            let recomputed = width(&next) as i64 - width(&current) as i64;
            trace.push(MoveStep { exchange: k, predicted, recomputed });
            origin.swap(k - 1, k);
            current = next;
        }
        match direction {
            Direction::Up => {
                lo += 1;
                hi += 1;
            }
            Direction::Down => {
                lo -= 1;
                hi -= 1;
            }
        }
    }
    Ok((current, trace))
}

fn blocked(err: MoveError, block_event: usize, blocking_event: usize) -> MoveError {
    match err {
        MoveError::IllegalExchange { reason, .. } => {
            MoveError::Blocked { block_event, blocking_event, reason }
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::{Event, Sign};
    use crate::moves::IllegalReason;

    fn word() -> MorseWord {
        MorseWord::link(vec![Event::cup(0), Event::cup(2), Event::cap(0), Event::cap(0)]).unwrap()
    }

    #[test]
    fn push_cup_down_one_step() {
        let (out, trace) = push_block(&word(), 2..=2, Direction::Down, 1).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.total_delta, 0);
        assert_eq!(out.events()[0], Event::cup(0));
        assert_eq!(out.events()[1], Event::cup(0));
    }

    #[test]
    fn push_cap_down_decreases_width() {
        let (_, trace) = push_block(&word(), 3..=3, Direction::Down, 2).unwrap();
        assert_eq!(trace.total_delta, -4);
    }

    #[test]
    fn push_up_then_down_restores() {
        let x = Event::cross(0, Sign::Pos);
        let w = MorseWord::link(vec![Event::cup(0), Event::cup(2), x, x, Event::cap(2), Event::cap(0)])
            .unwrap();
        let (up, t1) = push_block(&w, 3..=4, Direction::Up, 5).unwrap();
        assert_eq!(t1.len(), 2);
        let (back, t2) = push_block(&up, 4..=5, Direction::Down, 3).unwrap();
        assert_eq!(back, w);
        assert_eq!(t1.total_delta + t2.total_delta, 0);
    }

    #[test]
    fn blocked_push_names_collision() {
        let x = Event::cross(0, Sign::Pos);
        let w = MorseWord::link(vec![Event::cup(0), x, Event::cap(0)]).unwrap();
        let err = push_block(&w, 2..=2, Direction::Down, 1).unwrap_err();
        assert_eq!(
            err,
            MoveError::Blocked {
                block_event: 2,
                blocking_event: 1,
                reason: IllegalReason::OverlappingSupports
            }
        );
    }

    #[test]
    fn bad_ranges() {
        assert!(matches!(push_block(&word(), 2..=2, Direction::Up, 1), Err(MoveError::BadPush(_))));
        assert!(matches!(push_block(&word(), 3..=9, Direction::Up, 1), Err(MoveError::BadPush(_))));
    }
}
