use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::dsl::serialize_word;
use crate::morse::{width, MorseWord};

use super::exchange::{exchange, legal_sites};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitResult {
    pub min_width: usize,
    /// Canonical text of the least-width word found; ties break on the text.
    pub witness: String,
    /// Every word reachable by exchanges was visited.
    pub exhausted: bool,
    pub states: usize,
}

/// Breadth-first search over the exchange orbit of `word`, visiting at most
/// `budget` distinct words (at least the start word).
pub fn orbit_min_width(word: &MorseWord, budget: usize) -> OrbitResult {
    let budget = budget.max(1);
    let start = serialize_word(word);
    let mut best = (width(word), start.clone());
    let mut seen: HashSet<String> = HashSet::from([start]);
    let mut queue: VecDeque<MorseWord> = VecDeque::from([word.clone()]);
    let mut truncated = false;

    'search: while let Some(current) = queue.pop_front() {
        for k in legal_sites(&current) {
            let next = exchange(&current, k).expect("legal site");
            let key = serialize_word(&next);
            if seen.contains(&key) {
                continue;
            }
            if seen.len() >= budget {
                truncated = true;
                break 'search;
            }
            let candidate = (width(&next), key.clone());
            if candidate < best {
                best = candidate;
            }
            seen.insert(key);
            queue.push_back(next);
        }
    }

    OrbitResult { min_width: best.0, witness: best.1, exhausted: !truncated, states: seen.len() }
}
