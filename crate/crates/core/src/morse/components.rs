use std::collections::BTreeSet;

use super::event::EventKind;
use super::word::MorseWord;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Link components of a word, numbered by first appearance
/// (bottom strands left to right, then events bottom to top).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component of each event; a crossing lists both strands' components.
    per_event: Vec<Vec<usize>>,
    count: usize,
}

impl Components {
    pub fn count(&self) -> usize {
        self.count
    }

    /// Components touched by event `k` (1-based).
    pub fn of_event(&self, k: usize) -> &[usize] {
        &self.per_event[k - 1]
    }

    /// Component of a cup or cap (1-based index).
    pub fn of_critical(&self, k: usize) -> Option<usize> {
        match self.per_event.get(k.checked_sub(1)?)?.as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// The partition of critical events into components, as sorted index sets.
    pub fn critical_partition(&self) -> BTreeSet<BTreeSet<usize>> {
        let mut groups = vec![BTreeSet::new(); self.count];
        for k in 1..=self.per_event.len() {
            if let Some(c) = self.of_critical(k) {
                groups[c].insert(k);
            }
        }
        groups.into_iter().filter(|g| !g.is_empty()).collect()
    }
}

/// Tracks strand labels level by level and merges them where caps join arcs.
pub fn components(word: &MorseWord) -> Components {
    let mut uf = UnionFind::new();
    let mut strands: Vec<usize> = (0..word.bottom()).map(|_| uf.fresh()).collect();
    let mut raw: Vec<Vec<usize>> = Vec::with_capacity(word.len());
    for e in word.events() {
        let p = e.position;
        match e.kind {
            EventKind::Cup => {
                let arc = uf.fresh();
                strands.splice(p..p, [arc, arc]);
                raw.push(vec![arc]);
            }
            EventKind::Cap => {
                let (a, b) = (strands[p], strands[p + 1]);
                uf.union(a, b);
                strands.drain(p..p + 2);
                raw.push(vec![a]);
            }
            EventKind::Cross(_) => {
                strands.swap(p, p + 1);
                raw.push(vec![strands[p], strands[p + 1]]);
            }
        }
    }
    // Renumber roots by first appearance.
    let mut order: Vec<Option<usize>> = vec![None; uf.parent.len()];
    let mut next = 0;
    let mut label = |uf: &mut UnionFind, x: usize| {
        let root = uf.find(x);
        *order[root].get_or_insert_with(|| {
            next += 1;
            next - 1
        })
    };
    for x in 0..word.bottom() {
        label(&mut uf, x);
    }
    let per_event = raw
        .iter()
        .map(|ids| {
            let mut cs: Vec<usize> = ids.iter().map(|&x| label(&mut uf, x)).collect();
            cs.sort_unstable();
            cs.dedup();
            cs
        })
        .collect();
    Components { per_event, count: next }
}
