use std::collections::BTreeMap;

use super::Rat;

/// Sparse vector keyed by an ordered coordinate type.
pub type SparseVec<K> = BTreeMap<K, Rat>;

/// Incrementally maintained echelon basis of a rational vector space.
///
/// Each stored row has leading coefficient one at its pivot key; a new
/// vector is reduced against the pivots in key order, and the first
/// nonzero coordinate that survives becomes its pivot.
#[derive(Debug, Clone)]
pub struct SpanBasis<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SpanBasis<K> {
    fn default() -> Self {
        SpanBasis {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SpanBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` modulo the current span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        v.retain(|_, x| !x.is_zero());
        let mut floor: Option<K> = None;
        loop {
            let lead = match &floor {
                None => v.keys().next().cloned(),
                Some(f) => v.range(f.clone()..).map(|(k, _)| k.clone()).find(|k| k > f),
            };
            let Some(lead) = lead else { return v };
            if let Some(row) = self.rows.get(&lead) {
                let f = v[&lead].clone();
                for (k, x) in row {
                    let entry = v.entry(k.clone()).or_insert_with(Rat::zero);
                    *entry -= &(&f * x);
                    if entry.is_zero() {
                        v.remove(k);
                    }
                }
            } else {
                // Not a pivot: keep it and look further right.
                floor = Some(lead);
            }
        }
    }

    /// Add `v` to the span; returns true if it was independent.
    pub fn insert(&mut self, v: impl IntoIterator<Item = (K, Rat)>) -> bool {
        let reduced = self.reduce(v.into_iter().collect());
        let Some((pivot, lead)) = reduced.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        let inv = lead.recip().expect("nonzero lead");
        let row = reduced.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: impl IntoIterator<Item = (K, Rat)>) -> bool {
        self.reduce(v.into_iter().collect()).is_empty()
    }
}
