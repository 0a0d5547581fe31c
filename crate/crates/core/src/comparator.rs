//! The instrumented comparison counter and search outcome types.
//!
//! Every three-way comparison between the query value and an array entry
//! goes through a [`CountingComparator`]; the count is the cost measure for
//! every algorithm in this crate. A comparator belongs to exactly one
//! search: recursive phases of one search share it, two searches never do.

use std::cmp::Ordering;

use crate::array::IndexTuple;

#[derive(Debug, Clone)]
pub struct CountingComparator {
    query: f64,
    count: u64,
    trace: Option<Vec<(IndexTuple, Ordering)>>,
}

impl CountingComparator {
    pub fn new(query: f64) -> Self {
        Self {
            query,
            count: 0,
            trace: None,
        }
    }

    /// Like [`new`](Self::new), but records `(index, outcome)` for every
    /// comparison performed.
    pub fn with_trace(query: f64) -> Self {
        Self {
            query,
            count: 0,
            trace: Some(Vec::new()),
        }
    }

    pub fn query(&self) -> f64 {
        self.query
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Recorded comparisons, or `None` when tracing is disabled.
    pub fn trace(&self) -> Option<&[(IndexTuple, Ordering)]> {
        self.trace.as_deref()
    }

    /// Three-way comparison of the query against `entry`, counted.
    ///
    /// Returns the ordering of the query relative to the entry (`Less`
    /// means query < entry). The 1-based index of the entry is produced
    /// lazily and only materialized when tracing is on.
    pub fn compare(&mut self, entry: f64, index: impl FnOnce() -> IndexTuple) -> Ordering {
        self.count += 1;
        let outcome = self
            .query
            .partial_cmp(&entry)
            .expect("NaN in a counted comparison");
        if let Some(trace) = &mut self.trace {
            trace.push((index(), outcome));
        }
        outcome
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    /// 1-based index of an entry equal to the query. Algorithms may report
    /// any matching index; only the linear-scan oracle pins the
    /// lexicographically smallest one.
    Found(IndexTuple),
    NotFound,
}

impl SearchResult {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchResult::Found(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: SearchResult,
    /// Final count of the comparator that performed the search.
    pub comparisons: u64,
}

impl SearchOutcome {
    pub(crate) fn from_parts(found: Option<IndexTuple>, cmp: &CountingComparator) -> Self {
        SearchOutcome {
            result: match found {
                Some(index) => SearchResult::Found(index),
                None => SearchResult::NotFound,
            },
            comparisons: cmp.count(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_every_comparison() {
        let mut cmp = CountingComparator::new(2.5);
        assert_eq!(cmp.compare(2.0, || vec![1]), Ordering::Greater);
        assert_eq!(cmp.compare(2.5, || vec![2]), Ordering::Equal);
        assert_eq!(cmp.compare(3.0, || vec![3]), Ordering::Less);
        assert_eq!(cmp.count(), 3);
        assert!(cmp.trace().is_none());
    }

    #[test]
    fn trace_length_matches_count() {
        let mut cmp = CountingComparator::with_trace(1.0);
        for i in 1..=5 {
            cmp.compare(i as f64, || vec![i]);
        }
        let trace = cmp.trace().unwrap();
        assert_eq!(trace.len() as u64, cmp.count());
        assert_eq!(trace[0], (vec![1], Ordering::Equal));
        assert_eq!(trace[4], (vec![5], Ordering::Less));
    }
}
