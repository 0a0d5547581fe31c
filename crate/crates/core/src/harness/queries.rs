//! Query construction for an instance.
//!
//! Together the four classes cover every way a three-way comparison can
//! play out: querying a present value, a value strictly between two
//! adjacent distinct entries, and values off both ends of the range.

use crate::array::MonotoneArray;

use super::config::QueryClasses;

/// The selected query classes for `a`, in a fixed deterministic order:
/// members ascending, then midpoints ascending, then below-min, then
/// above-max. With a sample cap, the member and midpoint classes are
/// thinned to evenly spaced picks (always keeping both extremes).
pub fn query_set(a: &MonotoneArray, classes: QueryClasses, sample_cap: Option<usize>) -> Vec<f64> {
    let mut distinct = a.values().to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    let mut queries = Vec::new();
    if distinct.is_empty() {
        return queries;
    }
    if classes.members {
        queries.extend(sample(&distinct, sample_cap));
    }
    if classes.midpoints {
        let midpoints: Vec<f64> = distinct.windows(2).map(|w| (w[0] + w[1]) / 2.0).collect();
        queries.extend(sample(&midpoints, sample_cap));
    }
    if classes.below_min {
        queries.push(distinct[0] - 1.0);
    }
    if classes.above_max {
        queries.push(distinct[distinct.len() - 1] + 1.0);
    }
    queries
}

fn sample(values: &[f64], cap: Option<usize>) -> Vec<f64> {
    match cap {
        Some(cap) if cap > 0 && values.len() > cap => {
            if cap == 1 {
                return vec![values[values.len() / 2]];
            }
            (0..cap)
                .map(|i| values[i * (values.len() - 1) / (cap - 1)])
                .collect()
        }
        _ => values.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_monotone, GenStyle};

    /// Every produced query is a member, strictly between two adjacent
    /// distinct values, or outside the value range.
    #[test]
    fn classes_are_exhaustive_and_disjoint() {
        for style in GenStyle::ALL {
            for seed in 0..10 {
                let a = gen_monotone(&[3, 3, 3], seed, style).unwrap();
                let mut distinct = a.values().to_vec();
                distinct.sort_by(f64::total_cmp);
                distinct.dedup();
                let (min, max) = (distinct[0], distinct[distinct.len() - 1]);
                for x in query_set(&a, QueryClasses::all(), None) {
                    let member = distinct.binary_search_by(|v| v.total_cmp(&x)).is_ok();
                    let outside = x < min || x > max;
                    let between = distinct
                        .windows(2)
                        .any(|w| w[0] < x && x < w[1]);
                    assert_eq!(
                        u32::from(member) + u32::from(outside) + u32::from(between),
                        1,
                        "query {x} should fall in exactly one class"
                    );
                }
            }
        }
    }

    #[test]
    fn member_queries_cover_all_distinct_values() {
        let a = gen_monotone(&[4, 4], 3, GenStyle::Plateau).unwrap();
        let classes = QueryClasses {
            members: true,
            midpoints: false,
            below_min: false,
            above_max: false,
        };
        let queries = query_set(&a, classes, None);
        let mut distinct = a.values().to_vec();
        distinct.sort_by(f64::total_cmp);
        distinct.dedup();
        assert_eq!(queries, distinct);
    }

    #[test]
    fn sampling_is_deterministic_and_keeps_extremes() {
        let a = gen_monotone(&[6, 6], 1, GenStyle::Strict).unwrap();
        let classes = QueryClasses {
            members: true,
            midpoints: false,
            below_min: false,
            above_max: false,
        };
        let s1 = query_set(&a, classes, Some(5));
        let s2 = query_set(&a, classes, Some(5));
        assert_eq!(s1, s2);
        assert_eq!(s1.len(), 5);
        let full = query_set(&a, classes, None);
        assert_eq!(s1[0], full[0]);
        assert_eq!(s1[4], full[full.len() - 1]);
    }
}
