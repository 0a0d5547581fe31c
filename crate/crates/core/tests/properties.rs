//! Differential and invariant properties, driven by proptest.

use proptest::prelude::*;

use monotone_search::algorithms::{partition_2d, search_nd, slice_search, PartitionOutcome};
use monotone_search::bounds::{section_size, upper_bound_recurrence, LevelCountQuery};
use monotone_search::comparator::CountingComparator;
use monotone_search::generate::{gen_monotone, GenStyle};
use monotone_search::harness::per_call_budget;
use monotone_search::harness::Algorithm;
use monotone_search::oracle::contains_oracle;
use monotone_search::{search, validate_monotone, MonotoneArray, SearchResult};

fn style_strategy() -> impl Strategy<Value = GenStyle> {
    prop_oneof![
        Just(GenStyle::Strict),
        Just(GenStyle::Plateau),
        Just(GenStyle::Constant),
    ]
}

/// A small random shape: rectangular for d = 2, cubic otherwise.
fn shape_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop_oneof![
        (1usize..=16).prop_map(|n| vec![n]),
        (1usize..=6, 1usize..=6).prop_map(|(m, n)| vec![m, n]),
        (1usize..=4, 3usize..=5usize).prop_map(|(n, d)| vec![n; d]),
    ]
}

/// Draws a query that lands in one of the four coverage classes.
fn query_for(a: &MonotoneArray, selector: usize, offset: usize) -> f64 {
    let mut distinct = a.values().to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    match selector % 4 {
        0 => distinct[offset % distinct.len()],
        1 if distinct.len() > 1 => {
            let i = offset % (distinct.len() - 1);
            (distinct[i] + distinct[i + 1]) / 2.0
        }
        2 => distinct[0] - 1.0,
        _ => distinct[distinct.len() - 1] + 1.0,
    }
}

proptest! {
    /// Every generated instance is monotone, whatever the style.
    #[test]
    fn generated_arrays_validate(
        shape in shape_strategy(),
        seed in any::<u64>(),
        style in style_strategy(),
    ) {
        let a = gen_monotone(&shape, seed, style).unwrap();
        prop_assert!(validate_monotone(&a).unwrap().is_monotone());
    }

    /// The dispatcher agrees with the linear scan on membership status and
    /// stays within its certified budget.
    #[test]
    fn dispatcher_matches_oracle(
        shape in shape_strategy(),
        seed in any::<u64>(),
        style in style_strategy(),
        selector in any::<usize>(),
        offset in any::<usize>(),
    ) {
        let a = gen_monotone(&shape, seed, style).unwrap();
        let x = query_for(&a, selector, offset);
        let out = search(&a, x).unwrap();
        let reference = contains_oracle(&a, x);
        prop_assert_eq!(out.result.is_found(), reference.result.is_found());
        if let SearchResult::Found(index) = &out.result {
            prop_assert_eq!(a.get(index), x);
        }
        prop_assert!(out.comparisons as u128 <= per_call_budget(Algorithm::Auto, a.shape()));
    }

    /// The slice baseline is equivalent to the dispatcher in outcome.
    #[test]
    fn slice_baseline_matches_oracle(
        n in 1usize..=4,
        d in 2usize..=4,
        seed in any::<u64>(),
        style in style_strategy(),
        selector in any::<usize>(),
        offset in any::<usize>(),
    ) {
        let a = gen_monotone(&vec![n; d], seed, style).unwrap();
        let x = query_for(&a, selector, offset);
        let mut cmp = CountingComparator::new(x);
        let out = slice_search(&a, &mut cmp);
        prop_assert_eq!(out.result.is_found(), contains_oracle(&a, x).result.is_found());
        prop_assert!(out.comparisons as u128 <= per_call_budget(Algorithm::Slice, a.shape()));
    }

    /// Partition invariants on random square instances.
    #[test]
    fn partition_is_sound(
        n in 1usize..=9,
        seed in any::<u64>(),
        style in style_strategy(),
        selector in any::<usize>(),
        offset in any::<usize>(),
    ) {
        let a = gen_monotone(&[n, n], seed, style).unwrap();
        let x = query_for(&a, selector, offset);
        let mut cmp = CountingComparator::new(x);
        match partition_2d(&a, &mut cmp) {
            PartitionOutcome::Found(index) => prop_assert_eq!(a.get(&index), x),
            PartitionOutcome::Partitioned(p) => {
                prop_assert!(cmp.count() <= (2 * n - 1) as u64);
                prop_assert!(p.u_thresholds().windows(2).all(|w| w[0] >= w[1]));
                prop_assert!(p.v_thresholds().windows(2).all(|w| w[0] >= w[1]));
                prop_assert_eq!(p.s_len() + p.l_len(), n * n);
                for row in 1..=n {
                    for col in 1..=n {
                        prop_assert_eq!(row <= p.u(col), col <= p.v(row));
                        if row <= p.u(col) {
                            prop_assert!(a.get(&[row, col]) < x);
                        } else {
                            prop_assert!(a.get(&[row, col]) > x);
                        }
                    }
                }
            }
        }
    }

    /// Level counting by convolution equals brute-force enumeration.
    #[test]
    fn section_size_matches_enumeration(
        n in 1usize..=5,
        d in 1usize..=5,
        raw_levels in prop::collection::vec(0usize..=30, 1..4),
    ) {
        let q = LevelCountQuery::new(n, d, raw_levels.clone());
        let mut count = 0u128;
        let mut coords = vec![1usize; d];
        'tuples: loop {
            if q.levels().contains(&coords.iter().sum()) {
                count += 1;
            }
            for pos in (0..d).rev() {
                coords[pos] += 1;
                if coords[pos] <= n {
                    continue 'tuples;
                }
                coords[pos] = 1;
            }
            break;
        }
        prop_assert_eq!(section_size(&q), count);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The surface search agrees with the oracle and respects the
    /// recurrence ceiling on random higher-dimensional instances.
    #[test]
    fn surface_search_matches_oracle(
        n in 1usize..=4,
        d in 4usize..=5,
        seed in any::<u64>(),
        style in style_strategy(),
        selector in any::<usize>(),
        offset in any::<usize>(),
    ) {
        let a = gen_monotone(&vec![n; d], seed, style).unwrap();
        let x = query_for(&a, selector, offset);
        let mut cmp = CountingComparator::new(x);
        let out = search_nd(&a, &mut cmp);
        prop_assert_eq!(out.result.is_found(), contains_oracle(&a, x).result.is_found());
        if let SearchResult::Found(index) = &out.result {
            prop_assert_eq!(a.get(index), x);
        }
        prop_assert!(out.comparisons as u128 <= upper_bound_recurrence(n, d));
    }
}
