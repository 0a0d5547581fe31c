//! Exact comparison-count bounds.
//!
//! The lower bounds come from counting lattice points on the two middle
//! coordinate-sum levels of `[n]^d`: any two comparable tuples there differ
//! in coordinate sum by exactly 1, so no chain has length above 2 and the
//! level count is a floor on the worst-case comparisons of any search.
//! The upper bound evaluates the peeling recurrence of
//! [`search_nd`](crate::algorithms::search_nd) exactly.
//!
//! Counting is done by coefficient extraction from `(z + z^2 + ... + z^n)^d`
//! in 128-bit integer arithmetic, never by enumerating `[n]^d`.

/// A request to count tuples of `[n]^d` by coordinate sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCountQuery {
    n: usize,
    d: usize,
    levels: Vec<usize>,
}

impl LevelCountQuery {
    /// Levels outside `[d, d*n]` are allowed and contribute zero.
    pub fn new(n: usize, d: usize, levels: impl IntoIterator<Item = usize>) -> Self {
        assert!(n >= 1 && d >= 1);
        let mut levels: Vec<usize> = levels.into_iter().collect();
        levels.sort_unstable();
        levels.dedup();
        assert!(!levels.is_empty(), "at least one level is required");
        Self { n, d, levels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }
}

/// Number of tuples in `[n]^d` whose coordinate sum lies in the query's
/// level set.
pub fn section_size(q: &LevelCountQuery) -> u128 {
    let coeffs = sum_distribution(q.n, q.d);
    q.levels
        .iter()
        .filter_map(|&level| coeffs.get(level))
        .sum()
}

/// Coefficients of `(z + z^2 + ... + z^n)^d`; index `s` counts tuples with
/// coordinate sum `s`.
fn sum_distribution(n: usize, d: usize) -> Vec<u128> {
    let mut coeffs = vec![1u128];
    for _ in 0..d {
        let mut next = vec![0u128; coeffs.len() + n];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for j in 1..=n {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// `(4n^3 - n) / 3`: the exact size of the two middle levels of `[n]^4`
/// (sums `2n+1` and `2n+2`), a lower bound on searching a 4-dimensional
/// array.
pub fn d4_lower_bound(n: usize) -> u128 {
    assert!(n >= 1);
    let n = n as u128;
    let numerator = 4 * n * n * n - n;
    debug_assert_eq!(numerator % 3, 0);
    numerator / 3
}

/// Size of the two middle levels of `[n]^5` (sums `floor(5(n+1)/2)` and the
/// next), a lower bound on searching a 5-dimensional array. Grows as
/// `115/96 * n^4`.
pub fn d5_lower_bound(n: usize) -> u128 {
    assert!(n >= 1);
    let base = 5 * (n + 1) / 2;
    section_size(&LevelCountQuery::new(n, 5, [base, base + 1]))
}

/// Worst-case comparison count of the surface-peeling search, evaluated
/// exactly: `T(1) = 1`, `T(2) = 2^d`, and
/// `T(n) = T(n-2) + 2d*n^(d-2) + 2d*n^(d-4)*(2n-1)` for `n > 2`.
pub fn upper_bound_recurrence(n: usize, d: usize) -> u128 {
    assert!(d >= 4, "the recurrence is defined for d >= 4");
    assert!(n >= 1);
    let dd = d as u128;
    let base = if n % 2 == 1 { 1 } else { 2 };
    let mut t: u128 = if base == 1 { 1 } else { 1u128 << d };
    let mut k = base + 2;
    while k <= n {
        let ku = k as u128;
        t += 2 * dd * ku.pow(d as u32 - 2) + 2 * dd * ku.pow(d as u32 - 4) * (2 * ku - 1);
        k += 2;
    }
    t
}

/// `T(n, d) / n^(d-1)`; approaches `d / (d-1)` from above as `n` grows.
pub fn asymptotic_ratio(n: usize, d: usize) -> f64 {
    upper_bound_recurrence(n, d) as f64 / (n as f64).powi(d as i32 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Enumeration oracle, for small instances only.
    fn brute_force_level_count(n: usize, d: usize, levels: &[usize]) -> u128 {
        let mut coords = vec![1usize; d];
        let mut count = 0u128;
        'tuples: loop {
            let sum: usize = coords.iter().sum();
            if levels.contains(&sum) {
                count += 1;
            }
            for pos in (0..d).rev() {
                coords[pos] += 1;
                if coords[pos] <= n {
                    continue 'tuples;
                }
                coords[pos] = 1;
            }
            return count;
        }
    }

    #[test]
    fn section_spot_values() {
        assert_eq!(section_size(&LevelCountQuery::new(1, 4, [4])), 1);
        assert_eq!(section_size(&LevelCountQuery::new(2, 4, [5, 6])), 10);
        assert_eq!(section_size(&LevelCountQuery::new(2, 5, [7, 8])), 20);
        // Out-of-range levels contribute nothing.
        assert_eq!(section_size(&LevelCountQuery::new(2, 4, [1, 99])), 0);
    }

    #[test]
    fn section_matches_enumeration_for_all_small_levels() {
        for d in 1..=5 {
            for n in 1..=5 {
                for level in 0..=(d * n + 1) {
                    let q = LevelCountQuery::new(n, d, [level]);
                    assert_eq!(
                        section_size(&q),
                        brute_force_level_count(n, d, &[level]),
                        "n={n} d={d} level={level}"
                    );
                }
            }
        }
    }

    #[test]
    fn d4_lower_bound_spot_values() {
        assert_eq!(d4_lower_bound(1), 1);
        assert_eq!(d4_lower_bound(2), 10);
        assert_eq!(d4_lower_bound(3), 35);
    }

    #[test]
    fn d4_closed_form_equals_section_size() {
        for n in 1..=50 {
            let q = LevelCountQuery::new(n, 4, [2 * n + 1, 2 * n + 2]);
            assert_eq!(d4_lower_bound(n), section_size(&q), "n={n}");
        }
    }

    #[test]
    fn d4_constituent_levels_match_their_closed_forms() {
        for n in 1..=50u128 {
            let lower = section_size(&LevelCountQuery::new(n as usize, 4, [2 * n as usize + 1]));
            let upper = section_size(&LevelCountQuery::new(n as usize, 4, [2 * n as usize + 2]));
            assert_eq!(lower, (2 * n * n * n - 2 * n) / 3, "sum 2n+1, n={n}");
            assert_eq!(upper, (2 * n * n * n + n) / 3, "sum 2n+2, n={n}");
            // Same counts via binomial differences.
            assert_eq!(lower, choose(2 * n, 3) - 4 * choose(n, 3));
            assert_eq!(upper, choose(2 * n + 1, 3) - 4 * choose(n + 1, 3));
        }
    }

    fn choose(n: u128, k: u128) -> u128 {
        if k > n {
            return 0;
        }
        let mut result = 1u128;
        for i in 0..k {
            result = result * (n - i) / (i + 1);
        }
        result
    }

    #[test]
    fn d5_lower_bound_spot_values() {
        assert_eq!(d5_lower_bound(1), 1);
        assert_eq!(d5_lower_bound(2), 20);
    }

    #[test]
    fn recurrence_spot_values() {
        assert_eq!(upper_bound_recurrence(1, 5), 1);
        assert_eq!(upper_bound_recurrence(2, 4), 16);
        assert_eq!(upper_bound_recurrence(2, 5), 32);
        assert_eq!(upper_bound_recurrence(3, 4), 113); // 1 + 8*9 + 8*5
        assert_eq!(upper_bound_recurrence(4, 4), 200); // 16 + 8*16 + 8*7
        assert_eq!(upper_bound_recurrence(3, 5), 421); // 1 + 10*27 + 10*3*5
    }

    #[test]
    fn lower_bounds_stay_below_the_recurrence() {
        for n in 1..=200 {
            assert!(d4_lower_bound(n) <= upper_bound_recurrence(n, 4), "d=4 n={n}");
            assert!(d5_lower_bound(n) <= upper_bound_recurrence(n, 5), "d=5 n={n}");
        }
    }

    #[test]
    fn ratio_trends_toward_the_limit() {
        assert_eq!(asymptotic_ratio(1, 4), 1.0);
        let r50 = asymptotic_ratio(50, 4);
        let r100 = asymptotic_ratio(100, 4);
        let r200 = asymptotic_ratio(200, 4);
        assert!(r50 > r100 && r100 > r200);
        assert!((r200 - 4.0 / 3.0).abs() / (4.0 / 3.0) < 0.10);
    }

    /// Comparable tuples on the two middle levels differ in sum by exactly
    /// 1, so no 3-chain fits.
    #[test]
    fn middle_levels_contain_no_three_chain() {
        for n in 1..=8usize {
            let levels = [2 * n + 1, 2 * n + 2];
            let mut members = Vec::new();
            let mut coords = vec![1usize; 4];
            'tuples: loop {
                if levels.contains(&coords.iter().sum::<usize>()) {
                    members.push(coords.clone());
                }
                for pos in (0..4).rev() {
                    coords[pos] += 1;
                    if coords[pos] <= n {
                        continue 'tuples;
                    }
                    coords[pos] = 1;
                }
                break;
            }
            assert_eq!(members.len() as u128, d4_lower_bound(n));
            for p in &members {
                for q in &members {
                    let le = p.iter().zip(q).all(|(a, b)| a <= b);
                    if le && p != q {
                        let sp: usize = p.iter().sum();
                        let sq: usize = q.iter().sum();
                        assert_eq!(sq - sp, 1, "comparable pair {p:?} <= {q:?}");
                    }
                }
            }
        }
    }
}
