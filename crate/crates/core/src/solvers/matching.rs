//! Maximum-weight bipartite matching on a dense integer weight matrix.

/// Largest total weight of a matching using only the given rows and columns.
/// Negative entries are never worth matching, so they count as 0.
fn best_value(weights: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> i64 {
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    let size = rows.len().max(cols.len());
    // Min-cost assignment on the negated, zero-padded square matrix.
    let cost = |i: usize, j: usize| -> i64 {
        if i < rows.len() && j < cols.len() {
            -weights[rows[i]][cols[j]].max(0)
        } else {
            0
        }
    };
    let assignment = hungarian(size, cost);
    (0..size).map(|i| -cost(i, assignment[i])).sum()
}

/// Classic O(n^3) assignment with potentials. Returns the column of each
/// row.
fn hungarian(n: usize, cost: impl Fn(usize, usize) -> i64) -> Vec<usize> {
    const INF: i64 = i64::MAX / 4;
    // 1-based, index 0 is the virtual start row.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        owner[0] = i;
        let mut j0 = 0;
        let mut min_to = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if reduced < min_to[j] {
                    min_to[j] = reduced;
                    way[j] = j0;
                }
                if min_to[j] < delta {
                    delta = min_to[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_to[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        assignment[owner[j] - 1] = j - 1;
    }
    assignment
}

/// A maximum-weight matching of the `r x c` matrix `weights`, as ascending
/// `(row, column)` pairs. Among all maximum matchings the one with the
/// lexicographically smallest pair list is returned.
pub fn max_weight_bipartite_matching(weights: &[Vec<i64>]) -> Vec<(usize, usize)> {
    let r = weights.len();
    let c = weights.first().map_or(0, Vec::len);
    let mut cols: Vec<usize> = (0..c).collect();
    let mut remaining = best_value(weights, &(0..r).collect::<Vec<_>>(), &cols);
    let mut matching = Vec::new();
    for i in 0..r {
        if remaining == 0 {
            break;
        }
        let later: Vec<usize> = (i + 1..r).collect();
        for pos in 0..cols.len() {
            let j = cols[pos];
            let w = weights[i][j];
            if w < 0 {
                continue;
            }
            let mut rest = cols.clone();
            rest.remove(pos);
            if w + best_value(weights, &later, &rest) == remaining {
                matching.push((i, j));
                remaining -= w;
                cols = rest;
                break;
            }
        }
    }
    matching
}

/// Total weight of `matching` under `weights`.
pub fn matching_weight(weights: &[Vec<i64>], matching: &[(usize, usize)]) -> i64 {
    matching.iter().map(|&(i, j)| weights[i][j]).sum()
}

/// First matching, in row-major lexicographic order of pair lists, whose
/// total weight is exactly `target`. Entries of any sign may be used.
pub fn matching_with_weight(weights: &[Vec<i64>], target: i64) -> Option<Vec<(usize, usize)>> {
    let r = weights.len();
    let c = weights.first().map_or(0, Vec::len);
    // Bounds on what rows i.. can still add.
    let mut upper = vec![0i64; r + 1];
    let mut lower = vec![0i64; r + 1];
    for i in (0..r).rev() {
        let hi = weights[i].iter().copied().max().unwrap_or(0).max(0);
        let lo = weights[i].iter().copied().min().unwrap_or(0).min(0);
        upper[i] = upper[i + 1] + hi;
        lower[i] = lower[i + 1] + lo;
    }
    let mut used = vec![false; c];
    let mut current = Vec::new();
    fn dfs(
        i: usize,
        sum: i64,
        target: i64,
        weights: &[Vec<i64>],
        bounds: (&[i64], &[i64]),
        used: &mut [bool],
        current: &mut Vec<(usize, usize)>,
    ) -> bool {
        let (upper, lower) = bounds;
        if sum + upper[i] < target || sum + lower[i] > target {
            return false;
        }
        if sum == target {
            return true;
        }
        if i == weights.len() {
            return false;
        }
        for j in 0..used.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            current.push((i, j));
            if dfs(i + 1, sum + weights[i][j], target, weights, bounds, used, current) {
                return true;
            }
            current.pop();
            used[j] = false;
        }
        dfs(i + 1, sum, target, weights, bounds, used, current)
    }
    dfs(0, 0, target, weights, (&upper, &lower), &mut used, &mut current).then_some(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every matching of the matrix, as ascending pair lists.
    fn all_matchings(weights: &[Vec<i64>]) -> Vec<Vec<(usize, usize)>> {
        fn go(
            i: usize,
            w: &[Vec<i64>],
            used: &mut Vec<bool>,
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if i == w.len() {
                out.push(cur.clone());
                return;
            }
            go(i + 1, w, used, cur, out);
            for j in 0..used.len() {
                if !used[j] {
                    used[j] = true;
                    cur.push((i, j));
                    go(i + 1, w, used, cur, out);
                    cur.pop();
                    used[j] = false;
                }
            }
        }
        let mut out = Vec::new();
        let c = weights.first().map_or(0, Vec::len);
        go(0, weights, &mut vec![false; c], &mut Vec::new(), &mut out);
        out
    }

    fn oracle(weights: &[Vec<i64>]) -> Vec<(usize, usize)> {
        let all = all_matchings(weights);
        let best = all.iter().map(|m| matching_weight(weights, m)).max().unwrap();
        all.into_iter()
            .filter(|m| matching_weight(weights, m) == best)
            .min()
            .unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(max_weight_bipartite_matching(&[vec![5]]), vec![(0, 0)]);
        assert!(max_weight_bipartite_matching(&[vec![-1]]).is_empty());
        let w = [vec![3, 2], vec![2, 3]];
        let m = max_weight_bipartite_matching(&w);
        assert_eq!(m, vec![(0, 0), (1, 1)]);
        assert_eq!(matching_weight(&w, &m), 6);
        assert_eq!(all_matchings(&w).len(), 7);
    }

    #[test]
    fn empty_shapes() {
        assert!(max_weight_bipartite_matching(&[]).is_empty());
        assert!(max_weight_bipartite_matching(&[vec![], vec![]]).is_empty());
    }

    #[test]
    fn zero_weight_ties_prefer_the_shorter_list() {
        assert!(max_weight_bipartite_matching(&[vec![0, 0], vec![0, 0]]).is_empty());
        // Once the weight is positive, a zero-weight pair on an earlier row
        // sorts before anything on a later row.
        assert_eq!(
            max_weight_bipartite_matching(&[vec![0, -3], vec![-3, 4]]),
            vec![(0, 0), (1, 1)]
        );
    }

    #[test]
    fn exact_weight_search() {
        let w = [vec![3, -2], vec![-2, 3]];
        assert_eq!(matching_with_weight(&w, 0), Some(vec![]));
        assert_eq!(matching_with_weight(&w, -4), Some(vec![(0, 1), (1, 0)]));
        assert_eq!(matching_with_weight(&w, 6), Some(vec![(0, 0), (1, 1)]));
        assert_eq!(matching_with_weight(&w, 1), None);
        assert_eq!(matching_with_weight(&w, 5), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
            (1usize..5, 1usize..5)
                .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-4i64..6, c), r))
        }

        proptest! {
            #[test]
            fn matches_exhaustive_oracle(w in matrix()) {
                prop_assert_eq!(max_weight_bipartite_matching(&w), oracle(&w));
            }

            #[test]
            fn exact_weight_agrees_with_enumeration(w in matrix(), target in -8i64..12) {
                let exists = all_matchings(&w).iter().any(|m| matching_weight(&w, m) == target);
                let found = matching_with_weight(&w, target);
                prop_assert_eq!(found.is_some(), exists);
                if let Some(m) = found {
                    prop_assert_eq!(matching_weight(&w, &m), target);
                }
            }
        }
    }
}
