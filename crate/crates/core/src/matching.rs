//! Maximum bipartite matching by augmenting paths (Kuhn).

/// Matches left vertices `0..adj.len()` to right vertices `0..right_count`.
/// Returns `assignment[left] = Some(right)` for a maximum matching. Neighbor
/// lists are tried in the order given, so the result is deterministic.
pub fn max_bipartite_matching(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; right_count];
    for left in 0..adj.len() {
        let mut visited = vec![false; right_count];
        augment(left, adj, &mut owner, &mut visited);
    }
    let mut assignment = vec![None; adj.len()];
    for (right, left) in owner.iter().enumerate() {
        if let Some(left) = left {
            assignment[*left] = Some(right);
        }
    }
    assignment
}

fn augment(
    left: usize,
    adj: &[Vec<usize>],
    owner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &right in &adj[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        if owner[right].is_none_or(|other| augment(other, adj, owner, visited)) {
            owner[right] = Some(left);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(m: &[Option<usize>]) -> usize {
        m.iter().flatten().count()
    }

    #[test]
    fn greedy_would_fail_here() {
        // Left 0 likes {0,1}, left 1 likes {0}. Greedy 0->0 blocks left 1.
        let m = max_bipartite_matching(&[vec![0, 1], vec![0]], 2);
        assert_eq!(m, vec![Some(1), Some(0)]);
    }

    #[test]
    fn deficient_side() {
        let m = max_bipartite_matching(&[vec![0], vec![0], vec![0]], 1);
        assert_eq!(size(&m), 1);
        let m = max_bipartite_matching(&[vec![], vec![1]], 2);
        assert_eq!(m, vec![None, Some(1)]);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // Every bipartite graph on 3 x 3.
        for mask in 0u32..(1 << 9) {
            let adj: Vec<Vec<usize>> = (0..3)
                .map(|l| (0..3).filter(|r| mask >> (l * 3 + r) & 1 == 1).collect())
                .collect();
            let got = size(&max_bipartite_matching(&adj, 3));
            let mut best = 0;
            for p in [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ] {
                let s = (0..3).filter(|&l| adj[l].contains(&p[l])).count();
                best = best.max(s);
            }
            assert_eq!(got, best, "mask {mask:09b}");
        }
    }
}
