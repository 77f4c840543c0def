//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).

/// `adj[u]` lists the right vertices adjacent to left vertex `u`. Returns,
/// for each left vertex, its matched right vertex.
pub fn maximum_matching(adj: &[Vec<usize>], right_size: usize) -> Vec<Option<usize>> {
    let mut match_right: Vec<Option<usize>> = vec![None; right_size];
    for u in 0..adj.len() {
        let mut visited = vec![false; right_size];
        augment(u, adj, &mut visited, &mut match_right);
    }
    let mut match_left = vec![None; adj.len()];
    for (v, m) in match_right.iter().enumerate() {
        if let Some(u) = *m {
            match_left[u] = Some(v);
        }
    }
    match_left
}

fn augment(u: usize, adj: &[Vec<usize>], visited: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match match_right[v] {
            None => true,
            Some(w) => augment(w, adj, visited, match_right),
        };
        if free {
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn needs_augmentation() {
        // greedy would match 0-0 and strand 1
        let adj = vec![vec![0, 1], vec![0]];
        let m = maximum_matching(&adj, 2);
        assert_eq!(m, vec![Some(1), Some(0)]);
    }

    #[test]
    fn deficient() {
        let adj = vec![vec![0], vec![0], vec![1]];
        let size = maximum_matching(&adj, 2).iter().flatten().count();
        assert_eq!(size, 2);
    }
}
