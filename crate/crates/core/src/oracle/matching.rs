//! Bipartite matching of two eigenvalue lists under a closeness predicate.

/// Returns `assign` with `close(&xs[i], &ys[assign[i]])` for every `i` if a
/// perfect matching exists, `None` otherwise. Augmenting-path search, so the
/// answer does not depend on the order of the inputs.
pub fn match_within<X, Y>(xs: &[X], ys: &[Y], close: impl Fn(&X, &Y) -> bool) -> Option<Vec<usize>> {
    if xs.len() != ys.len() {
        return None;
    }
    let adj: Vec<Vec<usize>> =
        xs.iter().map(|x| ys.iter().enumerate().filter(|(_, y)| close(x, y)).map(|(j, _)| j).collect()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; ys.len()];
    for i in 0..xs.len() {
        let mut seen = vec![false; ys.len()];
        if !augment(i, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut assign = vec![0; xs.len()];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            assign[*i] = j;
        }
    }
    Some(assign)
}

fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if owner[j].is_none_or(|k| augment(k, adj, owner, seen)) {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}
