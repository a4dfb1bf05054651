//! Exact `k`-colorability by backtracking.

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Whether the underlying graph has a proper coloring with `k` colors.
pub fn chromatic_number_leq(g: &SignedGraph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    // highest degree first keeps the search shallow
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; g.n()];
    Ok(extend(g, k, &order, 0, &mut color))
}

fn extend(g: &SignedGraph, k: usize, order: &[usize], i: usize, color: &mut [usize]) -> bool {
    let Some(&v) = order.get(i) else { return true };
    // colors above the largest used so far are interchangeable
    let used = order[..i].iter().map(|&u| color[u] + 1).max().unwrap_or(0);
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&(w, _)| color[w] != c) {
            color[v] = c;
            if extend(g, k, order, i + 1, color) {
                return true;
            }
        }
    }
    color[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete, cycle};

    #[test]
    fn small_cases() {
        assert!(!chromatic_number_leq(&complete(4), 3).unwrap());
        assert!(chromatic_number_leq(&complete(4), 4).unwrap());
        assert!(chromatic_number_leq(&cycle(5).unwrap(), 3).unwrap());
        assert!(!chromatic_number_leq(&cycle(5).unwrap(), 2).unwrap());
        assert!(chromatic_number_leq(&cycle(6).unwrap(), 2).unwrap());
        assert!(chromatic_number_leq(&SignedGraph::unsigned(3, []).unwrap(), 1).unwrap());
        assert!(chromatic_number_leq(&complete(2), 0).is_err());
    }
}
