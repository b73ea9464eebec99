//! All graphs on `n` vertices up to isomorphism, by vertex addition with
//! canonical deduplication.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{is_two_connected, Graph};
use crate::iso::{canonical_colored, CanonicalForm};

/// One representative per isomorphism class, in canonical-form order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = alloc::vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            let base = g.edges();
            for subset in 0u32..(1 << (k - 1)) {
                let mut e = base.clone();
                e.extend((0..k - 1).filter(|&v| subset >> v & 1 == 1).map(|v| (v, k - 1)));
                let h = Graph::from_edges_unchecked(k, &e);
                let c = canonical_colored(&h, &[], usize::MAX).expect("no size limit");
                seen.entry(c.form).or_insert_with(|| h.relabel(&c.lab).unwrap());
            }
        }
        level = seen.into_values().collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

pub fn biconnected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(is_two_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (1..=7).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, [1, 2, 4, 11, 34, 156, 1044]);
        let conn: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(conn, [1, 1, 2, 6, 21, 112, 853]);
        let bic: Vec<usize> = (3..=7).map(|n| biconnected_graphs(n).len()).collect();
        assert_eq!(bic, [1, 3, 10, 56, 468]);
    }
}
