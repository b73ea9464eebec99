use k2n_core::enumerate::biconnected_graphs;
use k2n_core::iso::{are_isomorphic, are_isomorphic_labeled};
use k2n_core::minor::brute_force_minor;
use k2n_core::sum::{decompose, find_admissible_2cut, in_class_c, CClass, TreeStructure};
use k2n_core::typeone::random_type_one;
use k2n_core::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn valid_label_sets(g: &Graph) -> Vec<Vec<usize>> {
    let deg2: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << deg2.len()) {
        let l: Vec<usize> = (0..deg2.len()).filter(|&i| mask >> i & 1 == 1).map(|i| deg2[i]).collect();
        if l.iter().all(|&a| l.iter().all(|&b| !g.has_edge(a, b))) {
            out.push(l);
        }
    }
    out
}

#[test]
fn round_trip_up_to_eight_vertices() {
    for n in 3..=8 {
        for g in biconnected_graphs(n) {
            let d = decompose(&g, &[]).unwrap();
            for p in &d.theta.pieces {
                assert_ne!(in_class_c(&p.graph), CClass::None);
            }
            let back = d.theta.tree_sum().unwrap();
            assert!(back.labeled.labels.is_empty());
            assert!(are_isomorphic(&back.labeled.graph, &g).unwrap());
        }
    }
}

#[test]
fn labeled_round_trip() {
    for n in 4..=7 {
        for g in biconnected_graphs(n) {
            for l in valid_label_sets(&g) {
                let d = decompose(&g, &l).unwrap();
                let back = d.theta.tree_sum().unwrap().labeled;
                assert!(are_isomorphic_labeled(&back.graph, &back.labels, &g, &l, 64).unwrap());
            }
        }
    }
}

fn subtrees(theta: &TreeStructure) -> Vec<Vec<usize>> {
    let k = theta.pieces.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << k) {
        let nodes: Vec<usize> = (0..k).filter(|&t| mask >> t & 1 == 1).collect();
        if theta.restrict(&nodes).is_ok() {
            out.push(nodes);
        }
    }
    out
}

#[test]
fn subtree_sums_are_minors() {
    for n in 3..=8 {
        for g in biconnected_graphs(n) {
            let d = decompose(&g, &[]).unwrap();
            if d.theta.pieces.len() > 10 {
                continue;
            }
            for nodes in subtrees(&d.theta) {
                let (sub, _) = d.theta.restrict(&nodes).unwrap();
                let h = sub.tree_sum().unwrap().labeled.graph;
                assert!(
                    brute_force_minor(&g, &h, 10).unwrap().is_some(),
                    "subtree {nodes:?} of {:?}",
                    g.edges()
                );
            }
        }
    }
}

#[test]
fn no_admissible_cut_characterises_class_c() {
    for n in 3..=8 {
        for g in biconnected_graphs(n) {
            let sets = valid_label_sets(&g);
            let free: Vec<bool> = sets.iter().map(|l| find_admissible_2cut(&g, l).unwrap().is_none()).collect();
            if in_class_c(&g) == CClass::None {
                assert!(free.iter().all(|&f| !f), "{:?}", g.edges());
            } else {
                assert!(free.iter().any(|&f| f), "{:?}", g.edges());
            }
        }
    }
}

fn sample_structures() -> Vec<TreeStructure> {
    let mut out = Vec::new();
    for seed in 0..6 {
        let d = random_type_one(12, seed).unwrap();
        out.push(decompose(&d.graph().unwrap(), &[]).unwrap().theta);
    }
    out.retain(|t| t.edges.len() >= 2);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn contraction_order_does_not_matter(seed in any::<u64>()) {
        for theta in sample_structures() {
            let mut order: Vec<usize> = (0..theta.edges.len()).collect();
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let a = theta.tree_sum().unwrap().labeled.graph;
            let b = theta.tree_sum_with_order(&order).unwrap().labeled.graph;
            prop_assert!(are_isomorphic(&a, &b).unwrap());
        }
    }
}

#[test]
fn c2_paths_yield_verified_witnesses() {
    use k2n_core::minor::{max_k2, verify_k2n_witness};
    use k2n_core::sum::{c2_count_on_paths, c2_paths_give_minor};
    use k2n_core::Budget;
    for n in 3..=8 {
        for g in biconnected_graphs(n) {
            let theta = decompose(&g, &[]).unwrap().theta;
            let c = c2_count_on_paths(&theta);
            let composed = theta.tree_sum().unwrap().labeled.graph;
            for k in 1..=c {
                let w = c2_paths_give_minor(&theta, k).unwrap();
                assert_eq!(w.leaves.len(), k);
                assert!(verify_k2n_witness(&composed, &w));
            }
            assert!(c2_paths_give_minor(&theta, c + 1).is_err());
            let (best, _) = max_k2(&g, &mut Budget::unlimited()).unwrap();
            assert!(best >= c);
        }
    }
}
