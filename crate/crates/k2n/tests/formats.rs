use k2n::dto::{PresentationJson, TreeStructureJson, WitnessJson};
use k2n::format::{parse_edge_list, parse_graph, parse_json, to_edge_list, to_json};
use k2n_core::budget::Budget;
use k2n_core::minor::max_k2;
use k2n_core::sum::decompose;
use k2n_core::fanstrip::random_augmentation;
use k2n_core::Graph;
use proptest::prelude::*;

fn graphs() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |e| {
            let e: Vec<_> = e.into_iter().filter(|(a, b)| a != b).collect();
            Graph::from_edges(n, &e).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_through_json_is_exact(g in graphs()) {
        let text = to_edge_list(&g);
        let via = parse_json(&to_json(&parse_edge_list(&text).unwrap())).unwrap();
        prop_assert_eq!(to_edge_list(&via), text.clone());
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn presentation_json_round_trips(seed in 0u64..500) {
        let p = random_augmentation(5, seed).unwrap();
        let j = serde_json::to_string(&PresentationJson::from(&p)).unwrap();
        let back: PresentationJson = serde_json::from_str(&j).unwrap();
        let q = back.to_presentation().unwrap();
        prop_assert_eq!(q.augment().unwrap(), p.augment().unwrap());
    }
}

#[test]
fn tree_structure_and_witness_json_round_trip() {
    let g = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n0 4\n1 5\n").unwrap();
    let t = decompose(&g, &[]).unwrap().theta;
    let j = serde_json::to_string(&TreeStructureJson::from(&t)).unwrap();
    let back: TreeStructureJson = serde_json::from_str(&j).unwrap();
    assert_eq!(back.to_tree().unwrap(), t);

    let (_, w) = max_k2(&g, &mut Budget::unlimited()).unwrap();
    let w = w.unwrap();
    let j = serde_json::to_string(&WitnessJson::from(&w)).unwrap();
    let back: WitnessJson = serde_json::from_str(&j).unwrap();
    assert_eq!(k2n_core::minor::K2nWitness::from(back), w);
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(parse_edge_list("0 1 2\n").is_err());
    assert!(parse_edge_list("0 0\n").is_err());
    assert!(parse_edge_list("# n 2\n0 5\n").is_err());
    assert!(parse_json("{\"n\": 2, \"edges\": [[0, 3]]}").is_err());
    assert!(parse_json("{\"n\": 2}").is_err());
}
