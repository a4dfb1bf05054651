use proptest::prelude::*;

use signhom::census::{canonical_code, cycle_edge_masks, negative_mask};
use signhom::density::{average_degree, mad};
use signhom::hom::{switch_hom, SolveOptions};
use signhom::verify::discharge::{discharge_audit, Ruleset};
use signhom::verify::scan::scan_structures;
use signhom::{girth_vector, make_k2k_m, switch, switching_equivalent, walk_sign, Sign, SignedGraph, SwitchSet};

/// Signed graph on 1..=8 vertices, each pair an edge with probability about
/// one half, plus a switch set.
fn signed_graph() -> impl Strategy<Value = (SignedGraph, SwitchSet)> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(0u8..4, pairs), prop::collection::vec(any::<bool>(), n)).prop_map(|(n, cells, xs)| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match cells[i] {
                        1 => edges.push((u, v, Sign::Pos)),
                        2 => edges.push((u, v, Sign::Neg)),
                        _ => {}
                    }
                    i += 1;
                }
            }
            let x = SwitchSet::new((0..n).filter(|&v| xs[v]));
            (SignedGraph::new(n, edges).unwrap(), x)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_twice_is_identity((g, x) in signed_graph()) {
        let once = switch(&g, &x).unwrap();
        prop_assert_eq!(switch(&once, &x).unwrap(), g);
    }

    #[test]
    fn cycle_signs_survive_switching((g, x) in signed_graph()) {
        let h = switch(&g, &x).unwrap();
        let diff = negative_mask(&g) ^ negative_mask(&h);
        for c in cycle_edge_masks(&g) {
            prop_assert_eq!((c & diff).count_ones() % 2, 0);
        }
        for e in g.edges() {
            let there_and_back = [e.u, e.v, e.u];
            prop_assert_eq!(walk_sign(&h, &there_and_back).unwrap(), Sign::Pos);
        }
    }

    #[test]
    fn equivalence_witness_is_valid((g, x) in signed_graph()) {
        let h = switch(&g, &x).unwrap();
        let w = switching_equivalent(&g, &h).unwrap();
        prop_assert!(w.is_some());
        prop_assert_eq!(switch(&g, &w.unwrap()).unwrap(), h);
    }

    #[test]
    fn girth_vector_is_switching_invariant((g, x) in signed_graph()) {
        let gv = girth_vector(&g);
        prop_assert_eq!(girth_vector(&switch(&g, &x).unwrap()), gv);
    }

    #[test]
    fn map_existence_is_switching_invariant((g, x) in signed_graph()) {
        let t = make_k2k_m(3).unwrap();
        let a = switch_hom(&g, &t, &SolveOptions::default()).unwrap().found();
        let b = switch_hom(&switch(&g, &x).unwrap(), &t, &SolveOptions::default()).unwrap().found();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mad_witness_attains_the_maximum((g, _x) in signed_graph()) {
        let cert = mad(&g).unwrap();
        prop_assert_eq!(average_degree(&g, &cert.witness), cert.mad);
        // no vertex subset beats the certificate
        for mask in 1u32..1 << g.n() {
            let s: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            prop_assert!(average_degree(&g, &s) <= cert.mad);
        }
    }

    #[test]
    fn structure_scan_ignores_signs((g, x) in signed_graph()) {
        let h = switch(&g, &x).unwrap();
        let a = scan_structures(&g);
        prop_assert!(a.revalidate(&g));
        let name = |v: usize| (v + 1).to_string();
        prop_assert_eq!(a.render(&name), scan_structures(&h).render(&name));
    }

    #[test]
    fn discharging_conserves_charge((g, _x) in signed_graph()) {
        for rules in [Ruleset::K6, Ruleset::K8] {
            let r = discharge_audit(&g, rules);
            prop_assert!(r.conserved());
            prop_assert_eq!(r.initial_total(), r.final_total());
        }
    }

    #[test]
    fn canonical_code_ignores_relabeling((g, _x) in signed_graph(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let relabeled = SignedGraph::new(g.n(), g.edges().iter().map(|e| (perm[e.u], perm[e.v], e.sign))).unwrap();
        prop_assert_eq!(canonical_code(&relabeled), canonical_code(&g));
    }
}
