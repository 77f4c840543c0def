mod common;

use common::*;
use expnet::coding::OrthogonalArray;
use expnet::constructions::{nonsingular_matrix_for_graph, random_linear_strategy, twisted_lex_network};
use expnet::expansivity::{
    expansion_frequency, expansion_time, is_expansive, is_expansive_linear, is_quasi_expansive,
    is_super_expansive, is_weakly_expansive, observability_matrix, Dynamics, Observer,
};
use expnet::networks::cartesian_product;
use expnet::{Caps, Digraph, Matrix, Network, Ring};
use num_rational::Ratio;
use proptest::prelude::*;

fn small_field() -> impl Strategy<Value = (usize, u32)> {
    prop_oneof![Just((2, 2)), Just((2, 3)), Just((3, 2)), Just((2, 4)), Just((3, 3)), Just((2, 5))]
}

fn field_matrix() -> impl Strategy<Value = Matrix> {
    small_field().prop_flat_map(|(n, q)| {
        proptest::collection::vec(0..q, n * n)
            .prop_map(move |data| Matrix::new(Ring::field(q).unwrap(), n, n, data).unwrap())
    })
}

fn permutation_network() -> impl Strategy<Value = Network> {
    prop_oneof![Just((2usize, 2u32)), Just((2, 3)), Just((3, 2))].prop_flat_map(|(n, q)| {
        let size = (q as usize).pow(n as u32);
        Just((0..size).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |succ| Network::table(n, q, succ).unwrap())
    })
}

fn digraph(n: usize) -> impl Strategy<Value = Digraph> {
    proptest::collection::vec(any::<bool>(), n * n)
        .prop_map(move |bits| Digraph::new(n, (0..n * n).filter(|&k| bits[k]).map(|k| (k / n, k % n))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_and_table_forms_agree(m in field_matrix()) {
        let caps = Caps::default();
        let f = Network::linear(m).unwrap();
        let t = f.to_table(&caps).unwrap();
        for x in configs(f.n(), f.q()) {
            prop_assert_eq!(f.apply(&x).unwrap(), t.apply(&x).unwrap());
            prop_assert_eq!(f.orbit(&x).unwrap(), t.orbit(&x).unwrap());
        }
        prop_assert_eq!(f.interaction_graph(&caps).unwrap(), t.interaction_graph(&caps).unwrap());
        prop_assert_eq!(is_expansive(&f, &caps).unwrap(), is_expansive(&t, &caps).unwrap());
    }

    #[test]
    fn determinant_conditions_are_equivalent(m in field_matrix()) {
        let c = is_expansive_linear(&m).unwrap();
        let n = m.rows();
        for t in 1..=3u64 {
            let mt = m.pow(t).unwrap();
            let all_t = (0..n).all(|u| {
                mt.mul(&observability_matrix(&m, u).unwrap()).unwrap().det().unwrap() != 0
            });
            prop_assert_eq!(all_t, c.holds);
        }
    }

    #[test]
    fn expansive_implies_weaker_notions(f in permutation_network()) {
        let caps = Caps::default();
        if is_expansive(&f, &caps).unwrap() {
            prop_assert!(f.is_bijective(&caps).unwrap());
            prop_assert!(is_weakly_expansive(&f, &caps).unwrap());
            prop_assert!(is_quasi_expansive(&f, &caps).unwrap());
            let t = expansion_time(&f, &caps).unwrap().time;
            let size = (f.q() as usize).pow(f.n() as u32);
            prop_assert!(t >= f.n());
            prop_assert!(t <= size - 2);
            let phi = expansion_frequency(&f, &caps).unwrap().frequency;
            let (q, s) = (f.q() as u64, size as u64);
            prop_assert!(phi >= Ratio::new(1, t as u64));
            prop_assert!(phi <= Ratio::new(s - q, s - 1));
            prop_assert!(phi <= Ratio::new((q - 1) * s / q, s - 1));
        }
    }

    #[test]
    fn field_linear_expansive_is_strong(m in field_matrix()) {
        let caps = Caps::default();
        if is_expansive_linear(&m).unwrap().holds {
            let f = Network::linear(m).unwrap();
            prop_assert_eq!(expansion_time(&f, &caps).unwrap().time, f.n());
        }
    }

    #[test]
    fn trace_period_is_orbit_length(f in permutation_network()) {
        let caps = Caps::default();
        if is_expansive(&f, &caps).unwrap() {
            for x in configs(f.n(), f.q()) {
                let l = f.orbit(&x).unwrap().cycle;
                for v in 0..f.n() {
                    let tr = trace(&f, &x, v, 2 * l);
                    let period = (1..=l).find(|&p| (0..l).all(|i| tr[i] == tr[i + p])).unwrap();
                    prop_assert_eq!(period, l);
                }
            }
        }
    }

    #[test]
    fn refinement_rounds_are_monotone(f in permutation_network(), v in 0usize..2) {
        let d = Dynamics::new(&f, &Caps::default()).unwrap();
        for obs in [Observer::Positive { vertex: v }, Observer::Weak { vertex: v }] {
            let r = d.refine(&obs, true).unwrap();
            let h = r.history.unwrap();
            prop_assert!(h.windows(2).all(|w| w[1].refines(&w[0]) && w[1] != w[0]));
            prop_assert_eq!(r.separated, r.depth.is_some());
        }
    }

    #[test]
    fn nonsingular_construction_has_exact_support(d in digraph(4), q in 3u32..8) {
        match nonsingular_matrix_for_graph(&d, q) {
            Ok(m) => {
                prop_assert!(d.is_coverable());
                prop_assert_eq!(m.det().unwrap(), 1);
                prop_assert_eq!(leibniz_det(&m.to_rows(), q), 1);
                prop_assert_eq!(Network::linear(m).unwrap().interaction_graph(&Caps::default()).unwrap(), d);
            }
            Err(_) => prop_assert!(!d.is_coverable()),
        }
    }

    #[test]
    fn random_strategy_support(d in digraph(3), seed in any::<u64>()) {
        let f = random_linear_strategy(&d, 5, seed).unwrap();
        prop_assert_eq!(f.interaction_graph(&Caps::default()).unwrap(), d);
    }

    #[test]
    fn product_keeps_shared_interaction_graph(seed in any::<u64>()) {
        let caps = Caps::default();
        let d = expnet::graphs::families::cycle_with_loops(2, &[0]).unwrap();
        let f = random_linear_strategy(&d, 2, seed).unwrap();
        let g = random_linear_strategy(&d, 3, seed).unwrap();
        let h = cartesian_product(&f, &g, &caps).unwrap();
        prop_assert_eq!(h.interaction_graph(&caps).unwrap(), d);
    }

    #[test]
    fn network_text_round_trips(f in permutation_network()) {
        let caps = Caps::default();
        prop_assert_eq!(Network::parse(&f.to_text(), &caps).unwrap(), f);
    }

    #[test]
    fn matrix_and_graph_text_round_trip(m in field_matrix(), d in digraph(4)) {
        prop_assert_eq!(Matrix::parse(&m.to_text()).unwrap(), m.clone());
        let f = Network::linear(m).unwrap();
        prop_assert_eq!(Network::parse(&f.to_text(), &Caps::default()).unwrap(), f);
        prop_assert_eq!(Digraph::parse(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn strength_matches_super_expansivity(m in field_matrix()) {
        let caps = Caps::default();
        let f = Network::linear(m).unwrap();
        let oa = OrthogonalArray::orbit_array(&f, &caps).unwrap();
        let sup = is_super_expansive(&f, &caps).unwrap().holds;
        prop_assert_eq!(oa.check_oa(f.n()), sup);
        if (f.q() as usize) <= f.n() * f.n() - f.n() {
            prop_assert!(!oa.check_oa(f.n()));
        }
        if sup {
            let code = oa.code().unwrap();
            prop_assert_eq!(code.min_distance().unwrap(), f.n() * f.n() - f.n() + 1);
            prop_assert!(code.is_mds().unwrap());
        }
    }
}

#[test]
fn twisted_lex_is_a_single_cycle() {
    let caps = Caps::default();
    for (n, q) in [(1, 2), (1, 5), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (2, 7)] {
        let f = twisted_lex_network(n, q, &caps).unwrap();
        let o = f.orbit(&expnet::Configuration::zero(n)).unwrap();
        assert_eq!((o.tail, o.cycle), (0, (q as usize).pow(n as u32)));
    }
}

#[test]
fn non_admissible_graphs_are_never_quasi_expansive() {
    use rand::SeedableRng;
    let caps = Caps::default();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
    for d in all_digraphs(3).filter(|d| !(d.is_strong() && d.is_coverable())).step_by(7) {
        for _ in 0..5 {
            let f = random_local_network(&d, 2, &mut rng);
            assert!(!is_quasi_expansive(&f, &caps).unwrap(), "{d:?}");
        }
    }
}
