//! Cross-module properties checked on randomized inputs: ring laws for the
//! polynomial type, agreement between the recursion and the enumeration
//! oracles, text round trips, and the structural identities tying posets,
//! their ideals and their graphs together.

use num_bigint::BigInt;
use proptest::prelude::*;

use indalg::hilbert::{
    antichain_polynomial_fast, check_numerator_conformance, independence_polynomial,
};
use indalg::interpolation::{recover_coefficients, EvaluationRoute};
use indalg::polynomial::parse_rational;
use indalg::poset_ideal::{enumerate_variety, groebner_basis, jp_generators, leading_term_ideal};
use indalg::monomial_ideal::modified_edge_ideal;
use indalg::{Graph, HilbertOptions, Polynomial, Poset};

fn arb_polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-20i64..=20, 0..8).prop_map(|c| Polynomial::from_i64(&c))
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut idx = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[idx] {
                        g.add_edge(i, j).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    // relations only point upward in the index order, so closure never cycles
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut idx = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[idx] {
                        pairs.push((i, j));
                    }
                    idx += 1;
                }
            }
            Poset::from_relations(n, &pairs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn polynomial_ring_laws(a in arb_polynomial(), b in arb_polynomial(), c in arb_polynomial()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&Polynomial::one()), a.clone());
        prop_assert_eq!(a.add(&Polynomial::zero()), a.clone());
    }

    #[test]
    fn division_inverts_multiplication(a in arb_polynomial(), b in arb_polynomial()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in arb_polynomial(), b in arb_polynomial(),
                                         num in -9i64..=9, den in 1i64..=9) {
        let t = parse_rational(&format!("{}/{}", num, den)).unwrap();
        prop_assert_eq!(a.mul(&b).eval_rational(&t), a.eval_rational(&t) * b.eval_rational(&t));
        prop_assert_eq!(a.add(&b).eval_rational(&t), a.eval_rational(&t) + b.eval_rational(&t));
    }

    #[test]
    fn independence_polynomial_matches_enumeration(g in arb_graph(9)) {
        let fast = independence_polynomial(&g, HilbertOptions::default()).unwrap();
        prop_assert_eq!(fast.series.unwrap(), g.independence_polynomial_oracle());
        prop_assert!(check_numerator_conformance(&g, HilbertOptions::default()).unwrap());
    }

    #[test]
    fn graph_text_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(Graph::parse(&g.render()).unwrap(), g);
    }

    #[test]
    fn poset_text_round_trip(p in arb_poset(10)) {
        prop_assert_eq!(Poset::parse(&p.render()).unwrap(), p);
    }

    #[test]
    fn antichain_polynomial_matches_enumeration(p in arb_poset(9)) {
        let fast = antichain_polynomial_fast(&p, HilbertOptions::default()).unwrap();
        prop_assert_eq!(fast, p.antichain_polynomial_oracle());
    }

    #[test]
    fn groebner_lead_terms_give_comparability_edge_ideal(p in arb_poset(8)) {
        prop_assert_eq!(
            leading_term_ideal(&p),
            modified_edge_ideal(&p.comparability_graph())
        );
        // one basis element per lead term: n squares plus one per comparable pair
        let gb = groebner_basis(&p);
        prop_assert_eq!(gb.binomials.len(), leading_term_ideal(&p).num_gens());
    }

    #[test]
    fn variety_size_counts_antichains(p in arb_poset(8)) {
        let points = enumerate_variety(&jp_generators(&p), p.n()).unwrap();
        prop_assert_eq!(points.len() as u64, p.count_antichains());
    }

    #[test]
    fn chain_substitution_scales_the_argument(p in arb_poset(6), m in 1usize..=3) {
        let opts = HilbertOptions::default();
        let doubled = p.lex_product(&indalg::poset::chain(m).unwrap());
        let left = antichain_polynomial_fast(&doubled, opts).unwrap();
        let right = antichain_polynomial_fast(&p, opts)
            .unwrap()
            .scale_argument(&BigInt::from(m));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn interpolation_recovers_the_polynomial(p in arb_poset(5), num in -5i64..=5, den in 1i64..=4) {
        prop_assume!(num != 0);
        let t = parse_rational(&format!("{}/{}", num, den)).unwrap();
        let rec = recover_coefficients(&p, &t, EvaluationRoute::Both,
                                       HilbertOptions::default()).unwrap();
        prop_assert_eq!(
            rec.polynomial,
            antichain_polynomial_fast(&p, HilbertOptions::default()).unwrap()
        );
    }
}
