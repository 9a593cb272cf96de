use chalgebra::chident::{ch_poly, sigma, t_multilinear};
use chalgebra::findim::{
    ch_degree, quotient, recover_weights, trace_kernel, truncated_polynomial, weighted_semisimple, TraceAlgebra,
};
use chalgebra::freetrace::{normalize, Word};
use chalgebra::genmat::is_trace_identity;
use chalgebra::pseudochar::chartable::rational_irreducible_characters;
use chalgebra::pseudochar::group::small_groups;
use chalgebra::pseudochar::{vanishes_t, PseudoCharTable};
use chalgebra::rational::q;
use chalgebra::strata::enumerate_types;
use proptest::prelude::*;

#[test]
fn weights_round_trip_up_to_five() {
    for n in 1..=5 {
        for s in enumerate_types(n) {
            let w = s.to_weighted();
            let a = weighted_semisimple(&w);
            assert_eq!(recover_weights(&a).unwrap(), w);
            assert_eq!(a.trace_of_one(), q(n as i64));
            let back = TraceAlgebra::from_json(&a.to_json()).unwrap();
            assert_eq!(recover_weights(&back).unwrap(), w);
        }
    }
}

#[test]
fn semisimple_ch_degree_and_dimension_bound() {
    for n in 1..=3 {
        for s in enumerate_types(n) {
            let a = weighted_semisimple(&s.to_weighted());
            assert_eq!(ch_degree(&a, 4), Some(n), "{s}");
            assert!(trace_kernel(&a).is_zero());
            assert!(a.dim() <= n * n);
        }
    }
}

#[test]
fn t_vanishes_above_the_degree() {
    for (name, g) in small_groups() {
        for c in rational_irreducible_characters(&g).unwrap() {
            let n = c[0] as usize;
            let p = PseudoCharTable::from_integers(g.clone(), n, &c).unwrap();
            for j in n + 1..=n + 2 {
                assert!(vanishes_t(&p, j), "{name} {c:?} T_{j}");
            }
            if n > 1 {
                assert!(!vanishes_t(&p, n), "{name} {c:?} T_{n} should not vanish");
            }
        }
    }
}

#[test]
fn sigma_above_size_vanishes_on_matrices() {
    for n in 1..=2 {
        assert!(is_trace_identity(&sigma(n + 1).unwrap(), n));
        assert!(!is_trace_identity(&sigma(n).unwrap(), n));
    }
    assert!(is_trace_identity(&t_multilinear(3).unwrap(), 2));
    assert!(is_trace_identity(&ch_poly(1).unwrap(), 1));
}

proptest! {
    #[test]
    fn quotient_by_trace_kernel_is_nondegenerate(k in 1usize..6, tr in proptest::collection::vec(-3i64..4, 6)) {
        let trace = (0..k).map(|i| q(tr[i])).collect();
        let a = truncated_polynomial(k, trace).unwrap();
        let kern = trace_kernel(&a);
        if !kern.contains(a.unit()) {
            let quo = quotient(&a, &kern).unwrap();
            prop_assert!(trace_kernel(&quo).is_zero());
            prop_assert_eq!(quo.dim(), k - kern.dim());
        }
    }

    #[test]
    fn nilpotent_kernel_of_truncated_algebras(k in 2usize..7, t0 in 1i64..5) {
        // trace supported on the unit: the kernel is the maximal ideal
        let mut trace = vec![q(0); k];
        trace[0] = q(t0);
        let a = truncated_polynomial(k, trace).unwrap();
        let kern = trace_kernel(&a);
        prop_assert_eq!(kern.dim(), k - 1);
        prop_assert_eq!(a.ideal_nilpotency(&kern, k + 1), Some(k));
    }

    #[test]
    fn cyclic_words_are_rotation_invariant(w in proptest::collection::vec(1u32..4, 1..8), r in 0usize..8) {
        let mut rot = w.clone();
        let len = rot.len();
        rot.rotate_left(r % len);
        prop_assert_eq!(normalize(&Word(w)), normalize(&Word(rot)));
    }
}
