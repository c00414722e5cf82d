use proptest::prelude::*;

use spectral_core::drazin::{proof_identities, reverse_transfer, transfer};
use spectral_core::genlab::{generate, rational_spectrum_instance, GenSpec, Template};
use spectral_core::intertwine::{
    check_condition, default_inclusion_polys, default_probes, inclusion_lemma,
    nonzero_charpoly_match, power_identity, shift_poly_check, verify_sequence_equalities,
    verify_theorem, OperatorTriple, ShiftedPair,
};
use spectral_core::ratmat::rat;

const CONFORMING: [Template; 4] = [
    Template::CEqualsB,
    Template::AbaEqAca,
    Template::Conjugated,
    Template::DirectSum,
];

fn triple() -> impl Strategy<Value = OperatorTriple> {
    (prop::sample::select(CONFORMING.to_vec()), 2usize..=4, 2usize..=4, any::<u64>())
        .prop_map(|(t, dx, dy, seed)| generate(&GenSpec::new(t, dx, seed).with_dim_y(dy)).unwrap())
}

fn spectral_triple() -> impl Strategy<Value = OperatorTriple> {
    (2usize..=4, 2usize..=4, any::<u64>()).prop_map(|(dx, dy, seed)| {
        rational_spectrum_instance(&GenSpec::new(Template::AbaEqAca, dx, seed).with_dim_y(dy)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generated_triples_satisfy_the_condition(t in triple()) {
        prop_assert!(check_condition(&t).holds);
        for k in 0..=3 {
            prop_assert!(power_identity(&t, k).unwrap());
        }
    }

    #[test]
    fn inclusions_hold(t in triple()) {
        for q in default_inclusion_polys() {
            prop_assert!(inclusion_lemma(&t, &q).unwrap().all(), "Q = {}", q);
        }
    }

    #[test]
    fn sequences_and_maps_agree(t in spectral_triple()) {
        let n_max = t.dim_x().max(t.dim_y());
        for lambda in default_probes(&t).unwrap().into_iter().filter(|l| *l != rat(0)) {
            let r = verify_sequence_equalities(&t, &lambda, n_max).unwrap();
            prop_assert!(r.holds() && r.totals_hold() && r.degrees_hold(), "λ = {}", lambda);
            let pair = ShiftedPair::new(&t, &lambda).unwrap();
            for n in 0..=n_max {
                for map in [pair.gamma(n).unwrap(), pair.psi(n).unwrap(), pair.phi(n).unwrap()] {
                    prop_assert!(map.injective_by_rank());
                    prop_assert!(map.injective_by_preimage());
                }
            }
        }
    }

    #[test]
    fn memberships_agree_at_every_probe(t in spectral_triple()) {
        let probes = default_probes(&t).unwrap();
        prop_assert!(verify_theorem(&t, &probes).unwrap().holds());
    }

    #[test]
    fn nonzero_spectra_match(t in triple()) {
        prop_assert!(nonzero_charpoly_match(&t).unwrap());
    }

    #[test]
    fn shift_polynomials_preserve_the_condition(t in triple()) {
        for n in 1..=4 {
            prop_assert!(shift_poly_check(&t, n).unwrap().holds(), "n = {}", n);
        }
    }

    #[test]
    fn drazin_transfers_both_ways(t in triple()) {
        let r = transfer(&t).unwrap();
        prop_assert!(r.verified && r.matches_oracle);
        prop_assert!(proof_identities(&t).unwrap().holds());
        let rev = reverse_transfer(&t).unwrap();
        prop_assert!(rev.verified && rev.matches_oracle);
    }
}

#[test]
fn nonconforming_triples_can_break_the_equalities() {
    let found = (0..40u64).any(|seed| {
        let t = generate(&GenSpec::new(Template::Nonconforming, 3, seed)).unwrap();
        let lambdas: Vec<_> = default_probes(&t).unwrap().into_iter().filter(|l| *l != rat(0)).collect();
        lambdas.iter().any(|l| {
            spectral_core::intertwine::compare_sequences(&t, l, 3).is_ok_and(|r| !r.holds())
        })
    });
    assert!(found);
}
