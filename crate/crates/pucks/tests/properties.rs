//! Property tests for the structural invariants: edit operations and their
//! inverses, sign behavior, path statistics, serialization round trips, and
//! the involution itself on randomly chosen universe elements.

use proptest::prelude::*;

use pucks::exact::Composition;
use pucks::involution::{enumerate_universe, TauCase};
use pucks::lattice::{ascent_set, concat, path_stats, shift, slice, LatticeSequence};
use pucks::tableau::LabeledTableau;

fn arb_composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=9, 0..8).prop_map(|parts| Composition::new(parts).unwrap())
}

/// Nonempty composition whose first part is at least 2.
fn arb_comp_first_ge2() -> impl Strategy<Value = Composition> {
    (2usize..=9, prop::collection::vec(1usize..=9, 0..7)).prop_map(|(first, mut rest)| {
        rest.insert(0, first);
        Composition::new(rest).unwrap()
    })
}

/// A valid tableau: bound in 1..=5, parts in 1..=bound+1, rows drawn as
/// subsequences of 0..bound (already sorted and distinct).
fn arb_tableau() -> impl Strategy<Value = LabeledTableau> {
    (1usize..=5)
        .prop_flat_map(|bound| {
            let parts = prop::collection::vec(1usize..=bound + 1, 0..5);
            (Just(bound), parts)
        })
        .prop_flat_map(|(bound, parts)| {
            let labels: Vec<usize> = (0..bound).collect();
            let rows: Vec<_> = parts
                .iter()
                .map(|&p| prop::sample::subsequence(labels.clone(), p - 1))
                .collect();
            (Just(bound), Just(parts), rows)
        })
        .prop_map(|(bound, parts, rows)| {
            LabeledTableau::new(Composition::new(parts).unwrap(), rows, bound).unwrap()
        })
}

fn arb_sequence() -> impl Strategy<Value = LatticeSequence> {
    prop::collection::vec(0i64..=15, 1..12).prop_map(|mut tail| {
        tail.sort_unstable();
        let mut entries = vec![0];
        entries.extend(tail);
        LatticeSequence::new(entries).unwrap()
    })
}

proptest! {
    #[test]
    fn prepend_two_always_flips_sign(alpha in arb_composition()) {
        prop_assert_eq!(alpha.prepend_two().sign(), -alpha.sign());
        prop_assert_eq!(alpha.prepend_two().shrink_first().unwrap(), alpha);
    }

    #[test]
    fn first_part_edits_flip_sign_and_invert(alpha in arb_comp_first_ge2()) {
        prop_assert_eq!(alpha.extend_first().unwrap().sign(), -alpha.sign());
        prop_assert_eq!(alpha.shrink_first().unwrap().sign(), -alpha.sign());
        prop_assert_eq!(alpha.extend_first().unwrap().shrink_first().unwrap(), alpha.clone());
    }

    #[test]
    fn composition_json_round_trip(alpha in arb_composition()) {
        let json = serde_json::to_string(&alpha).unwrap();
        let back: Composition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, alpha);
    }

    #[test]
    fn tableau_edits_invert(t in arb_tableau(), a in 0usize..5) {
        prop_assume!(a < t.bound());
        let up = t.oplus(a).unwrap();
        prop_assert_eq!(up.shrink().unwrap(), t.clone());
        prop_assert_eq!(up.first_label().unwrap(), a);
        prop_assert_eq!(up.sign(), -t.sign());

        if let Ok(first) = t.first_label() {
            if a < first {
                let right = t.plus(a).unwrap();
                prop_assert_eq!(right.shrink().unwrap(), t.clone());
                prop_assert_eq!(right.sign(), -t.sign());
            }
        }
    }

    #[test]
    fn tableau_sign_is_shape_sign(t in arb_tableau()) {
        prop_assert_eq!(t.sign(), t.shape().sign());
    }

    #[test]
    fn tableau_json_round_trip(t in arb_tableau()) {
        let json = serde_json::to_string(&t).unwrap();
        let back: LabeledTableau = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn stats_identity_holds(l in arb_sequence(), eta_frac in 0.0f64..1.0) {
        let eta = ((l.width() as f64) * eta_frac) as usize;
        let s = path_stats(&l, eta).unwrap();
        prop_assert_eq!(s.mu, eta as i64 - 1 - s.gamma);
        prop_assert!(s.omega >= 0);
        prop_assert!(s.gamma >= -1);
        prop_assert!(s.mu >= 0);
        // gamma is the largest ascent of the prefix, which is the set of
        // full-sequence ascents west of eta.
        let west: Vec<usize> = ascent_set(l.entries())
            .into_iter()
            .filter(|&i| i + 1 <= eta)
            .collect();
        prop_assert_eq!(ascent_set(&l.entries()[..=eta]), west);
    }

    #[test]
    fn slice_concat_shift_identities(l in arb_sequence(), cut_frac in 0.0f64..1.0, a in -5i64..=5) {
        let entries = l.entries();
        let last = entries.len() - 1;
        let cut = ((last - 1) as f64 * cut_frac) as usize;
        let glued = concat(
            &slice(entries, 0, cut).unwrap(),
            &slice(entries, cut + 1, last).unwrap(),
        );
        prop_assert_eq!(glued, entries.to_vec());
        prop_assert_eq!(shift(&shift(entries, a), -a), entries.to_vec());
    }

    #[test]
    fn sequence_json_round_trip(l in arb_sequence()) {
        let json = serde_json::to_string(&l).unwrap();
        let back: LatticeSequence = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn tau_is_a_sign_reversing_involution(
        k in 0usize..=3,
        n in 0usize..=2,
        r in 0usize..=3,
        pick in 0.0f64..1.0,
    ) {
        let universe = enumerate_universe(k, n, r);
        let index = ((universe.len() - 1) as f64 * pick) as usize;
        let x = &universe[index];
        let y = x.tau();
        prop_assert_eq!(&y.tau(), x);
        if &y == x {
            prop_assert_eq!(x.weight(), 1);
            prop_assert!(x.tableau().is_empty());
            prop_assert_eq!(x.classify().case, TauCase::Fixed);
        } else {
            prop_assert_eq!(y.weight(), -x.weight());
            prop_assert!(universe.contains(&y));
        }
    }

    #[test]
    fn universe_element_json_round_trip(
        k in 0usize..=3,
        n in 0usize..=2,
        r in 0usize..=2,
        pick in 0.0f64..1.0,
    ) {
        let universe = enumerate_universe(k, n, r);
        let index = ((universe.len() - 1) as f64 * pick) as usize;
        let x = &universe[index];
        let json = serde_json::to_string(x).unwrap();
        let back: pucks::involution::LabeledLatticeSequence = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, x);
    }
}
