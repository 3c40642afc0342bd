//! Random periodic permutations checked against direct window simulation.

use proptest::prelude::*;

use riemann_profiles::{Permutation, Sheet, SheetSet};

fn periodic_perm(p: usize) -> impl Strategy<Value = Permutation> {
    let residues = Just((0..p as Sheet).collect::<Vec<_>>()).prop_shuffle();
    let offsets = prop::collection::vec(-3i64..=3, p);
    (residues, offsets).prop_map(move |(res, offs)| {
        let image0: Vec<Sheet> = res
            .iter()
            .zip(&offs)
            .map(|(&r, &k)| r + k * p as Sheet)
            .collect();
        Permutation::periodic_from_images(p, image0).unwrap()
    })
}

fn pair_same_period() -> impl Strategy<Value = (usize, Permutation, Permutation)> {
    (1..=4usize).prop_flat_map(|p| (Just(p), periodic_perm(p), periodic_perm(p)))
}

/// The p-periodic extension of an image vector, computed independently of
/// the library's representation.
fn naive_apply(image0: &[Sheet], p: usize, j: Sheet) -> Sheet {
    let r = j.rem_euclid(p as Sheet);
    image0[r as usize] + (j - r)
}

proptest! {
    #[test]
    fn compose_matches_window_simulation((p, a, b) in pair_same_period()) {
        let ab = a.compose(&b).unwrap();
        let w = 3 * p as Sheet;
        for j in -w..=w {
            prop_assert_eq!(ab.apply(j), b.apply(a.apply(j)));
        }
    }

    #[test]
    fn identity_is_neutral_and_inverse_cancels((p, a, _b) in pair_same_period()) {
        let id = Permutation::identity(SheetSet::PeriodicIntegers(p));
        prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
        let w = 3 * p as Sheet;
        let inv = a.inverse();
        for j in -w..=w {
            prop_assert_eq!(inv.apply(a.apply(j)), j);
        }
    }

    /// The constructor's residue-bijectivity check accepts an image vector
    /// exactly when the naive periodic extension is injective on a window.
    /// Images drift at most two periods, so a residue collision always
    /// produces a visible collision inside the 3p window.
    #[test]
    fn bijectivity_check_agrees_with_window_injectivity(
        (p, image0) in (1..=4usize).prop_flat_map(|p| {
            let entry = (0..p as Sheet, -2i64..=2)
                .prop_map(move |(r, off)| r + off * p as Sheet);
            (Just(p), prop::collection::vec(entry, p))
        })
    ) {
        let accepted = Permutation::periodic_from_images(p, image0.clone()).is_ok();
        let w = 3 * p as Sheet;
        let images: Vec<Sheet> = (-w..=w).map(|j| naive_apply(&image0, p, j)).collect();
        let mut sorted = images.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let injective = sorted.len() == images.len();
        prop_assert_eq!(accepted, injective);
    }

    /// Accepted permutations agree pointwise with the naive extension.
    #[test]
    fn representation_matches_naive_extension((p, a, _b) in pair_same_period()) {
        let image0: Vec<Sheet> = (0..p as Sheet).map(|r| a.apply(r)).collect();
        let w = 3 * p as Sheet;
        for j in -w..=w {
            prop_assert_eq!(a.apply(j), naive_apply(&image0, p, j));
        }
    }
}
