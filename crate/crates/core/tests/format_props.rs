//! Parser totality and round-trip properties for the `.prof` format.

use proptest::prelude::*;

use riemann_profiles::{
    parse_profile, parse_profile_bytes, render_diagram, serialize_explicit, serialize_profile,
    Constellation, DiagramStyle, DocumentBody, Permutation, ProfileDocument, ProfileGraph, Sheet,
};

fn finite_perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as Sheet).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|image| Permutation::finite_from_images(image).unwrap())
}

fn finite_constellation_strategy() -> impl Strategy<Value = Constellation> {
    (1..=5usize, 1..=5usize).prop_flat_map(|(n, q)| {
        prop::collection::vec(finite_perm_strategy(n), q)
            .prop_map(|sigmas| Constellation::new(sigmas).unwrap())
    })
}

fn periodic_perm_strategy(p: usize) -> impl Strategy<Value = Permutation> {
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

fn periodic_constellation_strategy() -> impl Strategy<Value = Constellation> {
    (1..=4usize, 1..=4usize).prop_flat_map(|(p, q)| {
        prop::collection::vec(periodic_perm_strategy(p), q)
            .prop_map(|sigmas| Constellation::new(sigmas).unwrap())
    })
}

proptest! {
    #[test]
    fn parser_total_on_arbitrary_bytes(bytes in prop::collection::vec(any::<u8>(), 0..300)) {
        let _ = parse_profile_bytes(&bytes);
    }

    #[test]
    fn parser_total_on_plausible_lines(
        lines in prop::collection::vec(
            prop::sample::select(vec![
                "PROFILE v1", "SHEETS FINITE 2", "SHEETS PERIODIC 2", "COLUMNS 2",
                "SIGMA 1 = (1 2)", "SIGMA 2 = ()", "SIGMA 1 = MAP 0->1 1->0",
                "EDGE 1 1", "EDGE 2 2", "ARC 1 1 > 2", "ARC 2 2 > 1",
                "# comment", "", "SIGMA", "EDGE 1", "(1 2)", "= ()",
            ]),
            0..12,
        )
    ) {
        let text = lines.join("\n");
        let _ = parse_profile(&text);
    }

    #[test]
    fn finite_documents_round_trip(c in finite_constellation_strategy()) {
        let doc = ProfileDocument::from_constellation(c);
        let text = serialize_profile(&doc).unwrap();
        let parsed = parse_profile(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        // canonical serialization is idempotent
        prop_assert_eq!(serialize_profile(&parsed).unwrap(), text);
    }

    #[test]
    fn periodic_documents_round_trip(c in periodic_constellation_strategy()) {
        let doc = ProfileDocument::from_constellation(c);
        let text = serialize_profile(&doc).unwrap();
        let parsed = parse_profile(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(serialize_profile(&parsed).unwrap(), text);
    }

    #[test]
    fn explicit_form_round_trips_for_valid_profiles(c in finite_constellation_strategy()) {
        prop_assume!(c.is_transitive());
        let doc = ProfileDocument::from_constellation(c.clone());
        let explicit_text = serialize_explicit(&doc).unwrap();
        let parsed = parse_profile(&explicit_text).unwrap();
        let is_explicit = matches!(parsed.body, DocumentBody::Explicit { .. });
        prop_assert!(is_explicit);
        prop_assert_eq!(serialize_explicit(&parsed).unwrap(), explicit_text);
        // converting the explicit document back to sigma recovers the original
        prop_assert_eq!(
            serialize_profile(&parsed).unwrap(),
            serialize_profile(&doc).unwrap()
        );
    }

    #[test]
    fn renderer_is_deterministic(c in finite_constellation_strategy()) {
        let profile = ProfileGraph::from_constellation(c);
        for style in [DiagramStyle::Dot, DiagramStyle::Svg] {
            let a = render_diagram(&profile, style, None);
            let b = render_diagram(&profile, style, None);
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn periodic_renderer_is_deterministic(c in periodic_constellation_strategy()) {
        let profile = ProfileGraph::from_constellation(c);
        for style in [DiagramStyle::Dot, DiagramStyle::Svg] {
            let a = render_diagram(&profile, style, None);
            let b = render_diagram(&profile, style, None);
            prop_assert_eq!(a, b);
        }
    }
}
