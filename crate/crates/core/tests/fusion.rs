use std::collections::BTreeSet;

use proptest::prelude::*;
use wang_core::corpus::{omega, tileset_u, tileset_v};
use wang_core::{
    dominoes_with_surrounding, fuse_sets, patterns_with_surrounding, trim_tileset, Axis, Transducer,
    WangTile, WangTileSet, Word2d,
};

fn arb_set() -> impl Strategy<Value = WangTileSet> {
    prop::collection::vec((0u8..3, 0u8..3, 0u8..3, 0u8..3), 1..=5).prop_filter_map("duplicates", |raw| {
        let mut tiles: Vec<WangTile> = raw
            .into_iter()
            .map(|(r, t, l, b)| {
                WangTile::from_tokens(&format!("{r}"), &format!("{}", (b'a' + t) as char), &format!("{l}"), &format!("{}", (b'a' + b) as char))
                    .unwrap()
            })
            .collect();
        tiles.sort();
        tiles.dedup();
        WangTileSet::new(tiles).ok()
    })
}

fn tiles(s: &WangTileSet) -> BTreeSet<WangTile> {
    s.tiles().iter().cloned().collect()
}

proptest! {
    #[test]
    fn dual_is_an_involution(s in arb_set()) {
        prop_assert_eq!(s.dual().dual(), s);
    }

    #[test]
    fn dual_swaps_fusion_directions(a in arb_set(), b in arb_set()) {
        prop_assert_eq!(tiles(&fuse_sets(&a, &b, Axis::E1).dual()), tiles(&fuse_sets(&a.dual(), &b.dual(), Axis::E2)));
        prop_assert_eq!(tiles(&fuse_sets(&a, &b, Axis::E2).dual()), tiles(&fuse_sets(&a.dual(), &b.dual(), Axis::E1)));
    }

    #[test]
    fn transducer_composition_is_vertical_fusion(a in arb_set(), b in arb_set()) {
        let composed = Transducer::from_tileset(&a).compose(&Transducer::from_tileset(&b));
        let as_set: BTreeSet<WangTile> = composed.transitions().iter().map(|t| t.to_tile()).collect();
        prop_assert_eq!(as_set, tiles(&fuse_sets(&a, &b, Axis::E2)));
    }

    #[test]
    fn dominoes_transport_through_the_dual(s in arb_set(), r in 0usize..=2) {
        prop_assert_eq!(dominoes_with_surrounding(&s, Axis::E1, r), dominoes_with_surrounding(&s.dual(), Axis::E2, r));
        prop_assert_eq!(dominoes_with_surrounding(&s, Axis::E2, r), dominoes_with_surrounding(&s.dual(), Axis::E1, r));
    }

    #[test]
    fn trimming_keeps_a_subset(s in arb_set()) {
        for axis in [Axis::E1, Axis::E2] {
            let t = trim_tileset(&s, axis);
            prop_assert!(tiles(&t).is_subset(&tiles(&s)));
            prop_assert_eq!(trim_tileset(&t, axis), t);
        }
    }
}

#[test]
fn domino_counts_shrink_then_settle() {
    let u = tileset_u();
    let sizes: Vec<usize> = (1..=4).map(|r| dominoes_with_surrounding(&u, Axis::E2, r).len()).collect();
    assert!(sizes.windows(2).all(|w| w[1] <= w[0]));
    assert_eq!(sizes[2], sizes[3]);
    let v = tileset_v();
    let sizes: Vec<usize> = (1..=3).map(|r| dominoes_with_surrounding(&v, Axis::E1, r).len()).collect();
    assert!(sizes.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn radius_two_patterns_are_the_factors() {
    let u = tileset_u();
    let p: BTreeSet<Word2d> = patterns_with_surrounding(&u, (2, 2), 2).unwrap().into_iter().collect();
    assert_eq!(p, omega().factors_2x2().unwrap());
    let r1 = patterns_with_surrounding(&u, (2, 2), 1).unwrap();
    assert!(p.iter().all(|w| r1.contains(w)));
}

#[test]
fn factors_lie_in_iterates() {
    let big = omega().iterate(4, 6).unwrap();
    let seen = big.subwords((2, 2));
    let factors = omega().factors_2x2().unwrap();
    let squares: BTreeSet<Word2d> = factors.into_iter().filter(|w| w.shape() == (2, 2)).collect();
    assert!(seen.is_subset(&squares));
}
