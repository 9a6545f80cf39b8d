use proptest::prelude::*;
use wang_core::{dominoes_with_surrounding, patterns_with_surrounding, Axis, Pins, TilingSolver, WangTile, WangTileSet, Word2d};

fn tile_set(raw: Vec<(u8, u8, u8, u8)>) -> Option<WangTileSet> {
    let mut tiles: Vec<WangTile> = raw
        .into_iter()
        .map(|(r, t, l, b)| {
            WangTile::from_tokens(&format!("v{r}"), &format!("h{t}"), &format!("v{l}"), &format!("h{b}")).unwrap()
        })
        .collect();
    tiles.sort();
    tiles.dedup();
    WangTileSet::new(tiles).ok()
}

fn arb_set() -> impl Strategy<Value = WangTileSet> {
    prop::collection::vec((0u8..2, 0u8..3, 0u8..2, 0u8..3), 1..=4).prop_filter_map("duplicates", tile_set)
}

/// Counts tilings by listing every assignment and checking edges directly.
fn brute(set: &WangTileSet, w: usize, h: usize, pins: &Pins) -> Vec<Vec<Vec<usize>>> {
    let n = set.len();
    let t = set.tiles();
    let mut out = Vec::new();
    for code in 0..n.pow((w * h) as u32) {
        let mut c = code;
        let mut cols = vec![vec![0; h]; w];
        for x in 0..w {
            for y in 0..h {
                cols[x][y] = c % n;
                c /= n;
            }
        }
        let ok_h = (0..w - 1).all(|x| (0..h).all(|y| t[cols[x][y]].right == t[cols[x + 1][y]].left));
        let ok_v = (0..w).all(|x| (0..h - 1).all(|y| t[cols[x][y]].top == t[cols[x][y + 1]].bottom));
        let ok_p = pins.iter().all(|(&(x, y), &a)| cols[x][y] == a);
        if ok_h && ok_v && ok_p {
            out.push(cols);
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_brute_force(set in arb_set(), w in 1usize..=3, h in 1usize..=3, pin in any::<Option<(usize, usize, usize)>>()) {
        let mut pins = Pins::new();
        if let Some((x, y, a)) = pin {
            pins.insert((x % w, y % h), a % set.len());
        }
        let expected = brute(&set, w, h, &pins);
        let s = TilingSolver::new(&set);
        let got: Vec<Vec<Vec<usize>>> = s.enumerate(w, h, &pins).unwrap().iter().map(|x| x.columns().to_vec()).collect();
        prop_assert_eq!(&got, &expected);
        prop_assert_eq!(s.count(w, h, &pins).unwrap(), expected.len() as u128);
        prop_assert_eq!(s.exists(w, h, &pins).unwrap(), !expected.is_empty());
    }

    #[test]
    fn surroundings_shrink_with_radius(set in arb_set()) {
        for axis in [Axis::E1, Axis::E2] {
            let d1 = dominoes_with_surrounding(&set, axis, 1);
            let d2 = dominoes_with_surrounding(&set, axis, 2);
            prop_assert!(d2.iter().all(|p| d1.contains(p)));
        }
        let p0 = patterns_with_surrounding(&set, (1, 1), 0).unwrap();
        let p1 = patterns_with_surrounding(&set, (1, 1), 1).unwrap();
        prop_assert!(p1.iter().all(|p| p0.contains(p)));
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn surrounding_is_a_pinned_rectangle(set in arb_set(), r in 0usize..=1) {
        let s = TilingSolver::new(&set);
        for a in 0..set.len() {
            let mut pins = Pins::new();
            pins.insert((r, r), a);
            let side = 2 * r + 1;
            prop_assert_eq!(
                s.has_surrounding(&Word2d::letter(a), r).unwrap(),
                !brute(&set, side, side, &pins).is_empty()
            );
        }
    }
}
