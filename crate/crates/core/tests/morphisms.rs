use proptest::prelude::*;
use wang_core::corpus::{alpha, beta, gamma, omega, tileset_u, tileset_v, tileset_w};
use wang_core::render::{stone_layout, total_area, StoneGeometry};
use wang_core::spectral::GoldenNumber;
use wang_core::{Axis, Morphism2d, Pins, TilingSolver, Word2d};

/// Valid 2x3 and 3x2 patterns of `U`, used as inputs.
fn valid_patterns() -> Vec<Word2d> {
    let s = TilingSolver::new(&tileset_u());
    let mut v = s.enumerate(2, 3, &Pins::new()).unwrap();
    v.extend(s.enumerate(3, 2, &Pins::new()).unwrap());
    v
}

fn random_letter_morphism(images: Vec<usize>, codomain: usize) -> Morphism2d {
    Morphism2d::new(images.into_iter().map(Word2d::letter).collect(), codomain).unwrap()
}

#[test]
fn omega_is_a_homomorphism_on_valid_patterns() {
    let m = omega();
    let u = tileset_u();
    for w in valid_patterns() {
        let (width, height) = w.shape();
        let image = m.apply(&w).unwrap();
        assert!(image.is_valid_pattern(&u));
        let left = w.factor_at(0, 0, 1, height).unwrap();
        let rest = w.factor_at(1, 0, width - 1, height).unwrap();
        assert_eq!(image, m.apply(&left).unwrap().concat(&m.apply(&rest).unwrap(), Axis::E1).unwrap());
        let bottom = w.factor_at(0, 0, width, 1).unwrap();
        let upper = w.factor_at(0, 1, width, height - 1).unwrap();
        assert_eq!(image, m.apply(&bottom).unwrap().concat(&m.apply(&upper).unwrap(), Axis::E2).unwrap());
    }
}

#[test]
fn composition_is_application_in_sequence() {
    let ab = alpha().compose(&beta()).unwrap();
    for a in 0..19 {
        let x = Word2d::letter(a);
        assert_eq!(ab.apply(&x).unwrap(), alpha().apply(&beta().apply(&x).unwrap()).unwrap());
    }
    let sq = omega().power(2).unwrap();
    for a in 0..19 {
        assert_eq!(sq.image(a), &omega().apply(omega().image(a)).unwrap());
    }
}

#[test]
fn morphisms_map_between_the_right_sets() {
    for (m, dom, cod) in [
        (alpha(), tileset_v(), tileset_u()),
        (beta(), tileset_w(), tileset_v()),
        (gamma(), tileset_u(), tileset_w()),
    ] {
        assert_eq!(m.domain_len(), dom.len());
        assert_eq!(m.codomain_len(), cod.len());
        assert!(m.images().iter().all(|w| w.is_valid_pattern(&cod)));
    }
}

#[test]
fn incidence_of_composition_is_the_product() {
    let a = alpha();
    let b = beta();
    let ab = a.compose(&b).unwrap();
    assert_eq!(ab.incidence_matrix(), a.incidence_matrix().mul(&b.incidence_matrix()).unwrap());
    let m = omega();
    for n in 2..=4 {
        assert_eq!(
            m.power(n).unwrap().incidence_matrix(),
            m.incidence_matrix().pow(n as u32).unwrap()
        );
    }
}

proptest! {
    #[test]
    fn letter_morphisms_compose_like_functions(
        f in prop::collection::vec(0usize..5, 5),
        g in prop::collection::vec(0usize..5, 5),
    ) {
        let mf = random_letter_morphism(f.clone(), 5);
        let mg = random_letter_morphism(g.clone(), 5);
        let fg = mf.compose(&mg).unwrap();
        for a in 0..5 {
            prop_assert_eq!(fg.image(a), &Word2d::letter(f[g[a]]));
        }
        prop_assert_eq!(fg.incidence_matrix(), mf.incidence_matrix().mul(&mg.incidence_matrix()).unwrap());
    }

    #[test]
    fn json_round_trip(letters in prop::collection::vec(0usize..19, 19)) {
        let m = random_letter_morphism(letters, 19).compose(&omega()).unwrap();
        prop_assert_eq!(Morphism2d::from_json(&m.to_json(), Some(19)).unwrap(), m);
    }
}

#[test]
fn stone_areas_scale_by_phi_squared_per_level() {
    let g = StoneGeometry::for_u();
    let m = omega();
    for level in 1..=4u32 {
        let p = m.power(level as usize).unwrap();
        let scale = GoldenNumber::phi_pow(2 * level as i32);
        for a in 0..19 {
            let rects = stone_layout(p.image(a), &g).unwrap();
            assert_eq!(total_area(&rects), scale * g.area(a), "tile {a} level {level}");
        }
    }
}

#[test]
fn stone_image_of_a_square_tile_is_a_phi_square() {
    let g = StoneGeometry::for_u();
    let rects = stone_layout(omega().image(12), &g).unwrap();
    assert_eq!(rects.len(), 4);
    let width = rects.iter().map(|r| r.x + r.width).max().unwrap();
    let height = rects.iter().map(|r| r.y + r.height).max().unwrap();
    assert_eq!(width, GoldenNumber::PHI);
    assert_eq!(height, GoldenNumber::PHI);
}
