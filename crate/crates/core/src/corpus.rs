//! Built-in tile sets and morphisms.
//!
//! `U` is the 19-tile set; `V` and `W` are its two successive derived sets;
//! `alpha: V -> U`, `beta: W -> V` and `gamma: U -> W` are the associated
//! morphisms, and `omega = alpha ∘ beta ∘ gamma` is computed, never stored.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::morphism::Morphism2d;
use crate::tile::{Color, WangTile, WangTileSet};

const U: [&str; 19] = [
    "FOJO", "FOHL", "JMFP", "DMFK", "HPJP", "HPHN", "HKFP", "HKDP", "BOIO", "GLEO", "GLCL", "ALIO",
    "EPGP", "EPIP", "IPGK", "IPIK", "IKBM", "IKAK", "CNIP",
];

const V: [[&str; 4]; 21] = [
    ["A", "L", "I", "O"],
    ["B", "O", "I", "O"],
    ["E", "P", "I", "P"],
    ["G", "L", "E", "O"],
    ["I", "K", "A", "K"],
    ["I", "K", "B", "M"],
    ["I", "P", "G", "K"],
    ["I", "P", "I", "K"],
    ["AF", "O", "IH", "O"],
    ["BF", "O", "IJ", "O"],
    ["CH", "P", "IH", "P"],
    ["EH", "K", "GF", "P"],
    ["EH", "K", "ID", "P"],
    ["EH", "P", "IJ", "P"],
    ["GF", "O", "CH", "L"],
    ["GF", "O", "EH", "O"],
    ["ID", "M", "AF", "K"],
    ["ID", "M", "BF", "M"],
    ["IH", "K", "GF", "K"],
    ["IH", "K", "ID", "K"],
    ["IJ", "M", "GF", "K"],
];

const W: [[&str; 4]; 19] = [
    ["I", "K", "A", "K"],
    ["I", "K", "B", "M"],
    ["A", "PL", "I", "KO"],
    ["G", "PL", "I", "PO"],
    ["B", "KO", "A", "KO"],
    ["B", "KO", "B", "MO"],
    ["B", "PO", "I", "KO"],
    ["B", "PO", "G", "KO"],
    ["IH", "K", "GF", "K"],
    ["ID", "M", "AF", "K"],
    ["ID", "M", "BF", "M"],
    ["IJ", "M", "GF", "K"],
    ["AF", "KO", "ID", "KO"],
    ["AF", "KO", "GF", "KO"],
    ["GF", "KO", "ID", "PO"],
    ["GF", "KO", "GF", "PO"],
    ["GF", "PO", "IH", "PL"],
    ["GF", "PO", "IJ", "PO"],
    ["BF", "MO", "GF", "KO"],
];

/// `alpha: V -> U`, one list of columns per letter.
const ALPHA: [&[&[usize]]; 21] = [
    &[&[11]],
    &[&[8]],
    &[&[13]],
    &[&[9]],
    &[&[17]],
    &[&[16]],
    &[&[14]],
    &[&[15]],
    &[&[11, 1]],
    &[&[8, 0]],
    &[&[18, 5]],
    &[&[12, 6]],
    &[&[13, 7]],
    &[&[13, 4]],
    &[&[10, 1]],
    &[&[9, 1]],
    &[&[17, 3]],
    &[&[16, 3]],
    &[&[14, 6]],
    &[&[15, 7]],
    &[&[14, 2]],
];

/// `beta: W -> V`.
const BETA: [&[&[usize]]; 19] = [
    &[&[4]],
    &[&[5]],
    &[&[7], &[0]],
    &[&[2], &[3]],
    &[&[4], &[1]],
    &[&[5], &[1]],
    &[&[7], &[1]],
    &[&[6], &[1]],
    &[&[18]],
    &[&[16]],
    &[&[17]],
    &[&[20]],
    &[&[19], &[8]],
    &[&[18], &[8]],
    &[&[12], &[15]],
    &[&[11], &[15]],
    &[&[10], &[14]],
    &[&[13], &[15]],
    &[&[20], &[9]],
];

/// Horizontal colors of `U` to those of `W`.
const H: [(&str, &str); 6] = [
    ("O", "K"),
    ("P", "KO"),
    ("L", "M"),
    ("N", "MO"),
    ("M", "PL"),
    ("K", "PO"),
];

/// Vertical colors of `U` to those of `W`.
const K: [(&str, &str); 10] = [
    ("J", "A"),
    ("H", "B"),
    ("D", "G"),
    ("F", "I"),
    ("E", "AF"),
    ("C", "BF"),
    ("I", "GF"),
    ("G", "ID"),
    ("B", "IH"),
    ("A", "IJ"),
];

pub const NAMES: [&str; 7] = ["U", "V", "W", "alpha", "beta", "gamma", "omega"];

fn from_quads(rows: &[[&str; 4]]) -> WangTileSet {
    WangTileSet::new(
        rows.iter()
            .map(|[r, t, l, b]| WangTile::from_tokens(r, t, l, b).expect("valid literal"))
            .collect(),
    )
    .expect("duplicate-free literal")
}

fn from_table(table: &[&[&[usize]]]) -> Vec<Vec<Vec<usize>>> {
    table
        .iter()
        .map(|cols| cols.iter().map(|c| c.to_vec()).collect())
        .collect()
}

fn color_map(pairs: &[(&str, &str)]) -> BTreeMap<Color, Color> {
    pairs
        .iter()
        .map(|(a, b)| (Color::new(*a).expect("literal"), Color::new(*b).expect("literal")))
        .collect()
}

pub fn tileset_u() -> WangTileSet {
    WangTileSet::from_compact(&U).expect("valid literal")
}

pub fn tileset_v() -> WangTileSet {
    from_quads(&V)
}

pub fn tileset_w() -> WangTileSet {
    from_quads(&W)
}

pub fn alpha() -> Morphism2d {
    Morphism2d::new(
        from_table(&ALPHA)
            .into_iter()
            .map(|c| crate::word::Word2d::new(c).expect("literal"))
            .collect(),
        U.len(),
    )
    .expect("literal")
}

pub fn beta() -> Morphism2d {
    Morphism2d::new(
        from_table(&BETA)
            .into_iter()
            .map(|c| crate::word::Word2d::new(c).expect("literal"))
            .collect(),
        V.len(),
    )
    .expect("literal")
}

/// `gamma: U -> W` sends letter `i` to letter `i`; the tile sets are related
/// by the color bijections [`gamma_horizontal`] and [`gamma_vertical`].
pub fn gamma() -> Morphism2d {
    Morphism2d::identity(U.len())
}

pub fn gamma_horizontal() -> BTreeMap<Color, Color> {
    color_map(&H)
}

pub fn gamma_vertical() -> BTreeMap<Color, Color> {
    color_map(&K)
}

/// `alpha ∘ beta ∘ gamma`.
pub fn omega() -> Morphism2d {
    alpha()
        .compose(&beta())
        .and_then(|ab| ab.compose(&gamma()))
        .expect("composable tables")
}

#[derive(Clone, Debug)]
pub enum Payload {
    TileSet(WangTileSet),
    Morphism(Morphism2d),
}

#[derive(Clone, Debug)]
pub struct NamedArtifact {
    pub name: &'static str,
    pub payload: Payload,
    pub provenance: &'static str,
}

impl NamedArtifact {
    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::TileSet(_) => "tileset",
            Payload::Morphism(_) => "morphism",
        }
    }

    /// The artifact in its public file format: tile-set text or morphism JSON.
    pub fn export(&self) -> String {
        match &self.payload {
            Payload::TileSet(t) => t.to_text(),
            Payload::Morphism(m) => m.to_json(),
        }
    }

    pub fn tileset(&self) -> Option<&WangTileSet> {
        match &self.payload {
            Payload::TileSet(t) => Some(t),
            Payload::Morphism(_) => None,
        }
    }

    pub fn morphism(&self) -> Option<&Morphism2d> {
        match &self.payload {
            Payload::Morphism(m) => Some(m),
            Payload::TileSet(_) => None,
        }
    }
}

pub fn builtin(name: &str) -> Result<NamedArtifact> {
    let (name, payload, provenance) = match name {
        "U" => ("U", Payload::TileSet(tileset_u()), "the 19-tile set U, tiles u0..u18"),
        "V" => ("V", Payload::TileSet(tileset_v()), "the 21-tile set V, tiles v0..v20"),
        "W" => ("W", Payload::TileSet(tileset_w()), "the 19-tile set W, tiles w0..w18"),
        "alpha" => ("alpha", Payload::Morphism(alpha()), "alpha: V -> U, image table"),
        "beta" => ("beta", Payload::Morphism(beta()), "beta: W -> V, image table"),
        "gamma" => (
            "gamma",
            Payload::Morphism(gamma()),
            "gamma: U -> W, u_i -> w_i under the color bijections h and k",
        ),
        "omega" => (
            "omega",
            Payload::Morphism(omega()),
            "omega = alpha ∘ beta ∘ gamma, recomputed at load",
        ),
        other => {
            return Err(Error::UnknownArtifact {
                name: other.to_string(),
                valid: NAMES.join(", "),
            })
        }
    };
    Ok(NamedArtifact {
        name,
        payload,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_tile_of_u() {
        let u = tileset_u();
        assert_eq!(u.tiles()[0], WangTile::from_tokens("F", "O", "J", "O").unwrap());
    }

    #[test]
    fn alpha_column_image() {
        assert_eq!(alpha().image(8).columns(), &[vec![11, 1]]);
    }

    #[test]
    fn omega_row_image() {
        assert_eq!(omega().image(2).columns(), &[vec![15], vec![11]]);
    }

    #[test]
    fn w_is_u_relabeled() {
        let w = tileset_u()
            .relabel(&gamma_vertical(), &gamma_horizontal())
            .unwrap();
        assert_eq!(w, tileset_w());
    }

    #[test]
    fn unknown_name() {
        let err = builtin("Z").unwrap_err();
        assert!(err.to_string().contains("alpha"));
    }

    #[test]
    fn exports_parse_back() {
        for name in NAMES {
            let a = builtin(name).unwrap();
            let text = a.export();
            match &a.payload {
                Payload::TileSet(t) => assert_eq!(&WangTileSet::parse(&text).unwrap(), t),
                Payload::Morphism(m) => {
                    assert_eq!(&Morphism2d::from_json(&text, Some(m.codomain_len())).unwrap(), m)
                }
            }
        }
    }
}
