//! Markers and desubstitution.
//!
//! A set of markers `M` in direction `e_i` is a nonempty proper subset of
//! tiles such that no two markers are neighbours along `e_i` and markers only
//! neighbour markers along the other axis, in every pattern admitting a
//! surrounding of the chosen radius. Given markers, every tiling decomposes
//! uniquely into single non-marker tiles and non-marker/marker dominoes, which
//! yields a derived tile set and a recognizable morphism onto the source.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphism::{Morphism2d, Side};
use crate::solver::dominoes_with_surrounding;
use crate::tile::{Axis, Color, WangTileSet};
use crate::word::Word2d;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MarkerSet {
    pub tiles: BTreeSet<usize>,
    pub axis: Axis,
}

impl MarkerSet {
    pub fn new(tiles: impl IntoIterator<Item = usize>, axis: Axis) -> Self {
        MarkerSet {
            tiles: tiles.into_iter().collect(),
            axis,
        }
    }

    pub fn contains(&self, t: usize) -> bool {
        self.tiles.contains(&t)
    }

    /// Parses `"0-7@2"` or `"0,1,3,8@e1"`; ranges are inclusive.
    pub fn parse(spec: &str) -> Result<MarkerSet> {
        let (list, axis) = spec
            .split_once('@')
            .ok_or_else(|| Error::Argument(format!("marker spec {spec:?} lacks '@direction'")))?;
        let axis: Axis = axis.parse()?;
        let mut tiles = BTreeSet::new();
        for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::Argument(format!("bad marker index {part:?}"));
            match part.split_once('-') {
                Some((a, b)) => {
                    let a: usize = a.trim().parse().map_err(|_| bad())?;
                    let b: usize = b.trim().parse().map_err(|_| bad())?;
                    tiles.extend(a..=b);
                }
                None => {
                    tiles.insert(part.parse().map_err(|_| bad())?);
                }
            }
        }
        Ok(MarkerSet { tiles, axis })
    }
}

impl fmt::Display for MarkerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.tiles.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}@{}", list.join(","), self.axis)
    }
}

/// Outcome of a marker check, with the offending dominoes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkerReport {
    /// Dominoes along the marker direction with both ends markers.
    pub stacked: Vec<(usize, usize)>,
    /// Dominoes along the other axis mixing markers and non-markers.
    pub mixed: Vec<(usize, usize)>,
}

impl MarkerReport {
    pub fn passed(&self) -> bool {
        self.stacked.is_empty() && self.mixed.is_empty()
    }
}

impl fmt::Display for MarkerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "markers verified");
        }
        write!(
            f,
            "adjacent markers {:?}; mixed dominoes {:?}",
            self.stacked, self.mixed
        )
    }
}

fn check_proper(set: &WangTileSet, markers: &MarkerSet) -> Result<()> {
    if markers.tiles.is_empty() || markers.tiles.len() >= set.len() {
        return Err(Error::Argument(
            "markers must be a nonempty proper subset of the tiles".into(),
        ));
    }
    if let Some(&t) = markers.tiles.iter().find(|&&t| t >= set.len()) {
        return Err(Error::Argument(format!("marker {t} is not a tile index")));
    }
    Ok(())
}

fn report(
    markers: &MarkerSet,
    along: &[(usize, usize)],
    across: &[(usize, usize)],
) -> MarkerReport {
    MarkerReport {
        stacked: along
            .iter()
            .copied()
            .filter(|&(i, j)| markers.contains(i) && markers.contains(j))
            .collect(),
        mixed: across
            .iter()
            .copied()
            .filter(|&(i, j)| markers.contains(i) != markers.contains(j))
            .collect(),
    }
}

pub fn verify_markers(set: &WangTileSet, markers: &MarkerSet, radius: usize) -> Result<MarkerReport> {
    check_proper(set, markers)?;
    let along = dominoes_with_surrounding(set, markers.axis, radius);
    let across = dominoes_with_surrounding(set, markers.axis.other(), radius);
    Ok(report(markers, &along, &across))
}

/// The colors a tile shows on the sides crossed by rows of markers in
/// direction `axis`: left/right for `e2`, bottom/top for `e1`.
fn crossing(set: &WangTileSet, t: usize, axis: Axis) -> (&Color, &Color) {
    set.tiles()[t].colors_along(axis.other())
}

/// Tile subsets induced by unions of connected components of the crossing
/// color graph that pass [`verify_markers`], in canonical order.
pub fn find_marker_candidates(set: &WangTileSet, axis: Axis, radius: usize) -> Vec<MarkerSet> {
    const MAX_COMPONENTS: usize = 16;
    // union-find over crossing colors
    let mut ids: BTreeMap<&Color, usize> = BTreeMap::new();
    for t in 0..set.len() {
        let (a, b) = crossing(set, t, axis);
        let n = ids.len();
        ids.entry(a).or_insert(n);
        let n = ids.len();
        ids.entry(b).or_insert(n);
    }
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for t in 0..set.len() {
        let (a, b) = crossing(set, t, axis);
        let (ra, rb) = (find(&mut parent, ids[a]), find(&mut parent, ids[b]));
        parent[ra] = rb;
    }
    let mut component_of_tile = Vec::with_capacity(set.len());
    let mut roots: Vec<usize> = Vec::new();
    for t in 0..set.len() {
        let (a, _) = crossing(set, t, axis);
        let r = find(&mut parent, ids[a]);
        let k = roots.iter().position(|&x| x == r).unwrap_or_else(|| {
            roots.push(r);
            roots.len() - 1
        });
        component_of_tile.push(k);
    }
    let c = roots.len();
    if c < 2 {
        return Vec::new();
    }
    let unions: Vec<u64> = if c <= MAX_COMPONENTS {
        (1..(1u64 << c) - 1).collect()
    } else {
        (0..c).map(|k| 1u64 << k).collect()
    };
    let along = dominoes_with_surrounding(set, axis, radius);
    let across = dominoes_with_surrounding(set, axis.other(), radius);
    let mut out: Vec<MarkerSet> = unions
        .into_iter()
        .map(|mask| {
            MarkerSet::new(
                (0..set.len()).filter(|&t| mask >> component_of_tile[t] & 1 == 1),
                axis,
            )
        })
        .filter(|m| check_proper(set, m).is_ok() && report(m, &along, &across).passed())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A derived tile set with its morphism onto the source set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub source: WangTileSet,
    pub markers: MarkerSet,
    pub radius: usize,
    /// Singles first, in source order, then fusions in pair order.
    pub derived: WangTileSet,
    pub morphism: Morphism2d,
    /// Non-marker tiles followed by a non-marker along the marker axis.
    pub singles: Vec<usize>,
    /// `(non-marker, marker)` dominoes along the marker axis.
    pub fusions: Vec<(usize, usize)>,
}

impl Derivation {
    pub fn is_degenerate(&self) -> bool {
        self.derived.is_empty()
    }

    /// Permutation `p` with `derived[i] == target[p[i]]`, if the sets agree.
    pub fn alignment_to(&self, target: &WangTileSet) -> Option<Vec<usize>> {
        self.derived.alignment_to(target)
    }

    /// The morphism reindexed by the letters of `target`.
    pub fn morphism_for(&self, target: &WangTileSet) -> Option<Morphism2d> {
        let p = self.alignment_to(target)?;
        let mut images = vec![None; p.len()];
        for (i, &j) in p.iter().enumerate() {
            images[j] = Some(self.morphism.image(i).clone());
        }
        Morphism2d::new(
            images.into_iter().map(|w| w.expect("bijection")).collect(),
            self.morphism.codomain_len(),
        )
        .ok()
    }

    pub fn recognizable(&self) -> bool {
        self.morphism
            .check_recognizability_criterion(&self.markers.tiles, self.markers.axis, Side::Right)
    }
}

/// Builds the derived set from verified markers.
pub fn derive(set: &WangTileSet, markers: &MarkerSet, radius: usize) -> Result<Derivation> {
    let report = verify_markers(set, markers, radius)?;
    if !report.passed() {
        return Err(Error::Markers(report.to_string()));
    }
    let axis = markers.axis;
    let dominoes = dominoes_with_surrounding(set, axis, radius);
    let singles: Vec<usize> = (0..set.len())
        .filter(|&u| {
            !markers.contains(u)
                && dominoes
                    .iter()
                    .any(|&(a, b)| a == u && !markers.contains(b))
        })
        .collect();
    let fusions: Vec<(usize, usize)> = dominoes
        .iter()
        .copied()
        .filter(|&(u, v)| !markers.contains(u) && markers.contains(v))
        .collect();
    let tiles = set.tiles();
    let mut derived = Vec::with_capacity(singles.len() + fusions.len());
    let mut images = Vec::with_capacity(singles.len() + fusions.len());
    for &u in &singles {
        derived.push(tiles[u].clone());
        images.push(Word2d::letter(u));
    }
    for &(u, v) in &fusions {
        derived.push(tiles[u].fuse(&tiles[v], axis).expect("dominoes match"));
        let columns = match axis {
            Axis::E1 => vec![vec![u], vec![v]],
            Axis::E2 => vec![vec![u, v]],
        };
        images.push(Word2d::new(columns).expect("domino"));
    }
    Ok(Derivation {
        source: set.clone(),
        markers: markers.clone(),
        radius,
        derived: WangTileSet::new(derived)?,
        morphism: Morphism2d::new(images, set.len())?,
        singles,
        fusions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_marker_specs() {
        let m = MarkerSet::parse("0-7@2").unwrap();
        assert_eq!(m.tiles, (0..8).collect());
        assert_eq!(m.axis, Axis::E2);
        let m = MarkerSet::parse("0,1,3,8,9,14,15@e1").unwrap();
        assert_eq!(m.tiles.len(), 7);
        assert_eq!(m.to_string(), "{0,1,3,8,9,14,15}@e1");
        assert!(MarkerSet::parse("0-7").is_err());
        assert!(MarkerSet::parse("x@1").is_err());
    }

    #[test]
    fn improper_markers_are_rejected() {
        let set = WangTileSet::from_compact(&["ABAB", "CDCD"]).unwrap();
        assert!(verify_markers(&set, &MarkerSet::new([], Axis::E1), 1).is_err());
        assert!(verify_markers(&set, &MarkerSet::new([0, 1], Axis::E1), 1).is_err());
    }

    #[test]
    fn connected_color_graph_has_no_candidates() {
        let set = WangTileSet::from_compact(&["ABAB", "ACAC"]).unwrap();
        assert!(find_marker_candidates(&set, Axis::E2, 1).is_empty());
    }

    #[test]
    fn stripes_derive_trivially() {
        // two kinds of horizontal rows alternating: B rows and C rows
        let set = WangTileSet::from_compact(&["ABAC", "DCDB"]).unwrap();
        let candidates = find_marker_candidates(&set, Axis::E2, 1);
        assert_eq!(candidates.len(), 2);
        let d = derive(&set, &candidates[0], 1).unwrap();
        assert!(d.singles.is_empty());
        assert_eq!(d.fusions, vec![(1, 0)]);
        assert!(d.recognizable());
    }
}
