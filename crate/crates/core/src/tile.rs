//! Wang tiles, tile sets, fusion and duality.
//!
//! A tile is the tuple `(right, top, left, bottom)`. Tile sets are ordered and
//! duplicate-free; the position of a tile in its set is its index everywhere
//! else in the crate.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Separator inserted between fused color tokens when one of them is longer
/// than a single character. Display strips it.
pub const COLOR_SEPARATOR: char = '+';

/// An edge color: an opaque token of printable, non-whitespace characters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Color(String);

impl Color {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::InvalidColor(token));
        }
        Ok(Color(token))
    }

    /// The raw token, including any fusion separators.
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The token as drawn in figures: fusion separators removed.
    pub fn display(&self) -> String {
        self.0.chars().filter(|&c| c != COLOR_SEPARATOR).collect()
    }

    /// Concatenation used by fusion: `A`·`F` is `AF`, `AF`·`G` is `AF+G`.
    pub fn concat(&self, other: &Color) -> Color {
        let single = |c: &Color| c.0.chars().count() == 1;
        if single(self) && single(other) {
            Color(format!("{}{}", self.0, other.0))
        } else {
            Color(format!("{}{}{}", self.0, COLOR_SEPARATOR, other.0))
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl TryFrom<String> for Color {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Color::new(s)
    }
}

impl From<Color> for String {
    fn from(c: Color) -> String {
        c.0
    }
}

impl FromStr for Color {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Color::new(s)
    }
}

/// Coordinate axis: `E1` is horizontal (left to right), `E2` vertical (bottom to top).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    E1,
    E2,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::E1 => Axis::E2,
            Axis::E2 => Axis::E1,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Axis::E1 => 1,
            Axis::E2 => 2,
        }
    }

    pub fn from_number(n: u8) -> Result<Axis> {
        match n {
            1 => Ok(Axis::E1),
            2 => Ok(Axis::E2),
            _ => Err(Error::Argument(format!("direction must be 1 or 2, got {n}"))),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.number())
    }
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Axis> {
        match s.trim().trim_start_matches(['e', 'E']) {
            "1" => Ok(Axis::E1),
            "2" => Ok(Axis::E2),
            _ => Err(Error::Argument(format!("unknown direction {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WangTile {
    pub right: Color,
    pub top: Color,
    pub left: Color,
    pub bottom: Color,
}

impl WangTile {
    pub fn new(right: Color, top: Color, left: Color, bottom: Color) -> Self {
        WangTile {
            right,
            top,
            left,
            bottom,
        }
    }

    /// Builds a tile from four tokens in the order right, top, left, bottom.
    pub fn from_tokens(right: &str, top: &str, left: &str, bottom: &str) -> Result<Self> {
        Ok(WangTile::new(
            Color::new(right)?,
            Color::new(top)?,
            Color::new(left)?,
            Color::new(bottom)?,
        ))
    }

    /// Reflection through the positive diagonal: `(a,b,c,d) -> (b,a,d,c)`.
    pub fn dual(&self) -> WangTile {
        WangTile::new(
            self.top.clone(),
            self.right.clone(),
            self.bottom.clone(),
            self.left.clone(),
        )
    }

    /// Whether `other` may sit at `self + e_axis`.
    pub fn fits(&self, other: &WangTile, axis: Axis) -> bool {
        match axis {
            Axis::E1 => self.right == other.left,
            Axis::E2 => self.top == other.bottom,
        }
    }

    /// Fuses `self` with `other` placed at `self + e_axis` into one tile.
    /// Returns `None` when the shared edge colors differ.
    pub fn fuse(&self, other: &WangTile, axis: Axis) -> Option<WangTile> {
        if !self.fits(other, axis) {
            return None;
        }
        Some(match axis {
            Axis::E1 => WangTile::new(
                other.right.clone(),
                self.top.concat(&other.top),
                self.left.clone(),
                self.bottom.concat(&other.bottom),
            ),
            Axis::E2 => WangTile::new(
                self.right.concat(&other.right),
                other.top.clone(),
                self.left.concat(&other.left),
                self.bottom.clone(),
            ),
        })
    }

    /// The two colors crossed by a line in direction `axis` through the tile:
    /// (left, right) for `E1`, (bottom, top) for `E2`.
    pub fn colors_along(&self, axis: Axis) -> (&Color, &Color) {
        match axis {
            Axis::E1 => (&self.left, &self.right),
            Axis::E2 => (&self.bottom, &self.top),
        }
    }
}

impl fmt::Display for WangTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.right, self.top, self.left, self.bottom
        )
    }
}

impl fmt::Debug for WangTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered, duplicate-free set of Wang tiles.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WangTileSet {
    tiles: Vec<WangTile>,
    vertical: BTreeSet<Color>,
    horizontal: BTreeSet<Color>,
}

impl WangTileSet {
    pub fn new(tiles: Vec<WangTile>) -> Result<Self> {
        let mut seen: HashMap<&WangTile, usize> = HashMap::new();
        for (i, t) in tiles.iter().enumerate() {
            if let Some(&first) = seen.get(t) {
                return Err(Error::DuplicateTile {
                    tile: t.to_string(),
                    first,
                    second: i,
                });
            }
            seen.insert(t, i);
        }
        let vertical = tiles
            .iter()
            .flat_map(|t| [t.left.clone(), t.right.clone()])
            .collect();
        let horizontal = tiles
            .iter()
            .flat_map(|t| [t.bottom.clone(), t.top.clone()])
            .collect();
        Ok(WangTileSet {
            tiles,
            vertical,
            horizontal,
        })
    }

    /// Builds a set from compact strings such as `"FOJO"`, one character per color.
    pub fn from_compact(tiles: &[&str]) -> Result<Self> {
        let tiles = tiles
            .iter()
            .map(|s| {
                let c: Vec<String> = s.chars().map(String::from).collect();
                if c.len() != 4 {
                    return Err(Error::Argument(format!("compact tile {s:?} needs 4 chars")));
                }
                WangTile::from_tokens(&c[0], &c[1], &c[2], &c[3])
            })
            .collect::<Result<Vec<_>>>()?;
        WangTileSet::new(tiles)
    }

    /// Parses the line-oriented text format: `# comment` lines and blank lines
    /// are skipped, every other line holds `right top left bottom`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tiles = Vec::new();
        let mut lines = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 4 {
                return Err(Error::Parse {
                    line: no + 1,
                    msg: format!("expected 4 color tokens, found {}", tokens.len()),
                });
            }
            let tile = WangTile::from_tokens(tokens[0], tokens[1], tokens[2], tokens[3])
                .map_err(|e| Error::Parse {
                    line: no + 1,
                    msg: e.to_string(),
                })?;
            tiles.push(tile);
            lines.push(no + 1);
        }
        WangTileSet::new(tiles).map_err(|e| match e {
            Error::DuplicateTile { tile, second, .. } => Error::Parse {
                line: lines[second],
                msg: format!("duplicate tile {tile}"),
            },
            other => other,
        })
    }

    /// One tile per line in index order, tokens separated by a single space.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tiles {
            out.push_str(&format!("{} {} {} {}\n", t.right, t.top, t.left, t.bottom));
        }
        out
    }

    pub fn tiles(&self) -> &[WangTile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&WangTile> {
        self.tiles.get(i)
    }

    /// Colors of left and right edges.
    pub fn vertical_colors(&self) -> &BTreeSet<Color> {
        &self.vertical
    }

    /// Colors of bottom and top edges.
    pub fn horizontal_colors(&self) -> &BTreeSet<Color> {
        &self.horizontal
    }

    pub fn index_of(&self, tile: &WangTile) -> Option<usize> {
        self.tiles.iter().position(|t| t == tile)
    }

    pub fn dual(&self) -> WangTileSet {
        WangTileSet::new(self.tiles.iter().map(WangTile::dual).collect())
            .expect("dual of a duplicate-free set is duplicate-free")
    }

    /// Index map `self[i] == other[map[i]]`, if both sets hold the same tiles.
    pub fn alignment_to(&self, other: &WangTileSet) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        self.tiles.iter().map(|t| other.index_of(t)).collect()
    }

    /// Applies color bijections to every tile; colors missing from a map are kept.
    pub fn relabel(
        &self,
        vertical: &BTreeMap<Color, Color>,
        horizontal: &BTreeMap<Color, Color>,
    ) -> Result<WangTileSet> {
        let v = |c: &Color| vertical.get(c).cloned().unwrap_or_else(|| c.clone());
        let h = |c: &Color| horizontal.get(c).cloned().unwrap_or_else(|| c.clone());
        WangTileSet::new(
            self.tiles
                .iter()
                .map(|t| WangTile::new(v(&t.right), h(&t.top), v(&t.left), h(&t.bottom)))
                .collect(),
        )
    }

    /// Subset of tiles by index, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<WangTileSet> {
        let tiles = indices
            .iter()
            .map(|&i| {
                self.get(i)
                    .cloned()
                    .ok_or_else(|| Error::Argument(format!("tile index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        WangTileSet::new(tiles)
    }
}

impl fmt::Debug for WangTileSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.tiles.iter()).finish()
    }
}

impl FromStr for WangTileSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        WangTileSet::parse(s)
    }
}

/// All well-defined fusions `t ⊟ s`, in lexicographic order of `(i, j)`,
/// keeping the first occurrence of repeated tiles.
pub fn fuse_sets(first: &WangTileSet, second: &WangTileSet, axis: Axis) -> WangTileSet {
    fuse_sets_with_sources(first, second, axis).0
}

/// Like [`fuse_sets`], also returning the source pair of each fused tile.
pub fn fuse_sets_with_sources(
    first: &WangTileSet,
    second: &WangTileSet,
    axis: Axis,
) -> (WangTileSet, Vec<(usize, usize)>) {
    let mut tiles = Vec::new();
    let mut sources = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, t) in first.tiles().iter().enumerate() {
        for (j, s) in second.tiles().iter().enumerate() {
            if let Some(f) = t.fuse(s, axis) {
                if seen.insert(f.clone()) {
                    tiles.push(f);
                    sources.push((i, j));
                }
            }
        }
    }
    let set = WangTileSet::new(tiles).expect("deduplicated above");
    (set, sources)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> WangTileSet {
        crate::corpus::tileset_u()
    }

    #[test]
    fn parse_single_line() {
        let t = WangTileSet::parse("F O J O\n").unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.tiles()[0], WangTile::from_tokens("F", "O", "J", "O").unwrap());
    }

    #[test]
    fn parse_empty_and_comments() {
        assert!(WangTileSet::parse("").unwrap().is_empty());
        let t = WangTileSet::parse("# header\n\nF O J O\n  # indented comment\n").unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn parse_rejects_wrong_arity() {
        let err = WangTileSet::parse("F O J O\nF O J\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                msg: "expected 4 color tokens, found 3".into()
            }
        );
    }

    #[test]
    fn parse_rejects_duplicates_naming_line() {
        let err = WangTileSet::parse("F O J O\n# c\nF O J O\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn u_color_alphabets() {
        let u = u();
        let v: Vec<String> = u.vertical_colors().iter().map(|c| c.to_string()).collect();
        let h: Vec<String> = u.horizontal_colors().iter().map(|c| c.to_string()).collect();
        assert_eq!(v, ["A", "B", "C", "D", "E", "F", "G", "H", "I", "J"]);
        assert_eq!(h, ["K", "L", "M", "N", "O", "P"]);
    }

    #[test]
    fn text_round_trip() {
        let u = u();
        let text = u.to_text();
        assert_eq!(WangTileSet::parse(&text).unwrap(), u);
        assert_eq!(WangTileSet::parse(&text).unwrap().to_text(), text);
    }

    #[test]
    fn dual_examples() {
        let t = WangTile::from_tokens("F", "O", "J", "O").unwrap();
        assert_eq!(t.dual(), WangTile::from_tokens("O", "F", "O", "J").unwrap());
        let u = u();
        assert_eq!(u.dual().dual(), u);
        assert_eq!(u.dual().vertical_colors().len(), 6);
        assert_eq!(u.dual().horizontal_colors().len(), 10);
    }

    #[test]
    fn fuse_examples() {
        let u = u();
        let t = u.tiles();
        assert_eq!(
            t[0].fuse(&t[2], Axis::E1).unwrap(),
            WangTile::from_tokens("J", "OM", "J", "OP").unwrap()
        );
        assert_eq!(
            t[8].fuse(&t[0], Axis::E2).unwrap(),
            WangTile::from_tokens("BF", "O", "IJ", "O").unwrap()
        );
        assert!(t[0].fuse(&t[0], Axis::E1).is_none());
    }

    #[test]
    fn multi_char_tokens_use_separator() {
        let a = Color::new("AF").unwrap();
        let g = Color::new("G").unwrap();
        let fused = a.concat(&g);
        assert_eq!(fused.as_str(), "AF+G");
        assert_eq!(fused.display(), "AFG");
        assert_ne!(fused, Color::new("A").unwrap().concat(&Color::new("FG").unwrap()));
    }

    #[test]
    fn fuse_sets_empty_and_duality() {
        let empty = WangTileSet::default();
        assert!(fuse_sets(&empty, &u(), Axis::E1).is_empty());
        let u = u();
        let lhs = fuse_sets(&u, &u, Axis::E1).dual();
        let rhs = fuse_sets(&u.dual(), &u.dual(), Axis::E2);
        assert_eq!(lhs, rhs);
        let lhs = fuse_sets(&u, &u, Axis::E2).dual();
        let rhs = fuse_sets(&u.dual(), &u.dual(), Axis::E1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn invalid_colors() {
        assert!(Color::new("").is_err());
        assert!(Color::new("A B").is_err());
    }
}
