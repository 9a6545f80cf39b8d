//! Rectangular 2-dimensional words over tile indices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tile::{Axis, WangTileSet};

/// A word of shape `(width, height)` stored column-major, each column listed
/// bottom to top. `get(x, y)` is the letter at `x` columns right and `y` rows up.
///
/// Ordering is lexicographic on the column list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Word2d {
    columns: Vec<Vec<usize>>,
}

impl Word2d {
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self> {
        let height = columns.first().map(Vec::len).unwrap_or(0);
        if columns.is_empty() || height == 0 {
            return Err(Error::Argument("a word needs at least one cell".into()));
        }
        if columns.iter().any(|c| c.len() != height) {
            return Err(Error::Argument("columns of a word must have equal height".into()));
        }
        Ok(Word2d { columns })
    }

    pub fn letter(a: usize) -> Self {
        Word2d {
            columns: vec![vec![a]],
        }
    }

    /// Builds a word from rows in display order: top row first, bottom row last.
    pub fn from_cartesian_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Argument("rows of a word must have equal width".into()));
        }
        let columns = (0..width)
            .map(|x| (0..height).map(|y| rows[height - 1 - y][x]).collect())
            .collect();
        Word2d::new(columns)
    }

    /// Rows in display order: top row first.
    pub fn cartesian_rows(&self) -> Vec<Vec<usize>> {
        let (w, h) = self.shape();
        (0..h)
            .rev()
            .map(|y| (0..w).map(|x| self.columns[x][y]).collect())
            .collect()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn height(&self) -> usize {
        self.columns[0].len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.width(), self.height())
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.columns[x][y]
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(x, col)| col.iter().enumerate().map(move |(y, &a)| (x, y, a)))
    }

    pub fn max_letter(&self) -> usize {
        self.cells().map(|(_, _, a)| a).max().unwrap_or(0)
    }

    /// Concatenation `self ⊙^axis other`; the shapes must agree off the axis.
    pub fn concat(&self, other: &Word2d, axis: Axis) -> Result<Word2d> {
        let err = || Error::Concat {
            axis,
            left: self.shape(),
            right: other.shape(),
        };
        match axis {
            Axis::E1 => {
                if self.height() != other.height() {
                    return Err(err());
                }
                let mut columns = self.columns.clone();
                columns.extend(other.columns.iter().cloned());
                Ok(Word2d { columns })
            }
            Axis::E2 => {
                if self.width() != other.width() {
                    return Err(err());
                }
                let columns = self
                    .columns
                    .iter()
                    .zip(&other.columns)
                    .map(|(a, b)| a.iter().chain(b).copied().collect())
                    .collect();
                Ok(Word2d { columns })
            }
        }
    }

    /// The factor of shape `(w, h)` whose lower-left cell is `(x, y)`.
    pub fn factor_at(&self, x: usize, y: usize, w: usize, h: usize) -> Option<Word2d> {
        if w == 0 || h == 0 || x + w > self.width() || y + h > self.height() {
            return None;
        }
        Some(Word2d {
            columns: self.columns[x..x + w]
                .iter()
                .map(|c| c[y..y + h].to_vec())
                .collect(),
        })
    }

    /// All distinct factors of the given shape.
    pub fn subwords(&self, shape: (usize, usize)) -> BTreeSet<Word2d> {
        let (w, h) = shape;
        let mut out = BTreeSet::new();
        if w == 0 || h == 0 || w > self.width() || h > self.height() {
            return out;
        }
        for x in 0..=self.width() - w {
            for y in 0..=self.height() - h {
                out.insert(self.factor_at(x, y, w, h).expect("in range"));
            }
        }
        out
    }

    /// Whether `needle` occurs somewhere in `self`.
    pub fn contains(&self, needle: &Word2d) -> bool {
        let (w, h) = needle.shape();
        if w > self.width() || h > self.height() {
            return false;
        }
        (0..=self.width() - w).any(|x| {
            (0..=self.height() - h).any(|y| {
                (0..w).all(|i| (0..h).all(|j| self.columns[x + i][y + j] == needle.columns[i][j]))
            })
        })
    }

    /// Positions of edge-color mismatches between neighbouring cells with
    /// respect to `set`, as `(x, y, axis)` of the lower/left cell.
    pub fn violations(&self, set: &WangTileSet) -> Vec<(usize, usize, Axis)> {
        let mut out = Vec::new();
        let (w, h) = self.shape();
        for x in 0..w {
            for y in 0..h {
                let t = &set.tiles()[self.get(x, y)];
                if x + 1 < w && !t.fits(&set.tiles()[self.get(x + 1, y)], Axis::E1) {
                    out.push((x, y, Axis::E1));
                }
                if y + 1 < h && !t.fits(&set.tiles()[self.get(x, y + 1)], Axis::E2) {
                    out.push((x, y, Axis::E2));
                }
            }
        }
        out
    }

    /// All letters are tiles of `set` and all internal edges match.
    pub fn is_valid_pattern(&self, set: &WangTileSet) -> bool {
        self.cells().all(|(_, _, a)| a < set.len()) && self.violations(set).is_empty()
    }
}

impl fmt::Debug for Word2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.columns)
    }
}

impl fmt::Display for Word2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.cartesian_rows();
        let width = self.max_letter().to_string().len();
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|a| format!("{a:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<Vec<usize>>> for Word2d {
    type Error = Error;
    fn try_from(columns: Vec<Vec<usize>>) -> Result<Self> {
        Word2d::new(columns)
    }
}

impl From<Word2d> for Vec<Vec<usize>> {
    fn from(w: Word2d) -> Self {
        w.columns
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_letters() {
        let w = Word2d::letter(11).concat(&Word2d::letter(8), Axis::E1).unwrap();
        assert_eq!(w.shape(), (2, 1));
        assert_eq!(w.columns(), &[vec![11], vec![8]]);
    }

    #[test]
    fn concat_columns_side_by_side() {
        let left = Word2d::new(vec![vec![11, 1]]).unwrap();
        let right = Word2d::new(vec![vec![8, 0]]).unwrap();
        let w = left.concat(&right, Axis::E1).unwrap();
        assert_eq!(w.cartesian_rows(), vec![vec![1, 0], vec![11, 8]]);
    }

    #[test]
    fn concat_mismatch() {
        let domino = Word2d::new(vec![vec![1], vec![2]]).unwrap();
        let err = domino.concat(&Word2d::letter(3), Axis::E2).unwrap_err();
        assert!(matches!(err, Error::Concat { .. }));
    }

    #[test]
    fn subwords_edge_cases() {
        let w = Word2d::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(w.subwords(w.shape()), BTreeSet::from([w.clone()]));
        assert!(Word2d::letter(0).subwords((2, 2)).is_empty());
        assert_eq!(w.subwords((1, 1)).len(), 4);
    }

    #[test]
    fn cartesian_round_trip() {
        let rows = vec![vec![8, 16], vec![0, 3]];
        let w = Word2d::from_cartesian_rows(&rows).unwrap();
        assert_eq!(w.get(0, 0), 0);
        assert_eq!(w.get(1, 1), 16);
        assert_eq!(w.cartesian_rows(), rows);
    }

    #[test]
    fn contains_factor() {
        let w = Word2d::new(vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(w.contains(&Word2d::new(vec![vec![2, 3], vec![5, 6]]).unwrap()));
        assert!(!w.contains(&Word2d::new(vec![vec![3, 2]]).unwrap()));
    }
}
