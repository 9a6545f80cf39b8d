//! Finite rectangle tiling: existence, counting and enumeration with pinned
//! cells, and the surrounding queries built on top of it.
//!
//! Boundary edges of the rectangle are unconstrained. The search assigns cells
//! row by row from the bottom, left to right, trying tiles by increasing index,
//! and maintains arc consistency between neighbouring cell domains.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tile::{Axis, Color, WangTileSet};
use crate::word::Word2d;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exists,
    Enumerate,
    Count,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Exists(bool),
    Solutions(Vec<Word2d>),
    Count(u128),
}

/// Pinned cells: `(x, y) -> tile index`.
pub type Pins = BTreeMap<(usize, usize), usize>;

#[derive(Clone, Debug)]
struct TileMask {
    words: usize,
}

impl TileMask {
    fn full(&self, n: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for i in 0..n {
            v[i / 64] |= 1 << (i % 64);
        }
        v
    }
}

/// A tile set compiled for repeated rectangle queries.
#[derive(Clone, Debug)]
pub struct TilingSolver {
    n: usize,
    mask: TileMask,
    right: Vec<usize>,
    top: Vec<usize>,
    left: Vec<usize>,
    bottom: Vec<usize>,
    /// tiles by left color id (vertical colors)
    with_left: Vec<Vec<u64>>,
    with_right: Vec<Vec<u64>>,
    /// tiles by bottom color id (horizontal colors)
    with_bottom: Vec<Vec<u64>>,
    with_top: Vec<Vec<u64>>,
    n_vertical: usize,
    n_horizontal: usize,
}

impl TilingSolver {
    pub fn new(set: &WangTileSet) -> Self {
        let n = set.len();
        let mask = TileMask {
            words: n.div_ceil(64).max(1),
        };
        let vid: BTreeMap<&Color, usize> = set
            .vertical_colors()
            .iter()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let hid: BTreeMap<&Color, usize> = set
            .horizontal_colors()
            .iter()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let right: Vec<usize> = set.tiles().iter().map(|t| vid[&t.right]).collect();
        let left: Vec<usize> = set.tiles().iter().map(|t| vid[&t.left]).collect();
        let top: Vec<usize> = set.tiles().iter().map(|t| hid[&t.top]).collect();
        let bottom: Vec<usize> = set.tiles().iter().map(|t| hid[&t.bottom]).collect();
        let index = |ids: &[usize], count: usize| {
            let mut out = vec![vec![0u64; mask.words]; count];
            for (t, &c) in ids.iter().enumerate() {
                out[c][t / 64] |= 1 << (t % 64);
            }
            out
        };
        TilingSolver {
            n,
            with_left: index(&left, vid.len()),
            with_right: index(&right, vid.len()),
            with_bottom: index(&bottom, hid.len()),
            with_top: index(&top, hid.len()),
            n_vertical: vid.len(),
            n_horizontal: hid.len(),
            mask,
            right,
            top,
            left,
            bottom,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn solve(&self, width: usize, height: usize, pins: &Pins, mode: Mode) -> Result<Answer> {
        for (&(x, y), &t) in pins {
            if x >= width || y >= height {
                return Err(Error::Argument(format!(
                    "pin ({x}, {y}) lies outside the {width}x{height} rectangle"
                )));
            }
            if t >= self.n {
                return Err(Error::Argument(format!("pinned tile {t} is not in the set")));
            }
        }
        let mut search = Search {
            solver: self,
            width,
            height,
            mode,
            count: 0,
            solutions: Vec::new(),
            assignment: vec![usize::MAX; width * height],
        };
        if width > 0 && height > 0 {
            let words = self.mask.words;
            let full = self.mask.full(self.n);
            let mut domains = Vec::with_capacity(width * height * words);
            for _ in 0..width * height {
                domains.extend_from_slice(&full);
            }
            for (&(x, y), &t) in pins {
                let cell = y * width + x;
                let d = &mut domains[cell * words..(cell + 1) * words];
                let keep = d[t / 64] & (1 << (t % 64));
                d.fill(0);
                d[t / 64] = keep;
            }
            let all: Vec<usize> = (0..width * height).collect();
            if search.propagate(&mut domains, all) {
                search.dfs(&mut domains, 0);
            }
        } else if mode == Mode::Count || mode == Mode::Exists {
            // the empty rectangle has one (empty) tiling
            search.count = 1;
        }
        Ok(match mode {
            Mode::Exists => Answer::Exists(search.count > 0),
            Mode::Count => Answer::Count(search.count),
            Mode::Enumerate => {
                let mut s = search.solutions;
                s.sort();
                Answer::Solutions(s)
            }
        })
    }

    pub fn exists(&self, width: usize, height: usize, pins: &Pins) -> Result<bool> {
        match self.solve(width, height, pins, Mode::Exists)? {
            Answer::Exists(b) => Ok(b),
            _ => unreachable!(),
        }
    }

    pub fn count(&self, width: usize, height: usize, pins: &Pins) -> Result<u128> {
        match self.solve(width, height, pins, Mode::Count)? {
            Answer::Count(c) => Ok(c),
            _ => unreachable!(),
        }
    }

    /// All tilings, sorted.
    pub fn enumerate(&self, width: usize, height: usize, pins: &Pins) -> Result<Vec<Word2d>> {
        match self.solve(width, height, pins, Mode::Enumerate)? {
            Answer::Solutions(s) => Ok(s),
            _ => unreachable!(),
        }
    }

    /// Whether `pattern` extends to a valid rectangle `r` cells larger on every side.
    pub fn has_surrounding(&self, pattern: &Word2d, radius: usize) -> Result<bool> {
        let (w, h) = pattern.shape();
        let pins: Pins = pattern
            .cells()
            .map(|(x, y, a)| ((x + radius, y + radius), a))
            .collect();
        self.exists(w + 2 * radius, h + 2 * radius, &pins)
    }
}

struct Search<'a> {
    solver: &'a TilingSolver,
    width: usize,
    height: usize,
    mode: Mode,
    count: u128,
    solutions: Vec<Word2d>,
    assignment: Vec<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.mode == Mode::Exists && self.count > 0
    }

    /// Restricts neighbour domains until a fixed point; false on a wipe-out.
    fn propagate(&self, domains: &mut [u64], mut queue: Vec<usize>) -> bool {
        let s = self.solver;
        let words = s.mask.words;
        let mut queued = vec![false; self.width * self.height];
        for &c in &queue {
            queued[c] = true;
        }
        let mut colors_v = vec![false; s.n_vertical];
        let mut colors_h = vec![false; s.n_horizontal];
        let mut allowed = vec![0u64; words];
        while let Some(cell) = queue.pop() {
            queued[cell] = false;
            let (x, y) = (cell % self.width, cell / self.width);
            let neighbours = [
                (x + 1 < self.width, cell + 1, 0u8),
                (x > 0, cell.wrapping_sub(1), 1),
                (y + 1 < self.height, cell + self.width, 2),
                (y > 0, cell.wrapping_sub(self.width), 3),
            ];
            for (present, other, side) in neighbours {
                if !present {
                    continue;
                }
                // collect the colors this cell offers on the shared edge
                let (ids, pool, index): (&Vec<usize>, &mut Vec<bool>, &Vec<Vec<u64>>) = match side {
                    0 => (&s.right, &mut colors_v, &s.with_left),
                    1 => (&s.left, &mut colors_v, &s.with_right),
                    2 => (&s.top, &mut colors_h, &s.with_bottom),
                    _ => (&s.bottom, &mut colors_h, &s.with_top),
                };
                pool.iter_mut().for_each(|b| *b = false);
                let d = &domains[cell * words..(cell + 1) * words];
                for (wi, &word) in d.iter().enumerate() {
                    let mut bits = word;
                    while bits != 0 {
                        let t = wi * 64 + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        pool[ids[t]] = true;
                    }
                }
                allowed.iter_mut().for_each(|w| *w = 0);
                for (c, &on) in pool.iter().enumerate() {
                    if on {
                        for (a, m) in allowed.iter_mut().zip(&index[c]) {
                            *a |= m;
                        }
                    }
                }
                let od = &mut domains[other * words..(other + 1) * words];
                let mut changed = false;
                let mut empty = true;
                for (o, a) in od.iter_mut().zip(&allowed) {
                    let n = *o & a;
                    if n != *o {
                        changed = true;
                        *o = n;
                    }
                    if n != 0 {
                        empty = false;
                    }
                }
                if empty {
                    return false;
                }
                if changed && !queued[other] {
                    queued[other] = true;
                    queue.push(other);
                }
            }
        }
        true
    }

    fn dfs(&mut self, domains: &mut Vec<u64>, cell: usize) {
        if self.done() {
            return;
        }
        let words = self.solver.mask.words;
        if cell == self.width * self.height {
            self.count += 1;
            if self.mode == Mode::Enumerate {
                let columns = (0..self.width)
                    .map(|x| {
                        (0..self.height)
                            .map(|y| self.assignment[y * self.width + x])
                            .collect()
                    })
                    .collect();
                self.solutions.push(Word2d::new(columns).expect("non-empty rectangle"));
            }
            return;
        }
        let d: Vec<u64> = domains[cell * words..(cell + 1) * words].to_vec();
        let single = d.iter().map(|w| w.count_ones()).sum::<u32>() == 1;
        for (wi, &word) in d.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let t = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.assignment[cell] = t;
                if single {
                    self.dfs(domains, cell + 1);
                } else {
                    let mut next = domains.clone();
                    let slot = &mut next[cell * words..(cell + 1) * words];
                    slot.fill(0);
                    slot[t / 64] = 1 << (t % 64);
                    if self.propagate(&mut next, vec![cell]) {
                        self.dfs(&mut next, cell + 1);
                    }
                }
                if self.done() {
                    return;
                }
            }
        }
    }
}

/// Decides, counts or enumerates tilings of a `width x height` rectangle.
pub fn solve_rectangle(
    set: &WangTileSet,
    width: usize,
    height: usize,
    pins: &Pins,
    mode: Mode,
) -> Result<Answer> {
    TilingSolver::new(set).solve(width, height, pins, mode)
}

/// Ordered pairs `(i, j)` such that tile `j` at `tile i + e_axis` admits a
/// surrounding of radius `radius`. Sorted.
pub fn dominoes_with_surrounding(
    set: &WangTileSet,
    axis: Axis,
    radius: usize,
) -> Vec<(usize, usize)> {
    let solver = TilingSolver::new(set);
    let tiles = set.tiles();
    let candidates: Vec<(usize, usize)> = (0..tiles.len())
        .flat_map(|i| (0..tiles.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| tiles[i].fits(&tiles[j], axis))
        .collect();
    let mut out: Vec<(usize, usize)> = candidates
        .into_par_iter()
        .filter(|&(i, j)| {
            let columns = match axis {
                Axis::E1 => vec![vec![i], vec![j]],
                Axis::E2 => vec![vec![i, j]],
            };
            let domino = Word2d::new(columns).expect("domino");
            solver
                .has_surrounding(&domino, radius)
                .expect("pins inside rectangle")
        })
        .collect();
    out.sort_unstable();
    out
}

/// All valid patterns of the given shape that admit a surrounding of the
/// given radius, sorted by column list.
pub fn patterns_with_surrounding(
    set: &WangTileSet,
    shape: (usize, usize),
    radius: usize,
) -> Result<Vec<Word2d>> {
    let (w, h) = shape;
    if w == 0 || h == 0 {
        return Err(Error::Argument("pattern shape must be at least 1x1".into()));
    }
    let solver = TilingSolver::new(set);
    let candidates = solver.enumerate(w, h, &Pins::new())?;
    let mut out: Vec<Word2d> = candidates
        .into_par_iter()
        .filter(|p| solver.has_surrounding(p, radius).expect("pins inside rectangle"))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tileset_u;

    #[test]
    fn every_tile_tiles_a_cell() {
        let u = tileset_u();
        assert_eq!(
            solve_rectangle(&u, 1, 1, &Pins::new(), Mode::Count).unwrap(),
            Answer::Count(19)
        );
    }

    #[test]
    fn stacked_pins() {
        let u = tileset_u();
        let pins = Pins::from([((1, 1), 8), ((1, 2), 0)]);
        assert_eq!(
            solve_rectangle(&u, 4, 4, &pins, Mode::Exists).unwrap(),
            Answer::Exists(true)
        );
    }

    #[test]
    fn inconsistent_pins_are_false_not_error() {
        let u = tileset_u();
        // u0 has right color F, u0 has left color J
        let pins = Pins::from([((0, 0), 0), ((1, 0), 0)]);
        assert_eq!(
            solve_rectangle(&u, 2, 1, &pins, Mode::Exists).unwrap(),
            Answer::Exists(false)
        );
        assert_eq!(
            solve_rectangle(&u, 2, 1, &pins, Mode::Enumerate).unwrap(),
            Answer::Solutions(vec![])
        );
    }

    #[test]
    fn pins_outside_rectangle() {
        let u = tileset_u();
        let pins = Pins::from([((3, 0), 0)]);
        assert!(solve_rectangle(&u, 2, 2, &pins, Mode::Exists).is_err());
    }

    #[test]
    fn radius_zero_patterns_are_tiles() {
        let u = tileset_u();
        let p = patterns_with_surrounding(&u, (1, 1), 0).unwrap();
        let expected: Vec<Word2d> = (0..19).map(Word2d::letter).collect();
        assert_eq!(p, expected);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let u = tileset_u();
        let sols = TilingSolver::new(&u).enumerate(2, 2, &Pins::new()).unwrap();
        assert!(!sols.is_empty());
        assert!(sols.iter().all(|s| s.is_valid_pattern(&u)));
        assert!(sols.windows(2).all(|p| p[0] < p[1]));
        let count = TilingSolver::new(&u).count(2, 2, &Pins::new()).unwrap();
        assert_eq!(count as usize, sols.len());
    }
}
