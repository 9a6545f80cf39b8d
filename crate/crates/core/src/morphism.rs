//! Two-dimensional morphisms: letter to rectangular block maps.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::spectral::IntMatrix;
use crate::tile::Axis;
use crate::word::Word2d;

/// Which end of a domino image carries the marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A map from letters `0..domain_len` to nonempty words over `0..codomain_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism2d {
    codomain_len: usize,
    images: Vec<Word2d>,
}

impl Morphism2d {
    pub fn new(images: Vec<Word2d>, codomain_len: usize) -> Result<Self> {
        for (a, w) in images.iter().enumerate() {
            if w.max_letter() >= codomain_len {
                return Err(Error::Argument(format!(
                    "image of {a} uses letter {} outside the codomain of size {codomain_len}",
                    w.max_letter()
                )));
            }
        }
        Ok(Morphism2d {
            codomain_len,
            images,
        })
    }

    /// Builds a morphism from a column table, codomain size inferred.
    pub fn from_columns(table: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let images = table
            .into_iter()
            .map(Word2d::new)
            .collect::<Result<Vec<_>>>()?;
        let codomain_len = images.iter().map(|w| w.max_letter() + 1).max().unwrap_or(0);
        Morphism2d::new(images, codomain_len)
    }

    pub fn identity(n: usize) -> Self {
        Morphism2d {
            codomain_len: n,
            images: (0..n).map(Word2d::letter).collect(),
        }
    }

    pub fn domain_len(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_len(&self) -> usize {
        self.codomain_len
    }

    pub fn images(&self) -> &[Word2d] {
        &self.images
    }

    pub fn image(&self, a: usize) -> &Word2d {
        &self.images[a]
    }

    fn is_endomorphism(&self) -> bool {
        self.domain_len() == self.codomain_len
    }

    /// Block assembly of the images of the letters of `w`.
    pub fn apply(&self, w: &Word2d) -> Result<Word2d> {
        if let Some(a) = w.cells().map(|(_, _, a)| a).find(|&a| a >= self.domain_len()) {
            return Err(Error::Argument(format!("letter {a} is outside the domain")));
        }
        let (width, height) = w.shape();
        let img = |x: usize, y: usize| &self.images[w.get(x, y)];
        let mut widths = Vec::with_capacity(width);
        for x in 0..width {
            let expected = img(x, 0).width();
            if let Some(y) = (1..height).find(|&y| img(x, y).width() != expected) {
                return Err(Error::Assembly(format!(
                    "images at ({x}, 0) and ({x}, {y}) have widths {} and {}",
                    expected,
                    img(x, y).width()
                )));
            }
            widths.push(expected);
        }
        let mut heights = Vec::with_capacity(height);
        for y in 0..height {
            let expected = img(0, y).height();
            if let Some(x) = (1..width).find(|&x| img(x, y).height() != expected) {
                return Err(Error::Assembly(format!(
                    "images at (0, {y}) and ({x}, {y}) have heights {} and {}",
                    expected,
                    img(x, y).height()
                )));
            }
            heights.push(expected);
        }
        let mut columns = Vec::with_capacity(widths.iter().sum());
        for (x, &bw) in widths.iter().enumerate() {
            for i in 0..bw {
                let column: Vec<usize> = (0..height)
                    .flat_map(|y| img(x, y).columns()[i].iter().copied())
                    .collect();
                columns.push(column);
            }
        }
        Word2d::new(columns)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism2d) -> Result<Morphism2d> {
        if inner.codomain_len != self.domain_len() {
            return Err(Error::Argument(format!(
                "codomain size {} does not match domain size {}",
                inner.codomain_len,
                self.domain_len()
            )));
        }
        let images = inner
            .images
            .iter()
            .enumerate()
            .map(|(a, w)| {
                self.apply(w).map_err(|e| Error::Composition {
                    letter: a,
                    msg: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism2d {
            codomain_len: self.codomain_len,
            images,
        })
    }

    /// The `n`-th power of an endomorphism.
    pub fn power(&self, n: usize) -> Result<Morphism2d> {
        if !self.is_endomorphism() {
            return Err(Error::Argument("only endomorphisms have powers".into()));
        }
        let mut out = Morphism2d::identity(self.domain_len());
        for _ in 0..n {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    /// `self^n(letter)`.
    pub fn iterate(&self, letter: usize, n: usize) -> Result<Word2d> {
        if !self.is_endomorphism() {
            return Err(Error::Argument("only endomorphisms can be iterated".into()));
        }
        if letter >= self.domain_len() {
            return Err(Error::Argument(format!("letter {letter} is outside the domain")));
        }
        let mut w = Word2d::letter(letter);
        for step in 1..=n {
            w = self.apply(&w).map_err(|e| Error::Iteration {
                step,
                msg: e.to_string(),
            })?;
        }
        Ok(w)
    }

    /// Entry `(i, j)` counts the occurrences of letter `i` in the image of `j`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut m = vec![vec![0i64; self.domain_len()]; self.codomain_len];
        for (j, w) in self.images.iter().enumerate() {
            for (_, _, i) in w.cells() {
                m[i][j] += 1;
            }
        }
        IntMatrix::from_i64(&m)
    }

    /// Every image has both dimensions at least `2` after some power: here,
    /// primitivity of the incidence matrix and one image of shape at least 2x2.
    pub fn is_expansive(&self) -> bool {
        self.is_endomorphism()
            && self.incidence_matrix().primitivity_exponent().is_some()
            && self.images.iter().any(|w| w.width() >= 2 && w.height() >= 2)
    }

    /// The 2x2 factors of the language of `self`: the least set of factors of
    /// shape at most 2x2 that contains the letters and is closed under taking
    /// such factors of images.
    pub fn factors_2x2(&self) -> Result<BTreeSet<Word2d>> {
        const CAP: usize = 10_000;
        if !self.is_endomorphism() {
            return Err(Error::Argument("factor closure needs an endomorphism".into()));
        }
        let shapes = [(1, 1), (2, 1), (1, 2), (2, 2)];
        let mut seen: BTreeSet<Word2d> = (0..self.domain_len()).map(Word2d::letter).collect();
        let mut frontier: Vec<Word2d> = seen.iter().cloned().collect();
        let mut round = 0;
        while !frontier.is_empty() {
            round += 1;
            if round > CAP {
                return Err(Error::Iteration {
                    step: round,
                    msg: "factor closure did not stabilise".into(),
                });
            }
            let mut next = Vec::new();
            for w in &frontier {
                let Ok(image) = self.apply(w) else { continue };
                for shape in shapes {
                    for f in image.subwords(shape) {
                        if seen.insert(f.clone()) {
                            next.push(f);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(seen.into_iter().filter(|w| w.shape() == (2, 2)).collect())
    }

    /// Whether `letter` sits in the corner of its own image selected by
    /// `sign`: `+1` selects the first index on an axis, `-1` the last.
    pub fn is_prolongable(&self, letter: usize, sign: (i8, i8)) -> bool {
        if !self.is_endomorphism() || letter >= self.domain_len() {
            return false;
        }
        let w = &self.images[letter];
        let pick = |s: i8, n: usize| if s > 0 { 0 } else { n - 1 };
        w.get(pick(sign.0, w.width()), pick(sign.1, w.height())) == letter
    }

    /// Sufficient condition for recognizability: the images are pairwise
    /// distinct and each is a non-marker letter or a domino along `axis`
    /// pairing a non-marker with a marker on the given side.
    pub fn check_recognizability_criterion(
        &self,
        markers: &BTreeSet<usize>,
        axis: Axis,
        side: Side,
    ) -> bool {
        let distinct: BTreeSet<&Word2d> = self.images.iter().collect();
        if distinct.len() != self.images.len() {
            return false;
        }
        let domino_shape = match axis {
            Axis::E1 => (2, 1),
            Axis::E2 => (1, 2),
        };
        self.images.iter().all(|w| {
            if w.shape() == (1, 1) {
                return !markers.contains(&w.get(0, 0));
            }
            if w.shape() != domino_shape {
                return false;
            }
            let cells: Vec<usize> = w.cells().map(|(_, _, a)| a).collect();
            let (first, second) = (cells[0], cells[1]);
            match side {
                Side::Right => !markers.contains(&first) && markers.contains(&second),
                Side::Left => markers.contains(&first) && !markers.contains(&second),
            }
        })
    }

    /// JSON object keyed by domain index, each value a list of columns.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(a, w)| {
                format!(
                    "  \"{a}\": {}",
                    serde_json::to_string(w.columns()).expect("plain integers")
                )
            })
            .collect();
        format!("{{\n{}\n}}\n", body.join(",\n"))
    }

    /// Parses the format of [`Morphism2d::to_json`]. The codomain size is
    /// `codomain_len` if given, else one more than the largest letter.
    pub fn from_json(text: &str, codomain_len: Option<usize>) -> Result<Self> {
        let raw: BTreeMap<String, Vec<Vec<usize>>> =
            serde_json::from_str(text).map_err(|e| Error::MorphismFormat(e.to_string()))?;
        let mut table: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        for (k, v) in raw {
            let a: usize = k
                .parse()
                .map_err(|_| Error::MorphismFormat(format!("key {k:?} is not an index")))?;
            table.insert(a, v);
        }
        if let Some((i, _)) = table.keys().enumerate().find(|(i, &k)| *i != k) {
            return Err(Error::MorphismFormat(format!("missing image for letter {i}")));
        }
        let images = table
            .into_iter()
            .map(|(a, cols)| {
                Word2d::new(cols).map_err(|e| Error::MorphismFormat(format!("letter {a}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let inferred = images.iter().map(|w| w.max_letter() + 1).max().unwrap_or(0);
        Morphism2d::new(images, codomain_len.unwrap_or(inferred))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{alpha, beta, omega};

    #[test]
    fn apply_identity() {
        let w = Word2d::new(vec![vec![1, 2], vec![0, 1]]).unwrap();
        assert_eq!(Morphism2d::identity(3).apply(&w).unwrap(), w);
    }

    #[test]
    fn apply_assembles_blocks() {
        let m = Morphism2d::from_columns(vec![vec![vec![0, 1]], vec![vec![2, 3]]]).unwrap();
        let w = Word2d::new(vec![vec![0], vec![1]]).unwrap();
        assert_eq!(
            m.apply(&w).unwrap().columns(),
            &[vec![0, 1], vec![2, 3]]
        );
    }

    #[test]
    fn apply_rejects_misaligned_blocks() {
        let m = Morphism2d::from_columns(vec![vec![vec![0, 1]], vec![vec![2]]]).unwrap();
        let w = Word2d::new(vec![vec![0], vec![1]]).unwrap();
        assert!(matches!(m.apply(&w), Err(Error::Assembly(_))));
    }

    #[test]
    fn composition_of_tables() {
        let ab = alpha().compose(&beta()).unwrap();
        assert_eq!(ab.image(2).columns(), &[vec![15], vec![11]]);
        let m = omega();
        assert_eq!(m.compose(&Morphism2d::identity(19)).unwrap(), m);
    }

    #[test]
    fn iterate_zero_is_letter() {
        assert_eq!(omega().iterate(4, 0).unwrap(), Word2d::letter(4));
    }

    #[test]
    fn factors_of_trivial_morphism() {
        assert!(Morphism2d::identity(1).factors_2x2().unwrap().is_empty());
    }

    #[test]
    fn primitive_exponent_of_small_matrix() {
        let m = IntMatrix::from_i64(&[vec![0, 1], vec![1, 1]]);
        assert_eq!(m.primitivity_exponent(), Some(2));
        assert_eq!(IntMatrix::identity(2).primitivity_exponent(), None);
    }

    #[test]
    fn recognizability_needs_injectivity() {
        let m = Morphism2d::from_columns(vec![vec![vec![0]], vec![vec![0]]]).unwrap();
        assert!(!m.check_recognizability_criterion(&BTreeSet::new(), Axis::E1, Side::Right));
    }

    #[test]
    fn json_round_trip() {
        let a = alpha();
        let text = a.to_json();
        assert!(text.contains("\"8\": [[11,1]]"));
        assert_eq!(Morphism2d::from_json(&text, Some(19)).unwrap(), a);
    }

    #[test]
    fn json_errors() {
        assert!(Morphism2d::from_json("{\"1\": [[0]]}", None).is_err());
        assert!(Morphism2d::from_json("{\"x\": [[0]]}", None).is_err());
        assert!(Morphism2d::from_json("{\"0\": [[0],[1,2]]}", None).is_err());
    }
}
