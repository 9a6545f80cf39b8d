//! Equivalence of tile sets up to a relabeling of vertical and horizontal colors.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::tile::{Color, WangTileSet};

/// Witness that `target = {(v(a), h(b), v(c), h(d)) | (a,b,c,d) in source}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    /// Bijection on left/right colors.
    pub vertical: BTreeMap<Color, Color>,
    /// Bijection on bottom/top colors.
    pub horizontal: BTreeMap<Color, Color>,
    /// `tiles[i]` is the index in the target of the image of source tile `i`.
    pub tiles: Vec<usize>,
}

impl Equivalence {
    pub fn is_identity_on_tiles(&self) -> bool {
        self.tiles.iter().enumerate().all(|(i, &j)| i == j)
    }
}

type Signature = (usize, usize);

fn signatures(set: &WangTileSet) -> (HashMap<Color, Signature>, HashMap<Color, Signature>) {
    let mut v: HashMap<Color, Signature> = HashMap::new();
    let mut h: HashMap<Color, Signature> = HashMap::new();
    for t in set.tiles() {
        v.entry(t.right.clone()).or_default().0 += 1;
        v.entry(t.left.clone()).or_default().1 += 1;
        h.entry(t.top.clone()).or_default().0 += 1;
        h.entry(t.bottom.clone()).or_default().1 += 1;
    }
    (v, h)
}

struct PartialBijection {
    forward: HashMap<Color, Color>,
    backward: HashMap<Color, Color>,
}

impl PartialBijection {
    fn new() -> Self {
        PartialBijection {
            forward: HashMap::new(),
            backward: HashMap::new(),
        }
    }

    /// Tries to bind `a -> b`. Returns `Some(true)` if a new binding was
    /// added, `Some(false)` if it already held, `None` on conflict.
    fn bind(&mut self, a: &Color, b: &Color) -> Option<bool> {
        match (self.forward.get(a), self.backward.get(b)) {
            (Some(x), _) if x != b => None,
            (_, Some(y)) if y != a => None,
            (Some(_), Some(_)) => Some(false),
            _ => {
                self.forward.insert(a.clone(), b.clone());
                self.backward.insert(b.clone(), a.clone());
                Some(true)
            }
        }
    }

    fn unbind(&mut self, a: &Color) {
        if let Some(b) = self.forward.remove(a) {
            self.backward.remove(&b);
        }
    }
}

struct Search<'a> {
    source: &'a WangTileSet,
    target: &'a WangTileSet,
    sig_source: (HashMap<Color, Signature>, HashMap<Color, Signature>),
    sig_target: (HashMap<Color, Signature>, HashMap<Color, Signature>),
    vertical: PartialBijection,
    horizontal: PartialBijection,
    used: Vec<bool>,
    assignment: Vec<usize>,
}

impl Search<'_> {
    fn compatible(&self, i: usize, j: usize) -> bool {
        let t = &self.source.tiles()[i];
        let s = &self.target.tiles()[j];
        let (sv, sh) = &self.sig_source;
        let (tv, th) = &self.sig_target;
        sv[&t.right] == tv[&s.right]
            && sv[&t.left] == tv[&s.left]
            && sh[&t.top] == th[&s.top]
            && sh[&t.bottom] == th[&s.bottom]
    }

    fn solve(&mut self, i: usize) -> bool {
        if i == self.source.len() {
            return true;
        }
        for j in 0..self.target.len() {
            if self.used[j] || !self.compatible(i, j) {
                continue;
            }
            let t = self.source.tiles()[i].clone();
            let s = self.target.tiles()[j].clone();
            let mut added_v = Vec::new();
            let mut added_h = Vec::new();
            let mut ok = true;
            for (a, b) in [(&t.right, &s.right), (&t.left, &s.left)] {
                match self.vertical.bind(a, b) {
                    Some(true) => added_v.push(a.clone()),
                    Some(false) => {}
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                for (a, b) in [(&t.top, &s.top), (&t.bottom, &s.bottom)] {
                    match self.horizontal.bind(a, b) {
                        Some(true) => added_h.push(a.clone()),
                        Some(false) => {}
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if ok {
                self.used[j] = true;
                self.assignment.push(j);
                if self.solve(i + 1) {
                    return true;
                }
                self.assignment.pop();
                self.used[j] = false;
            }
            for a in &added_v {
                self.vertical.unbind(a);
            }
            for a in &added_h {
                self.horizontal.unbind(a);
            }
        }
        false
    }
}

/// Searches for color bijections turning `source` into `target`.
/// Backtracks over tile assignments, pruning on per-color incidence counts.
pub fn check_equivalence(source: &WangTileSet, target: &WangTileSet) -> Option<Equivalence> {
    if source.len() != target.len()
        || source.vertical_colors().len() != target.vertical_colors().len()
        || source.horizontal_colors().len() != target.horizontal_colors().len()
    {
        return None;
    }
    let sig_source = signatures(source);
    let sig_target = signatures(target);
    let multiset = |m: &HashMap<Color, Signature>| {
        let mut v: Vec<Signature> = m.values().copied().collect();
        v.sort();
        v
    };
    if multiset(&sig_source.0) != multiset(&sig_target.0)
        || multiset(&sig_source.1) != multiset(&sig_target.1)
    {
        return None;
    }
    let mut search = Search {
        source,
        target,
        sig_source,
        sig_target,
        vertical: PartialBijection::new(),
        horizontal: PartialBijection::new(),
        used: vec![false; target.len()],
        assignment: Vec::with_capacity(source.len()),
    };
    if !search.solve(0) {
        return None;
    }
    Some(Equivalence {
        vertical: search.vertical.forward.into_iter().collect(),
        horizontal: search.horizontal.forward.into_iter().collect(),
        tiles: search.assignment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{tileset_u, tileset_v, tileset_w};

    #[test]
    fn identity_on_self() {
        let u = tileset_u();
        let e = check_equivalence(&u, &u).unwrap();
        assert!(e.is_identity_on_tiles());
        assert!(e.vertical.iter().all(|(a, b)| a == b));
        assert!(e.horizontal.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn size_mismatch() {
        assert!(check_equivalence(&tileset_u(), &tileset_v()).is_none());
    }

    #[test]
    fn symmetric_on_u_w() {
        let u = tileset_u();
        let w = tileset_w();
        let forward = check_equivalence(&u, &w).unwrap();
        let backward = check_equivalence(&w, &u).unwrap();
        assert_eq!(u.relabel(&forward.vertical, &forward.horizontal).unwrap(), w);
        assert_eq!(w.relabel(&backward.vertical, &backward.horizontal).unwrap(), u);
    }

    #[test]
    fn rejects_non_equivalent() {
        let a = WangTileSet::from_compact(&["ABAB", "ACAC"]).unwrap();
        let b = WangTileSet::from_compact(&["ABAB", "CBCB"]).unwrap();
        assert!(check_equivalence(&a, &b).is_none());
    }
}
