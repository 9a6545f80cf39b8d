//! Transducer view of a tile set.
//!
//! States are vertical colors. The tile `(t, b, s, a)` is the transition
//! `s --a|b--> t`: it reads the bottom color and writes the top color.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::tile::{Axis, Color, WangTile, WangTileSet};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: Color,
    pub input: Color,
    pub output: Color,
    pub to: Color,
}

impl Transition {
    pub fn from_tile(t: &WangTile) -> Self {
        Transition {
            from: t.left.clone(),
            input: t.bottom.clone(),
            output: t.top.clone(),
            to: t.right.clone(),
        }
    }

    pub fn to_tile(&self) -> WangTile {
        WangTile::new(
            self.to.clone(),
            self.output.clone(),
            self.from.clone(),
            self.input.clone(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Transducer {
    states: BTreeSet<Color>,
    transitions: Vec<Transition>,
}

impl Transducer {
    pub fn from_tileset(set: &WangTileSet) -> Self {
        Transducer {
            states: set.vertical_colors().clone(),
            transitions: set.tiles().iter().map(Transition::from_tile).collect(),
        }
    }

    pub fn states(&self) -> &BTreeSet<Color> {
        &self.states
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn to_tileset(&self) -> Result<WangTileSet> {
        WangTileSet::new(self.transitions.iter().map(Transition::to_tile).collect())
    }

    /// Recursively removes states without incoming or without outgoing
    /// transitions, together with their transitions.
    pub fn trim(&self) -> Transducer {
        let mut transitions = self.transitions.clone();
        loop {
            let targets: BTreeSet<&Color> = transitions.iter().map(|t| &t.to).collect();
            let sources: BTreeSet<&Color> = transitions.iter().map(|t| &t.from).collect();
            let kept: Vec<Transition> = transitions
                .iter()
                .filter(|t| targets.contains(&t.from) && sources.contains(&t.to))
                .cloned()
                .collect();
            if kept.len() == transitions.len() {
                break;
            }
            transitions = kept;
        }
        let states = transitions
            .iter()
            .flat_map(|t| [t.from.clone(), t.to.clone()])
            .collect();
        Transducer {
            states,
            transitions,
        }
    }

    /// Usual composition: the output of `self` is fed as input to `next`.
    /// Composite states are the concatenated color pairs.
    pub fn compose(&self, next: &Transducer) -> Transducer {
        let mut by_input: BTreeMap<&Color, Vec<&Transition>> = BTreeMap::new();
        for t in &next.transitions {
            by_input.entry(&t.input).or_default().push(t);
        }
        let mut transitions = Vec::new();
        for a in &self.transitions {
            for b in by_input.get(&a.output).into_iter().flatten() {
                transitions.push(Transition {
                    from: a.from.concat(&b.from),
                    input: a.input.clone(),
                    output: b.output.clone(),
                    to: a.to.concat(&b.to),
                });
            }
        }
        let states = transitions
            .iter()
            .flat_map(|t| [t.from.clone(), t.to.clone()])
            .collect();
        Transducer {
            states,
            transitions,
        }
    }

    /// Runs the transducer from `start` on `input`, backtracking over
    /// nondeterministic choices in transition order. Returns the first
    /// complete run as `(output, end_state)`.
    pub fn run(&self, start: &Color, input: &[Color]) -> Result<(Vec<Color>, Color)> {
        let mut furthest = 0;
        let mut out = Vec::with_capacity(input.len());
        match self.run_from(start, input, 0, &mut out, &mut furthest) {
            Some(end) => Ok((out, end)),
            None => Err(Error::Run {
                position: furthest,
                msg: format!(
                    "no transition reading {} from a reachable state",
                    input.get(furthest).map(|c| c.to_string()).unwrap_or_default()
                ),
            }),
        }
    }

    fn run_from(
        &self,
        state: &Color,
        input: &[Color],
        pos: usize,
        out: &mut Vec<Color>,
        furthest: &mut usize,
    ) -> Option<Color> {
        *furthest = (*furthest).max(pos);
        if pos == input.len() {
            return Some(state.clone());
        }
        for t in &self.transitions {
            if &t.from == state && t.input == input[pos] {
                out.push(t.output.clone());
                if let Some(end) = self.run_from(&t.to, input, pos + 1, out, furthest) {
                    return Some(end);
                }
                out.pop();
            }
        }
        None
    }

    /// All complete runs from `start` on `input`.
    pub fn runs(&self, start: &Color, input: &[Color]) -> Vec<(Vec<Color>, Color)> {
        let mut frontier = vec![(start.clone(), Vec::new())];
        for symbol in input {
            let mut next = Vec::new();
            for (state, out) in &frontier {
                for t in &self.transitions {
                    if &t.from == state && &t.input == symbol {
                        let mut o: Vec<Color> = out.clone();
                        o.push(t.output.clone());
                        next.push((t.to.clone(), o));
                    }
                }
            }
            frontier = next;
        }
        frontier.into_iter().map(|(s, o)| (o, s)).collect()
    }
}

/// Trims a fused tile set through its transducer. Vertical fusions are
/// trimmed on `M_T` (vertical-color states), horizontal fusions on the
/// transducer of the dual set (horizontal-color states). Surviving tiles keep
/// their relative order.
pub fn trim_tileset(set: &WangTileSet, axis: Axis) -> WangTileSet {
    let kept: BTreeSet<WangTile> = match axis {
        Axis::E2 => Transducer::from_tileset(set)
            .trim()
            .transitions()
            .iter()
            .map(Transition::to_tile)
            .collect(),
        Axis::E1 => Transducer::from_tileset(&set.dual())
            .trim()
            .transitions()
            .iter()
            .map(|t| t.to_tile().dual())
            .collect(),
    };
    WangTileSet::new(
        set.tiles()
            .iter()
            .filter(|t| kept.contains(*t))
            .cloned()
            .collect(),
    )
    .expect("subset of a duplicate-free set")
}

/// Parses a color word written one character per color, e.g. `"KOKPO"`.
pub fn color_word(s: &str) -> Vec<Color> {
    s.chars()
        .map(|c| Color::new(c.to_string()).expect("non-whitespace char"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tileset_u;
    use crate::tile::fuse_sets;

    fn c(s: &str) -> Color {
        Color::new(s).unwrap()
    }

    #[test]
    fn first_tile_transition() {
        let m = Transducer::from_tileset(&tileset_u());
        assert_eq!(
            m.transitions()[0],
            Transition {
                from: c("J"),
                input: c("O"),
                output: c("O"),
                to: c("F")
            }
        );
        assert_eq!(m.states().len(), 10);
        assert_eq!(m.transitions().len(), 19);
    }

    #[test]
    fn empty_transducer() {
        let m = Transducer::from_tileset(&WangTileSet::default());
        assert!(m.states().is_empty());
        assert!(m.transitions().is_empty());
    }

    #[test]
    fn round_trip_tiles() {
        let u = tileset_u();
        assert_eq!(Transducer::from_tileset(&u).to_tileset().unwrap(), u);
    }

    #[test]
    fn worked_run() {
        let m = Transducer::from_tileset(&tileset_u());
        let (out, end) = m.run(&c("G"), &color_word("KOKPOKOKPOKPO")).unwrap();
        assert_eq!(out, color_word("PLKPLPLKPLPPL"));
        assert_eq!(end, c("G"));
        // the run on this input is unique
        assert_eq!(m.runs(&c("G"), &color_word("KOKPOKOKPOKPO")).len(), 1);
    }

    #[test]
    fn empty_run() {
        let m = Transducer::from_tileset(&tileset_u());
        let (out, end) = m.run(&c("F"), &[]).unwrap();
        assert!(out.is_empty());
        assert_eq!(end, c("F"));
    }

    #[test]
    fn failed_run_reports_position() {
        let m = Transducer::from_tileset(&tileset_u());
        // no tile has left color J and bottom color K
        let err = m.run(&c("J"), &color_word("K")).unwrap_err();
        assert!(matches!(err, Error::Run { position: 0, .. }));
    }

    #[test]
    fn composition_is_vertical_fusion() {
        let u = tileset_u();
        let m = Transducer::from_tileset(&u);
        let composed = m.compose(&m);
        let fused = Transducer::from_tileset(&fuse_sets(&u, &u, Axis::E2));
        let a: BTreeSet<_> = composed.transitions().iter().cloned().collect();
        let b: BTreeSet<_> = fused.transitions().iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn trimmed_horizontal_fusion_has_35_tiles() {
        let u = tileset_u();
        let uu = fuse_sets(&u, &u, Axis::E1);
        let trimmed = trim_tileset(&uu, Axis::E1);
        assert_eq!(trimmed.len(), 35);
        let square = fuse_sets(&trimmed, &trimmed, Axis::E2);
        assert_eq!(trim_tileset(&square, Axis::E2).len(), 55);
    }
}
