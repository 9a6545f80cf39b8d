//! Wang tile sets, two-dimensional morphisms and the marker machinery that
//! desubstitutes a Wang shift into a derived one.
//!
//! Tiles are `(right, top, left, bottom)` tuples of color tokens. Words are
//! stored column by column, each column from bottom to top.

pub mod corpus;
pub mod derivation;
pub mod equivalence;
pub mod error;
pub mod morphism;
pub mod render;
pub mod solver;
pub mod spectral;
pub mod tile;
pub mod transducer;
pub mod word;

pub use derivation::{derive, find_marker_candidates, verify_markers, Derivation, MarkerReport, MarkerSet};
pub use equivalence::{check_equivalence, Equivalence};
pub use error::{Error, Result};
pub use morphism::{Morphism2d, Side};
pub use solver::{dominoes_with_surrounding, patterns_with_surrounding, solve_rectangle, Answer, Mode, Pins, TilingSolver};
pub use tile::{fuse_sets, Axis, Color, WangTile, WangTileSet};
pub use transducer::{trim_tileset, Transducer, Transition};
pub use word::Word2d;
