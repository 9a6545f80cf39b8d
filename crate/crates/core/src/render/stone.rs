//! Geometric realization of patterns as rectangles with sides in `Z[φ]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::GoldenNumber;
use crate::word::Word2d;

/// Rectangle dimensions per tile and the expansion factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneGeometry {
    pub widths: Vec<GoldenNumber>,
    pub heights: Vec<GoldenNumber>,
    pub factor: GoldenNumber,
}

impl StoneGeometry {
    /// The geometry of the 19-tile set `U` under `omega`: tiles whose
    /// top and bottom colors are `O` or `L` are `φ⁻¹` wide, tiles `u0..u7`
    /// are `φ⁻¹` high, every other side is `1`.
    pub fn for_u() -> Self {
        let thin = |set: &[usize], i: usize| {
            if set.contains(&i) {
                GoldenNumber::PHI_INV
            } else {
                GoldenNumber::ONE
            }
        };
        StoneGeometry {
            widths: (0..19).map(|i| thin(&[0, 1, 8, 9, 10, 11], i)).collect(),
            heights: (0..19).map(|i| thin(&[0, 1, 2, 3, 4, 5, 6, 7], i)).collect(),
            factor: GoldenNumber::PHI,
        }
    }

    pub fn area(&self, tile: usize) -> GoldenNumber {
        self.widths[tile] * self.heights[tile]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StoneRect {
    pub tile: usize,
    pub x: GoldenNumber,
    pub y: GoldenNumber,
    pub width: GoldenNumber,
    pub height: GoldenNumber,
}

/// Places every cell of `pattern`; columns must have a common width and rows
/// a common height.
pub fn stone_layout(pattern: &Word2d, geometry: &StoneGeometry) -> Result<Vec<StoneRect>> {
    let (w, h) = pattern.shape();
    if let Some((x, y, a)) = pattern.cells().find(|&(_, _, a)| a >= geometry.widths.len()) {
        return Err(Error::Geometry {
            x,
            y,
            msg: format!("tile {a} has no rectangle"),
        });
    }
    let mut col_w = Vec::with_capacity(w);
    for x in 0..w {
        let expected = geometry.widths[pattern.get(x, 0)];
        if let Some(y) = (1..h).find(|&y| geometry.widths[pattern.get(x, y)] != expected) {
            return Err(Error::Geometry {
                x,
                y,
                msg: format!(
                    "width {} differs from {expected} below it",
                    geometry.widths[pattern.get(x, y)]
                ),
            });
        }
        col_w.push(expected);
    }
    let mut row_h = Vec::with_capacity(h);
    for y in 0..h {
        let expected = geometry.heights[pattern.get(0, y)];
        if let Some(x) = (1..w).find(|&x| geometry.heights[pattern.get(x, y)] != expected) {
            return Err(Error::Geometry {
                x,
                y,
                msg: format!(
                    "height {} differs from {expected} to its left",
                    geometry.heights[pattern.get(x, y)]
                ),
            });
        }
        row_h.push(expected);
    }
    let mut out = Vec::with_capacity(w * h);
    let mut x0 = GoldenNumber::ZERO;
    for x in 0..w {
        let mut y0 = GoldenNumber::ZERO;
        for y in 0..h {
            out.push(StoneRect {
                tile: pattern.get(x, y),
                x: x0,
                y: y0,
                width: col_w[x],
                height: row_h[y],
            });
            y0 = y0 + row_h[y];
        }
        x0 = x0 + col_w[x];
    }
    Ok(out)
}

pub fn total_area(rects: &[StoneRect]) -> GoldenNumber {
    rects.iter().map(|r| r.width * r.height).sum()
}

/// Decimal with at most `digits` significant digits, trailing zeros removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// SVG of the placed rectangles scaled by `factor^-level`, y axis pointing up.
pub fn stone_render(pattern: &Word2d, geometry: &StoneGeometry, level: u32) -> Result<String> {
    const UNIT: f64 = 100.0;
    let rects = stone_layout(pattern, geometry)?;
    let scale = geometry.factor.to_f64().powi(-(level as i32)) * UNIT;
    let width: GoldenNumber = rects
        .iter()
        .map(|r| r.x + r.width)
        .max()
        .unwrap_or(GoldenNumber::ZERO);
    let height: GoldenNumber = rects
        .iter()
        .map(|r| r.y + r.height)
        .max()
        .unwrap_or(GoldenNumber::ZERO);
    let f = |g: GoldenNumber| format_significant(g.to_f64() * scale, 12);
    let total_h = height.to_f64() * scale;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        f(width),
        f(height),
        f(width),
        f(height)
    ));
    for r in &rects {
        let top = total_h - (r.y + r.height).to_f64() * scale;
        let cx = (r.x.to_f64() + r.width.to_f64() / 2.0) * scale;
        let cy = top + r.height.to_f64() * scale / 2.0;
        out.push_str(&format!(
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            f(r.x),
            format_significant(top, 12),
            f(r.width),
            f(r.height),
            super::palette(&r.tile.to_string()),
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>\n",
            format_significant(cx, 12),
            format_significant(cy, 12),
            format_significant(scale * 0.25, 12),
            r.tile
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_small_square() {
        let g = StoneGeometry::for_u();
        let rects = stone_layout(&Word2d::letter(0), &g).unwrap();
        assert_eq!(rects.len(), 1);
        assert_eq!(rects[0].width, GoldenNumber::PHI_INV);
        assert_eq!(rects[0].height, GoldenNumber::PHI_INV);
    }

    #[test]
    fn misaligned_column() {
        let g = StoneGeometry::for_u();
        let w = Word2d::new(vec![vec![0, 12]]).unwrap();
        assert!(matches!(
            stone_layout(&w, &g),
            Err(Error::Geometry { x: 0, y: 1, .. })
        ));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(1.618033988749895, 12), "1.61803398875");
        assert_eq!(format_significant(100.0, 12), "100");
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(-0.5, 3), "-0.5");
    }

    #[test]
    fn render_is_deterministic() {
        let g = StoneGeometry::for_u();
        let w = Word2d::new(vec![vec![15, 7], vec![11, 1]]).unwrap();
        let a = stone_render(&w, &g, 1).unwrap();
        assert_eq!(a, stone_render(&w, &g, 1).unwrap());
        assert_eq!(a.matches("<rect").count(), 4);
    }
}
