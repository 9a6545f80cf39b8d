//! Text, SVG and TikZ views of patterns and morphisms.
//!
//! All output is in Cartesian orientation: row `0` is drawn at the bottom.

mod stone;

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::morphism::Morphism2d;
use crate::tile::{Axis, WangTileSet};
use crate::word::Word2d;

pub use stone::{format_significant, stone_layout, stone_render, total_area, StoneGeometry, StoneRect};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    /// Text with ASCII in place of box-drawing characters.
    Ascii,
    Svg,
    Tikz,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            "tikz" => Ok(Format::Tikz),
            other => Err(Error::Argument(format!(
                "unknown format {other:?}; expected text, ascii, svg or tikz"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labels {
    Index,
    Colors,
}

impl FromStr for Labels {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "index" => Ok(Labels::Index),
            "colors" => Ok(Labels::Colors),
            other => Err(Error::Argument(format!(
                "unknown labels {other:?}; expected index or colors"
            ))),
        }
    }
}

/// A stable fill color derived from a token.
pub(crate) fn palette(token: &str) -> String {
    // FNV-1a
    let mut h: u32 = 0x811c_9dc5;
    for b in token.bytes() {
        h ^= b as u32;
        h = h.wrapping_mul(0x0100_0193);
    }
    format!("hsl({},65%,78%)", h % 360)
}

struct Glyphs {
    h: char,
    v: char,
    corners: [char; 4],
}

const BOX: Glyphs = Glyphs {
    h: '─',
    v: '│',
    corners: ['┌', '┐', '└', '┘'],
};

const ASCII: Glyphs = Glyphs {
    h: '-',
    v: '|',
    corners: ['+', '+', '+', '+'],
};

fn center(s: &str, width: usize, fill: char) -> String {
    let n = s.chars().count();
    let left = (width.saturating_sub(n)) / 2;
    let right = width.saturating_sub(n + left);
    format!(
        "{}{}{}",
        fill.to_string().repeat(left),
        s,
        fill.to_string().repeat(right)
    )
}

fn render_text(p: &Word2d, set: &WangTileSet, labels: Labels, g: &Glyphs) -> String {
    let tiles = set.tiles();
    let label = |a: usize| match labels {
        Labels::Index => a.to_string(),
        Labels::Colors => String::new(),
    };
    let colors = |a: usize| {
        let t = &tiles[a];
        (t.right.display(), t.top.display(), t.left.display(), t.bottom.display())
    };
    let inner = p
        .cells()
        .map(|(_, _, a)| {
            let (r, t, l, b) = colors(a);
            let side = l.chars().count() + r.chars().count() + label(a).chars().count() + 2;
            side.max(t.chars().count() + 2).max(b.chars().count() + 2)
        })
        .max()
        .unwrap_or(3);
    let mut out = String::new();
    for row in p.cartesian_rows() {
        let mut lines = [String::new(), String::new(), String::new()];
        for (i, &a) in row.iter().enumerate() {
            if i > 0 {
                lines.iter_mut().for_each(|l| l.push(' '));
            }
            let (r, t, l, b) = colors(a);
            lines[0].push(g.corners[0]);
            lines[0].push_str(&center(&t, inner, g.h));
            lines[0].push(g.corners[1]);
            let gap = inner + 2 - l.chars().count() - r.chars().count();
            let middle = center(&label(a), gap, ' ');
            let _ = write!(lines[1], "{l}{middle}{r}");
            lines[2].push(g.corners[2]);
            lines[2].push_str(&center(&b, inner, g.h));
            lines[2].push(g.corners[3]);
        }
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    out
}

fn render_index_grid(p: &Word2d, g: &Glyphs) -> String {
    let width = p.max_letter().to_string().len();
    let (w, _) = p.shape();
    let rule = |l: char, r: char| {
        let mut s = String::new();
        s.push(l);
        s.push_str(&std::iter::repeat_n(g.h, w * (width + 1) + 1).collect::<String>());
        s.push(r);
        s.push('\n');
        s
    };
    let mut out = rule(g.corners[0], g.corners[1]);
    for row in p.cartesian_rows() {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>width$}")).collect();
        let _ = writeln!(out, "{} {} {}", g.v, cells.join(" "), g.v);
    }
    out.push_str(&rule(g.corners[2], g.corners[3]));
    out
}

fn svg_cell(out: &mut String, set: &WangTileSet, a: usize, x: f64, y: f64, s: f64, labels: Labels) {
    let t = &set.tiles()[a];
    let (cx, cy) = (x + s / 2.0, y + s / 2.0);
    let triangles = [
        (&t.right, [(x + s, y), (x + s, y + s)], (x + 0.82 * s, cy)),
        (&t.top, [(x, y), (x + s, y)], (cx, y + 0.18 * s)),
        (&t.left, [(x, y + s), (x, y)], (x + 0.18 * s, cy)),
        (&t.bottom, [(x + s, y + s), (x, y + s)], (cx, y + 0.82 * s)),
    ];
    for (color, [(x1, y1), (x2, y2)], (lx, ly)) in triangles {
        let _ = writeln!(
            out,
            "  <polygon points=\"{x1},{y1} {x2},{y2} {cx},{cy}\" fill=\"{}\" stroke=\"black\" stroke-width=\"0.5\"/>",
            palette(color.as_str())
        );
        if labels == Labels::Colors {
            let _ = writeln!(
                out,
                "  <text x=\"{lx}\" y=\"{ly}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
                s * 0.2,
                color.display()
            );
        }
    }
    if labels == Labels::Index {
        let _ = writeln!(
            out,
            "  <text x=\"{cx}\" y=\"{cy}\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{a}</text>",
            s * 0.3
        );
    }
}

fn render_svg(p: &Word2d, set: &WangTileSet, labels: Labels) -> String {
    const S: f64 = 60.0;
    let (w, h) = p.shape();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        w as f64 * S,
        h as f64 * S,
        w as f64 * S,
        h as f64 * S
    );
    for (x, y, a) in p.cells() {
        let top = (h - 1 - y) as f64 * S;
        svg_cell(&mut out, set, a, x as f64 * S, top, S, labels);
    }
    for (x, y, axis) in p.violations(set) {
        let (x1, y1, x2, y2) = match axis {
            Axis::E1 => ((x + 1) as f64, (h - 1 - y) as f64, (x + 1) as f64, (h - y) as f64),
            Axis::E2 => (x as f64, (h - 1 - y) as f64, (x + 1) as f64, (h - 1 - y) as f64),
        };
        let _ = writeln!(
            out,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"red\" stroke-width=\"4\"/>",
            x1 * S,
            y1 * S,
            x2 * S,
            y2 * S
        );
    }
    out.push_str("</svg>\n");
    out
}

fn tikz_tile(out: &mut String, set: &WangTileSet, a: usize, x: usize, y: usize, labels: Labels) {
    let t = &set.tiles()[a];
    let _ = writeln!(out, "  \\draw ({x},{y}) rectangle +(1,1);");
    let _ = writeln!(out, "  \\draw ({x},{y}) -- +(1,1) ({x},{}) -- +(1,-1);", y + 1);
    match labels {
        Labels::Colors => {
            let _ = writeln!(
                out,
                "  \\node at ({x}.8,{y}.5) {{{}}};\n  \\node at ({x}.5,{y}.8) {{{}}};\n  \\node at ({x}.2,{y}.5) {{{}}};\n  \\node at ({x}.5,{y}.2) {{{}}};",
                t.right.display(),
                t.top.display(),
                t.left.display(),
                t.bottom.display()
            );
        }
        Labels::Index => {
            let _ = writeln!(out, "  \\node[fill=white,inner sep=1pt] at ({x}.5,{y}.5) {{{a}}};");
        }
    }
}

fn tikz_document(body: &str) -> String {
    format!(
        "\\documentclass[tikz]{{standalone}}\n\\begin{{document}}\n\\begin{{tikzpicture}}[scale=1.2,every node/.style={{font=\\scriptsize}}]\n{body}\\end{{tikzpicture}}\n\\end{{document}}\n"
    )
}

fn render_tikz(p: &Word2d, set: &WangTileSet, labels: Labels) -> String {
    let mut body = String::new();
    for (x, y, a) in p.cells() {
        tikz_tile(&mut body, set, a, x, y, labels);
    }
    for (x, y, axis) in p.violations(set) {
        let _ = match axis {
            Axis::E1 => writeln!(body, "  \\draw[red,very thick] ({},{y}) -- +(0,1);", x + 1),
            Axis::E2 => writeln!(body, "  \\draw[red,very thick] ({x},{}) -- +(1,0);", y + 1),
        };
    }
    tikz_document(&body)
}

/// Renders a pattern over `set`. Internal color mismatches are marked, not refused.
pub fn render(p: &Word2d, set: &WangTileSet, format: Format, labels: Labels) -> Result<String> {
    if let Some(a) = p.cells().map(|(_, _, a)| a).find(|&a| a >= set.len()) {
        return Err(Error::Argument(format!("tile {a} is not in the set")));
    }
    let mut out = match (format, labels) {
        (Format::Text, Labels::Index) => render_index_grid(p, &BOX),
        (Format::Ascii, Labels::Index) => render_index_grid(p, &ASCII),
        (Format::Text, Labels::Colors) => render_text(p, set, labels, &BOX),
        (Format::Ascii, Labels::Colors) => render_text(p, set, labels, &ASCII),
        (Format::Svg, _) => return Ok(render_svg(p, set, labels)),
        (Format::Tikz, _) => return Ok(render_tikz(p, set, labels)),
    };
    let violations = p.violations(set);
    if !violations.is_empty() {
        let list: Vec<String> = violations
            .iter()
            .map(|(x, y, axis)| format!("({x},{y},{axis})"))
            .collect();
        let _ = writeln!(out, "mismatched edges: {}", list.join(" "));
    }
    Ok(out)
}

/// The table `letter -> image` of a morphism, each side drawn as tiles.
pub fn render_morphism(
    m: &Morphism2d,
    domain: &WangTileSet,
    codomain: &WangTileSet,
    format: Format,
) -> Result<String> {
    if domain.len() != m.domain_len() || codomain.len() < m.codomain_len() {
        return Err(Error::Argument("tile sets do not fit the morphism".into()));
    }
    match format {
        Format::Text | Format::Ascii => {
            let mut out = String::new();
            for (a, w) in m.images().iter().enumerate() {
                let _ = writeln!(out, "{a} ->");
                out.push_str(&render(w, codomain, format, Labels::Index)?);
            }
            Ok(out)
        }
        Format::Svg => {
            const S: f64 = 40.0;
            const GAP: f64 = 20.0;
            let row_h: Vec<f64> = m.images().iter().map(|w| w.height() as f64 * S).collect();
            let total_h: f64 = row_h.iter().map(|h| h + GAP).sum();
            let max_w = m.images().iter().map(Word2d::width).max().unwrap_or(1) as f64;
            let width = S * (max_w + 3.0);
            let mut out = String::new();
            out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
            let _ = writeln!(
                out,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{total_h}\" viewBox=\"0 0 {width} {total_h}\">"
            );
            let mut top = 0.0;
            for (a, w) in m.images().iter().enumerate() {
                svg_cell(&mut out, domain, a, 0.0, top, S, Labels::Index);
                let _ = writeln!(
                    out,
                    "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\">&#8614;</text>",
                    1.5 * S,
                    top + S * 0.6,
                    S * 0.4
                );
                let h = w.height();
                for (x, y, b) in w.cells() {
                    let cell_top = top + (h - 1 - y) as f64 * S;
                    svg_cell(&mut out, codomain, b, (2 + x) as f64 * S, cell_top, S, Labels::Index);
                }
                top += row_h[a] + GAP;
            }
            out.push_str("</svg>\n");
            Ok(out)
        }
        Format::Tikz => {
            let mut body = String::new();
            let mut y0 = 0usize;
            for (a, w) in m.images().iter().enumerate().rev() {
                tikz_tile(&mut body, domain, a, 0, y0, Labels::Index);
                let _ = writeln!(body, "  \\node at (1.5,{y0}.5) {{$\\mapsto$}};");
                for (x, y, b) in w.cells() {
                    tikz_tile(&mut body, codomain, b, 2 + x, y0 + y, Labels::Index);
                }
                y0 += w.height() + 1;
            }
            Ok(tikz_document(&body))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tileset_u;

    #[test]
    fn single_tile_box() {
        let u = tileset_u();
        let s = render(&Word2d::letter(0), &u, Format::Text, Labels::Colors).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains('O'));
        assert!(lines[1].starts_with('J') && lines[1].ends_with('F'));
        assert!(lines[2].contains('O'));
    }

    #[test]
    fn ascii_fallback() {
        let u = tileset_u();
        let s = render(&Word2d::letter(0), &u, Format::Ascii, Labels::Colors).unwrap();
        assert!(s.is_ascii());
    }

    #[test]
    fn violations_are_reported() {
        let u = tileset_u();
        let bad = Word2d::new(vec![vec![0], vec![0]]).unwrap();
        let s = render(&bad, &u, Format::Text, Labels::Index).unwrap();
        assert!(s.contains("mismatched edges: (0,0,e1)"));
        assert!(render(&bad, &u, Format::Svg, Labels::Index).unwrap().contains("stroke=\"red\""));
    }

    #[test]
    fn unknown_format() {
        assert!("png".parse::<Format>().is_err());
    }

    #[test]
    fn deterministic_bytes() {
        let u = tileset_u();
        let w = Word2d::new(vec![vec![14, 2], vec![8, 0]]).unwrap();
        for f in [Format::Text, Format::Svg, Format::Tikz] {
            assert_eq!(
                render(&w, &u, f, Labels::Colors).unwrap(),
                render(&w, &u, f, Labels::Colors).unwrap()
            );
        }
    }
}
