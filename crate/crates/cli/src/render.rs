use std::fmt::Write as _;

use eulerpath::bernoulli_lab::latex_rational;
use eulerpath::motzkin::{LatticePath, Step};
use eulerpath::{Rational, XPoly, YPoly};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Exact `num/den` form, integers included.
pub fn frac(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn xpoly_json(p: &XPoly) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(frac).collect::<Vec<_>>(),
        "display": p.to_string(),
    })
}

pub fn ypoly_json(p: &YPoly) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(xpoly_json).collect::<Vec<_>>(),
        "display": p.to_string(),
    })
}

pub fn latex_xpoly(p: &XPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { "-" } else { "+" });
        }
        let mag = c.abs();
        if i == 0 || !mag.is_one() {
            out.push_str(&latex_rational(&mag));
        }
        match i {
            0 => {}
            1 => out.push('x'),
            _ => write!(out, "x^{{{i}}}").unwrap(),
        }
    }
    out
}

pub fn step_string(path: &LatticePath) -> String {
    if path.is_empty() {
        "(empty)".into()
    } else {
        path.to_string()
    }
}

/// Text picture of a path, top row first: `/` up, `\` down, `_` level.
pub fn ascii_diagram(path: &LatticePath) -> Vec<String> {
    if path.is_empty() {
        return vec![".".into()];
    }
    let heights = path.heights();
    let cells: Vec<(usize, char)> = path
        .steps()
        .iter()
        .zip(&heights)
        .map(|(s, &h)| {
            let h = h as usize;
            match s {
                Step::U => (h, '/'),
                Step::D => (h - 1, '\\'),
                Step::H => (h, '_'),
            }
        })
        .collect();
    let rows = cells.iter().map(|c| c.0).max().unwrap_or(0) + 1;
    (0..rows)
        .rev()
        .map(|r| {
            let line: String = cells
                .iter()
                .map(|&(row, ch)| if row == r { ch } else { ' ' })
                .collect();
            line.trim_end().to_string()
        })
        .collect()
}

const UNIT: usize = 20;
const MARGIN: usize = 10;
const LABEL: usize = 16;

/// All paths stacked vertically on a unit grid.
pub fn svg_diagrams(paths: &[LatticePath]) -> String {
    let width = paths.iter().map(|p| p.len()).max().unwrap_or(0).max(1);
    let panels: Vec<usize> = paths
        .iter()
        .map(|p| {
            let top = p.heights().into_iter().max().unwrap_or(0).max(1) as usize;
            top * UNIT + LABEL + MARGIN
        })
        .collect();
    let total_w = width * UNIT + 2 * MARGIN;
    let total_h = panels.iter().sum::<usize>() + MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}">"#
    )
    .unwrap();
    let mut y0 = MARGIN;
    for (path, panel) in paths.iter().zip(&panels) {
        let top = (panel - LABEL - MARGIN) / UNIT;
        let base = y0 + LABEL + top * UNIT;
        writeln!(out, r#"<g font-family="monospace" font-size="12">"#).unwrap();
        writeln!(out, r#"<text x="{MARGIN}" y="{}">{}</text>"#, y0 + 12, step_string(path)).unwrap();
        for i in 0..=width {
            let x = MARGIN + i * UNIT;
            writeln!(out, r##"<line x1="{x}" y1="{}" x2="{x}" y2="{base}" stroke="#ddd"/>"##, base - top * UNIT).unwrap();
        }
        for j in 0..=top {
            let y = base - j * UNIT;
            writeln!(
                out,
                r##"<line x1="{MARGIN}" y1="{y}" x2="{}" y2="{y}" stroke="#ddd"/>"##,
                MARGIN + width * UNIT
            )
            .unwrap();
        }
        let points: Vec<String> = path
            .heights()
            .iter()
            .enumerate()
            .map(|(i, &h)| format!("{},{}", MARGIN + i * UNIT, base - h as usize * UNIT))
            .collect();
        writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            points.join(" ")
        )
        .unwrap();
        out.push_str("</g>\n");
        y0 += panel;
    }
    out.push_str("</svg>\n");
    out
}

/// Left-aligned columns separated by two spaces.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use eulerpath::rational::rat;

    #[test]
    fn latex_polynomials() {
        let p = XPoly::from_fracs(&[(1, 2), (3, 2), (-3, 1), (1, 1)]);
        assert_eq!(latex_xpoly(&p), "x^{3}-3x^{2}+\\frac{3}{2}x+\\frac{1}{2}");
        assert_eq!(latex_xpoly(&XPoly::constant(rat(-1, 1))), "-1");
        assert_eq!(latex_xpoly(&XPoly::zero()), "0");
    }

    #[test]
    fn fractions_always_carry_a_denominator() {
        assert_eq!(frac(&rat(-61, 64)), "-61/64");
        assert_eq!(frac(&rat(5, 1)), "5/1");
    }

    #[test]
    fn diagrams() {
        let p: LatticePath = "UUDHD".parse().unwrap();
        assert_eq!(ascii_diagram(&p), vec![" /\\_", "/   \\"]);
        let flat: LatticePath = "HH".parse().unwrap();
        assert_eq!(ascii_diagram(&flat), vec!["__"]);
        let svg = svg_diagrams(&[p, flat]);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("points=\"10,66 30,46 50,26 70,46 90,46 110,66\""));
    }
}
