//! Byte-deterministic SVG, CSV and JSON output.
//!
//! Numbers are printed in fixed-point notation with a set number of decimals;
//! a value that rounds to zero is always printed without a sign.

use std::fmt::Write as _;

use num_complex::Complex;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::{IntervalSet, Polyline};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Stroke width in user units; `None` picks 0.2% of the larger extent.
    pub stroke_width: Option<f64>,
    /// Padding on every side, as a fraction of the larger extent.
    pub margin: f64,
    pub decimals: usize,
    /// Draw each curve as three copies closed into a snowflake outline.
    pub snowflake: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            stroke_width: None,
            margin: 0.05,
            decimals: 6,
            snowflake: false,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        if !(self.margin >= 0.0 && self.margin.is_finite()) {
            return Err(Error::Render(format!(
                "margin {} must be >= 0",
                self.margin
            )));
        }
        if !(1..=12).contains(&self.decimals) {
            return Err(Error::Render(format!(
                "decimals {} outside 1..=12",
                self.decimals
            )));
        }
        if let Some(w) = self.stroke_width {
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::Render(format!("stroke width {w} must be positive")));
            }
        }
        Ok(())
    }
}

/// Fixed-point text for `value`, rounding ties to even, never `-0.000`.
pub fn fmt_fixed(value: f64, decimals: usize) -> String {
    let s = format!("{value:.decimals$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|c| c == b'0' || c == b'.') => rest.to_string(),
        _ => s,
    }
}

fn to_f64<T: ToPrimitive>(v: &T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Three rotated copies of `poly`, glued end to start into a closed outline.
pub fn snowflake<T: Real>(poly: &Polyline<T>) -> Polyline<T> {
    let start = poly.start().to_complex();
    let chord = poly.end().to_complex() - start;
    let third = T::TAU() / T::lit(3.0);
    let mut shift = start;
    let mut points = vec![poly.start()];
    for k in 0..3 {
        let rot = Complex::from_polar(T::one(), third * T::lit(f64::from(k)));
        points.extend(
            poly.points()[1..]
                .iter()
                .map(|p| crate::geometry::Point::from(rot * (p.to_complex() - start) + shift)),
        );
        shift = shift + rot * chord;
    }
    Polyline::new(points).expect("finite copy")
}

struct ViewBox {
    x: f64,
    y: f64,
    width: f64,
    height: f64,
}

/// Bounding box in screen coordinates (`y` already negated), padded by the margin.
fn view_box(points: impl Iterator<Item = (f64, f64)>, margin: f64) -> Result<ViewBox> {
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (x, y) in points {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let extent = (max_x - min_x).max(max_y - min_y);
    if !(extent > 0.0 && extent.is_finite()) {
        return Err(Error::Render("degenerate bounding box".into()));
    }
    let pad = margin * extent;
    Ok(ViewBox {
        x: min_x - pad,
        y: min_y - pad,
        width: max_x - min_x + 2.0 * pad,
        height: max_y - min_y + 2.0 * pad,
    })
}

fn svg_open(out: &mut String, vb: &ViewBox, decimals: usize) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt_fixed(vb.x, decimals),
        fmt_fixed(vb.y, decimals),
        fmt_fixed(vb.width, decimals),
        fmt_fixed(vb.height, decimals)
    )
    .expect("write to string");
}

/// One `<polyline>` per input curve inside a viewBox fitted to all of them.
pub fn to_svg<T: Real>(polys: &[Polyline<T>], style: &RenderStyle) -> Result<String> {
    style.validate()?;
    if polys.is_empty() {
        return Err(Error::Render("no polylines to draw".into()));
    }
    if polys.iter().any(|p| p.len() < 2) {
        return Err(Error::Render(
            "a polyline needs at least two vertices".into(),
        ));
    }
    let curves: Vec<Polyline<T>> = if style.snowflake {
        polys.iter().map(snowflake).collect()
    } else {
        polys.to_vec()
    };
    let screen = |c: &Polyline<T>| -> Vec<(f64, f64)> {
        c.points()
            .iter()
            .map(|p| (to_f64(&p.x), -to_f64(&p.y)))
            .collect()
    };
    let screen_curves: Vec<Vec<(f64, f64)>> = curves.iter().map(screen).collect();
    let vb = view_box(screen_curves.iter().flatten().copied(), style.margin)?;
    let stroke = style
        .stroke_width
        .unwrap_or(0.002 * vb.width.max(vb.height));

    let d = style.decimals;
    let mut out = String::new();
    svg_open(&mut out, &vb, d);
    for pts in &screen_curves {
        write!(
            out,
            "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linejoin=\"round\" points=\"",
            fmt_fixed(stroke, d)
        )
        .expect("write to string");
        for (i, (x, y)) in pts.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{},{}", fmt_fixed(*x, d), fmt_fixed(*y, d)).expect("write to string");
        }
        out.push_str("\"/>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// `x,y` per vertex with nine decimals.
pub fn to_csv<T: Real>(poly: &Polyline<T>) -> String {
    let mut out = String::new();
    for p in poly.points() {
        writeln!(
            out,
            "{},{}",
            fmt_fixed(to_f64(&p.x), 9),
            fmt_fixed(to_f64(&p.y), 9)
        )
        .expect("write to string");
    }
    out
}

/// `[[x,y],…]` with nine decimals.
pub fn to_json<T: Real>(poly: &Polyline<T>) -> String {
    let body: Vec<String> = poly
        .points()
        .iter()
        .map(|p| {
            format!(
                "[{},{}]",
                fmt_fixed(to_f64(&p.x), 9),
                fmt_fixed(to_f64(&p.y), 9)
            )
        })
        .collect();
    format!("[{}]\n", body.join(","))
}

const ROW_PITCH: f64 = 0.1;
const BAR_HEIGHT: f64 = 0.05;

/// Generation `k` of `sets` drawn as black rectangles on row `k`.
pub fn intervals_to_svg<T>(sets: &[IntervalSet<T>], style: &RenderStyle) -> Result<String>
where
    T: ToPrimitive,
{
    style.validate()?;
    if sets.is_empty() {
        return Err(Error::Render("no interval sets to draw".into()));
    }
    let mut corners = Vec::new();
    for (row, set) in sets.iter().enumerate() {
        let top = row as f64 * ROW_PITCH;
        for (l, r) in set.intervals() {
            corners.push((to_f64(l), top));
            corners.push((to_f64(r), top + BAR_HEIGHT));
        }
    }
    if corners.is_empty() {
        return Err(Error::Render("all interval sets are empty".into()));
    }
    let vb = view_box(corners.iter().copied(), style.margin)?;
    let d = style.decimals;
    let mut out = String::new();
    svg_open(&mut out, &vb, d);
    for pair in corners.chunks(2) {
        let ((x0, y0), (x1, y1)) = (pair[0], pair[1]);
        writeln!(
            out,
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"black\"/>",
            fmt_fixed(x0, d),
            fmt_fixed(y0, d),
            fmt_fixed(x1 - x0, d),
            fmt_fixed(y1 - y0, d)
        )
        .expect("write to string");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{cantor_intervals, Point};

    fn unit_segment() -> Polyline<f64> {
        Polyline::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]).unwrap()
    }

    #[test]
    fn fixed_formatting() {
        assert_eq!(fmt_fixed(-0.0, 6), "0.000000");
        assert_eq!(fmt_fixed(-1e-12, 6), "0.000000");
        assert_eq!(fmt_fixed(-0.5, 3), "-0.500");
        // exact binary ties go to the even neighbour
        assert_eq!(fmt_fixed(0.125, 2), "0.12");
        assert_eq!(fmt_fixed(0.375, 2), "0.38");
        assert_eq!(fmt_fixed(2.5, 1), "2.5");
    }

    #[test]
    fn unit_segment_view_box() {
        let svg = to_svg(&[unit_segment()], &RenderStyle::default()).unwrap();
        assert!(
            svg.contains("viewBox=\"-0.050000 -0.050000 1.100000 0.100000\""),
            "{svg}"
        );
        assert!(svg.contains("points=\"0.000000,0.000000 1.000000,0.000000\""));
        assert_eq!(
            svg,
            to_svg(&[unit_segment()], &RenderStyle::default()).unwrap()
        );
    }

    #[test]
    fn y_is_flipped() {
        let up = Polyline::new(vec![Point::new(0.0, 0.0), Point::new(0.0, 2.0)]).unwrap();
        let svg = to_svg(&[up], &RenderStyle::default()).unwrap();
        assert!(svg.contains("0.000000,-2.000000"));
    }

    #[test]
    fn render_errors() {
        let empty: Vec<Polyline<f64>> = Vec::new();
        assert!(matches!(
            to_svg(&empty, &RenderStyle::default()),
            Err(Error::Render(_))
        ));
        let dot = Polyline::new(vec![Point::new(1.0, 1.0)]).unwrap();
        assert!(to_svg(&[dot], &RenderStyle::default()).is_err());
        let stacked = Polyline::new(vec![Point::new(1.0, 1.0), Point::new(1.0, 1.0)]).unwrap();
        assert!(to_svg(&[stacked], &RenderStyle::default()).is_err());
        let bad = RenderStyle {
            decimals: 0,
            ..RenderStyle::default()
        };
        assert!(to_svg(&[unit_segment()], &bad).is_err());
        let no_sets: Vec<IntervalSet<f64>> = Vec::new();
        assert!(intervals_to_svg(&no_sets, &RenderStyle::default()).is_err());
    }

    #[test]
    fn csv_and_json() {
        assert_eq!(
            to_csv(&unit_segment()),
            "0.000000000,0.000000000\n1.000000000,0.000000000\n"
        );
        assert_eq!(
            to_json(&unit_segment()),
            "[[0.000000000,0.000000000],[1.000000000,0.000000000]]\n"
        );
    }

    #[test]
    fn cantor_rows() {
        let sets: Vec<IntervalSet<f64>> = (0..3).map(|k| cantor_intervals(k).unwrap()).collect();
        let svg = intervals_to_svg(&sets, &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("<rect ").count(), 7);
    }

    #[test]
    fn snowflake_closes() {
        let flake = snowflake(&unit_segment());
        assert_eq!(flake.len(), 4);
        assert!(flake.end().distance(flake.start()) < 1e-12);
        assert!((flake.points()[2].y - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }
}
