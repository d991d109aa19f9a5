//! SVG 1.1 rendering of planar stages (rect, path, polyline and text only).
//!
//! The drawing covers the unit cell with a 5% margin. The y axis is flipped
//! so that construction coordinates read bottom-up.

use std::fmt::Write;

use crate::cantor::Stage2;
use crate::error::{Error, Result};
use crate::geom::{Loop, Point2};
use crate::planar::PieceSet;
use crate::spatial::Stage3;
use crate::topology::{index_vector, HoleSet};

use super::decimal;

#[derive(Clone, Copy, Debug)]
pub enum Renderable<'a> {
    Cantor(&'a Stage2),
    Planar(&'a PieceSet),
    Spatial(&'a Stage3),
    Empty,
}

/// A loop drawn on top of the stage, with one label per hole giving its
/// entry of the loop's index vector.
#[derive(Clone, Debug)]
pub struct LoopOverlay {
    pub curve: Loop,
    pub holes: HoleSet,
}

#[derive(Clone, Debug)]
pub struct SvgOptions {
    pub size_px: u32,
    pub stroke_width: f64,
    pub overlay: Option<LoopOverlay>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            size_px: 800,
            stroke_width: 0.002,
            overlay: None,
        }
    }
}

fn coord(p: &Point2) -> (String, String) {
    let [x, y] = p.to_f64();
    (decimal(x), decimal(1.0 - y))
}

fn points_attr<'a>(points: impl IntoIterator<Item = &'a Point2>) -> String {
    points
        .into_iter()
        .map(|p| {
            let (x, y) = coord(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn path_d(l: &Loop) -> String {
    let mut d = String::new();
    for (i, p) in l.vertices().iter().enumerate() {
        let (x, y) = coord(p);
        d.push_str(if i == 0 { "M" } else { " L" });
        let _ = write!(d, "{x} {y}");
    }
    d.push_str(" Z");
    d
}

/// Birth-level colour ramp from deep blue (level 1) towards orange.
pub fn level_color(level: usize, max_level: usize) -> String {
    let t = if max_level <= 1 {
        0.0
    } else {
        (level.saturating_sub(1)) as f64 / (max_level - 1) as f64
    };
    let lerp = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    format!("#{:02x}{:02x}{:02x}", lerp(31.0, 240.0), lerp(73.0, 146.0), lerp(160.0, 48.0))
}

pub fn render_svg(input: Renderable<'_>, options: &SvgOptions) -> Result<String> {
    let mut body = String::new();
    match input {
        Renderable::Cantor(stage) => {
            body.push_str("<g id=\"cells\" fill=\"#c9d6e8\" stroke=\"none\">\n");
            for c in stage.cells() {
                let top_left = Point2::new(c.corner.x.clone(), &c.corner.y + &c.side);
                let (x, y) = coord(&top_left);
                let side = decimal(crate::geom::rational_to_f64(&c.side));
                let _ = writeln!(body, "<rect x=\"{x}\" y=\"{y}\" width=\"{side}\" height=\"{side}\"/>");
            }
            body.push_str("</g>\n");
            segments_group(&mut body, stage.segments().iter().map(|s| [&s.start, &s.end]), options);
        }
        Renderable::Planar(ps) => {
            body.push_str("<g id=\"kept\" fill=\"#eeeeee\" stroke=\"#9a9a9a\" stroke-width=\"");
            body.push_str(&decimal(options.stroke_width / 2.0));
            body.push_str("\">\n");
            for t in ps.kept() {
                let _ = writeln!(body, "<path d=\"{}\"/>", path_d(&t.boundary));
            }
            body.push_str("</g>\n<g id=\"pieces\" stroke=\"none\">\n");
            for p in ps.removed() {
                let _ = writeln!(
                    body,
                    "<path d=\"{}\" fill=\"{}\"/>",
                    path_d(&p.boundary),
                    level_color(p.birth_level, ps.level())
                );
            }
            body.push_str("</g>\n");
            let outline = ps.variant().base_tile().boundary;
            let closed: Vec<&Point2> = outline.vertices().iter().chain(outline.vertices().first()).collect();
            let _ = writeln!(
                body,
                "<polyline id=\"outline\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"{}\" points=\"{}\"/>",
                decimal(options.stroke_width),
                points_attr(closed)
            );
        }
        Renderable::Spatial(_) => {
            return Err(Error::UnsupportedGeometry(
                "SVG export needs a planar stage; use OBJ for spatial stages".into(),
            ))
        }
        Renderable::Empty => {}
    }
    if let Some(overlay) = &options.overlay {
        overlay_group(&mut body, overlay, options)?;
    }
    Ok(format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{px}\" height=\"{px}\" viewBox=\"-0.05 -0.05 1.1 1.1\">\n\
         {body}</svg>\n",
        px = options.size_px
    ))
}

fn segments_group<'a>(
    body: &mut String,
    segments: impl Iterator<Item = [&'a Point2; 2]>,
    options: &SvgOptions,
) {
    let _ = writeln!(
        body,
        "<g id=\"segments\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"{}\">",
        decimal(options.stroke_width)
    );
    for pair in segments {
        let _ = writeln!(body, "<polyline points=\"{}\"/>", points_attr(pair));
    }
    body.push_str("</g>\n");
}

fn overlay_group(body: &mut String, overlay: &LoopOverlay, options: &SvgOptions) -> Result<()> {
    let index = index_vector(&overlay.curve, &overlay.holes)?;
    let curve = overlay.curve.vertices();
    let closed: Vec<&Point2> = curve.iter().chain(curve.first()).collect();
    let _ = writeln!(
        body,
        "<g id=\"overlay\">\n<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"{}\" points=\"{}\"/>",
        decimal(options.stroke_width * 2.0),
        points_attr(closed)
    );
    for ((p, label), entry) in overlay
        .holes
        .representatives
        .iter()
        .zip(&overlay.holes.labels)
        .zip(index.entries())
    {
        let (x, y) = coord(p);
        let _ = writeln!(
            body,
            "<text x=\"{x}\" y=\"{y}\" font-size=\"0.03\" text-anchor=\"middle\" fill=\"#d62728\" data-hole=\"{}\">{entry}</text>",
            escape(label)
        );
    }
    body.push_str("</g>\n");
    Ok(())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::{build, Params2};
    use crate::geom::rat;
    use crate::planar::{build_planar, PlanarVariant};
    use crate::spatial::{build_spatial, SpatialVariant};

    #[test]
    fn cantor_render_has_corner_squares_and_boundary() {
        let stage = build(&Params2::new(rat(1, 4), 1).unwrap()).unwrap();
        let svg = render_svg(Renderable::Cantor(&stage), &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches("<rect ").count(), 4);
        assert_eq!(svg.matches("<polyline ").count(), 4 + 16);
        assert!(svg.contains("<polyline points=\"0,1 1,1\"/>"));
    }

    #[test]
    fn spatial_input_is_rejected() {
        let stage = build_spatial(&SpatialVariant::TetraGasket, 0).unwrap();
        assert!(matches!(
            render_svg(Renderable::Spatial(&stage), &SvgOptions::default()),
            Err(Error::UnsupportedGeometry(_))
        ));
    }

    #[test]
    fn empty_canvas() {
        let svg = render_svg(Renderable::Empty, &SvgOptions::default()).unwrap();
        assert!(svg.contains("viewBox=\"-0.05 -0.05 1.1 1.1\""));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn ramp_endpoints() {
        assert_eq!(level_color(1, 3), "#1f49a0");
        assert_eq!(level_color(3, 3), "#f09230");
        assert_eq!(level_color(1, 1), "#1f49a0");
    }

    #[test]
    fn overlay_labels_each_hole() {
        let ps = build_planar(PlanarVariant::Carpet, 1).unwrap();
        let holes = HoleSet::new(
            vec![ps.removed()[0].centroid(), Point2::new(rat(1, 6), rat(1, 6))],
            vec!["centre".into(), "corner".into()],
        )
        .unwrap();
        let options = SvgOptions {
            overlay: Some(LoopOverlay {
                curve: ps.removed()[0].boundary.clone(),
                holes,
            }),
            ..SvgOptions::default()
        };
        let svg = render_svg(Renderable::Planar(&ps), &options).unwrap();
        assert_eq!(svg.matches("<text ").count(), 2);
        assert!(svg.contains("data-hole=\"centre\">1</text>"));
        assert!(svg.contains("data-hole=\"corner\">0</text>"));
    }
}
