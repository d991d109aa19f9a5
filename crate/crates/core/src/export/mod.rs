//! Serialization and rendering: exact JSON documents, SVG for planar
//! stages, OBJ for spatial ones.

pub mod json;
pub mod obj;
pub mod svg;

pub use json::{parse_loop, HoleSetDocument, LoopDocument, StageDocument, SCHEMA_VERSION};
pub use obj::{export_obj, ObjOptions};
pub use svg::{render_svg, LoopOverlay, Renderable, SvgOptions};

/// Decimal with at most 12 significant digits and no exponent; trailing
/// zeros are dropped.
pub fn decimal(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::decimal;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(decimal(0.0), "0");
        assert_eq!(decimal(1.0), "1");
        assert_eq!(decimal(0.5), "0.5");
        assert_eq!(decimal(1.0 / 3.0), "0.333333333333");
        assert_eq!(decimal(2.0 / 3.0), "0.666666666667");
        assert_eq!(decimal(-1.0 / 125.0), "-0.008");
        assert_eq!(decimal(1.0 / 7.0 / 1000.0), "0.000142857142857");
        assert_eq!(decimal(123.456), "123.456");
    }
}
