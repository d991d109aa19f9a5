//! Wavefront OBJ output of spatial stages using `v`, `l` and `f` records.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::geom::Point3;
use crate::spatial::Stage3;

use super::decimal;

#[derive(Clone, Copy, Debug, Default)]
pub struct ObjOptions {
    pub skeleton: bool,
    pub faces: bool,
}

impl ObjOptions {
    pub fn all() -> Self {
        Self {
            skeleton: true,
            faces: true,
        }
    }
}

/// Vertices are deduplicated by exact coordinates and numbered in order of
/// first use: skeleton segments in canonical order, then pieces. Faces are
/// not deduplicated.
pub fn export_obj(stage: &Stage3, options: &ObjOptions) -> String {
    let mut index: BTreeMap<&Point3, usize> = BTreeMap::new();
    let mut order: Vec<&Point3> = Vec::new();
    let mut intern = |p| {
        let next = order.len() + 1;
        *index.entry(p).or_insert_with(|| {
            order.push(p);
            next
        })
    };

    let mut lines = String::new();
    if options.skeleton {
        for s in stage.skeleton() {
            let (a, b) = (intern(&s.start), intern(&s.end));
            let _ = writeln!(lines, "l {a} {b}");
        }
    }
    let mut faces = String::new();
    let mut face_count = 0;
    if options.faces {
        for f in stage.pieces() {
            let ids: Vec<String> = f.boundary.iter().map(|p| intern(p).to_string()).collect();
            let _ = writeln!(faces, "f {}", ids.join(" "));
            face_count += 1;
        }
    }
    let line_count = if options.skeleton { stage.skeleton().len() } else { 0 };

    let mut out = String::new();
    let _ = writeln!(out, "# {} level {}", stage.variant().name(), stage.level());
    let _ = writeln!(out, "# vertices {} lines {} faces {}", order.len(), line_count, face_count);
    for p in &order {
        let [x, y, z] = p.to_f64();
        let _ = writeln!(out, "v {} {} {}", decimal(x), decimal(y), decimal(z));
    }
    out.push_str(&lines);
    out.push_str(&faces);
    out
}
