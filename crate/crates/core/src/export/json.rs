//! Versioned JSON documents. Every rational is written as a `"p/q"` (or
//! integer) string so documents round-trip exactly.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cantor::{self, Cell, Params2, Stage2};
use crate::error::{Error, Result};
use crate::geom::{address_string, parse_rational, union_length, Loop, Point2, Point3, Segment};
use crate::planar::{self, PieceSet};
use crate::spatial::{self, SpatialVariant, Stage3, Surd};
use crate::topology::HoleSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageDocument {
    pub schema_version: u32,
    /// `cantor2d`, `carpet`, `gasket`, `cube_wireframe` or `tetra_gasket`.
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub level: usize,
    pub cells: Vec<CellRecord>,
    pub segments: Vec<[Vec<String>; 2]>,
    pub pieces: Vec<PieceRecord>,
    pub measures: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellRecord {
    pub address: String,
    /// Square and cube cells: lowest corner and side length.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    /// Triangle and tetrahedron cells.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PieceRecord {
    pub boundary: Vec<Vec<String>>,
    pub birth_level: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LoopDocument {
    pub schema_version: u32,
    pub vertices: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HoleSetDocument {
    pub schema_version: u32,
    pub representatives: Vec<Vec<String>>,
    pub labels: Vec<String>,
}

fn p2(p: &Point2) -> Vec<String> {
    vec![p.x.to_string(), p.y.to_string()]
}

fn p3(p: &Point3) -> Vec<String> {
    vec![p.x.to_string(), p.y.to_string(), p.z.to_string()]
}

fn read_p2(coords: &[String]) -> Result<Point2> {
    match coords {
        [x, y] => Ok(Point2::new(parse_rational(x)?, parse_rational(y)?)),
        _ => Err(Error::Parse(format!("expected 2 coordinates, got {}", coords.len()))),
    }
}

pub(crate) fn surd_value(s: &Surd) -> Value {
    match s.as_rational() {
        Some(r) => Value::String(r.to_string()),
        None => json!({
            "exact": s.to_string(),
            "approx": s.to_f64(),
        }),
    }
}

fn parse_address(s: &str) -> Result<Vec<u8>> {
    s.bytes()
        .map(|b| match b {
            b'0'..=b'9' => Ok(b - b'0'),
            _ => Err(Error::Parse(format!("bad address {s:?}"))),
        })
        .collect()
}

impl StageDocument {
    fn empty(kind: &str, level: usize) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            kind: kind.to_string(),
            params: BTreeMap::new(),
            level,
            cells: Vec::new(),
            segments: Vec::new(),
            pieces: Vec::new(),
            measures: BTreeMap::new(),
        }
    }

    pub fn from_stage2(stage: &Stage2) -> Result<Self> {
        let p = stage.params();
        let mut doc = Self::empty("cantor2d", stage.level());
        doc.params.insert("a".into(), p.a.to_string());
        doc.params.insert("depth".into(), p.depth.to_string());
        doc.params.insert("cap".into(), p.cap.to_string());
        doc.cells = stage
            .cells()
            .iter()
            .map(|c| CellRecord {
                address: address_string(&c.address),
                corner: Some(p2(&c.corner)),
                side: Some(c.side.to_string()),
                vertices: None,
            })
            .collect();
        doc.segments = stage.segments().iter().map(|s| [p2(&s.start), p2(&s.end)]).collect();
        doc.measures.insert("cell_count".into(), json!(stage.cells().len()));
        doc.measures.insert("dimension".into(), json!(cantor::hausdorff_dimension(&p.a)?));
        doc.measures.insert("union_length".into(), json!(union_length(stage.segments())?.to_string()));
        if p.a < crate::geom::rat(1, 2) {
            let series = cantor::perimeter_series(&p.a, stage.level())?;
            doc.measures.insert("perimeter_partial_sum".into(), json!(series.partial_sum.to_string()));
            doc.measures.insert("perimeter_finite".into(), json!(series.finite));
            doc.measures.insert(
                "perimeter_limit".into(),
                json!(series.limit.map_or("infinite".to_string(), |l| l.to_string())),
            );
        }
        Ok(doc)
    }

    /// Rebuilds the exact stage recorded by a `cantor2d` document.
    pub fn to_stage2(&self) -> Result<Stage2> {
        if self.kind != "cantor2d" {
            return Err(Error::Parse(format!("expected a cantor2d document, got {}", self.kind)));
        }
        let param = |key: &str| {
            self.params
                .get(key)
                .ok_or_else(|| Error::Parse(format!("missing parameter {key}")))
        };
        let a = parse_rational(param("a")?)?;
        let num = |key: &str| -> Result<usize> {
            param(key)?.parse().map_err(|_| Error::Parse(format!("bad {key}")))
        };
        let params = Params2::with_cap(a, num("depth")?, num("cap")?)?;
        let cells = self
            .cells
            .iter()
            .map(|c| {
                let corner = c.corner.as_deref().ok_or_else(|| Error::Parse("cell without corner".into()))?;
                let side = c.side.as_deref().ok_or_else(|| Error::Parse("cell without side".into()))?;
                Ok(Cell {
                    address: parse_address(&c.address)?,
                    corner: read_p2(corner)?,
                    side: parse_rational(side)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let segments = self
            .segments
            .iter()
            .map(|[a, b]| Segment::new(read_p2(a)?, read_p2(b)?).map(|s| s.canonical()))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(Stage2 {
            params,
            level: self.level,
            cells,
            segments,
        })
    }

    pub fn from_piece_set(ps: &PieceSet) -> Self {
        let variant = ps.variant();
        let mut doc = Self::empty(variant.name(), ps.level());
        doc.params.insert("depth".into(), ps.level().to_string());
        doc.cells = ps
            .kept()
            .iter()
            .map(|t| {
                let v = t.boundary.vertices();
                match variant {
                    planar::PlanarVariant::Carpet => CellRecord {
                        address: address_string(&t.address),
                        corner: Some(p2(&v[0])),
                        side: Some((&v[1].x - &v[0].x).to_string()),
                        vertices: None,
                    },
                    planar::PlanarVariant::Gasket => CellRecord {
                        address: address_string(&t.address),
                        corner: None,
                        side: None,
                        vertices: Some(v.iter().map(p2).collect()),
                    },
                }
            })
            .collect();
        doc.segments = planar::boundary_of_rest(ps)
            .iter()
            .map(|s| [p2(&s.start), p2(&s.end)])
            .collect();
        doc.pieces = ps
            .removed()
            .iter()
            .map(|p| PieceRecord {
                boundary: p.boundary.vertices().iter().map(p2).collect(),
                birth_level: p.birth_level,
            })
            .collect();
        let areas = planar::area_accounting(ps);
        doc.measures.insert("kept_count".into(), json!(ps.kept().len()));
        doc.measures.insert("removed_count".into(), json!(ps.removed().len()));
        doc.measures.insert("kept_area".into(), json!(areas.kept_area.to_string()));
        doc.measures.insert("removed_area".into(), json!(areas.removed_area.to_string()));
        doc.measures.insert("dimension".into(), json!(planar::similarity_dimension(variant)));
        doc
    }

    pub fn from_stage3(stage: &Stage3) -> Result<Self> {
        let variant = stage.variant();
        let mut doc = Self::empty(variant.name(), stage.level());
        if let SpatialVariant::CubeWireframe { a } = variant {
            doc.params.insert("a".into(), a.to_string());
        }
        doc.params.insert("depth".into(), stage.level().to_string());
        doc.cells = stage
            .cells()
            .iter()
            .map(|c| {
                if c.is_cube() {
                    CellRecord {
                        address: address_string(&c.address),
                        corner: Some(p3(&c.vertices[0])),
                        side: Some((&c.vertices[1].x - &c.vertices[0].x).to_string()),
                        vertices: None,
                    }
                } else {
                    CellRecord {
                        address: address_string(&c.address),
                        corner: None,
                        side: None,
                        vertices: Some(c.vertices.iter().map(p3).collect()),
                    }
                }
            })
            .collect();
        doc.segments = stage.skeleton().iter().map(|s| [p3(&s.start), p3(&s.end)]).collect();
        doc.pieces = stage
            .pieces()
            .iter()
            .map(|f| PieceRecord {
                boundary: f.boundary.iter().map(p3).collect(),
                birth_level: f.birth_level,
            })
            .collect();
        let series = spatial::series_measures(variant, stage.level())?;
        doc.measures.insert("cell_count".into(), json!(stage.cells().len()));
        doc.measures.insert("skeleton_count".into(), json!(stage.skeleton().len()));
        doc.measures.insert("piece_count".into(), json!(stage.pieces().len()));
        doc.measures.insert("edge_length_sum".into(), surd_value(&series.edge_length_sum));
        doc.measures.insert("face_area_sum".into(), surd_value(&series.face_area_sum));
        doc.measures.insert("edge_finite".into(), json!(series.edge_finite));
        doc.measures.insert("area_finite".into(), json!(series.area_finite));
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: StageDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("stage document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }
}

impl LoopDocument {
    pub fn from_loop(l: &Loop) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            vertices: l.vertices().iter().map(p2).collect(),
        }
    }

    pub fn to_loop(&self) -> Result<Loop> {
        Loop::new(self.vertices.iter().map(|v| read_p2(v)).collect::<Result<Vec<_>>>()?)
    }
}

impl HoleSetDocument {
    pub fn from_holes(h: &HoleSet) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            representatives: h.representatives.iter().map(p2).collect(),
            labels: h.labels.clone(),
        }
    }

    pub fn to_holes(&self) -> Result<HoleSet> {
        HoleSet::new(
            self.representatives.iter().map(|v| read_p2(v)).collect::<Result<Vec<_>>>()?,
            self.labels.clone(),
        )
    }
}

/// Parses `"x,y; x,y; ..."` with rational coordinates.
pub fn parse_loop(text: &str) -> Result<Loop> {
    let vertices = text
        .split(';')
        .map(|pair| {
            let coords: Vec<String> = pair.split(',').map(|c| c.trim().to_string()).collect();
            read_p2(&coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Loop::new(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;

    #[test]
    fn cantor_document_round_trip() {
        let stage = cantor::build(&Params2::new(rat(1, 5), 2).unwrap()).unwrap();
        let doc = StageDocument::from_stage2(&stage).unwrap();
        assert_eq!(doc.cells.len(), 16);
        let text = doc.to_json();
        let back = StageDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_stage2().unwrap(), stage);
        assert_eq!(doc.measures["perimeter_finite"], json!(true));
    }

    #[test]
    fn loop_and_holes_round_trip() {
        let l = parse_loop("0,0; 1/3,0; 1/3,1/2").unwrap();
        let doc = LoopDocument::from_loop(&l);
        let text = serde_json::to_string(&doc).unwrap();
        let back: LoopDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_loop().unwrap(), l);

        let ps = planar::build_planar(planar::PlanarVariant::Gasket, 2).unwrap();
        let holes = HoleSet::from_pieces(&ps).unwrap();
        let hd = HoleSetDocument::from_holes(&holes);
        assert_eq!(hd.to_holes().unwrap(), holes);
    }

    #[test]
    fn bad_documents() {
        assert!(matches!(parse_loop("0,0; 1"), Err(Error::Parse(_))));
        assert!(matches!(StageDocument::from_json("{}"), Err(Error::Parse(_))));
        let stage = cantor::build(&Params2::new(rat(1, 3), 0).unwrap()).unwrap();
        let mut doc = StageDocument::from_stage2(&stage).unwrap();
        doc.schema_version = 2;
        assert!(StageDocument::from_json(&doc.to_json()).is_err());
        doc.schema_version = 1;
        doc.cells[0].side = Some("1/0".into());
        assert!(doc.to_stage2().is_err());
    }

    #[test]
    fn spatial_document_measures() {
        let stage = spatial::build_spatial(&SpatialVariant::TetraGasket, 1).unwrap();
        let doc = StageDocument::from_stage3(&stage).unwrap();
        assert_eq!(doc.pieces.len(), 20);
        assert!(doc.measures["edge_length_sum"].get("exact").is_some());
        let cube = spatial::build_spatial(&SpatialVariant::cube(rat(1, 10)).unwrap(), 1).unwrap();
        let doc = StageDocument::from_stage3(&cube).unwrap();
        assert_eq!(doc.measures["edge_length_sum"], json!("108/5"));
    }
}
