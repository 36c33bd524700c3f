//! Serialized forms of catalogues, sweeps and run records, plus the sweep CSV.
//!
//! Floats are printed in their shortest form that parses back to the same
//! `f64`, so every file here re-ingests bit-for-bit.

use std::io::{Read, Write};

use concentric_cycles::continuation::{SweepEvent, SweepResult, SweepSample};
use concentric_cycles::{CriticalCatalogue, Shape, SolverSettings, VertexEvent};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointJson {
    pub angles: Vec<f64>,
    pub perimeter: f64,
    pub index: usize,
    pub degenerate: bool,
    pub shape: Shape,
    pub tangential_radius: f64,
    pub vertex_events: Vec<VertexEvent>,
    /// Position of the mirror image in `points`.
    pub mirror_of: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogueJson {
    pub radii: Vec<f64>,
    pub points: Vec<PointJson>,
    pub euler_sum: i64,
    pub warnings: Vec<String>,
    pub observations: Vec<String>,
}

impl From<&CriticalCatalogue> for CatalogueJson {
    fn from(cat: &CriticalCatalogue) -> Self {
        CatalogueJson {
            radii: cat.radii.as_slice().to_vec(),
            points: cat
                .points
                .iter()
                .map(|p| PointJson {
                    angles: p.config.angles().to_vec(),
                    perimeter: p.perimeter,
                    index: p.morse_index,
                    degenerate: p.degenerate,
                    shape: p.shape,
                    tangential_radius: p.tangential_radius,
                    vertex_events: p.vertex_events.clone(),
                    mirror_of: p.mirror_partner,
                })
                .collect(),
            euler_sum: cat.euler_sum,
            warnings: cat.warnings.clone(),
            observations: cat.observations.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EventJson {
    pub kind: String,
    pub param: f64,
    pub branches: Vec<usize>,
    pub hessian_min_eig: f64,
    /// 1-based vertex whose turn changes sign.
    pub vertex: Option<usize>,
}

impl From<&SweepEvent> for EventJson {
    fn from(e: &SweepEvent) -> Self {
        EventJson {
            kind: e.kind.to_string(),
            param: e.param,
            branches: e.branches.clone(),
            hessian_min_eig: e.hessian_min_eig,
            vertex: e.vertex.map(|v| v + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchJson {
    pub id: usize,
    pub samples: usize,
    pub first_param: f64,
    pub last_param: f64,
    pub birth: Option<f64>,
    pub death: Option<f64>,
    pub born_from: Option<usize>,
    pub merged_into: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepJson {
    pub radii: Vec<f64>,
    /// 1-based index of the varied radius.
    pub vary: usize,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub events: Vec<EventJson>,
    pub branches: Vec<BranchJson>,
    pub warnings: Vec<String>,
}

impl From<&SweepResult> for SweepJson {
    fn from(res: &SweepResult) -> Self {
        SweepJson {
            radii: res.plan.radii.as_slice().to_vec(),
            vary: res.plan.vary_index + 1,
            from: res.plan.from,
            to: res.plan.to,
            steps: res.plan.steps,
            events: res.events.iter().map(EventJson::from).collect(),
            branches: res
                .branches
                .iter()
                .map(|b| BranchJson {
                    id: b.id,
                    samples: b.samples.len(),
                    first_param: b.samples.first().map_or(f64::NAN, |s| s.param),
                    last_param: b.samples.last().map_or(f64::NAN, |s| s.param),
                    birth: b.birth,
                    death: b.death,
                    born_from: b.born_from,
                    merged_into: b.merged_into,
                })
                .collect(),
            warnings: res.warnings.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    pub command: String,
    pub radii: Vec<f64>,
    pub settings: SolverSettings,
    /// Command-specific parameters.
    pub extra: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub tool_version: String,
    pub inputs: Inputs,
    pub output: serde_json::Value,
    pub timing_seconds: Option<f64>,
}

impl RunRecord {
    pub fn new(inputs: Inputs, output: serde_json::Value, timing_seconds: Option<f64>) -> Self {
        RunRecord {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            inputs,
            output,
            timing_seconds,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Header of the sweep CSV for `n` circles.
pub fn csv_header(n: usize) -> Vec<String> {
    let mut h: Vec<String> = [
        "param",
        "branch_id",
        "perimeter",
        "index",
        "shape",
        "det_hessian",
        "tangential_radius",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    h.extend((1..n).map(|i| format!("angle_{i}")));
    h
}

pub fn write_sweep_csv<'a, W: Write>(
    out: W,
    n: usize,
    samples: impl IntoIterator<Item = &'a SweepSample>,
) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header(n))?;
    for s in samples {
        let mut row = vec![
            s.param.to_string(),
            s.branch_id.to_string(),
            s.perimeter.to_string(),
            s.morse_index.to_string(),
            s.shape.to_string(),
            s.det_hessian.to_string(),
            s.tangential_radius.to_string(),
        ];
        row.extend(s.angles.iter().map(f64::to_string));
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_sweep_csv<R: Read>(input: R) -> Result<Vec<SweepSample>, CliError> {
    let mut r = csv::Reader::from_reader(input);
    let headers = r.headers()?.clone();
    if headers.len() < 8 || headers.iter().take(7).ne(csv_header(2).iter().take(7).map(String::as_str)) {
        return Err(CliError::Invalid("unexpected sweep CSV header".into()));
    }
    let bad = |what: &str| CliError::Invalid(format!("malformed sweep CSV field: {what}"));
    let float = |s: &str| s.parse::<f64>().map_err(|_| bad(s));
    let int = |s: &str| s.parse::<usize>().map_err(|_| bad(s));
    r.records()
        .map(|rec| {
            let rec = rec?;
            Ok(SweepSample {
                param: float(&rec[0])?,
                branch_id: int(&rec[1])?,
                perimeter: float(&rec[2])?,
                morse_index: int(&rec[3])?,
                shape: Shape::parse(&rec[4]).ok_or_else(|| bad(&rec[4]))?,
                det_hessian: float(&rec[5])?,
                tangential_radius: float(&rec[6])?,
                angles: rec.iter().skip(7).map(float).collect::<Result<_, _>>()?,
            })
        })
        .collect()
}
