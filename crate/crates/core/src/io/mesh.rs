use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::{fmt_f64, Format, IoError};
use crate::numeric::Vec3;

/// A rectangular grid of points, row-major. With `periodic` set, the last
/// column is joined back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshGrid {
    rows: usize,
    cols: usize,
    periodic: bool,
    points: Vec<Vec3>,
}

impl MeshGrid {
    pub fn new(
        rows: usize,
        cols: usize,
        periodic: bool,
        points: Vec<Vec3>,
    ) -> Result<Self, IoError> {
        let min_cols = if periodic { 3 } else { 2 };
        if rows < 2 || cols < min_cols {
            return Err(IoError::Grid(format!("{rows} x {cols} grid is too small")));
        }
        if points.len() != rows * cols {
            return Err(IoError::Grid(format!(
                "{} points do not fill a {rows} x {cols} grid",
                points.len()
            )));
        }
        if points.iter().any(|p| !p.iter().all(|c| c.is_finite())) {
            return Err(IoError::Grid("non-finite vertex".into()));
        }
        Ok(Self {
            rows,
            cols,
            periodic,
            points,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    /// Two triangles per quad, zero-based, row-major.
    pub fn faces(&self) -> Vec<[usize; 3]> {
        let quads = if self.periodic {
            self.cols
        } else {
            self.cols - 1
        };
        let mut out = Vec::with_capacity(2 * (self.rows - 1) * quads);
        for i in 0..self.rows - 1 {
            for j in 0..quads {
                let j1 = (j + 1) % self.cols;
                let (a, b) = (i * self.cols + j, i * self.cols + j1);
                let (c, d) = ((i + 1) * self.cols + j1, (i + 1) * self.cols + j);
                out.push([a, b, c]);
                out.push([a, c, d]);
            }
        }
        out
    }

    /// `V - E + F` of the triangulation.
    pub fn euler_characteristic(&self) -> i64 {
        let faces = self.faces();
        let mut edges = BTreeSet::new();
        for f in &faces {
            for k in 0..3 {
                let (u, v) = (f[k], f[(k + 1) % 3]);
                edges.insert((u.min(v), u.max(v)));
            }
        }
        self.points.len() as i64 - edges.len() as i64 + faces.len() as i64
    }

    fn obj(&self) -> String {
        let mut s = String::new();
        for p in &self.points {
            let _ = writeln!(s, "v {} {} {}", fmt_f64(p.x), fmt_f64(p.y), fmt_f64(p.z));
        }
        for f in self.faces() {
            let _ = writeln!(s, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1);
        }
        s
    }

    fn csv(&self) -> Result<Vec<u8>, IoError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["row", "col", "x", "y", "z"])?;
        for (k, p) in self.points.iter().enumerate() {
            w.write_record([
                (k / self.cols).to_string(),
                (k % self.cols).to_string(),
                fmt_f64(p.x),
                fmt_f64(p.y),
                fmt_f64(p.z),
            ])?;
        }
        w.into_inner()
            .map_err(|e| IoError::Csv(e.into_error().into()))
    }

    fn json(&self) -> Result<Vec<u8>, IoError> {
        #[derive(Serialize)]
        struct Doc<'a> {
            rows: usize,
            cols: usize,
            periodic: bool,
            vertices: Vec<[&'a serde_json::value::RawValue; 3]>,
        }
        let raw: Vec<[Box<serde_json::value::RawValue>; 3]> = self
            .points
            .iter()
            .map(|p| {
                let r = |x: f64| serde_json::value::RawValue::from_string(fmt_f64(x));
                Ok([r(p.x)?, r(p.y)?, r(p.z)?])
            })
            .collect::<Result<_, serde_json::Error>>()?;
        let doc = Doc {
            rows: self.rows,
            cols: self.cols,
            periodic: self.periodic,
            vertices: raw.iter().map(|[a, b, c]| [&**a, &**b, &**c]).collect(),
        };
        let mut out = serde_json::to_vec_pretty(&doc)?;
        out.push(b'\n');
        Ok(out)
    }
}

pub fn mesh_bytes(mesh: &MeshGrid, format: Format) -> Result<Vec<u8>, IoError> {
    match format {
        Format::Obj => Ok(mesh.obj().into_bytes()),
        Format::Csv => mesh.csv(),
        Format::Json => mesh.json(),
    }
}

/// Vertices and one-based faces of an OBJ file. Only `v` and `f` lines are read.
pub fn parse_obj(text: &str) -> Result<(Vec<Vec3>, Vec<[usize; 3]>), IoError> {
    let mut verts = Vec::new();
    let mut faces = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let bad = |message: String| IoError::Parse {
            line: n + 1,
            message,
        };
        let mut it = line.split_whitespace();
        match it.next() {
            Some("v") => {
                let c: Vec<f64> = it
                    .map(|t| t.parse::<f64>().map_err(|e| bad(format!("{t}: {e}"))))
                    .collect::<Result<_, _>>()?;
                if c.len() != 3 {
                    return Err(bad(format!("expected 3 coordinates, got {}", c.len())));
                }
                verts.push(Vec3::new(c[0], c[1], c[2]));
            }
            Some("f") => {
                let idx: Vec<usize> = it
                    .map(|t| t.parse::<usize>().map_err(|e| bad(format!("{t}: {e}"))))
                    .collect::<Result<_, _>>()?;
                if idx.len() != 3 || idx.iter().any(|&i| i == 0 || i > verts.len()) {
                    return Err(bad(format!("invalid face {idx:?}")));
                }
                faces.push([idx[0], idx[1], idx[2]]);
            }
            _ => {}
        }
    }
    Ok((verts, faces))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat() -> MeshGrid {
        let pts = vec![
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(1.0, 1.0, 0.0),
        ];
        MeshGrid::new(2, 2, false, pts).unwrap()
    }

    #[test]
    fn two_by_two_grid() {
        let m = flat();
        let text = String::from_utf8(mesh_bytes(&m, Format::Obj).unwrap()).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 4);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2);
        assert!(text.contains("f 1 2 4\nf 1 4 3\n"));
        assert_eq!(m.euler_characteristic(), 1);
    }

    #[test]
    fn periodic_tube_has_zero_euler_characteristic() {
        let (rows, cols) = (5, 7);
        let mut pts = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let t = std::f64::consts::TAU * j as f64 / cols as f64;
                pts.push(Vec3::new(t.cos(), t.sin(), i as f64));
            }
        }
        let m = MeshGrid::new(rows, cols, true, pts).unwrap();
        assert_eq!(m.faces().len(), 2 * (rows - 1) * cols);
        assert_eq!(m.euler_characteristic(), 0);
    }

    #[test]
    fn obj_round_trip() {
        let m = flat();
        let (v, f) =
            parse_obj(std::str::from_utf8(&mesh_bytes(&m, Format::Obj).unwrap()).unwrap()).unwrap();
        assert_eq!(v, m.points());
        assert_eq!(f, vec![[1, 2, 4], [1, 4, 3]]);
        assert!(parse_obj("v 1 2\n").is_err());
        assert!(parse_obj("v 1 2 3\nf 1 2 5\n").is_err());
    }

    #[test]
    fn degenerate_grids_rejected() {
        assert!(MeshGrid::new(1, 4, false, vec![Vec3::zeros(); 4]).is_err());
        assert!(MeshGrid::new(2, 2, true, vec![Vec3::zeros(); 4]).is_err());
        assert!(MeshGrid::new(2, 3, false, vec![Vec3::zeros(); 5]).is_err());
        assert!(MeshGrid::new(2, 2, false, vec![Vec3::new(f64::NAN, 0.0, 0.0); 4]).is_err());
    }

    #[test]
    fn json_and_csv_outputs() {
        let m = flat();
        let j: serde_json::Value =
            serde_json::from_slice(&mesh_bytes(&m, Format::Json).unwrap()).unwrap();
        assert_eq!(j["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(j["vertices"][3][1].as_f64(), Some(1.0));
        let c = String::from_utf8(mesh_bytes(&m, Format::Csv).unwrap()).unwrap();
        assert_eq!(c.lines().count(), 5);
        assert!(c.starts_with("row,col,x,y,z\n"));
    }
}
