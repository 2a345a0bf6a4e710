use std::collections::HashSet;
use std::fmt;
use std::io::Write;

use super::format_significant;
use super::CSV_DIGITS;
use crate::disk::{quadrant_nodes, Quadrant, QuadrantForm, QuadrantNode};
use crate::error::{Error, Result};

/// Which node set to lay over the disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeshKind {
    /// Nodes of the disk Bernstein-Stancu operator with `n_k = n`,
    /// `(n + 1)^2` entries with multiplicity.
    StancuDisk,
    /// Union of the four quadrant node sets; `2 (n + 1)(n + 2)` entries, or
    /// `2 n (n + 1) + 1` once axis duplicates are removed.
    QuadrantDisk { dedup: bool },
}

impl MeshKind {
    pub fn name(&self) -> &'static str {
        match self {
            MeshKind::StancuDisk => "stancu",
            MeshKind::QuadrantDisk { .. } => "quadrant",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeshSpec {
    pub kind: MeshKind,
    pub n: u32,
}

impl MeshSpec {
    /// The point count the RMSE is normalised by: `(n + 1)^2` for the
    /// Stancu mesh and `2 n (n + 1)` for the quadrant mesh, whatever the
    /// dedup setting.
    pub fn nominal_count(&self) -> usize {
        let n = self.n as usize;
        match self.kind {
            MeshKind::StancuDisk => (n + 1) * (n + 1),
            MeshKind::QuadrantDisk { .. } => 2 * n * (n + 1),
        }
    }

    /// The number of entries the mesh actually has.
    pub fn generated_count(&self) -> usize {
        let n = self.n as usize;
        match self.kind {
            MeshKind::StancuDisk => (n + 1) * (n + 1),
            MeshKind::QuadrantDisk { dedup: false } => 2 * (n + 1) * (n + 2),
            MeshKind::QuadrantDisk { dedup: true } => 2 * n * (n + 1) + 1,
        }
    }
}

impl fmt::Display for MeshSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MeshKind::StancuDisk => write!(f, "stancu disk mesh, n = {}", self.n),
            MeshKind::QuadrantDisk { dedup } => write!(
                f,
                "quadrant disk mesh, n = {}{}",
                self.n,
                if dedup { ", deduplicated" } else { "" }
            ),
        }
    }
}

/// Where a mesh point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshTag {
    Stancu { k: u32, j: u32 },
    Quadrant(QuadrantNode),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshPoint {
    pub x: f64,
    pub y: f64,
    pub tag: MeshTag,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    spec: MeshSpec,
    points: Vec<MeshPoint>,
}

impl Mesh {
    pub fn spec(&self) -> MeshSpec {
        self.spec
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    pub fn points(&self) -> &[MeshPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter {
            name: "n",
            value: 0,
            reason: "meshes need n >= 1",
        });
    }
    Ok(())
}

/// Points `((2k - n)/n, 2 sqrt(k (n - k)) (n - 2j) / n^2)` for
/// `0 <= k, j <= n`, in `(k, j)` order with multiplicity.
pub fn mesh_stancu_disk(n: u32) -> Result<Mesh> {
    check_degree(n)?;
    let nf = f64::from(n);
    let mut points = Vec::with_capacity(((n + 1) * (n + 1)) as usize);
    for k in 0..=n {
        let x = (2.0 * f64::from(k) - nf) / nf;
        let half = 2.0 * (f64::from(k) * f64::from(n - k)).sqrt();
        for j in 0..=n {
            let y = half * (nf - 2.0 * f64::from(j)) / (nf * nf);
            points.push(MeshPoint {
                x,
                y,
                tag: MeshTag::Stancu { k, j },
            });
        }
    }
    Ok(Mesh {
        spec: MeshSpec {
            kind: MeshKind::StancuDisk,
            n,
        },
        points,
    })
}

/// The quadrant Bernstein-type nodes of B1, B2, B3, B4 in `(quadrant, k, j)`
/// order. With `dedup`, a point already produced by an earlier quadrant
/// is dropped.
pub fn mesh_quadrant_disk(n: u32, dedup: bool) -> Result<Mesh> {
    check_degree(n)?;
    let mut seen = HashSet::new();
    let points = Quadrant::ALL
        .into_iter()
        .flat_map(|q| quadrant_nodes(q, QuadrantForm::BernsteinType, n))
        .filter(|node| !dedup || seen.insert(node.location()))
        .map(|node| {
            let (x, y) = node.point(n);
            MeshPoint {
                x,
                y,
                tag: MeshTag::Quadrant(node),
            }
        })
        .collect();
    Ok(Mesh {
        spec: MeshSpec {
            kind: MeshKind::QuadrantDisk { dedup },
            n,
        },
        points,
    })
}

/// Writes `x, y, k, j` (Stancu mesh) or `x, y, quadrant, k, j` (quadrant
/// mesh), one row per entry.
pub fn write_mesh_csv(mesh: &Mesh, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match mesh.spec.kind {
        MeshKind::StancuDisk => w.write_record(["x", "y", "k", "j"])?,
        MeshKind::QuadrantDisk { .. } => w.write_record(["x", "y", "quadrant", "k", "j"])?,
    }
    for p in &mesh.points {
        let (x, y) = (
            format_significant(p.x, CSV_DIGITS),
            format_significant(p.y, CSV_DIGITS),
        );
        match p.tag {
            MeshTag::Stancu { k, j } => w.write_record([x, y, k.to_string(), j.to_string()])?,
            MeshTag::Quadrant(node) => w.write_record([
                x,
                y,
                node.quadrant.to_string(),
                node.k.to_string(),
                node.j.to_string(),
            ])?,
        }
    }
    w.flush()?;
    Ok(())
}
