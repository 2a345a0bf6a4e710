use std::io::Write;

use rayon::prelude::*;

use super::{format_significant, OperatorSpec, CSV_DIGITS};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};

/// A chord of the closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub p0: DiskPoint,
    pub p1: DiskPoint,
}

impl Segment {
    pub fn new(p0: DiskPoint, p1: DiskPoint) -> Result<Self> {
        if p0 == p1 {
            return Err(Error::Contract("a cross-section needs two distinct end points".into()));
        }
        Ok(Self { p0, p1 })
    }

    pub fn at(&self, s: f64) -> (f64, f64) {
        (
            self.p0.x + s * (self.p1.x - self.p0.x),
            self.p0.y + s * (self.p1.y - self.p0.y),
        )
    }
}

impl Default for Segment {
    /// The horizontal diameter from `(-1, 0)` to `(1, 0)`.
    fn default() -> Self {
        Self {
            p0: DiskPoint { x: -1.0, y: 0.0 },
            p1: DiskPoint { x: 1.0, y: 0.0 },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectionRow {
    pub s: f64,
    pub x: f64,
    pub y: f64,
    pub f: f64,
    /// One value per degree, in the order of [`CrossSection::degrees`].
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossSection {
    pub operator: OperatorSpec,
    pub degrees: Vec<u32>,
    pub rows: Vec<SectionRow>,
}

impl CrossSection {
    pub fn file_name(&self, function: &str) -> String {
        format!("section_{}_{}.csv", self.operator.name(), function)
    }
}

/// Samples `f` and the operator at each degree on `samples` evenly spaced
/// points of the segment.
pub fn cross_section(
    op: &OperatorSpec,
    f: impl Fn(f64, f64) -> f64 + Sync,
    n_list: &[u32],
    segment: &Segment,
    samples: usize,
) -> Result<CrossSection> {
    Segment::new(segment.p0, segment.p1)?;
    if samples == 0 {
        return Err(Error::Parameter {
            name: "samples",
            value: 0,
            reason: "at least one sample is needed",
        });
    }
    let params: Vec<f64> = (0..samples)
        .map(|i| {
            if samples == 1 {
                0.0
            } else {
                i as f64 / (samples - 1) as f64
            }
        })
        .collect();
    let mut rows: Vec<SectionRow> = params
        .iter()
        .map(|&s| {
            let (x, y) = segment.at(s);
            SectionRow {
                s,
                x,
                y,
                f: f(x, y),
                values: Vec::with_capacity(n_list.len()),
            }
        })
        .collect();
    for &n in n_list {
        let prepared = op.prepare(&f, n)?;
        let values = rows
            .par_iter()
            .enumerate()
            .map(|(i, r)| prepared.eval(r.x, r.y).map_err(|e| Error::at_point(i, e)))
            .collect::<Result<Vec<_>>>()?;
        for (row, v) in rows.iter_mut().zip(values) {
            row.values.push(v);
        }
    }
    Ok(CrossSection {
        operator: *op,
        degrees: n_list.to_vec(),
        rows,
    })
}

/// Writes `s, x, y, f, <op>_<n>...`.
pub fn write_section_csv(section: &CrossSection, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["s".to_string(), "x".into(), "y".into(), "f".into()];
    header.extend(
        section
            .degrees
            .iter()
            .map(|n| format!("{}_{n}", section.operator.name())),
    );
    w.write_record(&header)?;
    for r in &section.rows {
        let mut record: Vec<String> = [r.s, r.x, r.y, r.f]
            .iter()
            .map(|&v| format_significant(v, CSV_DIGITS))
            .collect();
        record.extend(r.values.iter().map(|&v| format_significant(v, CSV_DIGITS)));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_section() {
        let sec = cross_section(&OperatorSpec::Cbar, |_, _| 1.0, &[3, 6], &Segment::default(), 21)
            .unwrap();
        assert_eq!(sec.rows.len(), 21);
        assert_eq!(sec.rows[10].x, 0.0);
        for r in &sec.rows {
            assert!(r.values.iter().all(|v| (v - 1.0).abs() < 1e-13));
        }
        let mut buf = Vec::new();
        write_section_csv(&sec, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("s,x,y,f,Cbar_3,Cbar_6\n"));
    }

    #[test]
    fn degenerate_segment_is_rejected() {
        let p = DiskPoint::new(0.1, 0.1).unwrap();
        assert!(Segment::new(p, p).is_err());
        let seg = Segment { p0: p, p1: p };
        assert!(cross_section(&OperatorSpec::Bbar, |_, _| 1.0, &[3], &seg, 5).is_err());
    }
}
