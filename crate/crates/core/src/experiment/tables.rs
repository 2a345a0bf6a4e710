use std::io::Write;

use super::{
    format_significant, mesh_quadrant_disk, mesh_stancu_disk, rmse_breakdown, BuiltinFunction,
    OperatorSpec, RmseBreakdown, CSV_DIGITS,
};
use crate::error::{Error, Result};

/// Degrees tabulated by default.
pub const DEFAULT_DEGREES: [u32; 8] = [10, 20, 30, 40, 50, 60, 70, 80];

/// Reference RMSE values `(n, Cbar, Bstancu-disk)` for examples 1 to 4.
pub const REFERENCE_RMSE: [[(u32, f64, f64); 8]; 4] = [
    [
        (10, 0.191411, 0.30623),
        (20, 0.117881, 0.209091),
        (30, 0.0860663, 0.16182),
        (40, 0.0682511, 0.132416),
        (50, 0.0568288, 0.112151),
        (60, 0.0488602, 0.0972969),
        (70, 0.0429694, 0.0859318),
        (80, 0.0384267, 0.0769527),
    ],
    [
        (10, 0.535344, 0.700146),
        (20, 0.366915, 0.613427),
        (30, 0.278477, 0.526227),
        (40, 0.225091, 0.454904),
        (50, 0.189454, 0.398559),
        (60, 0.163967, 0.353775),
        (70, 0.144812, 0.317628),
        (80, 0.129872, 0.287968),
    ],
    [
        (10, 0.0505862, 0.140837),
        (20, 0.0293585, 0.0685387),
        (30, 0.0213945, 0.0455634),
        (40, 0.017105, 0.0342737),
        (50, 0.0143844, 0.0275514),
        (60, 0.0124871, 0.0230843),
        (70, 0.0110789, 0.0198962),
        (80, 0.00998647, 0.0175041),
    ],
    [
        (10, 0.216588, 0.270366),
        (20, 0.175754, 0.243468),
        (30, 0.156563, 0.223305),
        (40, 0.144805, 0.210916),
        (50, 0.136559, 0.205949),
        (60, 0.130305, 0.192988),
        (70, 0.125319, 0.193887),
        (80, 0.121205, 0.187675),
    ],
];

/// RMSE of one operator on one function across degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct RmseReport {
    pub function: String,
    pub operator: String,
    /// `(n, rmse)` sorted by `n`.
    pub rows: Vec<(u32, f64)>,
    /// `(n, entries evaluated, nominal count)`.
    pub mesh_sizes: Vec<(u32, usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExampleRow {
    pub n: u32,
    /// `Cbar` on the deduplicated quadrant mesh.
    pub cbar: RmseBreakdown,
    /// `Bstancu-disk` with `n_k = n` on the Stancu mesh.
    pub stancu: RmseBreakdown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleTable {
    pub example: u32,
    pub function: BuiltinFunction,
    pub rows: Vec<ExampleRow>,
}

impl ExampleTable {
    pub fn file_name(&self) -> String {
        format!("table_example{}.csv", self.example)
    }

    /// The reference pair for degree `n`, if tabulated.
    pub fn reference(&self, n: u32) -> Option<(f64, f64)> {
        REFERENCE_RMSE[self.example as usize - 1]
            .iter()
            .find(|r| r.0 == n)
            .map(|r| (r.1, r.2))
    }

    /// The table split into one report per operator.
    pub fn reports(&self) -> (RmseReport, RmseReport) {
        let report = |op: OperatorSpec, pick: fn(&ExampleRow) -> RmseBreakdown| RmseReport {
            function: self.function.id(),
            operator: op.name().to_string(),
            rows: self.rows.iter().map(|r| (r.n, pick(r).rmse())).collect(),
            mesh_sizes: self
                .rows
                .iter()
                .map(|r| (r.n, pick(r).points, pick(r).nominal))
                .collect(),
        };
        (
            report(OperatorSpec::Cbar, |r| r.cbar),
            report(OperatorSpec::STANCU_DISK, |r| r.stancu),
        )
    }
}

/// Computes both operators' RMSE for example `id` at each degree.
pub fn run_example(id: u32, n_list: &[u32]) -> Result<ExampleTable> {
    let function = BuiltinFunction::example(id)?;
    let mut degrees = n_list.to_vec();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.first() == Some(&0) {
        return Err(Error::Parameter {
            name: "n",
            value: 0,
            reason: "degrees must be positive",
        });
    }
    let f = |x: f64, y: f64| function.eval(x, y);
    let rows = degrees
        .into_iter()
        .map(|n| {
            let cbar = rmse_breakdown(
                f,
                &OperatorSpec::Cbar.prepare(f, n)?,
                &mesh_quadrant_disk(n, true)?,
            )?;
            let stancu = rmse_breakdown(
                f,
                &OperatorSpec::STANCU_DISK.prepare(f, n)?,
                &mesh_stancu_disk(n)?,
            )?;
            Ok(ExampleRow { n, cbar, stancu })
        })
        .collect::<Result<_>>()?;
    Ok(ExampleTable {
        example: id,
        function,
        rows,
    })
}

/// Writes `n, rmse_C, rmse_B`.
pub fn write_table_csv(table: &ExampleTable, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "rmse_C", "rmse_B"])?;
    for r in &table.rows {
        w.write_record([
            r.n.to_string(),
            format_significant(r.cbar.rmse(), CSV_DIGITS),
            format_significant(r.stancu.rmse(), CSV_DIGITS),
        ])?;
    }
    w.flush()?;
    Ok(())
}
