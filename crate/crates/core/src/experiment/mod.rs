//! Meshes, RMSE statistics, built-in test functions, convergence tables and
//! cross-sections for operators on the unit disk.

mod format;
mod functions;
mod mesh;
mod rmse;
mod section;
mod tables;

pub use format::format_significant;
pub use functions::BuiltinFunction;
pub use mesh::{
    mesh_quadrant_disk, mesh_stancu_disk, write_mesh_csv, Mesh, MeshKind, MeshPoint, MeshSpec,
    MeshTag,
};
pub use rmse::{
    rmse, rmse_breakdown, CompensatedSum, OperatorSpec, PreparedOperator, RmseBreakdown,
};
pub use section::{cross_section, write_section_csv, CrossSection, Segment, SectionRow};
pub use tables::{
    run_example, write_table_csv, ExampleRow, ExampleTable, RmseReport, DEFAULT_DEGREES,
    REFERENCE_RMSE,
};

/// Digits written to CSV files.
pub const CSV_DIGITS: usize = 9;
