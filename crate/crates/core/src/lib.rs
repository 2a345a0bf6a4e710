//! Bernstein-type approximation operators on intervals, curvilinear
//! trapezoids and the unit disk, with the machinery to reproduce RMSE
//! convergence experiments on the disk.
//!
//! The crate is organised bottom-up:
//!
//! * [`univariate`] — classical and shifted Bernstein bases, `B_n`, and the
//!   operators conjugated by a reparameterization `tau`.
//! * [`stancu`] — bivariate Bernstein-Stancu operators on domains
//!   `a <= x <= b, phi1(x) <= y <= phi2(x)`.
//! * [`disk`] — the square, simplex and ball specializations, the quadrant
//!   operators and the piecewise disk operators.
//! * [`experiment`] — meshes, RMSE, the built-in test functions, tables and
//!   cross-sections.
//!
//! Every operation is a pure function of its inputs. Callables handed to the
//! operators must be safe to call from several threads at once.

mod error;

pub mod binomial;
pub mod disk;
pub mod experiment;
pub mod stancu;
pub mod univariate;

pub use error::{Error, Result};
pub use disk::{DiskPoint, PiecewiseKind, Quadrant, TransformPair};
pub use stancu::{CurvilinearDomain, NodeSchedule};
pub use univariate::{BasisRow, Interval, Transform1D, TransformDiagnostics};
