//! Bernstein-Stancu operators on curvilinear trapezoids
//! `a <= x <= b, phi1(x) <= y <= phi2(x)`.

mod determinant;
mod domain;
mod monomial;
mod operator;
mod probe;
mod schedule;

pub use determinant::stancu_determinant;
pub use domain::{CurvilinearDomain, DegenerateEdges, DOMAIN_VALIDATION_GRID};
pub use monomial::{monomial_image, Monomial};
pub use operator::{lift, stancu, stancu_nodes, LiftedField, StancuNodes, StancuOperator};
pub use probe::{voronovskaja_probe, voronovskaja_probe_with, ProbeRow};
pub use schedule::NodeSchedule;
