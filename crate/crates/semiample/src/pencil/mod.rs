//! Exact toolkit for pencils of plane curves over Q: homogeneous forms,
//! singular-point location by resultant elimination, node testing, and
//! detection of singular pencil members.

mod forms;
mod member;
mod params;

pub use forms::{HomogeneousForm, ProjectivePoint, Var};
pub use member::{
    is_reduced_on_random_lines, node_test, rational_singular_points, singularity_report,
    NodeKind, SingularityReport,
};
pub use params::{singular_parameters, Parameter, PencilMember, PencilReport};
