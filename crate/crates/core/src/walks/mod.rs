//! Quadrant walks with small steps: step models, exact counts, and the
//! kernel equation they satisfy.

mod equation;
mod model;
mod table;

pub use equation::verify_functional_equation;
pub use model::{step_by_name, step_name, ModelError, Step, StepModel, COMPASS};
pub use table::{boundary_sections, count_walks, gessel_closed_form, Sections, WalkTable};
