//! Physical applications: Cole's polarization circuit and the after-effect
//! discharge of an imperfect capacitor.

mod capacitor;
mod cole;
mod volterra;

pub use capacitor::{
    closed_form_j, discharge_forcing, gross_approximation, solve_discharge_closed_form,
    solve_discharge_gross, solve_discharge_ml, solve_discharge_volterra, CapacitorModel,
    DischargeSolution, Mode, SolutionMethod,
};
pub use cole::{cole_potential, ColeCircuit};
pub use volterra::{solve_volterra, VolterraProblem, VolterraSolution};
