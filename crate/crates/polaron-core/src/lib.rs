//! Ground-state energy and effective mass of the Fröhlich polaron across
//! the whole coupling range.
//!
//! The crate evaluates the closed-form operator-method expressions for the
//! polaron energy E₀(α) and mass m_p(α), checks every closed form against
//! direct quadrature of its integral representation, and provides the
//! two-parameter Feynman variational model as the baseline the results are
//! traditionally compared against.
//!
//! Modules:
//! - [`special`]: log-gamma and the Γ(1+z)/Γ(1/2+z) ratio.
//! - [`quadrature`]: tanh-sinh integration on finite and semi-infinite
//!   intervals, with endpoint-singularity support.
//! - [`optimize`]: deterministic Nelder–Mead simplex minimization.
//! - [`om`]: the closed-form energy/mass results and their asymptotics.
//! - [`verify`]: quadrature oracles for every closed form.
//! - [`feynman`]: the variational baseline (energy, mass, minimization).
//!
//! All public operations are pure and reentrant; results are bit-for-bit
//! reproducible for identical inputs.

pub mod error;
pub mod feynman;
pub mod om;
pub mod optimize;
pub mod quadrature;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use feynman::{feynman_energy, feynman_mass, feynman_minimize, feynman_minimize_default, FeynmanParams, FeynmanResult};
pub use om::{
    e0_zeroth, effective_mass, ground_state_energy, i1_closed, i2_closed, i3_closed,
    omega_of_alpha, strong_asymptote, strong_asymptote_with, strong_quadratic_coefficient,
    weak_asymptote, CouplingPoint, EnergyBreakdown, MassBreakdown, StrongConstantTerm,
};
pub use optimize::{minimize, MinimizeOptions, MinimizeResult};
pub use quadrature::{
    integrate_finite, integrate_semi_infinite, integrate_semi_infinite_scaled, QuadratureResult,
    Tolerance,
};
pub use special::{gamma_ratio, log_gamma};
pub use verify::{
    i1_numeric, i2_numeric, i3_numeric, second_order_numeric, verify_all, OracleQuantity,
    OracleReport,
};
