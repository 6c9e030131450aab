//! Series at 1, tanh-sinh quadrature, Pochhammer-regularized contour
//! integrals, and the Γ₁ double integral.
//!
//! Series run in MPFR at a requested number of digits. Quadrature runs in
//! double precision with exact complement tracking at the endpoints.

mod contour;
mod double;
mod quad;
mod series;

pub use contour::poch_contour;
pub use double::gamma1_double;
pub use quad::{quad_1d, tanh_sinh, IntegrandSpec, Interval, QuadResult, QuadValue, DEFAULT_MAX_LEVEL};
pub use series::{excess, f32_at_1, f32_at_1_f64, f32_at_1_q, order_cap, pochhammer, SeriesResult};
