//! Core building blocks for rectified-flow samplers.
//!
//! A rectified flow transports a standard Gaussian source at time 0 to a
//! target distribution at time 1 along straight interpolation paths
//! `x_t = t*x1 + (1-t)*x0`, driven by a velocity field `v(x, t)`. This crate
//! holds the pieces every sampler needs: batched states, time grids, the
//! velocity-field abstraction, a reproducible noise source, and the
//! score-from-velocity identity.

mod batch;
mod error;
mod grid;
mod noise;
mod ops;
mod velocity;

pub use batch::StateBatch;
pub use error::CoreError;
pub use grid::TimeGrid;
pub use noise::NoiseSource;
pub use ops::{interpolate, score_from_velocity, velocity_target, SCORE_TIME_GUARD};
pub use velocity::{ConstantVelocity, FnVelocity, VelocityField};
