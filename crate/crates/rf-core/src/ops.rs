use crate::batch::StateBatch;
use crate::error::CoreError;
use crate::velocity::VelocityField;

/// Guard width for the score singularity at `t = 1`.
///
/// The score-from-velocity identity divides by `(1 - t)`; operations that
/// need the score refuse `t > 1 - SCORE_TIME_GUARD`. The samplers in this
/// workspace are constructed to never ask for the score that close to 1.
pub const SCORE_TIME_GUARD: f64 = 1e-3;

/// Linear interpolation `t*x1 + (1-t)*x0`, elementwise.
pub fn interpolate(x0: &StateBatch, x1: &StateBatch, t: f64) -> Result<StateBatch, CoreError> {
    if !x0.same_shape(x1) {
        return Err(CoreError::ShapeMismatch {
            left: (x0.batch(), x0.dim()),
            right: (x1.batch(), x1.dim()),
        });
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(CoreError::TimeOutOfRange { t });
    }
    let data = t * x1.data() + (1.0 - t) * x0.data();
    Ok(StateBatch::from_array_unchecked(data))
}

/// The regression target of the flow objective: `x1 - x0`, elementwise.
pub fn velocity_target(x0: &StateBatch, x1: &StateBatch) -> Result<StateBatch, CoreError> {
    if !x0.same_shape(x1) {
        return Err(CoreError::ShapeMismatch {
            left: (x0.batch(), x0.dim()),
            right: (x1.batch(), x1.dim()),
        });
    }
    Ok(StateBatch::from_array_unchecked(x1.data() - x0.data()))
}

/// Score of the time-`t` marginal recovered from the velocity field:
/// `grad log rho_t(x) = (t * v(x, t) - x) / (1 - t)`.
///
/// Valid for flows with a standard Gaussian source. Requires
/// `0 < t <= 1 - SCORE_TIME_GUARD`.
pub fn score_from_velocity<V: VelocityField + ?Sized>(
    v: &V,
    x: &StateBatch,
    t: f64,
) -> Result<StateBatch, CoreError> {
    let max = 1.0 - SCORE_TIME_GUARD;
    if !(t > 0.0 && t <= max) {
        return Err(CoreError::ScoreTimeOutOfRange { t, max });
    }
    let vel = v.velocity(x, t);
    if !vel.same_shape(x) {
        return Err(CoreError::ShapeMismatch {
            left: (x.batch(), x.dim()),
            right: (vel.batch(), vel.dim()),
        });
    }
    let data = (t * vel.data() - x.data()) / (1.0 - t);
    Ok(StateBatch::from_array_unchecked(data))
}
