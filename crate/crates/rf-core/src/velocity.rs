use ndarray::Array2;

use crate::batch::StateBatch;

/// A velocity field `v(x, t)` evaluated on a whole batch at once.
///
/// Implementations must be deterministic (identical `(x, t)` give identical
/// output) and return finite values for finite input and `t` in `[0, 1]`.
/// Samplers verify finiteness per step and abort with the step index when an
/// implementation misbehaves.
pub trait VelocityField {
    fn velocity(&self, x: &StateBatch, t: f64) -> StateBatch;
}

impl<V: VelocityField + ?Sized> VelocityField for &V {
    fn velocity(&self, x: &StateBatch, t: f64) -> StateBatch {
        (**self).velocity(x, t)
    }
}

impl<V: VelocityField + ?Sized> VelocityField for Box<V> {
    fn velocity(&self, x: &StateBatch, t: f64) -> StateBatch {
        (**self).velocity(x, t)
    }
}

/// Spatially constant field `v(x, t) = u`.
#[derive(Debug, Clone)]
pub struct ConstantVelocity(pub Vec<f64>);

impl VelocityField for ConstantVelocity {
    fn velocity(&self, x: &StateBatch, _t: f64) -> StateBatch {
        assert_eq!(x.dim(), self.0.len(), "constant velocity dimension");
        let rows = x.batch();
        let data = Array2::from_shape_fn((rows, self.0.len()), |(_, j)| self.0[j]);
        StateBatch::from_array_unchecked(data)
    }
}

/// Adapter turning a closure into a [`VelocityField`].
pub struct FnVelocity<F: Fn(&StateBatch, f64) -> StateBatch>(pub F);

impl<F: Fn(&StateBatch, f64) -> StateBatch> VelocityField for FnVelocity<F> {
    fn velocity(&self, x: &StateBatch, t: f64) -> StateBatch {
        (self.0)(x, t)
    }
}
