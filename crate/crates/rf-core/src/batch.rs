use ndarray::{Array2, ArrayView1};

use crate::error::CoreError;

/// A batch of points in `R^d`, stored as a `B x d` matrix of `f64`.
///
/// All flow computations run in 64-bit floats. Entries are finite by
/// construction when built through [`StateBatch::new`]; the cheaper
/// [`StateBatch::from_array_unchecked`] is for internal hot paths where the
/// caller already knows the data is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct StateBatch {
    data: Array2<f64>,
}

impl StateBatch {
    /// Validates shape (at least 1x1) and finiteness.
    pub fn new(data: Array2<f64>) -> Result<Self, CoreError> {
        let (b, d) = data.dim();
        if b == 0 || d == 0 {
            return Err(CoreError::EmptyBatch { batch: b, dim: d });
        }
        if let Some((row, col)) = first_non_finite(&data) {
            return Err(CoreError::NonFinite { row, col });
        }
        Ok(Self { data })
    }

    /// Builds a batch from row slices; rows must share one nonzero length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, CoreError> {
        let b = rows.len();
        let d = rows.first().map_or(0, Vec::len);
        if b == 0 || d == 0 {
            return Err(CoreError::EmptyBatch { batch: b, dim: d });
        }
        let mut flat = Vec::with_capacity(b * d);
        for row in rows {
            if row.len() != d {
                return Err(CoreError::ShapeMismatch {
                    left: (b, d),
                    right: (b, row.len()),
                });
            }
            flat.extend_from_slice(row);
        }
        let data = Array2::from_shape_vec((b, d), flat).expect("row-major shape");
        Self::new(data)
    }

    /// Single point convenience constructor (batch of one).
    pub fn single(point: &[f64]) -> Result<Self, CoreError> {
        Self::from_rows(&[point.to_vec()])
    }

    /// Skips validation; the caller guarantees finiteness and nonzero shape.
    pub fn from_array_unchecked(data: Array2<f64>) -> Self {
        debug_assert!(data.nrows() > 0 && data.ncols() > 0);
        Self { data }
    }

    pub fn batch(&self) -> usize {
        self.data.nrows()
    }

    pub fn dim(&self) -> usize {
        self.data.ncols()
    }

    pub fn data(&self) -> &Array2<f64> {
        &self.data
    }

    pub fn into_data(self) -> Array2<f64> {
        self.data
    }

    pub fn row(&self, i: usize) -> ArrayView1<'_, f64> {
        self.data.row(i)
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.data.dim() == other.data.dim()
    }

    /// Index of the first non-finite entry, if any.
    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        first_non_finite(&self.data)
    }

    /// Bit-level equality, used by common-random-number coupling checks.
    pub fn bits_eq(&self, other: &Self) -> bool {
        self.same_shape(other)
            && self
                .data
                .iter()
                .zip(other.data.iter())
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }

    /// Per-coordinate sample means.
    pub fn mean(&self) -> Vec<f64> {
        let n = self.batch() as f64;
        (0..self.dim())
            .map(|j| self.data.column(j).sum() / n)
            .collect()
    }
}

fn first_non_finite(data: &Array2<f64>) -> Option<(usize, usize)> {
    for (idx, v) in data.indexed_iter() {
        if !v.is_finite() {
            return Some(idx);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(matches!(
            StateBatch::new(Array2::zeros((0, 2))),
            Err(CoreError::EmptyBatch { .. })
        ));
        assert!(matches!(
            StateBatch::new(array![[1.0, f64::NAN]]),
            Err(CoreError::NonFinite { row: 0, col: 1 })
        ));
        assert!(matches!(
            StateBatch::new(array![[1.0], [f64::INFINITY]]),
            Err(CoreError::NonFinite { row: 1, col: 0 })
        ));
    }

    #[test]
    fn from_rows_checks_ragged_input() {
        let err = StateBatch::from_rows(&[vec![1.0, 2.0], vec![3.0]]);
        assert!(matches!(err, Err(CoreError::ShapeMismatch { .. })));
    }

    #[test]
    fn bits_eq_distinguishes_signed_zero() {
        let a = StateBatch::new(array![[0.0]]).unwrap();
        let b = StateBatch::new(array![[-0.0]]).unwrap();
        assert!(a == b);
        assert!(!a.bits_eq(&b));
    }
}
