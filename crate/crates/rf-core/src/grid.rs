use crate::error::CoreError;

/// An ordered set of flow times `t_0 = 0 < t_1 < ... < t_N = 1`.
///
/// `N` (the number of steps) is `times.len() - 1` and must be at least 1.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    times: Vec<f64>,
}

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self, CoreError> {
        if times.len() < 2 {
            return Err(CoreError::InvalidGrid {
                reason: format!("need at least 2 times, got {}", times.len()),
            });
        }
        if times[0] != 0.0 {
            return Err(CoreError::InvalidGrid {
                reason: format!("first time must be 0, got {}", times[0]),
            });
        }
        if *times.last().unwrap() != 1.0 {
            return Err(CoreError::InvalidGrid {
                reason: format!("last time must be 1, got {}", times.last().unwrap()),
            });
        }
        for w in times.windows(2) {
            if !(w[1] > w[0]) {
                return Err(CoreError::InvalidGrid {
                    reason: format!("times not strictly increasing at {} -> {}", w[0], w[1]),
                });
            }
        }
        Ok(Self { times })
    }

    /// Uniform grid with `steps` equal intervals; endpoints are exact.
    pub fn uniform(steps: usize) -> Result<Self, CoreError> {
        if steps == 0 {
            return Err(CoreError::InvalidGrid {
                reason: "need at least one step".into(),
            });
        }
        let n = steps as f64;
        Self::new((0..=steps).map(|k| k as f64 / n).collect())
    }

    /// Quadratic spacing `t_k = (k/N)^2`: finer near the noise end.
    pub fn quadratic(steps: usize) -> Result<Self, CoreError> {
        if steps == 0 {
            return Err(CoreError::InvalidGrid {
                reason: "need at least one step".into(),
            });
        }
        let n = steps as f64;
        Self::new((0..=steps).map(|k| (k as f64 / n).powi(2)).collect())
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// Number of steps `N`.
    pub fn steps(&self) -> usize {
        self.times.len() - 1
    }

    /// Iterator over `(t_k, t_{k+1})` step intervals.
    pub fn intervals(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.times.windows(2).map(|w| (w[0], w[1]))
    }
}
