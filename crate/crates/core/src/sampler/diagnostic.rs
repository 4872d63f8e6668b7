use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::fiber::Fiber;
use crate::graph::EdgeVector;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformityReport {
    pub samples: usize,
    pub histogram: Vec<u64>,
    pub chi_square: f64,
    pub degrees_of_freedom: usize,
    /// 0.999 quantile of the chi-square distribution; `None` for one-element fibers.
    pub critical_value: Option<f64>,
    pub passes: bool,
}

/// Pearson chi-square of the visit histogram against the uniform distribution
/// on the fiber.
pub fn uniformity_diagnostic(samples: &[EdgeVector], fiber: &Fiber) -> Result<UniformityReport> {
    if fiber.is_empty() {
        return Err(Error::EmptyFiber);
    }
    let index = fiber.index_map();
    let mut histogram = vec![0u64; fiber.len()];
    for (i, s) in samples.iter().enumerate() {
        let j = index.get(s).ok_or(Error::SampleOutsideFiber { index: i })?;
        histogram[*j] += 1;
    }
    let dof = fiber.len() - 1;
    let chi_square = if samples.is_empty() {
        0.0
    } else {
        let expected = samples.len() as f64 / fiber.len() as f64;
        histogram
            .iter()
            .map(|&o| (o as f64 - expected).powi(2) / expected)
            .sum()
    };
    let critical_value = (dof > 0).then(|| {
        ChiSquared::new(dof as f64)
            .expect("positive dof")
            .inverse_cdf(0.999)
    });
    // no samples is no evidence either way; report it as not passing
    let passes = !samples.is_empty() && critical_value.is_none_or(|c| chi_square <= c);
    Ok(UniformityReport {
        samples: samples.len(),
        histogram,
        chi_square,
        degrees_of_freedom: dof,
        critical_value,
        passes,
    })
}
