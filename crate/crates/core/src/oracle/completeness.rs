//! Parseval defect `1 - sum_{lambda in Lambda_k} |mu^(xi - lambda)|^2`.

use rayon::prelude::*;

use crate::error::Result;
use crate::fourier::FourierEvaluator;
use crate::hadamard::CandidateSpectrum;
use crate::instance::ProblemInstance;
use crate::rational::sub;
use crate::Frequency;

#[derive(Clone, Debug, PartialEq)]
pub struct CompletenessReport {
    pub depth: usize,
    pub tail_eps: f64,
    pub probes: Vec<Frequency>,
    /// `Q_k(xi)` per probe.
    pub sums: Vec<f64>,
    /// `1 - Q_k(xi)` per probe.
    pub defects: Vec<f64>,
    /// Certified bound on the error of each sum.
    pub error_bounds: Vec<f64>,
}

/// Terms are summed in the enumeration order of the spectrum, so a deeper
/// spectrum (which extends the shallower one as a prefix) never gives a
/// smaller sum.
pub fn completeness_defect(
    inst: &ProblemInstance,
    spectrum: &CandidateSpectrum,
    probes: &[Frequency],
    tail_eps: f64,
) -> Result<CompletenessReport> {
    let eval = FourierEvaluator::new(inst)?;
    let mut sums = Vec::with_capacity(probes.len());
    let mut error_bounds = Vec::with_capacity(probes.len());
    for xi in probes {
        let terms: Vec<(f64, f64)> = spectrum
            .frequencies
            .par_iter()
            .map(|lambda| {
                let z = eval.mu_hat(&sub(xi, lambda), tail_eps)?;
                let a = z.norm();
                let e = z.error_bound;
                Ok((a * a, e * (2.0 * a + e)))
            })
            .collect::<Result<_>>()?;
        sums.push(terms.iter().map(|t| t.0).sum());
        error_bounds.push(terms.iter().map(|t| t.1).sum());
    }
    Ok(CompletenessReport {
        depth: spectrum.depth,
        tail_eps,
        probes: probes.to_vec(),
        defects: sums.iter().map(|s| 1.0 - s).collect(),
        sums,
        error_bounds,
    })
}
