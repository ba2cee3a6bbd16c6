//! Random iteration of `x -> M^{-1}(x + d)` with `d` uniform on `D`.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fourier::contraction;
use crate::instance::ProblemInstance;
use crate::linalg::inverse;
use crate::rational::sup_operator_norm;
use crate::FloatMatrix;

pub const BURN_IN: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub struct AttractorSample {
    pub points: Vec<Vec<f64>>,
    pub iterations: usize,
    pub seed: u64,
    /// Sup-norm radius of a box around 0 containing the attractor.
    pub radius: f64,
}

/// `max ||d||_inf * sum_{j >= 1} ||M^{-j}||_inf`, summed over one contraction
/// period and closed with the geometric factor `1 / (1 - theta)`.
pub fn attractor_radius(inst: &ProblemInstance) -> Result<f64> {
    let m_inv = inverse(inst.m())?;
    let c = contraction(&m_inv, 10 * inst.dim())?;
    let mut p = m_inv.clone();
    let mut period = 0.0;
    for _ in 0..c.k {
        period += sup_operator_norm(&p).to_f64().unwrap_or(f64::INFINITY);
        p = &p * &m_inv;
    }
    let vmax = inst
        .v()
        .iter()
        .map(|x| x.to_f64().unwrap_or(f64::INFINITY).abs())
        .fold(0.0, f64::max);
    let dmax = (inst.q() - 1) as f64 * vmax;
    Ok(dmax * period / c.gap * (1.0 + 1e-9))
}

/// Starts at 0 and discards [`BURN_IN`] steps before recording.
pub fn chaos_game(inst: &ProblemInstance, iterations: usize, seed: u64) -> Result<AttractorSample> {
    let n = inst.dim();
    let m_inv: FloatMatrix = inverse(inst.m())?.map(|x| x.to_f64().unwrap_or(f64::NAN));
    let v: Vec<f64> = inst.v().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let radius = attractor_radius(inst)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0.0; n];
    let mut y = vec![0.0; n];
    let mut points = Vec::with_capacity(iterations);
    for step in 0..BURN_IN + iterations {
        let k = rng.gen_range(0..inst.q()) as f64;
        for (yi, (xi, vi)) in y.iter_mut().zip(x.iter().zip(&v)) {
            *yi = xi + k * vi;
        }
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = m_inv.row(i).iter().zip(&y).map(|(a, b)| a * b).sum();
        }
        if step >= BURN_IN {
            points.push(x.clone());
        }
    }
    Ok(AttractorSample { points, iterations, seed, radius })
}
