//! Exhaustive maximum orthogonal set on a finite lattice box.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::{FourierEvaluator, OrthogonalityCertificate};
use crate::instance::ProblemInstance;
use crate::Frequency;

pub const DEFAULT_CANDIDATE_CAP: usize = 5000;

/// Largest set of pairwise certified-orthogonal frequencies containing 0
/// among `(1/L) Z^n ∩ [-N, N]^n`. Evidence about that lattice only.
#[derive(Clone, Debug, PartialEq)]
pub struct CliqueReport {
    pub lattice_denominator: u64,
    pub box_radius: u64,
    pub j_max: usize,
    pub candidates: usize,
    pub max_clique_size: usize,
    /// The clique, in lexicographic order.
    pub witness_set: Vec<Frequency>,
    pub certificates: Vec<OrthogonalityCertificate>,
    /// Every pair of `witness_set` carries a certificate.
    pub certified: bool,
}

/// `3n + ceil(log2(2 N L^2))`, enough levels for any difference in the box.
pub fn default_clique_j_max(n: usize, lattice_denominator: u64, box_radius: u64) -> usize {
    let size = 2u128 * box_radius as u128 * (lattice_denominator as u128).pow(2);
    3 * n + (128 - size.saturating_sub(1).leading_zeros()) as usize
}

pub fn max_orthogonal_clique(
    inst: &ProblemInstance,
    lattice_denominator: u64,
    box_radius: u64,
    j_max: usize,
) -> Result<CliqueReport> {
    max_orthogonal_clique_capped(inst, lattice_denominator, box_radius, j_max, DEFAULT_CANDIDATE_CAP)
}

pub fn max_orthogonal_clique_capped(
    inst: &ProblemInstance,
    lattice_denominator: u64,
    box_radius: u64,
    j_max: usize,
    cap: usize,
) -> Result<CliqueReport> {
    if lattice_denominator == 0 {
        return Err(Error::DimensionMismatch("lattice denominator must be positive".into()));
    }
    let n = inst.dim();
    let side = box_radius
        .checked_mul(lattice_denominator)
        .and_then(|s| s.checked_mul(2))
        .and_then(|s| s.checked_add(1))
        .ok_or(Error::TooLarge { count: usize::MAX, cap })?;
    let count = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(side as usize));
    match count {
        Some(c) if c <= cap => {}
        Some(c) => return Err(Error::TooLarge { count: c, cap }),
        None => return Err(Error::TooLarge { count: usize::MAX, cap }),
    }
    let candidates = lattice_box(n, lattice_denominator, box_radius);
    let zero = candidates
        .iter()
        .position(|x| x.iter().all(|c| c == &BigRational::from_integer(0.into())))
        .expect("the box contains 0");

    let eval = FourierEvaluator::new(inst)?;
    let certifies = |a: usize, b: usize| eval.certify(&candidates[a], &candidates[b], j_max).is_some();
    // a clique through 0 lives inside the neighbourhood of 0
    let neighbours: Vec<usize> = (0..candidates.len())
        .into_par_iter()
        .filter(|&i| i != zero && certifies(i, zero))
        .collect();
    let adj = Bitsets::build(neighbours.len(), |a, b| certifies(neighbours[a], neighbours[b]));
    let best = max_clique(&adj);

    let mut members: Vec<usize> = best.iter().map(|&i| neighbours[i]).collect();
    members.push(zero);
    members.sort_unstable();
    let witness_set: Vec<Frequency> = members.iter().map(|&i| candidates[i].clone()).collect();
    let mut certificates = Vec::new();
    let mut certified = true;
    for a in 0..witness_set.len() {
        for b in a + 1..witness_set.len() {
            match eval.certify(&witness_set[a], &witness_set[b], j_max) {
                Some(c) => certificates.push(c),
                None => certified = false,
            }
        }
    }
    Ok(CliqueReport {
        lattice_denominator,
        box_radius,
        j_max,
        candidates: candidates.len(),
        max_clique_size: witness_set.len(),
        witness_set,
        certificates,
        certified,
    })
}

/// Lexicographic enumeration of `(1/L) Z^n ∩ [-N, N]^n`.
fn lattice_box(n: usize, l: u64, radius: u64) -> Vec<Frequency> {
    let hi = (radius * l) as i64;
    let den = BigInt::from(l);
    let coords: Vec<BigRational> = (-hi..=hi)
        .map(|k| BigRational::new(BigInt::from(k), den.clone()))
        .collect();
    let mut out: Vec<Frequency> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                coords.iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c.clone());
                    q
                })
            })
            .collect();
    }
    out
}

/// Symmetric adjacency as one bitset row per vertex.
struct Bitsets {
    n: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl Bitsets {
    fn build(n: usize, edge: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let words = n.div_ceil(64);
        let upper: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|a| (a + 1..n).filter(|&b| edge(a, b)).collect())
            .collect();
        let mut rows = vec![vec![0u64; words]; n];
        for (a, bs) in upper.iter().enumerate() {
            for &b in bs {
                rows[a][b / 64] |= 1 << (b % 64);
                rows[b][a / 64] |= 1 << (a % 64);
            }
        }
        Bitsets { n, words, rows }
    }

    fn has(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] >> (b % 64) & 1 == 1
    }
}

/// Branch and bound with greedy colouring bounds. Vertices are tried in
/// index order, so the result is deterministic.
fn max_clique(g: &Bitsets) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let all: Vec<usize> = (0..g.n).collect();
    expand(g, &mut current, all, &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &Bitsets, current: &mut Vec<usize>, mut p: Vec<usize>, best: &mut Vec<usize>) {
    let (order, colours) = colour_sort(g, &p);
    for idx in (0..order.len()).rev() {
        if current.len() + colours[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next: Vec<usize> = p.iter().copied().filter(|&u| g.has(v, u)).collect();
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        p.retain(|&u| u != v);
    }
}

/// Greedy colouring; returns vertices sorted by colour and, for each, the
/// number of colours used up to it (an upper bound on the clique size).
fn colour_sort(g: &Bitsets, p: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut masks: Vec<Vec<u64>> = Vec::new();
    for &v in p {
        let slot = masks.iter().position(|m| m.iter().zip(&g.rows[v]).all(|(a, b)| a & b == 0));
        match slot {
            Some(k) => {
                classes[k].push(v);
                masks[k][v / 64] |= 1 << (v % 64);
            }
            None => {
                let mut m = vec![0u64; g.words];
                m[v / 64] |= 1 << (v % 64);
                masks.push(m);
                classes.push(vec![v]);
            }
        }
    }
    let mut order = Vec::with_capacity(p.len());
    let mut colours = Vec::with_capacity(p.len());
    for (k, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            colours.push(k + 1);
        }
    }
    (order, colours)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int_matrix, int_vector};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Bitsets {
        Bitsets::build(n, |a, b| edges.contains(&(a, b)) || edges.contains(&(b, a)))
    }

    #[test]
    fn clique_search_on_small_graphs() {
        // two triangles sharing vertex 2, plus a 4-clique on 4..8
        let g = graph(8, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)]);
        assert_eq!(max_clique(&g), vec![4, 5, 6, 7]);
        assert_eq!(max_clique(&graph(3, &[])).len(), 1);
        assert!(max_clique(&graph(0, &[])).is_empty());
    }

    #[test]
    fn clique_search_matches_brute_force() {
        // pseudo-random graphs on 12 vertices against subset enumeration
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..20 {
            let mut edges = Vec::new();
            for a in 0..12 {
                for b in a + 1..12 {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state.is_multiple_of(2) {
                        edges.push((a, b));
                    }
                }
            }
            let g = graph(12, &edges);
            let brute = (0u32..1 << 12)
                .filter(|s| {
                    (0..12).all(|a| (a + 1..12).all(|b| s >> a & 1 == 0 || s >> b & 1 == 0 || g.has(a, b)))
                })
                .map(u32::count_ones)
                .max()
                .unwrap() as usize;
            assert_eq!(max_clique(&g).len(), brute);
        }
    }

    #[test]
    fn lattice_enumeration() {
        let b = lattice_box(2, 2, 1);
        assert_eq!(b.len(), 25);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn one_dimensional_cliques() {
        let three = ProblemInstance::new(int_matrix(&[&[3]]), int_vector(&[1]), 2).unwrap();
        let rep = max_orthogonal_clique(&three, 2, 10, default_clique_j_max(1, 2, 10)).unwrap();
        assert_eq!(rep.max_clique_size, 2);
        assert!(rep.certified);
        let four = ProblemInstance::new(int_matrix(&[&[4]]), int_vector(&[1]), 2).unwrap();
        let rep = max_orthogonal_clique(&four, 1, 10, default_clique_j_max(1, 1, 10)).unwrap();
        assert!(rep.max_clique_size >= 4);
        let rep = max_orthogonal_clique(&four, 1, 0, 5).unwrap();
        assert_eq!(rep.max_clique_size, 1);
        assert_eq!(
            max_orthogonal_clique_capped(&four, 1, 10, 5, 20),
            Err(Error::TooLarge { count: 21, cap: 20 })
        );
    }
}
