use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use selfaffine::conjugation::{block_decompose, companion_conjugate, Reduction};
use selfaffine::fourier::{
    certify_orthogonal, construct_witness, mask, mask_is_zero_exact, mu_hat, orthogonal_family,
    verify_witness, FourierEvaluator,
};
use selfaffine::hadamard::{candidate_spectrum, construct_dual_digits, verify_hadamard};
use selfaffine::linalg::{
    annihilates, char_poly, det, hnf_unimodular, inverse, inverse_unimodular, is_expanding, krylov,
    Matrix,
};
use selfaffine::{classify, Certificate, IntMatrix, IntVector, ProblemInstance, Verdict};

fn to_matrix(n: usize, entries: &[i64]) -> IntMatrix {
    Matrix::from_fn(n, n, |i, j| BigInt::from(entries[i * n + j]))
}

fn square(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |e| to_matrix(n, &e))
    })
}

fn expanding(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    square(max_n, bound).prop_filter("expanding", is_expanding)
}

fn vector(n: usize, bound: i64) -> impl Strategy<Value = IntVector> {
    prop::collection::vec(-bound..=bound, n)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn instance(max_n: usize, bound: i64, max_q: u64) -> impl Strategy<Value = ProblemInstance> {
    expanding(max_n, bound).prop_flat_map(move |m| {
        let n = m.rows();
        (Just(m), vector(n, 3), 2..=max_q)
            .prop_map(|(m, v, q)| ProblemInstance::new(m, v, q).expect("valid instance"))
    })
}

/// Product of elementary row operations: det is ±1 by construction.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..3 * n + 1).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, c, flip) in ops {
            if i != j {
                for k in 0..n {
                    let add = &u[(j, k)] * BigInt::from(c);
                    u[(i, k)] += add;
                }
            } else if flip {
                for k in 0..n {
                    u[(i, k)] = -u[(i, k)].clone();
                }
            }
        }
        u
    })
}

/// Rank by Gauss–Jordan over the rationals, independent of the fraction-free
/// routine under test.
fn rational_rank(rows: &[IntVector]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, rank);
        let pivot = a[rank][c].clone();
        let prow: Vec<BigRational> = a[rank].iter().map(|x| x / &pivot).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        a[rank] = prow;
        rank += 1;
    }
    rank
}

fn conjugate(inst: &ProblemInstance, u: &IntMatrix) -> ProblemInstance {
    let u_inv = inverse_unimodular(u).unwrap();
    let m = &(u * inst.m()) * &u_inv;
    ProblemInstance::new(m, u.mul_vec(inst.v()), inst.q()).unwrap()
}

fn rationals(n: usize, den: i64) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-200i64..=200, 1..=den), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect())
}

/// `||H* H - q I||_max` in floating point.
fn numeric_unitarity_defect(m: &IntMatrix, digits: &[IntVector], duals: &[IntVector]) -> f64 {
    let m_inv = inverse(m).unwrap();
    let q = digits.len();
    let h: Vec<Vec<Complex64>> = digits
        .iter()
        .map(|d| {
            let x = m_inv.mul_vec(&d.iter().map(|e| BigRational::from_integer(e.clone())).collect::<Vec<_>>());
            duals
                .iter()
                .map(|s| {
                    let t: BigRational = x.iter().zip(s).map(|(a, b)| a * b).sum();
                    let t = (&t - t.floor()).to_f64().unwrap();
                    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t)
                })
                .collect()
        })
        .collect();
    let mut worst: f64 = 0.0;
    for a in 0..q {
        for b in 0..q {
            let s: Complex64 = (0..q).map(|k| h[k][a].conj() * h[k][b]).sum();
            let target = if a == b { q as f64 } else { 0.0 };
            worst = worst.max((s - target).norm());
        }
    }
    worst
}

/// `U^{-1} [[M_1, C], [0, M_2]] U` with `v = U^{-1} (x, 0)`, so the Krylov
/// rank is at most `r`.
fn block_instance() -> impl Strategy<Value = (ProblemInstance, usize)> {
    (1usize..=2, 1usize..=2)
        .prop_flat_map(|(r, k)| {
            let n = r + k;
            (
                Just((r, n)),
                prop::collection::vec(-6i64..=6, n * n),
                vector(r, 3),
                unimodular(n),
                2u64..=8,
            )
        })
        .prop_filter_map("expanding", |((r, n), e, x, u, q)| {
            let t = Matrix::from_fn(n, n, |i, j| if i >= r && j < r { BigInt::zero() } else { BigInt::from(e[i * n + j]) });
            let u_inv = inverse_unimodular(&u).ok()?;
            let m = &(&u_inv * &t) * &u;
            let mut head = x;
            head.resize(n, BigInt::zero());
            let v = u_inv.mul_vec(&head);
            ProblemInstance::new(m, v, q).ok().map(|i| (i, r))
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn cayley_hamilton_and_constant_term(m in square(6, 9)) {
        let p = char_poly(&m);
        prop_assert!(p.is_monic());
        prop_assert!(annihilates(&p, &m));
        let n = m.rows();
        let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(p.coeff(0), sign * det(&m));
    }

    #[test]
    fn krylov_rank_matches_rational_elimination(m in square(5, 4), seed in prop::collection::vec(-3i64..=3, 5)) {
        let n = m.rows();
        let v: IntVector = seed[..n].iter().map(|&x| BigInt::from(x)).collect();
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let k = krylov(&m, &v).unwrap();
        prop_assert_eq!(k.rank, rational_rank(&k.vectors));
    }

    #[test]
    fn inverse_is_exact(m in square(5, 9)) {
        prop_assume!(!det(&m).is_zero());
        let inv = inverse(&m).unwrap();
        prop_assert!((&inv * &m.to_rational()).is_identity());
    }

    #[test]
    fn echelon_transform_is_unimodular(m in square(5, 9), cols in 1usize..=3) {
        let n = m.rows();
        let a = m.block(0, n, 0, cols.min(n));
        prop_assume!(selfaffine::linalg::rank(&a) == a.cols());
        let e = hnf_unimodular(&a).unwrap();
        prop_assert!(det(&e.transform).abs().is_one());
        prop_assert_eq!(&(&e.transform * &a), &e.echelon);
        for j in 0..a.cols() {
            prop_assert!(!e.echelon[(j, j)].is_zero());
            for i in j + 1..n {
                prop_assert!(e.echelon[(i, j)].is_zero());
            }
        }
    }

    #[test]
    fn conjugations_preserve_structure(inst in instance(4, 6, 8)) {
        let (m, v) = (inst.m(), inst.v());
        let k = krylov(m, v).unwrap();
        if k.rank == m.rows() {
            let c = companion_conjugate(m, v).unwrap();
            prop_assert_eq!(char_poly(&c.m_tilde), char_poly(m));
        } else {
            let d = block_decompose(m, v).unwrap();
            prop_assert_eq!(d.r, k.rank);
            prop_assert_eq!(&(&d.b_inv * &d.assemble()) * &d.b, m.clone());
            prop_assert_eq!(det(m), det(&d.m1) * det(&d.m2));
        }
        let red = Reduction::new(m, v).unwrap();
        prop_assert!(red.frame.intertwines(m, v, &red.companion.m_tilde, &red.companion.v_tilde));
    }

    #[test]
    fn block_instances_reduce_consistently((inst, r) in block_instance()) {
        let (m, v) = (inst.m(), inst.v());
        let rank = krylov(m, v).unwrap().rank;
        prop_assert!(rank <= r);
        if rank < inst.dim() {
            let d = block_decompose(m, v).unwrap();
            prop_assert_eq!(d.r, rank);
            prop_assert!(d.assemble().block(rank, inst.dim(), 0, rank).is_zero());
            prop_assert_eq!(&(&d.b_inv * &d.assemble()) * &d.b, m.clone());
            prop_assert_eq!(det(m), det(&d.m1) * det(&d.m2));
            prop_assert_eq!(d.b.mul_vec(v)[rank..].iter().filter(|x| !x.is_zero()).count(), 0);
        }
        let red = Reduction::new(m, v).unwrap();
        prop_assert!(red.frame.intertwines(m, v, &red.companion.m_tilde, &red.companion.v_tilde));
        let c = classify(&inst).unwrap();
        prop_assert!(c.certificate.verify(&inst));
        prop_assert_eq!(c.verdict.has_infinite_orthogonals(), c.conditions.gcd > BigInt::one());
    }

    #[test]
    fn certification_commutes_with_companion_frame(
        inst in instance(3, 5, 6),
        a in rationals(3, 6),
        b in rationals(3, 6),
    ) {
        let n = inst.dim();
        prop_assume!(krylov(inst.m(), inst.v()).unwrap().rank == n);
        let c = companion_conjugate(inst.m(), inst.v()).unwrap();
        let conj = ProblemInstance::new(c.m_tilde.clone(), c.v_tilde.clone(), inst.q()).unwrap();
        let bt = c.b.transpose().to_rational();
        let (a, b) = (a[..n].to_vec(), b[..n].to_vec());
        let lhs = certify_orthogonal(&inst, &a, &b, 12).map(|c| c.j);
        let rhs = certify_orthogonal(&conj, &bt.mul_vec(&a), &bt.mul_vec(&b), 12).map(|c| c.j);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn verdict_is_invariant_under_unimodular_change(
        (inst, u) in instance(4, 6, 8).prop_flat_map(|i| { let n = i.dim(); (Just(i), unimodular(n)) })
    ) {
        let before = classify(&inst).unwrap();
        let other = conjugate(&inst, &u);
        let after = classify(&other).unwrap();
        prop_assert_eq!(before.verdict, after.verdict);
        prop_assert_eq!(char_poly(inst.m()), char_poly(other.m()));
        prop_assert!(before.certificate.verify(&inst));
        prop_assert!(after.certificate.verify(&other));
    }

    #[test]
    fn witnesses_exist_whenever_gcd_exceeds_one(inst in instance(3, 6, 8)) {
        let c = classify(&inst).unwrap();
        if c.conditions.gcd > BigInt::one() {
            let w = construct_witness(&inst).unwrap();
            prop_assert!(verify_witness(&inst, &w));
        }
        prop_assert_eq!(c.verdict.has_infinite_orthogonals(), c.conditions.gcd > BigInt::one());
    }

    #[test]
    fn mask_zero_agrees_with_numeric(inst in instance(3, 5, 8), xi in rationals(3, 100)) {
        let xi = xi[..inst.dim()].to_vec();
        prop_assert_eq!(mask_is_zero_exact(&inst, &xi), mask(&inst, &xi).norm() < 1e-12);
    }

    #[test]
    fn transform_is_bounded_and_zero_where_certified(inst in instance(2, 5, 5), xi in rationals(2, 8)) {
        let xi = xi[..inst.dim()].to_vec();
        let z = mu_hat(&inst, &xi, 1e-9).unwrap();
        prop_assert!(z.norm() <= 1.0 + z.error_bound);
        let zero = vec![BigRational::zero(); inst.dim()];
        let cert = certify_orthogonal(&inst, &xi, &zero, z.factors.max(1));
        if let Some(j) = z.zero_factor {
            prop_assert_eq!(z.norm(), 0.0);
            prop_assert_eq!(cert.map(|c| c.j), Some(j));
        } else {
            prop_assert!(cert.is_none());
        }
    }

    #[test]
    fn exact_and_numeric_unitarity_agree(
        n in 1usize..=2,
        m in prop::collection::vec(-6i64..=6, 4),
        q in 2usize..=8,
        raw in prop::collection::vec(prop::collection::vec(-6i64..=6, 2), 16),
    ) {
        let m = to_matrix(n, &m);
        prop_assume!(!det(&m).is_zero());
        let vecs: Vec<IntVector> = raw.iter().map(|r| r[..n].iter().map(|&x| BigInt::from(x)).collect()).collect();
        let (digits, duals) = (&vecs[..q], &vecs[8..8 + q]);
        let exact = verify_hadamard(&m, digits, duals);
        prop_assert_eq!(exact, numeric_unitarity_defect(&m, digits, duals) < 1e-10);
    }

    #[test]
    fn exact_and_numeric_unitarity_agree_on_arithmetic_progressions(
        b in prop::sample::select(vec![-12i64, -9, -8, -6, -4, -3, -2, 2, 3, 4, 5, 6, 8, 9, 10, 12]),
        q in 2u64..=8,
        step in -12i64..=12,
    ) {
        // phases k l step / b form a DFT pattern iff step / b has reduced denominator q
        let m = to_matrix(1, &[b]);
        let digits: Vec<IntVector> = (0..q as i64).map(|k| vec![BigInt::from(k)]).collect();
        let duals: Vec<IntVector> = (0..q as i64).map(|k| vec![BigInt::from(k * step)]).collect();
        let den = b.unsigned_abs() / num_integer::gcd(step.unsigned_abs(), b.unsigned_abs());
        let exact = verify_hadamard(&m, &digits, &duals);
        prop_assert_eq!(exact, den == q);
        prop_assert_eq!(exact, numeric_unitarity_defect(&m, &digits, &duals) < 1e-10);
    }

    #[test]
    fn hadamard_triples_survive_unimodular_change(
        (inst, u) in instance(3, 6, 6).prop_flat_map(|i| { let n = i.dim(); (Just(i), unimodular(n)) })
    ) {
        let c = classify(&inst).unwrap();
        let Certificate::Hadamard(h) = c.certificate else { return Ok(()) };
        let t = &h.triple;
        let u = Matrix::from_fn(t.m.rows(), t.m.rows(), |i, j| u[(i % u.rows(), j % u.rows())].clone());
        prop_assume!(det(&u).abs().is_one());
        let u_inv = inverse_unimodular(&u).unwrap();
        let m = &(&u_inv * &t.m) * &u;
        let digits: Vec<IntVector> = t.digits.iter().map(|d| u_inv.mul_vec(d)).collect();
        let duals: Vec<IntVector> = t.duals.iter().map(|s| u.transpose().mul_vec(s)).collect();
        prop_assert!(verify_hadamard(&t.m, &t.digits, &t.duals));
        prop_assert!(verify_hadamard(&m, &digits, &duals));
    }

    #[test]
    fn candidate_spectra_are_orthogonal(inst in instance(3, 6, 6), depth in 1usize..=3) {
        let c = classify(&inst).unwrap();
        prop_assume!(c.verdict == Verdict::Spectral);
        prop_assume!((inst.q() as usize).pow(depth as u32) <= 256);
        let red = &c.reduction;
        let t = construct_dual_digits(&red.companion, inst.q()).unwrap().with_frame(red.frame.clone());
        let spec = candidate_spectrum(&t, depth).unwrap();
        let cert = FourierEvaluator::new(&inst).unwrap().certify_set(&spec.frequencies, depth);
        prop_assert!(cert.all_certified());
        prop_assert!(cert.max_j() <= depth);
    }

    #[test]
    fn witness_families_are_orthogonal(inst in instance(2, 5, 6)) {
        let c = classify(&inst).unwrap();
        prop_assume!(c.conditions.gcd > BigInt::one());
        let w = construct_witness(&inst).unwrap();
        let fam = orthogonal_family(inst.m(), &w, 20);
        let cert = FourierEvaluator::new(&inst).unwrap().certify_set(&fam, 20 * w.ell);
        prop_assert!(cert.all_certified());
    }
}

#[test]
fn eigenvector_instances_follow_the_eigenvalue() {
    // M e_1 = l e_1 for upper triangular M
    for l in [-6i64, -4, -3, 2, 3, 4, 6, 8, 9, 12] {
        for q in 2..=12u64 {
            let m = to_matrix(2, &[l, 1, 0, 5]);
            let inst = ProblemInstance::new(m, vec![1.into(), 0.into()], q).unwrap();
            let c = classify(&inst).unwrap();
            let lq = l.unsigned_abs();
            assert_eq!(c.verdict == Verdict::Spectral, lq % q == 0, "l={l} q={q}");
            let g = num_integer::gcd(lq, q);
            assert_eq!(c.verdict.has_infinite_orthogonals(), g > 1, "l={l} q={q}");
            assert!(c.certificate.verify(&inst));
        }
    }
}
