use proptest::prelude::*;

use spectral_core::drazin::{check_drazin, drazin_inverse};
use spectral_core::genlab::{conjugate, generate, GenSpec, Template};
use spectral_core::intertwine::compare_sequences;
use spectral_core::invariants::{profile, rational_eigenvalues, PowerChains};
use spectral_core::ratmat::{rat, Mat, Rat, Subspace};

fn int_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        Mat::new(rows, cols, v.into_iter().map(rat).collect()).unwrap()
    })
}

/// Square matrices biased towards singular ones: `X Y` with inner dimension
/// at most `n`.
fn square() -> impl Strategy<Value = Mat> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, r)| (int_mat(n, r), int_mat(r, n), int_mat(n, n), any::<bool>()))
        .prop_map(|(x, y, full, low)| if low { &x * &y } else { full })
}

fn rect() -> impl Strategy<Value = Mat> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| int_mat(r, c))
}

fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), 0..=n, 0..=n))
        .prop_flat_map(|(n, a, b)| (Just(n), int_mat(a, n), int_mat(b, n)))
        .prop_map(|(n, u, w)| (Subspace::span(n, u.to_rows()), Subspace::span(n, w.to_rows())))
}

fn unit_triangular(n: usize) -> impl Strategy<Value = (Mat, Mat)> {
    (int_mat(n, n), int_mat(n, n)).prop_map(move |(l, u)| {
        let mut lo = Mat::identity(n);
        let mut up = Mat::identity(n);
        for i in 0..n {
            for j in 0..i {
                lo.set(i, j, l.get(i, j).clone());
                up.set(j, i, u.get(j, i).clone());
            }
        }
        let m = &lo * &up;
        let inv = m.inverse().unwrap();
        (m, inv)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_nullity(m in rect()) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.image().dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in rect()) {
        for v in m.kernel().basis() {
            prop_assert!(m.apply(v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn grassmann_formula((u, w) in subspace_pair()) {
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(u.contains(&cap).unwrap() && w.contains(&cap).unwrap());
        prop_assert!(sum.contains(&u).unwrap() && sum.contains(&w).unwrap());
        prop_assert_eq!(u.annihilator().dim(), u.codim());
    }

    #[test]
    fn preimage_is_the_largest_space_mapped_inside(m in square(), seed in any::<u64>()) {
        let n = m.rows();
        let rows = (seed % (n as u64 + 1)) as usize;
        let w = Subspace::span(n, (0..rows).map(|i| m.column((i + seed as usize) % n)).collect());
        let pre = Subspace::preimage(&m, &w).unwrap();
        prop_assert!(w.contains(&pre.map(&m).unwrap()).unwrap());
        prop_assert!(pre.contains(&m.kernel()).unwrap());
        // dim M^{-1}(W) = dim N(M) + dim (W ∩ R(M)).
        prop_assert_eq!(pre.dim(), m.kernel().dim() + w.intersect(&m.image()).unwrap().dim());
    }

    #[test]
    fn cayley_hamilton(m in square()) {
        let p = m.charpoly().unwrap();
        prop_assert!(p.eval_mat(&m).unwrap().is_zero());
        prop_assert_eq!(p.coeffs()[0].clone() * rat(if m.rows() % 2 == 0 { 1 } else { -1 }), m.determinant().unwrap());
    }

    #[test]
    fn power_chains_are_monotone(m in square()) {
        let ch = PowerChains::new(&m).unwrap();
        for k in 0..=m.rows() {
            prop_assert!(ch.kernel(k + 1).contains(ch.kernel(k)).unwrap());
            prop_assert!(ch.image(k).contains(ch.image(k + 1)).unwrap());
            prop_assert_eq!(ch.kernel(k).dim() + ch.image(k).dim(), m.rows());
        }
    }

    #[test]
    fn ascent_equals_descent(m in square()) {
        let p = profile(&m).unwrap();
        prop_assert_eq!(p.asc, p.dsc);
        prop_assert_eq!(p.asc_e, p.dsc_e);
        prop_assert_eq!(p.hyper_kernel.dim() + p.hyper_range.dim(), m.rows());
        prop_assert!(p.hyper_kernel.intersect(&p.hyper_range).unwrap().is_zero());
    }

    #[test]
    fn sequence_forms_agree(m in square()) {
        let ch = PowerChains::new(&m).unwrap();
        for n in 0..=m.rows() + 1 {
            prop_assert_eq!(ch.c(n), ch.c_by_range_chain(n), "c_{}", n);
            prop_assert_eq!(ch.cp(n), ch.cp_by_kernel_chain(n), "c'_{}", n);
            prop_assert_eq!(ch.k(n), ch.k_by_sum_chain(n), "k_{}", n);
        }
    }

    #[test]
    fn k_is_the_drop_of_c_and_cp(m in square()) {
        let ch = PowerChains::new(&m).unwrap();
        for n in 0..=m.rows() {
            prop_assert_eq!(ch.k(n) + ch.c(n + 1), ch.c(n));
            prop_assert_eq!(ch.k(n) + ch.cp(n + 1), ch.cp(n));
        }
    }

    #[test]
    fn multiplicity_is_sum_of_cp(m in square()) {
        for (lambda, mult) in rational_eigenvalues(&m).unwrap() {
            let p = profile(&m.shift(&lambda)).unwrap();
            prop_assert_eq!(p.cp_total, mult);
            prop_assert_eq!(p.hyper_kernel.dim(), mult);
        }
    }

    #[test]
    fn drazin_identities_and_oracle(m in square()) {
        let d = drazin_inverse(&m).unwrap();
        prop_assert!(check_drazin(&m, &d.inverse).unwrap().holds());
        // Independent formula: T^D = T^k X with T^{2k+1} X = T^k, k the index.
        let tk = m.pow(d.index);
        let x = m.pow(2 * d.index + 1).solve(&tk).expect("R(T^k) = R(T^{2k+1})");
        prop_assert_eq!(&tk * &x, d.inverse.clone());
        prop_assert_eq!(d.index, profile(&m).unwrap().asc);
    }

    #[test]
    fn drazin_of_powers(m in square()) {
        let s = drazin_inverse(&m).unwrap().inverse;
        for k in 1..=3 {
            prop_assert_eq!(drazin_inverse(&m.pow(k)).unwrap().inverse, s.pow(k));
        }
    }

    #[test]
    fn drazin_commutes_with_similarity(
        (m, (u, ui)) in (1usize..=4).prop_flat_map(|n| (int_mat(n, n), unit_triangular(n)))
    ) {
        let conj = &(&u * &m) * &ui;
        let expected = &(&u * &drazin_inverse(&m).unwrap().inverse) * &ui;
        prop_assert_eq!(drazin_inverse(&conj).unwrap().inverse, expected);
    }

    #[test]
    fn solve_returns_a_solution(m in rect(), seed in any::<u64>()) {
        let x0 = Mat::from_columns(m.cols(), &[(0..m.cols()).map(|i| rat(((seed >> i) & 3) as i64 - 1)).collect::<Vec<Rat>>()]);
        let rhs = &m * &x0;
        let x = m.solve(&rhs).unwrap();
        prop_assert_eq!(&m * &x, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugation_preserves_triple_invariants(
        seed in any::<u64>(),
        (dx, dy) in (2usize..=4, 2usize..=4),
        lam in prop::sample::select(vec![1i64, -1, 2]),
    ) {
        let t = generate(&GenSpec::new(Template::AbaEqAca, dx, seed).with_dim_y(dy)).unwrap();
        let u = unit(dx, seed);
        let v = unit(dy, seed.rotate_left(7));
        let c = conjugate(&t, (&u.0, &u.1), (&v.0, &v.1)).unwrap();
        prop_assert!(c.condition_holds());
        let before = compare_sequences(&t, &rat(lam), dx.max(dy)).unwrap();
        let after = compare_sequences(&c, &rat(lam), dx.max(dy)).unwrap();
        prop_assert_eq!(before.rows, after.rows);
    }
}

fn unit(n: usize, seed: u64) -> (Mat, Mat) {
    let mut m = Mat::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, rat(((seed >> ((i * n + j) % 60)) & 3) as i64 - 1));
        }
    }
    let inv = m.inverse().unwrap();
    (m, inv)
}
