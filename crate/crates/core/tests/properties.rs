//! Randomized invariants.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qhoch_core::algebra::{hs_validate, Algebra, Derivation, HigherDerivation};
use qhoch_core::bivariant::{lbar, q_partial, HomElement};
use qhoch_core::exactnum::{nullity, rank, CyclotomicField, QMatrix, Rational, Scalar, SparseVec};
use qhoch_core::lie::{check_commutes, hopf_act, lie_chain_endo, naturality_check_higher, HopfWord};
use qhoch_core::loday::{functoriality_check, BuildOptions, NChain};
use qhoch_core::ncomplex::homology;
use qhoch_core::simplicial::SimplicialSet;

use common::random_pointed_map;

fn scalar(field: &CyclotomicField, coeffs: &[(i64, i64)]) -> Scalar {
    let rs: Vec<Rational> = coeffs.iter().map(|&(p, q)| Rational::new(p, q)).collect();
    field.from_coeffs(&rs[..rs.len().min(field.degree())])
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 6)
}

fn truncpoly_derivation(alg: &Algebra, g: &[i64]) -> Derivation {
    let f = alg.field();
    let g = SparseVec::from_dense(&g.iter().map(|&c| f.from_int(c)).collect::<Vec<_>>());
    Derivation::truncpoly(alg, &g).unwrap()
}

fn small_matrix(field: &CyclotomicField, rows: usize, cols: usize, entries: &[i64]) -> QMatrix {
    let dense: Vec<Vec<Scalar>> =
        (0..rows).map(|r| (0..cols).map(|c| field.from_int(entries[(r * cols + c) % entries.len()])).collect()).collect();
    QMatrix::from_dense(&dense)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(order in prop::sample::select(vec![3u32, 4, 5, 6, 8, 12]), a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = CyclotomicField::new(order).unwrap();
        let (a, b, c) = (scalar(&f, &a), scalar(&f, &b), scalar(&f, &c));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &b.add(&c)), f.mul(&a, &b).add(&f.mul(&a, &c)));
        if !a.is_zero() {
            let inv = f.inv(&a).unwrap();
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        }
        prop_assert_eq!(f.pow(&f.zeta_pow(1), order), f.one());
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-2i64..=2, 1..20)) {
        let f = CyclotomicField::new(3).unwrap();
        let m = small_matrix(&f, rows, cols, &entries);
        prop_assert_eq!(rank(&m, &f) + nullity(&m, &f), cols);
        prop_assert_eq!(rank(&m, &f), rank(&m.transpose(), &f));
    }

    #[test]
    fn bracket_is_a_lie_bracket(g1 in prop::collection::vec(-3i64..=3, 4), g2 in prop::collection::vec(-3i64..=3, 4), g3 in prop::collection::vec(-3i64..=3, 4)) {
        let f = CyclotomicField::new(2).unwrap();
        let alg = Algebra::truncated_polynomial(&f, 4);
        let (d1, d2, d3) = (truncpoly_derivation(&alg, &g1), truncpoly_derivation(&alg, &g2), truncpoly_derivation(&alg, &g3));
        let b12 = d1.bracket(&d2, &alg).unwrap();
        let b21 = d2.bracket(&d1, &alg).unwrap();
        prop_assert_eq!(b12.matrix().add(b21.matrix(), &f), QMatrix::zeros(4, 4));
        let j1 = d1.bracket(&d2.bracket(&d3, &alg).unwrap(), &alg).unwrap();
        let j2 = d2.bracket(&d3.bracket(&d1, &alg).unwrap(), &alg).unwrap();
        let j3 = d3.bracket(&d1.bracket(&d2, &alg).unwrap(), &alg).unwrap();
        prop_assert!(j1.matrix().add(j2.matrix(), &f).add(j3.matrix(), &f).is_zero());
    }

    #[test]
    fn compose_and_extract_are_inverse(gs in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=3)) {
        let f = CyclotomicField::new(2).unwrap();
        let alg = Algebra::truncated_polynomial(&f, 4);
        let ds: Vec<Derivation> = gs.iter().map(|g| truncpoly_derivation(&alg, g)).collect();
        let k = 4;
        let hs = HigherDerivation::compose(&alg, &ds, k);
        prop_assert!(hs_validate(&alg, hs.maps()).is_ok());
        let back = hs.extract(&alg).unwrap();
        prop_assert_eq!(back.len(), k);
        for (r, d) in back.iter().enumerate() {
            let expected = ds.get(r).map(|d| d.matrix().clone()).unwrap_or_else(|| QMatrix::zeros(4, 4));
            prop_assert_eq!(d.matrix(), &expected);
        }
        // the recursion (M+1) D_{M+1} = Σ d_{r+1} D_{M−r} as a matrix identity
        for m in 0..k {
            let lhs = hs.maps()[m + 1].scale(&f.from_int(m as i64 + 1), &f);
            let mut rhs = QMatrix::zeros(4, 4);
            for r in 0..=m {
                rhs = rhs.add(&back[r].matrix().mul(&hs.maps()[m - r], &f), &f);
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exponential_agrees_with_compose(g in prop::collection::vec(-3i64..=3, 3)) {
        let f = CyclotomicField::new(3).unwrap();
        let alg = Algebra::truncated_polynomial(&f, 3);
        let d = truncpoly_derivation(&alg, &g);
        let a = HigherDerivation::exponential(&alg, &d, 4);
        let b = HigherDerivation::compose(&alg, &[d], 4);
        prop_assert_eq!(a.maps(), b.maps());
    }

    #[test]
    fn loday_functoriality(seed in any::<u64>(), sizes in (1usize..5, 1usize..5, 1usize..5)) {
        let f = CyclotomicField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_pointed_map(&mut rng, sizes.0, sizes.1);
        let psi = random_pointed_map(&mut rng, sizes.1, sizes.2);
        for alg in [Algebra::dual_numbers(&f), Algebra::truncated_polynomial(&f, 3)] {
            prop_assert!(functoriality_check(&alg, &psi, &phi));
        }
    }

    #[test]
    fn higher_naturality(seed in any::<u64>(), src in 1usize..5, dst in 1usize..5, k in 0usize..=3) {
        let f = CyclotomicField::new(2).unwrap();
        let alg = Algebra::truncated_polynomial(&f, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_pointed_map(&mut rng, src, dst);
        let hs = HigherDerivation::exponential(&alg, &truncpoly_derivation(&alg, &[1, 1, 0]), 3);
        prop_assert!(naturality_check_higher(&alg, &hs, k, &phi).unwrap());
    }
}

fn dual_circle(order: u32, t: usize) -> NChain {
    let f = CyclotomicField::new(order).unwrap();
    NChain::build(&Algebra::dual_numbers(&f), &SimplicialSet::circle(t), 1, BuildOptions::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hopf_action_is_multiplicative(w1 in prop::collection::vec(0usize..2, 0..3), w2 in prop::collection::vec(0usize..2, 0..3)) {
        let c = dual_circle(3, 3);
        let alg = c.algebra();
        let f = c.field();
        let alphabet = [Derivation::euler(alg).unwrap(), Derivation::new(alg, QMatrix::from_triplets(2, 2, [(1, 1, f.from_int(2))])).unwrap()];
        let word = |w: &[usize]| w.iter().fold(HopfWord::unit(&c), |acc, &l| acc.mul(&HopfWord::letter(&c, l), &c));
        let (a, b) = (word(&w1), word(&w2));
        let ab = hopf_act(&a.mul(&b, &c), &alphabet, &c).unwrap();
        let composed = hopf_act(&a, &alphabet, &c).unwrap().compose(&hopf_act(&b, &alphabet, &c).unwrap(), &c);
        prop_assert_eq!(ab.levels, composed.levels);
        prop_assert!(check_commutes(&c, &hopf_act(&a, &alphabet, &c).unwrap()).is_ok());
    }

    #[test]
    fn partial_is_linear_and_lowers_degree(degree in -2i64..=2, seed in any::<u64>(), alpha in -4i64..=4) {
        use rand::Rng;
        let c = dual_circle(3, 4);
        let f = c.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random = |_: i64, rows: usize, cols: usize| {
            QMatrix::from_triplets(rows, cols, (0..rows * cols).filter_map(|k| {
                let v: i64 = rng.gen_range(-2..=2);
                (v != 0).then(|| (k / cols, k % cols, f.from_int(v)))
            }))
        };
        let x = HomElement::from_fn(&c, degree, |i| random(i, c.dim(i + degree), c.dim(i)));
        let y = HomElement::from_fn(&c, degree, |i| random(i, c.dim(i + degree), c.dim(i)));
        let a = f.from_int(alpha);
        let lhs = q_partial(&c, &x.axpy(&a, &y, &c));
        let rhs = q_partial(&c, &x).axpy(&a, &q_partial(&c, &y), &c);
        prop_assert_eq!(lhs.degree, degree - 1);
        prop_assert_eq!(lhs, rhs);
        let e = lie_chain_endo(&c, &Derivation::euler(c.algebra()).unwrap()).unwrap();
        prop_assert_eq!(lbar(&c, &e, &x).degree, degree);
    }
}

#[test]
fn truncation_is_monotone() {
    // valid cells do not change when the truncation grows
    for order in [2u32, 3] {
        let small = homology(&dual_circle(order, 4)).unwrap();
        let large = homology(&dual_circle(order, 6)).unwrap();
        for cell in small.cells.iter().filter(|c| c.valid) {
            let other = large.cell(cell.n, cell.i).unwrap();
            assert!(other.valid);
            assert_eq!(cell.dim, other.dim);
        }
    }
}
