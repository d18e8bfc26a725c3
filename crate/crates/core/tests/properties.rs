mod common;

use std::collections::HashMap;

use proptest::prelude::*;

use ssm_core::a2pp::d_determinant;
use ssm_core::cellgeom::{phi_restriction, ColumnSet};
use ssm_core::ringcore::{q, Monomial, MultiPoly, TruncatedSeries, Var};
use ssm_core::schurbasis::{
    apply_rho, residue_at_infinity, sss_expand, straighten, straighten_by_rules, symmetric_to_schur, z, DenFactor,
    Partition, RationalSeriesExpr, SchurSeries,
};

const VARS: [Var; 4] = [Var::Alpha(1), Var::Alpha(2), Var::Beta(1), Var::Beta(2)];

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 4), -4i64..5), 0..5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(e, c)| {
            (Monomial::from_pairs(VARS.iter().copied().zip(e)), q(c))
        }))
    })
}

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_composes(p in poly(), s1 in poly(), s2 in poly()) {
        let first: HashMap<Var, MultiPoly> = HashMap::from([(Var::Alpha(1), s1)]);
        let second: HashMap<Var, MultiPoly> = HashMap::from([(Var::Beta(2), s2.clone())]);
        let composed: HashMap<Var, MultiPoly> = HashMap::from([
            (Var::Alpha(1), first[&Var::Alpha(1)].substitute(&second)),
            (Var::Beta(2), s2),
        ]);
        prop_assert_eq!(p.substitute(&first).substitute(&second), p.substitute(&composed));
    }

    #[test]
    fn restriction_is_a_ring_map(a in poly(), b in poly(), j1 in 1usize..4, j2 in 1usize..4) {
        prop_assume!(j1 != j2);
        let set = ColumnSet::new(2, 3, vec![j1, j2]).unwrap();
        prop_assert_eq!(
            phi_restriction(&(&a * &b), &set),
            &phi_restriction(&a, &set) * &phi_restriction(&b, &set)
        );
        prop_assert_eq!(
            phi_restriction(&(&a + &b), &set),
            &phi_restriction(&a, &set) + &phi_restriction(&b, &set)
        );
    }

    #[test]
    fn division_by_one_plus_inverts_multiplication(a in poly(), c1 in -2i64..3, c2 in -2i64..3) {
        prop_assume!(c1 != 0 || c2 != 0);
        let w = MultiPoly::linear(0, &[(Var::Alpha(1), c1), (Var::Beta(1), c2)]);
        let s = TruncatedSeries::new(&a, 6).div_one_plus(&w).mul_poly(&(&MultiPoly::one() + &w));
        prop_assert_eq!(s, TruncatedSeries::new(&a, 6));
    }

    #[test]
    fn straightening_is_order_independent(v in prop::collection::vec(-1i64..6, 0..5), seed in any::<u64>()) {
        let mut state = seed;
        let pick = |options: &[usize]| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % options.len()
        };
        prop_assert_eq!(straighten_by_rules(&v, pick), straighten(&v));
    }

    #[test]
    fn straightening_agrees_with_residues(
        exps in prop::collection::vec(0u32..4, 3),
        kappa in -1i64..2,
    ) {
        let num = MultiPoly::from_terms([(
            Monomial::from_pairs((1..=3).map(|i| (Var::Z(i as u16), exps[i - 1]))),
            q(1),
        )]);
        let dens = if kappa == 0 {
            vec![]
        } else {
            vec![(DenFactor::new(vec![(1, 1), (3, kappa)]).unwrap(), 1)]
        };
        let e = RationalSeriesExpr::new(3, &num * &(&MultiPoly::one() + &z(2)), dens).unwrap();
        prop_assert_eq!(sss_expand(&e, 7).unwrap(), residue_at_infinity(&e, 7).unwrap());
    }

    #[test]
    fn schur_basis_round_trip(terms in prop::collection::vec((partition(3, 2), -3i64..4), 0..4)) {
        let mut s = SchurSeries::new(6);
        for (p, c) in terms {
            s.add_term(p, q(c));
        }
        let poly = apply_rho(&s, 2, 0, 6);
        prop_assert_eq!(symmetric_to_schur(poly.poly(), 2, 6).unwrap(), s);
    }

    #[test]
    fn d_determinant_counts_paths(mu in partition(2, 3), nu in partition(2, 3), l in 0usize..2) {
        let d = d_determinant(&mu, &nu, 3, l).unwrap();
        prop_assert_eq!(d, common::lgv_count(&mu, &nu, 3, l).into());
    }
}
