use super::*;
use crate::Rational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn std_params(n: usize) -> ParamSet<Rational> {
    ParamSet::standard(r(1, 3), r(1, 5), r(2, 7), n)
}

#[test]
fn golden_values() {
    assert_eq!(
        hahn_q(1, 1, &HahnParams::new(r(1, 2), r(1, 2), 2)).unwrap(),
        r(1, 2)
    );
    assert_eq!(rational_u(1, 1, &r(1, 1), &r(1, 2), 2).unwrap(), r(3, 1));
    let p = HahnParams::new(r(1, 3), r(2, 7), 5);
    for j in 0..=5 {
        assert!(hahn_q(0, j, &p).unwrap().is_one());
        assert!(hahn_q(j, 0, &p).unwrap().is_one());
        assert!(rational_u(0, j, &r(1, 3), &r(1, 5), 5).unwrap().is_one());
        assert!(rational_u(j, 0, &r(1, 3), &r(1, 5), 5).unwrap().is_one());
    }
}

#[test]
fn q_matches_a_direct_two_term_sum() {
    // Q_1(l) = 1 - l (2a) / ((a+rho) N)
    let (a, rho, n) = (r(2, 5), r(-3, 11), 4usize);
    let p = HahnParams::new(a.clone(), rho.clone(), n);
    for l in 0..=n {
        let expected = Rational::one()
            - r(l as i64, 1) * (a.clone() + a.clone())
                / ((a.clone() + rho.clone()) * r(n as i64, 1));
        assert_eq!(hahn_q(1, l, &p).unwrap(), expected);
    }
}

#[test]
fn out_of_range_index_is_refused() {
    assert!(hahn_q(3, 0, &HahnParams::new(r(1, 3), r(2, 7), 2)).is_err());
}

#[test]
fn vanishing_lower_parameter_is_reported() {
    // a - c - l = 0 at l = 1 for a = 3/2, c = 1/2
    let err = rational_u(1, 1, &r(3, 2), &r(1, 2), 2).unwrap_err();
    assert!(matches!(err, Error::DenominatorVanishes(_)));
}

#[test]
fn connection_formulas_match_the_oracle() {
    for n in 0..=6 {
        let m = Model::new(&std_params(n)).unwrap();
        for kind in ConnectionKind::ALL {
            connection_matrix(kind, &m).unwrap_or_else(|e| panic!("{} N={n}: {e}", kind.label()));
        }
    }
}

#[test]
fn a_to_s_is_lower_triangular_and_s_to_b_unitriangular() {
    let p = std_params(4);
    let g = closed_connection(ConnectionKind::AToS, &p).unwrap();
    let h = closed_connection(ConnectionKind::SToB, &p).unwrap();
    for i in 0..5 {
        assert!(h[(i, i)].is_one());
        for k in i + 1..5 {
            assert!(g[(i, k)].is_zero());
        }
    }
}

#[test]
fn tampered_connection_is_caught() {
    let m = Model::new(&std_params(1)).unwrap();
    let mut g = closed_connection(ConnectionKind::AToB, m.params()).unwrap();
    let solved = oracle_connection(ConnectionKind::AToB, &m).unwrap();
    assert_eq!(g, solved);
    g[(0, 1)] = g[(0, 1)].clone() + Rational::one();
    assert_ne!(g, solved);
}

#[test]
fn orthogonality_examples() {
    let p = HahnParams::new(r(1, 3), r(2, 7), 3);
    assert_eq!(
        orthogonality_check(&p, 0, 1).unwrap(),
        (Rational::zero(), Rational::zero())
    );
    let (lhs, _) = orthogonality_check(&p, 0, 0).unwrap();
    let direct = (0..=3usize).fold(Rational::zero(), |acc, l| {
        acc + gen_binomial(&(r(1, 3) + r(2, 7) - Rational::one() + r(l as i64, 1)), l)
            * gen_binomial(&(r(1, 3) + r(2, 1) - r(2, 7) - r(l as i64, 1)), 3 - l)
    });
    assert_eq!(lhs, direct);
    orthogonality_check(&HahnParams::new(r(1, 3), r(2, 7), 1), 1, 1).unwrap();
}

#[test]
fn biorthogonality_examples() {
    let data = biorthogonality_check(&r(1, 3), &r(1, 5), 4).unwrap();
    let total = data
        .weights
        .iter()
        .fold(Rational::zero(), |acc, w| acc + w.clone());
    assert_eq!(total, data.norms[0]);
}

#[test]
fn bispectral_identities_hold_and_detect_tampering() {
    for n in [0, 1, 4] {
        let p = std_params(n);
        bispectral_consistency(&p, BispectralSide::Polynomial).unwrap();
        bispectral_consistency(&p, BispectralSide::Rational).unwrap();
    }
    let p = std_params(4);
    let mut g = closed_connection(ConnectionKind::AToB, &p).unwrap();
    g[(2, 1)] = g[(2, 1)].clone() + r(1, 9);
    let err = bispectral_with(&p, BispectralSide::Rational, &g).unwrap_err();
    assert!(matches!(err, Error::IdentityFailure { .. }));
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, prop::sample::select(vec![3i64, 5, 7, 11, 13])).prop_map(|(p, q)| r(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_forms_and_identities(a in rational(), c in rational(), rho in rational(), n in 0usize..=5) {
        let p = ParamSet::standard(a.clone(), c.clone(), rho.clone(), n);
        prop_assume!(p.is_fully_generic());
        let m = Model::new(&p).unwrap();
        for kind in ConnectionKind::ALL {
            prop_assert!(connection_matrix(kind, &m).is_ok(), "{}", kind.label());
        }
        let hp = HahnParams::from_params(&p).unwrap();
        for i in 0..=n {
            for j in 0..=n {
                prop_assert!(orthogonality_check(&hp, i, j).is_ok());
            }
        }
        prop_assert!(biorthogonality_check(&a, &c, n).is_ok());
        prop_assert!(bispectral_consistency(&p, BispectralSide::Polynomial).is_ok());
        prop_assert!(bispectral_consistency(&p, BispectralSide::Rational).is_ok());
    }

    #[test]
    fn q_is_symmetric_in_k_and_l_slots(a in rational(), rho in rational(), k in 0usize..=4, l in 0usize..=4) {
        let hp = HahnParams::new(a.clone(), rho.clone(), 4);
        let swapped = Hyp3F2Spec::new(
            [-r(l as i64, 1), -r(k as i64, 1), r(k as i64, 1) + a.clone() + a.clone() - Rational::one()],
            [a.clone() + rho.clone(), r(-4, 1)],
            k.min(l),
        ).unwrap();
        match (hahn_q(k, l, &hp), hyp3f2_unit(&swapped)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (x, y) => prop_assert_eq!(x.is_err(), y.is_err()),
        }
    }

    #[test]
    fn cleared_u_is_a_low_degree_polynomial_in_l(a in rational(), c in rational(), k in 0usize..=3) {
        // (a-c-l)_k U_k(l) is a polynomial of degree <= 2k in l; sample it
        // at 2k+2 integer points (N large enough) and difference 2k+1 times.
        let n = 2 * k + 1;
        let mut values = Vec::new();
        for l in 0..=n {
            let lower = a.clone() - c.clone() - r(l as i64, 1);
            let Ok(u) = rational_u(k, l, &a, &c, n) else { return Ok(()); };
            values.push(pochhammer(&lower, k) * u);
        }
        for _ in 0..=2 * k {
            values = values.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
        }
        prop_assert!(values.iter().all(|v| v.is_zero()));
    }
}
