use super::*;
use crate::polyspace::{bracket, BracketMode, Poly, Workspace};
use crate::Rational;
use proptest::prelude::*;

fn q(p: i64, d: i64) -> Rational {
    Rational::ratio(p, d)
}

fn standard() -> ParamSet<Rational> {
    ParamSet::standard(q(1, 3), q(1, 5), q(2, 7), 4)
}

fn poly(c: &[Rational]) -> Poly<Rational> {
    Poly::from_coeffs(c.to_vec())
}

#[test]
fn standard_relations_vanish() {
    let (ops, cv) = realize(&standard()).unwrap();
    for family in [
        RelationFamily::Meta,
        RelationFamily::Trio,
        RelationFamily::TrioDerived,
        RelationFamily::HahnEmbed,
    ] {
        let set = relation_residuals(&ops, &cv, family).unwrap();
        for r in &set.residuals {
            assert!(
                r.is_zero(),
                "{}: {} = {:?}",
                family.label(),
                r.name,
                r.matrix.first_nonzero()
            );
        }
    }
    // every meta realization also satisfies the V, Z form of the relations
    assert!(relation_residuals(&ops, &cv, RelationFamily::Jacobi)
        .unwrap()
        .passed());
}

#[test]
fn action_on_low_monomials() {
    let (ops, _) = realize(&standard()).unwrap();
    let one = Poly::constant(q(1, 1), 4);
    assert_eq!(ops.z.apply(&one).unwrap(), Poly::constant(q(-1, 1), 4));
    let x = Poly::monomial(1, 4).unwrap();
    assert_eq!(
        ops.z.apply(&x).unwrap(),
        poly(&[q(1, 1), q(-1, 1), q(0, 1), q(0, 1), q(0, 1)])
    );
    assert_eq!(
        ops.vt().unwrap().apply(&one).unwrap(),
        Poly::constant(q(1, 5), 4)
    );
    assert_eq!(&ops.z * ops.zinv().unwrap(), Operator::identity(4));
    assert_eq!(ops.zinv().unwrap() * &ops.z, Operator::identity(4));
}

#[test]
fn commutator_of_z_and_x() {
    let (ops, _) = realize(&standard()).unwrap();
    let zx = bracket(&ops.z, ops.x().unwrap(), BracketMode::Commutator).unwrap();
    assert_eq!(zx, &(&ops.z * &ops.z) + &ops.z);
}

#[test]
fn k1_matches_difference_form() {
    let p = standard();
    let (ops, _) = realize(&p).unwrap();
    let rho = p.rho.clone().unwrap();
    let ws = Workspace::new(p.n);
    let tm_minus_one = &ws.shift(&q(-1, 1)) - &ws.scalar(q(1, 1));
    let expected = (&ws.x_plus(-rho.clone()) * &tm_minus_one)
        .try_add(&ws.scalar((Rational::from_usize(p.n) - rho) / q(2, 1)))
        .unwrap();
    assert_eq!(ops.k1().unwrap(), &ws.restrict("K1", &expected).unwrap());
    assert_eq!(ops.k2().unwrap(), &ops.v);
}

#[test]
fn tampered_v_breaks_third_meta_relation() {
    let (mut ops, cv) = realize(&standard()).unwrap();
    ops.v = ops.v.plus_scalar(&q(1, 1));
    let set = relation_residuals(&ops, &cv, RelationFamily::Meta).unwrap();
    assert!(set.residuals[0].is_zero());
    let expected = -&ops.z.scale(&q(2, 1)).plus_scalar(&q(1, 1));
    assert_eq!(set.residuals[2].matrix, expected.into_matrix());
}

#[test]
fn casimir_values_standard() {
    let (ops, cv) = realize(&standard()).unwrap();
    let (_, qv) = casimir_check(&ops, &cv, CasimirKind::Meta).unwrap();
    // (a - c)(a + c + N - 1) = (2/15)(53/15)
    assert_eq!(qv, q(2, 15) * q(53, 15));
    let (_, cval) = casimir_check(&ops, &cv, CasimirKind::Trio).unwrap();
    assert_eq!(cval, q(-2, 3) * q(13, 3));

    let (ops, cv) = realize(&ParamSet::standard(q(1, 3), q(1, 3), q(2, 7), 4)).unwrap();
    let (m, qv) = casimir_check(&ops, &cv, CasimirKind::Meta).unwrap();
    assert_eq!(qv, q(0, 1));
    assert!(m.is_zero());
}

#[test]
fn wrong_casimir_value_is_reported() {
    let (ops, mut cv) = realize(&standard()).unwrap();
    cv.casimir_meta = Some(q(1, 1));
    assert!(matches!(
        casimir_check(&ops, &cv, CasimirKind::Meta),
        Err(Error::IdentityFailure { .. })
    ));
    let (mut ops, cv) = realize(&standard()).unwrap();
    ops.v = &ops.v + &ops.z;
    assert!(matches!(
        casimir_check(&ops, &cv, CasimirKind::Meta),
        Err(Error::NotScalar(_)) | Err(Error::IdentityFailure { .. })
    ));
}

#[test]
fn isomorphism_holds_for_both_kinds() {
    let (ops, cv) = realize(&standard()).unwrap();
    let ev = isomorphism_check(&ops, &cv).unwrap();
    assert!(ev.passed(), "{ev:?}");
    let general = ParamSet::general(q(2, 3), q(-5, 7), q(1, 11), 5);
    let (ops, cv) = realize(&general).unwrap();
    assert_eq!(cv.casimir_meta.clone().unwrap(), -cv.zeta.clone().unwrap());
    assert!(isomorphism_check(&ops, &cv).unwrap().passed());
}

#[test]
fn general_reduces_to_standard() {
    let mismatches = general_reduction_mismatches(&q(1, 3), &q(1, 5), &q(2, 7), 4).unwrap();
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn jacobi_realization() {
    let (ops, cv) = realize(&ParamSet::jacobi(q(0, 1), q(0, 1), 3)).unwrap();
    let x = Poly::monomial(1, 5).unwrap();
    assert_eq!(ops.v.apply(&x).unwrap(), x.scale(&q(-2, 1)));
    assert!(relation_residuals(&ops, &cv, RelationFamily::Jacobi)
        .unwrap()
        .passed());
    assert_eq!(
        relation_residuals(&ops, &cv, RelationFamily::Meta).unwrap_err(),
        Error::WrongKind("operator X".into())
    );
    // a + b = 0 is the one line where the unshifted operator closes
    let (ops, cv) = realize(&ParamSet::jacobi(q(3, 4), q(-3, 4), 6)).unwrap();
    assert!(relation_residuals(&ops, &cv, RelationFamily::Jacobi)
        .unwrap()
        .passed());
}

#[test]
fn jacobi_off_the_antidiagonal_leaves_a_linear_residual() {
    let (a, b) = (q(3, 4), q(-2, 9));
    let p = ParamSet::jacobi(a.clone(), b.clone(), 6);
    let (ops, cv) = realize(&p).unwrap();
    let set = relation_residuals(&ops, &cv, RelationFamily::Jacobi).unwrap();
    assert!(set.residuals[0].is_zero());
    assert_eq!(set.residuals[0].matrix.cols(), 7);
    // -(b^2 - a^2)/2 - x (a + b)(a + b + 2)/2, read off by hand
    let constant = q(665, 2592);
    let linear = q(-1729, 2592);
    let ws = Workspace::new(6);
    let expected = ws.mul_poly(&[constant, linear]).submatrix(9, 7);
    assert_eq!(set.residuals[1].matrix, expected);

    let (ops, cv) = realize_jacobi_shifted(&p).unwrap();
    assert!(relation_residuals(&ops, &cv, RelationFamily::Jacobi)
        .unwrap()
        .passed());
}

#[test]
fn hahn_embed_needs_rho() {
    let (ops, cv) = realize(&ParamSet::general(q(1, 2), q(1, 3), q(1, 4), 3)).unwrap();
    assert!(ops.k1.is_none());
    assert!(matches!(
        relation_residuals(&ops, &cv, RelationFamily::HahnEmbed),
        Err(Error::WrongKind(_))
    ));
}

#[test]
fn non_generic_is_rejected() {
    assert_eq!(
        realize(&ParamSet::standard(q(1, 2), q(1, 5), q(2, 7), 4)).unwrap_err(),
        Error::NonGenericParams("2a-1".into())
    );
}

fn sample() -> impl Strategy<Value = Rational> {
    (-20i64..=20, prop::sample::select(vec![3i64, 5, 7, 11, 13])).prop_map(|(p, d)| q(p, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn all_families_vanish(a in sample(), b in sample(), c in sample(), rho in sample(), n in 0usize..=6) {
        let p = ParamSet::standard(a.clone(), c.clone(), rho.clone(), n);
        prop_assume!(p.check_generic().is_ok());
        let (ops, cv) = realize(&p).unwrap();
        for family in [RelationFamily::Meta, RelationFamily::Trio, RelationFamily::TrioDerived, RelationFamily::HahnEmbed] {
            prop_assert!(relation_residuals(&ops, &cv, family).unwrap().passed());
        }
        prop_assert!(casimir_check(&ops, &cv, CasimirKind::Meta).is_ok());
        prop_assert!(casimir_check(&ops, &cv, CasimirKind::Trio).is_ok());

        let g = ParamSet::general(a.clone(), b.clone(), c, n).with_rho(rho);
        let (ops, cv) = realize(&g).unwrap();
        for family in [RelationFamily::Meta, RelationFamily::Trio, RelationFamily::TrioDerived, RelationFamily::HahnEmbed] {
            prop_assert!(relation_residuals(&ops, &cv, family).unwrap().passed());
        }
        prop_assert!(isomorphism_check(&ops, &cv).unwrap().passed());

        let (ops, cv) = realize_jacobi_shifted(&ParamSet::jacobi(a, b, n)).unwrap();
        prop_assert!(relation_residuals(&ops, &cv, RelationFamily::Jacobi).unwrap().passed());
    }
}
