//! Concrete realizations of the meta Hahn and trio Hahn algebras (and the
//! Jacobi algebra) by difference and differential operators, and exact
//! checks of their relations, Casimir values and the meta/trio isomorphism.

mod params;

use serde::Serialize;

pub use params::{FactorScope, GenericityFactor, Kind, ParamSet};

use crate::polyspace::{anticomm, comm, Matrix, Operator, Workspace};
use crate::{Error, Result, Scalar};

/// Values of the central elements in a realization.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralValues<T> {
    pub eta: Option<T>,
    pub xi: T,
    pub zeta: Option<T>,
    /// Meta Casimir `Q`.
    pub casimir_meta: Option<T>,
    /// Trio Casimir `C`.
    pub casimir_trio: Option<T>,
    /// Shift of the Hahn embedding `K1 = X + rho Z + (eta + rho) / 2`.
    pub rho: Option<T>,
}

/// Realized generators.
///
/// For the standard and general kinds every operator acts on degree `<= n`.
/// The Jacobi `Z` raises degree, so that kind keeps `V` and `Z` on the
/// degree `<= n + 2` workspace and relations are read off on the columns
/// `0..=n`, where every product is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSet<T> {
    pub kind: Kind,
    pub n: usize,
    pub v: Operator<T>,
    pub x: Option<Operator<T>>,
    pub z: Operator<T>,
    pub vt: Option<Operator<T>>,
    pub zinv: Option<Operator<T>>,
    pub k1: Option<Operator<T>>,
    pub k2: Option<Operator<T>>,
}

impl<T: Scalar> OperatorSet<T> {
    fn need<'a>(op: &'a Option<Operator<T>>, name: &str) -> Result<&'a Operator<T>> {
        op.as_ref()
            .ok_or_else(|| Error::WrongKind(format!("operator {name}")))
    }

    pub fn x(&self) -> Result<&Operator<T>> {
        Self::need(&self.x, "X")
    }

    pub fn vt(&self) -> Result<&Operator<T>> {
        Self::need(&self.vt, "Vt")
    }

    pub fn zinv(&self) -> Result<&Operator<T>> {
        Self::need(&self.zinv, "Z^-1")
    }

    pub fn k1(&self) -> Result<&Operator<T>> {
        Self::need(&self.k1, "K1")
    }

    pub fn k2(&self) -> Result<&Operator<T>> {
        Self::need(&self.k2, "K2")
    }

    /// Named operators for reports, in a fixed order.
    pub fn named(&self) -> Vec<(&'static str, &Operator<T>)> {
        let mut out = vec![("V", &self.v)];
        let optional = [
            ("X", &self.x),
            ("Vt", &self.vt),
            ("Z^-1", &self.zinv),
            ("K1", &self.k1),
            ("K2", &self.k2),
        ];
        out.push(("Z", &self.z));
        out.extend(
            optional
                .into_iter()
                .filter_map(|(n, o)| o.as_ref().map(|o| (n, o))),
        );
        out
    }
}

fn need_value<'a, T>(v: &'a Option<T>, name: &str) -> Result<&'a T> {
    v.as_ref()
        .ok_or_else(|| Error::WrongKind(format!("central value {name}")))
}

/// Builds the operators of the given kind and the values of the central
/// elements.
pub fn realize<T: Scalar>(params: &ParamSet<T>) -> Result<(OperatorSet<T>, CentralValues<T>)> {
    params.check_generic()?;
    match params.kind {
        Kind::Standard => realize_standard(params),
        Kind::General => realize_general(params),
        Kind::Jacobi => realize_jacobi(params, false),
    }
}

/// Jacobi realization with `V` shifted by `-(a+b)(a+b+2)/4` and
/// `2 xi = (b^2 - a^2) / 2`.
///
/// With the unshifted `V`, `[[V,Z],V] - 2{V,Z} - 2V` equals
/// `(b^2 - a^2)/2 - x (a+b)(a+b+2)/2`, which is central only when
/// `a + b = 0`; the shift removes the `x` term.
pub fn realize_jacobi_shifted<T: Scalar>(
    params: &ParamSet<T>,
) -> Result<(OperatorSet<T>, CentralValues<T>)> {
    params.require_kind(Kind::Jacobi, "shifted Jacobi realization")?;
    realize_jacobi(params, true)
}

struct Generators<T> {
    v: Matrix<T>,
    vt: Matrix<T>,
    x: Matrix<T>,
}

fn assemble<T: Scalar>(
    ws: Workspace,
    kind: Kind,
    gens: Generators<T>,
    cv: &CentralValues<T>,
) -> Result<OperatorSet<T>> {
    let t_plus = ws.shift(&T::one());
    let t_minus = ws.shift(&-T::one());
    let v = ws.restrict("V", &gens.v)?;
    let vt = ws.restrict("Vt", &gens.vt)?;
    let x = ws.restrict("X", &gens.x)?;
    let z = ws.restrict("Z", &-&t_minus)?;
    let zinv = ws.restrict("Z^-1", &-&t_plus)?;
    let k1 = match &cv.rho {
        Some(rho) => {
            let eta = need_value(&cv.eta, "eta")?;
            let shift = (eta.clone() + rho.clone()) / T::from_int(2);
            Some((&x + &z.scale(rho)).plus_scalar(&shift))
        }
        None => None,
    };
    Ok(OperatorSet {
        kind,
        n: ws.n(),
        k2: k1.as_ref().map(|_| v.clone()),
        v,
        x: Some(x),
        z,
        vt: Some(vt),
        zinv: Some(zinv),
        k1,
    })
}

fn realize_standard<T: Scalar>(p: &ParamSet<T>) -> Result<(OperatorSet<T>, CentralValues<T>)> {
    let (a, c, rho) = (p.a.clone(), p.c()?.clone(), p.rho()?.clone());
    let n = T::from_usize(p.n);
    let one = T::one();
    let ws = Workspace::new(p.n);
    let t_plus = ws.shift(&one);
    let t_minus = ws.shift(&-one.clone());
    let x = ws.x_plus(T::zero());

    // V = (x + a)(x + 1 - a - N) T+ - x (x + 1)
    let v = &(&(&ws.x_plus(a.clone()) * &ws.x_plus(one.clone() - a.clone() - n.clone())) * &t_plus)
        - &(&x * &ws.x_plus(one.clone()));
    // Vt = (x + c) T+ - x
    let vt = &(&ws.x_plus(c.clone()) * &t_plus) - &x;
    // X = x T- - (x + c)
    let xop = &(&x * &t_minus) - &ws.x_plus(c.clone());

    let two = T::from_int(2);
    let cv = CentralValues {
        eta: Some(two * c.clone() + n.clone()),
        xi: (one.clone() - a.clone()) * (a.clone() + n.clone()),
        zeta: Some((c.clone() - a.clone()) * (a.clone() + c.clone() + n.clone() - one.clone())),
        casimir_meta: Some((a.clone() - c.clone()) * (a.clone() + c + n.clone() - one.clone())),
        casimir_trio: Some((a.clone() - one) * (a + n)),
        rho: Some(rho),
    };
    let ops = assemble(ws, Kind::Standard, Generators { v, vt, x: xop }, &cv)?;
    Ok((ops, cv))
}

fn realize_general<T: Scalar>(p: &ParamSet<T>) -> Result<(OperatorSet<T>, CentralValues<T>)> {
    let (a, b, c) = (p.a.clone(), p.b()?.clone(), p.c()?.clone());
    let n = T::from_usize(p.n);
    let one = T::one();
    let two = T::from_int(2);
    let four = T::from_int(4);
    let ws = Workspace::new(p.n);
    let t_plus = ws.shift(&one);
    let t_minus = ws.shift(&-one.clone());
    let s = n.clone() + a.clone() + b.clone();

    // V = (x + a)(x + b) T+ - (2x + s + 1)(2x + s - 1) / 4
    let quad = &ws.mul_poly(&[s.clone() + one.clone(), two.clone()])
        * &ws.mul_poly(&[s.clone() - one.clone(), two.clone()]);
    let v = &(&(&ws.x_plus(a.clone()) * &ws.x_plus(b.clone())) * &t_plus)
        - &quad.scale(&(one.clone() / four.clone()));
    // Vt = (x + c) T+ - (2x + s - 1) / 2
    let lin = ws.mul_poly(&[s.clone() - one.clone(), two.clone()]);
    let half = one.clone() / two.clone();
    let vt = &(&ws.x_plus(c.clone()) * &t_plus) - &lin.scale(&half);
    // X = (2x + s - 1) / 2 T- - (x + c)
    let xop = &(&lin.scale(&half) * &t_minus) - &ws.x_plus(c.clone());

    let cv = CentralValues {
        eta: Some(two * c.clone() - a.clone() - b.clone() + one.clone()),
        xi: (a.clone() - b.clone() + one.clone() + n.clone())
            * (b.clone() - a.clone() + one.clone() + n.clone())
            / four.clone(),
        zeta: Some((b.clone() - c.clone()) * (a.clone() - c.clone())),
        casimir_meta: Some((a.clone() - c.clone()) * (c - b.clone())),
        casimir_trio: Some(
            (a.clone() - b.clone() + one.clone() + n.clone()) * (a - b - one - n) / four,
        ),
        rho: p.rho.clone(),
    };
    let ops = assemble(ws, Kind::General, Generators { v, vt, x: xop }, &cv)?;
    Ok((ops, cv))
}

fn realize_jacobi<T: Scalar>(
    p: &ParamSet<T>,
    shifted: bool,
) -> Result<(OperatorSet<T>, CentralValues<T>)> {
    let (a, b) = (p.a.clone(), p.b()?.clone());
    let one = T::one();
    let two = T::from_int(2);
    let ws = Workspace::new(p.n);
    let d = ws.derivative::<T>();

    // V = (1 - x^2) d^2 + (b - a - (a + b + 2) x) d
    let mut v = &(&(&ws.mul_poly(&[one.clone(), T::zero(), -one.clone()]) * &d) * &d)
        + &(&ws.mul_poly(&[
            b.clone() - a.clone(),
            -(a.clone() + b.clone() + two.clone()),
        ]) * &d);
    let mut xi = (b.clone() * b.clone() - a.clone() * a.clone()) / two.clone();
    if shifted {
        let s = a.clone() + b.clone();
        v = &v - &ws.scalar(s.clone() * (s + two.clone()) / T::from_int(4));
        xi = xi / two.clone();
    }
    ws.restrict("V", &v)?;
    // Z = (x - 1) / 2
    let z = ws.mul_poly(&[-one.clone() / two.clone(), one / two.clone()]);

    let cv = CentralValues {
        eta: None,
        xi,
        zeta: None,
        casimir_meta: None,
        casimir_trio: None,
        rho: None,
    };
    let ops = OperatorSet {
        kind: Kind::Jacobi,
        n: p.n,
        v: ws.unrestricted(v)?,
        x: None,
        z: ws.unrestricted(z)?,
        vt: None,
        zinv: None,
        k1: None,
        k2: None,
    };
    Ok((ops, cv))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationFamily {
    Meta,
    Trio,
    TrioDerived,
    HahnEmbed,
    Jacobi,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 5] = [
        RelationFamily::Meta,
        RelationFamily::Trio,
        RelationFamily::TrioDerived,
        RelationFamily::HahnEmbed,
        RelationFamily::Jacobi,
    ];

    pub fn label(self) -> &'static str {
        match self {
            RelationFamily::Meta => "meta",
            RelationFamily::Trio => "trio",
            RelationFamily::TrioDerived => "trio-derived",
            RelationFamily::HahnEmbed => "hahn-embed",
            RelationFamily::Jacobi => "jacobi",
        }
    }
}

/// A relation written as `lhs - rhs`, expected to vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual<T> {
    pub name: String,
    pub matrix: Matrix<T>,
}

impl<T: Scalar> Residual<T> {
    fn new(name: &str, op: Operator<T>, cols: usize) -> Self {
        let m = op.into_matrix();
        let matrix = if m.cols() == cols {
            m
        } else {
            m.submatrix(m.rows(), cols)
        };
        Self {
            name: name.to_string(),
            matrix,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSet<T> {
    pub family: RelationFamily,
    pub residuals: Vec<Residual<T>>,
}

impl<T: Scalar> ResidualSet<T> {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Residual::is_zero)
    }
}

/// Residual matrices of every relation in `family`.
pub fn relation_residuals<T: Scalar>(
    ops: &OperatorSet<T>,
    cv: &CentralValues<T>,
    family: RelationFamily,
) -> Result<ResidualSet<T>> {
    let cols = ops.n + 1;
    let (v, z) = (&ops.v, &ops.z);
    let dim = v.n();
    let id = Operator::identity(dim);
    let scalar = |s: &T| Operator::scalar(dim, s.clone());
    let r = |name: &str, op: Operator<T>| Residual::new(name, op, cols);
    let two = T::from_int(2);

    let residuals = match family {
        RelationFamily::Meta => {
            let x = ops.x()?;
            let eta = need_value(&cv.eta, "eta")?;
            vec![
                r("[Z,X] - Z^2 - Z", &(&comm(z, x) - &(z * z)) - z),
                r(
                    "[V,Z] - 2X - eta",
                    &(&comm(v, z) - &x.scale(&two)) - &scalar(eta),
                ),
                r(
                    "[X,V] - {V,Z} - V - xi",
                    &(&(&comm(x, v) - &anticomm(v, z)) - v) - &scalar(&cv.xi),
                ),
            ]
        }
        RelationFamily::Trio => {
            let (vt, zinv) = (ops.vt()?, ops.zinv()?);
            let eta = need_value(&cv.eta, "eta")?;
            let zeta = need_value(&cv.zeta, "zeta")?;
            let zinv2 = zinv * zinv;
            vec![
                r("Z Z^-1 - I", &(z * zinv) - &id),
                r("Z^-1 Z - I", &(zinv * z) - &id),
                r(
                    "[V,Vt] + Vt^2 + V - Vt - zeta Z^-2",
                    &(&(&(&comm(v, vt) + &(vt * vt)) + v) - vt) - &zinv2.scale(zeta),
                ),
                r(
                    "[V,Z] - {Vt,Z} + Z - eta + I",
                    &(&(&comm(v, z) - &anticomm(vt, z)) + z) - &scalar(&(eta.clone() - T::one())),
                ),
                r("[Z,Vt] - Z - I", &(&comm(z, vt) - z) - &id),
            ]
        }
        RelationFamily::TrioDerived => {
            let (vt, zinv) = (ops.vt()?, ops.zinv()?);
            let eta = need_value(&cv.eta, "eta")?;
            let zinv2 = zinv * zinv;
            vec![
                r(
                    "[Vt,Z^-1] - Z^-2 - Z^-1",
                    &(&comm(vt, zinv) - &zinv2) - zinv,
                ),
                r(
                    "[V,Z^-1] + {Vt,Z^-1} + (eta-1) Z^-2 - Z^-1",
                    &(&(&comm(v, zinv) + &anticomm(vt, zinv))
                        + &zinv2.scale(&(eta.clone() - T::one())))
                        - zinv,
                ),
            ]
        }
        RelationFamily::HahnEmbed => {
            let (k1, k2) = (ops.k1()?, ops.k2()?);
            let eta = need_value(&cv.eta, "eta")?;
            let q = need_value(&cv.casimir_meta, "Q")?;
            let rho = need_value(&cv.rho, "rho")?;
            let half = T::one() / two.clone();
            let k2k1 = comm(k2, k1);
            // -2Q - (eta^2 + rho^2)/2 + eta - xi
            let constant = -(two.clone() * q.clone())
                - half * (eta.clone() * eta.clone() + rho.clone() * rho.clone())
                + eta.clone()
                - cv.xi.clone();
            let rhs1 = (&(k1 * k1).scale(&two) - k2).plus_scalar(&constant);
            let rhs2 = anticomm(k1, k2)
                .scale(&two)
                .plus_scalar(&(two.clone() * rho.clone() * cv.xi.clone()));
            vec![
                r(
                    "[K1,[K2,K1]] - (2K1^2 - K2 - 2Q - (eta^2+rho^2)/2 + eta - xi)",
                    &comm(k1, &k2k1) - &rhs1,
                ),
                r(
                    "[[K2,K1],K2] - (2{K1,K2} + 2 rho xi)",
                    &comm(&k2k1, k2) - &rhs2,
                ),
            ]
        }
        RelationFamily::Jacobi => {
            let vz = comm(v, z);
            vec![
                r(
                    "[Z,[V,Z]] - 2Z^2 - 2Z",
                    &(&comm(z, &vz) - &(z * z).scale(&two)) - &z.scale(&two),
                ),
                r(
                    "[[V,Z],V] - 2{V,Z} - 2V - 2xi",
                    (&(&comm(&vz, v) - &anticomm(v, z).scale(&two)) - &v.scale(&two))
                        .plus_scalar(&-(two.clone() * cv.xi.clone())),
                ),
            ]
        }
    };
    Ok(ResidualSet { family, residuals })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CasimirKind {
    Meta,
    Trio,
}

/// Builds the Casimir element, checks that it equals the expected scalar
/// times the identity and that it commutes with every generator.
pub fn casimir_check<T: Scalar>(
    ops: &OperatorSet<T>,
    cv: &CentralValues<T>,
    which: CasimirKind,
) -> Result<(Operator<T>, T)> {
    let eta = need_value(&cv.eta, "eta")?;
    let (v, z) = (&ops.v, &ops.z);
    let one = T::one();
    let (name, casimir, expected, generators) = match which {
        CasimirKind::Meta => {
            let x = ops.x()?;
            // Q = ZVZ + VZ + X^2 - (1 - eta) X + xi Z
            let q = &(&(&(&(z * v) * z) + &(v * z)) + &(x * x))
                + &(&x.scale(&(eta.clone() - one)) + &z.scale(&cv.xi));
            let expected = need_value(&cv.casimir_meta, "Q")?.clone();
            ("Q", q, expected, vec![("X", x), ("V", v), ("Z", z)])
        }
        CasimirKind::Trio => {
            let (vt, zinv) = (ops.vt()?, ops.zinv()?);
            let zeta = need_value(&cv.zeta, "zeta")?;
            // C = ZV + V + zeta Z^-1 + Vt Z Vt + (eta - 1) Vt
            let c = &(&(&(z * v) + v) + &zinv.scale(zeta))
                + &(&(&(vt * z) * vt) + &vt.scale(&(eta.clone() - one)));
            let expected = need_value(&cv.casimir_trio, "C")?.clone();
            (
                "C",
                c,
                expected,
                vec![("V", v), ("Vt", vt), ("Z", z), ("Z^-1", zinv)],
            )
        }
    };
    let scalar = casimir
        .matrix()
        .as_scalar_identity()
        .ok_or_else(|| Error::NotScalar(name.into()))?;
    if scalar != expected {
        return Err(Error::IdentityFailure {
            name: format!("{name} scalar"),
            lhs: scalar.to_string(),
            rhs: expected.to_string(),
        });
    }
    for (gen_name, g) in generators {
        if !comm(&casimir, g).is_zero() {
            return Err(Error::NotCentral(name.into(), gen_name.into()));
        }
    }
    Ok((casimir, scalar))
}

/// Evidence for the meta/trio isomorphism in a realization.
#[derive(Debug, Clone, PartialEq)]
pub struct IsomorphismEvidence<T> {
    /// `X - Vt Z`.
    pub x_minus_vt_z: Residual<T>,
    /// `Q + zeta`, expected zero.
    pub q_plus_zeta: T,
    /// `C + xi`, expected zero.
    pub c_plus_xi: T,
    /// Meta relations and Casimir definition pushed through
    /// `X -> Vt Z, Q -> -zeta, xi -> -C`.
    pub meta_to_trio: Vec<Residual<T>>,
    /// Trio relations and Casimir definition pushed through
    /// `Vt -> X Z^-1, zeta -> -Q, C -> -xi`.
    pub trio_to_meta: Vec<Residual<T>>,
}

impl<T: Scalar> IsomorphismEvidence<T> {
    pub fn passed(&self) -> bool {
        self.x_minus_vt_z.is_zero()
            && self.q_plus_zeta.is_zero()
            && self.c_plus_xi.is_zero()
            && self.meta_to_trio.iter().all(Residual::is_zero)
            && self.trio_to_meta.iter().all(Residual::is_zero)
    }
}

pub fn isomorphism_check<T: Scalar>(
    ops: &OperatorSet<T>,
    cv: &CentralValues<T>,
) -> Result<IsomorphismEvidence<T>> {
    if ops.kind == Kind::Jacobi {
        return Err(Error::WrongKind("isomorphism check".into()));
    }
    let (v, z, x, vt, zinv) = (&ops.v, &ops.z, ops.x()?, ops.vt()?, ops.zinv()?);
    let eta = need_value(&cv.eta, "eta")?;
    let zeta = need_value(&cv.zeta, "zeta")?;
    let q = need_value(&cv.casimir_meta, "Q")?;
    let c = need_value(&cv.casimir_trio, "C")?;
    let cols = ops.n + 1;
    let dim = v.n();
    let id = Operator::identity(dim);
    let one = T::one();
    let two = T::from_int(2);
    let r = |name: &str, op: Operator<T>| Residual::new(name, op, cols);

    // The Casimir elements as computed, not as their expected scalars.
    let (c_op, _) = casimir_check(ops, cv, CasimirKind::Trio)?;
    let (q_op, _) = casimir_check(ops, cv, CasimirKind::Meta)?;

    let vtz = vt * z;
    let meta_to_trio = vec![
        r("[Z,Vt Z] - Z^2 - Z", &(&comm(z, &vtz) - &(z * z)) - z),
        r(
            "[V,Z] - 2 Vt Z - eta",
            (&comm(v, z) - &vtz.scale(&two)).plus_scalar(&-eta.clone()),
        ),
        r(
            "[Vt Z,V] - {V,Z} - V + C",
            &(&(&comm(&vtz, v) - &anticomm(v, z)) - v) + &c_op,
        ),
        r(
            "ZVZ + VZ + (Vt Z)^2 - (1-eta) Vt Z - C Z + zeta",
            (&(&(&(&(z * v) * z) + &(v * z)) + &(&vtz * &vtz))
                + &(&vtz.scale(&(eta.clone() - one.clone())) - &(&c_op * z)))
                .plus_scalar(zeta),
        ),
    ];

    let xzi = x * zinv;
    let zinv2 = zinv * zinv;
    let trio_to_meta = vec![
        r("Z Z^-1 - I", &(z * zinv) - &id),
        r("Z^-1 Z - I", &(zinv * z) - &id),
        r(
            "[V,X Z^-1] + (X Z^-1)^2 + V - X Z^-1 + Q Z^-2",
            &(&(&(&comm(v, &xzi) + &(&xzi * &xzi)) + v) - &xzi) + &(&q_op * &zinv2),
        ),
        r(
            "[V,Z] - {X Z^-1,Z} + Z - eta + I",
            (&(&comm(v, z) - &anticomm(&xzi, z)) + z).plus_scalar(&(one.clone() - eta.clone())),
        ),
        r("[Z,X Z^-1] - Z - I", &(&comm(z, &xzi) - z) - &id),
        r(
            "ZV + V - Q Z^-1 + X Z^-1 Z X Z^-1 + (eta-1) X Z^-1 + xi",
            (&(&(&(z * v) + v) - &(&q_op * zinv))
                + &(&(&(&xzi * z) * &xzi) + &xzi.scale(&(eta.clone() - one))))
                .plus_scalar(&cv.xi),
        ),
    ];

    Ok(IsomorphismEvidence {
        x_minus_vt_z: r("X - Vt Z", x - &vtz),
        q_plus_zeta: q.clone() + zeta.clone(),
        c_plus_xi: c.clone() + cv.xi.clone(),
        meta_to_trio,
        trio_to_meta,
    })
}

/// Names of operators where the general realization at `b = 1 - a - N`
/// differs from the standard one; empty when they agree.
pub fn general_reduction_mismatches<T: Scalar>(
    a: &T,
    c: &T,
    rho: &T,
    n: usize,
) -> Result<Vec<String>> {
    let b = T::one() - a.clone() - T::from_usize(n);
    let (std_ops, std_cv) = realize(&ParamSet::standard(a.clone(), c.clone(), rho.clone(), n))?;
    let (gen_ops, gen_cv) =
        realize(&ParamSet::general(a.clone(), b, c.clone(), n).with_rho(rho.clone()))?;
    let mut out: Vec<String> = std_ops
        .named()
        .into_iter()
        .zip(gen_ops.named())
        .filter(|((_, s), (_, g))| s != g)
        .map(|((name, _), _)| name.to_string())
        .collect();
    let scalars = [
        ("eta", &std_cv.eta, &gen_cv.eta),
        ("zeta", &std_cv.zeta, &gen_cv.zeta),
        ("Q", &std_cv.casimir_meta, &gen_cv.casimir_meta),
        ("C", &std_cv.casimir_trio, &gen_cv.casimir_trio),
    ];
    out.extend(
        scalars
            .iter()
            .filter(|(_, s, g)| s != g)
            .map(|(n, _, _)| n.to_string()),
    );
    if std_cv.xi != gen_cv.xi {
        out.push("xi".into());
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
