//! The distinguished bases `a, b, c, d, s` of the standard realization,
//! their (generalized) eigenvalue relations, the closed-form bidiagonal and
//! tridiagonal actions, and the Leonard pair / Leonard trio verdicts.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{realize, CentralValues, Kind, OperatorSet, ParamSet};
use crate::polyspace::{
    classify, matrix_in_basis, poch_poly, BasisFamily, BasisKind, Matrix, Operator, Poly,
    StructureClass,
};
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct EigenData<T> {
    pub basis_kind: BasisKind,
    pub operator_name: String,
    pub eigenvalues: Vec<T>,
}

impl<T: Scalar> EigenData<T> {
    pub fn multiplicity_free(&self) -> bool {
        let ev = &self.eigenvalues;
        ev.iter()
            .enumerate()
            .all(|(i, e)| ev[i + 1..].iter().all(|f| f != e))
    }
}

/// An operator acting on one of the bases with a known band matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    K1OnS,
    VOnS,
    ZOnA,
    VtZOnA,
    ZOnB,
    ZVOnB,
    K1OnA,
    VOnC,
}

impl Action {
    pub const BIDIAGONAL: [Action; 2] = [Action::K1OnS, Action::VOnS];
    pub const TRIDIAGONAL: [Action; 6] = [
        Action::ZOnA,
        Action::VtZOnA,
        Action::ZOnB,
        Action::ZVOnB,
        Action::K1OnA,
        Action::VOnC,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Action::K1OnS => "K1 on s",
            Action::VOnS => "V on s",
            Action::ZOnA => "Z on a",
            Action::VtZOnA => "Vt Z on a",
            Action::ZOnB => "Z on b",
            Action::ZVOnB => "Z V on b",
            Action::K1OnA => "K1 on a",
            Action::VOnC => "V on c",
        }
    }

    pub fn basis(self) -> BasisKind {
        match self {
            Action::K1OnS | Action::VOnS => BasisKind::S,
            Action::ZOnA | Action::VtZOnA | Action::K1OnA => BasisKind::A,
            Action::ZOnB | Action::ZVOnB => BasisKind::B,
            Action::VOnC => BasisKind::C,
        }
    }
}

/// Closed-form matrix of `action`, with `M[i][j]` the coefficient of
/// `basis_i` in the image of `basis_j`.
pub fn closed_form<T: Scalar>(action: Action, params: &ParamSet<T>) -> Result<Matrix<T>> {
    params.require_kind(Kind::Standard, "closed-form actions")?;
    params.check_generic()?;
    let a = params.a.clone();
    let c = params.c()?.clone();
    let rho = params.rho()?.clone();
    let dim = params.n + 1;
    let n = T::from_usize(params.n);
    let one = T::one();
    let two = T::from_int(2);
    let idx = T::from_usize;
    let two_a = a.clone() + a.clone();

    let mut m = Matrix::zeros(dim, dim);
    for j in 0..dim {
        let k = idx(j);
        // lower = coefficient of basis_{j+1}, upper = coefficient of basis_{j-1}
        let (lower, diag, upper) = match action {
            Action::K1OnS => (
                T::zero(),
                (n.clone() - rho.clone()) / two.clone() - k.clone(),
                k.clone() * (k.clone() - one.clone() + a.clone() + rho.clone()),
            ),
            Action::VOnS => (
                k.clone() - n.clone(),
                (one.clone() - a.clone() - k.clone()) * (k.clone() + a.clone()),
                T::zero(),
            ),
            Action::ZOnA | Action::VtZOnA | Action::K1OnA => {
                let denom = two.clone() * (two_a.clone() + two.clone() * k.clone() - one.clone());
                let (up, down) = match action {
                    Action::K1OnA => (
                        (k.clone() + two_a.clone() - one.clone())
                            * (n.clone() - k.clone())
                            * (k.clone() - rho.clone() + a.clone()),
                        k.clone()
                            * (k.clone() + a.clone() + rho.clone() - one.clone())
                            * (k.clone() + two_a.clone() + n.clone() - one.clone()),
                    ),
                    _ => (
                        (n.clone() - k.clone()) * (two_a.clone() + k.clone() - one.clone()),
                        k.clone() * (two_a.clone() + n.clone() + k.clone() - one.clone()),
                    ),
                };
                let (up, down) = match action {
                    Action::VtZOnA => (up / denom.clone(), down / denom),
                    _ => (
                        up / (denom.clone() * (k.clone() + a.clone())),
                        down / (denom * (k.clone() + a.clone() - one.clone())),
                    ),
                };
                match action {
                    Action::ZOnA => (up.clone(), down.clone() - up - one.clone(), -down),
                    Action::VtZOnA => (
                        -up.clone(),
                        up + down.clone() - n.clone() - c.clone(),
                        -down,
                    ),
                    _ => (
                        -up.clone(),
                        up + down.clone() - (n.clone() + rho.clone()) / two.clone(),
                        -down,
                    ),
                }
            }
            Action::ZOnB => (T::zero(), -one.clone(), k.clone()),
            Action::ZVOnB => (
                n.clone() - k.clone(),
                k.clone() * (k.clone() + c.clone())
                    + (k.clone() - n.clone()) * (k.clone() + c.clone())
                    + (a.clone() - one.clone()) * (a.clone() + n.clone()),
                -(k.clone() * (k.clone() + c.clone() - one.clone()) * (k.clone() + c.clone())),
            ),
            Action::VOnC => (
                n.clone() - k.clone(),
                (k.clone() - n.clone()) * (k.clone() + a.clone() + rho.clone())
                    + k.clone() * (k.clone() + rho.clone() - a.clone() - n.clone())
                    - a.clone() * (a.clone() - one.clone()),
                -(k.clone()
                    * (k.clone() + a.clone() + rho.clone() - one.clone())
                    * (k.clone() + rho.clone() - a.clone() - n.clone())),
            ),
        };
        m[(j, j)] = diag;
        if j + 1 < dim {
            m[(j + 1, j)] = lower;
        } else if !lower.is_zero() {
            return Err(Error::CoefficientMismatch {
                family: action.label().into(),
                row: j + 1,
                col: j,
                expected: "0 (outside the space)".into(),
                actual: lower.to_string(),
            });
        }
        if j > 0 {
            m[(j - 1, j)] = upper;
        }
    }
    Ok(m)
}

fn compare<T: Scalar>(family: &str, expected: &Matrix<T>, actual: &Matrix<T>) -> Result<()> {
    for i in 0..expected.rows() {
        for j in 0..expected.cols() {
            if expected[(i, j)] != actual[(i, j)] {
                return Err(Error::CoefficientMismatch {
                    family: family.into(),
                    row: i,
                    col: j,
                    expected: expected[(i, j)].to_string(),
                    actual: actual[(i, j)].to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Basis `kind` for standard-kind parameters.
pub fn build_basis<T: Scalar>(kind: BasisKind, params: &ParamSet<T>) -> Result<BasisFamily<T>> {
    params.require_kind(Kind::Standard, "distinguished bases")?;
    params.check_generic()?;
    let n = params.n;
    let a = &params.a;
    let one = T::one();
    let members = match kind {
        BasisKind::A => {
            let second = one.clone() - a.clone() - T::from_usize(n);
            (0..=n)
                .map(|k| poch_poly(a, k, false, n)?.mul(&poch_poly(&second, n - k, false, n)?, n))
                .collect::<Result<Vec<_>>>()?
        }
        BasisKind::B => (0..=n)
            .map(|k| poch_poly(params.c()?, k, false, n))
            .collect::<Result<Vec<_>>>()?,
        BasisKind::C => (0..=n)
            .map(|k| poch_poly(params.rho()?, k, true, n))
            .collect::<Result<Vec<_>>>()?,
        BasisKind::D => {
            let shift = params.c()?.clone() + one.clone();
            (0..=n)
                .map(|k| Ok(poch_poly(&shift, k, false, n)?.scale(&-one.clone())))
                .collect::<Result<Vec<_>>>()?
        }
        BasisKind::S => (0..=n)
            .map(|k| poch_poly(a, k, false, n))
            .collect::<Result<Vec<_>>>()?,
        BasisKind::Monomial => return Ok(BasisFamily::monomial(n)),
    };
    BasisFamily::new(kind, members)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrioVerdict {
    pub is_leonard_trio: bool,
    #[serde(rename = "is_leonard_pair_VK1")]
    pub is_leonard_pair_vk1: bool,
    /// Keyed `"<operator>@<basis>"`.
    pub structure_evidence: BTreeMap<String, StructureClass>,
}

/// Standard realization together with its five distinguished bases.
#[derive(Debug, Clone)]
pub struct Model<T> {
    params: ParamSet<T>,
    ops: OperatorSet<T>,
    central: CentralValues<T>,
    bases: BTreeMap<BasisKind, BasisFamily<T>>,
    actions: [OnceLock<Matrix<T>>; 8],
}

impl<T: Scalar> Model<T> {
    pub fn new(params: &ParamSet<T>) -> Result<Self> {
        params.require_kind(Kind::Standard, "model")?;
        let (ops, central) = realize(params)?;
        let mut bases = BTreeMap::new();
        for kind in [
            BasisKind::A,
            BasisKind::B,
            BasisKind::C,
            BasisKind::D,
            BasisKind::S,
        ] {
            bases.insert(kind, build_basis(kind, params)?);
        }
        Ok(Self {
            params: params.clone(),
            ops,
            central,
            bases,
            actions: Default::default(),
        })
    }

    pub fn params(&self) -> &ParamSet<T> {
        &self.params
    }

    pub fn ops(&self) -> &OperatorSet<T> {
        &self.ops
    }

    pub fn central(&self) -> &CentralValues<T> {
        &self.central
    }

    pub fn basis(&self, kind: BasisKind) -> &BasisFamily<T> {
        &self.bases[&kind]
    }

    pub fn represent(&self, op: &Operator<T>, kind: BasisKind) -> Result<Matrix<T>> {
        matrix_in_basis(op, self.basis(kind))
    }

    fn action_operator(&self, action: Action) -> Result<Operator<T>> {
        let o = &self.ops;
        Ok(match action {
            Action::K1OnS | Action::K1OnA => o.k1()?.clone(),
            Action::VOnS | Action::VOnC => o.v.clone(),
            Action::ZOnA | Action::ZOnB => o.z.clone(),
            Action::VtZOnA => o.vt()? * &o.z,
            Action::ZVOnB => &o.z * &o.v,
        })
    }

    /// Matrix of `action` computed by exact change of basis; memoized.
    pub fn represented_action(&self, action: Action) -> Result<Matrix<T>> {
        let slot = &self.actions[action as usize];
        if let Some(m) = slot.get() {
            return Ok(m.clone());
        }
        let m = self.represent(&self.action_operator(action)?, action.basis())?;
        Ok(slot.get_or_init(|| m).clone())
    }

    /// Compares the solved matrix of `action` with its closed form.
    pub fn action_check(&self, action: Action) -> Result<Matrix<T>> {
        let solved = self.represented_action(action)?;
        compare(action.label(), &closed_form(action, &self.params)?, &solved)?;
        Ok(solved)
    }

    /// Closed-form (generalized) eigenvalue of member `i` of `kind`.
    pub fn eigenvalue(&self, kind: BasisKind, i: usize) -> Result<T> {
        let p = &self.params;
        let k = T::from_usize(i);
        Ok(match kind {
            BasisKind::A => (T::one() - p.a.clone() - k.clone()) * (p.a.clone() + k),
            BasisKind::B | BasisKind::D => k + p.c()?.clone(),
            BasisKind::C => (T::from_usize(p.n) - p.rho()?.clone()) / T::from_int(2) - k,
            BasisKind::S | BasisKind::Monomial => {
                return Err(Error::WrongKind(format!(
                    "{}-basis eigenvalue",
                    kind.label()
                )))
            }
        })
    }

    /// `X d_n - mu Z d_n`.
    pub fn gevp_residual(&self, index: usize, mu: &T) -> Result<Poly<T>> {
        let d = &self.basis(BasisKind::D).members()[index];
        Ok(self.ops.x()?.apply(d)?.sub(&self.ops.z.apply(d)?.scale(mu)))
    }

    /// Verifies the eigenvalue relation for `kind` polynomial by polynomial,
    /// or the generalized relation `X d_n = (n + c) Z d_n` for the `d` basis
    /// (which follows from `X = Vt Z` and `d_n = Z^-1 b_n`).
    pub fn eigen_check(&self, kind: BasisKind) -> Result<EigenData<T>> {
        let p = &self.params;
        let o = &self.ops;
        let (name, op) = match kind {
            BasisKind::A => ("V", &o.v),
            BasisKind::B => ("Vt", o.vt()?),
            BasisKind::C => ("K1", o.k1()?),
            BasisKind::D => ("X, Z", o.x()?),
            BasisKind::S | BasisKind::Monomial => {
                return Err(Error::WrongKind(format!(
                    "{}-basis eigen relation",
                    kind.label()
                )))
            }
        };
        let mut eigenvalues = Vec::with_capacity(p.n + 1);
        for (i, member) in self.basis(kind).members().iter().enumerate() {
            let mu = self.eigenvalue(kind, i)?;
            let image = op.apply(member)?;
            let target = match kind {
                BasisKind::D => o.z.apply(member)?,
                _ => member.clone(),
            };
            let residual = image.sub(&target.scale(&mu));
            if !residual.is_zero() {
                return Err(Error::EigenMismatch {
                    basis: kind.label().into(),
                    index: i,
                    residual: residual.to_string(),
                });
            }
            eigenvalues.push(mu);
        }
        Ok(EigenData {
            basis_kind: kind,
            operator_name: name.into(),
            eigenvalues,
        })
    }

    /// `K1` and `V` on the split basis; returns their solved matrices.
    pub fn bidiagonal_check(&self) -> Result<(Matrix<T>, Matrix<T>)> {
        Ok((
            self.action_check(Action::K1OnS)?,
            self.action_check(Action::VOnS)?,
        ))
    }

    pub fn tridiag_coeff_check(&self) -> Vec<(Action, Result<Matrix<T>>)> {
        Action::TRIDIAGONAL
            .iter()
            .map(|&action| (action, self.action_check(action)))
            .collect()
    }

    pub fn trio_verdict(&self) -> Result<TrioVerdict> {
        let o = &self.ops;
        let vt = o.vt()?;
        let k1 = o.k1()?;
        let mut evidence = BTreeMap::new();
        for (key, op, kind) in [
            ("V@a", &o.v, BasisKind::A),
            ("Vt@b", vt, BasisKind::B),
            ("K1@c", k1, BasisKind::C),
        ] {
            evidence.insert(key.to_string(), classify(&self.represent(op, kind)?));
        }
        for (key, action) in [
            ("Z@a", Action::ZOnA),
            ("VtZ@a", Action::VtZOnA),
            ("Z@b", Action::ZOnB),
            ("ZV@b", Action::ZVOnB),
            ("K1@a", Action::K1OnA),
            ("V@c", Action::VOnC),
            ("V@s", Action::VOnS),
        ] {
            evidence.insert(key.to_string(), classify(&self.represented_action(action)?));
        }
        let e = |k: &str| evidence[k];
        let is_leonard_trio = e("V@a").is_diagonal_multiplicity_free()
            && e("Z@a").is_tridiagonal()
            && e("VtZ@a").is_tridiagonal()
            && e("Vt@b").is_diagonal_multiplicity_free()
            && e("Z@b").is_tridiagonal()
            && e("ZV@b").is_tridiagonal();
        let is_leonard_pair_vk1 = e("V@a").is_diagonal_multiplicity_free()
            && e("K1@a").is_irreducible_tridiagonal()
            && e("K1@c").is_diagonal_multiplicity_free()
            && e("V@c").is_irreducible_tridiagonal();
        Ok(TrioVerdict {
            is_leonard_trio,
            is_leonard_pair_vk1,
            structure_evidence: evidence,
        })
    }
}

pub fn eigen_check<T: Scalar>(kind: BasisKind, params: &ParamSet<T>) -> Result<EigenData<T>> {
    Model::new(params)?.eigen_check(kind)
}

pub fn bidiagonal_check<T: Scalar>(params: &ParamSet<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    Model::new(params)?.bidiagonal_check()
}

pub fn tridiag_coeff_check<T: Scalar>(
    params: &ParamSet<T>,
) -> Result<Vec<(Action, Result<Matrix<T>>)>> {
    Ok(Model::new(params)?.tridiag_coeff_check())
}

pub fn trio_verdict<T: Scalar>(params: &ParamSet<T>) -> Result<TrioVerdict> {
    Model::new(params)?.trio_verdict()
}
