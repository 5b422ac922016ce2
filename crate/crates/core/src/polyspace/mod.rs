//! The model space of polynomials of degree `<= N`: polynomial vectors,
//! operator matrices, basis changes and band-structure classification.

mod matrix;
mod operator;
mod poly;

use serde::Serialize;

pub use matrix::Matrix;
pub use operator::{anticomm, bracket, comm, BracketMode, Operator, Workspace};
pub use poly::{poch_poly, Poly};

use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    A,
    B,
    C,
    D,
    S,
    Monomial,
}

impl BasisKind {
    pub fn label(self) -> &'static str {
        match self {
            BasisKind::A => "a",
            BasisKind::B => "b",
            BasisKind::C => "c",
            BasisKind::D => "d",
            BasisKind::S => "s",
            BasisKind::Monomial => "monomial",
        }
    }
}

/// An ordered basis of the polynomials of degree `<= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisFamily<T> {
    kind: BasisKind,
    members: Vec<Poly<T>>,
    matrix: Matrix<T>,
    inverse: Matrix<T>,
}

impl<T: Scalar> BasisFamily<T> {
    /// Fails with `SingularBasis` unless the members are linearly independent.
    pub fn new(kind: BasisKind, members: Vec<Poly<T>>) -> Result<Self> {
        let dim = members.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("empty basis".into()));
        }
        let mut columns = Vec::with_capacity(dim);
        for p in &members {
            columns.push(p.with_cap(dim - 1)?.coeffs().to_vec());
        }
        let matrix = Matrix::from_columns(dim, &columns);
        let inverse = matrix.inverse()?;
        Ok(Self {
            kind,
            members,
            matrix,
            inverse,
        })
    }

    pub fn monomial(n: usize) -> Self {
        let members = (0..=n)
            .map(|j| Poly::monomial(j, n).expect("j <= n"))
            .collect();
        Self::new(BasisKind::Monomial, members).expect("monomials are independent")
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn members(&self) -> &[Poly<T>] {
        &self.members
    }

    pub fn n(&self) -> usize {
        self.members.len() - 1
    }

    /// Columns are the monomial coordinates of the members.
    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    /// Maps monomial coordinates to coordinates in this basis.
    pub fn inverse(&self) -> &Matrix<T> {
        &self.inverse
    }
}

/// `M` with `op(basis_j) = sum_i M[i][j] basis_i`.
pub fn matrix_in_basis<T: Scalar>(op: &Operator<T>, basis: &BasisFamily<T>) -> Result<Matrix<T>> {
    if op.n() != basis.n() {
        return Err(Error::DimensionMismatch(format!(
            "operator on degree <= {} and basis of size {}",
            op.n(),
            basis.n() + 1
        )));
    }
    let images = op.matrix().try_mul(basis.matrix())?;
    basis.inverse().try_mul(&images)
}

/// `G` with `from_k = sum_l G[l][k] to_l`.
pub fn change_of_basis<T: Scalar>(from: &BasisFamily<T>, to: &BasisFamily<T>) -> Result<Matrix<T>> {
    if from.n() != to.n() {
        return Err(Error::DimensionMismatch(format!(
            "bases of size {} and {}",
            from.n() + 1,
            to.n() + 1
        )));
    }
    to.inverse().try_mul(from.matrix())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureTag {
    Zero,
    Scalar,
    Diagonal,
    UpperBidiagonal,
    LowerBidiagonal,
    Tridiagonal,
    IrreducibleTridiagonal,
    Other,
}

/// Finest band shape of a square matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureClass {
    pub tag: StructureTag,
    /// For diagonal shapes: whether the diagonal entries are pairwise distinct.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity_free: Option<bool>,
    pub dim: usize,
}

impl StructureClass {
    /// Tridiagonal in the wide sense: diagonal and bidiagonal shapes count.
    pub fn is_tridiagonal(&self) -> bool {
        self.tag != StructureTag::Other
    }

    /// Irreducible tridiagonal; a 1x1 matrix qualifies vacuously.
    pub fn is_irreducible_tridiagonal(&self) -> bool {
        self.tag == StructureTag::IrreducibleTridiagonal || (self.dim == 1 && self.is_tridiagonal())
    }

    pub fn is_diagonal_multiplicity_free(&self) -> bool {
        self.multiplicity_free == Some(true)
    }
}

pub fn classify<T: Scalar>(m: &Matrix<T>) -> StructureClass {
    let dim = m.rows();
    let other = StructureClass {
        tag: StructureTag::Other,
        multiplicity_free: None,
        dim,
    };
    if !m.is_square() {
        return other;
    }
    let mut off_band = false;
    let (mut upper, mut lower) = (0usize, 0usize);
    for i in 0..dim {
        for j in 0..dim {
            if m[(i, j)].is_zero() || i == j {
                continue;
            }
            if i + 1 == j {
                upper += 1;
            } else if j + 1 == i {
                lower += 1;
            } else {
                off_band = true;
            }
        }
    }
    if off_band {
        return other;
    }
    if upper == 0 && lower == 0 {
        let diag: Vec<T> = (0..dim).map(|i| m[(i, i)].clone()).collect();
        let distinct = diag
            .iter()
            .enumerate()
            .all(|(i, d)| diag[i + 1..].iter().all(|e| e != d));
        let tag = if diag.iter().all(|d| d.is_zero()) {
            StructureTag::Zero
        } else if diag.iter().all(|d| *d == diag[0]) {
            StructureTag::Scalar
        } else {
            StructureTag::Diagonal
        };
        return StructureClass {
            tag,
            multiplicity_free: Some(distinct),
            dim,
        };
    }
    let band = dim.saturating_sub(1);
    let tag = if lower == 0 {
        StructureTag::UpperBidiagonal
    } else if upper == 0 {
        StructureTag::LowerBidiagonal
    } else if upper == band && lower == band {
        StructureTag::IrreducibleTridiagonal
    } else {
        StructureTag::Tridiagonal
    };
    StructureClass {
        tag,
        multiplicity_free: None,
        dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| q(rows[i][j], 1))
    }

    #[test]
    fn classification_tags() {
        let c = classify(&mat(&[&[1, 0], &[0, 2]]));
        assert_eq!(
            (c.tag, c.multiplicity_free),
            (StructureTag::Diagonal, Some(true))
        );
        let c = classify(&mat(&[&[3, 0], &[0, 3]]));
        assert_eq!(
            (c.tag, c.multiplicity_free),
            (StructureTag::Scalar, Some(false))
        );
        assert_eq!(classify(&mat(&[&[0, 0], &[0, 0]])).tag, StructureTag::Zero);
        assert_eq!(
            classify(&mat(&[&[1, 1], &[0, 2]])).tag,
            StructureTag::UpperBidiagonal
        );
        assert_eq!(
            classify(&mat(&[&[1, 0], &[1, 2]])).tag,
            StructureTag::LowerBidiagonal
        );
        assert_eq!(
            classify(&mat(&[&[1, 1], &[1, 2]])).tag,
            StructureTag::IrreducibleTridiagonal
        );
        let reducible = mat(&[&[1, 1, 0], &[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(classify(&reducible).tag, StructureTag::Tridiagonal);
        assert_eq!(
            classify(&mat(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]])).tag,
            StructureTag::Other
        );
        let one = classify(&mat(&[&[5]]));
        assert!(one.is_irreducible_tridiagonal() && one.is_diagonal_multiplicity_free());
    }

    fn shifted_basis(n: usize, shift: &Rational) -> BasisFamily<Rational> {
        let members = (0..=n)
            .map(|k| poch_poly(shift, k, false, n).unwrap())
            .collect();
        BasisFamily::new(BasisKind::S, members).unwrap()
    }

    #[test]
    fn identity_in_any_basis_is_identity() {
        let b = shifted_basis(4, &q(2, 3));
        assert_eq!(
            matrix_in_basis(&Operator::identity(4), &b).unwrap(),
            Matrix::identity(5)
        );
        assert_eq!(change_of_basis(&b, &b).unwrap(), Matrix::identity(5));
    }

    #[test]
    fn dependent_members_are_singular() {
        let p = poch_poly(&q(1, 1), 1, false, 1).unwrap();
        assert_eq!(
            BasisFamily::new(BasisKind::A, vec![p.clone(), p]).unwrap_err(),
            Error::SingularBasis
        );
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=5).prop_map(|(p, d)| q(p, d))
    }

    proptest! {
        #[test]
        fn basis_changes_invert(n in 1usize..=5, s1 in rational(), s2 in rational()) {
            let b1 = shifted_basis(n, &s1);
            let b2 = shifted_basis(n, &s2);
            let g12 = change_of_basis(&b1, &b2).unwrap();
            let g21 = change_of_basis(&b2, &b1).unwrap();
            prop_assert_eq!(&g12 * &g21, Matrix::identity(n + 1));
        }

        #[test]
        fn matrix_in_basis_is_conjugation(n in 1usize..=4, s in rational(), entries in prop::collection::vec(rational(), 25)) {
            let op = Operator::from_matrix(Matrix::from_fn(n + 1, n + 1, |i, j| entries[i * 5 + j].clone())).unwrap();
            let b = shifted_basis(n, &s);
            let g = change_of_basis(&b, &BasisFamily::monomial(n)).unwrap();
            let expected = &g.inverse().unwrap() * &(op.matrix() * &g);
            prop_assert_eq!(matrix_in_basis(&op, &b).unwrap(), expected);
        }

        #[test]
        fn apply_is_linear(entries in prop::collection::vec(rational(), 16), p in prop::collection::vec(rational(), 4),
                           r in prop::collection::vec(rational(), 4), alpha in rational(), beta in rational()) {
            let op = Operator::from_matrix(Matrix::from_fn(4, 4, |i, j| entries[i * 4 + j].clone())).unwrap();
            let p = Poly::from_coeffs(p);
            let r = Poly::from_coeffs(r);
            let lhs = op.apply(&p.scale(&alpha).add(&r.scale(&beta))).unwrap();
            let rhs = op.apply(&p).unwrap().scale(&alpha).add(&op.apply(&r).unwrap().scale(&beta));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bracket_symmetries(e1 in prop::collection::vec(rational(), 9), e2 in prop::collection::vec(rational(), 9)) {
            let a = Operator::from_matrix(Matrix::from_fn(3, 3, |i, j| e1[i * 3 + j].clone())).unwrap();
            let b = Operator::from_matrix(Matrix::from_fn(3, 3, |i, j| e2[i * 3 + j].clone())).unwrap();
            let ab = bracket(&a, &b, BracketMode::Commutator).unwrap();
            let ba = bracket(&b, &a, BracketMode::Commutator).unwrap();
            prop_assert_eq!(ab, -&ba);
            prop_assert_eq!(
                bracket(&a, &b, BracketMode::Anticommutator).unwrap(),
                bracket(&b, &a, BracketMode::Anticommutator).unwrap()
            );
        }
    }
}
