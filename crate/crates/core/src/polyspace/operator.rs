use std::ops::{Add, Mul, Neg, Sub};

use super::{Matrix, Poly};
use crate::exact::binomial;
use crate::{Error, Result, Scalar};

/// Linear endomorphism of the polynomials of degree `<= n`.
///
/// Column `j` of the matrix holds the monomial coefficients of the image of
/// `x^j`; the product `A * B` applies `B` first.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator<T> {
    n: usize,
    matrix: Matrix<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketMode {
    Commutator,
    Anticommutator,
}

impl<T: Scalar> Operator<T> {
    pub fn from_matrix(matrix: Matrix<T>) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "operator matrix must be square and nonempty, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self {
            n: matrix.rows() - 1,
            matrix,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn zero(n: usize) -> Self {
        Self::scalar(n, T::zero())
    }

    pub fn scalar(n: usize, s: T) -> Self {
        Self {
            n,
            matrix: Matrix::identity(n + 1).scale(&s),
        }
    }

    /// Maximum degree of the space the operator acts on.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            n: self.n,
            matrix: self.matrix.scale(s),
        }
    }

    /// `self + s * I`.
    pub fn plus_scalar(&self, s: &T) -> Self {
        self + &Self::scalar(self.n, s.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| &acc * self)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, p: &Poly<T>) -> Result<Poly<T>> {
        if let Some(d) = p.degree().filter(|&d| d > self.n) {
            return Err(Error::DegreeMismatch {
                degree: d,
                n: self.n,
            });
        }
        let coeffs = (0..=self.n)
            .map(|i| {
                (0..=self.n).fold(T::zero(), |acc, j| {
                    acc + self.matrix[(i, j)].clone() * p.coeff(j)
                })
            })
            .collect();
        Ok(Poly::from_coeffs(coeffs))
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "operators on degree <= {} and <= {}",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

/// `AB - BA` or `AB + BA`.
pub fn bracket<T: Scalar>(
    a: &Operator<T>,
    b: &Operator<T>,
    mode: BracketMode,
) -> Result<Operator<T>> {
    a.check_dims(b)?;
    let ab = a * b;
    let ba = b * a;
    Ok(match mode {
        BracketMode::Commutator => &ab - &ba,
        BracketMode::Anticommutator => &ab + &ba,
    })
}

/// Commutator of operators already known to share a dimension.
pub fn comm<T: Scalar>(a: &Operator<T>, b: &Operator<T>) -> Operator<T> {
    &(a * b) - &(b * a)
}

pub fn anticomm<T: Scalar>(a: &Operator<T>, b: &Operator<T>) -> Operator<T> {
    &(a * b) + &(b * a)
}

macro_rules! binary_op {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<T: Scalar> $tr for &Operator<T> {
            type Output = Operator<T>;

            fn $method(self, rhs: Self) -> Operator<T> {
                self.check_dims(rhs).expect("operator dimensions");
                Operator {
                    n: self.n,
                    matrix: self
                        .matrix
                        .$inner(&rhs.matrix)
                        .expect("operator dimensions"),
                }
            }
        }
    };
}

binary_op!(Add, add, try_add);
binary_op!(Sub, sub, try_sub);
binary_op!(Mul, mul, try_mul);

impl<T: Scalar> Neg for &Operator<T> {
    type Output = Operator<T>;

    fn neg(self) -> Operator<T> {
        self.scale(&-T::one())
    }
}

/// Extended space of degree `<= n + 2` used to build difference operators.
///
/// Multiplication by `x` drops the top monomial, so only the columns
/// `0..=n` of a product with at most two multiplications are exact. Those
/// are the only columns [`Workspace::restrict`] keeps.
#[derive(Debug, Clone, Copy)]
pub struct Workspace {
    n: usize,
    cap: usize,
}

impl Workspace {
    pub fn new(n: usize) -> Self {
        Self { n, cap: n + 2 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn dim(&self) -> usize {
        self.cap + 1
    }

    pub fn scalar<T: Scalar>(&self, s: T) -> Matrix<T> {
        Matrix::identity(self.dim()).scale(&s)
    }

    /// Multiplication by the polynomial with the given low-to-high coefficients.
    pub fn mul_poly<T: Scalar>(&self, coeffs: &[T]) -> Matrix<T> {
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            if i >= j {
                coeffs.get(i - j).cloned().unwrap_or_else(T::zero)
            } else {
                T::zero()
            }
        })
    }

    /// Multiplication by `x + s`.
    pub fn x_plus<T: Scalar>(&self, s: T) -> Matrix<T> {
        self.mul_poly(&[s, T::one()])
    }

    /// `f(x) -> f(x + s)`.
    pub fn shift<T: Scalar>(&self, s: &T) -> Matrix<T> {
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            if i > j {
                return T::zero();
            }
            let mut power = T::one();
            for _ in 0..(j - i) {
                power = power * s.clone();
            }
            binomial::<T>(j, i) * power
        })
    }

    /// `f -> f'`.
    pub fn derivative<T: Scalar>(&self) -> Matrix<T> {
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            if j == i + 1 {
                T::from_usize(j)
            } else {
                T::zero()
            }
        })
    }

    /// Checks that images of `x^0..x^n` have degree `<= n` and truncates.
    pub fn restrict<T: Scalar>(&self, name: &str, m: &Matrix<T>) -> Result<Operator<T>> {
        for j in 0..=self.n {
            if let Some(i) = (self.n + 1..self.dim())
                .rev()
                .find(|&i| !m[(i, j)].is_zero())
            {
                return Err(Error::ClosureViolation {
                    op: name.to_string(),
                    n: self.n,
                    column: j,
                    degree: i,
                });
            }
        }
        Operator::from_matrix(m.submatrix(self.n + 1, self.n + 1))
    }

    /// The full workspace matrix as an operator on degree `<= cap`.
    pub fn unrestricted<T: Scalar>(&self, m: Matrix<T>) -> Result<Operator<T>> {
        Operator::from_matrix(m)
    }
}
