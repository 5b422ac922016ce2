use std::fmt;

use crate::{Error, Result, Scalar};

/// Polynomial in the monomial basis with a fixed capacity.
///
/// `coeffs[j]` is the coefficient of `x^j`; the vector always has
/// `cap + 1` entries and may carry trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(cap: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); cap + 1],
        }
    }

    pub fn constant(value: T, cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = value;
        p
    }

    pub fn monomial(j: usize, cap: usize) -> Result<Self> {
        if j > cap {
            return Err(Error::CapExceeded { degree: j, cap });
        }
        let mut p = Self::zero(cap);
        p.coeffs[j] = T::one();
        Ok(p)
    }

    /// Takes ownership of a coefficient vector; an empty vector is the zero
    /// polynomial of capacity 0.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Self { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Same polynomial with a different capacity.
    pub fn with_cap(&self, cap: usize) -> Result<Self> {
        if let Some(d) = self.degree().filter(|&d| d > cap) {
            return Err(Error::CapExceeded { degree: d, cap });
        }
        Ok(Self {
            coeffs: (0..=cap).map(|j| self.coeff(j)).collect(),
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap().max(other.cap());
        Self {
            coeffs: (0..=cap).map(|j| self.coeff(j) + other.coeff(j)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    /// Product; errors if the true degree exceeds `cap`.
    pub fn mul(&self, other: &Self, cap: usize) -> Result<Self> {
        let mut out = Self::zero(cap);
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Ok(out);
        };
        if da + db > cap {
            return Err(Error::CapExceeded {
                degree: da + db,
                cap,
            });
        }
        for i in 0..=da {
            for j in 0..=db {
                let acc = std::mem::replace(&mut out.coeffs[i + j], T::zero());
                out.coeffs[i + j] = acc + self.coeffs[i].clone() * other.coeffs[j].clone();
            }
        }
        Ok(out)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

/// Coefficients of `(x + shift)_n`, or of `(shift - x)_n` when `negate_x`.
pub fn poch_poly<T: Scalar>(shift: &T, n: usize, negate_x: bool, cap: usize) -> Result<Poly<T>> {
    if n > cap {
        return Err(Error::CapExceeded { degree: n, cap });
    }
    let x_coeff = if negate_x { -T::one() } else { T::one() };
    let mut p = Poly::constant(T::one(), cap);
    for i in 0..n {
        let factor = Poly::from_coeffs(vec![shift.clone() + T::from_usize(i), x_coeff.clone()]);
        p = p.mul(&factor, cap)?;
    }
    Ok(p)
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for j in (0..=d).rev() {
            let c = &self.coeffs[j];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{j}")?,
            }
        }
        Ok(())
    }
}
