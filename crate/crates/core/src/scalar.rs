use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, NumRef};

/// Field element the core computes over.
///
/// Implemented for every numeric type with field operations and integer
/// conversion: `BigRational` and `Ratio<i64>` give exact results, `f64`
/// gives approximate ones.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + NumRef + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_usize(n: usize) -> Self {
        Self::from_int(i64::try_from(n).expect("index fits in i64"))
    }

    /// `p / q` as a scalar.
    fn ratio(p: i64, q: i64) -> Self {
        Self::from_int(p) / Self::from_int(q)
    }

    /// `(-1)^n`.
    fn sign(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T
where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + NumRef
        + Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        T::from_i64(n).expect("integer representable in scalar type")
    }
}
