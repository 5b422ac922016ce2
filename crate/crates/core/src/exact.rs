//! Pochhammer symbols, generalized binomials, terminating `3F2` sums at unit
//! argument, and the `"p/q"` text form of rationals.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Rational, Result, Scalar};

/// Rising factorial `(z)_n = z (z+1) ... (z+n-1)`, with `(z)_0 = 1`.
pub fn pochhammer<T: Scalar>(z: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, i| acc * (z.clone() + T::from_usize(i)))
}

/// `z (z-1) ... (z-k+1) / k!` for any scalar `z`.
pub fn gen_binomial<T: Scalar>(z: &T, k: usize) -> T {
    let (num, den) = (0..k).fold((T::one(), T::one()), |(num, den), i| {
        (
            num * (z.clone() - T::from_usize(i)),
            den * T::from_usize(i + 1),
        )
    });
    num / den
}

pub fn factorial<T: Scalar>(n: usize) -> T {
    pochhammer(&T::one(), n)
}

/// Ordinary binomial coefficient as a scalar; zero when `k > n`.
pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    gen_binomial(&T::from_usize(n), k)
}

/// Parameters of a terminating `3F2(α1, α2, α3; β1, β2 | 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyp3F2Spec<T> {
    upper: [T; 3],
    lower: [T; 2],
    terms: usize,
}

impl<T: Scalar> Hyp3F2Spec<T> {
    /// The series is summed for `j = 0..=terms`; one upper parameter must
    /// equal `-terms` so that nothing past that index contributes.
    pub fn new(upper: [T; 3], lower: [T; 2], terms: usize) -> Result<Self> {
        let stop = -T::from_usize(terms);
        if !upper.contains(&stop) {
            return Err(Error::NotTerminating(terms));
        }
        Ok(Self {
            upper,
            lower,
            terms,
        })
    }

    pub fn upper(&self) -> &[T; 3] {
        &self.upper
    }

    pub fn lower(&self) -> &[T; 2] {
        &self.lower
    }

    pub fn termination_index(&self) -> usize {
        self.terms
    }
}

/// Exact value of the terminating series described by `spec`.
pub fn hyp3f2_unit<T: Scalar>(spec: &Hyp3F2Spec<T>) -> Result<T> {
    let mut term = T::one();
    let mut sum = T::one();
    for j in 0..spec.terms {
        let shift = T::from_usize(j);
        let mut den = T::from_usize(j + 1);
        for (i, beta) in spec.lower.iter().enumerate() {
            let factor = beta.clone() + shift.clone();
            if factor.is_zero() {
                return Err(Error::DenominatorVanishes(format!(
                    "lower parameter {} = {} gives ({})_{} = 0",
                    i + 1,
                    beta,
                    beta,
                    j + 1
                )));
            }
            den = den * factor;
        }
        let num = spec
            .upper
            .iter()
            .fold(T::one(), |acc, alpha| acc * (alpha.clone() + shift.clone()));
        term = term * num / den;
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// Parses `"p/q"` or `"p"` with an optional leading minus on `p`.
///
/// Decimal forms are rejected so no input is silently rounded.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || !den.is_none_or(digits) {
        return Err(err());
    }
    let p = BigInt::from_str(num).map_err(|_| err())?;
    let q = match den {
        Some(q) => BigInt::from_str(q).map_err(|_| err())?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}

/// Canonical `"p/q"` form, `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&q(7, 3), 0), q(1, 1));
        assert_eq!(pochhammer(&q(1, 2), 3), q(15, 8));
        assert_eq!(pochhammer(&q(-3, 1), 5), q(0, 1));
        assert_eq!(factorial::<Rational>(5), q(120, 1));
    }

    #[test]
    fn gen_binomial_values() {
        assert_eq!(gen_binomial(&q(5, 1), 2), q(10, 1));
        assert_eq!(gen_binomial(&q(-11, 7), 0), q(1, 1));
        assert_eq!(gen_binomial(&q(-1, 2), 2), q(3, 8));
        assert_eq!(binomial::<Rational>(3, 5), q(0, 1));
    }

    #[test]
    fn hyp3f2_values() {
        let zero_top =
            Hyp3F2Spec::new([q(0, 1), q(4, 3), q(-2, 5)], [q(1, 7), q(3, 1)], 0).unwrap();
        assert_eq!(hyp3f2_unit(&zero_top).unwrap(), q(1, 1));

        let s = Hyp3F2Spec::new([q(-1, 1), q(-1, 1), q(2, 1)], [q(3, 1), q(-4, 1)], 1).unwrap();
        assert_eq!(hyp3f2_unit(&s).unwrap(), q(5, 6));

        // upper (-1, -1, 2a), lower (a + rho, -N) at a = rho = 1/2, N = 2
        let s = Hyp3F2Spec::new([q(-1, 1), q(-1, 1), q(1, 1)], [q(1, 1), q(-2, 1)], 1).unwrap();
        assert_eq!(hyp3f2_unit(&s).unwrap(), q(1, 2));
    }

    #[test]
    fn hyp3f2_rejects_non_terminating_and_vanishing_denominators() {
        assert_eq!(
            Hyp3F2Spec::new([q(-1, 1), q(2, 1), q(3, 1)], [q(1, 1), q(1, 1)], 2),
            Err(Error::NotTerminating(2))
        );
        let s = Hyp3F2Spec::new([q(-2, 1), q(1, 1), q(1, 1)], [q(-1, 1), q(5, 1)], 2).unwrap();
        assert!(matches!(
            hyp3f2_unit(&s),
            Err(Error::DenominatorVanishes(_))
        ));
    }

    #[test]
    fn works_over_machine_types() {
        assert_eq!(pochhammer(&Ratio::<i64>::new(1, 2), 3), Ratio::new(15, 8));
        let s = Hyp3F2Spec::new([-1.0, -1.0, 2.0], [3.0, -4.0], 1).unwrap();
        assert!((hyp3f2_unit(&s).unwrap() - 5.0 / 6.0f64).abs() < 1e-12);
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(parse_rational("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert_eq!(format_rational(&q(-3, 2)), "-3/2");
        assert_eq!(format_rational(&q(8, 4)), "2");
        for bad in ["", "1.5", "1/-2", "+3", "1/0", "a/b", "-", "1/", " 1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-60i64..=60, 1i64..=12).prop_map(|(p, d)| q(p, d))
    }

    proptest! {
        #[test]
        fn pochhammer_splits(z in small_rational(), m in 0usize..=20, n in 0usize..=20) {
            let lhs = pochhammer(&z, m + n);
            let rhs = pochhammer(&z, m) * pochhammer(&(z.clone() + Rational::from_usize(m)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_shift_identity(x in small_rational(), a in small_rational(), n in 0usize..=12) {
            let xa = x + a;
            let lhs = xa.clone() * pochhammer(&(xa.clone() + Rational::one()), n);
            let rhs = (xa.clone() + Rational::from_usize(n)) * pochhammer(&xa, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn binomial_matches_factorials(n in 0usize..=20, k in 0usize..=20) {
            prop_assume!(k <= n);
            let expected = factorial::<Rational>(n) / (factorial::<Rational>(k) * factorial::<Rational>(n - k));
            prop_assert_eq!(gen_binomial(&Rational::from_usize(n), k), expected);
        }

        #[test]
        fn hyp3f2_permutation_symmetric(
            m in 0usize..=6,
            u1 in small_rational(),
            u2 in small_rational(),
            l1 in small_rational(),
            l2 in small_rational(),
        ) {
            let stop = -Rational::from_usize(m);
            let base = Hyp3F2Spec::new([stop.clone(), u1.clone(), u2.clone()], [l1.clone(), l2.clone()], m).unwrap();
            let Ok(value) = hyp3f2_unit(&base) else { return Ok(()) };
            let perms = [
                [u1.clone(), stop.clone(), u2.clone()],
                [u2.clone(), u1.clone(), stop.clone()],
            ];
            for upper in perms {
                let s = Hyp3F2Spec::new(upper, [l2.clone(), l1.clone()], m).unwrap();
                prop_assert_eq!(hyp3f2_unit(&s).unwrap(), value.clone());
            }
        }

        #[test]
        fn text_form_round_trips(r in small_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
