use serde::Serialize;

use crate::{Error, Result, Scalar};

/// Which realization a parameter set describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Parameters `a, c, rho, N`.
    Standard,
    /// Parameters `a, b, c, N`, optionally `rho` for the Hahn embedding.
    General,
    /// Jacobi differential realization, parameters `a, b`.
    Jacobi,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Standard => "standard",
            Kind::General => "general",
            Kind::Jacobi => "jacobi",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamSet<T> {
    pub kind: Kind,
    pub a: T,
    pub b: Option<T>,
    pub c: Option<T>,
    pub rho: Option<T>,
    pub n: usize,
}

/// Which formulas a genericity factor protects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorScope {
    /// Operators, bases, Hahn polynomials.
    Core,
    /// Hahn rational functions: their connection formulas and biorthogonality.
    RationalFunctions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenericityFactor<T> {
    pub label: String,
    pub value: T,
    pub scope: FactorScope,
}

impl<T: Scalar> ParamSet<T> {
    pub fn standard(a: T, c: T, rho: T, n: usize) -> Self {
        Self {
            kind: Kind::Standard,
            a,
            b: None,
            c: Some(c),
            rho: Some(rho),
            n,
        }
    }

    pub fn general(a: T, b: T, c: T, n: usize) -> Self {
        Self {
            kind: Kind::General,
            a,
            b: Some(b),
            c: Some(c),
            rho: None,
            n,
        }
    }

    pub fn jacobi(a: T, b: T, n: usize) -> Self {
        Self {
            kind: Kind::Jacobi,
            a,
            b: Some(b),
            c: None,
            rho: None,
            n,
        }
    }

    pub fn with_rho(mut self, rho: T) -> Self {
        self.rho = Some(rho);
        self
    }

    pub fn b(&self) -> Result<&T> {
        self.b
            .as_ref()
            .ok_or_else(|| Error::WrongKind("parameter b".into()))
    }

    pub fn c(&self) -> Result<&T> {
        self.c
            .as_ref()
            .ok_or_else(|| Error::WrongKind("parameter c".into()))
    }

    pub fn rho(&self) -> Result<&T> {
        self.rho
            .as_ref()
            .ok_or_else(|| Error::WrongKind("parameter rho".into()))
    }

    pub fn require_kind(&self, kind: Kind, what: &str) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongKind(format!(
                "{what} ({} kind)",
                self.kind.label()
            )));
        }
        Ok(())
    }

    /// Every factor that appears in a denominator (or must be nonzero for a
    /// multiplicity-free spectrum or an irreducible tridiagonal action) in
    /// the formulas for this kind.
    ///
    /// Only the standard kind has such factors; the general and Jacobi
    /// realizations have none.
    pub fn genericity_factors(&self) -> Vec<GenericityFactor<T>> {
        let mut out = Vec::new();
        if self.kind != Kind::Standard {
            return out;
        }
        let n = self.n as i64;
        let a = &self.a;
        let two_a = a.clone() + a.clone();
        let mut push = |label: String, value: T, scope| {
            out.push(GenericityFactor {
                label,
                value,
                scope,
            })
        };
        let core = FactorScope::Core;

        // a-basis actions: (k + a), (k + a - 1)
        for j in -1..=n {
            push(format!("a{j:+}"), a.clone() + T::from_int(j), core);
        }
        // (2a + 2k - 1), (2a)_N, (2a - 1)_k, (k + 2a - 1)_{N+1}, (2a + N)_k, spectrum of V
        for j in -1..2 * n {
            push(format!("2a{j:+}"), two_a.clone() + T::from_int(j), core);
        }
        if let Some(rho) = &self.rho {
            // (a + rho)_N and k + a + rho - 1 in the K1 and V actions
            for j in 0..n {
                push(
                    format!("a+rho{j:+}"),
                    a.clone() + rho.clone() + T::from_int(j),
                    core,
                );
            }
            // (1 - a - N + rho)_N in the polynomial connection formulas
            for j in (1 - n)..=0 {
                push(
                    format!("rho-a{j:+}"),
                    rho.clone() - a.clone() + T::from_int(j),
                    core,
                );
            }
            // (a - rho)_n in the norms, k - rho + a in the K1 action
            for j in 0..n {
                push(
                    format!("a-rho{j:+}"),
                    a.clone() - rho.clone() + T::from_int(j),
                    core,
                );
            }
        }
        if let Some(c) = &self.c {
            let scope = FactorScope::RationalFunctions;
            // lower parameter a + c + l of U_k(N - l; a, -c - N, N) and (1 - a - c - N)_{N-l}
            for j in 0..n {
                push(
                    format!("a+c{j:+}"),
                    a.clone() + c.clone() + T::from_int(j),
                    scope,
                );
            }
            // lower parameter a - c + 1 - l of U_k(l; a, c - 1, N) and (c - a)_l
            for j in 0..n {
                push(
                    format!("a-c{:+}", -j),
                    a.clone() - c.clone() - T::from_int(j),
                    scope,
                );
            }
        }
        out
    }

    fn first_vanishing(&self, scope: FactorScope) -> Option<String> {
        self.genericity_factors()
            .into_iter()
            .find(|f| f.scope == scope && f.value.is_zero())
            .map(|f| f.label)
    }

    /// Fails on the first vanishing core factor.
    pub fn check_generic(&self) -> Result<()> {
        match self.first_vanishing(FactorScope::Core) {
            Some(label) => Err(Error::NonGenericParams(label)),
            None => Ok(()),
        }
    }

    /// Fails on the first vanishing factor needed by the rational functions.
    pub fn check_rational_generic(&self) -> Result<()> {
        match self.first_vanishing(FactorScope::RationalFunctions) {
            Some(label) => Err(Error::NonGenericParams(label)),
            None => Ok(()),
        }
    }

    pub fn is_fully_generic(&self) -> bool {
        self.check_generic().is_ok() && self.check_rational_generic().is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    #[test]
    fn half_is_not_generic() {
        let p = ParamSet::standard(q(1, 2), q(1, 5), q(2, 7), 4);
        assert_eq!(
            p.check_generic(),
            Err(Error::NonGenericParams("2a-1".into()))
        );
    }

    #[test]
    fn equal_a_and_c_only_breaks_rational_side() {
        let p = ParamSet::standard(q(1, 3), q(1, 3), q(2, 7), 4);
        assert!(p.check_generic().is_ok());
        assert_eq!(
            p.check_rational_generic(),
            Err(Error::NonGenericParams("a-c+0".into()))
        );
    }

    #[test]
    fn sample_point_is_generic() {
        assert!(ParamSet::standard(q(1, 3), q(1, 5), q(2, 7), 8).is_fully_generic());
        assert!(ParamSet::general(q(1, 2), q(1, 2), q(0, 1), 3).is_fully_generic());
    }

    #[test]
    fn rho_collisions() {
        // a + rho + 2 = 0 at N = 4
        let p = ParamSet::standard(q(1, 3), q(1, 5), q(-7, 3), 4);
        assert_eq!(
            p.check_generic(),
            Err(Error::NonGenericParams("a+rho+2".into()))
        );
        // a - rho = 0
        let p = ParamSet::standard(q(1, 3), q(1, 5), q(1, 3), 4);
        assert!(p.check_generic().is_err());
    }
}
