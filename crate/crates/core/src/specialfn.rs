//! Hahn polynomials `Q_k(l)`, Hahn rational functions `U_k(l; a, c, N)`,
//! connection matrices between the distinguished bases, and the
//! orthogonality, biorthogonality and bispectral identities.

use serde::Serialize;

use crate::algebra::{Kind, ParamSet};
use crate::bases::{closed_form, Action, Model};
use crate::exact::{binomial, factorial, gen_binomial, hyp3f2_unit, pochhammer, Hyp3F2Spec};
use crate::polyspace::{change_of_basis, BasisKind, Matrix};
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct HahnParams<T> {
    pub a: T,
    pub rho: T,
    pub n: usize,
}

impl<T: Scalar> HahnParams<T> {
    pub fn new(a: T, rho: T, n: usize) -> Self {
        Self { a, rho, n }
    }

    pub fn from_params(params: &ParamSet<T>) -> Result<Self> {
        params.require_kind(Kind::Standard, "Hahn polynomials")?;
        Ok(Self::new(params.a.clone(), params.rho()?.clone(), params.n))
    }
}

fn check_index(k: usize, l: usize, n: usize) -> Result<()> {
    if k > n || l > n {
        return Err(Error::DimensionMismatch(format!(
            "index ({k}, {l}) outside 0..={n}"
        )));
    }
    Ok(())
}

/// `3F2(-k, -l, k+2a-1; a+rho, -N; 1)`.
pub fn hahn_q<T: Scalar>(k: usize, l: usize, p: &HahnParams<T>) -> Result<T> {
    check_index(k, l, p.n)?;
    let one = T::one();
    let upper = [
        -T::from_usize(k),
        -T::from_usize(l),
        T::from_usize(k) + p.a.clone() + p.a.clone() - one,
    ];
    let lower = [p.a.clone() + p.rho.clone(), -T::from_usize(p.n)];
    hyp3f2_unit(&Hyp3F2Spec::new(upper, lower, k.min(l))?)
}

/// `3F2(-k, -l, k+2a-1; a-c-l, -N; 1)`.
pub fn rational_u<T: Scalar>(k: usize, l: usize, a: &T, c: &T, n: usize) -> Result<T> {
    check_index(k, l, n)?;
    let one = T::one();
    let upper = [
        -T::from_usize(k),
        -T::from_usize(l),
        T::from_usize(k) + a.clone() + a.clone() - one,
    ];
    let lower = [a.clone() - c.clone() - T::from_usize(l), -T::from_usize(n)];
    hyp3f2_unit(&Hyp3F2Spec::new(upper, lower, k.min(l))?)
}

/// Entry `(k, l)` is `Q_k(l)`.
pub fn hahn_q_table<T: Scalar>(p: &HahnParams<T>) -> Result<Matrix<T>> {
    table(p.n, |k, l| hahn_q(k, l, p))
}

/// Entry `(k, l)` is `U_k(l; a, c, N)`.
pub fn rational_u_table<T: Scalar>(a: &T, c: &T, n: usize) -> Result<Matrix<T>> {
    table(n, |k, l| rational_u(k, l, a, c, n))
}

fn table<T: Scalar>(n: usize, f: impl Fn(usize, usize) -> Result<T>) -> Result<Matrix<T>> {
    let mut m = Matrix::zeros(n + 1, n + 1);
    for k in 0..=n {
        for l in 0..=n {
            m[(k, l)] = f(k, l)?;
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ConnectionKind {
    #[serde(rename = "a->c")]
    AToC,
    #[serde(rename = "c->a")]
    CToA,
    #[serde(rename = "a->b")]
    AToB,
    #[serde(rename = "b->a")]
    BToA,
    #[serde(rename = "a->s")]
    AToS,
    #[serde(rename = "s->c")]
    SToC,
    #[serde(rename = "s->b")]
    SToB,
    #[serde(rename = "b->s")]
    BToS,
}

impl ConnectionKind {
    pub const ALL: [ConnectionKind; 8] = [
        ConnectionKind::AToC,
        ConnectionKind::CToA,
        ConnectionKind::AToB,
        ConnectionKind::BToA,
        ConnectionKind::AToS,
        ConnectionKind::SToC,
        ConnectionKind::SToB,
        ConnectionKind::BToS,
    ];

    /// `(from, to)`.
    pub fn endpoints(self) -> (BasisKind, BasisKind) {
        use BasisKind::*;
        match self {
            ConnectionKind::AToC => (A, C),
            ConnectionKind::CToA => (C, A),
            ConnectionKind::AToB => (A, B),
            ConnectionKind::BToA => (B, A),
            ConnectionKind::AToS => (A, S),
            ConnectionKind::SToC => (S, C),
            ConnectionKind::SToB => (S, B),
            ConnectionKind::BToS => (B, S),
        }
    }

    pub fn label(self) -> String {
        let (from, to) = self.endpoints();
        format!("{}->{}", from.label(), to.label())
    }

    /// Whether the closed form involves the Hahn rational functions.
    pub fn is_rational(self) -> bool {
        matches!(self, ConnectionKind::AToB | ConnectionKind::BToA)
    }
}

/// Closed-form connection matrix `G`: `from_j = sum_i G[i][j] to_i`.
pub fn closed_connection<T: Scalar>(
    kind: ConnectionKind,
    params: &ParamSet<T>,
) -> Result<Matrix<T>> {
    params.require_kind(Kind::Standard, "connection formulas")?;
    let n = params.n;
    let a = params.a.clone();
    let c = params.c()?.clone();
    let rho = params.rho()?.clone();
    let one = T::one();
    let two_a = a.clone() + a.clone();
    let big_n = T::from_usize(n);
    let minus_n = -big_n.clone();
    let hp = HahnParams::new(a.clone(), rho.clone(), n);
    let q = match kind {
        ConnectionKind::AToC | ConnectionKind::CToA => Some(hahn_q_table(&hp)?),
        _ => None,
    };
    let u = match kind {
        // U_k(N - l; a, -c - N, N)
        ConnectionKind::AToB => Some(table(n, |k, l| {
            rational_u(k, n - l, &a, &(-c.clone() - big_n.clone()), n)
        })?),
        ConnectionKind::BToA => Some(rational_u_table(&a, &(c.clone() - one.clone()), n)?),
        _ => None,
    };
    let q = |k: usize, l: usize| q.as_ref().expect("Q table")[(k, l)].clone();
    let u = |k: usize, l: usize| u.as_ref().expect("U table")[(k, l)].clone();
    let dim = n + 1;
    let mut g = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let entry = match kind {
                ConnectionKind::AToC => {
                    let (l, k) = (i, j);
                    let shifted = one.clone() - a.clone() - big_n.clone() + rho.clone();
                    pochhammer(&(a.clone() + rho.clone()), k)
                        * pochhammer(&shifted, n - k)
                        * pochhammer(&minus_n, l)
                        / (factorial::<T>(l) * pochhammer(&shifted, l))
                        * q(k, l)
                }
                ConnectionKind::CToA => {
                    let (k, l) = (i, j);
                    let kk = T::from_usize(k);
                    T::sign(n)
                        * pochhammer(&(a.clone() + rho.clone()), l)
                        * (kk.clone() + kk.clone() + two_a.clone() - one.clone())
                        * pochhammer(&minus_n, k)
                        / (factorial::<T>(k)
                            * pochhammer(&(kk + two_a.clone() - one.clone()), n + 1))
                        * q(k, l)
                }
                ConnectionKind::AToB => {
                    let (l, k) = (i, j);
                    binomial::<T>(n, l)
                        * pochhammer(
                            &(one.clone() - a.clone() - c.clone() - big_n.clone()),
                            n - l,
                        )
                        * u(k, l)
                }
                ConnectionKind::BToA => {
                    let (k, l) = (i, j);
                    let kk = T::from_usize(k);
                    let two_k = kk.clone() + kk;
                    T::sign(n) * pochhammer(&(c.clone() - a.clone()), l) / pochhammer(&two_a, n)
                        * (one.clone() - two_a.clone() - two_k)
                        / (one.clone() - two_a.clone())
                        * pochhammer(&minus_n, k)
                        * pochhammer(&(two_a.clone() - one.clone()), k)
                        / (factorial::<T>(k) * pochhammer(&(two_a.clone() + big_n.clone()), k))
                        * u(k, l)
                }
                ConnectionKind::AToS => {
                    let (s, k) = (i, j);
                    if s < k {
                        T::zero()
                    } else {
                        T::sign(s + n)
                            * binomial::<T>(n - k, s - k)
                            * pochhammer(&(T::from_usize(k + s) + two_a.clone()), n - s)
                    }
                }
                ConnectionKind::SToC => {
                    let (l, s) = (i, j);
                    T::sign(l)
                        * binomial::<T>(s, l)
                        * pochhammer(
                            &(T::from_usize(l) + a.clone() + rho.clone()),
                            s.saturating_sub(l),
                        )
                        * if l <= s { one.clone() } else { T::zero() }
                }
                ConnectionKind::SToB => {
                    let (l, s) = (i, j);
                    binomial::<T>(s, l) * pochhammer(&(a.clone() - c.clone()), s.saturating_sub(l))
                }
                ConnectionKind::BToS => {
                    let (s, l) = (i, j);
                    binomial::<T>(l, s) * pochhammer(&(c.clone() - a.clone()), l.saturating_sub(s))
                }
            };
            g[(i, j)] = entry;
        }
    }
    Ok(g)
}

/// Exact change-of-basis matrix, independent of the closed forms.
pub fn oracle_connection<T: Scalar>(kind: ConnectionKind, model: &Model<T>) -> Result<Matrix<T>> {
    let (from, to) = kind.endpoints();
    change_of_basis(model.basis(from), model.basis(to))
}

/// Closed form, checked entrywise against the exact change of basis.
pub fn connection_matrix<T: Scalar>(kind: ConnectionKind, model: &Model<T>) -> Result<Matrix<T>> {
    let closed = closed_connection(kind, model.params())?;
    let solved = oracle_connection(kind, model)?;
    if let Some((row, col)) = first_difference(&closed, &solved) {
        return Err(Error::OracleMismatch {
            kind: kind.label(),
            row,
            col,
            closed: closed[(row, col)].to_string(),
            solved: solved[(row, col)].to_string(),
        });
    }
    Ok(closed)
}

fn first_difference<T: Scalar>(x: &Matrix<T>, y: &Matrix<T>) -> Option<(usize, usize)> {
    (0..x.rows())
        .flat_map(|i| (0..x.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| x[(i, j)] != y[(i, j)])
}

/// Weighted sum of `Q_m Q_n` and its closed-form value.
pub fn orthogonality_check<T: Scalar>(p: &HahnParams<T>, m: usize, n: usize) -> Result<(T, T)> {
    check_index(m, n, p.n)?;
    let big_n = p.n;
    let one = T::one();
    let a = &p.a;
    let rho = &p.rho;
    let mut lhs = T::zero();
    for l in 0..=big_n {
        let ll = T::from_usize(l);
        let w = gen_binomial(&(a.clone() + rho.clone() - one.clone() + ll.clone()), l)
            * gen_binomial(
                &(a.clone() + T::from_usize(big_n) - one.clone() - rho.clone() - ll),
                big_n - l,
            );
        lhs = lhs + w * hahn_q(m, l, p)? * hahn_q(n, l, p)?;
    }
    let rhs = if m == n {
        orthogonality_norm(p, n)
    } else {
        T::zero()
    };
    if lhs != rhs {
        return Err(Error::IdentityFailure {
            name: format!("orthogonality m={m} n={n}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok((lhs, rhs))
}

/// Every pair `(m, n)` of [`orthogonality_check`], evaluating each
/// `Q_k(l)` once.
pub fn orthogonality_all<T: Scalar>(p: &HahnParams<T>) -> Result<()> {
    let big_n = p.n;
    let one = T::one();
    let a = &p.a;
    let rho = &p.rho;
    let q = hahn_q_table(p)?;
    let weights: Vec<T> = (0..=big_n)
        .map(|l| {
            let ll = T::from_usize(l);
            gen_binomial(&(a.clone() + rho.clone() - one.clone() + ll.clone()), l)
                * gen_binomial(
                    &(a.clone() + T::from_usize(big_n) - one.clone() - rho.clone() - ll),
                    big_n - l,
                )
        })
        .collect();
    for m in 0..=big_n {
        for n in m..=big_n {
            let lhs = (0..=big_n).fold(T::zero(), |acc, l| {
                acc + weights[l].clone() * &q[(m, l)] * &q[(n, l)]
            });
            let rhs = if m == n {
                orthogonality_norm(p, n)
            } else {
                T::zero()
            };
            if lhs != rhs {
                return Err(Error::IdentityFailure {
                    name: format!("orthogonality m={m} n={n}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Right-hand side of the orthogonality relation at `m = n`.
pub fn orthogonality_norm<T: Scalar>(p: &HahnParams<T>, n: usize) -> T {
    let one = T::one();
    let a = &p.a;
    let nn = T::from_usize(n);
    let two_a = a.clone() + a.clone();
    T::sign(n)
        * factorial::<T>(n)
        * pochhammer(&(nn.clone() + two_a.clone() - one.clone()), p.n + 1)
        * pochhammer(&(a.clone() - p.rho.clone()), n)
        / ((nn.clone() + nn + two_a - one)
            * pochhammer(&(a.clone() + p.rho.clone()), n)
            * pochhammer(&-T::from_usize(p.n), n)
            * factorial::<T>(p.n))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BiorthoData<T> {
    pub weights: Vec<T>,
    pub norms: Vec<T>,
}

/// `W(l) = C(N, l) (1-a-c-N)_{N-l} (c-a)_l`.
pub fn biortho_weight<T: Scalar>(l: usize, a: &T, c: &T, n: usize) -> T {
    binomial::<T>(n, l)
        * pochhammer(
            &(T::one() - a.clone() - c.clone() - T::from_usize(n)),
            n - l,
        )
        * pochhammer(&(c.clone() - a.clone()), l)
}

/// `h_k = (-1)^N (1-2a) (2a)_N k! (2a+N)_k / ((1-2a-2k) (-N)_k (2a-1)_k)`.
pub fn biortho_norm<T: Scalar>(k: usize, a: &T, n: usize) -> T {
    let one = T::one();
    let two_a = a.clone() + a.clone();
    let kk = T::from_usize(k);
    T::sign(n)
        * (one.clone() - two_a.clone())
        * pochhammer(&two_a, n)
        * factorial::<T>(k)
        * pochhammer(&(two_a.clone() + T::from_usize(n)), k)
        / ((one.clone() - two_a.clone() - kk.clone() - kk)
            * pochhammer(&-T::from_usize(n), k)
            * pochhammer(&(two_a - one), k))
}

/// Both biorthogonality relations for every index pair.
pub fn biorthogonality_check<T: Scalar>(a: &T, c: &T, n: usize) -> Result<BiorthoData<T>> {
    let one = T::one();
    let weights: Vec<T> = (0..=n).map(|l| biortho_weight(l, a, c, n)).collect();
    let norms: Vec<T> = (0..=n).map(|k| biortho_norm(k, a, n)).collect();
    if let Some(l) = weights.iter().position(|w| w.is_zero()) {
        return Err(Error::DenominatorVanishes(format!("weight W({l})")));
    }
    if let Some(k) = norms.iter().position(|h| h.is_zero()) {
        return Err(Error::DenominatorVanishes(format!("norm h_{k}")));
    }
    // left[k][l] = U_k(l; a, c-1, N), right[k][l] = U_k(N-l; a, -c-N, N)
    let left = rational_u_table(a, &(c.clone() - one.clone()), n)?;
    let dual_c = -c.clone() - T::from_usize(n);
    let right = table(n, |k, l| rational_u(k, n - l, a, &dual_c, n))?;
    for s in 0..=n {
        for k in 0..=n {
            let lhs = (0..=n).fold(T::zero(), |acc, l| {
                acc + weights[l].clone() * left[(s, l)].clone() * right[(k, l)].clone()
            });
            let rhs = if k == s { norms[k].clone() } else { T::zero() };
            if lhs != rhs {
                return Err(Error::IdentityFailure {
                    name: format!("biorthogonality s={s} k={k}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    for l in 0..=n {
        for lp in 0..=n {
            let lhs = (0..=n).fold(T::zero(), |acc, k| {
                acc + left[(k, l)].clone() * right[(k, lp)].clone() / norms[k].clone()
            });
            let rhs = if l == lp {
                one.clone() / weights[l].clone()
            } else {
                T::zero()
            };
            if lhs != rhs {
                return Err(Error::IdentityFailure {
                    name: format!("dual biorthogonality l={l} l'={lp}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Ok(BiorthoData { weights, norms })
}

/// Checks `g * left == right * g`, i.e. that `g` intertwines the two
/// matrix representations of one operator.
pub fn conjugation_identity<T: Scalar>(
    name: &str,
    g: &Matrix<T>,
    left: &Matrix<T>,
    right: &Matrix<T>,
) -> Result<()> {
    let lhs = g.try_mul(left)?;
    let rhs = right.try_mul(g)?;
    if let Some((i, j)) = first_difference(&lhs, &rhs) {
        return Err(Error::IdentityFailure {
            name: format!("{name} at ({i}, {j})"),
            lhs: lhs[(i, j)].to_string(),
            rhs: rhs[(i, j)].to_string(),
        });
    }
    Ok(())
}

/// Which side of the bispectral check to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BispectralSide {
    Polynomial,
    Rational,
}

/// Names of the intertwining identities checked on `side`.
pub fn bispectral_identities(side: BispectralSide) -> &'static [&'static str] {
    match side {
        BispectralSide::Polynomial => &["K1 recurrence", "V difference"],
        BispectralSide::Rational => &["Z", "Vt Z", "Z V"],
    }
}

/// Recurrence / difference equations for `Q` (via the a->c matrix) or the
/// generalized eigenvalue problems for `U` (via the a->b matrix), written as
/// `G [op]_a = [op]_target G` with every factor in closed form.
pub fn bispectral_consistency<T: Scalar>(params: &ParamSet<T>, side: BispectralSide) -> Result<()> {
    let kind = match side {
        BispectralSide::Polynomial => ConnectionKind::AToC,
        BispectralSide::Rational => ConnectionKind::AToB,
    };
    bispectral_with(params, side, &closed_connection(kind, params)?)
}

/// As [`bispectral_consistency`] with a caller-supplied connection matrix.
pub fn bispectral_with<T: Scalar>(
    params: &ParamSet<T>,
    side: BispectralSide,
    g: &Matrix<T>,
) -> Result<()> {
    params.check_generic()?;
    let n = params.n;
    let a = params.a.clone();
    let one = T::one();
    let v_on_a = Matrix::diagonal(
        &(0..=n)
            .map(|k| {
                let kk = T::from_usize(k);
                (one.clone() - a.clone() - kk.clone()) * (a.clone() + kk)
            })
            .collect::<Vec<_>>(),
    );
    match side {
        BispectralSide::Polynomial => {
            let rho = params.rho()?.clone();
            let k1_on_c = Matrix::diagonal(
                &(0..=n)
                    .map(|l| (T::from_usize(n) - rho.clone()) / T::from_int(2) - T::from_usize(l))
                    .collect::<Vec<_>>(),
            );
            conjugation_identity(
                "K1 recurrence",
                g,
                &closed_form(Action::K1OnA, params)?,
                &k1_on_c,
            )?;
            conjugation_identity(
                "V difference",
                g,
                &v_on_a,
                &closed_form(Action::VOnC, params)?,
            )?;
        }
        BispectralSide::Rational => {
            let c = params.c()?.clone();
            let z_a = closed_form(Action::ZOnA, params)?;
            let z_b = closed_form(Action::ZOnB, params)?;
            let vt_b = Matrix::diagonal(
                &(0..=n)
                    .map(|l| T::from_usize(l) + c.clone())
                    .collect::<Vec<_>>(),
            );
            conjugation_identity("Z", g, &z_a, &z_b)?;
            conjugation_identity(
                "Vt Z",
                g,
                &closed_form(Action::VtZOnA, params)?,
                &vt_b.try_mul(&z_b)?,
            )?;
            conjugation_identity(
                "Z V",
                g,
                &z_a.try_mul(&v_on_a)?,
                &closed_form(Action::ZVOnB, params)?,
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
