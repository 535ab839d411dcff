//! Triangular normal forms of lattice bases.
//!
//! Two normal forms appear, and they differ in which side the unimodular
//! change of basis acts on:
//!
//! * [`normalize_ambient`] changes the basis of the ambient lattice, so it acts
//!   by row operations (`U * m`). Off-diagonal entries land in `(-m_jj, 0]`,
//!   bounded by the diagonal entry of their *column*.
//! * [`normalize_sublattice`] changes the basis of a sublattice, so it acts by
//!   column operations (`m * V`). Off-diagonal entries land in `[0, m_ii)`,
//!   bounded by the diagonal entry of their *row*.
//!
//! [`congruence_sublattice`] builds the sublattice normal form of
//! `{c : sum c_i a_i in Z}` directly from the rationals `a_i`, and
//! [`dual_primitive_type`] turns a sublattice normal form into the type matrix
//! of the primitive edge vectors inside that sublattice.

use std::fmt;
use std::ops::Deref;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::algebra::{lcm_prefix_denominators, mod_inverse, rat_int, Integer, Rational, TriMatrix};
use crate::error::{Error, Result};

/// Type matrix: `v_j = -sum_{i<j} a_ij e_i + a_jj e_j` with `0 <= a_ij < a_jj`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AmbientNormalForm(TriMatrix);

/// Sublattice basis `w'_j = sum_{i<=j} r_ij w_i` with `0 <= r_ij < r_ii`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SublatticeNormalForm(TriMatrix);

impl AmbientNormalForm {
    /// Checks the normal-form inequalities; use [`normalize_ambient`] otherwise.
    pub fn from_matrix(m: TriMatrix) -> Result<Self> {
        check_integral_nonsingular(&m)?;
        for j in 0..m.dim() {
            let a = m.get(j, j);
            if !a.is_positive() {
                return Err(Error::InvalidInput(format!("diagonal entry ({0},{0}) not positive", j + 1)));
            }
            for i in 0..j {
                let x = m.get(i, j);
                if x.is_positive() || -x >= *a {
                    return Err(Error::InvalidInput(format!(
                        "entry ({}, {}) = {x} outside (-{a}, 0]",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(AmbientNormalForm(m))
    }

    pub fn identity(dim: usize) -> Self {
        AmbientNormalForm(TriMatrix::identity(dim))
    }

    pub fn matrix(&self) -> &TriMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> TriMatrix {
        self.0
    }
}

impl SublatticeNormalForm {
    /// Checks the normal-form inequalities; use [`normalize_sublattice`] otherwise.
    pub fn from_matrix(m: TriMatrix) -> Result<Self> {
        check_integral_nonsingular(&m)?;
        for i in 0..m.dim() {
            let r = m.get(i, i);
            if !r.is_positive() {
                return Err(Error::InvalidInput(format!("diagonal entry ({0},{0}) not positive", i + 1)));
            }
            for j in (i + 1)..m.dim() {
                let x = m.get(i, j);
                if x.is_negative() || x >= r {
                    return Err(Error::InvalidInput(format!(
                        "entry ({}, {}) = {x} outside [0, {r})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(SublatticeNormalForm(m))
    }

    pub fn identity(dim: usize) -> Self {
        SublatticeNormalForm(TriMatrix::identity(dim))
    }

    pub fn matrix(&self) -> &TriMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> TriMatrix {
        self.0
    }
}

impl Deref for AmbientNormalForm {
    type Target = TriMatrix;
    fn deref(&self) -> &TriMatrix {
        &self.0
    }
}

impl Deref for SublatticeNormalForm {
    type Target = TriMatrix;
    fn deref(&self) -> &TriMatrix {
        &self.0
    }
}

impl fmt::Display for AmbientNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for SublatticeNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_integral_nonsingular(m: &TriMatrix) -> Result<()> {
    if !m.is_integral() {
        return Err(Error::InvalidInput("matrix has non-integer entries".into()));
    }
    if !m.is_nonsingular() {
        return Err(Error::Singular);
    }
    Ok(())
}

/// Ambient normal form `n_a(m) = U * m`.
///
/// Columns are swept left to right. Column `k` first gets a positive diagonal
/// by negating row `k`, then each row `i < k` absorbs a multiple of row `k`
/// that brings entry `(i, k)` into `(-m_kk, 0]`. Row operations with row `k`
/// only touch columns `>= k`, so finished columns stay put.
pub fn normalize_ambient(m: &TriMatrix) -> Result<AmbientNormalForm> {
    check_integral_nonsingular(m)?;
    let d = m.dim();
    let mut out = m.clone();
    for k in 0..d {
        if out.get(k, k).is_negative() {
            for j in k..d {
                let v = -out.get(k, j);
                out.set(k, j, v);
            }
        }
        let a = out.get(k, k).to_integer();
        for i in 0..k {
            let x = out.get(i, k).to_integer();
            let target = -((-&x).mod_floor(&a));
            let lambda = rat_int((target - x) / &a);
            if lambda.is_zero() {
                continue;
            }
            for j in k..d {
                let v = out.get(i, j) + &lambda * out.get(k, j);
                out.set(i, j, v);
            }
        }
    }
    Ok(AmbientNormalForm(out))
}

/// Sublattice normal form `n_s(m) = m * V`.
///
/// Column `k` gets a positive diagonal by negation, then rows `k-1` down to
/// `0` are reduced into `[0, r_ii)` by subtracting multiples of column `i`,
/// which only touches rows `<= i`.
pub fn normalize_sublattice(m: &TriMatrix) -> Result<SublatticeNormalForm> {
    check_integral_nonsingular(m)?;
    let d = m.dim();
    let mut out = m.clone();
    for k in 0..d {
        if out.get(k, k).is_negative() {
            for i in 0..=k {
                let v = -out.get(i, k);
                out.set(i, k, v);
            }
        }
        for i in (0..k).rev() {
            let r = out.get(i, i).to_integer();
            let x = out.get(i, k).to_integer();
            let lambda = rat_int((x.mod_floor(&r) - &x) / &r);
            if lambda.is_zero() {
                continue;
            }
            for row in 0..=i {
                let v = out.get(row, k) + &lambda * out.get(row, i);
                out.set(row, k, v);
            }
        }
    }
    Ok(SublatticeNormalForm(out))
}

/// Normal-form basis of `{c in Z^d : sum c_i a_i in Z}`.
///
/// Diagonal: `r_kk = l_k / l_{k-1}` with `l_k` the prefix lcm of the
/// denominators. Column `k` is then filled from row `k-1` upward: if
/// `r_jj = 1` the entry is `0`, otherwise
/// `r_jk = -(sum_{i=j+1..k} l_j a_i r_ik) * (l_j a_j)^{-1} mod r_jj`.
///
/// The partial sums are exact integers and the full congruences hold; both are
/// checked and reported as [`Error::Internal`] if they ever fail.
pub fn congruence_sublattice(a: &[Rational]) -> Result<SublatticeNormalForm> {
    let d = a.len();
    if d == 0 {
        return Err(Error::InvalidInput("empty vector".into()));
    }
    let l = lcm_prefix_denominators(a);
    let prev = |k: usize| if k == 0 { Integer::one() } else { l[k - 1].clone() };
    let diag: Vec<Integer> = (0..d).map(|k| &l[k] / prev(k)).collect();

    let mut r = TriMatrix::from_fn(d, |i, j| if i == j { rat_int(diag[i].clone()) } else { Rational::zero() });
    for k in 1..d {
        for j in (0..k).rev() {
            if diag[j].is_one() {
                continue;
            }
            let lj = rat_int(l[j].clone());
            let partial = ((j + 1)..=k)
                .fold(Rational::zero(), |acc, i| acc + &lj * &a[i] * r.get(i, k));
            if !partial.is_integer() {
                return Err(Error::Internal(format!(
                    "partial sum for r({}, {}) is not integral: {partial}",
                    j + 1,
                    k + 1
                )));
            }
            let lead = &lj * &a[j];
            debug_assert!(lead.is_integer());
            let inv = mod_inverse(&lead.to_integer(), &diag[j])?;
            let value = (-partial.to_integer() * inv).mod_floor(&diag[j]);
            r.set(j, k, rat_int(value.clone()));

            let full = partial + lead * rat_int(value);
            if !full.is_integer() || !full.to_integer().is_multiple_of(&diag[j]) {
                return Err(Error::Internal(format!(
                    "congruence for r({}, {}) fails: {full} mod {}",
                    j + 1,
                    k + 1,
                    diag[j]
                )));
            }
        }
    }
    Ok(SublatticeNormalForm(r))
}

/// Type matrix after passing from a lattice to its sublattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualType {
    /// `T = r^{-1}`.
    pub inverse: TriMatrix,
    /// `d_j = lcm(den(t_1j), ..., den(t_jj))`.
    pub column_scales: Vec<Integer>,
    /// `T` with column `j` multiplied by `d_j`.
    pub scaled: TriMatrix,
    pub type_matrix: AmbientNormalForm,
}

/// Full intermediate data of [`dual_primitive_type`].
pub fn dual_type(r: &SublatticeNormalForm) -> Result<DualType> {
    let inverse = r.inverse()?;
    let d = inverse.dim();
    let column_scales: Vec<Integer> = (0..d)
        .map(|j| {
            (0..=j).fold(Integer::one(), |acc, i| acc.lcm(inverse.get(i, j).denom()))
        })
        .collect();
    let scaled = TriMatrix::from_fn(d, |i, j| inverse.get(i, j) * rat_int(column_scales[j].clone()));
    let type_matrix = normalize_ambient(&scaled)?;
    Ok(DualType { inverse, column_scales, scaled, type_matrix })
}

/// Type matrix of the sublattice with basis matrix `r`, edges in the same order.
pub fn dual_primitive_type(r: &SublatticeNormalForm) -> Result<AmbientNormalForm> {
    dual_type(r).map(|t| t.type_matrix)
}
