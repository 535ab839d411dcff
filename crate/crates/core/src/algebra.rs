//! Exact integer and rational arithmetic, and upper-triangular matrices over
//! the rationals.
//!
//! Everything here is arbitrary precision. Lattice indices multiply from one
//! normalization step to the next, so no fixed-width integer type is safe.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// Canonical fraction: positive denominator, coprime parts, zero is `0/1`.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    reduce(int(num), int(den)).expect("rat: zero denominator")
}

pub fn rat_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

pub fn reduce(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Returns `x` with `0 < x < m` and `a * x = 1 (mod m)`.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Result<Integer> {
    if *m < int(2) {
        return Err(Error::InvalidModulus(m.to_string()));
    }
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(Error::NotInvertible {
            a: a.to_string(),
            m: m.to_string(),
        });
    }
    Ok(e.x.mod_floor(m))
}

/// `l_k = lcm(den(a_1), ..., den(a_k))` for every prefix.
pub fn lcm_prefix_denominators(a: &[Rational]) -> Vec<Integer> {
    let mut acc = Integer::one();
    a.iter()
        .map(|x| {
            acc = acc.lcm(x.denom());
            acc.clone()
        })
        .collect()
}

pub fn parse_rational(token: &str) -> Result<Rational> {
    let token = token.trim();
    let bad = || Error::Parse(format!("not a fraction: {token:?}"));
    match token.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().map_err(|_| bad())?;
            let d: Integer = d.trim().parse().map_err(|_| bad())?;
            reduce(n, d)
        }
        None => Ok(rat_int(token.parse().map_err(|_| bad())?)),
    }
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense upper-triangular `d x d` matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl TriMatrix {
    /// Builds from rows; every entry below the diagonal must be zero.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidInput("matrix dimension must be positive".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            for (j, x) in row.into_iter().enumerate() {
                if i > j && !x.is_zero() {
                    return Err(Error::InvalidInput(format!(
                        "entry ({}, {}) below the diagonal is nonzero",
                        i + 1,
                        j + 1
                    )));
                }
                entries.push(x);
            }
        }
        Ok(TriMatrix { dim, entries })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| rat_int(int(x))).collect())
                .collect(),
        )
    }

    pub fn from_big_integers(rows: &[Vec<Integer>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().cloned().map(rat_int).collect())
                .collect(),
        )
    }

    /// Entries strictly below the diagonal are never passed to `f`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(if i > j { Rational::zero() } else { f(i, j) });
            }
        }
        TriMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Rational) {
        debug_assert!(i <= j || v.is_zero());
        self.entries[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn is_nonsingular(&self) -> bool {
        (0..self.dim).all(|i| !self.get(i, i).is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Integer entries as rows, or `None` if some entry is fractional.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<Integer>>> {
        if !self.is_integral() {
            return None;
        }
        Some(
            (0..self.dim)
                .map(|i| self.row(i).iter().map(|x| x.to_integer()).collect())
                .collect(),
        )
    }

    pub fn determinant(&self) -> Rational {
        (0..self.dim).fold(Rational::one(), |acc, i| acc * self.get(i, i))
    }

    pub fn product(&self, rhs: &TriMatrix) -> Result<TriMatrix> {
        self.check_dim(rhs.dim)?;
        Ok(TriMatrix::from_fn(self.dim, |i, j| {
            (i..=j).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * rhs.get(k, j))
        }))
    }

    /// Exact inverse by back substitution, column by column.
    pub fn inverse(&self) -> Result<TriMatrix> {
        if !self.is_nonsingular() {
            return Err(Error::Singular);
        }
        let d = self.dim;
        let mut inv = TriMatrix::from_fn(d, |_, _| Rational::zero());
        for j in 0..d {
            inv.set(j, j, self.get(j, j).recip());
            for i in (0..j).rev() {
                let s = ((i + 1)..=j)
                    .fold(Rational::zero(), |acc, k| acc + self.get(i, k) * inv.get(k, j));
                inv.set(i, j, -s / self.get(i, i));
            }
        }
        Ok(inv)
    }

    /// Row vector times matrix.
    pub fn row_times(&self, a: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(a.len())?;
        Ok((0..self.dim)
            .map(|j| (0..=j).fold(Rational::zero(), |acc, i| acc + &a[i] * self.get(i, j)))
            .collect())
    }

    /// Matrix times column vector.
    pub fn times_column(&self, c: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(c.len())?;
        Ok((0..self.dim)
            .map(|i| (i..self.dim).fold(Rational::zero(), |acc, j| acc + self.get(i, j) * &c[j]))
            .collect())
    }

    /// Rows of entries formatted with [`format_rational`].
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got });
        }
        Ok(())
    }
}

impl fmt::Display for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_string_rows();
        let width = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriMatrix{:?}", self.to_string_rows())
    }
}
