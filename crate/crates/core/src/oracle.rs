//! Brute-force checks that do not go through the normal-form algorithms.
//! They are slow and meant for tests and small inputs.

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::algebra::{rat_int, Integer, Rational, TriMatrix};
use crate::error::{Error, Result};
use crate::lattice::{normalize_ambient, AmbientNormalForm};

pub const DEFAULT_ENUMERATION_BOUND: u64 = 100_000;
pub const MAX_ISOMORPHISM_DIM: usize = 4;

/// Columns of `basis` span a full-rank sublattice of `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePresentation {
    basis: TriMatrix,
}

impl LatticePresentation {
    pub fn new(basis: TriMatrix) -> Result<Self> {
        if !basis.is_integral() {
            return Err(Error::InvalidInput("basis has non-integer entries".into()));
        }
        if !basis.is_nonsingular() {
            return Err(Error::Singular);
        }
        Ok(LatticePresentation { basis })
    }

    pub fn basis(&self) -> &TriMatrix {
        &self.basis
    }

    fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Subtracts column multiples from the bottom up, leaving each coordinate
    /// in `[0, |b_ii|)`.
    fn canonical(&self, c: &[Integer]) -> Vec<Integer> {
        let mut c = c.to_vec();
        for i in (0..self.dim()).rev() {
            let b = self.basis.get(i, i).to_integer();
            let rem = c[i].mod_floor(&b.abs());
            let times = (&c[i] - rem) / &b;
            subtract_column(&self.basis, i, &times, &mut c);
        }
        c
    }
}

fn subtract_column(b: &TriMatrix, j: usize, times: &Integer, c: &mut [Integer]) {
    if times.is_zero() {
        return;
    }
    for (i, ci) in c.iter_mut().enumerate().take(j + 1) {
        *ci -= b.get(i, j).to_integer() * times;
    }
}

/// `basis * x = c` has an integer solution.
pub fn is_member(p: &LatticePresentation, c: &[Integer]) -> Result<bool> {
    let d = p.dim();
    if c.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: c.len() });
    }
    let b = &p.basis;
    let mut x = vec![Rational::zero(); d];
    for i in (0..d).rev() {
        let s = ((i + 1)..d).fold(rat_int(c[i].clone()), |acc, j| acc - b.get(i, j) * &x[j]);
        x[i] = s / b.get(i, i);
        if !x[i].is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|Z^d / L|`, counted by walking the quotient with unit steps.
pub fn quotient_order(p: &LatticePresentation, bound: u64) -> Result<Integer> {
    let d = p.dim();
    let zero = vec![Integer::zero(); d];
    let mut seen: HashSet<Vec<Integer>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for i in 0..d {
            let mut y = x.clone();
            y[i] += 1;
            let y = p.canonical(&y);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > bound {
                    return Err(Error::EnumerationBound { order: format!(">{bound}"), bound });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(Integer::from(seen.len()))
}

fn is_unimodular_triangular(w: &TriMatrix) -> bool {
    w.is_integral() && (0..w.dim()).all(|i| w.get(i, i).abs().is_one())
}

/// `normal * original^{-1}` is integral with diagonal `+-1`.
pub fn check_ambient_witness(original: &TriMatrix, normal: &TriMatrix) -> bool {
    original
        .inverse()
        .and_then(|inv| normal.product(&inv))
        .is_ok_and(|u| is_unimodular_triangular(&u))
}

/// `original^{-1} * normal` is integral with diagonal `+-1`.
pub fn check_sublattice_witness(original: &TriMatrix, normal: &TriMatrix) -> bool {
    original
        .inverse()
        .and_then(|inv| inv.product(normal))
        .is_ok_and(|v| is_unimodular_triangular(&v))
}

/// Some reordering of the edges of `a` yields `b`.
///
/// For each permutation the edge vectors of `a` are listed in the new order,
/// brought back to triangular shape by unimodular row operations on the
/// ambient lattice, and put in ambient normal form.
pub fn pairs_isomorphic_small(a: &AmbientNormalForm, b: &AmbientNormalForm) -> Result<bool> {
    let d = a.dim();
    if d > MAX_ISOMORPHISM_DIM {
        return Err(Error::DimensionTooLarge(d));
    }
    if b.dim() != d {
        return Ok(false);
    }
    let rows = a.to_integer_rows().expect("type matrices are integral");
    for perm in (0..d).permutations(d) {
        let permuted: Vec<Vec<Integer>> = rows
            .iter()
            .map(|r| perm.iter().map(|&j| r[j].clone()).collect())
            .collect();
        let tri = TriMatrix::from_big_integers(&row_triangularize(permuted))?;
        if normalize_ambient(&tri)? == *b {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Left-multiplies by unimodular matrices until everything below the
/// diagonal is zero.
fn row_triangularize(mut m: Vec<Vec<Integer>>) -> Vec<Vec<Integer>> {
    let d = m.len();
    for c in 0..d {
        for r in (c + 1)..d {
            if m[r][c].is_zero() {
                continue;
            }
            let e = m[c][c].extended_gcd(&m[r][c]);
            let (p, q) = (&m[c][c] / &e.gcd, &m[r][c] / &e.gcd);
            let top: Vec<Integer> = (0..d).map(|j| &e.x * &m[c][j] + &e.y * &m[r][j]).collect();
            let bottom: Vec<Integer> = (0..d).map(|j| &p * &m[r][j] - &q * &m[c][j]).collect();
            m[c] = top;
            m[r] = bottom;
        }
    }
    m
}

/// Invariant factors as ratios of successive gcds of all `k x k` minors.
pub fn invariant_factors_by_minors(m: &[Vec<Integer>]) -> Vec<Integer> {
    let n = m.len();
    let mut prev = Integer::one();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut g = Integer::zero();
        for rows in (0..n).combinations(k) {
            for cols in (0..n).combinations(k) {
                g = g.gcd(&leibniz_det(m, &rows, &cols));
            }
        }
        if g.is_zero() {
            out.push(Integer::zero());
            continue;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn leibniz_det(m: &[Vec<Integer>], rows: &[usize], cols: &[usize]) -> Integer {
    let k = rows.len();
    (0..k)
        .permutations(k)
        .map(|p| {
            let inversions = (0..k).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
            let term: Integer = (0..k).map(|i| m[rows[i]][cols[p[i]]].clone()).product();
            if inversions % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}
