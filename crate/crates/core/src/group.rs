//! The finite abelian group `W / W~` of a type matrix: its invariant
//! factors, and its characters on the edge decomposition.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{format_rational, rat_int, Integer, Rational, TriMatrix};
use crate::error::{Error, Result};
use crate::lattice::{normalize_ambient, AmbientNormalForm};

pub const DEFAULT_CHARACTER_BOUND: u64 = 1_000_000;

/// `d_1 | d_2 | ... | d_k`, unit factors kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors(Vec<Integer>);

impl InvariantFactors {
    pub fn new(factors: Vec<Integer>) -> Result<Self> {
        if factors.iter().any(|f| !f.is_positive()) {
            return Err(Error::InvalidInput("invariant factors must be positive".into()));
        }
        if factors.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidInput("invariant factors must form a divisibility chain".into()));
        }
        Ok(InvariantFactors(factors))
    }

    pub fn factors(&self) -> &[Integer] {
        &self.0
    }

    pub fn order(&self) -> Integer {
        self.0.iter().product()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Smith normal form diagonal of an integer nonsingular matrix, by exact
/// elimination.
pub fn invariant_factors(m: &TriMatrix) -> Result<InvariantFactors> {
    let rows = m
        .to_integer_rows()
        .ok_or_else(|| Error::InvalidInput("matrix has non-integer entries".into()))?;
    if !m.is_nonsingular() {
        return Err(Error::Singular);
    }
    InvariantFactors::new(smith_diagonal(rows))
}

#[allow(clippy::needless_range_loop)]
fn smith_diagonal(mut a: Vec<Vec<Integer>>) -> Vec<Integer> {
    let n = a.len();
    for t in 0..n {
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in (t + 1)..n {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in (t + 1)..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..n {
                        let v = &a[i][t] * &q;
                        a[i][j] -= v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let stray = ((t + 1)..n).find(|&i| ((t + 1)..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match stray {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    (0..n).map(|i| a[i][i].abs()).collect()
}

/// All factors but the last are 1.
pub fn is_cyclic(f: &InvariantFactors) -> bool {
    let k = f.0.len();
    f.0.iter().take(k.saturating_sub(1)).all(|x| x.is_one())
}

/// Elements of `W / W~` written in edge coordinates, each component in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSet {
    dim: usize,
    tuples: BTreeSet<Vec<Rational>>,
}

impl CharacterSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.tuples.iter()
    }

    /// Membership after reducing `t` modulo `Z^d`.
    pub fn contains(&self, t: &[Rational]) -> bool {
        self.tuples.contains(&reduce_mod_one(t))
    }

    /// No nonzero tuple has fewer than two non-integer components, i.e. the
    /// group contains no reflections.
    pub fn is_small(&self) -> bool {
        self.tuples.iter().all(|t| {
            let fractional = t.iter().filter(|x| !x.is_zero()).count();
            fractional == 0 || fractional >= 2
        })
    }

    /// Contains zero and is closed under addition mod 1.
    pub fn is_group(&self) -> bool {
        if !self.tuples.contains(&vec![Rational::zero(); self.dim]) {
            return false;
        }
        self.tuples.iter().all(|a| {
            self.tuples.iter().all(|b| {
                let sum: Vec<Rational> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                self.contains(&sum)
            })
        })
    }

    /// Rebuilds the type matrix from the lattice `Z^d + sum Z t`.
    ///
    /// That lattice is `W` in edge coordinates; a triangular basis `E` of it
    /// expresses the edge vectors as `E^{-1}`, whose ambient normal form is the
    /// type matrix again.
    pub fn type_matrix(&self) -> Result<AmbientNormalForm> {
        let denom = self
            .tuples
            .iter()
            .flatten()
            .fold(Integer::one(), |acc, x| acc.lcm(x.denom()));
        let scale = rat_int(denom.clone());
        let mut gens: Vec<Vec<Integer>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| if i == j { denom.clone() } else { Integer::zero() }).collect())
            .collect();
        gens.extend(
            self.tuples
                .iter()
                .map(|t| t.iter().map(|x| (x * &scale).to_integer()).collect()),
        );
        let basis = upper_triangular_basis(self.dim, gens)?;
        let e = TriMatrix::from_fn(self.dim, |i, j| rat_int(basis[j][i].clone()) / &scale);
        normalize_ambient(&e.inverse()?)
    }
}

impl fmt::Display for CharacterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.tuples.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = t.iter().map(format_rational).collect();
            write!(f, "({})", parts.join(", "))?;
        }
        Ok(())
    }
}

fn reduce_mod_one(t: &[Rational]) -> Vec<Rational> {
    t.iter().map(|x| x - x.floor()).collect()
}

/// Column-style triangularization of the lattice spanned by `gens` (each a
/// column in `Z^dim`). Returns `dim` columns, column `r` having its last
/// nonzero entry in row `r`.
fn upper_triangular_basis(dim: usize, mut gens: Vec<Vec<Integer>>) -> Result<Vec<Vec<Integer>>> {
    let mut basis: Vec<Option<Vec<Integer>>> = vec![None; dim];
    for r in (0..dim).rev() {
        let mut pivot: Option<Vec<Integer>> = None;
        let mut rest = Vec::with_capacity(gens.len());
        for mut g in gens.drain(..) {
            if g[r].is_zero() {
                rest.push(g);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(g),
                Some(mut p) => {
                    let e = p[r].extended_gcd(&g[r]);
                    let (a, b) = (&p[r] / &e.gcd, &g[r] / &e.gcd);
                    let new_p: Vec<Integer> = p.iter().zip(&g).map(|(x, y)| &e.x * x + &e.y * y).collect();
                    for (gi, pi) in g.iter_mut().zip(&p) {
                        *gi = &a * &*gi - &b * pi;
                    }
                    p = new_p;
                    rest.push(g);
                    pivot = Some(p);
                }
            }
        }
        gens = rest;
        basis[r] = Some(pivot.ok_or(Error::Singular)?);
    }
    Ok(basis.into_iter().map(|b| b.expect("filled")).collect())
}

/// Enumerates `W / W~` in edge coordinates: the residues `m^{-1} c mod Z^d`
/// for `c` in the box `prod [0, |m_ii|)`, which is a full residue system of
/// `Z^d / m Z^d` for triangular `m`.
pub fn quotient_characters(m: &TriMatrix, bound: u64) -> Result<CharacterSet> {
    if !m.is_integral() {
        return Err(Error::InvalidInput("matrix has non-integer entries".into()));
    }
    let inv = m.inverse()?;
    let order = m.determinant().abs().to_integer();
    if order.to_u64().is_none_or(|o| o > bound) {
        return Err(Error::EnumerationBound { order: order.to_string(), bound });
    }
    let d = m.dim();
    let sizes: Vec<u64> = (0..d)
        .map(|i| m.get(i, i).abs().to_integer().to_u64().expect("bounded by order"))
        .collect();
    let mut tuples = BTreeSet::new();
    let mut c = vec![0u64; d];
    loop {
        let col: Vec<Rational> = c.iter().map(|&x| rat_int(x.into())).collect();
        tuples.insert(reduce_mod_one(&inv.times_column(&col)?));
        let mut i = 0;
        loop {
            if i == d {
                return Ok(CharacterSet { dim: d, tuples });
            }
            c[i] += 1;
            if c[i] < sizes[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn m(rows: &[&[i64]]) -> TriMatrix {
        TriMatrix::from_integers(rows).unwrap()
    }

    fn factors(v: &[i64]) -> InvariantFactors {
        InvariantFactors::new(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn invariant_factor_examples() {
        assert_eq!(invariant_factors(&TriMatrix::identity(3)).unwrap(), factors(&[1, 1, 1]));
        assert_eq!(
            invariant_factors(&m(&[&[1, -1, -1], &[0, 2, -4], &[0, 0, 6]])).unwrap(),
            factors(&[1, 2, 6])
        );
        assert_eq!(
            invariant_factors(&m(&[&[1, -1, -7], &[0, 2, -16], &[0, 0, 24]])).unwrap(),
            factors(&[1, 2, 24])
        );
        assert_eq!(invariant_factors(&m(&[&[2, 0], &[0, 3]])).unwrap(), factors(&[1, 6]));
        assert_eq!(invariant_factors(&m(&[&[1, 1], &[0, 0]])), Err(Error::Singular));
    }

    #[test]
    fn cyclicity() {
        assert!(is_cyclic(&factors(&[1, 1, 12])));
        assert!(!is_cyclic(&factors(&[1, 2, 6])));
        assert!(!is_cyclic(&factors(&[1, 2, 24])));
        assert!(is_cyclic(&factors(&[7])));
    }

    #[test]
    fn factor_chain_validation() {
        assert!(InvariantFactors::new(vec![int(2), int(3)]).is_err());
        assert!(InvariantFactors::new(vec![int(0), int(3)]).is_err());
    }

    #[test]
    fn character_examples() {
        let id = quotient_characters(&TriMatrix::identity(3), DEFAULT_CHARACTER_BOUND).unwrap();
        assert_eq!(id.len(), 1);
        assert!(id.contains(&[rat(0, 1), rat(0, 1), rat(0, 1)]));

        let c = quotient_characters(&m(&[&[1, -2], &[0, 5]]), DEFAULT_CHARACTER_BOUND).unwrap();
        let expected: BTreeSet<Vec<Rational>> = [(0, 0), (2, 1), (4, 2), (1, 3), (3, 4)]
            .iter()
            .map(|&(a, b)| vec![rat(a, 5), rat(b, 5)])
            .collect();
        assert_eq!(c.tuples, expected);

        let c = quotient_characters(&m(&[&[1, -1], &[0, 2]]), DEFAULT_CHARACTER_BOUND).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&[rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn character_bound_enforced() {
        let r = quotient_characters(&m(&[&[1, 0], &[0, 100]]), 99);
        assert!(matches!(r, Err(Error::EnumerationBound { .. })));
    }

    #[test]
    fn smallness_detects_reflections() {
        // the second edge is not primitive: (0, 1/2) is a reflection
        let c = quotient_characters(&m(&[&[1, 0], &[0, 2]]), 10).unwrap();
        assert!(!c.is_small());
        let c = quotient_characters(&m(&[&[1, -1, -7], &[0, 2, -16], &[0, 0, 24]]), 1000).unwrap();
        assert_eq!(c.len(), 48);
        assert!(c.is_small() && c.is_group());
    }

    #[test]
    fn characters_rebuild_type() {
        for rows in [
            vec![vec![1, -1, -7], vec![0, 2, -16], vec![0, 0, 24]],
            vec![vec![1, -1, -1], vec![0, 2, -4], vec![0, 0, 6]],
            vec![vec![1, -2], vec![0, 5]],
        ] {
            let t = TriMatrix::from_integers(&rows).unwrap();
            let c = quotient_characters(&t, 1000).unwrap();
            assert_eq!(c.type_matrix().unwrap().matrix(), &t);
        }
    }
}
