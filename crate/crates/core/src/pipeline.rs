//! From characteristic exponents to the type matrix of the normalization.
//!
//! With `R^0 = I`, each exponent `A_k` contributes one step:
//!
//! ```text
//! S^k = congruence_sublattice(A_k R^{k-1})
//! R^k = n_s(R^{k-1} S^k)
//! N_k = det S^k
//! ```
//!
//! and the type matrix is the dual primitive type of `R^G`. Columns of `S^k`
//! are the new basis in coordinates of the basis of step `k - 1`, so the
//! composite change of basis multiplies `R^{k-1}` on the right.

use std::cmp::Ordering;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::algebra::{format_rational, parse_rational, Integer, Rational, TriMatrix};
use crate::error::{Error, Result};
use crate::lattice::{
    congruence_sublattice, dual_type, normalize_sublattice, AmbientNormalForm, SublatticeNormalForm,
};

/// `A_1 < ... < A_G`, each a vector of `dim` positive rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicExponents {
    dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl CharacteristicExponents {
    /// Checks only the shape. Ordering and positivity are checked by
    /// [`validate_exponents`].
    pub fn new(dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
        }
        Ok(CharacteristicExponents { dim, vectors })
    }

    pub fn from_fractions(rows: &[&[(i64, i64)]]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        let vectors = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(n, d)| crate::algebra::reduce(n.into(), d.into()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, vectors)
    }

    /// Parses `"1/4 1/6 1/6 ; 3/8 5/12 7/12"`: whitespace-separated tokens,
    /// vectors separated by `;` or newlines. The dimension is inferred from
    /// the first vector when `dim` is `None`.
    pub fn parse(text: &str, dim: Option<usize>) -> Result<Self> {
        let vectors = text
            .split([';', '\n'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.split_whitespace().map(parse_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let dim = match (dim, vectors.first()) {
            (Some(d), _) => d,
            (None, Some(v)) => v.len(),
            (None, None) => {
                return Err(Error::InvalidInput(
                    "dimension is required when no exponents are given".into(),
                ))
            }
        };
        Self::new(dim, vectors)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    /// Reorders coordinates: coordinate `i` of the result is coordinate
    /// `perm[i]` of `self`, in every vector.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.dim];
        if perm.len() != self.dim || !perm.iter().all(|&p| p < self.dim && !std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidInput(format!("{perm:?} is not a permutation of 0..{}", self.dim)));
        }
        let vectors = self
            .vectors
            .iter()
            .map(|v| perm.iter().map(|&p| v[p].clone()).collect())
            .collect();
        Ok(CharacteristicExponents { dim: self.dim, vectors })
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(format_rational).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Lexicographic normalization holds; only a canonical-ordering concern.
    pub normalized: bool,
    /// 1-based steps with `N_k = 1`.
    pub trivial_steps: Vec<usize>,
    pub warnings: Vec<String>,
}

/// Checks positivity and strict componentwise increase (errors), then the
/// lexicographic normalization condition and trivial steps (warnings). Under
/// `strict`, a step with `N_k = 1` is an error.
pub fn validate_exponents(e: &CharacteristicExponents, strict: bool) -> Result<ValidationReport> {
    check_order(e)?;
    let mut warnings = Vec::new();
    let normalized = is_normalized(e);
    if !normalized {
        warnings.push(
            "exponents are not normalized: coordinate sequences are not lexicographically \
             non-increasing, or A_1 fails the second-coordinate condition"
                .to_string(),
        );
    }
    let trace = run(e)?;
    let trivial_steps = trace.trivial_steps();
    if !trivial_steps.is_empty() {
        let msg = format!("steps with index N_k = 1 (exponent adds nothing): {trivial_steps:?}");
        if strict {
            return Err(Error::InvalidExponents(msg));
        }
        warnings.push(msg);
    }
    Ok(ValidationReport { normalized, trivial_steps, warnings })
}

fn check_order(e: &CharacteristicExponents) -> Result<()> {
    let mut problems = Vec::new();
    for (k, v) in e.vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            if !x.is_positive() {
                problems.push(format!("A_{}^{} = {} is not positive", k + 1, i + 1, format_rational(x)));
            }
        }
    }
    for (k, (prev, next)) in e.vectors.iter().tuple_windows().enumerate() {
        for i in 0..e.dim {
            if next[i] <= prev[i] {
                problems.push(format!(
                    "A_{}^{} = {} does not exceed A_{}^{} = {}",
                    k + 2,
                    i + 1,
                    format_rational(&next[i]),
                    k + 1,
                    i + 1,
                    format_rational(&prev[i])
                ));
            }
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidExponents(problems.join("; ")))
    }
}

/// Coordinate sequences `(A_1^i, ..., A_G^i)` are lexicographically
/// non-increasing in `i`, and `A_1^2 != 0` or `A_1^1 > 1`.
pub fn is_normalized(e: &CharacteristicExponents) -> bool {
    let Some(first) = e.vectors.first() else {
        return true;
    };
    let column = |i: usize| e.vectors.iter().map(move |v| &v[i]);
    let lex_ok = (1..e.dim).all(|i| column(i - 1).cmp(column(i)) != Ordering::Less);
    let second_ok = e.dim < 2 || !first[1].is_zero() || first[0] > Rational::one();
    lex_ok && second_ok
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// `A_k R^{k-1}`.
    pub exponent_image: Vec<Rational>,
    /// `S^k`.
    pub relative: SublatticeNormalForm,
    /// `R^{k-1} S^k` before normalization.
    pub product: TriMatrix,
    /// `R^k`.
    pub cumulative: SublatticeNormalForm,
    /// `N_k = det S^k`.
    pub index: Integer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationTrace {
    pub steps: Vec<Step>,
    /// `T^G = (R^G)^{-1}`.
    pub final_inverse: TriMatrix,
    /// `d_j^G`.
    pub column_scales: Vec<Integer>,
    /// `(d_j^G t_ij^G)`, the input to the final ambient normalization.
    pub scaled_inverse: TriMatrix,
    pub type_matrix: AmbientNormalForm,
}

impl NormalizationTrace {
    pub fn dim(&self) -> usize {
        self.type_matrix.dim()
    }

    /// `R^G`, or the identity when there are no exponents.
    pub fn final_sublattice(&self) -> SublatticeNormalForm {
        self.steps
            .last()
            .map(|s| s.cumulative.clone())
            .unwrap_or_else(|| SublatticeNormalForm::identity(self.dim()))
    }

    pub fn indices(&self) -> Vec<Integer> {
        self.steps.iter().map(|s| s.index.clone()).collect()
    }

    pub fn trivial_steps(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| s.index.is_one())
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// The normalized germ is smooth.
    pub fn is_smooth(&self) -> bool {
        self.type_matrix.is_identity()
    }
}

/// Runs the normalization; the exponents must be positive and strictly
/// increasing.
pub fn normalize_qo(e: &CharacteristicExponents) -> Result<NormalizationTrace> {
    check_order(e)?;
    run(e)
}

fn run(e: &CharacteristicExponents) -> Result<NormalizationTrace> {
    let mut r = SublatticeNormalForm::identity(e.dim);
    let mut steps = Vec::with_capacity(e.len());
    for a in &e.vectors {
        let exponent_image = r.row_times(a)?;
        let s = congruence_sublattice(&exponent_image)?;
        let product = r.product(&s)?;
        let next = normalize_sublattice(&product)?;
        let index = s.determinant().to_integer();
        steps.push(Step { exponent_image, relative: s, product, cumulative: next.clone(), index });
        r = next;
    }
    let dual = dual_type(&r)?;
    Ok(NormalizationTrace {
        steps,
        final_inverse: dual.inverse,
        column_scales: dual.column_scales,
        scaled_inverse: dual.scaled,
        type_matrix: dual.type_matrix,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingType {
    /// Coordinate `i` of the permuted input is coordinate `permutation[i]`.
    pub permutation: Vec<usize>,
    pub type_matrix: AmbientNormalForm,
}

pub const MAX_ORDERING_DIM: usize = 8;

/// Type matrices for every coordinate ordering, identity permutation first.
pub fn all_orderings(e: &CharacteristicExponents) -> Result<Vec<OrderingType>> {
    if e.dim > MAX_ORDERING_DIM {
        return Err(Error::DimensionTooLarge(e.dim));
    }
    check_order(e)?;
    (0..e.dim)
        .permutations(e.dim)
        .map(|perm| {
            let t = run(&e.permuted(&perm)?)?;
            Ok(OrderingType { permutation: perm, type_matrix: t.type_matrix })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn m(rows: &[&[i64]]) -> TriMatrix {
        TriMatrix::from_integers(rows).unwrap()
    }

    fn worked() -> CharacteristicExponents {
        CharacteristicExponents::from_fractions(&[&[(1, 4), (1, 6), (1, 6)], &[(3, 8), (5, 12), (7, 12)]]).unwrap()
    }

    #[test]
    fn validation_examples() {
        let r = validate_exponents(&worked(), false).unwrap();
        assert!(r.trivial_steps.is_empty());
        assert!(!r.normalized, "coordinates 2 and 3 are lexicographically increasing");

        let bad = CharacteristicExponents::from_fractions(&[&[(1, 2), (1, 2)], &[(1, 3), (2, 3)]]).unwrap();
        match validate_exponents(&bad, false) {
            Err(Error::InvalidExponents(msg)) => assert!(msg.contains("A_2^1"), "{msg}"),
            other => panic!("{other:?}"),
        }

        let empty = CharacteristicExponents::new(3, vec![]).unwrap();
        let r = validate_exponents(&empty, true).unwrap();
        assert!(r.normalized && r.warnings.is_empty());
    }

    #[test]
    fn nonpositive_rejected() {
        let e = CharacteristicExponents::from_fractions(&[&[(1, 2), (0, 1)]]).unwrap();
        assert!(matches!(normalize_qo(&e), Err(Error::InvalidExponents(_))));
    }

    #[test]
    fn strict_rejects_trivial_steps() {
        // the second exponent is integral relative to the first lattice
        let e = CharacteristicExponents::from_fractions(&[&[(1, 2), (1, 2)], &[(3, 2), (3, 2)]]).unwrap();
        let r = validate_exponents(&e, false).unwrap();
        assert_eq!(r.trivial_steps, vec![2]);
        assert!(matches!(validate_exponents(&e, true), Err(Error::InvalidExponents(_))));
    }

    #[test]
    fn worked_example_trace() {
        let t = normalize_qo(&worked()).unwrap();
        assert_eq!(t.indices(), vec![int(12), int(6)]);
        assert_eq!(t.steps[0].relative.matrix(), &m(&[&[4, 2, 2], &[0, 3, 2], &[0, 0, 1]]));
        assert_eq!(t.steps[1].exponent_image, vec![rat(3, 2), rat(2, 1), rat(13, 6)]);
        assert_eq!(t.steps[1].relative.matrix(), &m(&[&[2, 0, 1], &[0, 1, 0], &[0, 0, 3]]));
        assert_eq!(t.steps[1].product, m(&[&[8, 2, 10], &[0, 3, 6], &[0, 0, 3]]));
        assert_eq!(t.steps[1].cumulative.matrix(), &m(&[&[8, 2, 6], &[0, 3, 0], &[0, 0, 3]]));
        assert_eq!(t.column_scales, vec![int(8), int(12), int(12)]);
        assert_eq!(t.type_matrix.matrix(), &m(&[&[1, -1, -3], &[0, 4, 0], &[0, 0, 4]]));
    }

    #[test]
    fn small_cases() {
        let e = CharacteristicExponents::from_fractions(&[&[(1, 5), (3, 5)]]).unwrap();
        assert_eq!(normalize_qo(&e).unwrap().type_matrix.matrix(), &m(&[&[1, -2], &[0, 5]]));

        let e = CharacteristicExponents::new(3, vec![]).unwrap();
        let t = normalize_qo(&e).unwrap();
        assert!(t.is_smooth() && t.steps.is_empty());

        let e = CharacteristicExponents::from_fractions(&[&[(1, 3)], &[(1, 2)]]).unwrap();
        assert!(normalize_qo(&e).unwrap().is_smooth());
    }

    #[test]
    fn parse_grammar() {
        let e = CharacteristicExponents::parse("1/4 1/6 1/6 ; 3/8 5/12 7/12", None).unwrap();
        assert_eq!(e, worked());
        let e2 = CharacteristicExponents::parse("1/4 1/6 1/6\n3/8 5/12 7/12\n", Some(3)).unwrap();
        assert_eq!(e2, worked());
        assert!(matches!(
            CharacteristicExponents::parse("1/4 1/6 ; 1/2", None),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(CharacteristicExponents::parse("", None).is_err());
        assert_eq!(CharacteristicExponents::parse("  ", Some(2)).unwrap().len(), 0);
        assert!(matches!(CharacteristicExponents::parse("1/x", None), Err(Error::Parse(_))));
    }

    #[test]
    fn orderings_share_determinant() {
        let all = all_orderings(&worked()).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].permutation, vec![0, 1, 2]);
        for o in &all {
            assert_eq!(o.type_matrix.determinant(), rat(16, 1));
        }
    }

    #[test]
    fn permutation_must_be_valid() {
        assert!(worked().permuted(&[0, 0, 1]).is_err());
        assert!(worked().permuted(&[0, 1]).is_err());
    }
}
