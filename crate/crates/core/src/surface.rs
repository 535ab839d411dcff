//! Surfaces: `A_{n,q}` types, Hirzebruch-Jung continued fractions, and the
//! explicit two-dimensional normalization recursion.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::algebra::{int, lcm_prefix_denominators, mod_inverse, rat_int, Integer, Rational, TriMatrix};
use crate::error::{Error, Result};
use crate::lattice::{dual_primitive_type, AmbientNormalForm, SublatticeNormalForm};
use crate::pipeline::CharacteristicExponents;

/// `(n, q)` with `0 < q < n` coprime, or `(1, 0)` for a smooth point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NQType {
    n: Integer,
    q: Integer,
}

impl NQType {
    pub fn new(n: impl Into<Integer>, q: impl Into<Integer>) -> Result<Self> {
        let (n, q) = (n.into(), q.into());
        let smooth = n.is_one() && q.is_zero();
        let singular = n > int(1) && q.is_positive() && q < n && n.gcd(&q).is_one();
        if !(smooth || singular) {
            return Err(Error::InvalidInput(format!("({n}, {q}) is not a valid (n, q) type")));
        }
        Ok(NQType { n, q })
    }

    pub fn smooth() -> Self {
        NQType { n: Integer::one(), q: Integer::zero() }
    }

    pub fn n(&self) -> &Integer {
        &self.n
    }

    pub fn q(&self) -> &Integer {
        &self.q
    }

    pub fn is_smooth(&self) -> bool {
        self.n.is_one()
    }
}

impl fmt::Display for NQType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n,q) = ({},{})", self.n, self.q)
    }
}

/// Self-intersections `p_1, ..., p_r`, all `<= -2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HJString(Vec<Integer>);

impl HJString {
    pub fn new(p: Vec<Integer>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidInput("empty Hirzebruch-Jung string".into()));
        }
        if let Some(x) = p.iter().find(|x| **x > int(-2)) {
            return Err(Error::InvalidInput(format!("self-intersection {x} is not <= -2")));
        }
        Ok(HJString(p))
    }

    pub fn from_i64(p: &[i64]) -> Result<Self> {
        Self::new(p.iter().map(|&x| int(x)).collect())
    }

    pub fn self_intersections(&self) -> &[Integer] {
        &self.0
    }
}

impl fmt::Display for HJString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Reads `q = -m_12`, `n = m_22` from `[[1, -q], [0, n]]`.
pub fn type_matrix_to_nq(m: &AmbientNormalForm) -> Result<NQType> {
    if m.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: m.dim() });
    }
    if !m.get(0, 0).is_one() {
        return Err(Error::NotPrimitiveEdge(m.get(0, 0).to_string()));
    }
    let n = m.get(1, 1).to_integer();
    let q = -m.get(0, 1).to_integer();
    if n.is_one() {
        return Ok(NQType::smooth());
    }
    NQType::new(n, q)
}

pub fn nq_to_type_matrix(t: &NQType) -> AmbientNormalForm {
    let m = TriMatrix::from_big_integers(&[
        vec![Integer::one(), -t.q.clone()],
        vec![Integer::zero(), t.n.clone()],
    ])
    .expect("2x2 upper-triangular");
    AmbientNormalForm::from_matrix(m).expect("valid (n, q) gives a normal form")
}

/// `n/q = |p_1| - 1/(|p_2| - 1/(... - 1/|p_r|))`.
pub fn hj_string_eval(s: &HJString) -> NQType {
    let mut rev = s.0.iter().rev();
    let last = rat_int(rev.next().expect("nonempty").abs());
    let value = rev.fold(last, |acc, p| rat_int(p.abs()) - acc.recip());
    NQType::new(value.numer().clone(), value.denom().clone()).expect("partial values exceed 1")
}

/// Inverse of [`hj_string_eval`]: `p_1 = -ceil(n/q)`, then recurse on
/// `q / (ceil(n/q) q - n)`.
pub fn nq_to_hj_string(t: &NQType) -> Result<HJString> {
    if t.is_smooth() {
        return Err(Error::NoString);
    }
    let (mut n, mut q) = (t.n.clone(), t.q.clone());
    let mut out = Vec::new();
    while !q.is_zero() {
        let a = n.div_ceil(&q);
        let rem = &a * &q - &n;
        out.push(-a);
        n = q;
        q = rem;
    }
    HJString::new(out)
}

/// Same analytic type: `n = n'` and `q = q'` or `q q' = 1 (mod n)`.
pub fn nq_equivalent(a: &NQType, b: &NQType) -> bool {
    if a.n != b.n {
        return false;
    }
    if a.q == b.q {
        return true;
    }
    (&a.q * &b.q).mod_floor(&a.n).is_one()
}

/// Entries of `S^k` and `R^k` for one step of the surface recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceStep {
    pub s11: Integer,
    pub s12: Integer,
    pub s22: Integer,
    pub r11: Integer,
    pub r12: Integer,
    pub r22: Integer,
}

impl SurfaceStep {
    pub fn relative(&self) -> TriMatrix {
        tri2(&self.s11, &self.s12, &self.s22)
    }

    pub fn cumulative(&self) -> TriMatrix {
        tri2(&self.r11, &self.r12, &self.r22)
    }
}

fn tri2(a: &Integer, b: &Integer, c: &Integer) -> TriMatrix {
    TriMatrix::from_big_integers(&[vec![a.clone(), b.clone()], vec![Integer::zero(), c.clone()]])
        .expect("2x2 upper-triangular")
}

/// Scalar recursion for `d = 2`. With `b1 = A^1 r11`, `b2 = A^1 r12 + A^2 r22`
/// (previous step's `r`):
///
/// ```text
/// s11 = den(b1)
/// s22 = lcm(den b1, den b2) / den(b1)
/// s12 = 0 if s11 = 1, else -(den(b1) b2 s22) num(b1)^{-1} mod s11
/// r11 = s11 r11,  r22 = s22 r22,  r12 = (r11 s12 + r12 s22) mod r11
/// ```
///
/// The type is then read off the dual primitive type of the final `r`.
pub fn normalize_2d_explicit(e: &CharacteristicExponents) -> Result<(NQType, Vec<SurfaceStep>)> {
    if e.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: e.dim() });
    }
    crate::pipeline::validate_exponents(e, false)?;

    let (mut r11, mut r12, mut r22) = (Integer::one(), Integer::zero(), Integer::one());
    let mut steps = Vec::with_capacity(e.len());
    for a in e.vectors() {
        let b1 = &a[0] * rat_int(r11.clone());
        let b2 = &a[0] * rat_int(r12.clone()) + &a[1] * rat_int(r22.clone());
        let l = lcm_prefix_denominators(&[b1.clone(), b2.clone()]);
        let s11 = b1.denom().clone();
        let s22 = &l[1] / &s11;
        let s12 = if s11.is_one() {
            Integer::zero()
        } else {
            let partial: Rational = rat_int(s11.clone()) * &b2 * rat_int(s22.clone());
            if !partial.is_integer() {
                return Err(Error::Internal(format!("non-integral partial sum {partial}")));
            }
            let inv = mod_inverse(b1.numer(), &s11)?;
            (-partial.to_integer() * inv).mod_floor(&s11)
        };
        let next11 = &s11 * &r11;
        let next22 = &s22 * &r22;
        let next12 = (&r11 * &s12 + &r12 * &s22).mod_floor(&next11);
        (r11, r12, r22) = (next11, next12, next22);
        steps.push(SurfaceStep {
            s11,
            s12,
            s22,
            r11: r11.clone(),
            r12: r12.clone(),
            r22: r22.clone(),
        });
    }
    let r = SublatticeNormalForm::from_matrix(tri2(&r11, &r12, &r22))?;
    let t = type_matrix_to_nq(&dual_primitive_type(&r)?)?;
    Ok((t, steps))
}
