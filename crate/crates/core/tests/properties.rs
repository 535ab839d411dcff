use hjtype::algebra::{rat, rat_int, Integer, Rational};
use hjtype::group::{invariant_factors, quotient_characters, DEFAULT_CHARACTER_BOUND};
use hjtype::lattice::{AmbientNormalForm, SublatticeNormalForm};
use hjtype::oracle::{is_member, quotient_order, LatticePresentation, DEFAULT_ENUMERATION_BOUND};
use hjtype::pipeline::{normalize_qo, CharacteristicExponents};
use num_integer::Integer as _;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn exponents(dim: usize) -> impl Strategy<Value = CharacteristicExponents> {
    let step = (1i64..=8).prop_flat_map(|den| (1..=den).prop_map(move |num| rat(num, den)));
    prop::collection::vec(prop::collection::vec(step, dim), 1..=3).prop_map(move |steps| {
        let mut current = vec![Rational::zero(); dim];
        let vectors = steps
            .into_iter()
            .map(|inc| {
                for (x, y) in current.iter_mut().zip(inc) {
                    *x += y;
                }
                current.clone()
            })
            .collect();
        CharacteristicExponents::new(dim, vectors).unwrap()
    })
}

fn pairing(c: &[Rational], a: &[Rational]) -> Rational {
    c.iter().zip(a).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn indices_accumulate(e in (1usize..=4).prop_flat_map(exponents)) {
        let t = normalize_qo(&e).unwrap();
        let mut product = Integer::one();
        let mut previous = Integer::zero();
        for s in &t.steps {
            product *= &s.index;
            prop_assert_eq!(s.cumulative.determinant(), rat_int(product.clone()));
            prop_assert!(s.cumulative.determinant().to_integer() >= previous);
            previous = s.cumulative.determinant().to_integer();
        }
    }

    #[test]
    fn steps_are_normal_forms(e in (1usize..=4).prop_flat_map(exponents)) {
        let t = normalize_qo(&e).unwrap();
        for s in &t.steps {
            prop_assert!(SublatticeNormalForm::from_matrix(s.relative.matrix().clone()).is_ok());
            prop_assert!(SublatticeNormalForm::from_matrix(s.cumulative.matrix().clone()).is_ok());
        }
        prop_assert!(AmbientNormalForm::from_matrix(t.type_matrix.matrix().clone()).is_ok());
    }

    #[test]
    fn type_determinant_from_scales(e in (1usize..=4).prop_flat_map(exponents)) {
        let t = normalize_qo(&e).unwrap();
        let scales: Integer = t.column_scales.iter().product();
        let expected = rat_int(scales) / t.final_sublattice().determinant();
        prop_assert_eq!(t.type_matrix.determinant(), expected);
    }

    #[test]
    fn final_lattice_is_cut_out_by_exponents(e in (1usize..=3).prop_flat_map(exponents)) {
        let t = normalize_qo(&e).unwrap();
        let r = t.final_sublattice().into_matrix();
        for j in 0..e.dim() {
            for a in e.vectors() {
                prop_assert!(pairing(&r.column(j), a).is_integer());
            }
        }
        // the multiple of each axis vector that pairs integrally is in the lattice
        let p = LatticePresentation::new(r.clone()).unwrap();
        for i in 0..e.dim() {
            let m = e.vectors().iter().fold(Integer::one(), |acc, a| acc.lcm(a[i].denom()));
            let mut c = vec![Integer::zero(); e.dim()];
            c[i] = m;
            prop_assert!(is_member(&p, &c).unwrap());
        }
        let order = quotient_order(&p, DEFAULT_ENUMERATION_BOUND).unwrap();
        prop_assert_eq!(rat_int(order), r.determinant());
    }

    #[test]
    fn characters_rebuild_the_type(e in (1usize..=3).prop_flat_map(exponents)) {
        let t = normalize_qo(&e).unwrap();
        let chars = quotient_characters(t.type_matrix.matrix(), DEFAULT_CHARACTER_BOUND).unwrap();
        prop_assert!(chars.is_group());
        prop_assert!(chars.is_small());
        prop_assert_eq!(chars.type_matrix().unwrap(), t.type_matrix.clone());
        let f = invariant_factors(t.type_matrix.matrix()).unwrap();
        prop_assert_eq!(rat_int(f.order()), t.type_matrix.determinant());
    }
}
