//! Surfaces: `(n, q)` types, Hirzebruch-Jung strings and the scalar recursion.

use hjtype::pipeline::{normalize_qo, CharacteristicExponents};
use hjtype::surface::{
    hj_string_eval, normalize_2d_explicit, nq_equivalent, nq_to_hj_string, type_matrix_to_nq, HJString,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // One exponent (1/n, 1 - q/n) gives A_{n,q}.
    for (n, q) in [(5, 2), (7, 3), (12, 5)] {
        let e = CharacteristicExponents::from_fractions(&[&[(1, n), (n - q, n)]])?;
        let t = type_matrix_to_nq(&normalize_qo(&e)?.type_matrix)?;
        println!("{t}  string {}", nq_to_hj_string(&t)?);

        // Swapping coordinates gives an equivalent type, possibly with q^-1 mod n.
        let swapped = CharacteristicExponents::from_fractions(&[&[(n - q, n), (1, n)]])?;
        let s = type_matrix_to_nq(&normalize_qo(&swapped)?.type_matrix)?;
        println!("  swapped {s}  equivalent: {}", nq_equivalent(&t, &s));
    }

    let chain = HJString::from_i64(&[-2, -3, -2])?;
    println!("{chain} resolves {}", hj_string_eval(&chain));

    let e = CharacteristicExponents::parse("1/2 3/4 ; 5/6 13/12", None)?;
    let (t, steps) = normalize_2d_explicit(&e)?;
    for (k, s) in steps.iter().enumerate() {
        println!(
            "step {}: s = ({}, {}, {})  r = ({}, {}, {})",
            k + 1,
            s.s11,
            s.s12,
            s.s22,
            s.r11,
            s.r12,
            s.r22
        );
    }
    println!("{t}");
    assert_eq!(t, type_matrix_to_nq(&normalize_qo(&e)?.type_matrix)?);
    assert!(nq_equivalent(&t, &t));
    Ok(())
}
