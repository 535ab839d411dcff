//! Ambient and sublattice normal forms, checked against brute force.

use hjtype::algebra::{rat, TriMatrix};
use hjtype::lattice::{congruence_sublattice, dual_type, normalize_ambient, normalize_sublattice};
use hjtype::oracle::{
    check_ambient_witness, check_sublattice_witness, quotient_order, LatticePresentation, DEFAULT_ENUMERATION_BOUND,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = TriMatrix::from_integers(&[[-2, 5, 7], [0, 3, -4], [0, 0, 6]])?;
    println!("m =\n{m}\n");

    let a = normalize_ambient(&m)?;
    println!("n_a(m), row operations =\n{a}");
    println!("witness ok: {}\n", check_ambient_witness(&m, &a));

    let s = normalize_sublattice(&m)?;
    println!("n_s(m), column operations =\n{s}");
    println!("witness ok: {}\n", check_sublattice_witness(&m, &s));

    // {c in Z^3 : c_1/4 + c_2/6 + c_3/6 in Z}
    let r = congruence_sublattice(&[rat(1, 4), rat(1, 6), rat(1, 6)])?;
    println!("congruence sublattice =\n{r}");
    let order = quotient_order(&LatticePresentation::new(r.matrix().clone())?, DEFAULT_ENUMERATION_BOUND)?;
    println!("index {order}, det {}\n", r.determinant());

    let dual = dual_type(&r)?;
    println!("primitive edges in the sublattice =\n{}", dual.type_matrix);
    Ok(())
}
