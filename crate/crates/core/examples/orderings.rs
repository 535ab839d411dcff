//! The type matrix depends on the order of the cone's edges. This lists all
//! orderings and checks they describe the same singularity.

use hjtype::group::invariant_factors;
use hjtype::oracle::pairs_isomorphic_small;
use hjtype::pipeline::{all_orderings, is_normalized, CharacteristicExponents};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = CharacteristicExponents::parse("1/4 1/6 1/6 ; 3/8 5/12 7/12", None)?;
    let all = all_orderings(&e)?;
    for o in &all {
        let normalized = is_normalized(&e.permuted(&o.permutation)?);
        println!(
            "ordering {:?}{}: invariant factors {}",
            o.permutation,
            if normalized { " (normalized)" } else { "" },
            invariant_factors(&o.type_matrix)?
        );
        println!("{}", o.type_matrix);
    }
    let first = &all[0].type_matrix;
    let same = all.iter().map(|o| pairs_isomorphic_small(first, &o.type_matrix)).collect::<Result<Vec<_>, _>>()?;
    println!("all isomorphic to the first: {}", same.iter().all(|&b| b));
    Ok(())
}
