//! The local fundamental group of a type matrix: invariant factors and the
//! character tuples of its action.

use hjtype::algebra::TriMatrix;
use hjtype::group::{invariant_factors, is_cyclic, quotient_characters, DEFAULT_CHARACTER_BOUND};
use hjtype::oracle::invariant_factors_by_minors;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for rows in [[[1, -1, -1], [0, 2, -4], [0, 0, 6]], [[1, -1, -3], [0, 4, 0], [0, 0, 4]]] {
        let t = TriMatrix::from_integers(&rows)?;
        let f = invariant_factors(&t)?;
        let by_minors = invariant_factors_by_minors(&t.to_integer_rows().expect("integral"));
        println!("{t}");
        println!("invariant factors {f} (minors: {by_minors:?}), cyclic: {}", is_cyclic(&f));

        let chars = quotient_characters(&t, DEFAULT_CHARACTER_BOUND)?;
        println!("{} characters, small: {}", chars.len(), chars.is_small());
        for tuple in chars.iter().take(4) {
            let parts: Vec<String> = tuple.iter().map(ToString::to_string).collect();
            println!("  ({})", parts.join(", "));
        }
        println!("rebuilt from characters:\n{}\n", chars.type_matrix()?);
    }
    Ok(())
}
