//! Full trace of a three-dimensional germ with two characteristic exponents.
//!
//! ```text
//! cargo run --example worked_example
//! cargo run --example worked_example -- "1/2 1/3 1/3 ; 3/4 2/3 5/6"
//! ```

use hjtype::pipeline::{normalize_qo, validate_exponents, CharacteristicExponents};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "1/4 1/6 1/6 ; 3/8 5/12 7/12".into());
    let e = CharacteristicExponents::parse(&text, None)?;
    for w in validate_exponents(&e, false)?.warnings {
        println!("note: {w}");
    }

    let trace = normalize_qo(&e)?;
    for (k, step) in trace.steps.iter().enumerate() {
        let image: Vec<String> = step.exponent_image.iter().map(ToString::to_string).collect();
        println!("step {}: A R = ({})", k + 1, image.join(", "));
        println!("S =\n{}", step.relative);
        println!("N = {}", step.index);
        println!("R =\n{}\n", step.cumulative);
    }
    println!("T = R^-1 =\n{}", trace.final_inverse);
    let scales: Vec<String> = trace.column_scales.iter().map(ToString::to_string).collect();
    println!("column scales: ({})", scales.join(", "));
    println!("type matrix:\n{}", trace.type_matrix);
    if trace.is_smooth() {
        println!("the normalization is smooth");
    }
    Ok(())
}
