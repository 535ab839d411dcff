//! Machine-readable output: build a report in-process and print it as JSON.

use hjtype::cli::{build_report, from_structured, to_structured, to_text, Emit, JobSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let emit = vec![Emit::Type, Emit::Nq, Emit::HjString, Emit::Invariants];
    let job = JobSpec { emit: emit.clone(), ..JobSpec::new("1/3 1/2 ; 5/6 7/6") };
    let report = build_report(&job)?;

    let json = to_structured(&report);
    print!("{json}");
    assert_eq!(from_structured(&json)?, report);

    print!("\n{}", to_text(&report, &emit));
    Ok(())
}
