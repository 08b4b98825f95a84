// Eight copies of `AA` cover `F_q` for symmetric `A` with `|A| > √q`.
//
// `cargo run --example glibichuk`

use pinned_dot::harness::{sample_symmetric_set, symmetric_corpus};
use pinned_dot::sumsets::glibichuk_report;
use pinned_dot::{glibichuk_check, make_field, ScalarSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f9 = make_field(3, 2)?;
    let all = symmetric_corpus(&f9, 4, 10_000, 0, 0)?;
    println!("GF(9): {} symmetric sets of size 4", all.len());
    for a in &all {
        let codes: Vec<u32> = a.iter().map(|x| x.code()).collect();
        println!("  A = {codes:?}: {:?}", glibichuk_report(a)?);
        assert!(glibichuk_check(a)?);
    }

    let f49 = make_field(7, 2)?;
    let a: ScalarSet = sample_symmetric_set(&f49, 8, 5, 0)?;
    println!("GF(49), sampled A of size 8: passed = {}", glibichuk_check(&a)?);

    let small = sample_symmetric_set(&f49, 6, 5, 0)?;
    println!("|A| = 6 is not above √49: {}", glibichuk_check(&small).unwrap_err());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
