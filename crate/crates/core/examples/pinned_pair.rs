// Finding a pinned pair in a random set of `q + 1` points over GF(13).
//
// `cargo run --example pinned_pair`

use pinned_dot::harness::sample_point_set;
use pinned_dot::pinned::threshold;
use pinned_dot::{best_direction, make_field, pinned_pair, verify_imp};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(13, 1)?;
    let q = f.q();
    let e = sample_point_set(&f, q as u64 + 1, 1, 0)?;

    let imp = verify_imp(&e);
    println!("E - E determines all {} directions: {}", q + 1, imp.all_determined);

    let (theta, moment) = best_direction(&e)?;
    println!("least directional moment {moment} at direction {theta}");

    let w = pinned_pair(&e)?;
    println!(
        "x = {}, y = {}: |E·(y-x)| = {} (needs at least {})",
        w.x,
        w.y,
        w.dot_count,
        threshold(q)
    );
    let n = e.len() as u64;
    assert!(n * n <= w.moment * w.dot_count as u64);
    println!("{}", serde_json::to_string_pretty(&w)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
