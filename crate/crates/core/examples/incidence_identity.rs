// Line counts over GF(5): `Σ_ℓ |ℓ ∩ E|² = |E|² + q|E|` and the per-direction profile.
//
// `cargo run --example incidence_identity`

use pinned_dot::harness::sample_point_set;
use pinned_dot::incidence::expected_second_moment;
use pinned_dot::{first_moment, make_field, moment_profile, total_second_moment};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(5, 1)?;
    let q = f.q() as u64;
    for (trial, size) in [(0, 3), (1, 6), (2, 10)] {
        let e = sample_point_set(&f, size, 7, trial)?;
        let n = e.len() as u64;
        let total = total_second_moment(&e);
        println!(
            "|E| = {n:>2}: sum of squares {total:>3}, |E|^2 + q|E| = {:>3}, first moment {} = |E|(q+1)",
            expected_second_moment(n, q),
            first_moment(&e)
        );
        assert_eq!(total, n * n + q * n);
        assert_eq!(first_moment(&e), n * (q + 1));
    }

    let e = sample_point_set(&f, 6, 7, 1)?;
    let profile = moment_profile(&e);
    for (theta, m) in &profile.per_direction {
        println!("  direction {theta:>3}: {m}");
    }
    println!("profile as JSON: {}", serde_json::to_string(&profile)?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
