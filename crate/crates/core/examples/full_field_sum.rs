// `(E + E)·(y − x)` covers the whole field once `|E| > q`.
//
// `cargo run --example full_field_sum`

use pinned_dot::harness::sample_point_set;
use pinned_dot::{full_field_pinned_sum, make_field, sumset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (p, k) in [(7, 1), (2, 3), (3, 2)] {
        let f = make_field(p, k)?;
        let e = sample_point_set(&f, f.q() as u64 + 1, 3, 0)?;
        let sum = full_field_pinned_sum(&e)?;
        let s = &sum.witness.dot_values;
        println!(
            "GF({:>2}): x = {}, y = {}, |S| = {}, |S + S| = {}, |(E+E)·(y-x)| = {}",
            f.q(),
            sum.witness.x,
            sum.witness.y,
            s.len(),
            sumset(s, s)?.len(),
            sum.cover.len()
        );
        assert!(sum.cover.is_full());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
