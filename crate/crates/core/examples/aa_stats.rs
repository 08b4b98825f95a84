// `|AA + AA|` for random sets and for multiplicative subgroups of GF(61).
//
// `cargo run --example aa_stats`

use pinned_dot::harness::sample_scalar_set;
use pinned_dot::{aa_plus_aa_stats, make_field, mult_subgroup};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(61, 1)?;
    println!("{:>6} {:>8} {:>10} {:>9}", "|A|", "|AA+AA|", "min(q,n³/q)", "subgroup");
    for m in [4, 5, 6, 10, 12, 15, 20, 30] {
        let s = aa_plus_aa_stats(&mult_subgroup(&f, m)?)?;
        assert!(s.subgroup);
        println!("{:>6} {:>8} {:>10} {:>9}", s.size, s.card_aa_aa, s.hi_bound, s.subgroup);
    }
    for (t, n) in [4u64, 6, 8, 12].into_iter().enumerate() {
        let s = aa_plus_aa_stats(&sample_scalar_set(&f, n, 9, t as u64)?)?;
        println!("{:>6} {:>8} {:>10} {:>9}", s.size, s.card_aa_aa, s.hi_bound, s.subgroup);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
